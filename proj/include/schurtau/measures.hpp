#ifndef SCHURTAU_MEASURES_HPP
#define SCHURTAU_MEASURES_HPP

#include <vector>

#include "schurtau/sigma.hpp"
#include "schurtau/symfun.hpp"

namespace schurtau {

// Enumeration-backed probabilities.  Everything here is deliberately
// independent of the kernel/determinant pipeline: sums over partitions
// in the fixed (size, lex) order, Jacobi-Trudi values only.

struct MeasureTable {
  std::vector<std::pair<Partition, Complex>> entries;  // enumeration order
  Complex mass;                                        // sum of weights
  int max_size = 0;
};

// P_{t,t'}(lambda) = Z^{-1} s_lambda(t) s_lambda(t')
Complex schur_weight(const Partition& lam, const ParamSeq& t,
                     const ParamSeq& tp);

MeasureTable schur_table(const ParamSeq& t, const ParamSeq& tp, int max_size);

// sum over |lambda| <= N of weights with X inside S_0(lambda)
Complex correlation_bruteforce(const std::vector<HalfInt>& X,
                               const ParamSeq& t, const ParamSeq& tp, int N);

// E[prod_{x in S_0(lambda)} (1 - sigma(x - n))]; exact for finitely
// supported sigma, depth-truncated rows otherwise.
Complex mult_stat_expectation(const SigmaWeight& sigma, int n,
                              const ParamSeq& t, const ParamSeq& tp, int N,
                              int depth = 64);

// w(lambda) = sum_{mu in lambda} u^{|mu|} s_{lambda/mu}(t) s_{lambda/mu}(t'),
// the unnormalized finite-temperature weight (real parameters).
double finite_temp_weight(const Partition& lam, double u, const ParamSeq& t,
                          const ParamSeq& tp);

double finite_temp_normalization(double u, const ParamSeq& t,
                                 const ParamSeq& tp, int max_size);

// P(c = n) = u^{n^2/2} / theta_3(1,u), tail below 1e-16
double theta_shift_pmf(double u, int c);

// mixed shift measure: sum_c pmf(c) P_u(X in S_c(lambda)) at enumeration
// cutoff N and |c| <= cmax
double finite_temp_correlation_bruteforce(const std::vector<HalfInt>& X,
                                          double u, const ParamSeq& tt,
                                          const ParamSeq& ttp, int N,
                                          int cmax);

}  // namespace schurtau

#endif
