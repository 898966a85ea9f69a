#ifndef SCHURTAU_SYMFUN_HPP
#define SCHURTAU_SYMFUN_HPP

#include <Eigen/Dense>

#include "schurtau/paramseq.hpp"
#include "schurtau/partition.hpp"

namespace schurtau {

// (h_0, ..., h_N) with sum_n h_n z^n = gamma(z, t) = exp(sum_k t_k z^k).
// Computed by the recurrence n h_n = sum_{k=1}^n k t_k h_{n-k}.
Eigen::VectorXcd h_coeffs(const ParamSeq& t, int N);

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}), i,j = 1..N with
// N = length(lambda) (the value does not depend on N beyond that).
// The overloads taking a precomputed h vector treat indices past the
// end as an error, so callers must size h generously.
Complex schur_value(const Partition& lam, const ParamSeq& t);
Complex schur_value(const Partition& lam, const Eigen::VectorXcd& h,
                    int rows = -1);

// det(h_{lambda_i - i - mu_j + j}); zero when mu is not contained in
// lambda (the determinant vanishes there anyway).
Complex skew_schur_value(const Partition& lam, const Partition& mu,
                         const ParamSeq& t);
Complex skew_schur_value(const Partition& lam, const Partition& mu,
                         const Eigen::VectorXcd& h, int rows = -1);

}  // namespace schurtau

#endif
