#ifndef SCHURTAU_KERNEL_HPP
#define SCHURTAU_KERNEL_HPP

#include <Eigen/Dense>

#include "schurtau/series.hpp"
#include "schurtau/sigma.hpp"

namespace schurtau {

inline constexpr int kDefaultCutoff = 48;
inline constexpr int kDefaultDim = 24;

// Precomputed J windows for one parameter pair: jpos holds J_.(t,t'),
// jneg holds J_.(-t,-t').  Also caches |J| with the decay-model
// extension and the sigma values needed by the truncation bounds.
struct KernelContext {
  LaurentWindow jpos, jneg;
  SigmaWeight sigma;
  int jrange = 0;   // coefficients trusted on [-jrange, jrange]
  int brange = 0;   // |J| bounds tabulated on [-brange, brange]
  std::vector<double> abs_pos, abs_neg;  // index m + brange
  int tk_lo = 0, tk_hi = 0;              // sigma tabulated on odd tk in range
  std::vector<double> sig_abs;           // index (tk - tk_lo)/2
  double sig_tail_lo = 0.0;              // sum of |sigma| below tk_lo
  double sig_cap = 1.0;                  // sup |sigma| above tk_hi

  static KernelContext make(const SeriesSpec& t, const SeriesSpec& tp,
                            const SigmaWeight& sigma, int jrange);

  double sig_abs_at(int tk) const;
  double abs_pos_at(int m) const;
  double abs_neg_at(int m) const;
  // D+(x) = sum_k |sigma(k)| |J_{x+k}|^2 and the mirrored D-(y); the
  // Cauchy-Schwarz bound |K(x,y)| <= sqrt(D+(x) D-(y)) drives every
  // trace-norm estimate.
  double d_plus(HalfInt x) const;
  double d_minus(HalfInt y) const;
};

struct KernelEntry {
  Complex value;
  double residual;  // bound on the dropped |k| > cutoff part of the sum
};

// K(x,y) = sum_{k in Z'} sigma(k) J_{x+k}(t,t') J_{-y-k}(-t,-t'),
// truncated to |k| < cutoff.
KernelEntry kernel_entry(const KernelContext& ctx, HalfInt x, HalfInt y,
                         int cutoff);

struct KernelMatrix {
  int n = 0;  // sites are x_i = n + i + 1/2, i = 0..M-1
  Eigen::MatrixXcd entries;
  double tail_bound = 0.0;      // trace-norm bound on the discarded corner
  double entry_residual = 0.0;  // summed kernel_entry residuals
  double hs_win = 0.0;          // trace-norm bound for the built block
  double hs_full = 0.0;         // same for the untruncated operator

  int dim() const { return static_cast<int>(entries.rows()); }
  HalfInt site(int i) const { return HalfInt(2 * n + 2 * i + 1); }
};

KernelMatrix kernel_matrix(const KernelContext& ctx, int n, int M, int cutoff);

// One-shot conveniences.
KernelEntry kernel_entry(const ParamSeq& t, const ParamSeq& tp,
                         const SigmaWeight& sigma, HalfInt x, HalfInt y,
                         int cutoff = kDefaultCutoff);
KernelMatrix kernel_matrix(const ParamSeq& t, const ParamSeq& tp,
                           const SigmaWeight& sigma, int n,
                           int M = kDefaultDim, int cutoff = kDefaultCutoff);

}  // namespace schurtau

#endif
