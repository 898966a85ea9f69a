#ifndef SCHURTAU_SERIES_HPP
#define SCHURTAU_SERIES_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "schurtau/paramseq.hpp"
#include "schurtau/symfun.hpp"

namespace schurtau {

// A Miwa displacement t -> t + sign * {z0}, {z0} = (z0, z0^2/2, z0^3/3, ...).
// At the level of gamma-series it multiplies by (1 - z0 w)^{-sign}.
struct MiwaShift {
  Complex z0;
  int sign;  // +1 or -1
};

// A parameter sequence together with pending Miwa shifts.  The shifted
// sequence is never materialized; gamma_coeffs applies the shifts as
// series factors.
struct SeriesSpec {
  ParamSeq base;
  std::vector<MiwaShift> shifts;

  SeriesSpec() = default;
  SeriesSpec(ParamSeq b) : base(std::move(b)) {}  // NOLINT(implicit)
  SeriesSpec(ParamSeq b, std::vector<MiwaShift> s)
      : base(std::move(b)), shifts(std::move(s)) {}

  SeriesSpec negated() const;
  SeriesSpec shifted(Complex z0, int sign) const;
  double shift_radius() const;  // max |z0| over shifts, 0 if none
};

// Multiply a power-series coefficient vector by (1 - z0 w)^{-sign}.
// sign = +1 divides by (1 - z0 w) (needs |z0| < 1), sign = -1 multiplies.
Eigen::VectorXcd apply_miwa_shift(const Eigen::VectorXcd& h, Complex z0,
                                  int sign);

// Power-series coefficients of gamma(w, spec) up to w^len.
Eigen::VectorXcd gamma_coeffs(const SeriesSpec& spec, int len);

// Coefficients J_k for k in [-N, N] with decay metadata |J_k| <= C r^{|k|}.
struct LaurentWindow {
  int N = 0;
  Eigen::VectorXcd coeffs;  // index k + N
  double decay_C = 0.0;
  double decay_r = 0.5;
  double tail_err = 0.0;  // reported bound on truncated inner sums

  Complex at(int k) const {
    return (k >= -N && k <= N) ? coeffs[k + N] : Complex(0.0);
  }
  // |J_k| if stored, else the decay-model bound C r^{|k|}.
  double bound_abs(int k) const;
  // sum_{k > kmin} C r^k (geometric tail of the decay model)
  double tail_sum_above(int kmin) const;
};

inline constexpr int kJWindowDefault = 64;
inline constexpr int kJInnerMargin = 96;

LaurentWindow j_coeffs(const SeriesSpec& t, const SeriesSpec& tp, int N,
                       int cap = 4096);
LaurentWindow unit_window(int N);
LaurentWindow multiply(const LaurentWindow& a, const LaurentWindow& b);

// Least-squares fit of (C, r) on the outer third of the window; values
// are never altered, the fit only feeds error reporting.
void fit_decay(LaurentWindow& w);

// (1/P) sum_j f(rho w^j) rho^{-k} w^{-jk},  w = exp(2 pi i / P).
Complex coeff_extract_dft(const std::function<Complex(Complex)>& f, int k,
                          double rho, int P);

// Same extraction from precomputed samples f(rho w^j), j = 0..P-1.
Complex coeff_from_samples(const std::vector<Complex>& samples, int k,
                           double rho);

}  // namespace schurtau

#endif
