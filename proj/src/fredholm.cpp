#include "schurtau/fredholm.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>

namespace schurtau {

namespace {

std::string paramseq_str(const ParamSeq& t) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [n, v] : t.entries()) {
    if (!first) os << ",";
    os << n << ":" << v.real();
    if (v.imag() != 0.0) os << "+" << v.imag() << "i";
    first = false;
  }
  os << "}";
  return os.str();
}

std::string spec_str(const SeriesSpec& s) {
  std::ostringstream os;
  os << paramseq_str(s.base);
  for (auto& sh : s.shifts)
    os << (sh.sign > 0 ? "+" : "-") << "{" << sh.z0.real() << ","
       << sh.z0.imag() << "}";
  return os.str();
}

void check_sigma(const SigmaWeight& sigma, bool allow_nonstandard) {
  if (!sigma.in_unit_interval() && !allow_nonstandard)
    throw std::invalid_argument(
        "tau: sigma outside [0,1]; pass allow_nonstandard to override");
}

double det_perturbation_factor(double hs_win, double hs_full) {
  // |det(1-A) - det(1-B)| <= |A-B|_1 exp(|A|_1 + |B|_1 + 1)
  const double arg = std::min(hs_win + hs_full + 1.0, 500.0);
  return std::exp(arg);
}

}  // namespace

Complex z_norm(const SeriesSpec& t, const SeriesSpec& tp) {
  Complex lg = Complex(0.0);
  for (auto& [n, v] : t.base.entries())
    lg += static_cast<double>(n) * v * tp.base.value(n);
  for (auto& sh : t.shifts)
    lg += static_cast<double>(sh.sign) *
          std::log(gamma_eval(sh.z0, tp.base)) /* finite sum, principal */;
  for (auto& sh : tp.shifts)
    lg += static_cast<double>(sh.sign) * std::log(gamma_eval(sh.z0, t.base));
  for (auto& a : t.shifts)
    for (auto& b : tp.shifts) {
      const Complex zw = a.z0 * b.z0;
      if (std::abs(zw) >= 1.0)
        throw AnnulusError("z_norm: paired shifts leave the annulus");
      lg -= static_cast<double>(a.sign * b.sign) * std::log(1.0 - zw);
    }
  return std::exp(lg);
}

Complex det_one_minus(const Eigen::MatrixXcd& K) {
  const Eigen::MatrixXcd A =
      Eigen::MatrixXcd::Identity(K.rows(), K.cols()) - K;
  const Complex d = A.partialPivLu().determinant();
  if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
    throw NumericError("det_one_minus: determinant is not finite");
  return d;
}

TauValue tau_n(const SeriesSpec& t, const SeriesSpec& tp,
               const SigmaWeight& sigma, int n, int M, int cutoff,
               bool allow_nonstandard) {
  check_sigma(sigma, allow_nonstandard);
  const Complex Z = z_norm(t, tp);
  const int jrange = std::abs(n) + M + cutoff + 70;
  const KernelContext ctx = KernelContext::make(t, tp, sigma, jrange);
  const KernelMatrix km = kernel_matrix(ctx, n, M, cutoff);
  const Complex det = det_one_minus(km.entries);

  TauValue tv;
  tv.value = Z * det;
  const double delta = km.tail_bound + km.entry_residual;
  tv.truncation_bound =
      std::abs(Z) * delta * det_perturbation_factor(km.hs_win, km.hs_full);
  tv.params = {spec_str(t), spec_str(tp), sigma.describe(), n, M, cutoff};
  return tv;
}

TauValue tau_n(const ParamSeq& t, const ParamSeq& tp, const SigmaWeight& sigma,
               int n, int M, int cutoff, bool allow_nonstandard) {
  return tau_n(SeriesSpec(t), SeriesSpec(tp), sigma, n, M, cutoff,
               allow_nonstandard);
}

TauValue tau_conjugated(const ParamSeq& t, const ParamSeq& tp,
                        const SigmaWeight& sigma, int n, int M, int cutoff,
                        bool allow_nonstandard) {
  check_sigma(sigma, allow_nonstandard);
  const Complex Z = z_norm(t, tp);

  // window on Z' where sigma(x - n) is non-negligible
  int lo_t, hi_t;  // doubled endpoints
  if (sigma.finitely_supported()) {
    if (sigma.is_zero()) {
      TauValue tv;
      tv.value = Z;
      tv.truncation_bound = 0.0;
      tv.params = {paramseq_str(t), paramseq_str(tp), sigma.describe(), n, M,
                   cutoff};
      return tv;
    }
    lo_t = sigma.support_min_twice() + 2 * n;
    hi_t = sigma.support_max_twice() + 2 * n;
  } else {
    lo_t = 2 * n - 2 * M - 1;
    hi_t = 2 * n + 2 * M - 1;
  }
  const int dim = (hi_t - lo_t) / 2 + 1;

  const int span = std::max(std::abs(lo_t), std::abs(hi_t)) / 2 + 1;
  const int jmax = cutoff;  // inner j sum over positive half-integers
  const int jrange = span + jmax + 70;
  const SeriesSpec st(t), stp(tp);
  const LaurentWindow jp = j_coeffs(st, stp, jrange);
  const LaurentWindow jm = j_coeffs(st.negated(), stp.negated(), jrange);

  Eigen::MatrixXcd B(dim, dim);
  double entry_res = 0.0;
  for (int a = 0; a < dim; ++a) {
    const int tx = lo_t + 2 * a;
    const double sx = sigma(HalfInt(tx - 2 * n));
    for (int b = 0; b < dim; ++b) {
      const int ty = lo_t + 2 * b;
      Complex acc(0.0);
      // j = 1/2, 3/2, ...: J_{-j-x}(-t,-t') J_{j+y}(t,t')
      for (int tj = 1; tj <= 2 * jmax - 1; tj += 2)
        acc += jm.at((-tj - tx) / 2) * jp.at((tj + ty) / 2);
      B(a, b) = sx * acc;
      entry_res += std::abs(sx) * jm.tail_sum_above((jmax * 2 + tx) / 2) *
                   std::max(1.0, jp.decay_C);
    }
  }
  const Complex det = det_one_minus(B);

  TauValue tv;
  tv.value = Z * det;
  // window-drop bound: rows outside carry sigma(x-n) tails times a
  // uniform bound on the inner operator
  double op_bound = 0.0;
  for (int tj = 1; tj <= 2 * jmax - 1; tj += 2)
    op_bound += jm.bound_abs((-tj - hi_t) / 2 + jmax) * 1.0;  // coarse
  op_bound = std::max(1.0, op_bound);
  double drop = 0.0;
  if (!sigma.finitely_supported()) {
    drop += sigma.negative_tail_sum(lo_t - 2 * n - 2) * op_bound;
    drop += jp.tail_sum_above((hi_t - 1) / 2) * op_bound;
  }
  const double hs = B.cwiseAbs().sum();  // small windows; entrywise l1
  tv.truncation_bound = std::abs(Z) * (entry_res + drop) *
                        det_perturbation_factor(std::min(hs, 30.0),
                                                std::min(hs, 30.0) + drop);
  tv.params = {paramseq_str(t), paramseq_str(tp), sigma.describe(), n, M,
               cutoff};
  return tv;
}

double gap_probability(const ParamSeq& t, const ParamSeq& tp, int n, int M,
                       int cutoff) {
  if (!t.is_real() || !tp.is_real())
    throw std::invalid_argument("gap_probability: parameters must be real");
  const TauValue tv =
      tau_n(t, tp, SigmaWeight::indicator_positive(), n, M, cutoff);
  const Complex Z = z_norm(t, tp);
  return (tv.value / Z).real();
}

}  // namespace schurtau
