#include "schurtau/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace schurtau {

SeriesSpec SeriesSpec::negated() const {
  SeriesSpec s;
  s.base = -base;
  s.shifts = shifts;
  for (auto& sh : s.shifts) sh.sign = -sh.sign;
  return s;
}

SeriesSpec SeriesSpec::shifted(Complex z0, int sign) const {
  SeriesSpec s = *this;
  if (z0 != Complex(0.0)) s.shifts.push_back({z0, sign});
  return s;
}

double SeriesSpec::shift_radius() const {
  double r = 0.0;
  for (auto& sh : shifts) r = std::max(r, std::abs(sh.z0));
  return r;
}

Eigen::VectorXcd apply_miwa_shift(const Eigen::VectorXcd& h, Complex z0,
                                  int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("apply_miwa_shift: sign must be +-1");
  Eigen::VectorXcd out(h.size());
  if (sign == 1) {
    // divide by (1 - z0 w): out_n = h_n + z0 out_{n-1}
    if (std::abs(z0) >= 1.0)
      throw AnnulusError("apply_miwa_shift: |z0| >= 1 leaves the annulus");
    Complex prev(0.0);
    for (int n = 0; n < h.size(); ++n) {
      out[n] = h[n] + z0 * prev;
      prev = out[n];
    }
  } else {
    out[0] = h[0];
    for (int n = 1; n < h.size(); ++n) out[n] = h[n] - z0 * h[n - 1];
  }
  return out;
}

Eigen::VectorXcd gamma_coeffs(const SeriesSpec& spec, int len) {
  Eigen::VectorXcd h = h_coeffs(spec.base, len);
  for (const auto& sh : spec.shifts) h = apply_miwa_shift(h, sh.z0, sh.sign);
  return h;
}

double LaurentWindow::bound_abs(int k) const {
  if (k >= -N && k <= N) return std::abs(coeffs[k + N]);
  const double lg = std::log(std::max(decay_C, 1e-300)) +
                    std::abs(static_cast<double>(k)) * std::log(decay_r);
  return lg < -700.0 ? 0.0 : std::exp(std::min(lg, 300.0));
}

double LaurentWindow::tail_sum_above(int kmin) const {
  const double r = std::min(std::max(decay_r, 1e-12), 0.999);
  const double lg = std::log(std::max(decay_C, 1e-300)) +
                    (kmin + 1) * std::log(r) - std::log1p(-r);
  return lg < -700.0 ? 0.0 : std::exp(std::min(lg, 300.0));
}

LaurentWindow j_coeffs(const SeriesSpec& t, const SeriesSpec& tp, int N,
                       int cap) {
  if (N < 1) throw std::invalid_argument("j_coeffs: N must be positive");
  if (N > cap) throw SizeLimitError("j_coeffs: window exceeds cap");
  const int m_inner = N + kJInnerMargin;
  const int len = N + m_inner;
  const Eigen::VectorXcd a = gamma_coeffs(t, len);
  const Eigen::VectorXcd b = gamma_coeffs(tp.negated(), len);

  LaurentWindow w;
  w.N = N;
  w.coeffs = Eigen::VectorXcd::Zero(2 * N + 1);
  for (int k = -N; k <= N; ++k) {
    Complex acc(0.0);
    for (int m = std::max(0, -k); m <= m_inner; ++m) acc += a[k + m] * b[m];
    w.coeffs[k + N] = acc;
  }

  // dropped inner terms: m > m_inner; both factor tails are geometric
  // with ratio <= max(base decay, shift radius)
  double sa = 0.0, sb = 0.0, ta = 0.0, tb = 0.0;
  for (int m = 0; m <= len; ++m) {
    sa += std::abs(a[m]);
    sb += std::abs(b[m]);
  }
  for (int m = len - 7; m <= len; ++m) {
    ta = std::max(ta, std::abs(a[m]));
    tb = std::max(tb, std::abs(b[m]));
  }
  const double rr =
      std::min(0.95, std::max(t.shift_radius(), tp.shift_radius()) + 0.05);
  w.tail_err = (sa * tb + sb * ta) / (1.0 - rr);

  fit_decay(w);
  return w;
}

LaurentWindow unit_window(int N) {
  LaurentWindow w;
  w.N = N;
  w.coeffs = Eigen::VectorXcd::Zero(2 * N + 1);
  w.coeffs[N] = Complex(1.0);
  fit_decay(w);
  return w;
}

LaurentWindow multiply(const LaurentWindow& a, const LaurentWindow& b) {
  LaurentWindow w;
  w.N = std::min(a.N, b.N);
  w.coeffs = Eigen::VectorXcd::Zero(2 * w.N + 1);
  double dropped = 0.0;
  for (int i = -a.N; i <= a.N; ++i)
    for (int j = -b.N; j <= b.N; ++j) {
      const Complex p = a.coeffs[i + a.N] * b.coeffs[j + b.N];
      const int k = i + j;
      if (k >= -w.N && k <= w.N)
        w.coeffs[k + w.N] += p;
      else
        dropped += std::abs(p);
    }
  double sa = a.coeffs.cwiseAbs().sum(), sb = b.coeffs.cwiseAbs().sum();
  w.tail_err = dropped + a.tail_err * sb + b.tail_err * sa;
  fit_decay(w);
  return w;
}

void fit_decay(LaurentWindow& w) {
  // least squares of log|J_k| against |k| on the outer third, then C is
  // raised so that C r^{|k|} dominates every stored coefficient
  std::vector<std::pair<double, double>> pts;
  const int k0 = std::max(1, w.N - std::max(2, w.N / 3));
  for (int k = -w.N; k <= w.N; ++k) {
    if (std::abs(k) < k0) continue;
    const double m = std::abs(w.coeffs[k + w.N]);
    if (m > 1e-250) pts.emplace_back(std::abs(k), std::log(m));
  }
  double logr = std::log(0.3);
  if (pts.size() >= 3) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double den = n * sxx - sx * sx;
    if (den > 1e-12) logr = (n * sxy - sx * sy) / den;
  }
  logr = std::min(logr, std::log(0.999));
  logr = std::max(logr, std::log(1e-8));
  double logC = -1e30;
  for (int k = -w.N; k <= w.N; ++k) {
    const double m = std::abs(w.coeffs[k + w.N]);
    if (m > 0.0) logC = std::max(logC, std::log(m) - std::abs(k) * logr);
  }
  if (logC < -1e29) {
    w.decay_C = 0.0;
    w.decay_r = 0.3;
    return;
  }
  w.decay_r = std::exp(logr);
  w.decay_C = std::exp(std::min(logC, 300.0));
}

Complex coeff_extract_dft(const std::function<Complex(Complex)>& f, int k,
                          double rho, int P) {
  if (P < 4 * (std::abs(k) + 1))
    throw std::invalid_argument("coeff_extract_dft: too few sample points");
  std::vector<Complex> samples(P);
  for (int j = 0; j < P; ++j) {
    const double th = 2.0 * std::numbers::pi * j / P;
    samples[j] = f(rho * Complex(std::cos(th), std::sin(th)));
  }
  return coeff_from_samples(samples, k, rho);
}

Complex coeff_from_samples(const std::vector<Complex>& samples, int k,
                           double rho) {
  const int P = static_cast<int>(samples.size());
  Complex acc(0.0);
  for (int j = 0; j < P; ++j) {
    const double th = -2.0 * std::numbers::pi * j * k / P;
    acc += samples[j] * Complex(std::cos(th), std::sin(th));
  }
  return acc * std::pow(rho, -k) / static_cast<double>(P);
}

}  // namespace schurtau
