#include "schurtau/measures.hpp"

#include <cmath>
#include <functional>

namespace schurtau {

namespace {

// h table long enough for every Jacobi-Trudi determinant at |lambda| <= N
Eigen::VectorXcd h_table(const ParamSeq& t, int N) {
  return h_coeffs(t, 2 * N + 2);
}

bool config_has_all(const Partition& lam, int n,
                    const std::vector<HalfInt>& X) {
  for (const HalfInt& x : X)
    if (!config_contains(lam, n, x)) return false;
  return true;
}

// all mu inside lambda, visited depth-first with rows weakly decreasing
void for_each_subdiagram(const Partition& lam,
                         const std::function<void(const Partition&)>& fn) {
  if (lam.length() == 0) {
    fn(Partition());
    return;
  }
  std::vector<int> mu(lam.length(), 0);
  std::function<void(int, int)> rec = [&](int row, int prev) {
    if (row == lam.length()) {
      std::vector<int> parts;
      for (int p : mu)
        if (p > 0) parts.push_back(p);
      fn(Partition(std::move(parts)));
      return;
    }
    const int hi = std::min(prev, lam.part(row + 1));
    for (int v = 0; v <= hi; ++v) {
      mu[row] = v;
      rec(row + 1, v);  // prev = 0 pins every deeper row to zero
    }
    mu[row] = 0;
  };
  rec(0, lam.part(1));
}

}  // namespace

Complex schur_weight(const Partition& lam, const ParamSeq& t,
                     const ParamSeq& tp) {
  return schur_value(lam, t) * schur_value(lam, tp) / z_norm(t, tp);
}

MeasureTable schur_table(const ParamSeq& t, const ParamSeq& tp, int max_size) {
  MeasureTable tab;
  tab.max_size = max_size;
  const Eigen::VectorXcd ht = h_table(t, max_size);
  const Eigen::VectorXcd htp = h_table(tp, max_size);
  const Complex Z = z_norm(t, tp);
  Complex mass(0.0);
  for (const Partition& lam : enumerate_partitions(max_size)) {
    const Complex w = schur_value(lam, ht) * schur_value(lam, htp) / Z;
    mass += w;
    tab.entries.emplace_back(lam, w);
  }
  tab.mass = mass;
  return tab;
}

Complex correlation_bruteforce(const std::vector<HalfInt>& X,
                               const ParamSeq& t, const ParamSeq& tp, int N) {
  if (X.size() > 4)
    throw std::invalid_argument("correlation_bruteforce: |X| <= 4");
  const Eigen::VectorXcd ht = h_table(t, N);
  const Eigen::VectorXcd htp = h_table(tp, N);
  const Complex Z = z_norm(t, tp);
  Complex acc(0.0);
  for (const Partition& lam : enumerate_partitions(N))
    if (config_has_all(lam, 0, X))
      acc += schur_value(lam, ht) * schur_value(lam, htp) / Z;
  return acc;
}

Complex mult_stat_expectation(const SigmaWeight& sigma, int n,
                              const ParamSeq& t, const ParamSeq& tp, int N,
                              int depth) {
  if (!sigma.finitely_supported() && depth <= 0)
    throw std::invalid_argument(
        "mult_stat_expectation: infinite sigma support needs a depth");
  const Eigen::VectorXcd ht = h_table(t, N);
  const Eigen::VectorXcd htp = h_table(tp, N);
  const Complex Z = z_norm(t, tp);
  Complex acc(0.0);
  for (const Partition& lam : enumerate_partitions(N)) {
    double prod = 1.0;
    if (sigma.finitely_supported()) {
      // only support points can contribute factors != 1
      for (auto& [tk, v] : sigma.table_values())
        if (config_contains(lam, 0, HalfInt(tk + 2 * n))) prod *= 1.0 - v;
    } else {
      const int d = std::max(depth, lam.length());
      for (const HalfInt& x : point_config(lam, 0, d))
        prod *= 1.0 - sigma(x - n);
    }
    if (prod == 0.0) continue;
    acc += prod * schur_value(lam, ht) * schur_value(lam, htp) / Z;
  }
  return acc;
}

double finite_temp_weight(const Partition& lam, double u, const ParamSeq& t,
                          const ParamSeq& tp) {
  if (!t.is_real() || !tp.is_real())
    throw std::invalid_argument("finite_temp_weight: real parameters only");
  const Eigen::VectorXcd ht = h_table(t, lam.size() + 1);
  const Eigen::VectorXcd htp = h_table(tp, lam.size() + 1);
  double acc = 0.0;
  for_each_subdiagram(lam, [&](const Partition& mu) {
    const double skew =
        (skew_schur_value(lam, mu, ht) * skew_schur_value(lam, mu, htp))
            .real();
    acc += std::pow(u, mu.size()) * skew;
  });
  return acc;
}

double finite_temp_normalization(double u, const ParamSeq& t,
                                 const ParamSeq& tp, int max_size) {
  double z = 0.0;
  for (const Partition& lam : enumerate_partitions(max_size))
    z += finite_temp_weight(lam, u, t, tp);
  return z;
}

double theta_shift_pmf(double u, int c) {
  if (!(u > 0.0 && u < 1.0))
    throw std::invalid_argument("theta_shift_pmf: u in (0,1)");
  double theta = 1.0;
  for (int m = 1; m < 4096; ++m) {
    const double term = 2.0 * std::pow(u, 0.5 * m * m);
    theta += term;
    if (term < 1e-16 * theta) break;
  }
  return std::pow(u, 0.5 * c * c) / theta;
}

double finite_temp_correlation_bruteforce(const std::vector<HalfInt>& X,
                                          double u, const ParamSeq& tt,
                                          const ParamSeq& ttp, int N,
                                          int cmax) {
  if (X.size() > 3)
    throw std::invalid_argument("finite_temp_correlation_bruteforce: |X| <= 3");
  if (u == 0.0)
    return correlation_bruteforce(X, tt, ttp, N).real();
  const std::vector<Partition> lams = enumerate_partitions(N);
  std::vector<double> w(lams.size());
  double z = 0.0;
  for (std::size_t i = 0; i < lams.size(); ++i) {
    w[i] = finite_temp_weight(lams[i], u, tt, ttp);
    z += w[i];
  }
  double acc = 0.0;
  for (int c = -cmax; c <= cmax; ++c) {
    const double pc = theta_shift_pmf(u, c);
    double inner = 0.0;
    for (std::size_t i = 0; i < lams.size(); ++i)
      if (config_has_all(lams[i], c, X)) inner += w[i];
    acc += pc * inner / z;
  }
  return acc;
}

}  // namespace schurtau
