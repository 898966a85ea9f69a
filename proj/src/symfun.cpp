#include "schurtau/symfun.hpp"

namespace schurtau {

Eigen::VectorXcd h_coeffs(const ParamSeq& t, int N) {
  if (N < 0) throw std::invalid_argument("h_coeffs: negative order");
  Eigen::VectorXcd h = Eigen::VectorXcd::Zero(N + 1);
  h[0] = Complex(1.0);
  for (int n = 1; n <= N; ++n) {
    Complex acc(0.0);
    for (auto& [k, tk] : t.entries()) {
      if (k > n) break;
      acc += static_cast<double>(k) * tk * h[n - k];
    }
    h[n] = acc / static_cast<double>(n);
  }
  return h;
}

namespace {

Complex jacobi_trudi(const Partition& lam, const Partition& mu,
                     const Eigen::VectorXcd& h, int rows) {
  if (!contains(lam, mu)) return Complex(0.0);
  const int N = rows < 0 ? lam.length() : rows;
  if (N < lam.length())
    throw std::invalid_argument("jacobi_trudi: too few rows");
  if (N == 0) return Complex(1.0);
  Eigen::MatrixXcd A(N, N);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      const int idx = lam.part(i) - i - mu.part(j) + j;
      if (idx < 0) {
        A(i - 1, j - 1) = Complex(0.0);
      } else {
        if (idx >= h.size())
          throw std::invalid_argument("jacobi_trudi: h table too short");
        A(i - 1, j - 1) = h[idx];
      }
    }
  return A.determinant();
}

}  // namespace

Complex schur_value(const Partition& lam, const ParamSeq& t) {
  const Eigen::VectorXcd h = h_coeffs(t, lam.part(1) + lam.length());
  return jacobi_trudi(lam, Partition(), h, -1);
}

Complex schur_value(const Partition& lam, const Eigen::VectorXcd& h, int rows) {
  return jacobi_trudi(lam, Partition(), h, rows);
}

Complex skew_schur_value(const Partition& lam, const Partition& mu,
                         const ParamSeq& t) {
  const Eigen::VectorXcd h = h_coeffs(t, lam.part(1) + lam.length());
  return jacobi_trudi(lam, mu, h, -1);
}

Complex skew_schur_value(const Partition& lam, const Partition& mu,
                         const Eigen::VectorXcd& h, int rows) {
  return jacobi_trudi(lam, mu, h, rows);
}

}  // namespace schurtau
