#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "schurtau/kernel.hpp"
#include "schurtau/measures.hpp"
#include "test_helpers.hpp"

using namespace schurtau;

TEST_CASE("sigma families") {
  const SigmaWeight ind = SigmaWeight::indicator_positive();
  CHECK(ind(HalfInt(1)) == 1.0);
  CHECK(ind(HalfInt(-1)) == 0.0);

  const SigmaWeight f = SigmaWeight::fermi(0.5);
  // 1/(1 + u^k); the u->0 limit recovers the indicator
  CHECK(f(HalfInt(1)) == doctest::Approx(1.0 / (1.0 + std::sqrt(0.5))));
  CHECK(f(HalfInt(1)) == doctest::Approx(0.585786437626905));
  CHECK(f(HalfInt(-1)) == doctest::Approx(0.414213562373095));
  for (int tk = -9; tk <= 9; tk += 2)
    CHECK(f(HalfInt(tk)) + f(HalfInt(-tk)) == doctest::Approx(1.0));
  const SigmaWeight f2 = SigmaWeight::fermi(1e-6);
  CHECK(f2(HalfInt(3)) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(f2(HalfInt(-3)) == doctest::Approx(0.0).epsilon(1e-8));

  const SigmaWeight pf = SigmaWeight::paper_form(0.5);
  CHECK(pf(HalfInt(1)) == doctest::Approx(1.0 / (1.0 - std::sqrt(0.5))));
  CHECK_FALSE(pf.in_unit_interval());

  const SigmaWeight tab = SigmaWeight::table({{-1, 0.25}, {3, 0.5}});
  CHECK(tab(HalfInt(-1)) == 0.25);
  CHECK(tab(HalfInt(3)) == 0.5);
  CHECK(tab(HalfInt(1)) == 0.0);
  CHECK(tab.finitely_supported());
  CHECK_THROWS(SigmaWeight::table({{2, 0.5}}));
  CHECK_THROWS(SigmaWeight::table({{1, 1.5}}));
  CHECK(SigmaWeight::zero().is_zero());
}

TEST_CASE("sigma negative tail sums") {
  const SigmaWeight f = SigmaWeight::fermi(0.4);
  double direct = 0.0;
  for (int tk = -1; tk >= -199; tk -= 2) direct += f(HalfInt(tk));
  CHECK(f.negative_tail_sum(-1) >= direct);
  CHECK(f.negative_tail_sum(-1) == doctest::Approx(direct).epsilon(1e-6));
  CHECK(SigmaWeight::indicator_positive().negative_tail_sum(-1) == 0.0);
}

TEST_CASE("kernel at t = t' = 0 is sigma(-x) on the diagonal") {
  std::mt19937 rng(17);
  const SigmaWeight sg = testing::random_sigma_table(rng);
  for (int tx = -7; tx <= 7; tx += 2)
    for (int ty = -7; ty <= 7; ty += 2) {
      const KernelEntry e =
          kernel_entry(ParamSeq{}, ParamSeq{}, sg, HalfInt(tx), HalfInt(ty), 24);
      const double expect = tx == ty ? sg(HalfInt(-tx)) : 0.0;
      CHECK(std::abs(e.value - expect) < 1e-14);
    }
}

TEST_CASE("kernel symmetry under t <-> t'") {
  // swapping t and t' transposes the kernel (J symmetry), so all
  // minors and determinants are invariant
  std::mt19937 rng(23);
  const ParamSeq t = testing::random_paramseq(rng, 2, 0.4, false);
  const ParamSeq tp = testing::random_paramseq(rng, 2, 0.4, false);
  const SigmaWeight sg = SigmaWeight::indicator_positive();
  const KernelMatrix a = kernel_matrix(t, tp, sg, 0, 10, 32);
  const KernelMatrix b = kernel_matrix(tp, t, sg, 0, 10, 32);
  CHECK((a.entries - b.entries.transpose()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("real symmetric case: hermitian with spectrum in [0,1]") {
  const ParamSeq t{0.5};
  const KernelMatrix km =
      kernel_matrix(t, t, SigmaWeight::indicator_positive(), 0, 16, 48);
  CHECK(km.entries.imag().cwiseAbs().maxCoeff() < 1e-14);
  CHECK((km.entries - km.entries.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(km.entries.real());
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
  CHECK(es.eigenvalues().maxCoeff() < 1.0 + 1e-10);
}

TEST_CASE("block extension consistency") {
  const ParamSeq t{0.5};
  const SigmaWeight sg = SigmaWeight::fermi(0.4);
  const int M = 8;
  const int jr = M + 5 + 48 + 70;
  const KernelContext ctx =
      KernelContext::make(SeriesSpec(t), SeriesSpec(t), sg, jr);
  const KernelMatrix small = kernel_matrix(ctx, -1, M, 48);
  const KernelMatrix big = kernel_matrix(ctx, -1, M + 5, 48);
  CHECK((big.entries.topLeftCorner(M, M) - small.entries)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  // tail bound shrinks as the window grows
  CHECK(big.tail_bound <= small.tail_bound);
}

TEST_CASE("trace-class surrogate: det stabilizes within tail bound") {
  const ParamSeq t{0.5};
  const SigmaWeight sg = SigmaWeight::indicator_positive();
  for (const int M : {8, 16}) {
    const KernelMatrix a = kernel_matrix(t, t, sg, 0, M, 64);
    const KernelMatrix b = kernel_matrix(t, t, sg, 0, 2 * M, 64);
    const double da =
        std::abs((Eigen::MatrixXcd::Identity(M, M) - a.entries).determinant());
    const double db = std::abs(
        (Eigen::MatrixXcd::Identity(2 * M, 2 * M) - b.entries).determinant());
    CHECK(std::abs(da - db) <= a.tail_bound + 1e-12);
  }
}

TEST_CASE("one-point function matches the enumeration oracle") {
  // Plancherel theta = 0.25
  const ParamSeq t{0.5};
  const KernelEntry e =
      kernel_entry(t, t, SigmaWeight::indicator_positive(), HalfInt(1),
                   HalfInt(1), 48);
  const Complex brute = correlation_bruteforce({HalfInt(1)}, t, t, 16);
  CHECK(std::abs(e.value - brute) < 1e-6);
}
