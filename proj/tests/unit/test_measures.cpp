#include <doctest.h>

#include "schurtau/measures.hpp"
#include "test_helpers.hpp"

using namespace schurtau;

TEST_CASE("schur weights") {
  const ParamSeq t{0.5};
  // weight(empty) = 1/Z
  CHECK(std::abs(schur_weight(Partition(), t, t) - std::exp(-0.25)) < 1e-14);
  // Plancherel weight((1)) = theta e^{-theta}
  CHECK(std::abs(schur_weight(Partition({1}), t, t) - 0.25 * std::exp(-0.25)) <
        1e-14);
}

TEST_CASE("measure table mass and monotonicity") {
  const ParamSeq t{0.3, 0.1};
  double prev = 0.0;
  for (int N : {4, 8, 12}) {
    const MeasureTable tab = schur_table(t, t, N);
    CHECK(tab.mass.real() >= prev);
    CHECK(tab.mass.real() <= 1.0 + 1e-12);
    CHECK(std::abs(tab.mass.imag()) < 1e-14);
    prev = tab.mass.real();
  }
  CHECK(std::abs(schur_table(t, t, 12).mass - 1.0) <= 1e-8);
}

TEST_CASE("correlation brute force") {
  const ParamSeq zero{};
  CHECK(std::abs(correlation_bruteforce({}, zero, zero, 4) - 1.0) < 1e-14);
  CHECK(std::abs(correlation_bruteforce({HalfInt(-1)}, zero, zero, 4) - 1.0) <
        1e-14);
  CHECK(std::abs(correlation_bruteforce({HalfInt(1)}, zero, zero, 4)) <
        1e-14);
}

TEST_CASE("mult_stat_expectation basic shapes") {
  const ParamSeq t{0.5};
  CHECK(std::abs(mult_stat_expectation(SigmaWeight::zero(), 0, t, t, 12) -
                 1.0) < 1e-8);
  // sigma = 1 on a window covering every configuration point in [-D, D]
  std::map<int, double> ones;
  for (int tk = -27; tk <= 27; tk += 2) ones[tk] = 1.0;
  const Complex e =
      mult_stat_expectation(SigmaWeight::table(std::move(ones)), 0, t, t, 12);
  CHECK(std::abs(e) < 1e-14);
}

TEST_CASE("finite temperature weights") {
  const ParamSeq t{0.3};
  // u = 0 reduces to the two Schur factors exactly
  for (const auto& lam : enumerate_partitions(6)) {
    const double w = finite_temp_weight(lam, 0.0, t, t);
    const double s = (schur_value(lam, t) * schur_value(lam, t)).real();
    CHECK(w == doctest::Approx(s).epsilon(1e-13));
  }
  CHECK(finite_temp_weight(Partition(), 0.7, t, t) == doctest::Approx(1.0));
  // lambda = (1), t = t' = (a): w = a^2 + u
  const double a = 0.3, u = 0.45;
  CHECK(finite_temp_weight(Partition({1}), u, ParamSeq{a}, ParamSeq{a}) ==
        doctest::Approx(a * a + u).epsilon(1e-13));
}

TEST_CASE("theta shift pmf") {
  CHECK(theta_shift_pmf(0.5, 3) == doctest::Approx(theta_shift_pmf(0.5, -3)));
  CHECK(theta_shift_pmf(1e-9, 0) == doctest::Approx(1.0).epsilon(1e-4));
  // direct partial sum oracle at u = 0.5
  double theta3 = 1.0;
  for (int n = 1; n <= 12; ++n) theta3 += 2.0 * std::pow(0.5, 0.5 * n * n);
  CHECK(theta_shift_pmf(0.5, 0) == doctest::Approx(1.0 / theta3).epsilon(1e-12));
  double total = 0.0;
  for (int c = -40; c <= 40; ++c) total += theta_shift_pmf(0.5, c);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("finite temperature correlation reductions") {
  const ParamSeq t{0.2};
  // u -> 0 recovers the Schur brute force
  const double a = finite_temp_correlation_bruteforce({HalfInt(1)}, 0.0, t, t,
                                                      8, 4);
  const double b = correlation_bruteforce({HalfInt(1)}, t, t, 8).real();
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
  // X = {} integrates to ~1
  CHECK(finite_temp_correlation_bruteforce({}, 0.4, t, t, 8, 6) ==
        doctest::Approx(1.0).epsilon(1e-9));
}
