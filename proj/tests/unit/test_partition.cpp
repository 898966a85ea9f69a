#include <doctest.h>

#include <set>

#include "schurtau/partition.hpp"
#include "test_helpers.hpp"

using namespace schurtau;

TEST_CASE("enumeration counts") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(3).size() == 7);
  // independent pentagonal-recurrence oracle
  const auto p = testing::pentagonal_counts(10);
  long long total = 0;
  for (int n = 0; n <= 10; ++n) total += p[n];
  CHECK(total == 139);
  CHECK(enumerate_partitions(10).size() == 139);
  CHECK_THROWS_AS(enumerate_partitions(kEnumerationHardCap + 1),
                  SizeLimitError);
}

TEST_CASE("enumeration order, uniqueness, prefix property") {
  const auto big = enumerate_partitions(9);
  std::set<std::vector<int>> seen;
  for (const auto& lam : big) CHECK(seen.insert(lam.parts()).second);
  for (std::size_t i = 0; i + 1 < big.size(); ++i) CHECK(big[i] < big[i + 1]);
  const auto small = enumerate_partitions(8);
  REQUIRE(small.size() < big.size());
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == big[i]);
}

TEST_CASE("point_config examples") {
  auto tw = [](const std::vector<HalfInt>& v) {
    std::vector<int> out;
    for (auto h : v) out.push_back(h.twice());
    return out;
  };
  CHECK(tw(point_config(Partition(), 0, 3)) == std::vector<int>{-1, -3, -5});
  CHECK(tw(point_config(Partition({2, 1}), 0, 4)) ==
        std::vector<int>{3, -1, -5, -7});
  CHECK(tw(point_config(Partition({2, 1}), 2, 4)) ==
        std::vector<int>{7, 3, -1, -3});
  CHECK_THROWS(point_config(Partition({2, 1}), 0, 1));
}

TEST_CASE("config shift equivariance") {
  for (const auto& lam : enumerate_partitions(8)) {
    const auto base = point_config(lam, 0, lam.length() + 4);
    const auto shifted = point_config(lam, 3, lam.length() + 4);
    for (std::size_t i = 0; i < base.size(); ++i)
      CHECK(shifted[i].twice() == base[i].twice() + 6);
  }
}

TEST_CASE("containment") {
  CHECK(contains(Partition({2, 1}), Partition()));
  CHECK(contains(Partition({2, 1}), Partition({1, 1})));
  CHECK_FALSE(contains(Partition({2, 1}), Partition({3})));
  CHECK_FALSE(contains(Partition({2, 1}), Partition({1, 1, 1})));
}

TEST_CASE("particle-hole structure against the vacuum") {
  // per side the configurations differ in exactly the Durfee-square
  // size many points, and the energy sum of the differences is |lambda|
  for (const auto& lam : enumerate_partitions(12)) {
    const int depth = lam.length() + lam.size() + 2;
    std::set<int> conf, vac;
    for (auto h : point_config(lam, 0, depth)) conf.insert(h.twice());
    for (auto h : point_config(Partition(), 0, depth)) vac.insert(h.twice());
    int particles = 0, holes = 0, energy_twice = 0;
    for (int x : conf)
      if (!vac.count(x)) {
        ++particles;
        energy_twice += x;
      }
    for (int x : vac)
      if (!conf.count(x)) {
        ++holes;
        energy_twice -= x;
      }
    int durfee = 0;
    while (lam.part(durfee + 1) >= durfee + 1) ++durfee;
    CHECK(particles == durfee);
    CHECK(holes == durfee);
    CHECK(energy_twice == 2 * lam.size());
  }
}

TEST_CASE("halfint basics") {
  CHECK_THROWS(HalfInt(2));
  CHECK(HalfInt(3).value() == doctest::Approx(1.5));
  CHECK(integer_sum(HalfInt(3), HalfInt(-1)) == 1);
  CHECK((HalfInt(1) + 2).twice() == 5);
  CHECK((-HalfInt(1)).twice() == -1);
}

TEST_CASE("config membership helper") {
  const Partition lam({2, 1});
  // S_0((2,1)) = {3/2, -1/2, -5/2, -7/2, ...}
  CHECK(config_contains(lam, 0, HalfInt(3)));
  CHECK(config_contains(lam, 0, HalfInt(-1)));
  CHECK_FALSE(config_contains(lam, 0, HalfInt(1)));
  CHECK_FALSE(config_contains(lam, 0, HalfInt(-3)));
  CHECK(config_contains(lam, 0, HalfInt(-5)));
  CHECK(config_contains(lam, 0, HalfInt(-999)));
  CHECK(count_above(lam, 0, HalfInt(-3)) == 2);
  // rows 1..499 of S_0((2,1)) sit above -999/2
  CHECK(count_above(lam, 0, HalfInt(-999)) == 499);
}

TEST_CASE("conjugate") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
}
