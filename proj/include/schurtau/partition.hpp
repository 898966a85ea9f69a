#ifndef SCHURTAU_PARTITION_HPP
#define SCHURTAU_PARTITION_HPP

#include <vector>

#include "schurtau/common.hpp"

namespace schurtau {

// A Young diagram stored as its nonzero parts, weakly decreasing.
// Rows beyond length() are zero; part() implements that convention.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based row index; returns 0 past the last row.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  // (size, lex) order, matching the enumeration order.
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// A half-integer k, stored as 2k to keep all index arithmetic exact.
class HalfInt {
 public:
  explicit HalfInt(int twice);
  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }

  HalfInt operator+(int n) const { return HalfInt(twice_ + 2 * n); }
  HalfInt operator-(int n) const { return HalfInt(twice_ - 2 * n); }
  HalfInt operator-() const { return HalfInt(-twice_); }

  bool operator==(const HalfInt& o) const { return twice_ == o.twice_; }
  bool operator!=(const HalfInt& o) const { return twice_ != o.twice_; }
  bool operator<(const HalfInt& o) const { return twice_ < o.twice_; }
  bool operator>(const HalfInt& o) const { return twice_ > o.twice_; }
  bool positive() const { return twice_ > 0; }

 private:
  int twice_;
};

// Sum of two half-integers is an integer.
inline int integer_sum(HalfInt a, HalfInt b) {
  return (a.twice() + b.twice()) / 2;
}

inline constexpr int kEnumerationHardCap = 40;

// All partitions with |lambda| <= max_size, ordered by (size, lex parts).
std::vector<Partition> enumerate_partitions(int max_size,
                                            int hard_cap = kEnumerationHardCap);

// Number of partitions of each n = 0..max_size (used for table sizing).
std::vector<long long> partition_counts(int max_size);

// Top `depth` elements of S_n(lambda) = {lambda_i - i + 1/2 + n}, decreasing.
// depth must cover every nonzero row.
std::vector<HalfInt> point_config(const Partition& lam, int n, int depth);

// mu_i <= lambda_i for all i.
bool contains(const Partition& lam, const Partition& mu);

// Membership x in S_n(lambda).
bool config_contains(const Partition& lam, int n, HalfInt x);

// #{ s in S_n(lambda) : s > k }; finite because the configuration is
// bounded above.
int count_above(const Partition& lam, int n, HalfInt k);

}  // namespace schurtau

#endif
