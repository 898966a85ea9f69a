#include "schurtau/partition.hpp"

#include <algorithm>
#include <numeric>

namespace schurtau {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) cols[j] += 1;
  }
  return Partition(std::move(cols));
}

bool Partition::operator<(const Partition& o) const {
  if (size_ != o.size_) return size_ < o.size_;
  return parts_ < o.parts_;
}

HalfInt::HalfInt(int twice) : twice_(twice) {
  if (twice % 2 == 0)
    throw std::invalid_argument("HalfInt: doubled value must be odd");
}

namespace {

void gen_rec(int remaining, int max_part, std::vector<int>& acc,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(std::vector<int>(acc.begin(), acc.end()));
    return;
  }
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    acc.push_back(p);
    gen_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int max_size, int hard_cap) {
  if (max_size < 0)
    throw std::invalid_argument("enumerate_partitions: negative size");
  if (max_size > hard_cap)
    throw SizeLimitError("enumerate_partitions: max_size exceeds cap");
  std::vector<Partition> out;
  std::vector<int> acc;
  for (int n = 0; n <= max_size; ++n) {
    // leading part grows last, so the visit order within each size is
    // lex ascending on the part sequence
    gen_rec(n, std::max(n, 1), acc, out);
  }
  return out;
}

std::vector<long long> partition_counts(int max_size) {
  // p(n) by the bounded-part recurrence.
  std::vector<std::vector<long long>> dp(max_size + 1,
                                         std::vector<long long>(max_size + 1, 0));
  for (int k = 0; k <= max_size; ++k) dp[0][k] = 1;
  for (int n = 1; n <= max_size; ++n)
    for (int k = 1; k <= max_size; ++k) {
      dp[n][k] = dp[n][k - 1];
      if (n >= k) dp[n][k] += dp[n - k][k];
    }
  std::vector<long long> p(max_size + 1);
  for (int n = 0; n <= max_size; ++n) p[n] = dp[n][max_size];
  return p;
}

std::vector<HalfInt> point_config(const Partition& lam, int n, int depth) {
  if (depth < lam.length())
    throw std::invalid_argument(
        "point_config: depth would drop nonzero rows");
  std::vector<HalfInt> out;
  out.reserve(depth);
  for (int i = 1; i <= depth; ++i)
    out.push_back(HalfInt(2 * lam.part(i) - 2 * i + 1 + 2 * n));
  return out;
}

bool contains(const Partition& lam, const Partition& mu) {
  if (mu.length() > lam.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lam.part(i)) return false;
  return true;
}

bool config_contains(const Partition& lam, int n, HalfInt x) {
  const int tx = x.twice();
  for (int i = 1; i <= lam.length(); ++i)
    if (2 * lam.part(i) - 2 * i + 1 + 2 * n == tx) return true;
  // rows past length(): value 1 - 2i + 2n; solve for i.
  const int i = (1 + 2 * n - tx) / 2;  // tx odd, so exact
  return i > lam.length();
}

int count_above(const Partition& lam, int n, HalfInt k) {
  const int tk = k.twice();
  int count = 0;
  for (int i = 1; i <= lam.length(); ++i)
    if (2 * lam.part(i) - 2 * i + 1 + 2 * n > tk) ++count;
  // tail rows i > length(): 1 - 2i + 2n > tk  <=>  i <= (2n - tk - 1)/2
  const int i_max = (2 * n - tk - 1) / 2;
  if (i_max > lam.length()) count += i_max - lam.length();
  return count;
}

}  // namespace schurtau
