#ifndef SCHURTAU_SIGMA_HPP
#define SCHURTAU_SIGMA_HPP

#include <map>
#include <string>

#include "schurtau/partition.hpp"

namespace schurtau {

// Weight sigma : Z' -> R driving the multiplicative statistic
// prod (1 - sigma(x)).  Families:
//   indicator_positive   1 for k > 0, else 0
//   fermi(u)             1 / (1 + u^k); tends to the indicator as u -> 0
//   paper_form(u)        1 / (1 - u^k); leaves [0,1], kept only so the
//                        brute-force adjudication can rule on it
//   table                explicit finite support, 0 elsewhere
class SigmaWeight {
 public:
  enum class Kind { IndicatorPositive, Fermi, PaperForm, Table };

  static SigmaWeight indicator_positive();
  static SigmaWeight fermi(double u);
  static SigmaWeight paper_form(double u);
  static SigmaWeight table(std::map<int, double> twice_to_value);
  static SigmaWeight zero() { return table({}); }

  Kind kind() const { return kind_; }
  double u() const { return u_; }
  const std::map<int, double>& table_values() const { return table_; }

  double operator()(HalfInt k) const;

  bool finitely_supported() const { return kind_ == Kind::Table; }
  bool is_zero() const { return kind_ == Kind::Table && table_.empty(); }
  // true when every value lies in [0,1] by construction
  bool in_unit_interval() const { return kind_ != Kind::PaperForm; }

  // upper bound on sum_{k <= below/2} sigma(k) over half-integers
  double negative_tail_sum(int below_twice) const;
  // support bounds for tables; [1, -1] (empty) when the table is empty
  int support_min_twice() const;
  int support_max_twice() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::Table;
  double u_ = 0.0;
  std::map<int, double> table_;
};

}  // namespace schurtau

#endif
