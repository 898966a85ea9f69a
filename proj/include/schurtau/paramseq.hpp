#ifndef SCHURTAU_PARAMSEQ_HPP
#define SCHURTAU_PARAMSEQ_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "schurtau/common.hpp"

namespace schurtau {

// Finitely supported Miwa-time sequence (t_1, t_2, ...).  Entries are
// kept sorted by index with zero values dropped, so equality and
// iteration order are canonical.
class ParamSeq {
 public:
  ParamSeq() = default;
  // Dense prefix: ParamSeq{0.5} is t_1 = 0.5, ParamSeq{0.3, 0.1} adds t_2.
  ParamSeq(std::initializer_list<Complex> dense);
  static ParamSeq from_pairs(std::vector<std::pair<int, Complex>> entries);

  Complex value(int n) const;
  int max_index() const { return entries_.empty() ? 0 : entries_.back().first; }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<int, Complex>>& entries() const { return entries_; }

  ParamSeq operator+(const ParamSeq& o) const;
  ParamSeq operator-(const ParamSeq& o) const;
  ParamSeq operator-() const;
  ParamSeq scaled(Complex c) const;
  bool operator==(const ParamSeq& o) const { return entries_ == o.entries_; }

  double max_abs() const;
  bool is_real(double tol = 0.0) const;

 private:
  void normalize();
  std::vector<std::pair<int, Complex>> entries_;
};

// Z_{t,t'} = exp(sum_n n t_n t'_n)
Complex z_norm(const ParamSeq& t, const ParamSeq& tp);

// gamma(z, t) = exp(sum_n t_n z^n), a finite sum here
Complex gamma_eval(Complex z, const ParamSeq& t);

}  // namespace schurtau

#endif
