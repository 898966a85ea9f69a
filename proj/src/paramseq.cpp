#include "schurtau/paramseq.hpp"

#include <algorithm>
#include <cmath>

namespace schurtau {

ParamSeq::ParamSeq(std::initializer_list<Complex> dense) {
  int n = 1;
  for (Complex v : dense) entries_.emplace_back(n++, v);
  normalize();
}

ParamSeq ParamSeq::from_pairs(std::vector<std::pair<int, Complex>> entries) {
  ParamSeq s;
  s.entries_ = std::move(entries);
  s.normalize();
  return s;
}

void ParamSeq::normalize() {
  for (auto& [n, v] : entries_) {
    (void)v;
    if (n < 1) throw std::invalid_argument("ParamSeq: indices start at 1");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
    if (entries_[i].first == entries_[i + 1].first)
      throw std::invalid_argument("ParamSeq: duplicate index");
  std::erase_if(entries_, [](auto& e) { return e.second == Complex(0.0); });
}

Complex ParamSeq::value(int n) const {
  for (auto& [k, v] : entries_)
    if (k == n) return v;
  return Complex(0.0);
}

ParamSeq ParamSeq::operator+(const ParamSeq& o) const {
  std::vector<std::pair<int, Complex>> sum = entries_;
  for (auto& [n, v] : o.entries_) {
    bool found = false;
    for (auto& [m, w] : sum)
      if (m == n) {
        w += v;
        found = true;
        break;
      }
    if (!found) sum.emplace_back(n, v);
  }
  return from_pairs(std::move(sum));
}

ParamSeq ParamSeq::operator-(const ParamSeq& o) const { return *this + (-o); }

ParamSeq ParamSeq::operator-() const { return scaled(Complex(-1.0)); }

ParamSeq ParamSeq::scaled(Complex c) const {
  std::vector<std::pair<int, Complex>> s = entries_;
  for (auto& [n, v] : s) {
    (void)n;
    v *= c;
  }
  return from_pairs(std::move(s));
}

double ParamSeq::max_abs() const {
  double m = 0.0;
  for (auto& [n, v] : entries_) {
    (void)n;
    m = std::max(m, std::abs(v));
  }
  return m;
}

bool ParamSeq::is_real(double tol) const {
  for (auto& [n, v] : entries_) {
    (void)n;
    if (std::abs(v.imag()) > tol) return false;
  }
  return true;
}

Complex z_norm(const ParamSeq& t, const ParamSeq& tp) {
  Complex s(0.0);
  for (auto& [n, v] : t.entries()) s += static_cast<double>(n) * v * tp.value(n);
  return std::exp(s);
}

Complex gamma_eval(Complex z, const ParamSeq& t) {
  Complex s(0.0);
  for (auto& [n, v] : t.entries()) s += v * std::pow(z, n);
  return std::exp(s);
}

}  // namespace schurtau
