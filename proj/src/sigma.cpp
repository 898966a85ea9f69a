#include "schurtau/sigma.hpp"

#include <cmath>
#include <sstream>

namespace schurtau {

SigmaWeight SigmaWeight::indicator_positive() {
  SigmaWeight s;
  s.kind_ = Kind::IndicatorPositive;
  return s;
}

SigmaWeight SigmaWeight::fermi(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw std::invalid_argument("SigmaWeight::fermi: u must be in (0,1)");
  SigmaWeight s;
  s.kind_ = Kind::Fermi;
  s.u_ = u;
  return s;
}

SigmaWeight SigmaWeight::paper_form(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw std::invalid_argument("SigmaWeight::paper_form: u must be in (0,1)");
  SigmaWeight s;
  s.kind_ = Kind::PaperForm;
  s.u_ = u;
  return s;
}

SigmaWeight SigmaWeight::table(std::map<int, double> twice_to_value) {
  for (auto& [tk, v] : twice_to_value) {
    if (tk % 2 == 0)
      throw std::invalid_argument("SigmaWeight::table: keys must be odd");
    if (v < 0.0 || v > 1.0)
      throw std::invalid_argument("SigmaWeight::table: values must be in [0,1]");
  }
  SigmaWeight s;
  s.kind_ = Kind::Table;
  s.table_ = std::move(twice_to_value);
  std::erase_if(s.table_, [](auto& e) { return e.second == 0.0; });
  return s;
}

double SigmaWeight::operator()(HalfInt k) const {
  switch (kind_) {
    case Kind::IndicatorPositive:
      return k.positive() ? 1.0 : 0.0;
    case Kind::Fermi:
      return 1.0 / (1.0 + std::pow(u_, k.value()));
    case Kind::PaperForm:
      return 1.0 / (1.0 - std::pow(u_, k.value()));
    case Kind::Table: {
      auto it = table_.find(k.twice());
      return it == table_.end() ? 0.0 : it->second;
    }
  }
  return 0.0;
}

double SigmaWeight::negative_tail_sum(int below_twice) const {
  switch (kind_) {
    case Kind::IndicatorPositive:
      return 0.0;
    case Kind::Fermi:
    case Kind::PaperForm: {
      // |sigma(k)| <= u^{|k|} / (1 - u) summed geometrically below the cut
      double s = 0.0;
      int tk = below_twice % 2 == 0 ? below_twice - 1 : below_twice;
      for (int i = 0; i < 256 && tk < 0; ++i, tk -= 2)
        s += std::abs((*this)(HalfInt(tk)));
      if (tk < 0) s += std::pow(u_, -0.5 * tk) / (1.0 - u_);
      return s;
    }
    case Kind::Table: {
      double s = 0.0;
      for (auto& [tk, v] : table_)
        if (tk <= below_twice) s += std::abs(v);
      return s;
    }
  }
  return 0.0;
}

int SigmaWeight::support_min_twice() const {
  if (kind_ != Kind::Table || table_.empty()) return 1;
  return table_.begin()->first;
}

int SigmaWeight::support_max_twice() const {
  if (kind_ != Kind::Table || table_.empty()) return -1;
  return table_.rbegin()->first;
}

std::string SigmaWeight::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::IndicatorPositive:
      os << "indicator_positive";
      break;
    case Kind::Fermi:
      os << "fermi(u=" << u_ << ")";
      break;
    case Kind::PaperForm:
      os << "paper_form(u=" << u_ << ")";
      break;
    case Kind::Table:
      if (table_.empty()) {
        os << "zero";
      } else {
        os << "table{";
        bool first = true;
        for (auto& [tk, v] : table_) {
          if (!first) os << ",";
          os << tk << "/2:" << v;
          first = false;
        }
        os << "}";
      }
      break;
  }
  return os.str();
}

}  // namespace schurtau
