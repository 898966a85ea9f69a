#include "schurtau/json_io.hpp"

#include <sstream>

namespace schurtau {

json to_json(const Partition& p) {
  json j = json::array();
  for (int v : p.parts()) j.push_back(v);
  return j;
}

Partition partition_from_json(const json& j) {
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

std::string halfint_to_string(HalfInt k) {
  return std::to_string(k.twice()) + "/2";
}

HalfInt halfint_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos || s.substr(slash) != "/2")
    throw std::invalid_argument("halfint_from_string: expected \"k/2\"");
  return HalfInt(std::stoi(s.substr(0, slash)));
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>());
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

json to_json(const ParamSeq& t) {
  json j = json::object();
  for (auto& [n, v] : t.entries()) j[std::to_string(n)] = to_json(v);
  return j;
}

ParamSeq paramseq_from_json(const json& j) {
  std::vector<std::pair<int, Complex>> entries;
  if (j.is_array()) {
    // dense shorthand: [t1, t2, ...]
    int n = 1;
    for (const auto& v : j) entries.emplace_back(n++, complex_from_json(v));
  } else {
    for (auto it = j.begin(); it != j.end(); ++it)
      entries.emplace_back(std::stoi(it.key()), complex_from_json(it.value()));
  }
  return ParamSeq::from_pairs(std::move(entries));
}

json to_json(const SigmaWeight& s) {
  json j;
  switch (s.kind()) {
    case SigmaWeight::Kind::IndicatorPositive:
      j["kind"] = "indicator";
      break;
    case SigmaWeight::Kind::Fermi:
      j["kind"] = "fermi";
      j["u"] = s.u();
      break;
    case SigmaWeight::Kind::PaperForm:
      j["kind"] = "paper_form";
      j["u"] = s.u();
      break;
    case SigmaWeight::Kind::Table: {
      j["kind"] = "table";
      json vals = json::object();
      for (auto& [tk, v] : s.table_values())
        vals[halfint_to_string(HalfInt(tk))] = v;
      j["values"] = vals;
      break;
    }
  }
  return j;
}

SigmaWeight sigma_from_json(const json& j, bool allow_nonstandard) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "indicator") return SigmaWeight::indicator_positive();
  if (kind == "fermi") return SigmaWeight::fermi(j.at("u").get<double>());
  if (kind == "paper_form") {
    if (!allow_nonstandard)
      throw std::invalid_argument(
          "sigma_from_json: paper_form requires --allow-nonstandard-sigma");
    return SigmaWeight::paper_form(j.at("u").get<double>());
  }
  if (kind == "table" || kind == "zero") {
    std::map<int, double> vals;
    if (j.contains("values"))
      for (auto it = j["values"].begin(); it != j["values"].end(); ++it)
        vals[halfint_from_string(it.key()).twice()] = it.value().get<double>();
    return SigmaWeight::table(std::move(vals));
  }
  throw std::invalid_argument("sigma_from_json: unknown kind " + kind);
}

json to_json(const LaurentWindow& w) {
  json coeffs = json::array();
  for (int k = -w.N; k <= w.N; ++k) coeffs.push_back(to_json(w.at(k)));
  return json{{"N", w.N},
              {"coeffs", coeffs},
              {"decay_C", w.decay_C},
              {"decay_r", w.decay_r},
              {"tail_err", w.tail_err}};
}

json to_json(const MeasureTable& tab) {
  json entries = json::array();
  for (auto& [lam, w] : tab.entries)
    entries.push_back(json{{"lambda", to_json(lam)}, {"weight", to_json(w)}});
  return json{{"max_size", tab.max_size},
              {"mass", to_json(tab.mass)},
              {"entries", entries}};
}

json to_json(const KernelMatrix& km) {
  json rows = json::array();
  for (int i = 0; i < km.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < km.dim(); ++j) row.push_back(to_json(km.entries(i, j)));
    rows.push_back(row);
  }
  return json{{"n", km.n},
              {"M", km.dim()},
              {"entries", rows},
              {"tail_bound", km.tail_bound},
              {"entry_residual", km.entry_residual}};
}

std::string kernel_to_csv(const KernelMatrix& km) {
  std::ostringstream os;
  os.precision(17);
  os << "x";
  for (int j = 0; j < km.dim(); ++j)
    os << "," << halfint_to_string(km.site(j));
  os << "\n";
  for (int i = 0; i < km.dim(); ++i) {
    os << halfint_to_string(km.site(i));
    for (int j = 0; j < km.dim(); ++j) {
      const Complex z = km.entries(i, j);
      os << "," << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "j";
    }
    os << "\n";
  }
  return os.str();
}

json to_json(const TauValue& tv) {
  return json{{"value_re", tv.value.real()},
              {"value_im", tv.value.imag()},
              {"bound", tv.truncation_bound},
              {"params",
               {{"t", tv.params.t},
                {"tprime", tv.params.tp},
                {"sigma", tv.params.sigma},
                {"n", tv.params.n},
                {"M", tv.params.M},
                {"cutoff", tv.params.cutoff}}}};
}

json to_json(const HirotaCase& c) {
  return json{{"m", c.m},
              {"l", c.l},
              {"s", to_json(c.s)},
              {"sprime", to_json(c.sp)},
              {"t", to_json(c.t)},
              {"tprime", to_json(c.tp)},
              {"sigma", to_json(c.sigma)},
              {"rho", c.rho},
              {"P", c.P_used},
              {"lhs", to_json(c.lhs)},
              {"rhs", to_json(c.rhs)},
              {"residual", c.residual},
              {"extraction_gap", c.extraction_gap}};
}

}  // namespace schurtau
