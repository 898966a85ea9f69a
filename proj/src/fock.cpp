#include "schurtau/fock.hpp"

#include <algorithm>
#include <cmath>

namespace schurtau::fock {

void Cutoffs::validate() const {
  if (e_max < 0 || e_max > 14)
    throw std::invalid_argument("Cutoffs: e_max must lie in [0,14]");
  if (n_max < 0 || n_max > 31)
    throw std::invalid_argument("Cutoffs: n_max must lie in [0,31]");
}

std::uint64_t BasisState::packed() const {
  std::uint64_t key = static_cast<std::uint64_t>(charge + 32) << 56;
  const auto& p = lam.parts();
  for (std::size_t i = 0; i < p.size(); ++i)
    key |= static_cast<std::uint64_t>(p[i] & 0xF) << (4 * i);
  return key;
}

BasisState BasisState::unpack(std::uint64_t key) {
  BasisState s;
  s.charge = static_cast<int>((key >> 56) & 0x7F) - 32;
  std::vector<int> parts;
  for (int i = 0; i < 14; ++i) {
    const int p = static_cast<int>((key >> (4 * i)) & 0xF);
    if (p == 0) break;
    parts.push_back(p);
  }
  s.lam = Partition(std::move(parts));
  return s;
}

void FockVector::add(const BasisState& s, Complex amp) {
  if (amp == Complex(0.0)) return;
  auto [it, inserted] = terms_.emplace(s.packed(), amp);
  if (!inserted) {
    it->second += amp;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

Complex FockVector::coeff(const BasisState& s) const {
  auto it = terms_.find(s.packed());
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void FockVector::scale(Complex c) {
  for (auto& [k, v] : terms_) {
    (void)k;
    v *= c;
  }
}

void FockVector::accumulate(const FockVector& o) {
  for (auto& [k, v] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) it->second += v;
  }
  dropped_ += o.dropped_;
}

void FockVector::prune(double eps) {
  std::erase_if(terms_, [eps](auto& e) { return std::abs(e.second) <= eps; });
}

FockVector basis_vector(int charge, const Partition& lam) {
  FockVector v;
  v.add({charge, lam}, Complex(1.0));
  return v;
}

Complex inner(const FockVector& a, const FockVector& b) {
  // iterate the shorter map
  const FockVector& s = a.size() <= b.size() ? a : b;
  const FockVector& l = a.size() <= b.size() ? b : a;
  Complex acc(0.0);
  for (auto& [k, v] : s.terms()) {
    auto it = l.terms().find(k);
    if (it == l.terms().end()) continue;
    const Complex va = (&s == &a) ? v : it->second;
    const Complex vb = (&s == &a) ? it->second : v;
    acc += va * std::conj(vb);
  }
  return acc;
}

std::optional<std::pair<BasisState, int>> psi_basis(HalfInt k,
                                                    const BasisState& s) {
  if (config_contains(s.lam, s.charge, k)) return std::nullopt;
  const int cnt = count_above(s.lam, s.charge, k);
  const int sign = (cnt % 2 == 0) ? 1 : -1;
  // new row value at position cnt+1 after the charge bump
  // after the charge bump: rows above the insertion lose a box, the new
  // row sits at cnt+1, rows below keep their values; a hole always lies
  // above the frozen sea so cnt <= length
  const int newpart = (k.twice() + 2 * cnt - 2 * s.charge - 1) / 2;
  std::vector<int> parts;
  parts.reserve(s.lam.length() + 1);
  for (int i = 1; i <= cnt; ++i) parts.push_back(s.lam.part(i) - 1);
  parts.push_back(newpart);
  for (int i = cnt + 1; i <= s.lam.length(); ++i)
    parts.push_back(s.lam.part(i));
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  BasisState out{s.charge + 1, Partition(std::move(parts))};
  return std::make_pair(out, sign);
}

std::optional<std::pair<BasisState, int>> psi_star_basis(HalfInt k,
                                                         const BasisState& s) {
  if (!config_contains(s.lam, s.charge, k)) return std::nullopt;
  const int cnt = count_above(s.lam, s.charge, k);  // k sits at row cnt+1
  const int sign = (cnt % 2 == 0) ? 1 : -1;
  std::vector<int> parts;
  parts.reserve(s.lam.length() + 1);
  for (int i = 1; i <= cnt; ++i) parts.push_back(s.lam.part(i) + 1);
  for (int i = cnt + 2; i <= s.lam.length(); ++i)
    parts.push_back(s.lam.part(i));
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  BasisState out{s.charge - 1, Partition(std::move(parts))};
  return std::make_pair(out, sign);
}

namespace {

void add_clipped(FockVector& out, const BasisState& s, Complex amp,
                 const Cutoffs& c) {
  if (amp == Complex(0.0)) return;
  if (std::abs(s.charge) > c.n_max || s.energy() > c.e_max) {
    out.add_dropped(std::abs(amp));
    return;
  }
  out.add(s, amp);
}

}  // namespace

FockVector apply_psi(HalfInt k, const FockVector& v, const Cutoffs& c) {
  c.validate();
  FockVector out;
  for (auto& [key, amp] : v.terms()) {
    const BasisState s = BasisState::unpack(key);
    if (auto r = psi_basis(k, s))
      add_clipped(out, r->first, amp * static_cast<double>(r->second), c);
  }
  return out;
}

FockVector apply_psi_star(HalfInt k, const FockVector& v, const Cutoffs& c) {
  c.validate();
  FockVector out;
  for (auto& [key, amp] : v.terms()) {
    const BasisState s = BasisState::unpack(key);
    if (auto r = psi_star_basis(k, s))
      add_clipped(out, r->first, amp * static_cast<double>(r->second), c);
  }
  return out;
}

FockVector apply_alpha(int m, const FockVector& v, const Cutoffs& c) {
  c.validate();
  if (m == 0) throw std::invalid_argument("apply_alpha: m must be nonzero");
  FockVector out;
  for (auto& [key, amp] : v.terms()) {
    const BasisState s = BasisState::unpack(key);
    // alpha_m = sum_k psi_{k-m} psi*_k; only occupied k with k-m free
    // contribute, and only rows i <= len + |m| can move
    const int imax = s.lam.length() + std::abs(m) + 1;
    for (int i = 1; i <= imax; ++i) {
      const HalfInt k(2 * s.lam.part(i) - 2 * i + 1 + 2 * s.charge);
      const HalfInt km = k - m;
      if (config_contains(s.lam, s.charge, km)) continue;
      const auto r1 = psi_star_basis(k, s);
      if (!r1) continue;  // cannot happen: k is occupied by construction
      const auto r2 = psi_basis(km, r1->first);
      if (!r2) continue;
      add_clipped(out, r2->first,
                  amp * static_cast<double>(r1->second * r2->second), c);
    }
  }
  return out;
}

FockVector apply_gamma(int sign, const ParamSeq& t, const FockVector& v,
                       const Cutoffs& c) {
  c.validate();
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("apply_gamma: sign must be +-1");
  FockVector acc = v;
  FockVector cur = v;
  const int jmax = 4 * c.e_max + 8;
  for (int j = 1; j <= jmax && !cur.empty(); ++j) {
    FockVector next;
    for (auto& [n, tn] : t.entries()) {
      FockVector a = apply_alpha(sign * n, cur, c);
      a.scale(tn);
      next.accumulate(a);
    }
    next.scale(Complex(1.0 / j));
    next.prune();
    cur = std::move(next);
    acc.accumulate(cur);
  }
  acc.prune();
  return acc;
}

FockVector apply_charge(const FockVector& v) {
  FockVector out;
  for (auto& [key, amp] : v.terms()) {
    const BasisState s = BasisState::unpack(key);
    if (s.charge != 0) out.add(s, amp * static_cast<double>(s.charge));
  }
  return out;
}

FockVector apply_shift(int p, const FockVector& v, const Cutoffs& c) {
  c.validate();
  FockVector out;
  for (auto& [key, amp] : v.terms()) {
    BasisState s = BasisState::unpack(key);
    s.charge += p;
    add_clipped(out, s, amp, c);
  }
  return out;
}

FockVector apply_a_sigma(const SigmaWeight& sigma, const FockVector& v,
                         int depth, const Cutoffs& c) {
  c.validate();
  FockVector out;
  for (auto& [key, amp] : v.terms()) {
    const BasisState s = BasisState::unpack(key);
    double factor = 1.0;
    if (sigma.finitely_supported()) {
      for (auto& [tk, val] : sigma.table_values())
        if (config_contains(s.lam, s.charge, HalfInt(tk)))
          factor *= 1.0 - val;
    } else {
      const int d = std::max(depth, s.lam.length());
      for (int i = 1; i <= d; ++i) {
        const HalfInt x(2 * s.lam.part(i) - 2 * i + 1 + 2 * s.charge);
        factor *= 1.0 - sigma(x);
      }
    }
    out.add(s, amp * factor);
  }
  return out;
}

Complex fock_correlation(const std::vector<HalfInt>& X, const ParamSeq& t,
                         const ParamSeq& tp, const Cutoffs& c) {
  FockVector w = apply_gamma(-1, tp, vacuum(0), c);
  for (auto it = X.rbegin(); it != X.rend(); ++it) {
    w = apply_psi_star(*it, w, c);
    w = apply_psi(*it, w, c);
  }
  w = apply_gamma(1, t, w, c);
  return w.coeff({0, Partition()});
}

Complex fock_tau(const ParamSeq& t, const ParamSeq& tp,
                 const SigmaWeight& sigma, int n, const Cutoffs& c,
                 int depth) {
  Cutoffs cc = c;
  cc.n_max = std::max(c.n_max, std::abs(n));
  FockVector w = apply_gamma(-1, -tp, vacuum(n), cc);
  w = apply_a_sigma(sigma, w, depth, cc);
  w = apply_gamma(1, -t, w, cc);
  return w.coeff({n, Partition()});
}

// ---------------------------------------------------------------------
// audits

namespace {

std::vector<BasisState> basis_up_to(int e_max, int n_lo, int n_hi) {
  std::vector<BasisState> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (const Partition& lam : enumerate_partitions(e_max))
      out.push_back({n, lam});
  return out;
}

std::vector<HalfInt> halfint_range(int tlo, int thi) {
  std::vector<HalfInt> out;
  for (int tk = tlo; tk <= thi; tk += 2) out.push_back(HalfInt(tk));
  return out;
}

double max_coeff_diff(const FockVector& a, const FockVector& b,
                      int e_limit = 1 << 20) {
  double m = 0.0;
  for (auto& [k, v] : a.terms()) {
    const BasisState s = BasisState::unpack(k);
    if (s.energy() > e_limit) continue;
    m = std::max(m, std::abs(v - b.coeff(s)));
  }
  for (auto& [k, v] : b.terms()) {
    const BasisState s = BasisState::unpack(k);
    if (s.energy() > e_limit) continue;
    m = std::max(m, std::abs(v - a.coeff(s)));
  }
  return m;
}

}  // namespace

OperatorAudit check_anticommutation(const Cutoffs& c) {
  // sign bookkeeping only: use a loose interior so cutoff clipping
  // cannot masquerade as a defect
  Cutoffs wide = c;
  wide.e_max = 14;
  wide.n_max = c.n_max + 2;
  OperatorAudit audit{"anticommutation", 0.0, 0};
  const auto states = basis_up_to(std::min(4, c.e_max), -1, 1);
  const auto ks = halfint_range(-7, 7);
  for (const BasisState& s : states) {
    const FockVector v = basis_vector(s.charge, s.lam);
    for (HalfInt k : ks)
      for (HalfInt l : ks) {
        // psi_k psi*_l + psi*_l psi_k = delta_{kl}
        FockVector a = apply_psi(k, apply_psi_star(l, v, wide), wide);
        FockVector b = apply_psi_star(l, apply_psi(k, v, wide), wide);
        a.accumulate(b);
        FockVector expect;
        if (k == l) expect = v;
        audit.max_residual =
            std::max(audit.max_residual, max_coeff_diff(a, expect));
        // psi_k psi_l + psi_l psi_k = 0
        FockVector p = apply_psi(k, apply_psi(l, v, wide), wide);
        p.accumulate(apply_psi(l, apply_psi(k, v, wide), wide));
        audit.max_residual =
            std::max(audit.max_residual, max_coeff_diff(p, FockVector()));
        // psi*_k psi*_l + psi*_l psi*_k = 0
        FockVector q = apply_psi_star(k, apply_psi_star(l, v, wide), wide);
        q.accumulate(apply_psi_star(l, apply_psi_star(k, v, wide), wide));
        audit.max_residual =
            std::max(audit.max_residual, max_coeff_diff(q, FockVector()));
        audit.cases_checked += 3;
      }
  }
  return audit;
}

OperatorAudit check_projectors(const Cutoffs& c) {
  Cutoffs wide = c;
  wide.e_max = 14;
  wide.n_max = c.n_max + 2;
  OperatorAudit audit{"projectors", 0.0, 0};
  const auto states = basis_up_to(std::min(5, c.e_max), -2, 2);
  const auto ks = halfint_range(-11, 11);
  for (const BasisState& s : states) {
    const FockVector v = basis_vector(s.charge, s.lam);
    for (HalfInt k : ks) {
      const bool occ = config_contains(s.lam, s.charge, k);
      FockVector a = apply_psi(k, apply_psi_star(k, v, wide), wide);
      FockVector b = apply_psi_star(k, apply_psi(k, v, wide), wide);
      audit.max_residual = std::max(
          audit.max_residual, max_coeff_diff(a, occ ? v : FockVector()));
      audit.max_residual = std::max(
          audit.max_residual, max_coeff_diff(b, occ ? FockVector() : v));
      audit.cases_checked += 2;
    }
  }
  return audit;
}

OperatorAudit check_alpha_commutation(const Cutoffs& c) {
  OperatorAudit audit{"alpha_commutation", 0.0, 0};
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      if (n == 0 || m == 0) continue;
      const int head = std::abs(n) + std::abs(m);
      const auto states = basis_up_to(std::max(0, c.e_max - head), -2, 2);
      for (const BasisState& s : states) {
        const FockVector v = basis_vector(s.charge, s.lam);
        FockVector ab = apply_alpha(n, apply_alpha(m, v, c), c);
        FockVector ba = apply_alpha(m, apply_alpha(n, v, c), c);
        ba.scale(Complex(-1.0));
        ab.accumulate(ba);
        FockVector expect = v;
        expect.scale(Complex(n == -m ? static_cast<double>(n) : 0.0));
        audit.max_residual = std::max(
            audit.max_residual,
            max_coeff_diff(ab, expect, c.e_max - head));
        audit.cases_checked += 1;
      }
    }
  return audit;
}

OperatorAudit check_charge_kernel(const Cutoffs& c) {
  OperatorAudit audit{"charge_kernel", 0.0, 0};
  for (const BasisState& s : basis_up_to(std::min(8, c.e_max), -3, 3)) {
    const FockVector v = basis_vector(s.charge, s.lam);
    FockVector cv = apply_charge(v);
    FockVector expect = v;
    expect.scale(Complex(static_cast<double>(s.charge)));
    audit.max_residual =
        std::max(audit.max_residual, max_coeff_diff(cv, expect));
    // R is a unitary relabeling
    FockVector rv = apply_shift(1, v, {c.e_max, c.n_max + 4});
    audit.max_residual = std::max(
        audit.max_residual,
        std::abs(inner(rv, rv) - inner(v, v)));
    audit.cases_checked += 2;
  }
  return audit;
}

OperatorAudit check_gamma_adjoint(const ParamSeq& t, const Cutoffs& c) {
  OperatorAudit audit{"gamma_adjoint", 0.0, 0};
  if (!t.is_real())
    throw std::invalid_argument("check_gamma_adjoint: real t only");
  const auto states = basis_up_to(std::min(4, c.e_max), -1, 1);
  for (const BasisState& su : states)
    for (const BasisState& sv : states) {
      if (su.charge != sv.charge) continue;
      const FockVector u = basis_vector(su.charge, su.lam);
      const FockVector v = basis_vector(sv.charge, sv.lam);
      const Complex lhs = inner(apply_gamma(-1, t, u, c), v);
      const Complex rhs = inner(u, apply_gamma(1, t, v, c));
      audit.max_residual = std::max(audit.max_residual, std::abs(lhs - rhs));
      audit.cases_checked += 1;
    }
  return audit;
}

OperatorAudit check_vertex_commutation(const ParamSeq& t, const ParamSeq& tp,
                                       const Cutoffs& c) {
  OperatorAudit audit{"vertex_commutation", 0.0, 0};
  const Complex Z = z_norm(t, tp);
  // the Gamma_+ Gamma_- side loses intermediates above the energy cap,
  // so run with headroom and compare only dominated targets
  Cutoffs wide = c;
  wide.e_max = std::min(14, c.e_max + 2);
  const int e_limit = std::max(2, c.e_max - 6);
  const auto states = basis_up_to(std::min(3, c.e_max), -1, 1);
  for (const BasisState& s : states) {
    const FockVector v = basis_vector(s.charge, s.lam);
    FockVector lhs = apply_gamma(1, t, apply_gamma(-1, tp, v, wide), wide);
    FockVector rhs = apply_gamma(-1, tp, apply_gamma(1, t, v, wide), wide);
    rhs.scale(Z);
    audit.max_residual =
        std::max(audit.max_residual, max_coeff_diff(lhs, rhs, e_limit));
    audit.cases_checked += 1;
  }
  return audit;
}

OperatorAudit check_psi_commutation(const SigmaWeight& sigma,
                                    const Cutoffs& c) {
  // Psi = sum_k psi_k x psi*_k against A_sigma x A_sigma on pair states
  OperatorAudit audit{"psi_commutation", 0.0, 0};
  const auto states = basis_up_to(std::min(3, c.e_max), -1, 1);
  const int depth = 48;
  Cutoffs wide = c;
  wide.n_max = c.n_max + 2;
  for (const BasisState& s1 : states)
    for (const BasisState& s2 : states) {
      const FockVector u1 = basis_vector(s1.charge, s1.lam);
      const FockVector u2 = basis_vector(s2.charge, s2.lam);
      // admissible k: occupied in u2, free in u1
      const int tlo =
          2 * std::min(s1.charge - s1.lam.length(),
                       s2.charge - s2.lam.length()) -
          3;
      const int thi = 2 * (std::max(s1.charge + s1.lam.part(1),
                                    s2.charge + s2.lam.part(1)) +
                           2) +
                      3;
      for (int tk = tlo; tk <= thi; tk += 2) {
        const HalfInt k{tk};
        // order 1: (A x A) Psi
        FockVector a1 = apply_psi(k, u1, wide);
        FockVector b1 = apply_psi_star(k, u2, wide);
        FockVector a1s = apply_a_sigma(sigma, a1, depth, wide);
        FockVector b1s = apply_a_sigma(sigma, b1, depth, wide);
        // order 2: Psi (A x A)
        FockVector a2 =
            apply_psi(k, apply_a_sigma(sigma, u1, depth, wide), wide);
        FockVector b2 =
            apply_psi_star(k, apply_a_sigma(sigma, u2, depth, wide), wide);
        // tensor terms are rank one here, compare coefficient products
        for (auto& [ka, va] : a1s.terms())
          for (auto& [kb, vb] : b1s.terms()) {
            const BasisState sa = BasisState::unpack(ka);
            const BasisState sb = BasisState::unpack(kb);
            const Complex other =
                a2.coeff(sa) * b2.coeff(sb);
            audit.max_residual =
                std::max(audit.max_residual, std::abs(va * vb - other));
          }
        for (auto& [ka, va] : a2.terms())
          for (auto& [kb, vb] : b2.terms()) {
            const BasisState sa = BasisState::unpack(ka);
            const BasisState sb = BasisState::unpack(kb);
            const Complex other = a1s.coeff(sa) * b1s.coeff(sb);
            audit.max_residual =
                std::max(audit.max_residual, std::abs(va * vb - other));
          }
        audit.cases_checked += 1;
      }
    }
  return audit;
}

namespace {

ParamSeq brace_seq(Complex z, int len) {
  // {z} = (z, z^2/2, z^3/3, ...) truncated; exact on the cutoff space
  std::vector<std::pair<int, Complex>> e;
  Complex p(1.0);
  for (int n = 1; n <= len; ++n) {
    p *= z;
    e.emplace_back(n, p / static_cast<double>(n));
  }
  return ParamSeq::from_pairs(std::move(e));
}

Complex cpow(Complex z, HalfInt k) { return std::pow(z, k.value()); }

}  // namespace

OperatorAudit check_boson_fermion(const std::vector<Complex>& z_samples,
                                  const Cutoffs& c) {
  OperatorAudit audit{"boson_fermion", 0.0, 0};
  Cutoffs wide = c;
  wide.n_max = c.n_max + 2;
  const auto states = basis_up_to(std::min(3, c.e_max), -1, 1);
  for (Complex z : z_samples) {
    const ParamSeq plus_brace = brace_seq(z, c.e_max + 2);
    const ParamSeq minus_brace_inv = -brace_seq(1.0 / z, c.e_max + 2);
    const ParamSeq minus_brace = -brace_seq(z, c.e_max + 2);
    const ParamSeq plus_brace_inv = brace_seq(1.0 / z, c.e_max + 2);
    for (const BasisState& s : states) {
      const FockVector u = basis_vector(s.charge, s.lam);

      // psi(z) = sum_k psi_k z^k directly; removals reach e_max deep
      FockVector direct;
      const int tlo = 2 * (s.charge - s.lam.length() - c.e_max) - 3;
      const int thi = 2 * (s.charge + s.lam.part(1) + c.e_max) + 3;
      for (int tk = tlo; tk <= thi; tk += 2) {
        FockVector p = apply_psi(HalfInt(tk), u, wide);
        p.scale(cpow(z, HalfInt(tk)));
        direct.accumulate(p);
      }
      // z^{C - 1/2} R Gamma_-({z}) Gamma_+(-{z^{-1}}); the printed form
      // without the -1/2 is off by z^{1/2} on every matrix element
      FockVector w = apply_gamma(1, minus_brace_inv, u, wide);
      w = apply_gamma(-1, plus_brace, w, wide);
      w = apply_shift(1, w, wide);
      FockVector viaop;
      for (auto& [key, amp] : w.terms()) {
        const BasisState bs = BasisState::unpack(key);
        viaop.add(bs, amp * std::pow(z, bs.charge - 0.5));
      }
      audit.max_residual = std::max(
          audit.max_residual, max_coeff_diff(direct, viaop, c.e_max - 4));

      // psi*(z) = sum_k psi*_k z^{-k}
      FockVector direct2;
      for (int tk = tlo; tk <= thi; tk += 2) {
        FockVector p = apply_psi_star(HalfInt(tk), u, wide);
        p.scale(cpow(z, -HalfInt(tk)));
        direct2.accumulate(p);
      }
      // R^{-1} z^{1/2 - C} Gamma_-(-{z}) Gamma_+({z^{-1}})
      FockVector w2 = apply_gamma(1, plus_brace_inv, u, wide);
      w2 = apply_gamma(-1, minus_brace, w2, wide);
      FockVector scaled;
      for (auto& [key, amp] : w2.terms()) {
        const BasisState bs = BasisState::unpack(key);
        scaled.add(bs, amp * std::pow(z, 0.5 - bs.charge));
      }
      FockVector viaop2 = apply_shift(-1, scaled, wide);
      audit.max_residual = std::max(
          audit.max_residual, max_coeff_diff(direct2, viaop2, c.e_max - 4));
      audit.cases_checked += 2;
    }
  }
  return audit;
}

OperatorAudit check_alpha_psi_commutation(const std::vector<Complex>& zs,
                                          const Cutoffs& c) {
  OperatorAudit audit{"alpha_psi_commutation", 0.0, 0};
  Cutoffs wide = c;
  wide.n_max = c.n_max + 2;
  const auto states = basis_up_to(std::min(3, c.e_max), -1, 1);
  for (Complex z : zs)
    for (int n = -2; n <= 2; ++n) {
      if (n == 0) continue;
      for (const BasisState& s : states) {
        const FockVector u = basis_vector(s.charge, s.lam);
        auto psi_z = [&](const FockVector& x) {
          FockVector acc;
          const int tlo = 2 * (s.charge - s.lam.length() - std::abs(n)) - 5;
          const int thi =
              2 * (s.charge + s.lam.part(1) + c.e_max + std::abs(n)) + 5;
          for (int tk = tlo; tk <= thi; tk += 2) {
            FockVector p = apply_psi(HalfInt(tk), x, wide);
            p.scale(cpow(z, HalfInt(tk)));
            acc.accumulate(p);
          }
          return acc;
        };
        FockVector lhs = apply_alpha(n, psi_z(u), wide);
        FockVector sub = psi_z(apply_alpha(n, u, wide));
        sub.scale(Complex(-1.0));
        lhs.accumulate(sub);
        FockVector rhs = psi_z(u);
        rhs.scale(std::pow(z, n));
        audit.max_residual = std::max(
            audit.max_residual,
            max_coeff_diff(lhs, rhs, c.e_max - std::abs(n) - 2));
        audit.cases_checked += 1;
      }
    }
  return audit;
}

std::vector<OperatorAudit> full_audit(const Cutoffs& c) {
  std::vector<OperatorAudit> out;
  out.push_back(check_anticommutation(c));
  out.push_back(check_projectors(c));
  out.push_back(check_alpha_commutation(c));
  out.push_back(check_charge_kernel(c));
  out.push_back(check_gamma_adjoint(ParamSeq{0.3, -0.1}, c));
  out.push_back(check_vertex_commutation(ParamSeq{0.5}, ParamSeq{0.5}, c));
  out.push_back(check_psi_commutation(SigmaWeight::indicator_positive(), c));
  out.push_back(check_boson_fermion({Complex(0.3), Complex(0.2, 0.1)}, c));
  out.push_back(check_alpha_psi_commutation({Complex(0.3)}, c));
  return out;
}

}  // namespace schurtau::fock
