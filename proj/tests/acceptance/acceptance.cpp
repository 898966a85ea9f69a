// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances and budgets are pinned here, not configurable.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "schurtau/fock.hpp"
#include "schurtau/hirota.hpp"
#include "schurtau/measures.hpp"

using namespace schurtau;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int id, bool pass, const std::string& what, double secs) {
  std::printf("[%s] criterion %d: %s  (%.1f s)\n", pass ? "PASS" : "FAIL", id,
              what.c_str(), secs);
  if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

SigmaWeight random_table(std::mt19937& rng) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::map<int, double> vals;
  for (int tk = -7; tk <= 7; tk += 2) vals[tk] = U(rng);
  return SigmaWeight::table(std::move(vals));
}

void criterion1() {
  Timer tm;
  const ParamSeq t{0.3, 0.1};
  Complex sum(0.0);
  for (const auto& lam : enumerate_partitions(12)) {
    const Complex s = schur_value(lam, t);
    sum += s * s;
  }
  const double err = std::abs(sum - z_norm(t, t));
  const double secs = tm.secs();
  report(1, err <= 1e-8 && secs < 30.0,
         fmt("cauchy normalization |sum - Z| = %.3e <= 1e-8", err), secs);
}

void criterion2() {
  Timer tm;
  const ParamSeq t{0.5};
  const std::vector<int> sites = {-5, -3, -1, 1, 3, 5};
  // brute-force weights cached once
  const MeasureTable tab = schur_table(t, t, 16);
  const KernelContext ctx = KernelContext::make(
      SeriesSpec(t), SeriesSpec(t), SigmaWeight::indicator_positive(), 80);
  double worst = 0.0;
  int cases = 0;
  auto run_set = [&](const std::vector<int>& tw) {
    std::vector<HalfInt> X;
    for (int v : tw) X.push_back(HalfInt(v));
    Complex bf(0.0);
    for (auto& [lam, w] : tab.entries) {
      bool all = true;
      for (auto& x : X)
        if (!config_contains(lam, 0, x)) {
          all = false;
          break;
        }
      if (all) bf += w;
    }
    const int m = static_cast<int>(X.size());
    Eigen::MatrixXcd K(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        K(i, j) = kernel_entry(ctx, X[i], X[j], 48).value;
    const Complex det = m == 0 ? Complex(1.0) : K.determinant();
    worst = std::max(worst, std::abs(bf - det));
    ++cases;
  };
  run_set({});
  for (std::size_t i = 0; i < sites.size(); ++i) {
    run_set({sites[i]});
    for (std::size_t j = i + 1; j < sites.size(); ++j)
      run_set({sites[i], sites[j]});
  }
  report(2, worst <= 1e-6,
         fmt("correlation vs kernel minors, %d sets, worst |diff| = %.3e <= 1e-6",
             cases, worst),
         tm.secs());
}

// shared by criteria 3 and 4
struct MultStatCase {
  SigmaWeight sigma;
  int n;
};

std::vector<MultStatCase> grid20x5() {
  std::mt19937 rng(20250808);
  std::vector<MultStatCase> out;
  for (int rep = 0; rep < 20; ++rep) {
    const SigmaWeight sg = random_table(rng);
    for (int n = -2; n <= 2; ++n) out.push_back({sg, n});
  }
  return out;
}

void criterion3(const std::vector<MultStatCase>& grid,
                std::vector<TauValue>& taus_out) {
  Timer tm;
  const ParamSeq t{0.5};
  const Complex Z = z_norm(t, t);
  double worst = 0.0;
  for (const auto& c : grid) {
    const TauValue tv = tau_n(t, t, c.sigma, c.n);
    taus_out.push_back(tv);
    const Complex e = mult_stat_expectation(c.sigma, c.n, t, t, 16);
    worst = std::max(worst, std::abs(tv.value - Z * e));
  }
  report(3, worst <= 1e-6,
         fmt("multiplicative statistic: %zu cases, worst |tau - Z E_bf| = %.3e <= 1e-6",
             grid.size(), worst),
         tm.secs());
}

void criterion4(const std::vector<MultStatCase>& grid) {
  Timer tm;
  const ParamSeq t{0.5};
  const fock::Cutoffs fc{12, 4};
  double worst_same = 0.0, worst_opp = 0.0;
  for (const auto& c : grid) {
    const Complex f = fock::fock_tau(t, t, c.sigma, c.n, fc);
    worst_same = std::max(worst_same,
                          std::abs(f - tau_n(t, t, c.sigma, c.n).value));
    worst_opp = std::max(worst_opp,
                         std::abs(f - tau_n(t, t, c.sigma, -c.n).value));
  }
  const bool opp = worst_opp <= 1e-8, same = worst_same <= 1e-8;
  const char* verdict =
      (opp && !same) ? "fock_tau(n) = tau(-n)"
                     : ((same && !opp) ? "fock_tau(n) = tau(n)" : "unresolved");
  report(4, opp != same,
         fmt("wedge matrix coefficient: verdict \"%s\" uniform over %zu cases "
             "(disc at -n: %.2e, at +n: %.2e)",
             verdict, grid.size(), worst_opp, worst_same),
         tm.secs());
}

void criterion5(std::vector<HirotaCase>& cases_out) {
  Timer tm;
  const ParamSeq t{0.5};
  const ParamSeq s{0.07, 0.04};
  const ParamSeq sp{-0.05, 0.06};
  std::mt19937 rng(777);
  const std::vector<SigmaWeight> sigmas = {SigmaWeight::zero(),
                                           SigmaWeight::indicator_positive(),
                                           random_table(rng)};
  double worst = 0.0;
  for (const SigmaWeight& sg : sigmas)
    for (int m = -1; m <= 1; ++m)
      for (int l = -1; l <= 1; ++l) {
        HirotaCase c;
        c.m = m;
        c.l = l;
        c.s = s;
        c.sp = sp;
        c.t = t;
        c.tp = t;
        c.sigma = sg;
        c.rho = 0.3;
        c.P = 64;
        c = hirota_residual(c);
        worst = std::max(worst, c.residual);
        cases_out.push_back(std::move(c));
      }
  const double secs = tm.secs();
  report(5, worst <= 1e-6 && secs < 600.0,
         fmt("bilinear residual suite: 27 cases, max residual = %.3e <= 1e-6",
             worst),
         secs);
}

void criterion6() {
  Timer tm;
  const fock::Cutoffs fc{12, 4};
  const auto anti = fock::check_anticommutation(fc);
  const auto proj = fock::check_projectors(fc);
  const auto alpha = fock::check_alpha_commutation(fc);
  const auto bf =
      fock::check_boson_fermion({Complex(0.3), Complex(0.15, 0.26)}, fc);
  const auto vc =
      fock::check_vertex_commutation(ParamSeq{0.5}, ParamSeq{0.5}, fc);
  const bool pass = anti.max_residual <= 1e-13 && proj.max_residual <= 1e-13 &&
                    alpha.max_residual <= 1e-12 && bf.max_residual <= 1e-9 &&
                    vc.max_residual <= 1e-10;
  report(6, pass,
         fmt("operator audits: anticomm %.1e, projectors %.1e, alpha %.1e, "
             "boson-fermion %.1e, vertex %.1e",
             anti.max_residual, proj.max_residual, alpha.max_residual,
             bf.max_residual, vc.max_residual),
         tm.secs());
}

void criterion7() {
  Timer tm;
  const double u = 0.4;
  const ParamSeq tt{0.2};
  const ParamSeq t = tt.scaled(Complex(1.0 / (1.0 - u)));
  const std::vector<std::vector<HalfInt>> Xs = {{HalfInt(1)},
                                                {HalfInt(1), HalfInt(3)}};
  const std::vector<std::pair<std::string, SigmaWeight>> cands = {
      {"fermi", SigmaWeight::fermi(u)},
      {"paper_form", SigmaWeight::paper_form(u)}};
  bool within10[2] = {true, true}, within12[2] = {true, true};
  double disc10[2] = {0, 0};
  for (const auto& X : Xs) {
    const double bf10 = finite_temp_correlation_bruteforce(X, u, tt, tt, 10, 6);
    const double bf12 = finite_temp_correlation_bruteforce(X, u, tt, tt, 12, 6);
    for (int ci = 0; ci < 2; ++ci) {
      const int m = static_cast<int>(X.size());
      const KernelContext ctx = KernelContext::make(
          SeriesSpec(t), SeriesSpec(t), cands[ci].second, 80);
      Eigen::MatrixXcd K(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          K(i, j) = kernel_entry(ctx, X[i], X[j], 48).value;
      const double det = K.determinant().real();
      disc10[ci] = std::max(disc10[ci], std::abs(bf10 - det));
      within10[ci] = within10[ci] && std::abs(bf10 - det) <= 1e-4;
      within12[ci] = within12[ci] && std::abs(bf12 - det) <= 1e-4;
    }
  }
  const int n10 = int(within10[0]) + int(within10[1]);
  const int n12 = int(within12[0]) + int(within12[1]);
  const bool pass = n10 == 1;  // the stated gate: budget N = 10
  std::string msg = fmt(
      "sigma_u adjudication at stated budget N=10: fermi disc %.2e, "
      "paper_form disc %.2e vs gate 1e-4",
      disc10[0], disc10[1]);
  if (!pass && n12 == 1)
    msg += fmt("; at the max in-contract budget N=12 exactly one candidate "
               "matches: %s (verdict)",
               within12[0] ? "fermi" : "paper_form");
  report(7, pass, msg, tm.secs());
}

void criterion8() {
  Timer tm;
  const ParamSeq t{0.5};
  const LaurentWindow w = j_coeffs(SeriesSpec(t), SeriesSpec(t), 16);
  double worst = 0.0;
  for (int k = -10; k <= 10; ++k) {
    // independent Bessel power series at x = 2 sqrt(theta) = 1
    double oracle = 0.0;
    for (int m = std::max(0, -k); m < 60; ++m) {
      double term = (m % 2 == 0) ? 1.0 : -1.0;
      for (int i = 1; i <= m; ++i) term *= 0.5 / i;
      for (int i = 1; i <= k + m; ++i) term *= 0.5 / i;
      oracle += term;
    }
    worst = std::max(worst, std::abs(w.at(k) - oracle));
  }
  report(8, worst <= 1e-10,
         fmt("bessel cross-check |k| <= 10, worst |diff| = %.3e <= 1e-10",
             worst),
         tm.secs());
}

void criterion9(const std::vector<MultStatCase>& grid,
                const std::vector<TauValue>& taus3,
                const std::vector<HirotaCase>& cases5) {
  Timer tm;
  const ParamSeq t{0.5};
  double worst_ratio = 0.0;
  long checked = 0;
  bool ok = true;
  // criterion 3/4 taus at both signs of n: refine M and cutoff
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const TauValue fine =
        tau_n(t, t, grid[i].sigma, grid[i].n, 2 * kDefaultDim,
              2 * kDefaultCutoff);
    const double delta = std::abs(taus3[i].value - fine.value);
    ok = ok && delta < std::max(taus3[i].truncation_bound, 1e-300);
    worst_ratio = std::max(worst_ratio,
                           delta / std::max(taus3[i].truncation_bound, 1e-300));
    const TauValue coarse_opp = tau_n(t, t, grid[i].sigma, -grid[i].n);
    const TauValue fine_opp =
        tau_n(t, t, grid[i].sigma, -grid[i].n, 2 * kDefaultDim,
              2 * kDefaultCutoff);
    const double delta_opp = std::abs(coarse_opp.value - fine_opp.value);
    ok = ok && delta_opp < std::max(coarse_opp.truncation_bound, 1e-300);
    checked += 2;
  }
  // criterion 5 taus: every sampled tau of every case, both sides
  for (const HirotaCase& c : cases5) {
    const bool allow = !c.sigma.in_unit_interval();
    const ParamSeq tps = c.t + c.s, tms = c.t - c.s;
    const ParamSeq tpsp = c.tp + c.sp, tpsm = c.tp - c.sp;
    for (int j = 0; j < c.P; ++j) {
      const double th = 2.0 * std::numbers::pi * j / c.P;
      const Complex z = c.rho * Complex(std::cos(th), std::sin(th));
      const struct {
        ParamSeq a, b;
        int n;
        ShiftSlot slot;
      } specs[4] = {
          {tps, tpsp, c.m + 1, ShiftSlot::TPrimeMinus},
          {tms, tpsm, c.l, ShiftSlot::TPrimePlus},
          {tps, tpsp, c.m, ShiftSlot::TPlus},
          {tms, tpsm, c.l + 1, ShiftSlot::TMinus},
      };
      for (const auto& sp : specs) {
        const TauValue coarse = tau_shifted(sp.a, sp.b, c.sigma, sp.n, z,
                                            sp.slot, kDefaultDim,
                                            kDefaultCutoff, allow);
        const TauValue fine = tau_shifted(sp.a, sp.b, c.sigma, sp.n, z,
                                          sp.slot, 2 * kDefaultDim,
                                          2 * kDefaultCutoff, allow);
        const double delta = std::abs(coarse.value - fine.value);
        ok = ok && delta < std::max(coarse.truncation_bound, 1e-300);
        worst_ratio = std::max(
            worst_ratio, delta / std::max(coarse.truncation_bound, 1e-300));
        ++checked;
      }
    }
  }
  report(9, ok,
         fmt("truncation honesty: %ld tau refinements, worst |delta|/bound = "
             "%.3e < 1",
             checked, worst_ratio),
         tm.secs());
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion1();
  criterion2();
  const auto grid = grid20x5();
  std::vector<TauValue> taus3;
  criterion3(grid, taus3);
  criterion4(grid);
  std::vector<HirotaCase> cases5;
  criterion5(cases5);
  criterion6();
  criterion7();
  criterion8();
  criterion9(grid, taus3, cases5);
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
