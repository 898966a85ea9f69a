#include "schurtau/hirota.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace schurtau {

TauValue tau_shifted(const ParamSeq& t, const ParamSeq& tp,
                     const SigmaWeight& sigma, int n, Complex z0,
                     ShiftSlot slot, int M, int cutoff,
                     bool allow_nonstandard) {
  SeriesSpec st(t), stp(tp);
  if (z0 != Complex(0.0)) {
    switch (slot) {
      case ShiftSlot::None:
        break;
      case ShiftSlot::TPlus:
        st = st.shifted(z0, +1);
        break;
      case ShiftSlot::TMinus:
        st = st.shifted(z0, -1);
        break;
      case ShiftSlot::TPrimePlus:
        stp = stp.shifted(z0, +1);
        break;
      case ShiftSlot::TPrimeMinus:
        stp = stp.shifted(z0, -1);
        break;
    }
  }
  return tau_n(st, stp, sigma, n, M, cutoff, allow_nonstandard);
}

namespace {

int thread_budget() {
  if (const char* env = std::getenv("SCHURTAU_THREADS")) {
    const int k = std::atoi(env);
    if (k >= 1) return k;
  }
  return static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
}

// deterministic parallel map: slot j gets exactly sample j
template <typename Fn>
std::vector<Complex> sample_circle(int P, double rho, const Fn& fn) {
  std::vector<Complex> out(P);
  const int workers = std::min(thread_budget(), P);
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  auto body = [&]() {
    for (;;) {
      const int j = next.fetch_add(1);
      if (j >= P) return;
      const double th = 2.0 * std::numbers::pi * j / P;
      out[j] = fn(rho * Complex(std::cos(th), std::sin(th)));
    }
  };
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

HirotaCase hirota_residual(HirotaCase c, int M, int cutoff, double agree_tol,
                           int max_P) {
  // The bilinear identity satisfied by tau_n as defined here carries the
  // opposite displacement signs from the n <-> -n convention of the
  // wedge embedding: the familiar form holds verbatim for n -> tau_{-n},
  // and rewriting it for tau_n flips every {z} shift and both gamma
  // prefactor arguments.  Both readings were separated numerically; the
  // flipped one is exact, the other leaves O(s^2) residuals.
  const bool allow = !c.sigma.in_unit_interval();
  const ParamSeq t_plus = c.t + c.s;
  const ParamSeq t_minus = c.t - c.s;
  const ParamSeq tp_plus = c.tp + c.sp;
  const ParamSeq tp_minus = c.tp - c.sp;
  const ParamSeq p2sp = c.sp.scaled(Complex(2.0));
  const ParamSeq m2s = c.s.scaled(Complex(-2.0));

  auto lhs_fn = [&](Complex z) {
    const Complex pre = gamma_eval(1.0 / z, p2sp);
    const Complex a = tau_shifted(t_plus, tp_plus, c.sigma, c.m + 1, z,
                                  ShiftSlot::TPrimeMinus, M, cutoff, allow)
                          .value;
    const Complex b = tau_shifted(t_minus, tp_minus, c.sigma, c.l, z,
                                  ShiftSlot::TPrimePlus, M, cutoff, allow)
                          .value;
    return pre * a * b;
  };
  auto rhs_fn = [&](Complex z) {
    const Complex pre = gamma_eval(1.0 / z, m2s);
    const Complex a = tau_shifted(t_plus, tp_plus, c.sigma, c.m, z,
                                  ShiftSlot::TPlus, M, cutoff, allow)
                          .value;
    const Complex b = tau_shifted(t_minus, tp_minus, c.sigma, c.l + 1, z,
                                  ShiftSlot::TMinus, M, cutoff, allow)
                          .value;
    return pre * a * b;
  };

  int P = std::max(c.P, 4 * (std::abs(c.l - c.m) + 1));
  Complex lhs_prev{}, rhs_prev{};
  bool have_prev = false;
  for (;; P *= 2) {
    const std::vector<Complex> ls = sample_circle(P, c.rho, lhs_fn);
    const std::vector<Complex> rs = sample_circle(P, c.rho, rhs_fn);
    c.lhs = coeff_from_samples(ls, c.l - c.m, c.rho);
    c.rhs = coeff_from_samples(rs, c.m - c.l, c.rho);
    c.P_used = P;
    if (have_prev) {
      c.extraction_gap =
          std::max(std::abs(c.lhs - lhs_prev), std::abs(c.rhs - rhs_prev));
      if (c.extraction_gap <= agree_tol) break;
    }
    lhs_prev = c.lhs;
    rhs_prev = c.rhs;
    have_prev = true;
    if (2 * P > max_P) break;
  }
  c.residual = std::abs(c.lhs - c.rhs);
  return c;
}

std::vector<HirotaCase> hirota_suite(const ParamSeq& t, const ParamSeq& tp,
                                     const ParamSeq& s, const ParamSeq& sp,
                                     const std::vector<SigmaWeight>& sigmas,
                                     const std::vector<int>& ms,
                                     const std::vector<int>& ls, double rho,
                                     int P, int M, int cutoff) {
  std::vector<HirotaCase> out;
  for (const SigmaWeight& sg : sigmas)
    for (int m : ms)
      for (int l : ls) {
        HirotaCase c;
        c.m = m;
        c.l = l;
        c.s = s;
        c.sp = sp;
        c.t = t;
        c.tp = tp;
        c.sigma = sg;
        c.rho = rho;
        c.P = P;
        out.push_back(hirota_residual(std::move(c), M, cutoff));
      }
  return out;
}

}  // namespace schurtau
