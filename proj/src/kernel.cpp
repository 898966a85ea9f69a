#include "schurtau/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace schurtau {

KernelContext KernelContext::make(const SeriesSpec& t, const SeriesSpec& tp,
                                  const SigmaWeight& sigma, int jrange) {
  KernelContext ctx;
  ctx.sigma = sigma;
  ctx.jrange = jrange;
  ctx.jpos = j_coeffs(t, tp, jrange);
  ctx.jneg = j_coeffs(t.negated(), tp.negated(), jrange);

  ctx.brange = jrange + 96;
  ctx.abs_pos.resize(2 * ctx.brange + 1);
  ctx.abs_neg.resize(2 * ctx.brange + 1);
  for (int m = -ctx.brange; m <= ctx.brange; ++m) {
    ctx.abs_pos[m + ctx.brange] = ctx.jpos.bound_abs(m);
    ctx.abs_neg[m + ctx.brange] = ctx.jneg.bound_abs(m);
  }

  ctx.tk_lo = -(2 * ctx.brange - 1);
  ctx.tk_hi = 2 * ctx.brange - 1;
  ctx.sig_abs.resize(static_cast<std::size_t>((ctx.tk_hi - ctx.tk_lo) / 2 + 1));
  for (int tk = ctx.tk_lo; tk <= ctx.tk_hi; tk += 2)
    ctx.sig_abs[(tk - ctx.tk_lo) / 2] = std::abs(sigma(HalfInt(tk)));
  ctx.sig_tail_lo = sigma.negative_tail_sum(ctx.tk_lo - 2);
  switch (sigma.kind()) {
    case SigmaWeight::Kind::Table:
      ctx.sig_cap = 0.0;
      break;
    case SigmaWeight::Kind::PaperForm:
      ctx.sig_cap = 1.0 / (1.0 - sigma.u());
      break;
    default:
      ctx.sig_cap = 1.0;
      break;
  }
  return ctx;
}

double KernelContext::sig_abs_at(int tk) const {
  if (tk >= tk_lo && tk <= tk_hi) return sig_abs[(tk - tk_lo) / 2];
  return tk < tk_lo ? sig_tail_lo : sig_cap;
}

double KernelContext::abs_pos_at(int m) const {
  if (m >= -brange && m <= brange) return abs_pos[m + brange];
  return jpos.bound_abs(m);
}

double KernelContext::abs_neg_at(int m) const {
  if (m >= -brange && m <= brange) return abs_neg[m + brange];
  return jneg.bound_abs(m);
}

double KernelContext::d_plus(HalfInt x) const {
  // sum over tabulated sigma values plus geometric closure on both ends
  double s = 0.0;
  for (int tk = tk_lo; tk <= tk_hi; tk += 2) {
    const int m = (x.twice() + tk) / 2;
    const double a = abs_pos_at(m);
    s += sig_abs[(tk - tk_lo) / 2] * a * a;
  }
  const double beyond = jpos.tail_sum_above(brange / 2);
  s += (sig_tail_lo + sig_cap) * beyond * beyond;
  return s;
}

double KernelContext::d_minus(HalfInt y) const {
  double s = 0.0;
  for (int tk = tk_lo; tk <= tk_hi; tk += 2) {
    const int m = (-y.twice() - tk) / 2;
    const double a = abs_neg_at(m);
    s += sig_abs[(tk - tk_lo) / 2] * a * a;
  }
  const double beyond = jneg.tail_sum_above(brange / 2);
  s += (sig_tail_lo + sig_cap) * beyond * beyond;
  return s;
}

KernelEntry kernel_entry(const KernelContext& ctx, HalfInt x, HalfInt y,
                         int cutoff) {
  Complex acc(0.0);
  for (int tk = -(2 * cutoff - 1); tk <= 2 * cutoff - 1; tk += 2) {
    const double sv = ctx.sigma(HalfInt(tk));
    if (sv == 0.0) continue;
    const int ip = (x.twice() + tk) / 2;   // x + k, an integer
    const int in = (-y.twice() - tk) / 2;  // -y - k
    acc += sv * ctx.jpos.at(ip) * ctx.jneg.at(in);
  }

  // |k| >= cutoff leftovers, evaluated against the decay model
  double res = 0.0;
  for (int tk = 2 * cutoff + 1; tk <= 2 * cutoff + 255; tk += 2) {
    res += ctx.sig_abs_at(tk) * ctx.abs_pos_at((x.twice() + tk) / 2) *
           ctx.abs_neg_at((-y.twice() - tk) / 2);
    res += ctx.sig_abs_at(-tk) * ctx.abs_pos_at((x.twice() - tk) / 2) *
           ctx.abs_neg_at((-y.twice() + tk) / 2);
  }
  // geometric closure past the scan, plus inner-sum truncation of J itself
  const int far = cutoff + 128;
  res += ctx.sig_cap * ctx.jpos.tail_sum_above(far + x.twice() / 2) *
         std::max(1.0, ctx.jneg.decay_C);
  res += ctx.sigma.negative_tail_sum(-2 * far) *
         ctx.jpos.bound_abs(x.twice() / 2 - far) *
         std::max(1.0, ctx.jneg.decay_C);
  res += (ctx.jpos.tail_err + ctx.jneg.tail_err);
  return {acc, res};
}

KernelMatrix kernel_matrix(const KernelContext& ctx, int n, int M,
                           int cutoff) {
  if (M < 1) throw std::invalid_argument("kernel_matrix: M must be positive");
  KernelMatrix km;
  km.n = n;
  km.entries.resize(M, M);
  km.entry_residual = 0.0;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      const KernelEntry e =
          kernel_entry(ctx, km.site(i), km.site(j), cutoff);
      km.entries(i, j) = e.value;
      km.entry_residual += e.residual;
    }

  // Cauchy-Schwarz column/row masses; sqrt(D) decays geometrically to the
  // right, which is the only discarded direction here.
  const int ext = 64;
  std::vector<double> sp(M + ext), sm(M + ext);
  for (int i = 0; i < M + ext; ++i) {
    const HalfInt x(2 * n + 2 * i + 1);
    sp[i] = std::sqrt(std::max(0.0, ctx.d_plus(x)));
    sm[i] = std::sqrt(std::max(0.0, ctx.d_minus(x)));
  }
  auto tail_close = [](const std::vector<double>& v) {
    // geometric continuation with a conservatively slow ratio
    const double last = v.back();
    const double prev = v[v.size() - 2];
    double r = prev > 0.0 ? std::min(0.95, last / prev) : 0.0;
    return last * r / std::max(1e-12, 1.0 - r);
  };
  double win_p = 0.0, win_m = 0.0, out_p = tail_close(sp), out_m = tail_close(sm);
  double win_p2 = 0.0, win_m2 = 0.0;
  for (int i = 0; i < M; ++i) {
    win_p += sp[i];
    win_m += sm[i];
    win_p2 += sp[i] * sp[i];
    win_m2 += sm[i] * sm[i];
  }
  for (int i = M; i < M + ext; ++i) {
    out_p += sp[i];
    out_m += sm[i];
  }
  km.tail_bound = out_p * (win_m + out_m) + win_p * out_m;
  // trace norm through |K|_1 <= |H sqrt(sigma)|_F |sqrt(sigma) Hcheck|_F
  km.hs_win = std::sqrt(win_p2 * win_m2);
  double full_p2 = win_p2, full_m2 = win_m2;
  for (int i = M; i < M + ext; ++i) {
    full_p2 += sp[i] * sp[i];
    full_m2 += sm[i] * sm[i];
  }
  full_p2 += tail_close(sp) * sp.back();
  full_m2 += tail_close(sm) * sm.back();
  km.hs_full = std::sqrt(full_p2 * full_m2);
  return km;
}

KernelEntry kernel_entry(const ParamSeq& t, const ParamSeq& tp,
                         const SigmaWeight& sigma, HalfInt x, HalfInt y,
                         int cutoff) {
  const int need =
      std::max(std::abs(x.twice()), std::abs(y.twice())) / 2 + cutoff + 4;
  const KernelContext ctx =
      KernelContext::make(SeriesSpec(t), SeriesSpec(tp), sigma, need);
  return kernel_entry(ctx, x, y, cutoff);
}

KernelMatrix kernel_matrix(const ParamSeq& t, const ParamSeq& tp,
                           const SigmaWeight& sigma, int n, int M,
                           int cutoff) {
  const int need = std::abs(n) + M + cutoff + 70;
  const KernelContext ctx =
      KernelContext::make(SeriesSpec(t), SeriesSpec(tp), sigma, need);
  return kernel_matrix(ctx, n, M, cutoff);
}

}  // namespace schurtau
