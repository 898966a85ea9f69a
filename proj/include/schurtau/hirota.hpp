#ifndef SCHURTAU_HIROTA_HPP
#define SCHURTAU_HIROTA_HPP

#include <vector>

#include "schurtau/fredholm.hpp"

namespace schurtau {

enum class ShiftSlot { None, TPlus, TMinus, TPrimePlus, TPrimeMinus };

// tau_n with one argument displaced by +-{z0}; z0 = 0 or slot None
// reproduces tau_n through the identical code path.
TauValue tau_shifted(const ParamSeq& t, const ParamSeq& tp,
                     const SigmaWeight& sigma, int n, Complex z0,
                     ShiftSlot slot, int M = kDefaultDim,
                     int cutoff = kDefaultCutoff,
                     bool allow_nonstandard = false);

struct HirotaCase {
  int m = 0, l = 0;
  ParamSeq s, sp;   // auxiliary directions
  ParamSeq t, tp;   // base Miwa times
  SigmaWeight sigma = SigmaWeight::zero();
  double rho = 0.3;
  int P = 64;

  // filled by hirota_residual
  Complex lhs{}, rhs{};
  double residual = -1.0;
  int P_used = 0;
  double extraction_gap = 0.0;  // |coeff(P) - coeff(P/2)| at acceptance
};

// Evaluates both sides of the bilinear identity by sampling the full
// z-dependent products on |z| = rho and extracting the stated Laurent
// coefficients.  P doubles until two successive extractions agree to
// agree_tol (or max_P is hit).
HirotaCase hirota_residual(HirotaCase c, int M = kDefaultDim,
                           int cutoff = kDefaultCutoff,
                           double agree_tol = 1e-9, int max_P = 512);

// m, l over a small grid crossed with a list of sigmas.
std::vector<HirotaCase> hirota_suite(const ParamSeq& t, const ParamSeq& tp,
                                     const ParamSeq& s, const ParamSeq& sp,
                                     const std::vector<SigmaWeight>& sigmas,
                                     const std::vector<int>& ms,
                                     const std::vector<int>& ls,
                                     double rho = 0.3, int P = 64,
                                     int M = kDefaultDim,
                                     int cutoff = kDefaultCutoff);

}  // namespace schurtau

#endif
