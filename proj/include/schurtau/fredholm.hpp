#ifndef SCHURTAU_FREDHOLM_HPP
#define SCHURTAU_FREDHOLM_HPP

#include <string>

#include "schurtau/kernel.hpp"

namespace schurtau {

struct TauParamsRecord {
  std::string t, tp, sigma;
  int n = 0, M = 0, cutoff = 0;
};

struct TauValue {
  Complex value;
  double truncation_bound = 0.0;
  TauParamsRecord params;
};

// Z_{T,T'} for shifted sequences, in closed form:
// a Miwa shift s*{z} contributes gamma(z, other side)^s and the pairing
// of two shifts contributes (1 - z w)^{-s s'}.
Complex z_norm(const SeriesSpec& t, const SeriesSpec& tp);

// tau_n = Z_{t,t'} det(1 - K) on l^2{n+1/2, n+3/2, ...}, finite M window.
// paper_form sigma must be enabled explicitly: it violates the [0,1]
// constraint and is only meant for the adjudication runs.
TauValue tau_n(const SeriesSpec& t, const SeriesSpec& tp,
               const SigmaWeight& sigma, int n, int M = kDefaultDim,
               int cutoff = kDefaultCutoff, bool allow_nonstandard = false);

TauValue tau_n(const ParamSeq& t, const ParamSeq& tp, const SigmaWeight& sigma,
               int n, int M = kDefaultDim, int cutoff = kDefaultCutoff,
               bool allow_nonstandard = false);

// Same value through the cyclic identity det(1+AB) = det(1+BA): the
// operator sigma(.-n) Hcheck 1_{>0} H on a window of Z' picked from the
// support of sigma(.-n) and the J decay length.
TauValue tau_conjugated(const ParamSeq& t, const ParamSeq& tp,
                        const SigmaWeight& sigma, int n, int M = kDefaultDim,
                        int cutoff = kDefaultCutoff,
                        bool allow_nonstandard = false);

// P(lambda_1 <= n) for the Schur measure: det(1 - K_{t,t'}) past n.
double gap_probability(const ParamSeq& t, const ParamSeq& tp, int n,
                       int M = kDefaultDim, int cutoff = kDefaultCutoff);

// det(I - K) with overflow diagnostics.
Complex det_one_minus(const Eigen::MatrixXcd& K);

}  // namespace schurtau

#endif
