#ifndef SCHURTAU_FOCK_HPP
#define SCHURTAU_FOCK_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurtau/paramseq.hpp"
#include "schurtau/partition.hpp"
#include "schurtau/sigma.hpp"

namespace schurtau::fock {

// Charge/energy truncation of the wedge space.  Partitions are packed
// into nibbles, which caps e_max at 14; the default desk scale is 12.
struct Cutoffs {
  int e_max = 12;
  int n_max = 4;
  void validate() const;
};

// Basis vector v_{S_n(lambda)} encoded as (charge, partition).
struct BasisState {
  int charge = 0;
  Partition lam;
  std::uint64_t packed() const;
  static BasisState unpack(std::uint64_t key);
  int energy() const { return lam.size(); }
};

// Finite linear combination of basis states.  Keys are the packed
// encodings, so iteration order is fixed and results reproducible.
class FockVector {
 public:
  FockVector() = default;

  void add(const BasisState& s, Complex amp);
  void add_dropped(double mass) { dropped_ += mass; }
  Complex coeff(const BasisState& s) const;
  const std::map<std::uint64_t, Complex>& terms() const { return terms_; }
  double dropped() const { return dropped_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void scale(Complex c);
  void accumulate(const FockVector& o);  // += including dropped mass
  void prune(double eps = 0.0);

 private:
  std::map<std::uint64_t, Complex> terms_;
  double dropped_ = 0.0;
};

FockVector basis_vector(int charge, const Partition& lam);
inline FockVector vacuum(int n) { return basis_vector(n, Partition()); }

Complex inner(const FockVector& a, const FockVector& b);  // sum a conj(b)

// Single-basis actions used by the operator code; no cutoff applied.
std::optional<std::pair<BasisState, int>> psi_basis(HalfInt k,
                                                    const BasisState& s);
std::optional<std::pair<BasisState, int>> psi_star_basis(HalfInt k,
                                                         const BasisState& s);

FockVector apply_psi(HalfInt k, const FockVector& v, const Cutoffs& c);
FockVector apply_psi_star(HalfInt k, const FockVector& v, const Cutoffs& c);
FockVector apply_alpha(int m, const FockVector& v, const Cutoffs& c);
// Gamma_{+-}(t) = exp(sum_n t_n alpha_{+-n}); sign = +1 is the
// energy-lowering Gamma_+, sign = -1 raises and is truncated at e_max.
FockVector apply_gamma(int sign, const ParamSeq& t, const FockVector& v,
                       const Cutoffs& c);
FockVector apply_charge(const FockVector& v);
FockVector apply_shift(int p, const FockVector& v, const Cutoffs& c);
// Diagonal multiplicative operator with eigenvalue
// prod_{k in S_n(lambda)} (1 - sigma(k)); rows past `depth` contribute
// exactly 1 for finitely supported sigma.
FockVector apply_a_sigma(const SigmaWeight& sigma, const FockVector& v,
                         int depth, const Cutoffs& c);

// <Gamma_+(t) prod psi_x psi*_x Gamma_-(t') v_0, v_0>
Complex fock_correlation(const std::vector<HalfInt>& X, const ParamSeq& t,
                         const ParamSeq& tp, const Cutoffs& c);

// <Gamma_+(-t) A_sigma Gamma_-(-t') v_n, v_n>
Complex fock_tau(const ParamSeq& t, const ParamSeq& tp,
                 const SigmaWeight& sigma, int n, const Cutoffs& c,
                 int depth = 64);

struct OperatorAudit {
  std::string name;
  double max_residual = 0.0;
  long cases_checked = 0;
};

OperatorAudit check_anticommutation(const Cutoffs& c);
OperatorAudit check_projectors(const Cutoffs& c);
OperatorAudit check_alpha_commutation(const Cutoffs& c);
OperatorAudit check_charge_kernel(const Cutoffs& c);
OperatorAudit check_gamma_adjoint(const ParamSeq& t, const Cutoffs& c);
OperatorAudit check_vertex_commutation(const ParamSeq& t, const ParamSeq& tp,
                                       const Cutoffs& c);
OperatorAudit check_psi_commutation(const SigmaWeight& sigma,
                                    const Cutoffs& c);
OperatorAudit check_boson_fermion(const std::vector<Complex>& z_samples,
                                  const Cutoffs& c);
OperatorAudit check_alpha_psi_commutation(const std::vector<Complex>& zs,
                                          const Cutoffs& c);

std::vector<OperatorAudit> full_audit(const Cutoffs& c);

}  // namespace schurtau::fock

#endif
