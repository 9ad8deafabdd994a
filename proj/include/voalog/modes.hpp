#ifndef VOALOG_MODES_HPP
#define VOALOG_MODES_HPP

#include <optional>

#include "voalog/fock.hpp"

namespace voalog {

/// Where modes act. Without `ext`, plain lattice-module action. With `ext`,
/// the algebra is the two-summand extension (base lattice) + (base + shift)
/// acting on (module_rep) + (module_rep + shift), with the defining
/// truncation: a shifted-summand operator acting on a shifted-summand state
/// gives zero.
struct ModeContext {
  const LatticeConfig* cfg = nullptr;

  struct Extended {
    LatticeVector shift;
    LatticeVector module_rep;
  };
  std::optional<Extended> ext;

  ModeContext with_module(const LatticeVector& rep) const {
    ModeContext c = *this;
    if (c.ext) c.ext->module_rep = rep;
    return c;
  }
};

/// h(n) for h in the rational span of the generators: creation (n < 0),
/// annihilation (n > 0), or the <h, point> grading operator (n = 0).
FockElement apply_heisenberg(const LatticeConfig& cfg, const LatticeVector& h, long n,
                             const FockElement& state);

/// phi(s) for half-odd-integer s, including the sign for crossing the
/// lattice tensor factor. Creation for s < 0, annihilation for s > 0.
FockElement apply_fermion(const LatticeConfig& cfg, const Rational& s, const FockElement& state);

/// The r-th mode of the vertex operator attached to `op`, evaluated on
/// `state`. Works term by term; a term pair whose x-exponent grid misses
/// -r-1 contributes zero. Both op and state may be inhomogeneous.
FockElement apply_mode(const ModeContext& ctx, const FockElement& op, const Rational& r,
                       const FockElement& state);

/// True if some (op term, state term) pair realizes mode index r; used by
/// callers that must reject nonexistent modes instead of returning zero.
bool mode_exists(const ModeContext& ctx, const FockElement& op, const Rational& r,
                 const FockElement& state);

/// L(n) = omega_{n+1}.
FockElement virasoro(const ModeContext& ctx, const FockElement& omega, long n,
                     const FockElement& state);

/// Matrix of state -> apply_mode(op, r, state) between two graded components
/// given as ordered bases (columns indexed by `from`, rows by `to`).
MatrixQ operator_matrix(const ModeContext& ctx, const FockElement& op, const Rational& r,
                        const std::vector<FockBasisVector>& from,
                        const std::vector<FockBasisVector>& to);

/// Coordinates of an element in an ordered basis; throws if any term is
/// outside the basis.
VectorQ coordinates(const FockElement& e, const std::vector<FockBasisVector>& basis);

FockElement from_coordinates(const VectorQ& v, const std::vector<FockBasisVector>& basis);

}  // namespace voalog

#endif  // VOALOG_MODES_HPP
