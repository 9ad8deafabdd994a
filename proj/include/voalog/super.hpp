#ifndef VOALOG_SUPER_HPP
#define VOALOG_SUPER_HPP

#include "voalog/module_span.hpp"
#include "voalog/screenings.hpp"

namespace voalog {

/// The NS superconformal pair (omega, tau) of the rank-1 fermionic case.
/// tau is stored rescaled by sqrt(pp') so that all coefficients stay
/// rational: tau = a(-1) phi(-1/2) + (p - p') phi(-3/2). The rescaling
/// squares to tau_scale2 = pp' in the bracket constants.
struct NSRealization {
  CaseConfig cc;
  FockElement tau;
  Rational tau_scale2;
};

NSRealization make_ns_realization(long p, long pprime);

/// G'(r) = tau_{r+1/2} (rescaled convention), r a half-odd integer.
FockElement ns_g_mode(const NSRealization& ns, const ModeContext& ctx, const Rational& r,
                      const FockElement& w);

/// Verifies, on every basis vector of the vacuum sector up to weight wcut:
///   {G'(r), G'(s)} w = pp' (2 L(r+s) w + (c/3)(r^2 - 1/4) delta_{r+s,0} w)
///   [L(m), G'(r)] w = (m/2 - r) G'(m+r) w
/// for r, s in {+-1/2, +-3/2} and m in [-2, 2].
bool ns_bracket_check(const NSRealization& ns, const Rational& wcut,
                      const BasisOptions& opts = {}, std::string* why = nullptr);

/// Q tau = Qt tau = Q omega = Qt omega = 0.
bool ns_screening_annihilation(const NSRealization& ns);

/// Scan of the deformed Lt(0) = L(0) + v_0 on the extended vacuum sector:
/// first weight <= wmax carrying a Jordan block of size >= 2.
struct NSDeformationProbe {
  bool found = false;
  Rational block_weight;
  std::vector<JordanBlock> blocks;  // full block list at that weight
  std::string witness;              // a generalized eigenvector
};
NSDeformationProbe ns_deformation_probe(const NSRealization& ns, const Rational& wmax,
                                        const BasisOptions& opts = {});

}  // namespace voalog

#endif  // VOALOG_SUPER_HPP
