#ifndef VOALOG_AFFINE_HPP
#define VOALOG_AFFINE_HPP

#include "voalog/module_span.hpp"
#include "voalog/screenings.hpp"

namespace voalog {

/// The level -4/3 current triple inside the rank-2 lattice case:
/// e = e^{3(g-d)}, h = 4 d(-1) 1, f = (2/9) Q e^{3(g+d)} (the sign is fixed
/// by the configured cocycle so that e_0 f = h).
struct AffineRealization {
  CaseConfig cc;
  FockElement e, h, f;
  Rational level;
};

/// Builds the triple and cross-checks f against its closed polynomial form
/// c (4 g(-1)^2 - (2/3) g(-2)) e^{-3(g-d)} with c = +-1 (throws on mismatch).
AffineRealization make_affine_realization();

/// Structure constants of the current algebra on {e, h, f} (indices 0,1,2):
/// [x_m, y_n] = coeff * target_{m+n} + m * pairing * delta_{m+n,0}, where
/// target indexes {e, h, f} and coeff = 0 encodes a vanishing bracket.
struct CurrentBracket {
  int target = 0;
  Rational coeff;
  Rational pairing;
};
CurrentBracket current_bracket(const AffineRealization& ar, int x, int y);

/// Verifies the defining commutators [e(m), f(n)], [h(m), e(n)], [h(m), f(n)],
/// [h(m), h(n)] for |m|,|n| <= mrange on every basis vector w of the
/// (extended) module with weight <= wcut inside the scan window. `deformed`
/// selects the twisted module action.
bool affine_bracket_check(const AffineRealization& ar, const LatticeVector& module_rep,
                          bool extended, bool deformed, long mrange, const Rational& wcut,
                          const BasisOptions& opts, std::string* why = nullptr);

/// The structural probes of the twisted module attached to e^{-3g+d}.
struct RThirdProbe {
  std::vector<JordanBlock> top_blocks;  // Lt(0) on span{v1, Qt v1}
  bool top_relations = false;           // Lt(0)v1 = -1/3 v1 + v2, Lt(0)v2 = -1/3 v2
  bool hw_annihilation = false;         // e~(n+1) v1 = f~(n+2) v1 = 0, n = 0..4
  FockElement e0_v1;                    // e~(0) v1 (should be +- e^{-2d})
  Rational nu;                          // f~(1) v1 = nu e^{-4g+4d}
  bool quotient_nonlogarithmic = false; // Qt maps the closure of v1 into that of e^{-4g+4d}
  std::map<Rational, long> r_dims, e1_dims;
};
RThirdProbe rminusthird_probe(const AffineRealization& ar, const Rational& cutoff,
                              const BasisOptions& opts);

}  // namespace voalog

#endif  // VOALOG_AFFINE_HPP
