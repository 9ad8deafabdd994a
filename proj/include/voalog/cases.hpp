#ifndef VOALOG_CASES_HPP
#define VOALOG_CASES_HPP

#include <string>

#include "voalog/modes.hpp"

namespace voalog {

/// Everything that pins down one of the four configured realizations:
/// lattice data, conformal vector, the two screening vectors, and the
/// lattice shift used by the two-summand extension.
struct CaseConfig {
  std::string name;
  LatticeConfig lattice;
  FockElement omega;

  /// Long screening: Q = (q_vector)_0.
  FockElement q_vector;
  /// Short screening: Qt = (qt_vector)_0; also the deformation vector,
  /// i.e. the deformed action adds modes of this element.
  FockElement qt_vector;

  /// Coset shift of the second summand of the extension.
  LatticeVector ext_shift;

  ModeContext plain_context() const {
    ModeContext c;
    c.cfg = &lattice;
    return c;
  }
  ModeContext extended_context(const LatticeVector& module_rep) const {
    ModeContext c;
    c.cfg = &lattice;
    c.ext = ModeContext::Extended{ext_shift, module_rep};
    return c;
  }
};

/// Rank-1 bosonic case with <a,a> = 2p, screenings e^a and e^{-a/p}.
CaseConfig make_triplet(long p);

/// Rank-1 bosonic case with <a,a> = 2pp', screenings e^{a/p'} and e^{-a/p};
/// p' = 1 reduces to make_triplet.
CaseConfig make_wpp(long p, long pprime);

/// Rank-1 fermionic (NS) case with <a,a> = pp' (p, p' odd and coprime),
/// screenings e^{a/p'} phi(-1/2) and e^{-a/p} phi(-1/2).
CaseConfig make_super(long p, long pprime);

/// Rank-2 case: generators g, d with <g,g> = 1/6, <d,d> = -1/6, base
/// lattice spanned by 3g+3d and 3g-3d, screenings e^{-6g} and e^{2g}.
CaseConfig make_affine();

}  // namespace voalog

#endif  // VOALOG_CASES_HPP
