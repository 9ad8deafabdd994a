#include "voalog/screenings.hpp"

namespace voalog {

FockElement apply_q(const CaseConfig& cc, const ModeContext& ctx, const FockElement& w) {
  return apply_mode(ctx, cc.q_vector, 0, w);
}

FockElement apply_qt(const CaseConfig& cc, const ModeContext& ctx, const FockElement& w) {
  return apply_mode(ctx, cc.qt_vector, 0, w);
}

TripletGenerators triplet_generators(const CaseConfig& cc) {
  if (cc.lattice.rank != 1 || cc.lattice.fermionic)
    throw InvalidParameters("triplet_generators: rank-1 bosonic case only");
  ModeContext ctx = cc.plain_context();
  TripletGenerators g;
  g.F = FockElement::ground(LatticeVector({rat(-1)}));
  g.H = apply_q(cc, ctx, g.F);
  g.E = apply_q(cc, ctx, g.H);
  return g;
}

Rational g_coefficient(long p) { return rat(p, p - 1); }

FockElement apply_g(const CaseConfig& cc, const ModeContext& ctx, const FockElement& w) {
  FockElement out = apply_mode(ctx, cc.q_vector, 0, w);
  LatticeVector mu({rat(1) + rat(-1, cc.lattice.p)});
  out += g_coefficient(cc.lattice.p) * apply_mode(ctx, FockElement::ground(mu), -1, w);
  return out;
}

}  // namespace voalog
