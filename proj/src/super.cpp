#include "voalog/super.hpp"

#include <sstream>

#include "voalog/deformation.hpp"

namespace voalog {

NSRealization make_ns_realization(long p, long pprime) {
  NSRealization ns;
  ns.cc = make_super(p, pprime);
  const LatticeConfig& lat = ns.cc.lattice;
  ns.tau_scale2 = rat(p * pprime);

  FockBasisVector b1;
  b1.point = lat.zero();
  b1.bosons = {{0, 1}};
  b1.fermions = {rat(1, 2)};
  ns.tau = FockElement::basis(b1);
  FockBasisVector b2;
  b2.point = lat.zero();
  b2.fermions = {rat(3, 2)};
  ns.tau.add(b2, rat(p - pprime));
  return ns;
}

FockElement ns_g_mode(const NSRealization& ns, const ModeContext& ctx, const Rational& r,
                      const FockElement& w) {
  if (!is_half_integer(r) || is_integer(r))
    throw EngineError("ns_g_mode: index must be a half-odd integer");
  return apply_mode(ctx, ns.tau, r + rat(1, 2), w);
}

bool ns_bracket_check(const NSRealization& ns, const Rational& wcut, const BasisOptions& opts,
                      std::string* why) {
  const CaseConfig& cc = ns.cc;
  ModeContext ctx = cc.plain_context();
  GradedComponentTable table(cc, cc.lattice.zero(), false, opts);
  const Rational c = cc.lattice.central_charge;
  const std::vector<Rational> rs = {rat(-3, 2), rat(-1, 2), rat(1, 2), rat(3, 2)};

  auto fail = [&](const std::string& what, const FockBasisVector& bv) {
    if (why) {
      std::ostringstream os;
      os << what << " mismatch on " << bv.str(cc.lattice);
      *why = os.str();
    }
    return false;
  };

  for (const auto& wt : table.weights(0, wcut)) {
    for (const auto& bv : table.basis(wt)) {
      FockElement w = FockElement::basis(bv);
      std::map<Rational, FockElement> gw;
      auto g_of = [&](const Rational& r) -> const FockElement& {
        auto it = gw.find(r);
        if (it == gw.end()) it = gw.emplace(r, ns_g_mode(ns, ctx, r, w)).first;
        return it->second;
      };
      for (const auto& r : rs)
        for (const auto& s : rs) {
          if (s < r) continue;  // the anticommutator is symmetric
          FockElement lhs = ns_g_mode(ns, ctx, r, g_of(s)) + ns_g_mode(ns, ctx, s, g_of(r));
          FockElement rhs =
              2 * ns.tau_scale2 * virasoro(ctx, cc.omega, to_long(r + s), w);
          if (r + s == 0) rhs += ns.tau_scale2 * (c / 3) * (r * r - rat(1, 4)) * w;
          if (!(lhs == rhs)) return fail("{G(r), G(s)}", bv);
        }
      for (long m = -2; m <= 2; ++m)
        for (const auto& r : rs) {
          FockElement lhs = virasoro(ctx, cc.omega, m, g_of(r)) -
                            ns_g_mode(ns, ctx, r, virasoro(ctx, cc.omega, m, w));
          FockElement rhs = (rat(m, 2) - r) * ns_g_mode(ns, ctx, Rational(m) + r, w);
          if (!(lhs == rhs)) return fail("[L(m), G(r)]", bv);
        }
    }
  }
  return true;
}

bool ns_screening_annihilation(const NSRealization& ns) {
  ModeContext ctx = ns.cc.plain_context();
  return apply_q(ns.cc, ctx, ns.tau).is_zero() && apply_qt(ns.cc, ctx, ns.tau).is_zero() &&
         apply_q(ns.cc, ctx, ns.cc.omega).is_zero() &&
         apply_qt(ns.cc, ctx, ns.cc.omega).is_zero();
}

NSDeformationProbe ns_deformation_probe(const NSRealization& ns, const Rational& wmax,
                                        const BasisOptions& opts) {
  const CaseConfig& cc = ns.cc;
  LatticeVector rep = cc.lattice.zero();
  GradedComponentTable table(cc, rep, true, opts);
  NSDeformationProbe out;
  for (const auto& wt : table.weights(table.min_weight(wmax), wmax)) {
    MatrixQ m = component_matrix(table, wt, [&](const FockElement& e) {
      return deformed_virasoro(cc, rep, 0, e);
    });
    auto blocks = jordan_blocks(m);
    for (const auto& b : blocks) {
      if (b.size < 2) continue;
      out.found = true;
      out.block_weight = wt;
      out.blocks = blocks;
      // witness: a vector in Ker (m - eig)^2 outside Ker (m - eig)
      MatrixQ a = m;
      for (long i = 0; i < a.rows(); ++i) a(i, i) -= b.eigenvalue;
      MatrixQ k2 = kernel_basis(a * a);
      for (long j = 0; j < k2.cols(); ++j) {
        VectorQ v = k2.col(j);
        VectorQ av = a * v;
        bool moved = false;
        for (long i = 0; i < av.size(); ++i)
          if (av(i) != 0) moved = true;
        if (!moved) continue;
        out.witness = from_coordinates(v, table.basis(wt)).str(cc.lattice);
        break;
      }
      return out;
    }
  }
  return out;
}

}  // namespace voalog
