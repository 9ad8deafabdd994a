#include "voalog/cases.hpp"

#include <numeric>

namespace voalog {

namespace {

// omega = (1/2) sum_ij (G^-1)_ij g_i(-1) g_j(-1) 1 + rho(-2) 1, which gives
// L(0) e^v = <v,v>/2 - <rho,v>.
FockElement standard_omega(const LatticeConfig& cfg) {
  MatrixQ ginv = cfg.gram;
  // exact inverse by Gauss-Jordan on [G | I]
  long n = cfg.rank;
  MatrixQ aug(n, 2 * n);
  aug << cfg.gram, MatrixQ::Identity(n, n);
  // reuse rref via a small local elimination
  for (long c = 0, r = 0; c < n && r < n; ++c) {
    long sel = -1;
    for (long i = r; i < n; ++i)
      if (aug(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) throw ConfigError("standard_omega: singular Gram form");
    if (sel != r) aug.row(sel).swap(aug.row(r));
    aug.row(r) /= aug(r, c);
    for (long i = 0; i < n; ++i)
      if (i != r && aug(i, c) != 0) aug.row(i) -= aug(i, c) * aug.row(r);
    ++r;
  }
  ginv = aug.rightCols(n);

  FockElement omega;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (ginv(i, j) == 0) continue;
      FockBasisVector b;
      b.point = cfg.zero();
      b.bosons = {{static_cast<int>(i), 1}, {static_cast<int>(j), 1}};
      b.normalize();
      omega.add(b, ginv(i, j) / 2);
    }
  for (long i = 0; i < n; ++i) {
    if (cfg.rho.c[i] == 0) continue;
    FockBasisVector b;
    b.point = cfg.zero();
    b.bosons = {{static_cast<int>(i), 2}};
    omega.add(b, cfg.rho.c[i]);
  }
  return omega;
}

Rational rho_pairing_cc(const LatticeConfig& cfg) {
  // bosonic central charge: rank - 12 <rho, rho>
  return Rational(cfg.rank) - 12 * pairing(cfg, cfg.rho, cfg.rho);
}

CaseConfig make_rank1(long p, long pprime, bool fermionic, const std::string& name) {
  if (p < 2 || pprime < 1 || p <= pprime) throw InvalidParameters("need p > p' >= 1, p >= 2");
  CaseConfig cc;
  cc.name = name;
  LatticeConfig& lat = cc.lattice;
  lat.case_tag = fermionic ? CaseTag::Super : (pprime == 1 ? CaseTag::Triplet : CaseTag::Wpp);
  lat.rank = 1;
  lat.p = p;
  lat.pprime = pprime;
  lat.generator_names = {"a"};
  lat.gram = MatrixQ::Constant(1, 1, fermionic ? rat(p * pprime) : rat(2 * p * pprime));
  lat.base_basis = MatrixQ::Constant(1, 1, rat(1));
  lat.rho = LatticeVector({rat(p - pprime, 2 * p * pprime)});
  lat.reg_den = fermionic ? p * pprime : 2 * p * pprime;
  lat.parity_weight = fermionic ? p * pprime : 0;
  lat.fermionic = fermionic;
  lat.central_charge = rho_pairing_cc(lat) + (fermionic ? rat(1, 2) : Rational(0));

  cc.omega = standard_omega(lat);
  if (fermionic) {
    FockBasisVector b;
    b.point = lat.zero();
    b.fermions = {rat(3, 2), rat(1, 2)};
    cc.omega.add(b, rat(1, 2));
  }

  auto screening = [&](const Rational& coeff) {
    FockBasisVector b;
    b.point = LatticeVector({coeff});
    if (fermionic) b.fermions = {rat(1, 2)};
    return FockElement::basis(b);
  };
  cc.q_vector = screening(rat(1, pprime));
  cc.qt_vector = screening(rat(-1, p));
  cc.ext_shift = LatticeVector({rat(-1, p)});
  return cc;
}

}  // namespace

CaseConfig make_triplet(long p) { return make_rank1(p, 1, false, "triplet"); }

CaseConfig make_wpp(long p, long pprime) {
  if (std::gcd(p, pprime) != 1) throw InvalidParameters("p and p' must be coprime");
  return make_rank1(p, pprime, false, pprime == 1 ? "triplet" : "wpp");
}

CaseConfig make_super(long p, long pprime) {
  if (std::gcd(p, pprime) != 1 || p % 2 == 0 || pprime % 2 == 0)
    throw InvalidParameters("super case needs odd coprime p > p'");
  return make_rank1(p, pprime, true, "super");
}

CaseConfig make_affine() {
  CaseConfig cc;
  cc.name = "affine";
  LatticeConfig& lat = cc.lattice;
  lat.case_tag = CaseTag::Affine;
  lat.rank = 2;
  lat.p = 2;  // unused grading parameters in this case
  lat.pprime = 1;
  lat.generator_names = {"g", "d"};
  lat.gram = MatrixQ::Zero(2, 2);
  lat.gram(0, 0) = rat(1, 6);
  lat.gram(1, 1) = rat(-1, 6);
  lat.base_basis = MatrixQ::Zero(2, 2);
  lat.base_basis(0, 0) = 3;
  lat.base_basis(1, 0) = 3;  // b1 = 3g + 3d
  lat.base_basis(0, 1) = 3;
  lat.base_basis(1, 1) = -3;  // b2 = 3g - 3d
  lat.rho = LatticeVector({rat(-2), rat(0)});
  lat.reg_den = 1;
  lat.parity_weight = 0;
  lat.fermionic = false;
  lat.central_charge = rho_pairing_cc(lat);  // = -6

  cc.omega = standard_omega(lat);
  cc.q_vector = FockElement::ground(lat.vec({rat(-6), rat(0)}));
  cc.qt_vector = FockElement::ground(lat.vec({rat(2), rat(0)}));
  cc.ext_shift = lat.vec({rat(2), rat(0)});
  return cc;
}

}  // namespace voalog
