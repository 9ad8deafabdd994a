#ifndef VOALOG_LATTICE_HPP
#define VOALOG_LATTICE_HPP

#include <compare>
#include <string>
#include <vector>

#include "voalog/errors.hpp"
#include "voalog/rational.hpp"

namespace voalog {

/// A vector in the rational span of the configured lattice generators,
/// stored as exact coefficients. Equality is coefficient-wise.
struct LatticeVector {
  std::vector<Rational> c;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<Rational> coeffs) : c(std::move(coeffs)) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend LatticeVector operator*(const Rational& s, const LatticeVector& a) {
    LatticeVector r = a;
    for (auto& x : r.c) x *= s;
    return r;
  }
  friend LatticeVector operator-(const LatticeVector& a) { return Rational(-1) * a; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.c == b.c; }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (size_t i = 0; i < a.c.size(); ++i) {
      int cmp = cmp_rat(a.c[i], b.c[i]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  }

  static int cmp_rat(const Rational& x, const Rational& y) { return cmp(x, y); }

  std::string str(const std::vector<std::string>& names) const;
};

enum class CaseTag { Triplet, Wpp, Super, Affine };

/// Exact lattice data for one of the configured cases: generators, Gram
/// form, the base (integral) lattice, and the cocycle convention.
struct LatticeConfig {
  CaseTag case_tag = CaseTag::Triplet;
  int rank = 1;
  long p = 2, pprime = 1;
  std::vector<std::string> generator_names;  // {"a"} or {"g","d"}
  MatrixQ gram;

  /// Basis of the base lattice (L, or D in the affine case) in generator
  /// coordinates; one column per basis vector.
  MatrixQ base_basis;

  /// Linear part of the conformal vector: omega = (standard quadratic) + rho(-2).
  LatticeVector rho;

  /// Denominator bound of the registered group: registered vectors have
  /// generator coefficients in (1/reg_den) * Z.
  long reg_den = 1;

  /// Rank-1 super parity: parity(l*alpha) = l*parity_weight mod 2 on the
  /// registered group. Zero in purely bosonic cases.
  long parity_weight = 0;

  bool fermionic = false;
  Rational central_charge;

  LatticeVector gen(int i) const {
    std::vector<Rational> v(rank, Rational(0));
    v[i] = 1;
    return LatticeVector(std::move(v));
  }
  LatticeVector zero() const { return LatticeVector(std::vector<Rational>(rank, Rational(0))); }
  LatticeVector vec(std::initializer_list<Rational> coeffs) const {
    std::vector<Rational> v(coeffs);
    if (static_cast<int>(v.size()) != rank) throw ConfigError("vec: wrong rank");
    return LatticeVector(std::move(v));
  }
};

/// Bilinear extension of the Gram form.
Rational pairing(const LatticeConfig& cfg, const LatticeVector& a, const LatticeVector& b);

/// Membership in the base lattice (integer coordinates w.r.t. base_basis).
bool in_base_lattice(const LatticeConfig& cfg, const LatticeVector& v);

/// Decompose v = d + r with d in the base lattice and r the canonical coset
/// representative; returns the base-basis coordinates of d.
std::vector<long> base_coordinates(const LatticeConfig& cfg, const LatticeVector& v);

/// The declared 2-cocycle sign convention. Rank 1: identically +1. Rank 2:
/// bimultiplicative on the base lattice with the ordered basis
/// (3g+3d, 3g-3d), sign (-1)^pairing on out-of-order basis products,
/// extended to the cosets through the canonical section.
int cocycle_sign(const LatticeConfig& cfg, const LatticeVector& lam, const LatticeVector& mu);

/// Parity (mod 2) of the ground state e^v under the configured convention.
int lattice_parity(const LatticeConfig& cfg, const LatticeVector& v);

/// Conformal weight of the ground state e^v: <v,v>/2 - <rho,v>.
Rational ground_weight(const LatticeConfig& cfg, const LatticeVector& v);

/// A coset of the base lattice, held by a representative.
struct Sector {
  LatticeVector rep;
  friend bool operator==(const Sector&, const Sector&) = default;
};

bool same_sector(const LatticeConfig& cfg, const LatticeVector& a, const LatticeVector& b);

}  // namespace voalog

#endif  // VOALOG_LATTICE_HPP
