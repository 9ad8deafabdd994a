#ifndef VOALOG_FOCK_HPP
#define VOALOG_FOCK_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "voalog/lattice.hpp"
#include "voalog/rational.hpp"

namespace voalog {

/// One monomial of the graded Fock basis:
///   (product of boson creators a_i(-n)) e^{point} (product of phi(-r)).
/// Bosons are a sorted multiset of (generator index, mode n >= 1); the
/// fermion word is strictly decreasing in r (positive half-integers).
struct FockBasisVector {
  std::vector<std::pair<int, long>> bosons;  // sorted ascending (gen, n)
  LatticeVector point;
  std::vector<Rational> fermions;  // strictly decreasing r > 0

  long boson_degree() const {
    long d = 0;
    for (const auto& [g, n] : bosons) d += n;
    return d;
  }
  Rational fermion_degree() const {
    Rational d = 0;
    for (const auto& r : fermions) d += r;
    return d;
  }

  void normalize() { std::sort(bosons.begin(), bosons.end()); }

  friend bool operator==(const FockBasisVector& a, const FockBasisVector& b) {
    return a.bosons == b.bosons && a.point == b.point && a.fermions == b.fermions;
  }

  /// Degree-lexicographic on the boson monomial, then lattice point, then
  /// fermion word; fixed so that reports are byte-stable.
  friend bool operator<(const FockBasisVector& a, const FockBasisVector& b) {
    long da = a.boson_degree(), db = b.boson_degree();
    if (da != db) return da < db;
    if (a.bosons != b.bosons) return a.bosons < b.bosons;
    if (!(a.point == b.point)) return a.point < b.point;
    if (a.fermions.size() != b.fermions.size()) return a.fermions.size() < b.fermions.size();
    for (size_t i = 0; i < a.fermions.size(); ++i) {
      int c = cmp(a.fermions[i], b.fermions[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  std::string str(const LatticeConfig& cfg) const;
};

/// Structural hash (consistent with operator==) for unordered containers.
size_t hash_value(const FockBasisVector& b);
struct FockBasisVectorHash {
  size_t operator()(const FockBasisVector& b) const { return hash_value(b); }
};

/// Conformal weight of a basis vector: boson degree + fermion degree +
/// ground weight of the lattice point. Matches the L(0) eigenvalue of the
/// configured conformal vector (asserted in tests, not assumed).
Rational weight_of(const LatticeConfig& cfg, const FockBasisVector& b);

/// Parity of a basis vector (fermion count + lattice parity, mod 2).
int parity_of(const LatticeConfig& cfg, const FockBasisVector& b);

/// Finite exact-rational linear combination of basis vectors. Zero
/// coefficients are never stored.
class FockElement {
 public:
  using Terms = std::map<FockBasisVector, Rational>;

  FockElement() = default;
  static FockElement basis(FockBasisVector b, Rational c = 1) {
    FockElement e;
    if (c != 0) e.terms_[std::move(b)] = std::move(c);
    return e;
  }
  static FockElement ground(const LatticeVector& point, Rational c = 1) {
    FockBasisVector b;
    b.point = point;
    return basis(std::move(b), std::move(c));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const FockBasisVector& b, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// *this += s * o without building a scaled temporary.
  void add_scaled(const FockElement& o, const Rational& s) {
    if (s == 0) return;
    for (const auto& [b, c] : o.terms_) add(b, c * s);
  }

  FockElement& operator+=(const FockElement& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  FockElement& operator-=(const FockElement& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  FockElement& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
  friend FockElement operator-(FockElement a, const FockElement& b) { return a -= b; }
  friend FockElement operator*(const Rational& s, FockElement a) { return a *= s; }
  friend bool operator==(const FockElement& a, const FockElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Coefficient of a single basis vector (0 if absent).
  Rational coeff(const FockBasisVector& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// All terms share one weight; throws if mixed. Zero element throws too.
  Rational homogeneous_weight(const LatticeConfig& cfg) const;

  std::string str(const LatticeConfig& cfg) const;

 private:
  Terms terms_;
};

}  // namespace voalog

#endif  // VOALOG_FOCK_HPP
