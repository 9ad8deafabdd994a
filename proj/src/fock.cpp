#include "voalog/fock.hpp"

#include <cstring>
#include <sstream>

namespace voalog {

static size_t mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

static size_t rat_hash(const Rational& q) {
  double d = q.get_d();
  size_t u;
  std::memcpy(&u, &d, sizeof(u));
  return u;
}

size_t hash_value(const FockBasisVector& b) {
  size_t h = 0x51ed270b;
  for (const auto& [g, n] : b.bosons)
    h = mix(h, (static_cast<size_t>(g) << 32) ^ static_cast<size_t>(n));
  for (const auto& c : b.point.c) h = mix(h, rat_hash(c));
  for (const auto& r : b.fermions) h = mix(h, rat_hash(r));
  return h;
}

std::string FockBasisVector::str(const LatticeConfig& cfg) const {
  std::ostringstream os;
  for (const auto& [g, n] : bosons) os << cfg.generator_names[g] << "(-" << n << ")";
  os << "e{" << point.str(cfg.generator_names) << "}";
  for (const auto& r : fermions) os << "phi(-" << rat_str(r) << ")";
  return os.str();
}

Rational weight_of(const LatticeConfig& cfg, const FockBasisVector& b) {
  return Rational(b.boson_degree()) + b.fermion_degree() + ground_weight(cfg, b.point);
}

int parity_of(const LatticeConfig& cfg, const FockBasisVector& b) {
  int p = static_cast<int>(b.fermions.size() % 2);
  return (p + lattice_parity(cfg, b.point)) % 2;
}

Rational FockElement::homogeneous_weight(const LatticeConfig& cfg) const {
  if (terms_.empty()) throw EngineError("homogeneous_weight: zero element");
  Rational w = weight_of(cfg, terms_.begin()->first);
  for (const auto& [b, c] : terms_)
    if (weight_of(cfg, b) != w) throw EngineError("homogeneous_weight: mixed weights");
  return w;
}

std::string FockElement::str(const LatticeConfig& cfg) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << rat_str(c) << ")*" << b.str(cfg);
    first = false;
  }
  return os.str();
}

}  // namespace voalog
