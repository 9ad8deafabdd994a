#ifndef VOALOG_RATIONAL_HPP
#define VOALOG_RATIONAL_HPP

#include <gmpxx.h>
#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace voalog {

/// Exact rational scalar used everywhere in the engine.
using Rational = mpq_class;

/// n/d, canonicalized (the raw mpq_class constructor does not reduce).
inline Rational rat(long n, long d = 1) {
  if (d == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_half_integer(const Rational& q) {
  return q.get_den() == 1 || q.get_den() == 2;
}

inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("to_long: not an integer: " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return q.get_num().get_si();
}

inline Rational floor_rat(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(f);
}

/// Generalized binomial coefficient: a(a-1)...(a-k+1)/k! for rational a.
inline Rational binomial(const Rational& a, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= (a - i) / Rational(i + 1);
  return r;
}

inline Rational binomial(long a, long k) { return binomial(Rational(a), k); }

/// Canonical "num/den" form (den > 0, reduced); plain integer prints without "/1".
inline std::string rat_str(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace voalog

namespace Eigen {

template <>
struct NumTraits<voalog::Rational> : GenericNumTraits<voalog::Rational> {
  typedef voalog::Rational Real;
  typedef voalog::Rational NonInteger;
  typedef voalog::Rational Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace voalog {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace voalog

#endif  // VOALOG_RATIONAL_HPP
