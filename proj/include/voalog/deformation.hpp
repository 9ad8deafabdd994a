#ifndef VOALOG_DEFORMATION_HPP
#define VOALOG_DEFORMATION_HPP

#include <map>

#include "voalog/cases.hpp"

namespace voalog {

/// Check the deformation vector: weight 1, annihilated by positive Virasoro
/// modes, and square-integrable mode grid (v_i v = 0 for i >= 0, so its
/// nonnegative modes commute). Throws ConfigError on violation.
void validate_deformation(const CaseConfig& cc);

/// exp(sum_{n>=1} ((-1)^{n+1}/n) v_n x^{-n}) a, as x^{-m} coefficients
/// (m >= 0, entry 0 is a itself). Requires v_0 a = 0 (throws NotInKernel).
/// This is the deforming series applied to a kernel vector; it is a finite
/// exact Laurent polynomial.
std::map<long, FockElement> delta_expand(const CaseConfig& cc, const FockElement& a);

/// Deformed mode: the x^{-n-1} coefficient of Y(Delta a, x) acting on the
/// extended module attached to module_rep.
FockElement deformed_mode(const CaseConfig& cc, const LatticeVector& module_rep,
                          const FockElement& a, const Rational& n, const FockElement& w);

/// Same, with the delta_expand output precomputed (callers that apply many
/// modes of one operator should expand once and reuse).
FockElement apply_expanded_mode(const CaseConfig& cc, const LatticeVector& module_rep,
                                const std::map<long, FockElement>& expansion, const Rational& n,
                                const FockElement& w);

/// Deformed Virasoro: Lt(n) = L(n) + v_n (equals deformed_mode of omega).
FockElement deformed_virasoro(const CaseConfig& cc, const LatticeVector& module_rep, long n,
                              const FockElement& w);

/// Composition with the lattice-direction shift h = a/2 (rank 1):
/// Y'(a,x) = Yt(Delta(h,x)a, x); returns the x^{-n-1} coefficient on w.
FockElement heisenberg_shifted_mode(const CaseConfig& cc, const LatticeVector& module_rep,
                                    const FockElement& a, const Rational& n,
                                    const FockElement& w);

/// A formal sum over x^a log(x)^k with element coefficients. `lo`/`hi`
/// bound the x-exponents on which the series is complete.
struct LogSeries {
  std::map<std::pair<Rational, int>, FockElement> coef;
  Rational lo, hi;
  bool windowed = false;  // true when lo/hi are meaningful

  void add(const Rational& xexp, int logpow, const FockElement& e) {
    if (e.is_zero()) return;
    auto key = std::make_pair(xexp, logpow);
    auto it = coef.find(key);
    if (it == coef.end()) {
      coef.emplace(key, e);
    } else {
      it->second += e;
      if (it->second.is_zero()) coef.erase(it);
    }
  }
  friend bool operator==(const LogSeries& a, const LogSeries& b) { return a.coef == b.coef; }
};

/// Delta_log(v,x) w = exp(log(x) v_0 + sum_{n>=1} (v_n/(-n)) (-x)^{-n}) w.
/// Exact and finite for any w; log powers are bounded by the nilpotency
/// order of v_0 on the orbit (throws NotNilpotent past `nilpotency_bound`).
LogSeries delta_log_apply(const CaseConfig& cc, const FockElement& w, int nilpotency_bound = 4);

/// x^a log^k coefficient of the deformed intertwining map
/// Yt(w, x) u := Y(Delta_log(v,x) w, x) u, evaluated through the extended
/// context; a = -s-1 parametrizes the plain mode index s.
FockElement log_intertwiner_mode(const CaseConfig& cc, const LatticeVector& module_rep,
                                 const FockElement& w, const Rational& s, int logpow,
                                 const FockElement& u, int nilpotency_bound = 4);

/// Both sides of the conjugation identity
///   Delta_log(v,x2) Y(u,y) w  =  Y(Delta(v,x2+y)u, y) Delta_log(v,x2) w
/// for u in Ker v_0, compared on the window x2^a y^b with
/// a, b in [-order, order]; (x2+y)^{-m} is expanded with |x2| > |y|.
/// Returns true when every windowed coefficient matches; `mismatch`
/// receives a description otherwise.
bool conjugation_identity_holds(const CaseConfig& cc, const FockElement& u, const FockElement& w,
                                long order, std::string* mismatch = nullptr);

}  // namespace voalog

#endif  // VOALOG_DEFORMATION_HPP
