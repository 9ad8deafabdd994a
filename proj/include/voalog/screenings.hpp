#ifndef VOALOG_SCREENINGS_HPP
#define VOALOG_SCREENINGS_HPP

#include "voalog/cases.hpp"

namespace voalog {

/// Long screening charge Q (zero mode of the long screening vector).
FockElement apply_q(const CaseConfig& cc, const ModeContext& ctx, const FockElement& w);

/// Short screening charge Qt (zero mode of the short screening vector).
FockElement apply_qt(const CaseConfig& cc, const ModeContext& ctx, const FockElement& w);

/// The three weight-(2p-1) generators of the rank-1 bosonic kernel algebra:
/// F = e^{-a}, H = Q F, E = Q^2 F.
struct TripletGenerators {
  FockElement E, F, H;
};
TripletGenerators triplet_generators(const CaseConfig& cc);

/// nu_p = p / (p - 1), the coefficient in the extended screening below.
Rational g_coefficient(long p);

/// Extended screening G = Q + nu_p (e^{a - a/p})_{-1}, acting through the
/// extended context (the second summand term is killed on shifted states).
FockElement apply_g(const CaseConfig& cc, const ModeContext& ctx, const FockElement& w);

}  // namespace voalog

#endif  // VOALOG_SCREENINGS_HPP
