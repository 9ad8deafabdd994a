#ifndef VOALOG_BASIS_HPP
#define VOALOG_BASIS_HPP

#include <vector>

#include "voalog/fock.hpp"

namespace voalog {

struct BasisOptions {
  /// Rank-2 only: lattice points are scanned over base-basis coordinates in
  /// [-window, window] around the sector representative. Irrelevant in rank 1,
  /// where the quadratic form bounds the scan on its own.
  long lattice_window = 8;
};

/// All boson monomials of total degree d in `rank` colors, each a sorted
/// (generator, mode) multiset, in canonical order.
std::vector<std::vector<std::pair<int, long>>> boson_monomials(int rank, long d);

/// All strictly decreasing words of positive half-odd-integers summing to d.
std::vector<std::vector<Rational>> fermion_words(const Rational& d);

/// Canonical ordered basis of the weight-`weight` component of the Fock
/// module attached to the coset of `sector`. Empty when the weight is not
/// realized. Throws NonIntegralWeight when `weight` is off the weight grid
/// of the sector.
std::vector<FockBasisVector> graded_basis(const LatticeConfig& cfg, const Sector& sector,
                                          const Rational& weight,
                                          const BasisOptions& opts = {});

/// Lattice points of the coset whose ground weight is <= bound (rank 1), or
/// all points within the window (rank 2). Sorted.
std::vector<LatticeVector> sector_points(const LatticeConfig& cfg, const Sector& sector,
                                         const Rational& ground_bound,
                                         const BasisOptions& opts = {});

}  // namespace voalog

#endif  // VOALOG_BASIS_HPP
