#ifndef VOALOG_LINALG_HPP
#define VOALOG_LINALG_HPP

#include <vector>

#include "voalog/errors.hpp"
#include "voalog/rational.hpp"

namespace voalog {

/// Reduced row echelon form, in place; returns pivot column indices.
std::vector<int> rref(MatrixQ& m);

long rank_of(MatrixQ m);

/// Basis of the right kernel, one column per basis vector.
MatrixQ kernel_basis(const MatrixQ& m);

/// Monic characteristic polynomial coefficients c_0..c_n of an n x n matrix,
/// p(t) = sum c_i t^i with c_n = 1 (Faddeev-LeVerrier, division-free up to
/// exact rational trace divisions).
std::vector<Rational> charpoly(const MatrixQ& m);

/// All rational roots of a rational-coefficient polynomial, with
/// multiplicity, ascending. Throws IrrationalEigenvalue if the polynomial
/// does not split over Q.
std::vector<Rational> rational_roots(std::vector<Rational> coeffs);

struct JordanBlock {
  Rational eigenvalue;
  long size = 0;
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Full Jordan type of a square matrix whose spectrum is rational; blocks
/// sorted by (eigenvalue, size). Throws IrrationalEigenvalue otherwise.
std::vector<JordanBlock> jordan_blocks(const MatrixQ& m);

/// Generalized eigenvalues (spectrum of the matrix, with algebraic
/// multiplicity), ascending.
std::vector<Rational> spectrum(const MatrixQ& m);

/// Dimension of the column-span intersection of two matrices with equal row
/// counts: dim A + dim B - dim(A|B).
long intersection_dim(const MatrixQ& a, const MatrixQ& b);

/// Incremental row span with exact membership tests. Rows are stored as
/// primitive integer vectors and candidates are eliminated fraction-free
/// (multiply through, subtract, strip content), which keeps coefficient
/// growth far below naive rational elimination.
class RowSpan {
 public:
  explicit RowSpan(long width) : width_(width) {}
  long dim() const { return static_cast<long>(rows_.size()); }
  long width() const { return width_; }

  /// Returns true (and grows) if v was independent of the current span.
  bool insert(const VectorQ& v);
  bool contains(const VectorQ& v) const;

  /// Rows of the span, primitive integer form (positive leading entry).
  MatrixQ as_matrix() const;

 private:
  using SparseIntRow = std::vector<std::pair<long, mpz_class>>;
  /// Load v (cleared of denominators) into the scratch buffer and eliminate
  /// against all stored rows; returns the pivot column or -1 when v reduced
  /// to zero. The scratch support is left in `support_`.
  long reduce_scratch(const VectorQ& v) const;

  long width_;
  std::vector<SparseIntRow> rows_;  // row k is zero at pivots of rows < k
  std::vector<long> pivots_;        // pivot column per row, insertion order
  mutable std::vector<mpz_class> scratch_;
  mutable std::vector<char> mark_;
  mutable std::vector<long> support_;
};

}  // namespace voalog

#endif  // VOALOG_LINALG_HPP
