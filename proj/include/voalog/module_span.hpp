#ifndef VOALOG_MODULE_SPAN_HPP
#define VOALOG_MODULE_SPAN_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>

#include "voalog/basis.hpp"
#include "voalog/deformation.hpp"
#include "voalog/linalg.hpp"

namespace voalog {

/// Cached graded bases of a module: the coset of module_rep, optionally
/// together with its ext_shift companion (the two-summand extension).
class GradedComponentTable {
 public:
  GradedComponentTable(const CaseConfig& cc, LatticeVector module_rep, bool extended,
                       BasisOptions opts = {});

  const std::vector<FockBasisVector>& basis(const Rational& w) const;
  long dim(const Rational& w) const { return static_cast<long>(basis(w).size()); }

  /// Coordinates of e in the component at w, using a cached basis index.
  VectorQ coords(const FockElement& e, const Rational& w) const;

  /// Realized weights in [lo, hi], ascending.
  std::vector<Rational> weights(const Rational& lo, const Rational& hi) const;

  /// Smallest realized weight (within the scan bound `hi`).
  Rational min_weight(const Rational& hi) const;

  const CaseConfig& case_config() const { return cc_; }
  const LatticeVector& module_rep() const { return rep_; }
  bool extended() const { return extended_; }

  /// Whether a lattice point lies in one of the table's sectors and inside
  /// the rank-2 scan window (rank 1 is unwindowed).
  bool in_window(const LatticeVector& pt) const;

  /// Drop terms whose lattice point is outside the window.
  FockElement project(const FockElement& e) const;

 private:
  const CaseConfig& cc_;
  LatticeVector rep_;
  bool extended_;
  BasisOptions opts_;
  mutable std::map<Rational, std::vector<FockBasisVector>> cache_;
  mutable std::map<Rational, std::unordered_map<FockBasisVector, long, FockBasisVectorHash>>
      index_;
};

/// Matrix of an arbitrary graded-degree-0 operator on one weight component.
MatrixQ component_matrix(const GradedComponentTable& table, const Rational& w,
                         const std::function<FockElement(const FockElement&)>& op);

/// Matrix of such an operator between two weights (w -> w2 component).
MatrixQ component_matrix(const GradedComponentTable& table, const Rational& w, const Rational& w2,
                         const std::function<FockElement(const FockElement&)>& op);

/// Memoized per-(operator index, mode) basis-vector images, coordinatized in
/// the target component. Sharable between closures that register the same
/// operators in the same order over the same table configuration.
struct ClosureImageCache {
  using SparseImage = std::vector<std::pair<long, Rational>>;
  std::map<std::pair<size_t, Rational>,
           std::unordered_map<FockBasisVector, SparseImage, FockBasisVectorHash>>
      images;
};

/// Smallest subspace containing the seeds and closed under all modes of the
/// registered operators, computed weight by weight up to the cutoff.
class SubmoduleClosure {
 public:
  SubmoduleClosure(const CaseConfig& cc, LatticeVector module_rep, bool extended,
                   Rational cutoff, BasisOptions opts = {});

  /// Register all modes of op (split into homogeneous components first).
  /// Deformed operators act through the deformed module structure.
  void add_operator(const FockElement& op, bool deformed);

  void seed(const FockElement& e);
  void run();

  /// Rank-2 closures only: clip operator images to the scan window instead
  /// of failing when a term walks off it.
  void set_window_projection(bool on) { project_ = on; }

  /// Lowest weight the closure explores. Without a floor the run descends to
  /// the table's minimum realized weight, which for rank-2 windows can lie
  /// far below anything the report needs.
  void set_weight_floor(Rational lo) { floor_ = std::move(lo); }

  /// Reuse another closure's image cache; only valid when both closures
  /// registered identical operators in the same order over an identically
  /// configured table.
  void share_cache(std::shared_ptr<ClosureImageCache> c) { cache_ = std::move(c); }

  long dim_at(const Rational& w) const;
  std::map<Rational, long> graded_dims() const;
  /// Rows span the closure inside the component's coordinate space.
  MatrixQ coord_matrix_at(const Rational& w) const;
  bool contains(const FockElement& e) const;
  const GradedComponentTable& table() const { return table_; }
  Rational cutoff() const { return cutoff_; }

 private:
  struct OpEntry {
    FockElement element;
    Rational weight;
    bool deformed;
    std::map<long, FockElement> expansion;  // precomputed when deformed
  };
  using SparseImage = ClosureImageCache::SparseImage;
  FockElement act(const OpEntry& op, const Rational& n, const FockElement& w) const;
  const SparseImage& act_sparse(size_t op_index, const Rational& n, const FockBasisVector& b,
                                const Rational& target_w);

  const CaseConfig& cc_;
  GradedComponentTable table_;
  Rational cutoff_;
  std::vector<OpEntry> ops_;
  bool project_ = false;
  std::optional<Rational> floor_;
  std::map<Rational, RowSpan> spans_;
  std::vector<std::pair<Rational, FockElement>> queue_;
  std::shared_ptr<ClosureImageCache> cache_ = std::make_shared<ClosureImageCache>();
};

}  // namespace voalog

#endif  // VOALOG_MODULE_SPAN_HPP
