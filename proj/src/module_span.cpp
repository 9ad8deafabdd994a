#include "voalog/module_span.hpp"

#include <algorithm>
#include <set>

namespace voalog {

GradedComponentTable::GradedComponentTable(const CaseConfig& cc, LatticeVector module_rep,
                                           bool extended, BasisOptions opts)
    : cc_(cc), rep_(std::move(module_rep)), extended_(extended), opts_(opts) {}

const std::vector<FockBasisVector>& GradedComponentTable::basis(const Rational& w) const {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  std::vector<FockBasisVector> b;
  auto collect = [&](const LatticeVector& rep) {
    try {
      auto part = graded_basis(cc_.lattice, Sector{rep}, w, opts_);
      b.insert(b.end(), part.begin(), part.end());
    } catch (const NonIntegralWeight&) {
      // this summand has no component at w; the other one may
    }
  };
  collect(rep_);
  if (extended_) collect(rep_ + cc_.ext_shift);
  std::sort(b.begin(), b.end());
  return cache_.emplace(w, std::move(b)).first->second;
}

VectorQ GradedComponentTable::coords(const FockElement& e, const Rational& w) const {
  const auto& b = basis(w);
  auto it = index_.find(w);
  if (it == index_.end()) {
    std::unordered_map<FockBasisVector, long, FockBasisVectorHash> idx;
    idx.reserve(b.size());
    for (size_t i = 0; i < b.size(); ++i) idx.emplace(b[i], static_cast<long>(i));
    it = index_.emplace(w, std::move(idx)).first;
  }
  VectorQ v = VectorQ::Zero(static_cast<long>(b.size()));
  for (const auto& [bv, c] : e.terms()) {
    auto f = it->second.find(bv);
    if (f == it->second.end()) throw EngineError("coords: term outside component basis");
    v(f->second) = c;
  }
  return v;
}

std::vector<Rational> GradedComponentTable::weights(const Rational& lo, const Rational& hi) const {
  std::set<Rational> ws;
  Rational step = cc_.lattice.fermionic ? rat(1, 2) : Rational(1);
  auto scan = [&](const LatticeVector& rep) {
    for (const auto& pt : sector_points(cc_.lattice, Sector{rep}, hi, opts_)) {
      Rational g = ground_weight(cc_.lattice, pt);
      for (Rational w = g; w <= hi; w += step) ws.insert(w);
    }
  };
  scan(rep_);
  if (extended_) scan(rep_ + cc_.ext_shift);
  std::vector<Rational> out;
  for (const auto& w : ws)
    if (w >= lo && !basis(w).empty()) out.push_back(w);
  return out;
}

Rational GradedComponentTable::min_weight(const Rational& hi) const {
  bool any = false;
  Rational best;
  auto scan = [&](const LatticeVector& rep) {
    for (const auto& pt : sector_points(cc_.lattice, Sector{rep}, hi, opts_)) {
      Rational g = ground_weight(cc_.lattice, pt);
      if (!any || g < best) {
        best = g;
        any = true;
      }
    }
  };
  scan(rep_);
  if (extended_) scan(rep_ + cc_.ext_shift);
  if (!any) throw EngineError("min_weight: module has no states below the bound");
  return best;
}

bool GradedComponentTable::in_window(const LatticeVector& pt) const {
  auto fits = [&](const LatticeVector& rep) {
    if (!same_sector(cc_.lattice, pt, rep)) return false;
    if (cc_.lattice.rank == 1) return true;
    auto co = base_coordinates(cc_.lattice, pt - rep);
    long norm = 0;
    for (long c : co) norm += std::labs(c);
    return norm <= opts_.lattice_window;
  };
  if (fits(rep_)) return true;
  return extended_ && fits(rep_ + cc_.ext_shift);
}

FockElement GradedComponentTable::project(const FockElement& e) const {
  FockElement out;
  for (const auto& [b, c] : e.terms())
    if (in_window(b.point)) out.add(b, c);
  return out;
}

MatrixQ component_matrix(const GradedComponentTable& table, const Rational& w,
                         const std::function<FockElement(const FockElement&)>& op) {
  return component_matrix(table, w, w, op);
}

MatrixQ component_matrix(const GradedComponentTable& table, const Rational& w, const Rational& w2,
                         const std::function<FockElement(const FockElement&)>& op) {
  const auto& from = table.basis(w);
  const auto& to = table.basis(w2);
  MatrixQ m = MatrixQ::Zero(static_cast<long>(to.size()), static_cast<long>(from.size()));
  for (size_t j = 0; j < from.size(); ++j)
    m.col(static_cast<long>(j)) = table.coords(op(FockElement::basis(from[j])), w2);
  return m;
}

SubmoduleClosure::SubmoduleClosure(const CaseConfig& cc, LatticeVector module_rep, bool extended,
                                   Rational cutoff, BasisOptions opts)
    : cc_(cc), table_(cc, std::move(module_rep), extended, opts), cutoff_(std::move(cutoff)) {}

void SubmoduleClosure::add_operator(const FockElement& op, bool deformed) {
  // split into homogeneous components
  std::map<Rational, FockElement> parts;
  for (const auto& [b, c] : op.terms()) parts[weight_of(cc_.lattice, b)].add(b, c);
  for (auto& [w, e] : parts) {
    OpEntry entry{std::move(e), w, deformed, {}};
    if (deformed) entry.expansion = delta_expand(cc_, entry.element);
    ops_.push_back(std::move(entry));
  }
}

void SubmoduleClosure::seed(const FockElement& e) {
  if (e.is_zero()) return;
  Rational w = e.homogeneous_weight(cc_.lattice);
  if (w > cutoff_) throw EngineError("seed above cutoff");
  auto [it, inserted] = spans_.try_emplace(w, table_.dim(w));
  if (it->second.insert(table_.coords(e, w))) queue_.emplace_back(w, e);
}

FockElement SubmoduleClosure::act(const OpEntry& op, const Rational& n,
                                  const FockElement& w) const {
  if (op.deformed) return apply_expanded_mode(cc_, table_.module_rep(), op.expansion, n, w);
  ModeContext ctx =
      table_.extended() ? cc_.extended_context(table_.module_rep()) : cc_.plain_context();
  return apply_mode(ctx, op.element, n, w);
}

// act() on one basis vector, memoized as sparse coordinates in the target
// component (projected first when projection is on, so every term indexes).
const SubmoduleClosure::SparseImage& SubmoduleClosure::act_sparse(size_t op_index,
                                                                  const Rational& n,
                                                                  const FockBasisVector& b,
                                                                  const Rational& target_w) {
  auto& per_mode = cache_->images[{op_index, n}];
  auto it = per_mode.find(b);
  if (it != per_mode.end()) return it->second;
  FockElement img = act(ops_[op_index], n, FockElement::basis(b));
  if (project_) img = table_.project(img);
  SparseImage sp;
  if (!img.is_zero()) {
    VectorQ v = table_.coords(img, target_w);
    for (long j = 0; j < v.size(); ++j)
      if (v(j) != 0) sp.emplace_back(j, v(j));
  }
  return per_mode.emplace(b, std::move(sp)).first->second;
}

void SubmoduleClosure::run() {
  Rational lo = table_.min_weight(cutoff_);
  if (floor_ && *floor_ > lo) lo = *floor_;
  std::vector<Rational> targets = table_.weights(lo, cutoff_);
  while (!queue_.empty()) {
    auto [w, e] = std::move(queue_.back());
    queue_.pop_back();
    for (size_t oi = 0; oi < ops_.size(); ++oi) {
      const auto& op = ops_[oi];
      for (const auto& wt : targets) {
        Rational n = w + op.weight - wt - 1;
        // Accumulate sparsely; most (operator, mode) images are empty and
        // must not pay for a dense zero vector over the whole component.
        std::unordered_map<long, Rational> acc;
        for (const auto& [b, c] : e.terms())
          for (const auto& [j, a] : act_sparse(oi, n, b, wt)) acc[j] += c * a;
        bool any = false;
        for (const auto& [j, c] : acc)
          if (c != 0) any = true;
        if (!any) continue;
        VectorQ img = VectorQ::Zero(table_.dim(wt));
        for (const auto& [j, c] : acc) img(j) = c;
        auto it = spans_.try_emplace(wt, table_.dim(wt)).first;
        // Enqueue the raw image, not its echelon residual: raw images stay
        // sparse in the component basis, so later cache lookups touch few
        // basis vectors, while residuals fill in and drag the whole
        // component through the cache.
        if (it->second.insert(img))
          queue_.emplace_back(wt, from_coordinates(img, table_.basis(wt)));
      }
    }
  }
}

long SubmoduleClosure::dim_at(const Rational& w) const {
  auto it = spans_.find(w);
  return it == spans_.end() ? 0 : it->second.dim();
}

std::map<Rational, long> SubmoduleClosure::graded_dims() const {
  std::map<Rational, long> out;
  for (const auto& [w, s] : spans_)
    if (s.dim() > 0) out[w] = s.dim();
  return out;
}

MatrixQ SubmoduleClosure::coord_matrix_at(const Rational& w) const {
  auto it = spans_.find(w);
  if (it == spans_.end()) return MatrixQ::Zero(0, table_.dim(w));
  return it->second.as_matrix();
}

bool SubmoduleClosure::contains(const FockElement& e) const {
  if (e.is_zero()) return true;
  Rational w = e.homogeneous_weight(cc_.lattice);
  auto it = spans_.find(w);
  if (it == spans_.end()) return false;
  return it->second.contains(table_.coords(e, w));
}

}  // namespace voalog
