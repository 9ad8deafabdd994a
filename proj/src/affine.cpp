#include "voalog/affine.hpp"

#include <functional>
#include <memory>
#include <sstream>
#include <unordered_map>

namespace voalog {

AffineRealization make_affine_realization() {
  AffineRealization ar;
  ar.cc = make_affine();
  const LatticeConfig& lat = ar.cc.lattice;
  ModeContext ctx = ar.cc.plain_context();

  ar.e = FockElement::ground(lat.vec({rat(3), rat(-3)}));
  FockBasisVector hb;
  hb.point = lat.zero();
  hb.bosons = {{1, 1}};
  ar.h = rat(4) * FockElement::basis(hb);
  ar.f = rat(2, 9) * apply_q(ar.cc, ctx, FockElement::ground(lat.vec({rat(3), rat(3)})));

  // closed form of f, up to the overall cocycle sign
  FockElement poly;
  {
    LatticeVector pt = lat.vec({rat(-3), rat(3)});
    FockBasisVector b1;
    b1.point = pt;
    b1.bosons = {{0, 1}, {0, 1}};
    poly.add(b1, rat(4));
    FockBasisVector b2;
    b2.point = pt;
    b2.bosons = {{0, 2}};
    poly.add(b2, rat(-2, 3));
  }
  if (!(ar.f == poly) && !(ar.f == Rational(-1) * poly))
    throw EngineError("affine realization: f does not match its polynomial form");

  ar.level = rat(-4, 3);
  FockElement k1 = apply_mode(ctx, ar.e, 1, ar.f);
  if (!(k1 == FockElement::ground(lat.zero(), ar.level)))
    throw EngineError("affine realization: e_1 f is not the expected level");
  return ar;
}

CurrentBracket current_bracket(const AffineRealization& ar, int x, int y) {
  if (x == y) return {0, 0, (x == 1) ? 2 * ar.level : Rational(0)};
  if (x == 0 && y == 1) return {0, -2, 0};
  if (x == 1 && y == 0) return {0, 2, 0};
  if (x == 1 && y == 2) return {2, -2, 0};
  if (x == 2 && y == 1) return {2, 2, 0};
  if (x == 0 && y == 2) return {1, 1, ar.level};
  return {1, -1, ar.level};  // x == 2, y == 0
}

// The defining relations: [e(m), f(n)], [h(m), e(n)], [h(m), f(n)], [h(m), h(n)].
static const std::pair<int, int> kBracketPairs[] = {{0, 2}, {1, 0}, {1, 2}, {1, 1}};

namespace {

// Images of single basis vectors under the current modes, coordinatized in a
// lazily grown global index so that repeated compositions reduce to sparse
// index arithmetic instead of ordered-map merges.
struct SparseModeTable {
  using SparseVec = std::vector<std::pair<long, Rational>>;
  using SparseAcc = std::unordered_map<long, Rational>;

  std::function<FockElement(int, const Rational&, const FockElement&)> mode;
  long mmax;  // images cached for |m| <= mmax

  std::unordered_map<FockBasisVector, long, FockBasisVectorHash> index;
  std::vector<FockBasisVector> vecs;
  // slot [x][m + mmax][idx]
  std::vector<std::vector<std::unique_ptr<SparseVec>>> images[3];

  SparseModeTable(std::function<FockElement(int, const Rational&, const FockElement&)> md,
                  long mm)
      : mode(std::move(md)), mmax(mm) {
    for (auto& per_x : images) per_x.resize(2 * mmax + 1);
  }

  long idx_of(const FockBasisVector& b) {
    auto it = index.find(b);
    if (it != index.end()) return it->second;
    long i = static_cast<long>(vecs.size());
    vecs.push_back(b);
    index.emplace(b, i);
    return i;
  }

  const SparseVec& image(int x, long m, long idx) {
    auto& slot = images[x][static_cast<size_t>(m + mmax)];
    if (static_cast<long>(slot.size()) <= idx) slot.resize(static_cast<size_t>(idx) + 1);
    if (!slot[static_cast<size_t>(idx)]) {
      FockElement img = mode(x, Rational(m), FockElement::basis(vecs[static_cast<size_t>(idx)]));
      auto sv = std::make_unique<SparseVec>();
      sv->reserve(img.terms().size());
      for (const auto& [b, c] : img.terms()) sv->emplace_back(idx_of(b), c);
      slot[static_cast<size_t>(idx)] = std::move(sv);
    }
    return *slot[static_cast<size_t>(idx)];
  }

  void apply_into(int x, long m, const SparseAcc& in, const Rational& scale, SparseAcc& out) {
    for (const auto& [i, c] : in) {
      if (c == 0) continue;
      Rational sc = c * scale;
      for (const auto& [j, v] : image(x, m, i)) out[j] += sc * v;
    }
  }

  SparseVec normalized(const SparseAcc& a) const {
    SparseVec out;
    for (const auto& [i, c] : a)
      if (c != 0) out.emplace_back(i, c);
    std::sort(out.begin(), out.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
  }
};

}  // namespace

bool affine_bracket_check(const AffineRealization& ar, const LatticeVector& module_rep,
                          bool extended, bool deformed, long mrange, const Rational& wcut,
                          const BasisOptions& opts, std::string* why) {
  const CaseConfig& cc = ar.cc;
  GradedComponentTable table(cc, module_rep, extended, opts);
  ModeContext ctx = extended ? cc.extended_context(module_rep) : cc.plain_context();

  const FockElement* cur[3] = {&ar.e, &ar.h, &ar.f};
  std::map<long, FockElement> exp_cache[3];
  for (int i = 0; i < 3; ++i)
    if (deformed) exp_cache[i] = delta_expand(cc, *cur[i]);

  auto mode = [&](int x, const Rational& n, const FockElement& w) {
    if (deformed) return apply_expanded_mode(cc, module_rep, exp_cache[x], n, w);
    return apply_mode(ctx, *cur[x], n, w);
  };
  SparseModeTable tbl(mode, 2 * mrange);

  std::vector<Rational> ws = table.weights(table.min_weight(wcut), wcut);
  for (const auto& w : ws) {
    for (const auto& bv : table.basis(w)) {
      long i0 = tbl.idx_of(bv);
      // first layer, cached per basis vector
      std::map<std::pair<int, long>, SparseModeTable::SparseAcc> first;
      for (int y = 0; y < 3; ++y)
        for (long n = -mrange; n <= mrange; ++n) {
          auto& acc = first[{y, n}];
          for (const auto& [j, c] : tbl.image(y, n, i0)) acc[j] = c;
        }
      for (auto [x, y] : kBracketPairs)
          for (long m = -mrange; m <= mrange; ++m)
            for (long n = (x == y) ? m : -mrange; n <= mrange; ++n) {
              SparseModeTable::SparseAcc diff;
              tbl.apply_into(x, m, first[{y, n}], 1, diff);
              tbl.apply_into(y, n, first[{x, m}], -1, diff);
              CurrentBracket cb = current_bracket(ar, x, y);
              if (cb.coeff != 0)
                for (const auto& [j, c] : tbl.image(cb.target, m + n, i0))
                  diff[j] -= cb.coeff * c;
              if (m + n == 0 && cb.pairing != 0) diff[i0] -= Rational(m) * cb.pairing;
              if (!tbl.normalized(diff).empty()) {
                if (why) {
                  std::ostringstream os;
                  const char* names = "ehf";
                  os << "[" << names[x] << "(" << m << ")," << names[y] << "(" << n
                     << ")] mismatch on " << bv.str(cc.lattice);
                  *why = os.str();
                }
                return false;
              }
            }
    }
  }
  return true;
}

RThirdProbe rminusthird_probe(const AffineRealization& ar, const Rational& cutoff,
                              const BasisOptions& opts) {
  const CaseConfig& cc = ar.cc;
  const LatticeConfig& lat = cc.lattice;
  RThirdProbe out;

  LatticeVector rep = lat.vec({rat(-3), rat(1)});
  FockElement v1 = FockElement::ground(rep);
  ModeContext ext = cc.extended_context(rep);
  FockElement v2 = apply_qt(cc, ext, v1);  // e^{-g+d}

  // top-level relations and the Jordan block of Lt(0) on span{v1, v2}
  FockElement l0v1 = deformed_virasoro(cc, rep, 0, v1);
  FockElement l0v2 = deformed_virasoro(cc, rep, 0, v2);
  out.top_relations = (l0v1 == rat(-1, 3) * v1 + v2) && (l0v2 == rat(-1, 3) * v2);
  MatrixQ top(2, 2);
  top << rat(-1, 3), 0, 1, rat(-1, 3);
  if (out.top_relations) out.top_blocks = jordan_blocks(top);

  // highest-weight-type annihilation and the two nonzero descendants
  auto de = delta_expand(cc, ar.e);
  auto df = delta_expand(cc, ar.f);
  out.hw_annihilation = true;
  for (long n = 0; n <= 4; ++n) {
    if (!apply_expanded_mode(cc, rep, de, Rational(n + 1), v1).is_zero())
      out.hw_annihilation = false;
    if (!apply_expanded_mode(cc, rep, df, Rational(n + 2), v1).is_zero())
      out.hw_annihilation = false;
  }
  out.e0_v1 = apply_expanded_mode(cc, rep, de, 0, v1);
  FockElement f1v1 = apply_expanded_mode(cc, rep, df, 1, v1);
  FockBasisVector tgt;
  tgt.point = lat.vec({rat(-4), rat(4)});
  out.nu = f1v1.coeff(tgt);
  if (!(f1v1 == FockElement::basis(tgt, out.nu))) out.nu = 0;  // not proportional

  // closures of v1 and of e^{-4g+4d} under all deformed current modes;
  // both register the same operators over the same table, so mode images
  // computed for one are reusable by the other
  auto cache = std::make_shared<ClosureImageCache>();
  auto close = [&](const FockElement& seedv) {
    SubmoduleClosure cl(cc, rep, true, cutoff, opts);
    cl.set_window_projection(true);
    cl.set_weight_floor(-cutoff);
    cl.share_cache(cache);
    cl.add_operator(ar.e, true);
    cl.add_operator(ar.h, true);
    cl.add_operator(ar.f, true);
    cl.seed(seedv);
    cl.run();
    return cl;
  };
  SubmoduleClosure r = close(v1);
  SubmoduleClosure e1 = close(FockElement::ground(lat.vec({rat(-4), rat(4)})));
  out.r_dims = r.graded_dims();
  out.e1_dims = e1.graded_dims();

  // Lt(0) = L(0) + Qt with L(0) diagonal, so the quotient closure/e1 is
  // non-logarithmic exactly when Qt maps the closure into e1.
  out.quotient_nonlogarithmic = true;
  for (const auto& [w, dim] : out.r_dims) {
    const auto& basis = r.table().basis(w);
    MatrixQ rows = r.coord_matrix_at(w);
    for (long i = 0; i < rows.rows(); ++i) {
      FockElement x = from_coordinates(rows.row(i).transpose(), basis);
      FockElement qx = apply_qt(cc, ext, x);
      if (qx.is_zero()) continue;
      if (!e1.contains(qx)) out.quotient_nonlogarithmic = false;
    }
  }
  return out;
}

}  // namespace voalog
