#include "voalog/modes.hpp"

#include <cstring>
#include <functional>
#include <memory>
#include <unordered_map>

#include "voalog/basis.hpp"

namespace voalog {

FockElement apply_heisenberg(const LatticeConfig& cfg, const LatticeVector& h, long n,
                             const FockElement& state) {
  FockElement out;
  for (const auto& [b, c] : state.terms()) {
    if (n == 0) {
      out.add(b, c * pairing(cfg, h, b.point));
    } else if (n < 0) {
      for (int i = 0; i < cfg.rank; ++i) {
        if (h.c[i] == 0) continue;
        FockBasisVector nb = b;
        nb.bosons.emplace_back(i, -n);
        nb.normalize();
        out.add(nb, c * h.c[i]);
      }
    } else {
      // [h(n), g(-n)] = n <h, g>; kill everything else on the right.
      for (size_t i = 0; i < b.bosons.size(); ++i) {
        if (i > 0 && b.bosons[i] == b.bosons[i - 1]) continue;  // count once per distinct
        auto [g, m] = b.bosons[i];
        if (m != n) continue;
        long count = static_cast<long>(
            std::count(b.bosons.begin(), b.bosons.end(), std::make_pair(g, m)));
        Rational pair = pairing(cfg, h, cfg.gen(g));
        if (pair == 0) continue;
        FockBasisVector nb = b;
        nb.bosons.erase(nb.bosons.begin() + static_cast<long>(i));
        out.add(nb, c * Rational(count) * Rational(n) * pair);
      }
    }
  }
  return out;
}

FockElement apply_fermion(const LatticeConfig& cfg, const Rational& s, const FockElement& state) {
  if (!is_half_integer(s) || is_integer(s) || s == 0)
    throw EngineError("apply_fermion: mode must be a half-odd integer");
  FockElement out;
  for (const auto& [b, c] : state.terms()) {
    Rational sign = lattice_parity(cfg, b.point) ? -1 : 1;  // cross the lattice factor
    if (s < 0) {
      Rational r = -s;
      FockBasisVector nb = b;
      size_t pos = 0;
      bool dup = false;
      for (; pos < nb.fermions.size(); ++pos) {
        if (nb.fermions[pos] == r) {
          dup = true;
          break;
        }
        if (nb.fermions[pos] < r) break;
      }
      if (dup) continue;
      // (-1)^(number of larger entries crossed) to restore decreasing order
      if (pos % 2 == 1) sign = -sign;
      nb.fermions.insert(nb.fermions.begin() + static_cast<long>(pos), r);
      out.add(nb, c * sign);
    } else {
      for (size_t i = 0; i < b.fermions.size(); ++i) {
        if (b.fermions[i] != s) continue;
        FockBasisVector nb = b;
        nb.fermions.erase(nb.fermions.begin() + static_cast<long>(i));
        Rational sg = (i % 2 == 0) ? sign : -sign;
        out.add(nb, c * sg);
        break;
      }
    }
  }
  return out;
}

namespace {

// Smallest integer >= q.
long ceil_long(const Rational& q) {
  Rational f = floor_rat(q);
  return to_long(f) + (f == q ? 0 : 1);
}

inline size_t hash_mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}
inline size_t hash_rat(const Rational& q) {
  double d = q.get_d();
  size_t u;
  std::memcpy(&u, &d, sizeof(u));
  return u;
}
inline size_t hash_basis_vector(size_t h, const FockBasisVector& b) {
  for (const auto& [g, n] : b.bosons) h = hash_mix(h, (static_cast<size_t>(g) << 32) ^ n);
  for (const auto& c : b.point.c) h = hash_mix(h, hash_rat(c));
  for (const auto& r : b.fermions) h = hash_mix(h, hash_rat(r));
  return h;
}

// Memoization key: the configured case is pinned by (tag, p, p'), the
// truncation context by the module representative (empty when plain).
struct ModeCacheKey {
  int tag;
  long p, pp;
  LatticeVector rep;  // empty coefficient list when no truncation
  FockBasisVector u;
  Rational m;
  FockBasisVector w;
  size_t hash = 0;

  void rehash() {
    size_t h = hash_mix(static_cast<size_t>(tag), (static_cast<size_t>(p) << 16) ^ pp);
    for (const auto& c : rep.c) h = hash_mix(h, hash_rat(c));
    h = hash_basis_vector(h, u);
    h = hash_mix(h, hash_rat(m));
    h = hash_basis_vector(h, w);
    hash = h;
  }

  friend bool operator==(const ModeCacheKey& a, const ModeCacheKey& b) {
    return a.hash == b.hash && a.tag == b.tag && a.p == b.p && a.pp == b.pp && a.m == b.m &&
           a.rep == b.rep && a.u == b.u && a.w == b.w;
  }
};

struct ModeCacheHash {
  size_t operator()(const ModeCacheKey& k) const { return k.hash; }
};

struct ModeEngine {
  const ModeContext& ctx;
  const LatticeConfig& cfg;

  explicit ModeEngine(const ModeContext& c) : ctx(c), cfg(*c.cfg) {}

  bool op_shifted(const LatticeVector& mu) const { return !in_base_lattice(cfg, mu); }
  bool state_shifted(const LatticeVector& lam) const {
    return !same_sector(cfg, lam, ctx.ext->module_rep);
  }

  // u_m applied to a single basis vector w, u a single basis vector.
  // Results are memoized up to a fixed memory budget (counted in stored terms);
  // once the budget is spent, further results are computed without caching.
  // The shared_ptr keeps hit results alive with no deep copy.
  std::shared_ptr<const FockElement> term_mode(const FockBasisVector& u, const Rational& m,
                                               const FockBasisVector& w) {
    static constexpr long kCacheTermBudget = 4'000'000;
    thread_local std::unordered_map<ModeCacheKey, std::shared_ptr<const FockElement>,
                                    ModeCacheHash>
        cache;
    thread_local long stored_terms = 0;
    // Peeling only ever shifts the mode index by integers, so the exp-mode
    // grid test at the leaves is decided here: off-grid means every leaf is 0.
    if (!is_integer(m + pairing(cfg, u.point, w.point))) {
      static const auto kZero = std::make_shared<const FockElement>();
      return kZero;
    }
    ModeCacheKey key{static_cast<int>(cfg.case_tag),
                     cfg.p,
                     cfg.pprime,
                     ctx.ext ? ctx.ext->module_rep : LatticeVector{},
                     u,
                     m,
                     w};
    key.rehash();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto r = std::make_shared<const FockElement>(term_mode_uncached(u, m, w));
    long sz = static_cast<long>(r->terms().size());
    if (stored_terms + sz > kCacheTermBudget) return r;
    stored_terms += sz;
    return cache.emplace(std::move(key), std::move(r)).first->second;
  }

  FockElement term_mode_uncached(const FockBasisVector& u, const Rational& m,
                                 const FockBasisVector& w) {
    if (ctx.ext && op_shifted(u.point) && state_shifted(w.point)) return {};
    if (!u.bosons.empty()) return boson_peel(u, m, w);
    if (!u.fermions.empty()) return fermion_peel(u, m, w);
    return exp_mode(u.point, m, w);
  }

  // Vanishing bound: u_j w = 0 once the target weight drops below the ground
  // weight of the combined lattice point.
  Rational index_bound(const FockBasisVector& u, const FockBasisVector& w) const {
    // u_j w = 0 for j > wt(u) + wt(w) - gw(mu+lam) - 1.
    return weight_of(cfg, u) + weight_of(cfg, w) - ground_weight(cfg, u.point + w.point) - 1;
  }

  FockElement boson_peel(const FockBasisVector& u, const Rational& m, const FockBasisVector& w) {
    auto [g, n] = u.bosons.front();
    FockBasisVector v = u;
    v.bosons.erase(v.bosons.begin());
    LatticeVector hg = cfg.gen(g);
    FockElement out;

    // creation side: sum over k <= -1 of C(-k-1, n-1) a(k) v_{m-k-n} w
    Rational jmax = index_bound(v, w);  // v_j w = 0 beyond this
    long kmin = ceil_long(m - n - jmax);
    for (long k = -1; k >= kmin; --k) {
      Rational coef = binomial(-k - 1, n - 1);
      if (coef == 0) continue;
      auto inner = term_mode(v, m - k - n, w);
      if (inner->is_zero()) continue;
      out.add_scaled(apply_heisenberg(cfg, hg, k, *inner), coef);
    }
    // annihilation side: sum over k >= 0 of C(-k-1, n-1) v_{m-k-n} a(k) w
    long kmaxw = 0;
    for (const auto& [gg, nn] : w.bosons) kmaxw = std::max(kmaxw, nn);
    for (long k = 0; k <= kmaxw; ++k) {
      Rational coef = binomial(-k - 1, n - 1);
      if (coef == 0) continue;
      FockElement aw = apply_heisenberg(cfg, hg, k, FockElement::basis(w));
      for (const auto& [wb, wc] : aw.terms())
        out.add_scaled(*term_mode(v, m - k - n, wb), coef * wc);
    }
    return out;
  }

  FockElement fermion_peel(const FockBasisVector& u, const Rational& m, const FockBasisVector& w) {
    Rational r = u.fermions.front();
    FockBasisVector v = u;
    v.fermions.erase(v.fermions.begin());
    // Pulling phi(-r) in front of the op's lattice part costs a sign.
    Rational pref = lattice_parity(cfg, u.point) ? -1 : 1;
    int vpar = (lattice_parity(cfg, u.point) + static_cast<int>(v.fermions.size())) % 2;
    long rk = to_long(r - rat(1, 2));  // r - 1/2, the binomial order
    FockElement out;

    // creation side: s < 0, phi(s) v_{m-s-r} w
    Rational jmax = index_bound(v, w);
    Rational sbound = m - r - jmax;  // need s >= sbound
    for (Rational s = rat(-1, 2); s >= sbound; s -= 1) {
      Rational coef = binomial(-s - rat(1, 2), rk);
      if (coef == 0) continue;
      auto inner = term_mode(v, m - s - r, w);
      if (inner->is_zero()) continue;
      out.add_scaled(apply_fermion(cfg, s, *inner), pref * coef);
    }
    // annihilation side: s > 0, only entries of w's word survive
    Rational asign = (vpar == 1) ? -1 : 1;
    for (const auto& s : w.fermions) {
      Rational coef = binomial(-s - rat(1, 2), rk);
      if (coef == 0) continue;
      FockElement fw = apply_fermion(cfg, s, FockElement::basis(w));
      for (const auto& [wb, wc] : fw.terms())
        out.add_scaled(*term_mode(v, m - s - r, wb), pref * asign * coef * wc);
    }
    return out;
  }

  // Mode of a pure exponential e^mu at index m on basis vector w.
  FockElement exp_mode(const LatticeVector& mu, const Rational& m, const FockBasisVector& w) {
    Rational t = -m - 1 - pairing(cfg, mu, w.point);
    if (!is_integer(t)) return {};  // x-exponent grid misses -m-1
    long deficit = to_long(t);      // creator degree minus annihilated degree
    Rational eps = cocycle_sign(cfg, mu, w.point);

    // Distinct boson occurrences of w with multiplicities.
    std::vector<std::pair<std::pair<int, long>, long>> occ;
    for (const auto& p : w.bosons) {
      if (!occ.empty() && occ.back().first == p)
        ++occ.back().second;
      else
        occ.emplace_back(p, 1);
    }

    FockElement out;
    std::vector<long> take(occ.size(), 0);
    std::function<void(size_t, Rational, long)> rec = [&](size_t i, Rational factor, long removed) {
      if (i == occ.size()) {
        long needed = deficit + removed;
        if (needed < 0) return;
        FockBasisVector base;
        base.point = w.point + mu;
        base.fermions = w.fermions;
        for (size_t j = 0; j < occ.size(); ++j)
          for (long cpy = 0; cpy < occ[j].second - take[j]; ++cpy)
            base.bosons.push_back(occ[j].first);
        if (needed == 0) {
          base.normalize();
          out.add(base, eps * factor);
          return;
        }
        for (const auto& mono : boson_monomials(cfg.rank, needed)) {
          Rational f = factor;
          bool ok = true;
          for (size_t a = 0; a < mono.size();) {
            size_t bnd = a;
            while (bnd < mono.size() && mono[bnd] == mono[a]) ++bnd;
            auto [gi, nn] = mono[a];
            if (mu.c[gi] == 0) {
              ok = false;
              break;
            }
            long k = static_cast<long>(bnd - a);
            for (long q = 0; q < k; ++q) f *= mu.c[gi] / Rational(nn) / Rational(q + 1);
            a = bnd;
          }
          if (!ok) continue;
          FockBasisVector nb = base;
          nb.bosons.insert(nb.bosons.end(), mono.begin(), mono.end());
          nb.normalize();
          out.add(nb, eps * f);
        }
        return;
      }
      auto [pair_gn, cnt] = occ[i];
      Rational contraction = -pairing(cfg, mu, cfg.gen(pair_gn.first));
      Rational pw = 1;
      for (long j = 0; j <= cnt; ++j) {
        take[i] = j;
        rec(i + 1, factor * binomial(cnt, j) * pw, removed + j * pair_gn.second);
        pw *= contraction;
      }
      take[i] = 0;
    };
    // note: pw multiplies after use, so j copies get contraction^j
    rec(0, 1, 0);
    return out;
  }
};

}  // namespace

FockElement apply_mode(const ModeContext& ctx, const FockElement& op, const Rational& r,
                       const FockElement& state) {
  ModeEngine eng(ctx);
  FockElement out;
  for (const auto& [ub, uc] : op.terms())
    for (const auto& [wb, wc] : state.terms()) out.add_scaled(*eng.term_mode(ub, r, wb), uc * wc);
  return out;
}

bool mode_exists(const ModeContext& ctx, const FockElement& op, const Rational& r,
                 const FockElement& state) {
  for (const auto& [ub, uc] : op.terms())
    for (const auto& [wb, wc] : state.terms())
      if (is_integer(r + pairing(*ctx.cfg, ub.point, wb.point))) return true;
  return false;
}

FockElement virasoro(const ModeContext& ctx, const FockElement& omega, long n,
                     const FockElement& state) {
  return apply_mode(ctx, omega, Rational(n + 1), state);
}

VectorQ coordinates(const FockElement& e, const std::vector<FockBasisVector>& basis) {
  VectorQ v = VectorQ::Zero(static_cast<long>(basis.size()));
  std::map<FockBasisVector, long> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<long>(i);
  for (const auto& [b, c] : e.terms()) {
    auto it = index.find(b);
    if (it == index.end()) throw EngineError("coordinates: term outside basis");
    v(it->second) = c;
  }
  return v;
}

FockElement from_coordinates(const VectorQ& v, const std::vector<FockBasisVector>& basis) {
  FockElement e;
  for (long i = 0; i < v.size(); ++i) e.add(basis[static_cast<size_t>(i)], v(i));
  return e;
}

MatrixQ operator_matrix(const ModeContext& ctx, const FockElement& op, const Rational& r,
                        const std::vector<FockBasisVector>& from,
                        const std::vector<FockBasisVector>& to) {
  MatrixQ m = MatrixQ::Zero(static_cast<long>(to.size()), static_cast<long>(from.size()));
  for (size_t j = 0; j < from.size(); ++j) {
    FockElement img = apply_mode(ctx, op, r, FockElement::basis(from[j]));
    m.col(static_cast<long>(j)) = coordinates(img, to);
  }
  return m;
}

}  // namespace voalog
