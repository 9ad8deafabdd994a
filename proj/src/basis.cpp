#include "voalog/basis.hpp"

#include <algorithm>
#include <map>

namespace voalog {

static void boson_rec(int rank, long rem, std::pair<int, long> min_pair,
                      std::vector<std::pair<int, long>>& cur,
                      std::vector<std::vector<std::pair<int, long>>>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int g = 0; g < rank; ++g) {
    for (long n = 1; n <= rem; ++n) {
      std::pair<int, long> p{g, n};
      if (p < min_pair) continue;
      cur.push_back(p);
      boson_rec(rank, rem - n, p, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<std::vector<std::pair<int, long>>> boson_monomials(int rank, long d) {
  if (d < 0) return {};
  thread_local std::map<std::pair<int, long>, std::vector<std::vector<std::pair<int, long>>>>
      cache;
  auto it = cache.find({rank, d});
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::pair<int, long>>> out;
  std::vector<std::pair<int, long>> cur;
  boson_rec(rank, d, {0, 1}, cur, out);
  return cache.emplace(std::make_pair(rank, d), std::move(out)).first->second;
}

// Words use doubled values internally: distinct odd positive integers.
static void fermion_rec(long rem2, long max2, std::vector<Rational>& cur,
                        std::vector<std::vector<Rational>>& out) {
  if (rem2 == 0) {
    out.push_back(cur);
    return;
  }
  long start = std::min(rem2, max2);
  if (start % 2 == 0) --start;  // parts are odd (doubled half-odd modes)
  for (long r2 = start; r2 >= 1; r2 -= 2) {
    cur.push_back(rat(r2, 2));
    fermion_rec(rem2 - r2, r2 - 2, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Rational>> fermion_words(const Rational& d) {
  std::vector<std::vector<Rational>> out;
  if (d < 0) return out;
  Rational d2 = d * 2;
  if (!is_integer(d2)) return out;
  long rem2 = to_long(d2);
  long max2 = (rem2 % 2 == 1) ? rem2 : rem2 - 1;
  std::vector<Rational> cur;
  fermion_rec(rem2, max2, cur, out);
  return out;
}

std::vector<LatticeVector> sector_points(const LatticeConfig& cfg, const Sector& sector,
                                         const Rational& ground_bound, const BasisOptions& opts) {
  std::vector<LatticeVector> pts;
  if (cfg.rank == 1) {
    LatticeVector b = cfg.zero();
    for (int i = 0; i < cfg.rank; ++i) b.c[i] = cfg.base_basis(i, 0);
    // Ground weight along the coset is A k^2 + B k + C with A = <b,b>/2 > 0,
    // so the admissible k form one interval around the vertex.
    Rational A = pairing(cfg, b, b) / 2;
    Rational B = pairing(cfg, b, sector.rep) - pairing(cfg, cfg.rho, b);
    if (A <= 0) throw ConfigError("sector_points: base vector not positive");
    long k0 = to_long(floor_rat(-B / (2 * A)));
    auto gw = [&](long k) { return ground_weight(cfg, sector.rep + Rational(k) * b); };
    long start = gw(k0) <= ground_bound ? k0 : (gw(k0 + 1) <= ground_bound ? k0 + 1 : k0);
    if (gw(start) > ground_bound) return pts;
    for (long k = start; gw(k) <= ground_bound; --k) pts.push_back(sector.rep + Rational(k) * b);
    for (long k = start + 1; gw(k) <= ground_bound; ++k)
      pts.push_back(sector.rep + Rational(k) * b);
  } else {
    LatticeVector b1 = cfg.zero(), b2 = cfg.zero();
    for (int i = 0; i < cfg.rank; ++i) {
      b1.c[i] = cfg.base_basis(i, 0);
      b2.c[i] = cfg.base_basis(i, 1);
    }
    // Window = L1 ball in base coordinates: |a| + |c| <= W.
    long W = opts.lattice_window;
    for (long a = -W; a <= W; ++a)
      for (long c = -(W - std::labs(a)); c <= W - std::labs(a); ++c) {
        LatticeVector v = sector.rep + Rational(a) * b1 + Rational(c) * b2;
        if (ground_weight(cfg, v) <= ground_bound) pts.push_back(v);
      }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<FockBasisVector> graded_basis(const LatticeConfig& cfg, const Sector& sector,
                                          const Rational& weight, const BasisOptions& opts) {
  Rational off = weight - ground_weight(cfg, sector.rep);
  bool on_grid = cfg.fermionic ? is_half_integer(off) : is_integer(off);
  if (!on_grid)
    throw NonIntegralWeight("weight " + rat_str(weight) + " is off the sector's weight grid");

  std::vector<FockBasisVector> out;
  for (const auto& pt : sector_points(cfg, sector, weight, opts)) {
    Rational rem = weight - ground_weight(cfg, pt);
    if (rem < 0) continue;
    if (!cfg.fermionic) {
      if (!is_integer(rem)) continue;
      for (auto& bos : boson_monomials(cfg.rank, to_long(rem))) {
        FockBasisVector v;
        v.bosons = std::move(bos);
        v.point = pt;
        out.push_back(std::move(v));
      }
    } else {
      for (long j = 0; Rational(j) <= rem; ++j) {
        Rational df = rem - j;
        for (auto& fw : fermion_words(df)) {
          for (auto& bos : boson_monomials(cfg.rank, j)) {
            FockBasisVector v;
            v.bosons = bos;
            v.point = pt;
            v.fermions = fw;
            out.push_back(std::move(v));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace voalog
