#include "voalog/deformation.hpp"

#include <set>
#include <sstream>

namespace voalog {

namespace {

// Largest integer j such that op_j st can be nonzero (by the ground-weight
// bound per term pair); -1 when one side is zero.
long mode_upper_bound(const LatticeConfig& cfg, const FockElement& op, const FockElement& st) {
  bool any = false;
  Rational best;
  for (const auto& [u, uc] : op.terms())
    for (const auto& [w, wc] : st.terms()) {
      Rational b =
          weight_of(cfg, u) + weight_of(cfg, w) - ground_weight(cfg, u.point + w.point) - 1;
      if (!any || b > best) {
        best = b;
        any = true;
      }
    }
  if (!any) return -1;
  return to_long(floor_rat(best));
}

}  // namespace

void validate_deformation(const CaseConfig& cc) {
  const FockElement& v = cc.qt_vector;
  ModeContext ctx = cc.plain_context();
  if (!(virasoro(ctx, cc.omega, 0, v) == v))
    throw ConfigError("deformation vector is not of weight 1");
  for (long n = 1; n <= 3; ++n)
    if (!virasoro(ctx, cc.omega, n, v).is_zero())
      throw ConfigError("deformation vector is not primary");
  long bound = mode_upper_bound(cc.lattice, v, v);
  for (long i = 0; i <= bound; ++i)
    if (!apply_mode(ctx, v, Rational(i), v).is_zero())
      throw ConfigError("deformation vector has nonvanishing nonnegative self-modes");
}

std::map<long, FockElement> delta_expand(const CaseConfig& cc, const FockElement& a) {
  const FockElement& v = cc.qt_vector;
  ModeContext ctx = cc.plain_context();
  if (!apply_mode(ctx, v, 0, a).is_zero())
    throw NotInKernel("delta_expand: vector is not annihilated by the zero mode");

  auto apply_s = [&](const std::map<long, FockElement>& layer) {
    std::map<long, FockElement> next;
    for (const auto& [d, e] : layer) {
      long nmax = mode_upper_bound(cc.lattice, v, e);
      for (long n = 1; n <= nmax; ++n) {
        FockElement t = apply_mode(ctx, v, Rational(n), e);
        if (t.is_zero()) continue;
        Rational coef = rat((n % 2 == 0) ? -1 : 1, n);  // (-1)^{n+1}/n
        auto it = next.find(d + n);
        if (it == next.end())
          next[d + n] = coef * t;
        else {
          it->second += coef * t;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    return next;
  };

  std::map<long, FockElement> out{{0, a}};
  std::map<long, FockElement> layer = out;
  long k = 1;
  while (!layer.empty()) {
    layer = apply_s(layer);
    for (auto& [d, e] : layer) e *= rat(1, k);  // running 1/k! across iterations
    for (const auto& [d, e] : layer) {
      auto it = out.find(d);
      if (it == out.end())
        out[d] = e;
      else {
        it->second += e;
        if (it->second.is_zero()) out.erase(it);
      }
    }
    ++k;
  }
  return out;
}

FockElement apply_expanded_mode(const CaseConfig& cc, const LatticeVector& module_rep,
                                const std::map<long, FockElement>& expansion, const Rational& n,
                                const FockElement& w) {
  ModeContext ctx = cc.extended_context(module_rep);
  FockElement out;
  for (const auto& [m, e] : expansion) out += apply_mode(ctx, e, n - m, w);
  return out;
}

FockElement deformed_mode(const CaseConfig& cc, const LatticeVector& module_rep,
                          const FockElement& a, const Rational& n, const FockElement& w) {
  return apply_expanded_mode(cc, module_rep, delta_expand(cc, a), n, w);
}

FockElement deformed_virasoro(const CaseConfig& cc, const LatticeVector& module_rep, long n,
                              const FockElement& w) {
  ModeContext ctx = cc.extended_context(module_rep);
  return apply_mode(ctx, cc.omega, Rational(n + 1), w) +
         apply_mode(ctx, cc.qt_vector, Rational(n), w);
}

FockElement heisenberg_shifted_mode(const CaseConfig& cc, const LatticeVector& module_rep,
                                    const FockElement& a, const Rational& n,
                                    const FockElement& w) {
  if (cc.lattice.rank != 1)
    throw InvalidParameters("heisenberg_shifted_mode: rank-1 cases only");
  // Delta(h,x)a with h = a/2: x^{h_0} exp(sum_{j>=1} (h_j/(-j))(-x)^{-j}) a.
  LatticeVector h = rat(1, 2) * cc.lattice.gen(0);
  std::map<Rational, FockElement> expanded;  // x-exponent -> element
  // exp part: each h_j removes weight j; expand the exponential directly.
  std::map<Rational, FockElement> layer{{Rational(0), a}};
  expanded = layer;
  long k = 1;
  while (!layer.empty()) {
    std::map<Rational, FockElement> next;
    for (const auto& [d, e] : layer) {
      long jmax = 0;
      for (const auto& [b, c] : e.terms()) jmax = std::max(jmax, b.boson_degree());
      for (long j = 1; j <= jmax; ++j) {
        FockElement t = apply_heisenberg(cc.lattice, h, j, e);
        if (t.is_zero()) continue;
        Rational coef = rat((j % 2 == 0) ? -1 : 1, j);  // (h_j/(-j)) (-1)^{-j}
        auto it = next.find(d - j);
        if (it == next.end())
          next[d - j] = coef * t;
        else
          it->second += coef * t;
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      it->second *= rat(1, k);
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    }
    for (const auto& [d, e] : next) {
      auto it = expanded.find(d);
      if (it == expanded.end())
        expanded[d] = e;
      else
        it->second += e;
    }
    layer = std::move(next);
    ++k;
  }
  // x^{h_0}: shift each term's exponent by <h, point>.
  FockElement out;
  for (const auto& [d, e] : expanded) {
    for (const auto& [b, c] : e.terms()) {
      Rational t = d + pairing(cc.lattice, h, b.point);
      out += deformed_mode(cc, module_rep, FockElement::basis(b, c), n + t, w);
    }
  }
  return out;
}

LogSeries delta_log_apply(const CaseConfig& cc, const FockElement& w, int nilpotency_bound) {
  const FockElement& v = cc.qt_vector;
  ModeContext ctx = cc.plain_context();
  // exp of the x^{-n} part, as in delta_expand but with no kernel demand.
  std::map<long, FockElement> expanded{{0, w}};
  {
    std::map<long, FockElement> layer = expanded;
    long k = 1;
    while (!layer.empty()) {
      std::map<long, FockElement> next;
      for (const auto& [d, e] : layer) {
        long nmax = mode_upper_bound(cc.lattice, v, e);
        for (long n = 1; n <= nmax; ++n) {
          FockElement t = apply_mode(ctx, v, Rational(n), e);
          if (t.is_zero()) continue;
          Rational coef = rat((n % 2 == 0) ? -1 : 1, n);
          next[d + n] += coef * t;
        }
      }
      for (auto it = next.begin(); it != next.end();) {
        it->second *= rat(1, k);
        it = it->second.is_zero() ? next.erase(it) : std::next(it);
      }
      for (const auto& [d, e] : next) expanded[d] += e;
      layer = std::move(next);
      ++k;
    }
  }
  // exp(log(x) v_0): log powers from iterating the zero mode.
  LogSeries out;
  for (const auto& [d, e] : expanded) {
    FockElement cur = e;
    Rational fact = 1;
    for (int k = 0; !cur.is_zero(); ++k) {
      if (k >= nilpotency_bound)
        throw NotNilpotent("delta_log_apply: zero mode not nilpotent within bound");
      out.add(Rational(-d), k, fact * cur);
      cur = apply_mode(ctx, v, 0, cur);
      fact /= Rational(k + 1);
    }
  }
  return out;
}

FockElement log_intertwiner_mode(const CaseConfig& cc, const LatticeVector& module_rep,
                                 const FockElement& w, const Rational& s, int logpow,
                                 const FockElement& u, int nilpotency_bound) {
  LogSeries ls = delta_log_apply(cc, w, nilpotency_bound);
  ModeContext ctx = cc.extended_context(module_rep);
  FockElement out;
  for (const auto& [key, e] : ls.coef) {
    if (key.second != logpow) continue;
    out += apply_mode(ctx, e, key.first - s - 1, u);
  }
  return out;
}

namespace {
using BiKey = std::tuple<Rational, Rational, int>;  // (x2-exp, y-exp, log-pow)
using BiSeries = std::map<BiKey, FockElement>;

void bi_add(BiSeries& s, const Rational& a, const Rational& b, int k, const FockElement& e) {
  if (e.is_zero()) return;
  BiKey key{a, b, k};
  auto it = s.find(key);
  if (it == s.end()) {
    s.emplace(key, e);
  } else {
    it->second += e;
    if (it->second.is_zero()) s.erase(it);
  }
}

std::string bi_describe(const LatticeConfig& cfg, const BiKey& k, const FockElement& l,
                        const FockElement& r) {
  std::ostringstream os;
  os << "x2^" << rat_str(std::get<0>(k)) << " y^" << rat_str(std::get<1>(k)) << " log^"
     << std::get<2>(k) << ": lhs=" << l.str(cfg) << " rhs=" << r.str(cfg);
  return os.str();
}
}  // namespace

bool conjugation_identity_holds(const CaseConfig& cc, const FockElement& u, const FockElement& w,
                                long order, std::string* mismatch) {
  const FockElement& v = cc.qt_vector;
  ModeContext ctx = cc.plain_context();
  if (!apply_mode(ctx, v, 0, u).is_zero())
    throw NotInKernel("conjugation check needs u in the kernel of the zero mode");

  // y-exponents realized by Y(u,y)w within the window.
  std::set<Rational> ygrid;
  for (const auto& [ub, uc] : u.terms())
    for (const auto& [wb, wc] : w.terms()) {
      Rational base = pairing(cc.lattice, ub.point, wb.point);  // exponents in base + Z
      Rational start = base + Rational(to_long(floor_rat(Rational(-order) - base)));
      for (Rational b = start; b <= order; b += 1)
        if (b >= -order) ygrid.insert(b);
    }

  BiSeries lhs;
  for (const auto& b : ygrid) {
    FockElement t = apply_mode(ctx, u, -b - 1, w);
    if (t.is_zero()) continue;
    LogSeries ls = delta_log_apply(cc, t);
    for (const auto& [key, e] : ls.coef) {
      if (key.first < -order || key.first > order) continue;
      bi_add(lhs, key.first, b, key.second, e);
    }
  }

  BiSeries rhs;
  LogSeries dw = delta_log_apply(cc, w);
  auto du = delta_expand(cc, u);  // m -> coefficient of (x2+y)^{-m}
  for (const auto& [key, wp] : dw.coef) {
    const Rational& a0 = key.first;
    int logk = key.second;
    for (const auto& [m, dm] : du) {
      for (Rational a = Rational(-order); a <= order; a += 1) {
        Rational k2r = a0 - m - a;
        if (!is_integer(k2r) || k2r < 0) continue;
        long k2 = to_long(k2r);
        Rational binom = binomial(Rational(-m), k2);
        if (binom == 0) continue;
        for (const auto& b : ygrid) {
          // y^k2 * y^{-n-1} = y^b  =>  n = k2 - b - 1
          FockElement t = apply_mode(ctx, dm, Rational(k2) - b - 1, wp);
          if (t.is_zero()) continue;
          bi_add(rhs, a, b, logk, binom * t);
        }
      }
    }
  }

  // Compare on the window; both sides are complete there. The rhs may
  // contain y-exponents off `ygrid` only if lhs has none either, so restrict
  // both to the grid x window.
  auto in_window = [&](const BiKey& k) {
    return std::get<0>(k) >= -order && std::get<0>(k) <= order && std::get<1>(k) >= -order &&
           std::get<1>(k) <= order && ygrid.count(std::get<1>(k)) > 0;
  };
  std::set<BiKey> keys;
  for (const auto& [k, e] : lhs)
    if (in_window(k)) keys.insert(k);
  for (const auto& [k, e] : rhs)
    if (in_window(k)) keys.insert(k);
  for (const auto& k : keys) {
    FockElement l = lhs.count(k) ? lhs[k] : FockElement{};
    FockElement r = rhs.count(k) ? rhs[k] : FockElement{};
    if (!(l == r)) {
      if (mismatch) *mismatch = bi_describe(cc.lattice, k, l, r);
      return false;
    }
  }
  return true;
}

}  // namespace voalog
