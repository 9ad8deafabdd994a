#include "voalog/linalg.hpp"

#include <algorithm>
#include <map>

namespace voalog {

std::vector<int> rref(MatrixQ& m) {
  std::vector<int> pivots;
  long rows = m.rows(), cols = m.cols();
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long sel = -1;
    for (long i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    m.row(r) /= m(r, c);
    for (long i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

long rank_of(MatrixQ m) { return static_cast<long>(rref(m).size()); }

MatrixQ kernel_basis(const MatrixQ& m) {
  MatrixQ e = m;
  std::vector<int> piv = rref(e);
  long cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  long nullity = cols - static_cast<long>(piv.size());
  MatrixQ k = MatrixQ::Zero(cols, nullity);
  long out = 0;
  for (long free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    k(free, out) = 1;
    for (size_t r = 0; r < piv.size(); ++r) k(piv[r], out) = -e(static_cast<long>(r), free);
    ++out;
  }
  return k;
}

std::vector<Rational> charpoly(const MatrixQ& m) {
  long n = m.rows();
  if (m.cols() != n) throw EngineError("charpoly: not square");
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  MatrixQ mk = MatrixQ::Identity(n, n);
  for (long k = 1; k <= n; ++k) {
    mk = m * mk;
    Rational tr = 0;
    for (long i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -tr / Rational(k);
    for (long i = 0; i < n; ++i) mk(i, i) += c[n - k];
  }
  return c;
}

// --- polynomial helpers (dense, c[0] + c[1] t + ...) ---

static void poly_trim(std::vector<Rational>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

static Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
  Rational v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// Synthetic division by (t - r); requires r to be a root.
static std::vector<Rational> poly_deflate(const std::vector<Rational>& p, const Rational& r) {
  std::vector<Rational> q(p.size() - 1);
  Rational carry = 0;
  for (size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

static std::vector<Rational> poly_derivative(const std::vector<Rational>& p) {
  if (p.size() <= 1) return {Rational(0)};
  std::vector<Rational> d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * p[i];
  return d;
}

static std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    poly_trim(a);
    if (a.size() < b.size()) break;
    if (a.back() == 0) poly_trim(a);
  }
  poly_trim(a);
  return a;
}

static std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  poly_trim(a);
  poly_trim(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& x : a) x /= a.back();
  return a;
}

static std::vector<mpz_class> divisors_of(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class d = 2; d * d <= n && d < 2000000; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0 && n >= mpz_class(2000000) * 2000000)
      throw EngineError("rational_roots: constant term too hard to factor");
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [pr, e] : fac) {
    size_t base = divs.size();
    mpz_class pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= pr;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  return divs;
}

// Roots of a square-free polynomial (no multiplicity bookkeeping).
static std::vector<Rational> squarefree_roots(std::vector<Rational> p) {
  poly_trim(p);
  std::vector<Rational> roots;
  // Strip zero roots.
  size_t z = 0;
  while (z < p.size() && p[z] == 0) ++z;
  if (z > 0) {
    roots.push_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(z));
  }
  if (p.size() <= 1) return roots;
  // Integerize.
  mpz_class den = 1;
  for (const auto& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
  std::vector<mpz_class> ip(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rational t = p[i] * Rational(den);
    ip[i] = t.get_num();
  }
  auto nums = divisors_of(ip.front());
  auto dens = divisors_of(ip.back());
  for (const auto& nu : nums)
    for (const auto& de : dens)
      for (int sgn : {+1, -1}) {
        Rational cand(sgn * nu, de);
        cand.canonicalize();
        if (poly_eval(p, cand) == 0) {
          roots.push_back(cand);
          p = poly_deflate(p, cand);
          if (p.size() <= 1) {
            std::sort(roots.begin(), roots.end());
            return roots;
          }
        }
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_roots(std::vector<Rational> coeffs) {
  poly_trim(coeffs);
  if (coeffs.size() <= 1) return {};
  long degree = static_cast<long>(coeffs.size()) - 1;
  auto sqfree = poly_gcd(coeffs, poly_derivative(coeffs));
  std::vector<Rational> reduced = coeffs;
  if (sqfree.size() > 1) {
    // reduced = coeffs / gcd, computed by long division (exact).
    std::vector<Rational> q(coeffs.size() - sqfree.size() + 1, Rational(0));
    std::vector<Rational> rem = coeffs;
    for (size_t i = q.size(); i-- > 0;) {
      Rational f = rem[i + sqfree.size() - 1] / sqfree.back();
      q[i] = f;
      for (size_t j = 0; j < sqfree.size(); ++j) rem[i + j] -= f * sqfree[j];
    }
    reduced = q;
  }
  std::vector<Rational> simple = squarefree_roots(reduced);
  std::vector<Rational> out;
  for (const auto& r : simple) {
    std::vector<Rational> p = coeffs;
    while (poly_eval(p, r) == 0 && p.size() > 1) {
      out.push_back(r);
      p = poly_deflate(p, r);
    }
  }
  if (static_cast<long>(out.size()) != degree)
    throw IrrationalEigenvalue("polynomial does not split over Q");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> spectrum(const MatrixQ& m) { return rational_roots(charpoly(m)); }

std::vector<JordanBlock> jordan_blocks(const MatrixQ& m) {
  auto eig = spectrum(m);
  std::map<Rational, long> mult;
  for (const auto& e : eig) ++mult[e];
  long n = m.rows();
  std::vector<JordanBlock> blocks;
  for (const auto& [lam, mu] : mult) {
    MatrixQ a = m;
    for (long i = 0; i < n; ++i) a(i, i) -= lam;
    std::vector<long> ranks{n};  // rank of a^0
    MatrixQ pw = MatrixQ::Identity(n, n);
    for (long k = 1; k <= mu + 1; ++k) {
      pw = pw * a;
      ranks.push_back(rank_of(pw));
      if (ranks[k] == ranks[k - 1]) break;
    }
    long kmax = static_cast<long>(ranks.size()) - 1;
    for (long k = 1; k <= kmax; ++k) {
      long geq_k = ranks[k - 1] - ranks[k];
      long geq_k1 = (k < kmax) ? ranks[k] - ranks[k + 1] : 0;
      for (long c = 0; c < geq_k - geq_k1; ++c) blocks.push_back({lam, k});
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const JordanBlock& a, const JordanBlock& b) {
    int c = cmp(a.eigenvalue, b.eigenvalue);
    if (c != 0) return c < 0;
    return a.size < b.size;
  });
  return blocks;
}

long intersection_dim(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows()) throw EngineError("intersection_dim: row mismatch");
  MatrixQ ab(a.rows(), a.cols() + b.cols());
  ab << a, b;
  return rank_of(a) + rank_of(b) - rank_of(ab);
}

long RowSpan::reduce_scratch(const VectorQ& v) const {
  if (v.size() != width_) throw EngineError("RowSpan: width mismatch");
  if (static_cast<long>(scratch_.size()) != width_) {
    scratch_.assign(static_cast<size_t>(width_), mpz_class(0));
    mark_.assign(static_cast<size_t>(width_), 0);
  }
  for (long j : support_) {
    scratch_[j] = 0;
    mark_[j] = 0;
  }
  support_.clear();

  // Clear denominators: scratch = lcm(denominators) * v.
  mpz_class lcm = 1;
  for (long i = 0; i < width_; ++i)
    if (v(i) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v(i).get_den().get_mpz_t());
  for (long i = 0; i < width_; ++i) {
    if (v(i) == 0) continue;
    scratch_[i] = v(i).get_num() * (lcm / v(i).get_den());
    mark_[i] = 1;
    support_.push_back(i);
  }

  mpz_class g, cred, ared;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const mpz_class& c = scratch_[pivots_[r]];
    if (c == 0) continue;
    const SparseIntRow& row = rows_[r];
    const mpz_class& a = row.front().second;  // leading entry, positive
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    ared = a / g;
    cred = c / g;
    // fraction-free step: scratch = ared * scratch - cred * row
    if (ared != 1)
      for (long j : support_) scratch_[j] *= ared;
    for (const auto& [j, val] : row) {
      if (!mark_[j]) {
        mark_[j] = 1;
        support_.push_back(j);
        scratch_[j] = 0;
      }
      scratch_[j] -= cred * val;
    }
    // strip content to keep growth linear
    g = 0;
    for (long j : support_) {
      if (scratch_[j] == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scratch_[j].get_mpz_t());
      if (g == 1) break;
    }
    if (g > 1)
      for (long j : support_) scratch_[j] /= g;
  }
  long piv = width_;
  for (long j : support_)
    if (scratch_[j] != 0 && j < piv) piv = j;
  return piv == width_ ? -1 : piv;
}

bool RowSpan::insert(const VectorQ& v) {
  long piv = reduce_scratch(v);
  if (piv < 0) return false;
  std::sort(support_.begin(), support_.end());
  SparseIntRow row;
  for (long j : support_)
    if (scratch_[j] != 0) row.emplace_back(j, scratch_[j]);
  if (row.front().second < 0)
    for (auto& [j, val] : row) val = -val;
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

bool RowSpan::contains(const VectorQ& v) const { return reduce_scratch(v) < 0; }

MatrixQ RowSpan::as_matrix() const {
  MatrixQ m = MatrixQ::Zero(static_cast<long>(rows_.size()), width_);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, a] : rows_[i]) m(static_cast<long>(i), j) = a;
  return m;
}

}  // namespace voalog
