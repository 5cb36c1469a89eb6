// Laurent polynomials and matrices over F_{q^m}.  All arithmetic is exact
// polynomial arithmetic; a valuation window (default [-8,8], hard cap
// [-32,32]) guards against runaway support growth, which would signal a bug.
#pragma once

#include "gf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcovelab {

struct LaurentOverflow : std::runtime_error {
  explicit LaurentOverflow(const std::string& m) : std::runtime_error(m) {}
};

// coefficient of t^{lo+i} is c[i]; zero polynomial has empty c
struct LPoly {
  int lo = 0;
  std::vector<GFElem> c;

  bool is_zero() const { return c.empty(); }
  int val() const {
    if (is_zero()) throw std::domain_error("valuation of zero");
    return lo;
  }
  int hi() const { return lo + (int)c.size() - 1; }

  bool operator==(const LPoly& o) const { return lo == o.lo && c == o.c; }
};

inline LPoly lp_normalize(LPoly p) {
  std::size_t lead = 0;
  while (lead < p.c.size() && p.c[lead] == 0) ++lead;
  std::size_t trail = p.c.size();
  while (trail > lead && p.c[trail - 1] == 0) --trail;
  if (lead == trail) return LPoly{};
  LPoly q;
  q.lo = p.lo + (int)lead;
  q.c.assign(p.c.begin() + lead, p.c.begin() + trail);
  return q;
}

inline LPoly lp_zero() { return LPoly{}; }

inline LPoly lp_monomial(GFElem coeff, int exp) {
  if (coeff == 0) return LPoly{};
  LPoly p;
  p.lo = exp;
  p.c = {coeff};
  return p;
}

inline LPoly lp_add(const FqmField& F, const LPoly& a, const LPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.hi(), b.hi());
  LPoly r;
  r.lo = lo;
  r.c.assign(hi - lo + 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - lo + i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i)
    r.c[b.lo - lo + i] = F.add(r.c[b.lo - lo + i], b.c[i]);
  return lp_normalize(std::move(r));
}

inline LPoly lp_neg(const FqmField& F, const LPoly& a) {
  LPoly r = a;
  for (auto& x : r.c) x = F.neg(x);
  return r;
}

inline LPoly lp_sub(const FqmField& F, const LPoly& a, const LPoly& b) {
  return lp_add(F, a, lp_neg(F, b));
}

inline LPoly lp_mul(const FqmField& F, const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return LPoly{};
  LPoly r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return lp_normalize(std::move(r));
}

inline LPoly lp_shift(const LPoly& a, int k) {
  if (a.is_zero()) return a;
  LPoly r = a;
  r.lo += k;
  return r;
}

// drop all coefficients above t^T
inline LPoly lp_truncate_above(const LPoly& a, int T) {
  if (a.is_zero() || a.hi() <= T) return a;
  LPoly r = a;
  if (r.lo > T) return LPoly{};
  r.c.resize(T - r.lo + 1);
  return lp_normalize(std::move(r));
}

inline LPoly lp_frobenius(const FqmField& F, const LPoly& a) {
  LPoly r = a;
  for (auto& x : r.c) x = F.frobenius(x);
  return r;
}

inline std::string lp_str(const FqmField& F, const LPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    int e = a.lo + (int)i;
    std::string coeff = F.str(a.c[i]);
    if (e == 0) {
      s += coeff.find('+') == std::string::npos ? coeff : "(" + coeff + ")";
    } else {
      if (coeff != "1")
        s += (coeff.find('+') == std::string::npos ? coeff : "(" + coeff + ")") + "*";
      s += (e == 1) ? "t" : "t^" + std::to_string(e);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

struct LaurentMatrix {
  int n = 0;
  std::vector<LPoly> e;  // row-major

  LPoly& at(int i, int j) { return e[i * n + j]; }
  const LPoly& at(int i, int j) const { return e[i * n + j]; }

  bool operator==(const LaurentMatrix& o) const { return n == o.n && e == o.e; }
};

inline LaurentMatrix lm_zero(int n) {
  LaurentMatrix m;
  m.n = n;
  m.e.assign((std::size_t)n * n, LPoly{});
  return m;
}

inline LaurentMatrix lm_identity(int n) {
  LaurentMatrix m = lm_zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = lp_monomial(1, 0);
  return m;
}

inline LaurentMatrix lm_mul(const FqmField& F, const LaurentMatrix& a,
                            const LaurentMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix r = lm_zero(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.n; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) = lp_add(F, r.at(i, j), lp_mul(F, a.at(i, k), b.at(k, j)));
      }
    }
  return r;
}

inline LaurentMatrix lm_frobenius(const FqmField& F, const LaurentMatrix& a) {
  LaurentMatrix r = a;
  for (auto& x : r.e) x = lp_frobenius(F, x);
  return r;
}

// cofactor expansion; oracle matrices are small (n <= 4)
inline LPoly lm_det(const FqmField& F, const LaurentMatrix& a) {
  if (a.n > 4) throw std::invalid_argument("determinant implemented for n <= 4");
  std::vector<int> cols(a.n);
  for (int i = 0; i < a.n; ++i) cols[i] = i;
  std::function<LPoly(int, std::vector<int>&)> rec = [&](int row,
                                                         std::vector<int>& cs) -> LPoly {
    if (cs.empty()) return lp_monomial(1, 0);
    LPoly acc;
    for (std::size_t idx = 0; idx < cs.size(); ++idx) {
      int col = cs[idx];
      if (a.at(row, col).is_zero()) continue;
      std::vector<int> rest;
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (j != idx) rest.push_back(cs[j]);
      LPoly term = lp_mul(F, a.at(row, col), rec(row + 1, rest));
      if (idx % 2 == 1) term = lp_neg(F, term);
      acc = lp_add(F, acc, term);
    }
    return acc;
  };
  return rec(0, cols);
}

// adjugate: adj(a) * a = det(a) * I
inline LaurentMatrix lm_adjugate(const FqmField& F, const LaurentMatrix& a) {
  LaurentMatrix r = lm_zero(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      // minor deleting row i, column j
      LaurentMatrix m = lm_zero(a.n - 1);
      int ri = 0;
      for (int r2 = 0; r2 < a.n; ++r2) {
        if (r2 == i) continue;
        int ci = 0;
        for (int c2 = 0; c2 < a.n; ++c2) {
          if (c2 == j) continue;
          m.at(ri, ci) = a.at(r2, c2);
          ++ci;
        }
        ++ri;
      }
      LPoly d = (a.n == 1) ? lp_monomial(1, 0) : lm_det(F, m);
      if ((i + j) % 2 == 1) d = lp_neg(F, d);
      r.at(j, i) = d;  // transpose of cofactors
    }
  return r;
}

struct ValuationWindow {
  int soft = 8;
  int hard = 32;
};

inline void lm_check_window(const LaurentMatrix& a, const ValuationWindow& w) {
  for (const LPoly& p : a.e) {
    if (p.is_zero()) continue;
    if (p.lo < -w.hard || p.hi() > w.hard)
      throw LaurentOverflow("valuation window exhausted (support exceeds hard cap)");
  }
}

}  // namespace alcovelab
