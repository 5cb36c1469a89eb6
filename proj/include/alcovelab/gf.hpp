// Exact arithmetic in F_{q^m}, q = p^k a prime power.  The field is realized
// as F_p[x]/(f) with f the lexicographically first irreducible monic of
// degree k*m; elements are indices 0..p^{km}-1 encoding base-p coefficient
// digits, and all operations go through precomputed tables.  The relative
// Frobenius is x -> x^q.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcovelab {

using GFElem = std::uint16_t;

class FqmField {
 public:
  FqmField(long q, int m) : q_(q), m_(m) {
    factor_q();
    degree_ = k_ * m_;
    size_ = 1;
    for (int i = 0; i < degree_; ++i) {
      size_ *= p_;
      if (size_ > 4096) throw std::invalid_argument("field too large for table arithmetic");
    }
    find_modulus();
    build_tables();
  }

  long q() const { return q_; }
  int m() const { return m_; }
  long p() const { return p_; }
  long size() const { return size_; }

  GFElem zero() const { return 0; }
  GFElem one() const { return 1; }

  GFElem add(GFElem a, GFElem b) const { return add_[a * size_ + b]; }
  GFElem sub(GFElem a, GFElem b) const { return add_[a * size_ + neg_[b]]; }
  GFElem neg(GFElem a) const { return neg_[a]; }
  GFElem mul(GFElem a, GFElem b) const { return mul_[a * size_ + b]; }
  GFElem inv(GFElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
  }
  GFElem frobenius(GFElem a) const { return frob_[a]; }  // a^q

  bool in_base_field(GFElem a) const { return frob_[a] == a; }

  // element from an integer constant (prime subfield)
  GFElem from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<GFElem>(r);
  }

  // printable form of an element: polynomial in the generator "x"
  std::string str(GFElem a) const {
    if (a == 0) return "0";
    std::string s;
    long v = a;
    for (int i = 0; i < degree_ && v > 0; ++i) {
      long d = v % p_;
      v /= p_;
      if (d == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(d);
      } else {
        if (d != 1) s += std::to_string(d) + "*";
        s += (i == 1) ? "x" : "x^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  long q_, p_ = 0, size_ = 0;
  int m_, k_ = 0, degree_ = 0;
  std::vector<int> modulus_;  // monic irreducible, coefficients by degree
  std::vector<GFElem> add_, mul_, neg_, inv_, frob_;

  void factor_q() {
    long v = q_;
    if (v < 2) throw std::invalid_argument("q must be a prime power >= 2");
    for (long d = 2; d * d <= v; ++d)
      if (v % d == 0) {
        p_ = d;
        break;
      }
    if (p_ == 0) p_ = v;
    k_ = 0;
    while (v > 1) {
      if (v % p_ != 0) throw std::invalid_argument("q is not a prime power");
      v /= p_;
      ++k_;
    }
  }

  // digits of index <-> coefficient vector
  std::vector<int> digits(long a) const {
    std::vector<int> d(degree_, 0);
    for (int i = 0; i < degree_; ++i) {
      d[i] = int(a % p_);
      a /= p_;
    }
    return d;
  }
  long index(const std::vector<int>& d) const {
    long a = 0;
    for (int i = degree_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }

  // polynomial helpers over F_p (coefficients by ascending degree)
  static int deg(const std::vector<int>& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
      if (f[i] != 0) return i;
    return -1;
  }

  std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& f) const {
    int df = deg(f);
    long lead_inv = inv_mod_p(f[df]);
    for (int i = deg(a); i >= df; i = deg(a)) {
      long c = (a[i] * lead_inv) % p_;
      for (int j = 0; j <= df; ++j)
        a[i - df + j] = int(((a[i - df + j] - c * f[j]) % p_ + p_) % p_);
    }
    a.resize(df);
    return a;
  }

  std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        c[i + j] = int((c[i + j] + (long)a[i] * b[j]) % p_);
    return c;
  }

  long inv_mod_p(long a) const {
    long r = 1, base = ((a % p_) + p_) % p_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return r;
  }

  bool irreducible(const std::vector<int>& f) const {
    int df = deg(f);
    if (df < 1) return false;
    // trial division by every monic polynomial of degree 1..df/2
    for (int dg = 1; 2 * dg <= df; ++dg) {
      long count = 1;
      for (int i = 0; i < dg; ++i) count *= p_;
      for (long idx = 0; idx < count; ++idx) {
        std::vector<int> g(dg + 1, 0);
        long v = idx;
        for (int i = 0; i < dg; ++i) {
          g[i] = int(v % p_);
          v /= p_;
        }
        g[dg] = 1;
        if (deg(poly_mod(f, g)) < 0) return false;
      }
    }
    return true;
  }

  void find_modulus() {
    if (degree_ == 1) {
      modulus_ = {0, 1};  // x (unused placeholder; field is F_p itself)
      return;
    }
    long count = 1;
    for (int i = 0; i < degree_; ++i) count *= p_;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<int> f(degree_ + 1, 0);
      long v = idx;
      for (int i = 0; i < degree_; ++i) {
        f[i] = int(v % p_);
        v /= p_;
      }
      f[degree_] = 1;
      if (irreducible(f)) {
        modulus_ = f;
        return;
      }
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  void build_tables() {
    add_.resize(size_ * size_);
    mul_.resize(size_ * size_);
    neg_.resize(size_);
    inv_.assign(size_, 0);
    frob_.resize(size_);
    for (long a = 0; a < size_; ++a) {
      std::vector<int> da = digits(a);
      std::vector<int> na(degree_);
      for (int i = 0; i < degree_; ++i) na[i] = int((p_ - da[i]) % p_);
      neg_[a] = static_cast<GFElem>(index(na));
      for (long b = 0; b < size_; ++b) {
        std::vector<int> db = digits(b);
        std::vector<int> s(degree_);
        for (int i = 0; i < degree_; ++i) s[i] = int((da[i] + db[i]) % p_);
        add_[a * size_ + b] = static_cast<GFElem>(index(s));
        std::vector<int> prod = poly_mul(da, db);
        if (degree_ > 1)
          prod = poly_mod(prod, modulus_);
        else
          prod = {int(((long)deg(prod) >= 0 ? prod[0] : 0) % p_)};
        prod.resize(degree_, 0);
        mul_[a * size_ + b] = static_cast<GFElem>(index(prod));
      }
    }
    for (long a = 1; a < size_; ++a)
      for (long b = 1; b < size_; ++b)
        if (mul_[a * size_ + b] == 1) {
          inv_[a] = static_cast<GFElem>(b);
          break;
        }
    for (long a = 0; a < size_; ++a) {
      GFElem r = 1;
      GFElem base = static_cast<GFElem>(a);
      long e = q_;
      while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
      }
      frob_[a] = r;
    }
  }
};

}  // namespace alcovelab
