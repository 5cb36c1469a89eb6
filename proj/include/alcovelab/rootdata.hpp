// Root-datum arithmetic for GL_n (type A_{n-1}) and GSp_2n (type C_n).
//
// Conventions used throughout the library:
//  * Cocharacters of GL_n are integer vectors of length n.  Cocharacters of
//    GSp_2n are integer vectors of length 2n subject to the similitude
//    constraint a_i + a_{2n+1-i} = c (c common to all i).
//  * Every root of either group is realized as a linear functional
//    e_p - e_q on cocharacter coordinates; for GSp the canonical
//    representative always has p < q, and positivity is exactly p < q.
//  * The adjoint apartment is an n-dimensional rational coordinate space:
//    for GL_n the mean-zero slice of Q^n, for GSp_2n the C_n coordinates
//    x_i = a_i - c/2 (first n entries).
#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace alcovelab {

enum class GroupKind { GL, GSp };

struct Coweight {
  std::vector<Int> a;

  bool operator==(const Coweight& o) const { return a == o.a; }
  bool operator<(const Coweight& o) const { return a < o.a; }
};

// Permutation of {0..dim-1}, one-line images; for GSp it commutes with the
// involution i <-> dim-1-i.
struct FiniteWeylElem {
  std::vector<int> img;

  bool operator==(const FiniteWeylElem& o) const { return img == o.img; }
  bool operator<(const FiniteWeylElem& o) const { return img < o.img; }
  bool is_identity() const {
    for (int i = 0; i < (int)img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }
};

// A root as a functional e_p - e_q on cocharacter coordinates, together with
// its coroot as a cocharacter vector.
struct Root {
  int p = 0, q = 0;            // functional e_p - e_q, p < q for positives
  std::vector<Int> coroot;     // cocharacter coordinates (length dim)
};

using AdjVec = RatVec;  // point of the adjoint apartment, length = rank

class RootDatum {
 public:
  static RootDatum GL(int n) {
    if (n < 2) throw std::invalid_argument("GL_n needs n >= 2");
    RootDatum rd;
    rd.kind_ = GroupKind::GL;
    rd.rank_ = n - 1;
    rd.dim_ = n;
    rd.build();
    return rd;
  }

  // n = matrix size 2m.
  static RootDatum GSp(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("GSp_n needs even n >= 2");
    RootDatum rd;
    rd.kind_ = GroupKind::GSp;
    rd.rank_ = n / 2;
    rd.dim_ = n;
    rd.build();
    return rd;
  }

  GroupKind kind() const { return kind_; }
  int dim() const { return dim_; }      // cocharacter coordinates
  int rank() const { return rank_; }    // semisimple rank = #simple roots
  int cn() const { return rank_; }      // C_n parameter for GSp

  const std::vector<Root>& positive_roots() const { return pos_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  const Root& highest_root() const { return theta_; }
  // coefficients of theta in the simple roots
  const std::vector<Int>& theta_marks() const { return marks_; }

  // ----- basic coweight plumbing ---------------------------------------

  Coweight coweight(std::vector<Int> a) const {
    validate(a);
    return Coweight{std::move(a)};
  }

  void validate(const std::vector<Int>& a) const {
    if ((int)a.size() != dim_) throw std::invalid_argument("coweight length mismatch");
    if (kind_ == GroupKind::GSp) {
      Int c = a.front() + a.back();
      for (int i = 0; i < dim_; ++i)
        if (a[i] + a[dim_ - 1 - i] != c)
          throw std::invalid_argument("GSp similitude constraint violated");
    }
  }

  // similitude value (GSp); unused for GL
  Int similitude(const Coweight& v) const {
    return v.a.front() + v.a.back();
  }

  // image in Omega = X_*(T)/X_*(T_sc): coordinate sum for GL, similitude for GSp
  Int kappa(const Coweight& v) const {
    if (kind_ == GroupKind::GL) return std::accumulate(v.a.begin(), v.a.end(), Int{0});
    return similitude(v);
  }

  Int pair(const Root& r, const Coweight& v) const { return v.a[r.p] - v.a[r.q]; }

  Coweight add(const Coweight& x, const Coweight& y) const {
    Coweight z = x;
    for (int i = 0; i < dim_; ++i) z.a[i] += y.a[i];
    return z;
  }
  Coweight sub(const Coweight& x, const Coweight& y) const {
    Coweight z = x;
    for (int i = 0; i < dim_; ++i) z.a[i] -= y.a[i];
    return z;
  }
  Coweight zero() const { return Coweight{std::vector<Int>(dim_, 0)}; }

  // ----- finite Weyl group ----------------------------------------------

  FiniteWeylElem identity() const {
    FiniteWeylElem w;
    w.img.resize(dim_);
    for (int i = 0; i < dim_; ++i) w.img[i] = i;
    return w;
  }

  // simple reflection s_k, k in 1..rank (1-based to match affine index 0)
  FiniteWeylElem simple_reflection(int k) const {
    if (k < 1 || k > rank_) throw std::invalid_argument("bad simple reflection index");
    FiniteWeylElem w = identity();
    const Root& al = simple_[k - 1];
    apply_transposition(w, al);
    return w;
  }

  // reflection in an arbitrary root (as permutation of coordinates)
  FiniteWeylElem reflection(const Root& r) const {
    FiniteWeylElem w = identity();
    apply_transposition(w, r);
    return w;
  }

  FiniteWeylElem compose(const FiniteWeylElem& u, const FiniteWeylElem& v) const {
    FiniteWeylElem w;
    w.img.resize(dim_);
    for (int i = 0; i < dim_; ++i) w.img[i] = u.img[v.img[i]];  // (uv)(i) = u(v(i))
    return w;
  }

  FiniteWeylElem inverse(const FiniteWeylElem& u) const {
    FiniteWeylElem w;
    w.img.resize(dim_);
    for (int i = 0; i < dim_; ++i) w.img[u.img[i]] = i;
    return w;
  }

  Coweight act(const FiniteWeylElem& u, const Coweight& v) const {
    FiniteWeylElem ui = inverse(u);
    Coweight r = v;
    for (int i = 0; i < dim_; ++i) r.a[i] = v.a[ui.img[i]];
    return r;
  }

  // whole finite Weyl group (computed eagerly at construction, so shared
  // use is read-only), sorted one-line lex
  const std::vector<FiniteWeylElem>& weyl_group() const { return wgroup_cache_; }

  // ----- dominance ------------------------------------------------------

  bool is_dominant(const Coweight& v) const {
    for (const Root& al : simple_)
      if (pair(al, v) < 0) return false;
    return true;
  }

  // (nu_dom, w) with w(nu_dom) = nu; greedy descent through simple reflections
  std::pair<Coweight, FiniteWeylElem> dominant_rep(const Coweight& nu) const {
    Coweight v = nu;
    FiniteWeylElem u = identity();  // accumulates reflections applied to nu
    bool progress = true;
    while (progress) {
      progress = false;
      for (int k = 1; k <= rank_; ++k) {
        if (pair(simple_[k - 1], v) < 0) {
          v = act(simple_reflection(k), v);
          u = compose(simple_reflection(k), u);
          progress = true;
        }
      }
    }
    return {v, inverse(u)};  // nu = u^{-1}(v)
  }

  // nu <=! mu : mu - nu a nonnegative integer combination of simple coroots.
  // Both inputs must be dominant.
  bool leq_coroot(const Coweight& nu, const Coweight& mu) const {
    if (!is_dominant(nu) || !is_dominant(mu))
      throw std::invalid_argument("leq_coroot needs dominant inputs");
    if (kind_ == GroupKind::GL) {
      Int total = 0;
      for (int i = 0; i < dim_; ++i) total += mu.a[i] - nu.a[i];
      if (total != 0) return false;
      Int prefix = 0;
      for (int i = 0; i + 1 < dim_; ++i) {
        prefix += mu.a[i] - nu.a[i];
        if (prefix < 0) return false;
      }
      return true;
    }
    // C_n: same similitude, then nonnegative prefix sums of the first-n
    // difference (coefficients against e_k - e_{k+1}, ..., e_n)
    if (similitude(nu) != similitude(mu)) return false;
    Int prefix = 0;
    for (int i = 0; i < rank_; ++i) {
      prefix += mu.a[i] - nu.a[i];
      if (prefix < 0) return false;
    }
    return true;
  }

  // rational dominance order on weakly dominant rational vectors of length
  // dim(); GL: equal totals + prefix inequalities, C_n: prefix inequalities
  // in x-coordinates (equal similitude required)
  bool dominance_leq_rational(const RatVec& nu, const RatVec& mu) const {
    if ((int)nu.size() != dim_ || (int)mu.size() != dim_)
      throw std::invalid_argument("dominance_leq_rational: length mismatch");
    if (kind_ == GroupKind::GL) {
      Rat total(0);
      for (int i = 0; i < dim_; ++i) total += mu[i] - nu[i];
      if (total != 0) return false;
      Rat prefix(0);
      for (int i = 0; i + 1 < dim_; ++i) {
        prefix += mu[i] - nu[i];
        if (prefix < 0) return false;
      }
      return true;
    }
    if (nu.front() + nu.back() != mu.front() + mu.back()) return false;
    Rat prefix(0);
    for (int i = 0; i < rank_; ++i) {
      prefix += mu[i] - nu[i];
      if (prefix < 0) return false;
    }
    return true;
  }

  // ----- adjoint apartment ----------------------------------------------

  AdjVec proj_adjoint(const Coweight& v) const {
    AdjVec x;
    if (kind_ == GroupKind::GL) {
      Int s = std::accumulate(v.a.begin(), v.a.end(), Int{0});
      Rat mean = rat(s, dim_);
      x.reserve(dim_);
      for (int i = 0; i < dim_; ++i) x.push_back(rat(v.a[i]) - mean);
    } else {
      Rat half_c = rat(similitude(v), 2);
      x.reserve(rank_);
      for (int i = 0; i < rank_; ++i) x.push_back(rat(v.a[i]) - half_c);
    }
    return x;
  }

  int adj_dim() const { return kind_ == GroupKind::GL ? dim_ : rank_; }

  // root functional / coroot on adjoint coordinates
  Rat adj_pair(const Root& r, const AdjVec& x) const {
    if (kind_ == GroupKind::GL) return x[r.p] - x[r.q];
    // x-coordinate reading of e_p - e_q
    Rat v(0);
    v += (r.p < rank_) ? x[r.p] : -x[dim_ - 1 - r.p];
    v -= (r.q < rank_) ? x[r.q] : -x[dim_ - 1 - r.q];
    return v;
  }

  RatVec adj_coroot(const Root& r) const {
    RatVec cv(adj_dim(), Rat(0));
    if (kind_ == GroupKind::GL) {
      // mean-zero projection of the coroot
      Int s = std::accumulate(r.coroot.begin(), r.coroot.end(), Int{0});
      Rat mean = rat(s, dim_);
      for (int i = 0; i < dim_; ++i) cv[i] = rat(r.coroot[i]) - mean;
    } else {
      for (int i = 0; i < rank_; ++i) cv[i] = rat(r.coroot[i]);
    }
    return cv;
  }

  AdjVec adj_act(const FiniteWeylElem& u, const AdjVec& x) const {
    AdjVec y(adj_dim(), Rat(0));
    FiniteWeylElem ui = inverse(u);
    if (kind_ == GroupKind::GL) {
      for (int i = 0; i < dim_; ++i) y[i] = x[ui.img[i]];
    } else {
      for (int i = 0; i < rank_; ++i) {
        int j = ui.img[i];
        y[i] = (j < rank_) ? x[j] : -x[dim_ - 1 - j];
      }
    }
    return y;
  }

  // dominant representative of an adjoint point (W_0-orbit scan is not
  // needed: sort for type A, signed sort for type C)
  AdjVec adj_dominant(const AdjVec& x) const {
    AdjVec y = x;
    if (kind_ == GroupKind::GL) {
      std::sort(y.begin(), y.end(), [](const Rat& a, const Rat& b) { return a > b; });
    } else {
      for (auto& v : y)
        if (v < 0) v = -v;
      std::sort(y.begin(), y.end(), [](const Rat& a, const Rat& b) { return a > b; });
    }
    return y;
  }

  // rational dominance order directly on adjoint points (both dominant)
  bool adj_dominance_leq(const AdjVec& p, const AdjVec& q) const {
    Rat prefix(0);
    if (kind_ == GroupKind::GL) {
      Rat total(0);
      for (int i = 0; i < dim_; ++i) total += q[i] - p[i];
      if (total != 0) return false;
      for (int i = 0; i + 1 < dim_; ++i) {
        prefix += q[i] - p[i];
        if (prefix < 0) return false;
      }
      return true;
    }
    for (int i = 0; i < rank_; ++i) {
      prefix += q[i] - p[i];
      if (prefix < 0) return false;
    }
    return true;
  }

  // <2rho, .> on adjoint points
  Rat two_rho_pair(const AdjVec& x) const {
    Rat s(0);
    for (const Root& b : pos_) s += adj_pair(b, x);
    return s;
  }

  Int two_rho_pair(const Coweight& v) const {
    Int s = 0;
    for (const Root& b : pos_) s += pair(b, v);
    return s;
  }

  // fundamental F-weight pairing <omega_i, x>, i = 1..rank, adjoint coords
  Rat omega_pair(int i, const AdjVec& x) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("omega index");
    Rat s(0);
    for (int j = 0; j < i; ++j) s += x[j];
    if (kind_ == GroupKind::GL) return s;  // mean-zero slice: prefix sum
    return s;                              // C_n: omega_i = x_1+..+x_i
  }

  // <omega_i, v> with the central part removed, for plain/rational cocharacters
  Rat omega_pair_coweight(int i, const RatVec& v) const {
    if ((int)v.size() != dim_) throw std::invalid_argument("omega_pair length");
    Rat s(0);
    if (kind_ == GroupKind::GL) {
      Rat total(0);
      for (const Rat& t : v) total += t;
      for (int j = 0; j < i; ++j) s += v[j];
      return s - rat(i, dim_) * total;
    }
    Rat c = v.front() + v.back();
    for (int j = 0; j < i; ++j) s += v[j] - c / 2;
    return s;
  }

  // minuscule: <beta, mu_dom> in {0,1} for all positive roots
  bool is_minuscule(const Coweight& mu) const {
    Coweight d = dominant_rep(mu).first;
    for (const Root& b : pos_) {
      Int v = pair(b, d);
      if (v < 0 || v > 1) return false;
    }
    return true;
  }

  // W_0-orbit, deduplicated, deterministic order
  std::vector<Coweight> orbit(const Coweight& v) const {
    std::vector<Coweight> out;
    for (const auto& w : weyl_group()) {
      Coweight u = act(w, v);
      if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  GroupKind kind_ = GroupKind::GL;
  int rank_ = 0, dim_ = 0;
  std::vector<Root> pos_, simple_;
  Root theta_;
  std::vector<Int> marks_;
  std::vector<FiniteWeylElem> wgroup_cache_;

  static Root make_root(int p, int q, std::vector<Int> coroot) {
    Root r;
    r.p = p;
    r.q = q;
    r.coroot = std::move(coroot);
    return r;
  }

  void build() {
    int n = dim_;
    if (kind_ == GroupKind::GL) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<Int> cv(n, 0);
          cv[i] = 1;
          cv[j] = -1;
          pos_.push_back(make_root(i, j, std::move(cv)));
        }
      for (int k = 0; k + 1 < n; ++k) {
        std::vector<Int> cv(n, 0);
        cv[k] = 1;
        cv[k + 1] = -1;
        simple_.push_back(make_root(k, k + 1, std::move(cv)));
      }
      {
        std::vector<Int> cv(n, 0);
        cv[0] = 1;
        cv[n - 1] = -1;
        theta_ = make_root(0, n - 1, std::move(cv));
      }
      marks_.assign(rank_, 1);
    } else {
      int m = rank_;
      auto cv_pm = [&](int i, int j, Int si, Int sj) {
        // coroot with x-coordinates si*e_i + sj*e_j, written in 2n coords
        std::vector<Int> cv(n, 0);
        cv[i] += si;
        cv[n - 1 - i] -= si;
        cv[j] += sj;
        cv[n - 1 - j] -= sj;
        return cv;
      };
      // eps_i - eps_j : functional e_i - e_j, coroot e_i - e_j (x-coords)
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          pos_.push_back(make_root(i, j, cv_pm(i, j, 1, -1)));
      // eps_i + eps_j - sim : functional e_i - e_{2n-1-j}, coroot e_i + e_j
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          pos_.push_back(make_root(i, n - 1 - j, cv_pm(i, j, 1, 1)));
      // 2 eps_i - sim : functional e_i - e_{2n-1-i}, coroot e_i
      for (int i = 0; i < m; ++i) {
        std::vector<Int> cv(n, 0);
        cv[i] = 1;
        cv[n - 1 - i] = -1;
        pos_.push_back(make_root(i, n - 1 - i, std::move(cv)));
      }
      for (int k = 0; k < m; ++k) {
        // alpha_k = eps_k - eps_{k+1} (k<m-1), alpha_m = 2 eps_m - sim;
        // in 2n coordinates both are e_k - e_{k+1}
        std::vector<Int> cv(n, 0);
        if (k + 1 < m) {
          cv = cv_pm(k, k + 1, 1, -1);
        } else {
          cv[m - 1] = 1;
          cv[n - m] = -1;
        }
        simple_.push_back(make_root(k, k + 1, std::move(cv)));
      }
      {
        std::vector<Int> cv(n, 0);
        cv[0] = 1;
        cv[n - 1] = -1;
        theta_ = make_root(0, n - 1, std::move(cv));
      }
      marks_.assign(m, 2);
      marks_[m - 1] = 1;
    }
    build_weyl_group();
  }

  void build_weyl_group() {
    std::set<FiniteWeylElem> seen;
    std::vector<FiniteWeylElem> frontier{identity()};
    seen.insert(identity());
    while (!frontier.empty()) {
      std::vector<FiniteWeylElem> next;
      for (const auto& w : frontier)
        for (int k = 1; k <= rank_; ++k) {
          FiniteWeylElem z = compose(w, simple_reflection(k));
          if (seen.insert(z).second) next.push_back(z);
        }
      frontier = std::move(next);
    }
    wgroup_cache_.assign(seen.begin(), seen.end());
  }

  void apply_transposition(FiniteWeylElem& w, const Root& r) const {
    // permutation induced by the reflection: for GL swap (p,q); for GSp also
    // swap the mirror pair
    std::swap(w.img[r.p], w.img[r.q]);
    if (kind_ == GroupKind::GSp) {
      int p2 = dim_ - 1 - r.p, q2 = dim_ - 1 - r.q;
      if (p2 != r.q || q2 != r.p) std::swap(w.img[p2], w.img[q2]);
    }
  }
};

// ---------------------------------------------------------------------------
// Stembridge chains: nu = nu_0 <=! nu_1 <=! ... <=! nu_r = mu, all dominant,
// each step a positive coroot.

inline bool stembridge_step_ok(const RootDatum& rd, const Coweight& v,
                               const Coweight& target, const Root& b,
                               Coweight& out) {
  Coweight w = v;
  for (int i = 0; i < rd.dim(); ++i) w.a[i] += b.coroot[i];
  if (!rd.is_dominant(w)) return false;
  if (!rd.leq_coroot(w, target)) return false;
  out = std::move(w);
  return true;
}

inline std::vector<Coweight> stembridge_chain(const RootDatum& rd,
                                              const Coweight& nu,
                                              const Coweight& mu) {
  if (!rd.is_dominant(nu) || !rd.is_dominant(mu) || !rd.leq_coroot(nu, mu))
    throw std::invalid_argument("stembridge_chain precondition failure");
  std::vector<Coweight> chain{nu};
  std::function<bool(const Coweight&)> extend = [&](const Coweight& cur) -> bool {
    if (cur == mu) return true;
    for (const Root& b : rd.positive_roots()) {
      Coweight next;
      if (!stembridge_step_ok(rd, cur, mu, b, next)) continue;
      chain.push_back(next);
      if (extend(chain.back())) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!extend(nu)) throw std::logic_error("stembridge chain not found");
  return chain;
}

}  // namespace alcovelab
