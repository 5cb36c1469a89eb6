// Extended affine Weyl group W~ = X_*(T) x| W_0 for GL_n / GSp_2n:
// Iwahori-Matsumoto length, reduced words, Bruhat order via subword sets,
// the alcove action, Omega, and parahoric double cosets.
//
// Composition convention (fixed once for the whole library): elements act on
// the left, (uv)(x) = u(v(x)); an element is stored as t_nu * w0 acting by
// x |-> nu_ad + w0(x) on the adjoint apartment.
#pragma once

#include "rootdata.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace alcovelab {

struct AffElem {
  Coweight t;
  FiniteWeylElem w;

  bool operator==(const AffElem& o) const { return t == o.t && w == o.w; }
};

struct AffElemHash {
  std::size_t operator()(const AffElem& e) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (Int x : e.t.a) mix(static_cast<std::size_t>(x) * 2654435761u);
    for (int x : e.w.img) mix(static_cast<std::size_t>(x) + 17);
    return h;
  }
};

using AffSet = std::unordered_set<AffElem, AffElemHash>;

// K = subset of affine simple reflection indices (0..rank), generating the
// finite subgroup W~^K fixing a facet of the base alcove.
struct ParahoricType {
  std::vector<int> K;  // sorted, unique
};

class AffWeyl {
 public:
  explicit AffWeyl(const RootDatum& rd) : rd_(rd) {
    wgroup_ = rd_.weyl_group();
    omega_gen_ = find_omega_generator();
  }

  const RootDatum& root_datum() const { return rd_; }

  // ----- group structure --------------------------------------------------

  AffElem identity() const { return AffElem{rd_.zero(), rd_.identity()}; }

  AffElem make(Coweight t, FiniteWeylElem w) const {
    rd_.validate(t.a);
    return AffElem{std::move(t), std::move(w)};
  }

  AffElem translation(const Coweight& nu) const { return AffElem{nu, rd_.identity()}; }

  // (t_a u)(t_b v) = t_{a + u(b)} (uv)
  AffElem compose(const AffElem& x, const AffElem& y) const {
    return AffElem{rd_.add(x.t, rd_.act(x.w, y.t)), rd_.compose(x.w, y.w)};
  }

  AffElem inverse(const AffElem& x) const {
    FiniteWeylElem wi = rd_.inverse(x.w);
    Coweight t = rd_.act(wi, x.t);
    for (auto& v : t.a) v = -v;
    return AffElem{std::move(t), std::move(wi)};
  }

  Int kappa(const AffElem& x) const { return rd_.kappa(x.t); }

  // affine action on the adjoint apartment
  AdjVec act_on_point(const AffElem& x, const AdjVec& p) const {
    if ((int)p.size() != rd_.adj_dim())
      throw std::invalid_argument("act_on_point: dimension mismatch");
    AdjVec q = rd_.adj_act(x.w, p);
    AdjVec tr = rd_.proj_adjoint(x.t);
    for (int i = 0; i < rd_.adj_dim(); ++i) q[i] += tr[i];
    return q;
  }

  // ----- length -----------------------------------------------------------

  // Iwahori-Matsumoto closed form:
  //   l(t_nu u) = sum_{b>0, u^{-1}b>0} |<b,nu>| + sum_{b>0, u^{-1}b<0} |<b,nu>-1|
  Int length(const AffElem& x) const {
    FiniteWeylElem ui = rd_.inverse(x.w);
    Int len = 0;
    for (const Root& b : rd_.positive_roots()) {
      Int m = x.t.a[b.p] - x.t.a[b.q];
      bool pos = ui.img[b.p] < ui.img[b.q];
      Int term = pos ? m : m - 1;
      len += term < 0 ? -term : term;
    }
    return len;
  }

  // ----- simple affine reflections and Omega -------------------------------

  int num_gens() const { return rd_.rank() + 1; }  // indices 0..rank

  // index 0 is the affine reflection s_{theta-1}=t_{theta^}*s_theta; 1..rank
  // are the finite simple reflections
  AffElem simple_affine(int i) const {
    if (i == 0) {
      const Root& th = rd_.highest_root();
      Coweight t = rd_.zero();
      for (int k = 0; k < rd_.dim(); ++k) t.a[k] = th.coroot[k];
      return AffElem{std::move(t), rd_.reflection(th)};
    }
    return AffElem{rd_.zero(), rd_.simple_reflection(i)};
  }

  const AffElem& omega_generator() const { return omega_gen_; }

  AffElem omega_elem(Int k) const {
    AffElem g = k >= 0 ? omega_gen_ : inverse(omega_gen_);
    Int steps = k >= 0 ? k : -k;
    AffElem r = identity();
    for (Int i = 0; i < steps; ++i) r = compose(r, g);
    return r;
  }

  // w = w_a * tau with tau in Omega (unique); returns the W_a part
  AffElem wa_part(const AffElem& x) const {
    return compose(x, inverse(omega_elem(kappa(x))));
  }

  // ----- reduced words ------------------------------------------------------

  struct ReducedWord {
    std::vector<int> letters;  // x = s_{letters[0]} ... s_{letters.back()} * tau
    AffElem tau;
  };

  // deterministic: smallest-index left descent peeled first
  ReducedWord reduced_word(const AffElem& x) const {
    ReducedWord rw;
    AffElem cur = x;
    Int len = length(cur);
    while (len > 0) {
      bool found = false;
      for (int i = 0; i < num_gens(); ++i) {
        AffElem next = compose(simple_affine(i), cur);
        Int nl = length(next);
        if (nl < len) {
          rw.letters.push_back(i);
          cur = std::move(next);
          len = nl;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("no descent on positive-length element");
    }
    rw.tau = cur;
    return rw;
  }

  // variant used to check reduced-word independence of the Bruhat order
  ReducedWord reduced_word_greedy_high(const AffElem& x) const {
    ReducedWord rw;
    AffElem cur = x;
    Int len = length(cur);
    while (len > 0) {
      for (int i = num_gens() - 1; i >= 0; --i) {
        AffElem next = compose(simple_affine(i), cur);
        Int nl = length(next);
        if (nl < len) {
          rw.letters.push_back(i);
          cur = std::move(next);
          len = nl;
          break;
        }
      }
    }
    rw.tau = cur;
    return rw;
  }

  AffElem evaluate_word(const ReducedWord& rw) const {
    AffElem p = identity();
    for (int i : rw.letters) p = compose(p, simple_affine(i));
    return compose(p, rw.tau);
  }

  // ----- Bruhat order --------------------------------------------------------

  // All z <= y, computed by the reachable-set propagation along one reduced
  // word of the W_a part (the set of subword products of a reduced word is
  // exactly the lower Bruhat interval).
  AffSet bruhat_lower_set(const AffElem& y, std::size_t cap = kDefaultCap) const {
    ReducedWord rw = reduced_word(y);
    return lower_set_of_word(rw, cap);
  }

  AffSet lower_set_of_word(const ReducedWord& rw, std::size_t cap = kDefaultCap) const {
    AffSet cur;
    cur.insert(identity());
    for (int letter : rw.letters) {
      AffSet next = cur;
      const AffElem s = simple_affine(letter);
      for (const AffElem& x : cur) next.insert(compose(x, s));
      if (next.size() > cap) throw CapExceeded("bruhat lower set cap exceeded");
      cur = std::move(next);
    }
    AffSet out;
    out.reserve(cur.size());
    for (const AffElem& x : cur) out.insert(compose(x, rw.tau));
    return out;
  }

  bool bruhat_leq(const AffElem& x, const AffElem& y) const {
    if (kappa(x) != kappa(y)) return false;
    if (x == y) return true;
    if (length(x) >= length(y)) return false;
    AffSet lower = bruhat_lower_set(y);
    return lower.count(x) > 0;
  }

  // ----- base alcove -----------------------------------------------------------

  // vertices of {x : alpha(x) >= 0 for simple alpha, theta(x) <= 1}:
  // the origin plus varpi_j^/m_j
  std::vector<AdjVec> base_alcove_vertices() const {
    std::vector<AdjVec> vs;
    vs.push_back(AdjVec(rd_.adj_dim(), Rat(0)));
    for (int j = 1; j <= rd_.rank(); ++j) {
      AdjVec v = fundamental_coweight_adjoint(j);
      Rat m = rat(rd_.theta_marks()[j - 1]);
      for (auto& c : v) c /= m;
      vs.push_back(std::move(v));
    }
    return vs;
  }

  AdjVec fundamental_coweight_adjoint(int j) const {
    int d = rd_.adj_dim();
    AdjVec v(d, Rat(0));
    if (rd_.kind() == GroupKind::GL) {
      int n = rd_.dim();
      for (int i = 0; i < d; ++i) v[i] = (i < j) ? rat(n - j, n) : rat(-j, n);
    } else {
      for (int i = 0; i < j && i < d; ++i) v[i] = rat(1);
      if (j == rd_.rank())
        for (auto& c : v) c = rat(1, 2);
    }
    return v;
  }

  // ----- enumeration -----------------------------------------------------------

  static constexpr std::size_t kDefaultCap = 1000000;

  // all w with Omega-component tau and l(w) <= N, ordered by
  // (length, translation lex, one-line lex); BFS over right multiplication
  std::vector<AffElem> enumerate_by_length(const AffElem& tau, Int N,
                                           std::size_t cap = kDefaultCap) const {
    if (length(tau) != 0) throw std::invalid_argument("tau must have length 0");
    std::vector<AffElem> out;
    AffSet seen;
    std::vector<AffElem> layer{tau};
    seen.insert(tau);
    out.push_back(tau);
    for (Int len = 1; len <= N; ++len) {
      std::vector<AffElem> next;
      for (const AffElem& x : layer)
        for (int i = 0; i < num_gens(); ++i) {
          AffElem y = compose(x, simple_affine(i));
          if (length(y) != len) continue;
          if (seen.insert(y).second) {
            next.push_back(y);
            if (seen.size() > cap) throw CapExceeded("enumerate_by_length cap");
          }
        }
      std::sort(next.begin(), next.end(), CanonicalLess{this});
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
      if (layer.empty()) break;
    }
    return out;
  }

  struct CanonicalLess {
    const AffWeyl* aw;
    bool operator()(const AffElem& a, const AffElem& b) const {
      Int la = aw->length(a), lb = aw->length(b);
      if (la != lb) return la < lb;
      if (!(a.t == b.t)) return a.t < b.t;
      return a.w < b.w;
    }
  };

  std::vector<AffElem> sorted(const AffSet& s) const {
    std::vector<AffElem> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), CanonicalLess{this});
    return v;
  }

  // ----- parahoric subgroups and double cosets -----------------------------------

  ParahoricType parahoric(std::vector<int> K) const {
    std::sort(K.begin(), K.end());
    K.erase(std::unique(K.begin(), K.end()), K.end());
    for (int i : K)
      if (i < 0 || i >= num_gens()) throw std::invalid_argument("parahoric index range");
    if ((int)K.size() == num_gens())
      throw std::invalid_argument("parahoric subset must be proper");
    return ParahoricType{std::move(K)};
  }

  ParahoricType special_maximal() const {
    std::vector<int> K;
    for (int i = 1; i <= rd_.rank(); ++i) K.push_back(i);
    return parahoric(std::move(K));
  }

  // the finite subgroup W~^K
  std::vector<AffElem> parahoric_group(const ParahoricType& K,
                                       std::size_t cap = 100000) const {
    AffSet seen;
    std::vector<AffElem> all{identity()}, frontier = all;
    seen.insert(identity());
    while (!frontier.empty()) {
      std::vector<AffElem> next;
      for (const AffElem& x : frontier)
        for (int i : K.K) {
          AffElem y = compose(x, simple_affine(i));
          if (seen.insert(y).second) {
            if (seen.size() > cap) throw CapExceeded("parahoric subgroup cap (not finite?)");
            all.push_back(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), CanonicalLess{this});
    return all;
  }

  // vertices of the facet of the base alcove fixed pointwise by W~^K
  std::vector<AdjVec> facet_vertices(const ParahoricType& K) const {
    std::vector<AdjVec> all = base_alcove_vertices();
    std::vector<AdjVec> out;
    auto in_K = [&K](int i) {
      return std::find(K.K.begin(), K.K.end(), i) != K.K.end();
    };
    // vertex 0 lies on every finite wall and not on the affine one;
    // vertex j lies on every wall but alpha_j = 0
    if (!in_K(0)) out.push_back(all[0]);
    for (int j = 1; j <= rd_.rank(); ++j)
      if (!in_K(j)) out.push_back(all[j]);
    return out;
  }

  // unique minimal-length element of W~^K w W~^{K'}; greedy descent
  AffElem double_coset_min_rep(const ParahoricType& K, const AffElem& w,
                               const ParahoricType& K2) const {
    AffElem cur = w;
    Int len = length(cur);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i : K.K) {
        AffElem y = compose(simple_affine(i), cur);
        if (length(y) < len) {
          cur = std::move(y);
          len = length(cur);
          progress = true;
        }
      }
      for (int i : K2.K) {
        AffElem y = compose(cur, simple_affine(i));
        if (length(y) < len) {
          cur = std::move(y);
          len = length(cur);
          progress = true;
        }
      }
    }
    return cur;
  }

  bool bruhat_leq_double(const ParahoricType& K, const AffElem& c1,
                         const AffElem& c2) const {
    return bruhat_leq(double_coset_min_rep(K, c1, K), double_coset_min_rep(K, c2, K));
  }

  // all elements of the double coset W~^K w W~^{K'}
  std::vector<AffElem> double_coset(const ParahoricType& K, const AffElem& w,
                                    const ParahoricType& K2) const {
    AffSet out;
    for (const AffElem& a : parahoric_group(K))
      for (const AffElem& b : parahoric_group(K2))
        out.insert(compose(a, compose(w, b)));
    return sorted(out);
  }

 private:
  const RootDatum& rd_;
  std::vector<FiniteWeylElem> wgroup_;
  AffElem omega_gen_;

  AffElem find_omega_generator() const {
    if (rd_.kind() == GroupKind::GL) {
      // t_{e_1} * (j -> j+1 cycle): the standard shift matrix
      Coweight t = rd_.zero();
      t.a[0] = 1;
      FiniteWeylElem c;
      c.img.resize(rd_.dim());
      for (int j = 0; j < rd_.dim(); ++j) c.img[j] = (j + 1) % rd_.dim();
      AffElem g{std::move(t), std::move(c)};
      if (length(g) != 0) throw std::logic_error("GL omega generator has length != 0");
      return g;
    }
    // GSp: the unique length-0 element with similitude 1; its translation
    // part is a W_0-conjugate of the weight-n minuscule cocharacter
    std::vector<Int> mu(rd_.dim(), 0);
    for (int i = 0; i < rd_.cn(); ++i) mu[i] = 1;
    Coweight m{mu};
    for (const Coweight& nu : rd_.orbit(m))
      for (const FiniteWeylElem& u : wgroup_) {
        AffElem g{nu, u};
        if (length(g) == 0) return g;
      }
    throw std::logic_error("GSp omega generator not found");
  }
};

}  // namespace alcovelab
