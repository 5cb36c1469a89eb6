// Exhaustive F_q-point counts of the special fibers of the lattice-chain
// local models: subspace chains F_{i_0} -> F_{i_1} -> ... -> F_{i_m} -> F_{i_0}
// compatible with the reductions of the lattice inclusions and the
// wrap-around pi-map, with the symplectic duality condition for GSp.
#pragma once

#include "gf.hpp"
#include "rational.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace alcovelab {

struct ChainConfig {
  bool gsp = false;
  int n = 0;          // ambient dimension (2n for GSp)
  int r = 0;          // rank of the subspaces
  std::vector<int> I; // chain indices, subset of {0..n-1}, sorted
  long q = 2;
};

inline ChainConfig make_chain_config(bool gsp, int n, int r, std::vector<int> I,
                                     long q) {
  if (n <= 0 || r < 0 || r > n) throw std::invalid_argument("bad chain dimensions");
  if (gsp && n % 2 != 0) throw std::invalid_argument("GSp needs even ambient dimension");
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (I.empty() || I.front() < 0 || I.back() >= n)
    throw std::invalid_argument("chain indices out of range");
  if (gsp)
    for (int i : I)
      if (i != 0 && std::find(I.begin(), I.end(), n - i) == I.end())
        throw std::invalid_argument("GSp chain must be closed under i -> 2n-i");
  return ChainConfig{gsp, n, r, std::move(I), q};
}

// r x n row-reduced echelon basis of a rank-r subspace
using Subspace = std::vector<std::vector<GFElem>>;

// mod-pi reduction of the transition Lambda_i -> Lambda_j (i < j): the
// diagonal 0/1 matrix killing basis indices i <= k < j; the wrap-around
// pi: Lambda_{i_m} -> Lambda_{i_0} keeps exactly i_0 <= k < i_m
inline std::vector<GFElem> transition_diag(int n, int i, int j, bool wrap) {
  std::vector<GFElem> d(n, 0);
  for (int k = 0; k < n; ++k) {
    bool keep = wrap ? (i <= k && k < j) : (k < i || k >= j);
    d[k] = keep ? 1 : 0;
  }
  return d;
}

// all transition diagonals along the chain, last one the wrap-around
inline std::vector<std::vector<GFElem>> transition_matrices(const ChainConfig& cfg) {
  std::vector<std::vector<GFElem>> out;
  for (std::size_t k = 0; k + 1 < cfg.I.size(); ++k)
    out.push_back(transition_diag(cfg.n, cfg.I[k], cfg.I[k + 1], false));
  out.push_back(transition_diag(cfg.n, cfg.I.front(), cfg.I.back(), true));
  return out;
}

namespace lmdetail {

// enumerate all RREF bases of r-dimensional subspaces of F^n
inline std::vector<Subspace> enumerate_subspaces(const FqmField& F, int n, int r) {
  std::vector<Subspace> out;
  if (r == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> pivots(r);
  std::function<void(int, int)> choose = [&](int idx, int from) {
    if (idx == r) {
      // fill free entries: (i, j) free iff j > pivots[i] and j not a pivot
      std::vector<std::pair<int, int>> freepos;
      std::vector<bool> is_pivot(n, false);
      for (int p : pivots) is_pivot[p] = true;
      for (int i = 0; i < r; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
          if (!is_pivot[j]) freepos.push_back({i, j});
      Subspace base(r, std::vector<GFElem>(n, 0));
      for (int i = 0; i < r; ++i) base[i][pivots[i]] = 1;
      std::function<void(std::size_t, Subspace&)> fill = [&](std::size_t k, Subspace& cur) {
        if (k == freepos.size()) {
          out.push_back(cur);
          return;
        }
        auto [i, j] = freepos[k];
        for (long v = 0; v < F.size(); ++v) {
          cur[i][j] = static_cast<GFElem>(v);
          fill(k + 1, cur);
        }
        cur[i][j] = 0;
      };
      fill(0, base);
      return;
    }
    for (int p = from; p < n; ++p) {
      pivots[idx] = p;
      choose(idx + 1, p + 1);
    }
  };
  choose(0, 0);
  return out;
}

// is v in the row space of the RREF basis?
inline bool in_span(const FqmField& F, const Subspace& S, std::vector<GFElem> v) {
  for (const auto& row : S) {
    int p = -1;
    for (int j = 0; j < (int)row.size(); ++j)
      if (row[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    if (v[p] != 0) {
      GFElem c = F.mul(v[p], F.inv(row[p]));
      for (int j = 0; j < (int)v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, row[j]));
    }
  }
  for (GFElem x : v)
    if (x != 0) return false;
  return true;
}

// does the diagonal map send src into dst?
inline bool maps_into(const FqmField& F, const std::vector<GFElem>& diag,
                      const Subspace& src, const Subspace& dst) {
  for (const auto& row : src) {
    std::vector<GFElem> img(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) img[j] = F.mul(diag[j], row[j]);
    if (!in_span(F, dst, std::move(img))) return false;
  }
  return true;
}

// mod-pi pairing between the reduced bases of Lambda_i and Lambda_{2n-i}
// (any i, including the self-dual indices 0 and n): antidiagonal +-1
inline bool duality_zero(const FqmField& F, int n, const Subspace& A, const Subspace& B) {
  // sign is irrelevant for a zero-composition test; pair (a, n-1-a)
  for (const auto& u : A)
    for (const auto& v : B) {
      GFElem s = 0;
      for (int a = 0; a < n; ++a) {
        GFElem term = F.mul(u[a], v[n - 1 - a]);
        if (a >= n / 2) term = F.neg(term);
        s = F.add(s, term);
      }
      if (s != 0) return false;
    }
  return true;
}

}  // namespace lmdetail

// exact number of subspace chains over F_q satisfying all compatibility
// (and, for GSp, duality) conditions; on_chain, when set, receives the
// subspace indices (RREF enumeration order) of every valid chain
inline Int count_points(const ChainConfig& cfg, std::size_t cap = 500000000ull,
                        const std::function<void(const std::vector<int>&)>* on_chain =
                            nullptr) {
  FqmField F(cfg.q, 1);
  auto subs = lmdetail::enumerate_subspaces(F, cfg.n, cfg.r);
  auto trans = transition_matrices(cfg);
  int m = (int)cfg.I.size();

  // node-local duality filters (GSp, self-dual chain index)
  std::vector<std::vector<int>> cand(m);
  for (int k = 0; k < m; ++k) {
    for (int s = 0; s < (int)subs.size(); ++s) {
      if (cfg.gsp) {
        int dual = (cfg.n - cfg.I[k]) % cfg.n;
        if (dual == cfg.I[k] &&
            !lmdetail::duality_zero(F, cfg.n, subs[s], subs[s]))
          continue;
      }
      cand[k].push_back(s);
    }
  }

  // position of each index in the chain, for cross-pair duality checks
  auto pos_of = [&](int idx) {
    for (int k = 0; k < m; ++k)
      if (cfg.I[k] == idx) return k;
    return -1;
  };

  Int count = 0;
  std::size_t visited = 0;
  std::vector<int> pick(m, -1);
  std::function<void(int)> rec = [&](int k) {
    if (++visited > cap) throw CapExceeded("localmodel count cap exceeded");
    if (k == m) {
      // wrap-around condition
      if (lmdetail::maps_into(F, trans.back(), subs[pick[m - 1]], subs[pick[0]])) {
        ++count;
        if (on_chain) (*on_chain)(pick);
      }
      return;
    }
    for (int s : cand[k]) {
      if (k > 0 && !lmdetail::maps_into(F, trans[k - 1], subs[pick[k - 1]], subs[s]))
        continue;
      if (cfg.gsp) {
        // cross-pair duality once both endpoints are assigned
        int dk = pos_of((cfg.n - cfg.I[k]) % cfg.n);
        if (dk >= 0 && dk < k &&
            !lmdetail::duality_zero(F, cfg.n, subs[s], subs[pick[dk]]))
          continue;
      }
      pick[k] = s;
      rec(k + 1);
      pick[k] = -1;
    }
  };
  if (m == 1) {
    // singleton chain: the wrap-around is the zero map, vacuous on subspaces
    count = (Int)cand[0].size();
    if (on_chain)
      for (int s : cand[0]) (*on_chain)(std::vector<int>{s});
  } else {
    rec(0);
  }
  return count;
}

inline Int gaussian_binomial(int n, int r, long q) {
  if (r < 0 || r > n) return 0;
  Rat acc(1);
  for (int i = 1; i <= r; ++i) {
    Int top = 1, bot = 1;
    for (int k = 0; k < n - r + i; ++k) top *= q;
    for (int k = 0; k < i; ++k) bot *= q;
    acc *= rat(top - 1, bot - 1);
  }
  if (!rat_is_integer(acc)) throw std::logic_error("gaussian binomial not integral");
  return rat_floor(acc);
}

// cell-paradigm prediction for the full-chain (Iwahori) case:
// sum of q^{l(w)} over the admissible set, given its length multiset
inline Int predicted_count_iwahori(const std::vector<Int>& lengths, long q) {
  Int total = 0;
  for (Int l : lengths) {
    Int p = 1;
    for (Int k = 0; k < l; ++k) p *= q;
    total += p;
  }
  return total;
}

// exact Lagrange fit: returns the coefficients (ascending degree) of the
// unique degree <= points.size()-1 polynomial through the points, if it has
// integer coefficients and degree <= maxdeg; otherwise nullopt
inline std::optional<std::vector<Int>> fit_integer_polynomial(
    const std::vector<std::pair<Int, Int>>& points, int maxdeg) {
  int k = (int)points.size();
  // Newton's divided differences over Q, then expand
  std::vector<Rat> coef(k), xs(k);
  for (int i = 0; i < k; ++i) {
    coef[i] = rat(points[i].second);
    xs[i] = rat(points[i].first);
  }
  for (int j = 1; j < k; ++j)
    for (int i = k - 1; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rat> poly{coef[k - 1]};
  for (int i = k - 2; i >= 0; --i) {
    // poly = poly * (x - xs[i]) + coef[i]
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * xs[i];
    }
    next[0] += coef[i];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  if ((int)poly.size() - 1 > maxdeg) return std::nullopt;
  std::vector<Int> out;
  for (const Rat& c : poly) {
    if (!rat_is_integer(c)) return std::nullopt;
    out.push_back(rat_floor(c));
  }
  return out;
}

}  // namespace alcovelab
