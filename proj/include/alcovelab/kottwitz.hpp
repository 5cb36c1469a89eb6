// sigma-conjugacy invariants for GL_n and GSp_2n: Newton vectors, the finite
// poset B(G,mu) cut out by the Kottwitz condition kappa(b) = mu^nat and the
// dominance bound nu_b <= mu_bar^*, Chai's length formula, and the
// conjectural basic-locus dimension.
//
// Elements are represented purely by (Newton vector, kappa); GSp_2n is
// enumerated inside GL_2n with the self-duality filter.
#pragma once

#include "rootdata.hpp"

#include <optional>

namespace alcovelab {

// weakly decreasing rational slope vector; breakpoints at lattice points
using NewtonVector = RatVec;

struct SigmaClass {
  NewtonVector newton;
  Int kappa = 0;
  bool basic = false;

  bool operator==(const SigmaClass& o) const {
    return newton == o.newton && kappa == o.kappa;
  }
};

struct BGmuPoset {
  std::vector<SigmaClass> elements;           // sorted: basic first (by dominance height)
  std::vector<std::pair<int, int>> hasse;     // covering pairs (lower, upper)
  std::vector<Int> rank;                      // Chai rank from the basic element
  int basic_index = -1, ordinary_index = -1;
  std::vector<std::vector<bool>> leq;         // full order relation
};

inline Int mu_natural(const RootDatum& rd, const Coweight& mu) {
  return rd.kappa(mu);
}

// Galois average of mu^*; trivial for split groups
inline NewtonVector mu_bar_star(const RootDatum& rd, const Coweight& mu) {
  Coweight d = rd.dominant_rep(mu).first;
  NewtonVector v;
  v.reserve(rd.dim());
  for (Int x : d.a) v.push_back(rat(x));
  return v;
}

inline bool newton_is_basic(const NewtonVector& v) {
  for (const Rat& x : v)
    if (x != v.front()) return false;
  return true;
}

// Mazur: newton <= hodge in rational dominance (with equal endpoints, which
// the GL-dominance test already enforces; for GSp equality of similitudes)
inline bool mazur_check(const RootDatum& rd, const Coweight& hodge,
                        const NewtonVector& newton) {
  NewtonVector h = mu_bar_star(rd, hodge);
  return rd.dominance_leq_rational(newton, h);
}

namespace detail {

// Enumerate all concave lattice-breakpoint chains from (0,0) to (n, total)
// weakly below the prefix-sum chain of mu (classical Newton polygon
// enumeration).  Slope vectors come out weakly decreasing with integral
// prefix sums at every slope change; staying below mu at the breakpoints
// suffices by concavity of the mu-chain.
inline void enumerate_newton_gl(int n, const std::vector<Int>& mu_prefix,
                                std::vector<NewtonVector>& out) {
  Int total = mu_prefix[n - 1];
  struct Pt { Int x, y; };
  std::vector<Pt> bps;  // interior breakpoints
  std::function<void(Int, Int, std::optional<Rat>)> rec =
      [&](Int x0, Int y0, std::optional<Rat> prev_slope) {
        // close the chain with one final segment to (n, total)
        Rat last = rat(total - y0, n - x0);
        if (!prev_slope || last < *prev_slope) {
          NewtonVector v;
          Int px = 0, py = 0;
          auto emit = [&](Int x1, Int y1) {
            Rat s = rat(y1 - py, x1 - px);
            for (Int k = px; k < x1; ++k) v.push_back(s);
            px = x1;
            py = y1;
          };
          for (const Pt& b : bps) emit(b.x, b.y);
          emit(n, total);
          out.push_back(std::move(v));
        }
        // or choose another interior lattice breakpoint (x, y): y must stay
        // strictly above the chord to (n, total) so the chain can still
        // close concavely, and weakly below the mu-chain
        for (Int x = x0 + 1; x <= n - 1; ++x) {
          Rat chord = rat((x - x0) * total + (n - x) * y0, n - x0);
          Int ylo = rat_floor(chord) + 1;
          Int yhi = mu_prefix[x - 1];
          for (Int y = ylo; y <= yhi; ++y) {
            Rat s = rat(y - y0, x - x0);
            if (prev_slope && !(s < *prev_slope)) continue;  // slopes strictly decrease
            bps.push_back({x, y});
            rec(x, y, s);
            bps.pop_back();
          }
        }
      };
  rec(0, 0, std::nullopt);
}

}  // namespace detail

inline std::vector<SigmaClass> enumerate_bgmu_elements(const RootDatum& rd,
                                                       const Coweight& mu) {
  Coweight md = rd.dominant_rep(mu).first;
  int n = rd.dim();
  std::vector<Int> prefix(n);
  Int acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += md.a[i];
    prefix[i] = acc;
  }
  std::vector<NewtonVector> raw;
  detail::enumerate_newton_gl(n, prefix, raw);
  std::vector<SigmaClass> out;
  for (NewtonVector& v : raw) {
    if (rd.kind() == GroupKind::GSp) {
      // self-duality filter: nu_i + nu_{2n+1-i} = c for all i
      Rat c = v.front() + v.back();
      bool ok = true;
      for (int i = 0; i < n; ++i)
        if (v[i] + v[n - 1 - i] != c) ok = false;
      if (!ok) continue;
      if (!rat_is_integer(c)) continue;
    }
    if (!rd.dominance_leq_rational(v, mu_bar_star(rd, md))) continue;
    SigmaClass s;
    s.basic = newton_is_basic(v);
    s.newton = std::move(v);
    s.kappa = (rd.kind() == GroupKind::GL)
                  ? prefix[n - 1]
                  : rat_floor(s.newton.front() + s.newton.back());
    out.push_back(std::move(s));
  }
  return out;
}

// Chai's ranked-length formula (floor-sum over fundamental F-weights of the
// adjoint group); requires b <= b2 in the Newton dominance order.
inline Int chai_length(const RootDatum& rd, const Coweight& mu,
                       const NewtonVector& nu_b, const NewtonVector& nu_b2) {
  if (!rd.dominance_leq_rational(nu_b, nu_b2))
    throw std::invalid_argument("chai_length: incomparable pair");
  NewtonVector mbar = mu_bar_star(rd, mu);
  Int sum = 0;
  for (int i = 1; i <= rd.rank(); ++i) {
    Rat wm = rd.omega_pair_coweight(i, mbar);
    sum += rat_floor(rd.omega_pair_coweight(i, nu_b2) - wm) -
           rat_floor(rd.omega_pair_coweight(i, nu_b) - wm);
  }
  return sum;
}

inline NewtonVector basic_newton(const RootDatum& rd, const Coweight& mu) {
  NewtonVector v(rd.dim(), Rat(0));
  if (rd.kind() == GroupKind::GL) {
    Rat s = rat(mu_natural(rd, mu), rd.dim());
    for (auto& x : v) x = s;
  } else {
    Rat s = rat(mu_natural(rd, mu), 2);
    for (auto& x : v) x = s;
  }
  return v;
}

inline BGmuPoset enumerate_bgmu(const RootDatum& rd, const Coweight& mu) {
  BGmuPoset P;
  P.elements = enumerate_bgmu_elements(rd, mu);
  int m = (int)P.elements.size();
  P.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      P.leq[i][j] = rd.dominance_leq_rational(P.elements[i].newton, P.elements[j].newton);
  // sort by height (number of elements below), then slope vector, for a
  // deterministic linear extension
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  auto below = [&](int i) {
    int c = 0;
    for (int j = 0; j < m; ++j)
      if (P.leq[j][i]) ++c;
    return c;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ba = below(a), bb = below(b);
    if (ba != bb) return ba < bb;
    return P.elements[a].newton < P.elements[b].newton;
  });
  std::vector<SigmaClass> sorted_el;
  for (int i : order) sorted_el.push_back(P.elements[i]);
  P.elements = std::move(sorted_el);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      P.leq[i][j] = rd.dominance_leq_rational(P.elements[i].newton, P.elements[j].newton);
  // Hasse edges = transitive reduction
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !P.leq[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < m; ++k)
        if (k != i && k != j && P.leq[i][k] && P.leq[k][j]) covered = false;
      if (covered) P.hasse.push_back({i, j});
    }
  // distinguished elements + Chai ranks from the basic element
  for (int i = 0; i < m; ++i) {
    if (P.elements[i].basic) P.basic_index = i;
    if (P.elements[i].newton == mu_bar_star(rd, rd.dominant_rep(mu).first))
      P.ordinary_index = i;
  }
  P.rank.resize(m, 0);
  if (P.basic_index >= 0)
    for (int i = 0; i < m; ++i)
      P.rank[i] = chai_length(rd, mu, P.elements[P.basic_index].newton,
                              P.elements[i].newton);
  return P;
}

// Conjectural dimension of the basic locus: <2rho, mu_bar*> minus the
// basic-to-ordinary chain length; evaluated through both printed forms,
// asserted equal.
inline Int conj_dim_basic(const RootDatum& rd, const Coweight& mu) {
  Coweight md = rd.dominant_rep(mu).first;
  NewtonVector mbar = mu_bar_star(rd, md);
  AdjVec mu_ad = rd.proj_adjoint(md);
  Rat two_rho = rd.two_rho_pair(mu_ad);
  if (!rat_is_integer(two_rho)) throw std::logic_error("<2rho,mu> not integral");
  Int formA = rat_floor(two_rho) - chai_length(rd, md, basic_newton(rd, md), mbar);
  Int s = 0;
  for (int i = 1; i <= rd.rank(); ++i) s += rat_floor(-rd.omega_pair_coweight(i, mbar));
  Int formB = rat_floor(two_rho) + s;
  if (formA != formB) throw std::logic_error("conj_dim_basic: the two forms disagree");
  return formA;
}

}  // namespace alcovelab
