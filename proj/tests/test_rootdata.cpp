#include "alcovelab/rootdata.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace alcovelab;

namespace {

// independent oracle: locate the dominant representative by scanning the
// whole W_0-orbit
Coweight orbit_scan_dominant(const RootDatum& rd, const Coweight& nu) {
  for (const FiniteWeylElem& w : rd.weyl_group()) {
    Coweight c = rd.act(w, nu);
    if (rd.is_dominant(c)) return c;
  }
  FAIL("no dominant element in orbit");
  return nu;
}

// independent oracle: brute-force nonnegative integer combinations of the
// simple coroots up to a coefficient bound
bool brute_leq_coroot(const RootDatum& rd, const Coweight& nu, const Coweight& mu,
                      Int bound) {
  std::vector<Int> diff(rd.dim());
  for (int i = 0; i < rd.dim(); ++i) diff[i] = mu.a[i] - nu.a[i];
  int k = (int)rd.simple_roots().size();
  std::vector<Int> c(k, 0);
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == k) {
      std::vector<Int> acc(rd.dim(), 0);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < rd.dim(); ++i)
          acc[i] += c[j] * rd.simple_roots()[j].coroot[i];
      return acc == diff;
    }
    for (Int v = 0; v <= bound; ++v) {
      c[idx] = v;
      if (rec(idx + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

Coweight cw(const RootDatum& rd, std::vector<Int> a) { return rd.coweight(std::move(a)); }

}  // namespace

TEST_CASE("root datum invariants", "[rootdata]") {
  for (RootDatum rd : {RootDatum::GL(2), RootDatum::GL(3), RootDatum::GL(4),
                       RootDatum::GSp(4), RootDatum::GSp(6)}) {
    // <omega_i, alpha_j^> = delta_ij
    for (int i = 1; i <= rd.rank(); ++i)
      for (int j = 0; j < rd.rank(); ++j) {
        RatVec cj = rd.adj_coroot(rd.simple_roots()[j]);
        AdjVec x(cj.begin(), cj.end());
        REQUIRE(rd.omega_pair(i, x) == (i == j + 1 ? rat(1) : rat(0)));
      }
    // <2rho, alpha_j^> = 2, and 2rho = sum of positive roots by definition
    for (const Root& al : rd.simple_roots()) {
      Coweight c{std::vector<Int>(al.coroot.begin(), al.coroot.end())};
      REQUIRE(rd.two_rho_pair(c) == 2);
    }
    // theta = sum marks_k alpha_k as linear functionals, with every mark
    // >= 1, so theta - alpha_j stays a nonnegative combination
    for (int i = 0; i < rd.dim(); ++i) {
      std::vector<Int> probe(rd.dim(), 0);
      probe[i] = 1;
      if (rd.kind() == GroupKind::GSp) probe[rd.dim() - 1 - i] -= 1;
      Int theta_val = probe[rd.highest_root().p] - probe[rd.highest_root().q];
      Int sum = 0;
      for (std::size_t k = 0; k < rd.simple_roots().size(); ++k)
        sum += rd.theta_marks()[k] *
               (probe[rd.simple_roots()[k].p] - probe[rd.simple_roots()[k].q]);
      REQUIRE(theta_val == sum);
    }
    for (std::size_t j = 0; j < rd.simple_roots().size(); ++j)
      REQUIRE(rd.theta_marks()[j] >= 1);
  }
}

TEST_CASE("dominant_rep", "[rootdata]") {
  RootDatum gl3 = RootDatum::GL(3);
  auto [d1, w1] = gl3.dominant_rep(cw(gl3, {0, 1, 0}));
  REQUIRE(d1 == cw(gl3, {1, 0, 0}));
  REQUIRE(gl3.act(w1, d1) == cw(gl3, {0, 1, 0}));

  RootDatum gl2 = RootDatum::GL(2);
  auto [d2, w2] = gl2.dominant_rep(cw(gl2, {1, 0}));
  REQUIRE(d2 == cw(gl2, {1, 0}));
  REQUIRE(w2.is_identity());

  RootDatum gsp4 = RootDatum::GSp(4);
  Coweight nu = cw(gsp4, {0, 1, 1, 2});
  auto [d3, w3] = gsp4.dominant_rep(nu);
  REQUIRE(d3 == orbit_scan_dominant(gsp4, nu));
  REQUIRE(gsp4.act(w3, d3) == nu);
  REQUIRE(gsp4.is_dominant(d3));

  // malformed GSp coweight
  REQUIRE_THROWS_AS(gsp4.coweight({0, 1, 0, 2}), std::invalid_argument);
}

TEST_CASE("leq_coroot", "[rootdata]") {
  RootDatum gl2 = RootDatum::GL(2), gl3 = RootDatum::GL(3);
  REQUIRE(gl2.leq_coroot(cw(gl2, {1, 0}), cw(gl2, {1, 0})));
  REQUIRE(gl3.leq_coroot(cw(gl3, {1, 1, 1}), cw(gl3, {2, 1, 0})));
  REQUIRE_FALSE(gl3.leq_coroot(cw(gl3, {2, 0, 0}), cw(gl3, {1, 1, 0})));
  REQUIRE_THROWS(gl3.leq_coroot(cw(gl3, {0, 1, 0}), cw(gl3, {1, 0, 0})));

  // against the brute-force combination oracle, exhaustively at small scale
  for (RootDatum rd : {RootDatum::GL(3), RootDatum::GSp(4)}) {
    std::vector<Coweight> doms;
    std::vector<Int> cur(rd.dim());
    std::function<void(int)> rec = [&](int i) {
      if (i == rd.dim()) {
        try {
          Coweight c = rd.coweight(cur);
          if (rd.is_dominant(c)) doms.push_back(c);
        } catch (const std::invalid_argument&) {
        }
        return;
      }
      for (Int v = 0; v <= 2; ++v) {
        cur[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    for (const Coweight& nu : doms)
      for (const Coweight& mu : doms)
        REQUIRE(rd.leq_coroot(nu, mu) == brute_leq_coroot(rd, nu, mu, 4));
  }
}

TEST_CASE("dominance_leq_rational", "[rootdata]") {
  RootDatum gl2 = RootDatum::GL(2), gl4 = RootDatum::GL(4);
  REQUIRE(gl2.dominance_leq_rational({rat(1, 2), rat(1, 2)}, {rat(1), rat(0)}));
  REQUIRE(gl4.dominance_leq_rational({rat(2, 3), rat(2, 3), rat(2, 3), rat(0)},
                                     {rat(1), rat(1), rat(0), rat(0)}));
  RatVec a{rat(1), rat(1, 3), rat(1, 3), rat(1, 3)};
  RatVec b{rat(2, 3), rat(2, 3), rat(2, 3), rat(0)};
  REQUIRE_FALSE(gl4.dominance_leq_rational(a, b));
  REQUIRE_FALSE(gl4.dominance_leq_rational(b, a));

  // restricted to integral dominant vectors with equal sums it agrees with
  // the coroot order (GL_n)
  RootDatum gl3 = RootDatum::GL(3);
  for (Int a1 = 0; a1 <= 2; ++a1)
    for (Int a2 = 0; a2 <= a1; ++a2)
      for (Int a3 = 0; a3 <= a2; ++a3)
        for (Int b1 = 0; b1 <= 2; ++b1)
          for (Int b2 = 0; b2 <= b1; ++b2)
            for (Int b3 = 0; b3 <= b2; ++b3) {
              Coweight x = cw(gl3, {a1, a2, a3}), y = cw(gl3, {b1, b2, b3});
              REQUIRE(gl3.dominance_leq_rational(rat_vec(x.a), rat_vec(y.a)) ==
                      gl3.leq_coroot(x, y));
            }
}

TEST_CASE("proj_adjoint", "[rootdata]") {
  RootDatum gl2 = RootDatum::GL(2), gl3 = RootDatum::GL(3), gsp4 = RootDatum::GSp(4);
  REQUIRE(gl2.proj_adjoint(cw(gl2, {1, 0})) == AdjVec{rat(1, 2), rat(-1, 2)});
  REQUIRE(gl3.proj_adjoint(cw(gl3, {1, 1, 1})) == AdjVec{rat(0), rat(0), rat(0)});
  AdjVec x = gsp4.proj_adjoint(cw(gsp4, {1, 1, 0, 0}));
  REQUIRE(x == AdjVec{rat(1, 2), rat(1, 2)});
  REQUIRE(gsp4.two_rho_pair(x) == rat(3));  // dimension of the Siegel threefold

  // equivariance on random samples
  std::mt19937_64 rng(7);
  for (RootDatum rd : {RootDatum::GL(3), RootDatum::GSp(4)}) {
    auto wg = rd.weyl_group();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Int> a(rd.dim());
      if (rd.kind() == GroupKind::GL) {
        for (auto& v : a) v = (Int)(rng() % 7) - 3;
      } else {
        Int c = (Int)(rng() % 5) - 2;
        for (int i = 0; i < rd.cn(); ++i) {
          a[i] = (Int)(rng() % 7) - 3;
          a[rd.dim() - 1 - i] = c - a[i];
        }
      }
      Coweight nu = rd.coweight(a);
      const FiniteWeylElem& w = wg[rng() % wg.size()];
      REQUIRE(rd.proj_adjoint(rd.act(w, nu)) == rd.adj_act(w, rd.proj_adjoint(nu)));
      // <2rho, nu> = sum of <beta, nu> over positive roots
      Int s = 0;
      for (const Root& b : rd.positive_roots()) s += rd.pair(b, nu);
      REQUIRE(rd.two_rho_pair(nu) == s);
    }
  }
}

TEST_CASE("stembridge chains", "[rootdata]") {
  RootDatum gl2 = RootDatum::GL(2), gl3 = RootDatum::GL(3);
  REQUIRE(stembridge_chain(gl2, cw(gl2, {1, 1}), cw(gl2, {1, 1})).size() == 1);

  auto c2 = stembridge_chain(gl2, cw(gl2, {1, 1}), cw(gl2, {2, 0}));
  REQUIRE(c2 == std::vector<Coweight>{cw(gl2, {1, 1}), cw(gl2, {2, 0})});

  auto c3 = stembridge_chain(gl3, cw(gl3, {1, 1, 1}), cw(gl3, {3, 0, 0}));
  REQUIRE(c3.size() == 3);  // two positive-coroot steps

  // property: whenever nu <=! mu, a chain exists and validates
  for (RootDatum rd : {RootDatum::GL(3), RootDatum::GSp(4)}) {
    std::vector<Coweight> doms;
    std::vector<Int> cur(rd.dim());
    std::function<void(int)> rec = [&](int i) {
      if (i == rd.dim()) {
        try {
          Coweight c = rd.coweight(cur);
          if (rd.is_dominant(c)) doms.push_back(c);
        } catch (const std::invalid_argument&) {
        }
        return;
      }
      for (Int v = 0; v <= 2; ++v) {
        cur[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    for (const Coweight& nu : doms)
      for (const Coweight& mu : doms) {
        if (!rd.leq_coroot(nu, mu)) continue;
        auto chain = stembridge_chain(rd, nu, mu);
        REQUIRE(chain.front() == nu);
        REQUIRE(chain.back() == mu);
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
          REQUIRE(rd.is_dominant(chain[k]));
          Coweight step = rd.sub(chain[k + 1], chain[k]);
          bool is_pos_coroot = false;
          for (const Root& b : rd.positive_roots())
            if (std::vector<Int>(b.coroot.begin(), b.coroot.end()) == step.a)
              is_pos_coroot = true;
          REQUIRE(is_pos_coroot);
        }
      }
  }
}
