#include "alcovelab/admperm.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <thread>

using namespace alcovelab;

namespace {

// independent polytope-membership oracle for GL2: solve the convex
// combination over the two orbit vertices exactly
bool gl2_hull_contains(const RootDatum& rd, const Coweight& mu, const AdjVec& p) {
  AdjVec v1 = rd.proj_adjoint(mu);
  auto [md, w] = rd.dominant_rep(mu);
  (void)w;
  AdjVec v2 = v1;
  std::swap(v2[0], v2[1]);
  // p = c v1 + (1-c) v2 with 0 <= c <= 1
  if (v1 == v2) return p == v1;
  Rat c = (p[0] - v2[0]) / (v1[0] - v2[0]);
  if (c < 0 || c > 1) return false;
  return p[0] == c * v1[0] + (1 - c) * v2[0] && p[1] == c * v1[1] + (1 - c) * v2[1];
}

}  // namespace

TEST_CASE("polytope membership", "[admperm]") {
  RootDatum gl2 = RootDatum::GL(2);
  Coweight mu = gl2.coweight({1, 0});
  MuPolytope P = make_mu_polytope(gl2, mu);
  REQUIRE(polytope_contains(gl2, P, gl2.proj_adjoint(mu)));
  REQUIRE(polytope_contains(gl2, P, AdjVec{rat(0), rat(0)}));
  REQUIRE_FALSE(polytope_contains(gl2, P, AdjVec{rat(3, 4), rat(-3, 4)}));

  // against the exact convex-combination oracle on a grid
  for (Int num = -8; num <= 8; ++num) {
    AdjVec p{rat(num, 8), rat(-num, 8)};
    REQUIRE(polytope_contains(gl2, P, p) == gl2_hull_contains(gl2, mu, p));
  }

  // W_0-stability via transformed sample points: orbit vertices and a grid
  // of random rational points, inside or out
  RootDatum gsp4 = RootDatum::GSp(4);
  Coweight mu4 = gsp4.coweight({2, 1, 1, 0});
  MuPolytope P4 = make_mu_polytope(gsp4, mu4);
  for (const FiniteWeylElem& w : gsp4.weyl_group())
    for (const Coweight& lam : gsp4.orbit(mu4))
      REQUIRE(polytope_contains(gsp4, P4, gsp4.adj_act(w, gsp4.proj_adjoint(lam))));
  for (Int a = -4; a <= 4; ++a)
    for (Int b = -4; b <= 4; ++b) {
      AdjVec p{rat(a, 2), rat(b, 3)};
      bool inside = polytope_contains(gsp4, P4, p);
      for (const FiniteWeylElem& w : gsp4.weyl_group())
        REQUIRE(polytope_contains(gsp4, P4, gsp4.adj_act(w, p)) == inside);
    }
}

TEST_CASE("mu data", "[admperm]") {
  RootDatum gl3 = RootDatum::GL(3);
  AffWeyl aw(gl3);
  MuData m = make_mu_data(aw, gl3.coweight({0, 1, 0}));
  REQUIRE(m.mu == gl3.coweight({1, 0, 0}));
  REQUIRE(m.orbit.size() == 3);
  REQUIRE(m.kappa == 1);
  REQUIRE(aw.length(m.tau) == 0);
  // all orbit elements congruent mod W_a: equal kappa
  for (const Coweight& lam : m.orbit) REQUIRE(gl3.kappa(lam) == m.kappa);
}

TEST_CASE("adm", "[admperm]") {
  RootDatum gl2 = RootDatum::GL(2), gl3 = RootDatum::GL(3);
  AffWeyl aw2(gl2), aw3(gl3);
  auto A = adm(aw2, gl2.coweight({1, 0}));
  REQUIRE(A.size() == 3);
  REQUIRE(adm(aw2, gl2.coweight({0, 0})).size() == 1);
  REQUIRE(adm(aw3, gl3.coweight({1, 0, 0})).size() == 7);
  REQUIRE_THROWS_AS(adm(aw3, gl3.coweight({2, 1, 0}), 3), CapExceeded);

  // every element has Omega-component tau(mu); maximal elements are the t_lambda
  MuData m = make_mu_data(aw3, gl3.coweight({1, 0, 0}));
  auto A3 = adm(aw3, m.mu);
  AffSet s3(A3.begin(), A3.end());
  for (const AffElem& x : A3) REQUIRE(aw3.kappa(x) == m.kappa);
  for (const AffElem& x : A3) {
    bool is_max = true;
    for (const AffElem& y : A3)
      if (!(x == y) && aw3.bruhat_leq(x, y)) is_max = false;
    bool is_translation_of_orbit = false;
    for (const Coweight& lam : m.orbit)
      if (x == aw3.translation(lam)) is_translation_of_orbit = true;
    REQUIRE(is_max == is_translation_of_orbit);
  }
}

TEST_CASE("perm and compare", "[admperm]") {
  RootDatum gl2 = RootDatum::GL(2), gsp4 = RootDatum::GSp(4);
  AffWeyl aw2(gl2), aw4(gsp4);
  auto A = adm(aw2, gl2.coweight({1, 0}));
  auto P = perm(aw2, gl2.coweight({1, 0}));
  REQUIRE(A == P);
  REQUIRE(perm(aw2, gl2.coweight({0, 0})).size() == 1);
  REQUIRE(adm(aw4, gsp4.coweight({1, 1, 0, 0})) == perm(aw4, gsp4.coweight({1, 1, 0, 0})));

  REQUIRE(compare_adm_perm(aw4, gsp4.coweight({2, 2, 0, 0})).equal);
  AdmPermReport r = compare_adm_perm(aw2, gl2.coweight({2, 1}));
  REQUIRE(r.equal);
  REQUIRE(r.adm_only.empty());
}

TEST_CASE("adm_K", "[admperm]") {
  RootDatum gl2 = RootDatum::GL(2), gl3 = RootDatum::GL(3);
  AffWeyl aw2(gl2), aw3(gl3);

  // K = empty is the Iwahori: adm_K = adm
  REQUIRE(adm_K(aw2, gl2.coweight({1, 0}), aw2.parahoric({})) ==
          adm(aw2, gl2.coweight({1, 0})));

  // special maximal, minuscule: one coset
  REQUIRE(adm_K(aw2, gl2.coweight({1, 0}), aw2.special_maximal()).size() == 1);

  // GL3 special maximal, mu=(2,0,0): cosets of the dominant nu <=! mu
  ParahoricType K3 = aw3.special_maximal();
  auto AK = adm_K(aw3, gl3.coweight({2, 0, 0}), K3);
  AffSet expect;
  expect.insert(aw3.double_coset_min_rep(K3, aw3.translation(gl3.coweight({2, 0, 0})), K3));
  expect.insert(aw3.double_coset_min_rep(K3, aw3.translation(gl3.coweight({1, 1, 0})), K3));
  REQUIRE(AffSet(AK.begin(), AK.end()) == expect);

  // projection image agrees with the double-coset-order definition
  for (const std::vector<Int>& mu : {std::vector<Int>{1, 0, 0}, {1, 1, 0}, {2, 0, 0}}) {
    for (std::vector<int> Kset : {std::vector<int>{1, 2}, {0}, {1}}) {
      ParahoricType K = aw3.parahoric(Kset);
      REQUIRE(adm_K(aw3, gl3.coweight(mu), K) ==
              adm_K_by_definition(aw3, gl3.coweight(mu), K));
    }
  }
}

TEST_CASE("perm_K", "[admperm]") {
  RootDatum gl3 = RootDatum::GL(3);
  AffWeyl aw3(gl3);
  Coweight mu = gl3.coweight({1, 0, 0});

  // K = empty: perm_K = perm
  REQUIRE(perm_K(aw3, mu, aw3.parahoric({})) == perm(aw3, mu));

  // GL3 special maximal: equals adm_K
  REQUIRE(perm_K(aw3, mu, aw3.special_maximal()) ==
          adm_K(aw3, mu, aw3.special_maximal()));

  // GSp4 Siegel parahoric (the reflection fixing the apex and the far
  // vertex): perm_K contains the image of perm; surjectivity not assumed
  RootDatum gsp4 = RootDatum::GSp(4);
  AffWeyl aw4(gsp4);
  Coweight mu4 = gsp4.coweight({1, 1, 0, 0});
  for (std::vector<int> Kset : {std::vector<int>{1}, {2}, {1, 2}}) {
    ParahoricType K = aw4.parahoric(Kset);
    auto PK = perm_K(aw4, mu4, K);
    AffSet pk(PK.begin(), PK.end());
    for (const AffElem& w : perm(aw4, mu4))
      REQUIRE(pk.count(aw4.double_coset_min_rep(K, w, K)) > 0);
    // and Adm_K is contained in Perm_K
    for (const AffElem& c : adm_K(aw4, mu4, K)) REQUIRE(pk.count(c) > 0);
  }
}

TEST_CASE("concurrent use of shared immutable structures", "[admperm]") {
  RootDatum gsp4 = RootDatum::GSp(4);
  AffWeyl aw(gsp4);
  Coweight mu = gsp4.coweight({2, 2, 0, 0});
  std::vector<AffElem> expected = adm(aw, mu);
  std::vector<std::vector<AffElem>> got(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] { got[t] = t % 2 ? adm(aw, mu) : perm(aw, mu); });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 4; ++t) REQUIRE(got[t] == expected);
}

TEST_CASE("closure and translation-intersection properties", "[admperm]") {
  RootDatum gsp4 = RootDatum::GSp(4);
  AffWeyl aw(gsp4);
  Coweight mu = gsp4.coweight({1, 1, 0, 0});
  auto P = perm(aw, mu);
  AffSet ps(P.begin(), P.end());
  // downward Bruhat closure, checked with full lower sets at this scale
  for (const AffElem& w : P)
    for (const AffElem& x : aw.bruhat_lower_set(w)) REQUIRE(ps.count(x) > 0);
  // translation intersections agree
  auto A = adm(aw, mu);
  AffSet ta, tp;
  for (const AffElem& x : A)
    if (x.w.is_identity()) ta.insert(x);
  for (const AffElem& x : P)
    if (x.w.is_identity()) tp.insert(x);
  REQUIRE(ta == tp);
}
