#include "alcovelab/affweyl.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace alcovelab;

namespace {

AdjVec random_point(const RootDatum& rd, std::mt19937_64& rng) {
  AdjVec p(rd.adj_dim(), Rat(0));
  Rat total(0);
  for (auto& x : p) {
    x = rat((Int)(rng() % 17) - 8, 1 + (Int)(rng() % 3));
    total += x;
  }
  if (rd.kind() == GroupKind::GL)
    for (auto& x : p) x -= total / rd.adj_dim();
  return p;
}

AffElem random_elem(const AffWeyl& aw, std::mt19937_64& rng, int steps) {
  AffElem x = aw.omega_elem((Int)(rng() % 3) - 1);
  for (int i = 0; i < steps; ++i)
    x = aw.compose(x, aw.simple_affine((int)(rng() % aw.num_gens())));
  return x;
}

}  // namespace

TEST_CASE("group law and inverse", "[affweyl]") {
  std::mt19937_64 rng(11);
  for (RootDatum rd : {RootDatum::GL(2), RootDatum::GL(3), RootDatum::GSp(4)}) {
    AffWeyl aw(rd);
    for (int trial = 0; trial < 30; ++trial) {
      AffElem x = random_elem(aw, rng, 4), y = random_elem(aw, rng, 4);
      AdjVec p = random_point(rd, rng);
      // (xy)(p) = x(y(p))
      REQUIRE(aw.act_on_point(aw.compose(x, y), p) ==
              aw.act_on_point(x, aw.act_on_point(y, p)));
      // x^{-1} x = e
      REQUIRE(aw.compose(aw.inverse(x), x) == aw.identity());
    }
  }
}

TEST_CASE("lengths", "[affweyl]") {
  RootDatum gl2 = RootDatum::GL(2), gl3 = RootDatum::GL(3);
  AffWeyl aw2(gl2), aw3(gl3);
  REQUIRE(aw2.length(aw2.translation(gl2.coweight({1, 0}))) == 1);
  REQUIRE(aw2.length(aw2.identity()) == 0);
  REQUIRE(aw2.length(aw2.omega_elem(1)) == 0);
  REQUIRE(aw2.length(aw2.omega_elem(-2)) == 0);
  REQUIRE(aw3.length(aw3.translation(gl3.coweight({1, 0, 0}))) == 2);

  // l(ws) = l(w) +- 1; l(t_{w(nu)}) = l(t_nu)
  std::mt19937_64 rng(3);
  for (RootDatum rd : {RootDatum::GL(3), RootDatum::GSp(4)}) {
    AffWeyl aw(rd);
    auto wg = rd.weyl_group();
    for (int trial = 0; trial < 30; ++trial) {
      AffElem x = random_elem(aw, rng, 5);
      for (int i = 0; i < aw.num_gens(); ++i) {
        Int d = aw.length(aw.compose(x, aw.simple_affine(i))) - aw.length(x);
        REQUIRE((d == 1 || d == -1));
      }
      std::vector<Int> a(rd.dim(), 0);
      if (rd.kind() == GroupKind::GL) {
        for (auto& v : a) v = (Int)(rng() % 5) - 2;
      } else {
        Int c = (Int)(rng() % 3);
        for (int i = 0; i < rd.cn(); ++i) {
          a[i] = (Int)(rng() % 5) - 2;
          a[rd.dim() - 1 - i] = c - a[i];
        }
      }
      Coweight nu = rd.coweight(a);
      Int l0 = aw.length(aw.translation(nu));
      for (const FiniteWeylElem& w : wg)
        REQUIRE(aw.length(aw.translation(rd.act(w, nu))) == l0);
      // l(t_nu) = <nu_dom, 2rho>
      REQUIRE(l0 == rd.two_rho_pair(rd.dominant_rep(nu).first));
    }
  }
}

TEST_CASE("reduced words", "[affweyl]") {
  std::mt19937_64 rng(5);
  for (RootDatum rd : {RootDatum::GL(2), RootDatum::GL(3), RootDatum::GSp(4)}) {
    AffWeyl aw(rd);
    REQUIRE(aw.reduced_word(aw.identity()).letters.empty());
    for (int i = 0; i < aw.num_gens(); ++i) {
      auto rw = aw.reduced_word(aw.simple_affine(i));
      REQUIRE(rw.letters == std::vector<int>{i});
      REQUIRE(rw.tau == aw.identity());
    }
    for (int trial = 0; trial < 25; ++trial) {
      AffElem x = random_elem(aw, rng, 6);
      auto rw = aw.reduced_word(x);
      REQUIRE((Int)rw.letters.size() == aw.length(x));
      REQUIRE(aw.evaluate_word(rw) == x);
      REQUIRE(aw.length(rw.tau) == 0);
    }
  }
  // t_{(1,0)} in GL2: one reflection times the Omega generator
  RootDatum gl2 = RootDatum::GL(2);
  AffWeyl aw2(gl2);
  auto rw = aw2.reduced_word(aw2.translation(gl2.coweight({1, 0})));
  REQUIRE(rw.letters.size() == 1);
  REQUIRE(rw.tau == aw2.omega_elem(1));
}

TEST_CASE("bruhat order", "[affweyl]") {
  RootDatum gl2 = RootDatum::GL(2);
  AffWeyl aw(gl2);
  AffElem t10 = aw.translation(gl2.coweight({1, 0}));
  AffElem t01 = aw.translation(gl2.coweight({0, 1}));
  AffElem tau = aw.omega_elem(1);
  REQUIRE(aw.bruhat_leq(t10, t10));
  REQUIRE(aw.bruhat_leq(tau, t10));
  REQUIRE(aw.bruhat_leq(tau, t01));
  REQUIRE_FALSE(aw.bruhat_leq(t10, t01));
  REQUIRE_FALSE(aw.bruhat_leq(t01, t10));

  // order axioms + reduced-word independence on an enumerated ball
  for (RootDatum rd : {RootDatum::GL(3), RootDatum::GSp(4)}) {
    AffWeyl aw2(rd);
    auto ball = aw2.enumerate_by_length(aw2.identity(), 4);
    std::vector<AffSet> lower;
    for (const AffElem& y : ball) {
      AffSet via_low = aw2.lower_set_of_word(aw2.reduced_word(y));
      AffSet via_high = aw2.lower_set_of_word(aw2.reduced_word_greedy_high(y));
      REQUIRE(via_low == via_high);
      lower.push_back(std::move(via_low));
    }
    for (std::size_t i = 0; i < ball.size(); ++i)
      for (std::size_t j = 0; j < ball.size(); ++j) {
        bool leq = lower[j].count(ball[i]) > 0;
        if (leq) {
          REQUIRE(aw2.length(ball[i]) <= aw2.length(ball[j]));
          if (aw2.length(ball[i]) == aw2.length(ball[j])) REQUIRE(ball[i] == ball[j]);
          // transitivity: lower sets nest
          for (const AffElem& z : lower[i]) REQUIRE(lower[j].count(z) > 0);
        }
      }
  }
}

TEST_CASE("alcove action and vertices", "[affweyl]") {
  RootDatum gl2 = RootDatum::GL(2);
  AffWeyl aw(gl2);
  std::mt19937_64 rng(13);
  AdjVec p = random_point(gl2, rng);
  REQUIRE(aw.act_on_point(aw.identity(), p) == p);
  // s_0 = s_{theta-1} sends y = x1 - x2 to 2 - y
  AdjVec q = aw.act_on_point(aw.simple_affine(0), p);
  REQUIRE(q[0] - q[1] == rat(2) - (p[0] - p[1]));
  REQUIRE(aw.act_on_point(aw.simple_affine(0), q) == p);  // involution
  // t_nu(0) = proj_adjoint(nu)
  AdjVec zero(gl2.adj_dim(), Rat(0));
  Coweight nu = gl2.coweight({2, -1});
  REQUIRE(aw.act_on_point(aw.translation(nu), zero) == gl2.proj_adjoint(nu));

  // vertices satisfy the defining inequalities, each with equality in all
  // walls but one
  for (RootDatum rd : {RootDatum::GL(2), RootDatum::GL(3), RootDatum::GSp(4)}) {
    AffWeyl aw2(rd);
    auto verts = aw2.base_alcove_vertices();
    REQUIRE(verts.size() == std::size_t(rd.rank() + 1));
    for (const AdjVec& v : verts) {
      int strict = 0;
      for (const Root& al : rd.simple_roots()) {
        Rat val = rd.adj_pair(al, v);
        REQUIRE(val >= 0);
        if (val > 0) ++strict;
      }
      Rat tv = rd.adj_pair(rd.highest_root(), v);
      REQUIRE(tv <= 1);
      if (tv < 1) ++strict;
      REQUIRE(strict == 1);
    }
  }
  // GSp4: theta = 2 alpha1 + alpha2
  REQUIRE(RootDatum::GSp(4).theta_marks() == std::vector<Int>{2, 1});
}

TEST_CASE("simple affine reflections are involutions fixing their wall", "[affweyl]") {
  for (RootDatum rd : {RootDatum::GL(2), RootDatum::GL(3), RootDatum::GSp(4),
                       RootDatum::GSp(6)}) {
    AffWeyl aw(rd);
    for (int i = 0; i < aw.num_gens(); ++i) {
      AffElem s = aw.simple_affine(i);
      REQUIRE(aw.compose(s, s) == aw.identity());
      REQUIRE(aw.length(s) == 1);
      // the facet fixed by {s_i} spans the wall: every vertex of it is fixed
      for (const AdjVec& v : aw.facet_vertices(aw.parahoric({i})))
        REQUIRE(aw.act_on_point(s, v) == v);
    }
  }
}

TEST_CASE("omega normalizes the simple reflections", "[affweyl]") {
  for (RootDatum rd : {RootDatum::GL(2), RootDatum::GL(3), RootDatum::GSp(4),
                       RootDatum::GSp(6)}) {
    AffWeyl aw(rd);
    for (Int k : {Int{1}, Int{-1}}) {
      AffElem tau = aw.omega_elem(k);
      AffElem taui = aw.inverse(tau);
      std::vector<bool> hit(aw.num_gens(), false);
      for (int i = 0; i < aw.num_gens(); ++i) {
        AffElem conj = aw.compose(tau, aw.compose(aw.simple_affine(i), taui));
        bool found = false;
        for (int j = 0; j < aw.num_gens(); ++j)
          if (conj == aw.simple_affine(j)) {
            REQUIRE_FALSE(hit[j]);
            hit[j] = true;
            found = true;
          }
        REQUIRE(found);
      }
    }
  }
}

TEST_CASE("enumerate_by_length", "[affweyl]") {
  RootDatum gl2 = RootDatum::GL(2);
  AffWeyl aw(gl2);
  REQUIRE(aw.enumerate_by_length(aw.identity(), 0).size() == 1);
  REQUIRE(aw.enumerate_by_length(aw.identity(), 1).size() == 3);
  REQUIRE(aw.enumerate_by_length(aw.omega_elem(1), 1).size() == 3);
  REQUIRE_THROWS_AS(aw.enumerate_by_length(aw.identity(), 40, 10), CapExceeded);
}

TEST_CASE("double cosets", "[affweyl]") {
  RootDatum gl2 = RootDatum::GL(2), gl3 = RootDatum::GL(3);
  AffWeyl aw2(gl2), aw3(gl3);

  // K = K' = empty: the Iwahori case, min rep is the element itself
  ParahoricType none2 = aw2.parahoric({});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    AffElem x = random_elem(aw2, rng, 4);
    REQUIRE(aw2.double_coset_min_rep(none2, x, none2) == x);
  }
  // w in W^K, K'=K: identity
  ParahoricType K2 = aw2.special_maximal();
  for (const AffElem& x : aw2.parahoric_group(K2))
    REQUIRE(aw2.double_coset_min_rep(K2, x, K2) == aw2.identity());

  // min rep agrees with a full coset scan (GL2 and GL3, small lengths)
  for (AffWeyl* awp : {&aw2, &aw3}) {
    AffWeyl& aw = *awp;
    ParahoricType K = aw.special_maximal();
    auto ball = aw.enumerate_by_length(aw.omega_elem(1), 3);
    for (const AffElem& w : ball) {
      AffElem rep = aw.double_coset_min_rep(K, w, K);
      auto coset = aw.double_coset(K, w, K);
      // canonical order sorts by length first
      REQUIRE(rep == coset.front());
      for (const AffElem& x : coset) REQUIRE(aw.length(rep) <= aw.length(x));
    }
  }

  // equivalence of the two definitions of the double-coset Bruhat order on
  // all GL2/GL3 cosets of length <= 4
  for (AffWeyl* awp : {&aw2, &aw3}) {
    AffWeyl& aw = *awp;
    ParahoricType K = aw.special_maximal();
    AffSet reps;
    for (const AffElem& w : aw.enumerate_by_length(aw.omega_elem(1), 4))
      reps.insert(aw.double_coset_min_rep(K, w, K));
    std::vector<AffElem> rv = aw.sorted(reps);
    for (const AffElem& c1 : rv)
      for (const AffElem& c2 : rv) {
        bool by_minrep = aw.bruhat_leq_double(K, c1, c2);
        bool existential = false;
        for (const AffElem& x : aw.double_coset(K, c1, K)) {
          for (const AffElem& y : aw.double_coset(K, c2, K))
            if (aw.bruhat_leq(x, y)) {
              existential = true;
              break;
            }
          if (existential) break;
        }
        REQUIRE(by_minrep == existential);
      }
  }

  // facet vertices: special maximal fixes only the apex; Iwahori fixes all
  REQUIRE(aw2.facet_vertices(aw2.special_maximal()).size() == 1);
  REQUIRE(aw2.facet_vertices(aw2.parahoric({})).size() == 2);
  REQUIRE_THROWS_AS(aw2.parahoric({0, 1}), std::invalid_argument);

  // special maximal K: the coset order on translation cosets matches the
  // coroot order on dominant coweights (cross-module check)
  for (AffWeyl* awp : {&aw2, &aw3}) {
    AffWeyl& aw = *awp;
    const RootDatum& rd = aw.root_datum();
    ParahoricType K = aw.special_maximal();
    std::vector<Coweight> doms;
    std::vector<Int> cur(rd.dim());
    std::function<void(int, Int)> rec = [&](int i, Int maxv) {
      if (i == rd.dim()) {
        doms.push_back(rd.coweight(cur));
        return;
      }
      for (Int v = 0; v <= maxv; ++v) {
        cur[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 2);
    for (const Coweight& nu : doms)
      for (const Coweight& mu : doms) {
        if (rd.kappa(nu) != rd.kappa(mu)) continue;
        REQUIRE(aw.bruhat_leq_double(K, aw.translation(nu), aw.translation(mu)) ==
                rd.leq_coroot(nu, mu));
      }
  }
}
