// mu-admissible and mu-permissible sets and their parahoric variants.
//
// Adm(mu)  = union of Bruhat lower intervals below the translations t_lambda,
//            lambda in the W_0-orbit of mu (computed by subword closure, never
//            assuming Adm subset Perm).
// Perm(mu) = elements with the Omega-class of mu moving every base-alcove
//            vertex inside the orbit polytope P_mu = Conv(W_0 . mu_ad).
#pragma once

#include "affweyl.hpp"

namespace alcovelab {

struct MuData {
  Coweight mu;                  // dominant representative
  std::vector<Coweight> orbit;  // Lambda = W_0-orbit of mu
  Int kappa = 0;                // common Omega-image of Lambda
  AffElem tau;                  // tau(mu) in Omega
};

inline MuData make_mu_data(const AffWeyl& aw, const Coweight& mu_in) {
  const RootDatum& rd = aw.root_datum();
  MuData m;
  m.mu = rd.dominant_rep(mu_in).first;
  m.orbit = rd.orbit(m.mu);
  m.kappa = rd.kappa(m.mu);
  m.tau = aw.omega_elem(m.kappa);
  return m;
}

// Orbit polytope with the dominance-order membership criterion:
// p in Conv(W_0 mu_ad) iff adj_dominant(p) <= mu_ad rationally.
struct MuPolytope {
  AdjVec mu_ad;  // dominant vertex
};

inline MuPolytope make_mu_polytope(const RootDatum& rd, const Coweight& mu) {
  return MuPolytope{rd.proj_adjoint(rd.dominant_rep(mu).first)};
}

inline bool polytope_contains(const RootDatum& rd, const MuPolytope& P, const AdjVec& p) {
  return rd.adj_dominance_leq(rd.adj_dominant(p), P.mu_ad);
}

// ---------------------------------------------------------------------------

inline std::vector<AffElem> adm(const AffWeyl& aw, const Coweight& mu,
                                std::size_t cap = AffWeyl::kDefaultCap) {
  MuData m = make_mu_data(aw, mu);
  AffSet acc;
  for (const Coweight& lam : m.orbit) {
    AffSet lower = aw.bruhat_lower_set(aw.translation(lam), cap);
    for (const AffElem& x : lower) acc.insert(x);
    if (acc.size() > cap) throw CapExceeded("adm cap exceeded");
  }
  return aw.sorted(acc);
}

// candidate translations for Perm: integral nu with kappa(nu)=kappa(mu) and
// proj_adjoint(nu) in P_mu (0 is a vertex of the base alcove, so the
// translation part of any permissible element is of this form)
inline std::vector<Coweight> perm_translation_candidates(const RootDatum& rd,
                                                         const MuData& m,
                                                         const MuPolytope& P) {
  // bounding box: each coordinate of nu lies within [min, max] of the orbit
  Int lo = m.mu.a[0], hi = m.mu.a[0];
  for (const Coweight& lam : m.orbit)
    for (Int v : lam.a) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  std::vector<Coweight> out;
  std::vector<Int> cur(rd.dim(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == rd.dim()) {
      Coweight nu{cur};
      if (rd.kind() == GroupKind::GSp) {
        Int c = cur.front() + cur.back();
        for (int k = 0; k < rd.dim(); ++k)
          if (cur[k] + cur[rd.dim() - 1 - k] != c) return;
      }
      if (rd.kappa(nu) != m.kappa) return;
      if (!polytope_contains(rd, P, rd.proj_adjoint(nu))) return;
      out.push_back(std::move(nu));
      return;
    }
    for (Int v = lo; v <= hi; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<AffElem> perm(const AffWeyl& aw, const Coweight& mu,
                                 std::size_t cap = AffWeyl::kDefaultCap) {
  const RootDatum& rd = aw.root_datum();
  MuData m = make_mu_data(aw, mu);
  MuPolytope P = make_mu_polytope(rd, m.mu);
  std::vector<AdjVec> verts = aw.base_alcove_vertices();
  std::vector<AffElem> out;
  std::size_t count = 0;
  for (const Coweight& nu : perm_translation_candidates(rd, m, P)) {
    for (const FiniteWeylElem& u : rd.weyl_group()) {
      AffElem w{nu, u};
      bool ok = true;
      for (const AdjVec& v : verts) {
        AdjVec moved = aw.act_on_point(w, v);
        for (int i = 0; i < rd.adj_dim(); ++i) moved[i] -= v[i];
        if (!polytope_contains(rd, P, moved)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(std::move(w));
        if (++count > cap) throw CapExceeded("perm cap exceeded");
      }
    }
  }
  std::sort(out.begin(), out.end(), AffWeyl::CanonicalLess{&aw});
  return out;
}

struct AdmPermReport {
  bool equal = false;
  std::vector<AffElem> adm_only, perm_only;
  std::size_t adm_size = 0, perm_size = 0;
};

inline AdmPermReport compare_adm_perm(const AffWeyl& aw, const Coweight& mu) {
  std::vector<AffElem> A = adm(aw, mu), B = perm(aw, mu);
  AffSet sa(A.begin(), A.end()), sb(B.begin(), B.end());
  AdmPermReport r;
  r.adm_size = A.size();
  r.perm_size = B.size();
  for (const AffElem& x : A)
    if (!sb.count(x)) r.adm_only.push_back(x);
  for (const AffElem& x : B)
    if (!sa.count(x)) r.perm_only.push_back(x);
  r.equal = r.adm_only.empty() && r.perm_only.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Parahoric variants.  Double cosets are represented by their minimal-length
// representatives.

inline std::vector<AffElem> adm_K(const AffWeyl& aw, const Coweight& mu,
                                  const ParahoricType& K,
                                  std::size_t cap = AffWeyl::kDefaultCap) {
  AffSet reps;
  for (const AffElem& x : adm(aw, mu, cap)) reps.insert(aw.double_coset_min_rep(K, x, K));
  return aw.sorted(reps);
}

// the double-coset-order definition evaluated directly: cosets c with
// c <= coset(t_lambda)
// for some lambda, scanning all cosets with a representative of length
// <= max l(t_lambda) in the right Omega-class
inline std::vector<AffElem> adm_K_by_definition(const AffWeyl& aw, const Coweight& mu,
                                                const ParahoricType& K,
                                                std::size_t cap = AffWeyl::kDefaultCap) {
  MuData m = make_mu_data(aw, mu);
  Int maxlen = 0;
  std::vector<AffElem> tcosets;
  for (const Coweight& lam : m.orbit) {
    AffElem t = aw.translation(lam);
    maxlen = std::max(maxlen, aw.length(t));
    tcosets.push_back(aw.double_coset_min_rep(K, t, K));
  }
  AffSet reps;
  for (const AffElem& w : aw.enumerate_by_length(m.tau, maxlen, cap))
    reps.insert(aw.double_coset_min_rep(K, w, K));
  AffSet out;
  for (const AffElem& c : reps)
    for (const AffElem& t : tcosets)
      if (aw.bruhat_leq(c, t)) {
        out.insert(c);
        break;
      }
  return aw.sorted(out);
}

inline std::vector<AffElem> perm_K(const AffWeyl& aw, const Coweight& mu,
                                   const ParahoricType& K,
                                   std::size_t cap = AffWeyl::kDefaultCap) {
  const RootDatum& rd = aw.root_datum();
  MuData m = make_mu_data(aw, mu);
  MuPolytope P = make_mu_polytope(rd, m.mu);
  std::vector<AdjVec> verts = aw.facet_vertices(K);
  if (verts.empty()) throw std::logic_error("facet has no vertices");
  const AdjVec v0 = verts.front();

  // polytope bounding box in adjoint coordinates, for the v0-condition
  Rat lo(0), hi(0);
  {
    bool first = true;
    for (const Coweight& lam : m.orbit) {
      AdjVec x = rd.proj_adjoint(lam);
      for (const Rat& c : x) {
        if (first || c < lo) lo = c;
        if (first || c > hi) hi = c;
        first = false;
      }
    }
  }

  auto vertex_ok = [&](const AffElem& w, const AdjVec& v) {
    AdjVec moved = aw.act_on_point(w, v);
    for (int i = 0; i < rd.adj_dim(); ++i) moved[i] -= v[i];
    return polytope_contains(rd, P, moved);
  };

  // candidates: w = t_nu u with w(v0) - v0 in P_mu; for each u this bounds
  // proj(nu) inside a translate of the polytope box
  AffSet reps;
  std::size_t count = 0;
  for (const FiniteWeylElem& u : rd.weyl_group()) {
    AdjVec uv = rd.adj_act(u, v0);
    // proj(nu)_i must lie in [lo - (uv-v0)_i, hi - (uv-v0)_i]
    std::vector<Int> clo(rd.dim()), chi(rd.dim());
    bool feasible = true;
    if (rd.kind() == GroupKind::GL) {
      for (int i = 0; i < rd.dim(); ++i) {
        // nu_i = proj(nu)_i + mean; mean = kappa/n
        Rat a = lo - (uv[i] - v0[i]) + rat(m.kappa, rd.dim());
        Rat b = hi - (uv[i] - v0[i]) + rat(m.kappa, rd.dim());
        clo[i] = rat_floor(a) + (rat_is_integer(a) ? 0 : 1);
        chi[i] = rat_floor(b);
        if (clo[i] > chi[i]) feasible = false;
      }
    } else {
      for (int i = 0; i < rd.cn(); ++i) {
        Rat a = lo - (uv[i] - v0[i]) + rat(m.kappa, 2);
        Rat b = hi - (uv[i] - v0[i]) + rat(m.kappa, 2);
        clo[i] = rat_floor(a) + (rat_is_integer(a) ? 0 : 1);
        chi[i] = rat_floor(b);
        if (clo[i] > chi[i]) feasible = false;
      }
    }
    if (!feasible) continue;
    std::vector<Int> cur(rd.dim(), 0);
    int freecount = rd.kind() == GroupKind::GL ? rd.dim() : rd.cn();
    std::function<void(int)> rec = [&](int i) {
      if (i == freecount) {
        if (rd.kind() == GroupKind::GSp)
          for (int k = 0; k < rd.cn(); ++k) cur[rd.dim() - 1 - k] = m.kappa - cur[k];
        Coweight nu{cur};
        if (rd.kappa(nu) != m.kappa) return;
        AffElem w{nu, u};
        if (!vertex_ok(w, v0)) return;
        bool ok = true;
        for (std::size_t vi = 1; vi < verts.size(); ++vi)
          if (!vertex_ok(w, verts[vi])) {
            ok = false;
            break;
          }
        if (ok) {
          reps.insert(aw.double_coset_min_rep(K, w, K));
          if (++count > cap) throw CapExceeded("perm_K cap");
        }
        return;
      }
      for (Int v = clo[i]; v <= chi[i]; ++v) {
        cur[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return aw.sorted(reps);
}

}  // namespace alcovelab
