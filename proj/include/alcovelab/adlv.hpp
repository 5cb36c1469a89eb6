// Closed-form nonemptiness predicates for (unions of) affine Deligne-Lusztig
// varieties: the GL_2 Iwahori case list and the kappa / translation / B(G,mu)
// conditions for X(mu,b)_K.
//
// Everything here is normalized to inv(g, b sigma(g)); the finite-field
// oracle pins the same convention.
#pragma once

#include "admperm.hpp"
#include "kottwitz.hpp"

namespace alcovelab {

// lambda_1 >= lambda_2, lambda_1+lambda_2 integral, and integral entries
// unless lambda_1 = lambda_2 (then half-integral allowed)
struct SlopeClassGL2 {
  Rat l1, l2;
};

inline SlopeClassGL2 make_slope_class_gl2(const Rat& l1, const Rat& l2) {
  if (l1 < l2) throw std::invalid_argument("slope class must be weakly decreasing");
  if (!rat_is_integer(l1 + l2)) throw std::invalid_argument("slope sum must be integral");
  if (l1 != l2 && (!rat_is_integer(l1) || !rat_is_integer(l2)))
    throw std::invalid_argument("hyperbolic slopes must be integral");
  return SlopeClassGL2{l1, l2};
}

inline SigmaClass sigma_class_of_slope(const SlopeClassGL2& s) {
  SigmaClass b;
  b.newton = {s.l1, s.l2};
  b.kappa = rat_floor(s.l1 + s.l2);
  b.basic = (s.l1 == s.l2);
  return b;
}

// Which reading of the hyperbolic translation clause is applied.  The orbit
// reading (both t_{(l1,l2)} and t_{(l2,l1)}) is the one the matrix oracle
// confirms and is the shipped default; the strict reading keeps only the
// dominant translation.  Diagnostic callers can evaluate both.
enum class HyperbolicReading { Orbit, Strict };

inline bool xw_nonempty_gl2(const AffWeyl& aw, const SlopeClassGL2& lam,
                            const AffElem& w,
                            HyperbolicReading reading = HyperbolicReading::Orbit) {
  const RootDatum& rd = aw.root_datum();
  if (rd.kind() != GroupKind::GL || rd.dim() != 2)
    throw std::invalid_argument("xw_nonempty_gl2 is GL_2 only");
  Int sum = rat_floor(lam.l1 + lam.l2);
  if (aw.kappa(w) != sum) return false;
  Int len = aw.length(w);
  if (lam.l1 == lam.l2) {
    if (sum % 2 != 0) return len % 2 == 0;                       // basic, odd sum
    return aw.wa_part(w) == aw.identity() || len % 2 == 1;       // basic, even sum
  }
  // hyperbolic: integral slopes
  Int a = rat_floor(lam.l1), b = rat_floor(lam.l2);
  AffElem t_dom = aw.translation(rd.coweight({a, b}));
  AffElem t_anti = aw.translation(rd.coweight({b, a}));
  bool is_translation =
      (reading == HyperbolicReading::Orbit) ? (w == t_dom || w == t_anti) : (w == t_dom);
  if (is_translation) return true;
  Int d = a - b;  // = l(t_dom)
  return len > d && ((len - (d + 1)) % 2 == 0);
}

// necessary condition: kappa(b) = mu^natural
inline bool kappa_necessary(const RootDatum& rd, const Coweight& mu, const SigmaClass& b) {
  return b.kappa == mu_natural(rd, mu);
}

// necessary condition for an unramified torus representative with ord = nu_b:
// t_{nu_b} <= w in the Bruhat order
inline bool translation_leq_necessary(const AffWeyl& aw, const Coweight& nu_b,
                                      const AffElem& w) {
  return aw.bruhat_leq(aw.translation(nu_b), w);
}

struct XmubVerdict {
  bool nonempty = false;
  bool conjectural = false;  // mu not minuscule: conjectural, not proved
};

// X(mu,b)_K nonemptiness via membership of (newton, kappa) in B(G,mu);
// a theorem for minuscule mu on GL_n / GSp_2n, conjectural otherwise.
inline XmubVerdict x_mu_b_nonempty(const RootDatum& rd, const Coweight& mu,
                                   const SigmaClass& b) {
  XmubVerdict v;
  v.conjectural = !rd.is_minuscule(mu);
  for (const SigmaClass& c : enumerate_bgmu_elements(rd, mu))
    if (c.newton == b.newton && c.kappa == b.kappa) {
      v.nonempty = true;
      break;
    }
  return v;
}

struct AdmClassification {
  std::vector<AffElem> admissible;      // Adm(mu), canonical order
  std::vector<bool> verdict;            // per element, chosen reading
  std::vector<bool> verdict_strict;     // diagnostic: strict reading
  std::vector<AffElem> nonempty_subset; // elements with true verdict
};

inline AdmClassification adm_union_classification_gl2(const AffWeyl& aw,
                                                      const Coweight& mu,
                                                      const SlopeClassGL2& lam) {
  AdmClassification r;
  r.admissible = adm(aw, mu);
  for (const AffElem& w : r.admissible) {
    bool v = xw_nonempty_gl2(aw, lam, w, HyperbolicReading::Orbit);
    r.verdict.push_back(v);
    r.verdict_strict.push_back(xw_nonempty_gl2(aw, lam, w, HyperbolicReading::Strict));
    if (v) r.nonempty_subset.push_back(w);
  }
  return r;
}

}  // namespace alcovelab
