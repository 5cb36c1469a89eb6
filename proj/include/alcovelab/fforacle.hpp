// Brute-force ground truth over F_{q^m}((t)): Iwahori and hyperspecial
// relative positions of invertible Laurent matrices, Schubert-cell point
// enumeration along reduced words, and bounded witness searches for X_w(b)
// and X(mu,b)_K.
//
// The Iwahori is the preimage of the lower-triangular matrices mod t: with
// the dictionary t_nu <-> diag(t^nu) and the base alcove with apex 0 on the
// dominant side, these are exactly the affine root subgroups nonnegative on
// that alcove (u_i(c) = 1 + c E_{i+1,i} for the finite walls and
// u_0(c) = 1 + c t E_{1,n} for the wall theta = 1), so cells along reduced
// words have the right dimensions and inv(e, cell point of w) = w.
//
// Witness searches scan cells with kappa(g) in {0, ..., n-1}: scaling g by a
// central power t^c leaves inv(g, b sigma(g)) unchanged and moves kappa(g)
// by n*c, so these classes cover all of G(L)/I up to central twist.  The
// exhaustive flag refers to these stated bounds (q, m_max, depth).
#pragma once

#include "affweyl.hpp"
#include "laurent.hpp"

#include <map>
#include <optional>

namespace alcovelab {

struct OracleError : std::runtime_error {
  explicit OracleError(const std::string& m) : std::runtime_error(m) {}
};

// monomial matrix of an extended affine Weyl element: w e_j = t^{nu_{u(j)}} e_{u(j)}
inline LaurentMatrix lm_of_weyl(const AffElem& w) {
  int n = (int)w.w.img.size();
  LaurentMatrix m = lm_zero(n);
  for (int j = 0; j < n; ++j) {
    int i = w.w.img[j];
    m.at(i, j) = lp_monomial(1, (int)w.t.a[i]);
  }
  return m;
}

class Oracle {
 public:
  Oracle(const AffWeyl& aw, long q, int m, ValuationWindow window = {})
      : aw_(aw), field_(q, m), window_(window) {
    if (aw.root_datum().kind() != GroupKind::GL)
      throw std::invalid_argument("the matrix oracle covers GL_n only");
    n_ = aw.root_datum().dim();
    if (n_ > 4) throw std::invalid_argument("oracle is desk-scale (n <= 4)");
  }

  const FqmField& field() const { return field_; }
  const AffWeyl& weyl() const { return aw_; }
  int n() const { return n_; }

  // ----- relative positions -------------------------------------------------

  // the unique w with g^{-1} h in I w-dot I
  AffElem inv_iwahori(const LaurentMatrix& g, const LaurentMatrix& h) const {
    auto [M, shift] = left_quotient(g, h);
    return pivot_reduce(M, shift);
  }

  // elementary divisors of g^{-1} h as a dominant coweight (Smith form over
  // F[[t]]; exact, no precision loss)
  Coweight inv_hyperspecial(const LaurentMatrix& g, const LaurentMatrix& h) const {
    auto [M, shift] = left_quotient(g, h);
    std::vector<Int> exps = smith_exponents(M);
    for (Int& v : exps) v -= shift;
    std::sort(exps.begin(), exps.end(), std::greater<Int>());
    return aw_.root_datum().coweight(exps);
  }

  LaurentMatrix frobenius_twist(const LaurentMatrix& g, const LaurentMatrix& b) const {
    return lm_mul(field_, b, lm_frobenius(field_, g));
  }

  // ----- Schubert cells -------------------------------------------------------

  // one-parameter subgroup of the i-th simple affine root (nonnegative on
  // the base alcove): u_i(c) = 1 + c E_{i+1,i} for i >= 1, u_0(c) = 1 + c t E_{1,n}
  LaurentMatrix cell_factor(int i, GFElem c) const {
    LaurentMatrix m = lm_identity(n_);
    if (i == 0)
      m.at(0, n_ - 1) = lp_monomial(c, 1);
    else
      m.at(i, i - 1) = lp_monomial(c, 0);
    return m;
  }

  // representative point of the cell of w with the given coordinates along
  // the deterministic reduced word: g = prod u_{i_j}(c_j) s_{i_j}-dot * tau-dot
  LaurentMatrix cell_point(const AffElem& w, const std::vector<GFElem>& coords) const {
    AffWeyl::ReducedWord rw = aw_.reduced_word(w);
    if (coords.size() != rw.letters.size())
      throw std::invalid_argument("cell coordinates length mismatch");
    LaurentMatrix g = lm_identity(n_);
    for (std::size_t j = 0; j < rw.letters.size(); ++j) {
      int i = rw.letters[j];
      g = lm_mul(field_, g, cell_factor(i, coords[j]));
      g = lm_mul(field_, g, lm_of_weyl(aw_.simple_affine(i)));
    }
    g = lm_mul(field_, g, lm_of_weyl(rw.tau));
    lm_check_window(g, window_);
    return g;
  }

  // ----- witness search ---------------------------------------------------------

  struct CellPoint {
    AffElem cell;               // the cell the witness lives in
    std::vector<GFElem> coords; // coordinates along the reduced word
    int m = 1;                  // witness found over F_{q^m}
    LaurentMatrix matrix;
  };

  struct ScanResult {
    std::unordered_map<AffElem, CellPoint, AffElemHash> found;  // w -> first witness
    bool exhaustive = true;
    std::size_t points_scanned = 0;
  };

  // One pass over all cell points of length <= depth with kappa(cell) in
  // {0,1} over F_{q^m'}, m' <= m_max, bucketing by inv(g, b sigma(g)).
  // Deterministic: m ascending, cells in canonical order, coordinates in
  // lexicographic order; first witness per w wins.
  static ScanResult scan(const AffWeyl& aw, long q, int m_max, Int depth,
                         const std::string& b_spec,
                         std::size_t point_cap = 2000000,
                         ValuationWindow window = {}) {
    ScanResult res;
    for (int m = 1; m <= m_max; ++m) {
      Oracle ora(aw, q, m, window);
      LaurentMatrix b = ora.parse_matrix(b_spec);
      std::vector<AffElem> cells;
      for (Int k = 0; k < aw.root_datum().dim(); ++k) {
        auto part = aw.enumerate_by_length(aw.omega_elem(k), depth);
        cells.insert(cells.end(), part.begin(), part.end());
      }
      for (const AffElem& cell : cells) {
        std::size_t ncoords = aw.reduced_word(cell).letters.size();
        std::vector<GFElem> coords(ncoords, 0);
        bool done = false;
        while (!done) {
          if (++res.points_scanned > point_cap)
            throw OracleError("oracle scan point cap exceeded");
          LaurentMatrix g = ora.cell_point(cell, coords);
          AffElem w = ora.inv_iwahori(g, ora.frobenius_twist(g, b));
          if (!res.found.count(w))
            res.found.emplace(w, CellPoint{cell, coords, m, g});
          // lexicographic increment
          done = true;
          for (std::size_t j = coords.size(); j-- > 0;) {
            if (coords[j] + 1 < ora.field_.size()) {
              ++coords[j];
              for (std::size_t k2 = j + 1; k2 < coords.size(); ++k2) coords[k2] = 0;
              done = false;
              break;
            }
          }
          if (coords.empty()) done = true;
        }
      }
    }
    return res;
  }

  struct SearchReport {
    std::optional<CellPoint> witness;
    AffElem realized;          // the admissible w the witness realizes (if any)
    bool exhaustive = true;
  };

  static SearchReport search_xw(const AffWeyl& aw, const AffElem& w,
                                const std::string& b_spec, long q, int m_max,
                                Int depth) {
    ScanResult sc = scan(aw, q, m_max, depth, b_spec);
    SearchReport r;
    r.exhaustive = sc.exhaustive;
    auto it = sc.found.find(w);
    if (it != sc.found.end()) {
      r.witness = it->second;
      r.realized = w;
    }
    return r;
  }

  enum class Level { Iwahori, Hyperspecial };

  // search for g with inv(g, b sigma(g)) in Adm(mu) (Iwahori) or with
  // hyperspecial invariant equal to the dominant mu
  static SearchReport search_xmub(const AffWeyl& aw, const Coweight& mu,
                                  const std::string& b_spec, Level level, long q,
                                  int m_max, Int depth,
                                  const std::vector<AffElem>& admissible) {
    SearchReport r;
    if (level == Level::Iwahori) {
      ScanResult sc = scan(aw, q, m_max, depth, b_spec);
      // deterministic: first admissible w in canonical order with a witness
      for (const AffElem& w : admissible) {
        auto it = sc.found.find(w);
        if (it != sc.found.end()) {
          r.witness = it->second;
          r.realized = w;
          return r;
        }
      }
      return r;
    }
    // hyperspecial: scan the same bounded cell set, test the Smith invariant
    Coweight mud = aw.root_datum().dominant_rep(mu).first;
    for (int m = 1; m <= m_max; ++m) {
      Oracle ora(aw, q, m);
      LaurentMatrix b = ora.parse_matrix(b_spec);
      std::vector<AffElem> cells;
      for (Int k = 0; k < aw.root_datum().dim(); ++k) {
        auto part = aw.enumerate_by_length(aw.omega_elem(k), depth);
        cells.insert(cells.end(), part.begin(), part.end());
      }
      for (const AffElem& cell : cells) {
        std::size_t ncoords = aw.reduced_word(cell).letters.size();
        std::vector<GFElem> coords(ncoords, 0);
        while (true) {
          LaurentMatrix g = ora.cell_point(cell, coords);
          Coweight invh = ora.inv_hyperspecial(g, ora.frobenius_twist(g, b));
          if (invh == mud) {
            r.witness = CellPoint{cell, coords, m, g};
            r.realized = aw.translation(mud);
            return r;
          }
          bool bumped = false;
          for (std::size_t j = coords.size(); j-- > 0;) {
            if (coords[j] + 1 < ora.field_.size()) {
              ++coords[j];
              for (std::size_t k2 = j + 1; k2 < coords.size(); ++k2) coords[k2] = 0;
              bumped = true;
              break;
            }
          }
          if (!bumped) break;
        }
      }
    }
    return r;
  }

  // Phi(g) = b sigma(g) (r = 1); a witness must stay a witness, with the
  // same invariant (sigma acts trivially on W~ for split data)
  bool verify_phi_stability(const LaurentMatrix& b, const LaurentMatrix& g,
                            const AffSet& admissible) const {
    LaurentMatrix phi = frobenius_twist(g, b);
    AffElem w0 = inv_iwahori(g, frobenius_twist(g, b));
    AffElem w1 = inv_iwahori(phi, frobenius_twist(phi, b));
    return w0 == w1 && (admissible.empty() || admissible.count(w1) > 0);
  }

  // ----- b-specification grammar --------------------------------------------------
  // "diag:t^1,t^0", "antidiag:t^1,1", "identity"; entries are Laurent
  // monomials "t^k" | "t" | "1" | "0"

  LaurentMatrix parse_matrix(const std::string& spec) const {
    if (spec == "identity") return lm_identity(n_);
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad b-spec: " + spec);
    std::string kind = spec.substr(0, colon);
    std::vector<LPoly> entries;
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      std::string tok =
          rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      entries.push_back(parse_monomial(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if ((int)entries.size() != n_)
      throw std::invalid_argument("b-spec entry count mismatch");
    LaurentMatrix m = lm_zero(n_);
    for (int i = 0; i < n_; ++i) {
      if (kind == "diag")
        m.at(i, i) = entries[i];
      else if (kind == "antidiag")
        m.at(i, n_ - 1 - i) = entries[i];
      else
        throw std::invalid_argument("bad b-spec kind: " + kind);
    }
    return m;
  }

  LPoly parse_monomial(const std::string& tok) const {
    if (tok == "0") return lp_zero();
    if (tok == "1") return lp_monomial(1, 0);
    if (tok == "t") return lp_monomial(1, 1);
    if (tok.rfind("t^", 0) == 0) {
      int e = std::stoi(tok.substr(2));
      return lp_monomial(1, e);
    }
    throw std::invalid_argument("bad Laurent monomial: " + tok);
  }

 private:
  const AffWeyl& aw_;
  FqmField field_;
  ValuationWindow window_;
  int n_ = 0;

  // (adj(g) * h, val det g): a unit-series multiple of g^{-1} h up to the
  // central shift t^{val det g}, which stays in the same Iwahori (and
  // hyperspecial) double coset after the shift is subtracted
  std::pair<LaurentMatrix, Int> left_quotient(const LaurentMatrix& g,
                                              const LaurentMatrix& h) const {
    LPoly d = lm_det(field_, g);
    if (d.is_zero()) throw OracleError("non-invertible matrix");
    if (lm_det(field_, h).is_zero()) throw OracleError("non-invertible matrix");
    LaurentMatrix M = lm_mul(field_, lm_adjugate(field_, g), h);
    lm_check_window(M, window_);
    return {std::move(M), d.val()};
  }

  // Coefficients above T = val(det M) - (n-1)*minval(M) never influence the
  // double coset: truncating there perturbs M by M(1 + M^{-1}E) with
  // val(M^{-1}E) >= 1, a factor inside the Iwahori.  Both invariants (the
  // determinant valuation and the entry-valuation floor) are preserved by
  // every reduction step, so the same bound stays sound throughout.
  int coset_truncation_bound(const LaurentMatrix& M) const {
    int vmin = 0;
    bool first = true;
    for (const LPoly& p : M.e) {
      if (p.is_zero()) continue;
      if (first || p.val() < vmin) vmin = p.val();
      first = false;
    }
    LPoly d = lm_det(field_, M);
    if (d.is_zero()) throw OracleError("singular matrix");
    return d.val() - (M.n - 1) * vmin + 2;
  }

  // reduce to a monomial matrix by Iwahori row/column operations; the pivot
  // is the top-most, then right-most entry of minimal valuation, which makes
  // every clearing coefficient land in O (below / to the left) or tO
  // (above / to the right) as the lower Iwahori requires
  AffElem pivot_reduce(LaurentMatrix M, Int shift) const {
    const FqmField& F = field_;
    int n = M.n;
    const int trunc = coset_truncation_bound(M);
    std::vector<bool> row_done(n, false), col_done(n, false);
    std::vector<int> row_of(n, -1);
    std::vector<Int> exp_of(n, 0);
    for (int step = 0; step < n; ++step) {
      int pr = -1, pc = -1, pv = 0;
      for (int i = 0; i < n; ++i) {
        if (row_done[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (col_done[j] || M.at(i, j).is_zero()) continue;
          int v = M.at(i, j).val();
          if (pr < 0 || v < pv || (v == pv && (i < pr || (i == pr && j > pc)))) {
            pr = i;
            pc = j;
            pv = v;
          }
        }
      }
      if (pr < 0) throw OracleError("singular matrix in Iwahori reduction");
      LPoly upiv = lp_shift(M.at(pr, pc), -pv);  // unit polynomial
      // clear column pc
      for (int i = 0; i < n; ++i) {
        if (i == pr || M.at(i, pc).is_zero()) continue;
        LPoly coeff = lp_shift(M.at(i, pc), -pv);
        for (int j = 0; j < n; ++j) {
          LPoly a = lp_mul(F, upiv, M.at(i, j));
          LPoly b = lp_mul(F, coeff, M.at(pr, j));
          M.at(i, j) = lp_sub(F, a, b);
        }
      }
      // clear row pr (column pc now holds only the pivot)
      for (int j = 0; j < n; ++j) {
        if (j == pc || M.at(pr, j).is_zero()) continue;
        LPoly coeff = lp_shift(M.at(pr, j), -pv);
        for (int i = 0; i < n; ++i) {
          LPoly a = lp_mul(F, upiv, M.at(i, j));
          LPoly b = lp_mul(F, coeff, M.at(i, pc));
          M.at(i, j) = lp_sub(F, a, b);
        }
      }
      for (LPoly& p : M.e) p = lp_truncate_above(p, trunc);
      lm_check_window(M, window_);
      row_done[pr] = true;
      col_done[pc] = true;
      row_of[pc] = pr;
      exp_of[pc] = pv;
    }
    FiniteWeylElem u;
    u.img.assign(n, 0);
    Coweight t{std::vector<Int>(n, 0)};
    for (int c = 0; c < n; ++c) {
      u.img[c] = row_of[c];
      t.a[row_of[c]] = exp_of[c] - shift;
    }
    return AffElem{std::move(t), std::move(u)};
  }

  // Smith normal form exponents over F[[t]] (hyperspecial: all unimodular
  // row/column operations allowed)
  std::vector<Int> smith_exponents(LaurentMatrix M) const {
    const FqmField& F = field_;
    int n = M.n;
    const int trunc = coset_truncation_bound(M);
    std::vector<bool> row_done(n, false), col_done(n, false);
    std::vector<Int> exps;
    for (int step = 0; step < n; ++step) {
      int pr = -1, pc = -1, pv = 0;
      for (int i = 0; i < n; ++i) {
        if (row_done[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (col_done[j] || M.at(i, j).is_zero()) continue;
          int v = M.at(i, j).val();
          if (pr < 0 || v < pv) {
            pr = i;
            pc = j;
            pv = v;
          }
        }
      }
      if (pr < 0) throw OracleError("singular matrix in Smith reduction");
      LPoly upiv = lp_shift(M.at(pr, pc), -pv);
      for (int i = 0; i < n; ++i) {
        if (i == pr || M.at(i, pc).is_zero()) continue;
        LPoly coeff = lp_shift(M.at(i, pc), -pv);
        for (int j = 0; j < n; ++j)
          M.at(i, j) = lp_sub(F, lp_mul(F, upiv, M.at(i, j)),
                              lp_mul(F, coeff, M.at(pr, j)));
      }
      for (int j = 0; j < n; ++j) {
        if (j == pc || M.at(pr, j).is_zero()) continue;
        LPoly coeff = lp_shift(M.at(pr, j), -pv);
        for (int i = 0; i < n; ++i)
          M.at(i, j) = lp_sub(F, lp_mul(F, upiv, M.at(i, j)),
                              lp_mul(F, coeff, M.at(i, pc)));
      }
      for (LPoly& p : M.e) p = lp_truncate_above(p, trunc);
      lm_check_window(M, window_);
      row_done[pr] = true;
      col_done[pc] = true;
      exps.push_back(pv);
    }
    return exps;
  }
};

}  // namespace alcovelab
