// alcovelab command-line front end.
//
// Subcommands: adm | perm | compare | admK | bgmu | chailength | dimbasic |
// adlv-classify | adlv-grid | oracle-invw | oracle-search | localmodel-count |
// fixtures-verify.  One report per run on standard output; exit 0 on
// success, 2 on a verification mismatch, 1 on usage errors (with a distinct
// diagnostic per failure kind).

#include "alcovelab/fixtures.hpp"
#include "alcovelab/report.hpp"
#include "alcovelab/runconfig.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace alcovelab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

#ifndef ALCOVELAB_SCHEMA_DIR
#define ALCOVELAB_SCHEMA_DIR ""
#endif

std::string schema_dir() {
  if (const char* env = std::getenv("ALCOVELAB_SCHEMA_DIR")) return env;
  return ALCOVELAB_SCHEMA_DIR;
}

// every JSON report is checked against its shipped schema before printing
void emit_json(const Json& j, const std::string& schema_name) {
  std::string dir = schema_dir();
  if (!dir.empty()) {
    std::ifstream in(dir + "/" + schema_name + ".json");
    if (in) {
      Json schema = Json::parse(in);
      std::string why;
      if (!json_matches_schema(j, schema, &why)) {
        std::cerr << "internal error: report fails schema " << schema_name << ": " << why
                  << "\n";
        std::exit(kExitUsage);
      }
    }
  }
  std::cout << j.dump(2) << "\n";
}

std::size_t effective_cap(Int flag_cap) {
  std::size_t cap = (std::size_t)flag_cap;
  if (const char* env = std::getenv("ALCOVELAB_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > cap) cap = (std::size_t)v;  // raise only
  }
  return cap;
}

RootDatum make_root_datum(const RunConfig& cfg) {
  if (cfg.group == "gl") return RootDatum::GL(cfg.n);
  if (cfg.group == "gsp") return RootDatum::GSp(cfg.n);
  throw CLI::ValidationError("--group must be gl or gsp");
}

Coweight parse_mu(const RootDatum& rd, const std::vector<Int>& mu) {
  try {
    return rd.coweight(mu);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string("malformed mu: ") + e.what());
  }
}

RatVec parse_rat_vec(const std::string& s) {
  RatVec out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
    if (!tok.empty()) out.push_back(rat_parse(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Json matrix_to_json(const FqmField& F, const LaurentMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(lp_str(F, m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_set_command(const RunConfig& cfg, bool permissible) {
  RootDatum rd = make_root_datum(cfg);
  AffWeyl aw(rd);
  Coweight mu = parse_mu(rd, cfg.mu);
  std::vector<AffElem> els = permissible ? perm(aw, mu, effective_cap(cfg.cap))
                                         : adm(aw, mu, effective_cap(cfg.cap));
  if (cfg.format == "dot") {
    std::cout << bruhat_set_dot(aw, els);
    return kExitOk;
  }
  Json j;
  j["group"] = cfg.group;
  j["n"] = cfg.n;
  j["mu"] = cfg.mu;
  j["set"] = permissible ? "perm" : "adm";
  j["count"] = els.size();
  j["elements"] = set_to_json(aw, els);
  emit_json(j, "set_report");
  return kExitOk;
}

int run_compare(const RunConfig& cfg) {
  RootDatum rd = make_root_datum(cfg);
  AffWeyl aw(rd);
  AdmPermReport r = compare_adm_perm(aw, parse_mu(rd, cfg.mu));
  Json j;
  j["group"] = cfg.group;
  j["n"] = cfg.n;
  j["mu"] = cfg.mu;
  j["equal"] = r.equal;
  j["adm_count"] = r.adm_size;
  j["perm_count"] = r.perm_size;
  j["adm_only"] = set_to_json(aw, r.adm_only);
  j["perm_only"] = set_to_json(aw, r.perm_only);
  emit_json(j, "compare_report");
  return r.equal ? kExitOk : kExitMismatch;
}

int run_admk(const RunConfig& cfg, bool permissible) {
  RootDatum rd = make_root_datum(cfg);
  AffWeyl aw(rd);
  Coweight mu = parse_mu(rd, cfg.mu);
  ParahoricType K = aw.parahoric(cfg.K);
  std::vector<AffElem> reps =
      permissible ? perm_K(aw, mu, K) : adm_K(aw, mu, K, effective_cap(cfg.cap));
  Json j;
  j["group"] = cfg.group;
  j["n"] = cfg.n;
  j["mu"] = cfg.mu;
  j["K"] = cfg.K;
  j["set"] = permissible ? "perm_K" : "adm_K";
  j["count"] = reps.size();
  j["min_reps"] = set_to_json(aw, reps);
  emit_json(j, "coset_report");
  return kExitOk;
}

int run_bgmu(const RunConfig& cfg) {
  RootDatum rd = make_root_datum(cfg);
  Coweight mu = parse_mu(rd, cfg.mu);
  BGmuPoset P = enumerate_bgmu(rd, mu);
  if (cfg.format == "dot") {
    std::cout << bgmu_dot(P);
    return kExitOk;
  }
  Json j;
  j["group"] = cfg.group;
  j["n"] = cfg.n;
  j["mu"] = cfg.mu;
  Json body = bgmu_to_json(rd, P);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  emit_json(j, "bgmu_report");
  return kExitOk;
}

int run_chailength(const RunConfig& cfg) {
  RootDatum rd = make_root_datum(cfg);
  Coweight mu = parse_mu(rd, cfg.mu);
  NewtonVector nu = parse_rat_vec(cfg.nu), nu2 = parse_rat_vec(cfg.nu2);
  Int len = chai_length(rd, mu, nu, nu2);
  Json j;
  j["group"] = cfg.group;
  j["n"] = cfg.n;
  j["mu"] = cfg.mu;
  j["quantity"] = "chai_length";
  j["value"] = len;
  emit_json(j, "scalar_report");
  return kExitOk;
}

int run_dimbasic(const RunConfig& cfg) {
  RootDatum rd = make_root_datum(cfg);
  Json j;
  j["group"] = cfg.group;
  j["n"] = cfg.n;
  j["mu"] = cfg.mu;
  j["quantity"] = "conj_dim_basic";
  j["value"] = conj_dim_basic(rd, parse_mu(rd, cfg.mu));
  emit_json(j, "scalar_report");
  return kExitOk;
}

int run_adlv_classify(const RunConfig& cfg) {
  RootDatum rd = RootDatum::GL(2);
  AffWeyl aw(rd);
  Coweight mu = parse_mu(rd, cfg.mu);
  RatVec lv = parse_rat_vec(cfg.lambda);
  if (lv.size() != 2) throw CLI::ValidationError("--lambda needs two rationals");
  SlopeClassGL2 lam = make_slope_class_gl2(lv[0], lv[1]);
  AdmClassification cls = adm_union_classification_gl2(aw, mu, lam);
  XmubVerdict xv = x_mu_b_nonempty(rd, mu, sigma_class_of_slope(lam));
  Json j;
  j["mu"] = cfg.mu;
  j["lambda"] = Json::array({rat_str(lam.l1), rat_str(lam.l2)});
  j["reading"] = cfg.reading;
  Json rows = Json::array();
  for (std::size_t i = 0; i < cls.admissible.size(); ++i) {
    Json row;
    row["element"] = elem_to_json(aw, cls.admissible[i]);
    if (cfg.reading == "strict")
      row["nonempty"] = (bool)cls.verdict_strict[i];
    else
      row["nonempty"] = (bool)cls.verdict[i];
    if (cfg.reading == "both") {
      row["nonempty_orbit"] = (bool)cls.verdict[i];
      row["nonempty_strict"] = (bool)cls.verdict_strict[i];
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["union_nonempty"] = !cls.nonempty_subset.empty();
  j["in_bgmu"] = xv.nonempty;
  j["conjectural"] = xv.conjectural;
  emit_json(j, "adlv_classify_report");
  return kExitOk;
}

int run_adlv_grid(const RunConfig& cfg, Int mu_bound) {
  RootDatum rd = RootDatum::GL(2);
  AffWeyl aw(rd);
  bool coherent = true;
  Json rows = Json::array();
  std::vector<std::string> csv;
  csv.push_back("mu1,mu2,lambda1,lambda2,verdicts,union_nonempty,in_bgmu,match");
  for (Int m1 = 0; m1 <= mu_bound; ++m1)
    for (Int m2 = 0; m2 <= m1; ++m2) {
      Coweight mu = rd.coweight({m1, m2});
      for (const SlopeClassGL2& lam : fixtures::slope_grid_gl2(3)) {
        AdmClassification cls = adm_union_classification_gl2(aw, mu, lam);
        bool nonempty = !cls.nonempty_subset.empty();
        bool in_b = x_mu_b_nonempty(rd, mu, sigma_class_of_slope(lam)).nonempty;
        bool match = nonempty == in_b;
        coherent = coherent && match;
        // per-w verdicts in the canonical order of Adm(mu)
        std::string verdicts;
        Json jv = Json::array();
        for (bool v : cls.verdict) {
          verdicts += v ? '1' : '0';
          jv.push_back(v);
        }
        Json row;
        row["mu"] = std::vector<Int>{m1, m2};
        row["lambda"] = Json::array({rat_str(lam.l1), rat_str(lam.l2)});
        row["verdicts"] = std::move(jv);
        row["union_nonempty"] = nonempty;
        row["in_bgmu"] = in_b;
        row["match"] = match;
        rows.push_back(std::move(row));
        csv.push_back(std::to_string(m1) + "," + std::to_string(m2) + "," +
                      rat_str(lam.l1) + "," + rat_str(lam.l2) + "," + verdicts + "," +
                      (nonempty ? "true" : "false") + "," + (in_b ? "true" : "false") +
                      "," + (match ? "true" : "false"));
      }
    }
  if (cfg.format == "csv") {
    for (const std::string& line : csv) std::cout << line << "\n";
  } else {
    Json j;
    j["rows"] = std::move(rows);
    j["coherent"] = coherent;
    emit_json(j, "adlv_grid_report");
  }
  return coherent ? kExitOk : kExitMismatch;
}

int run_oracle_invw(const RunConfig& cfg, const std::string& g_spec,
                    const std::string& h_spec) {
  RootDatum rd = RootDatum::GL(cfg.n);
  AffWeyl aw(rd);
  Oracle ora(aw, cfg.q, cfg.m_max);
  LaurentMatrix g = ora.parse_matrix(g_spec), h = ora.parse_matrix(h_spec);
  Json j;
  j["q"] = cfg.q;
  j["m"] = cfg.m_max;
  j["g"] = g_spec;
  j["h"] = h_spec;
  j["iwahori"] = elem_to_json(aw, ora.inv_iwahori(g, h));
  j["hyperspecial"] = ora.inv_hyperspecial(g, h).a;
  emit_json(j, "oracle_invw_report");
  return kExitOk;
}

int run_oracle_search(const RunConfig& cfg, const std::string& level) {
  RootDatum rd = RootDatum::GL(cfg.n);
  AffWeyl aw(rd);
  Coweight mu = parse_mu(rd, cfg.mu);
  std::vector<AffElem> admissible = adm(aw, mu, effective_cap(cfg.cap));
  Oracle::SearchReport rep = Oracle::search_xmub(
      aw, mu, cfg.b_spec,
      level == "hyperspecial" ? Oracle::Level::Hyperspecial : Oracle::Level::Iwahori,
      cfg.q, cfg.m_max, cfg.depth, admissible);
  Json j;
  j["q"] = cfg.q;
  j["m_max"] = cfg.m_max;
  j["depth"] = cfg.depth;
  j["b_spec"] = cfg.b_spec;
  j["level"] = level;
  j["mu"] = cfg.mu;
  j["found"] = rep.witness.has_value();
  j["exhaustive"] = rep.exhaustive;
  if (rep.witness) {
    const auto& w = *rep.witness;
    Oracle ora(aw, cfg.q, w.m);
    Json wit;
    wit["cell"] = elem_to_json(aw, w.cell);
    Json coords = Json::array();
    for (GFElem c : w.coords) coords.push_back(ora.field().str(c));
    wit["coords"] = std::move(coords);
    wit["m"] = w.m;
    wit["matrix"] = matrix_to_json(ora.field(), w.matrix);
    wit["realized"] = elem_to_json(aw, rep.realized);
    j["witness"] = std::move(wit);
  }
  emit_json(j, "oracle_search_report");
  return kExitOk;
}

int run_localmodel(const RunConfig& cfg, const std::vector<long>& qs) {
  bool gsp = cfg.group == "gsp";
  Json per_q = Json::array();
  // the cell-paradigm prediction applies to the full (Iwahori) chain
  bool full_chain = (int)cfg.chain.size() == cfg.n;
  std::vector<Int> lens;
  if (full_chain && !gsp) {
    RootDatum rd = RootDatum::GL(cfg.n);
    AffWeyl aw(rd);
    std::vector<Int> mu(cfg.n, 0);
    for (int i = 0; i < cfg.r; ++i) mu[i] = 1;
    for (const AffElem& w : adm(aw, rd.coweight(mu))) lens.push_back(aw.length(w));
  }
  bool all_match = true;
  for (long q : qs) {
    ChainConfig cc = make_chain_config(gsp, cfg.n, cfg.r, cfg.chain, q);
    Int count = count_points(cc);
    Json row;
    row["q"] = q;
    row["count"] = count;
    if (!lens.empty()) {
      Int predicted = predicted_count_iwahori(lens, q);
      row["predicted"] = predicted;
      row["match"] = (count == predicted);
      all_match = all_match && count == predicted;
    }
    per_q.push_back(std::move(row));
  }
  Json j;
  j["group"] = cfg.group;
  j["n"] = cfg.n;
  j["r"] = cfg.r;
  j["chain"] = cfg.chain;
  j["per_q"] = std::move(per_q);
  emit_json(j, "localmodel_report");
  return all_match ? kExitOk : kExitMismatch;
}

int run_fixtures() {
  auto results = run_acceptance(std::cerr);
  Json j;
  Json arr = Json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    Json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    arr.push_back(std::move(c));
    all = all && r.passed;
  }
  j["criteria"] = std::move(arr);
  j["all_passed"] = all;
  emit_json(j, "fixtures_report");
  return all ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact parahoric-level combinatorics for GL_n and GSp_2n"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string g_spec = "identity", h_spec = "identity", level = "iwahori";
  std::vector<long> qs{2};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "gl or gsp")->check(CLI::IsMember({"gl", "gsp"}));
    sub->add_option("--n", cfg.n, "matrix size (2n for gsp)");
    sub->add_option("--mu", cfg.mu, "cocharacter, comma separated")->delimiter(',');
    sub->add_option("--format", cfg.format, "json, csv or dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--cap", cfg.cap, "resource cap (ALCOVELAB_CAP may raise it)");
    sub->add_option("--seed", cfg.seed, "seed for randomized property tests");
  };

  CLI::App* c_adm = app.add_subcommand("adm", "mu-admissible set");
  add_common(c_adm);
  CLI::App* c_perm = app.add_subcommand("perm", "mu-permissible set");
  add_common(c_perm);
  CLI::App* c_cmp = app.add_subcommand("compare", "Adm(mu) vs Perm(mu)");
  add_common(c_cmp);
  CLI::App* c_admk = app.add_subcommand("admK", "parahoric double-coset image");
  add_common(c_admk);
  c_admk->add_option("--K", cfg.K, "affine reflection indices")->delimiter(',');
  bool admk_perm = false;
  c_admk->add_flag("--perm", admk_perm, "emit Perm_K instead of Adm_K");
  CLI::App* c_bgmu = app.add_subcommand("bgmu", "the poset B(G,mu)");
  add_common(c_bgmu);
  CLI::App* c_chai = app.add_subcommand("chailength", "Chai length between Newton points");
  add_common(c_chai);
  c_chai->add_option("--nu", cfg.nu, "lower Newton vector, rationals");
  c_chai->add_option("--nu2", cfg.nu2, "upper Newton vector, rationals");
  CLI::App* c_dim = app.add_subcommand("dimbasic", "conjectural basic-locus dimension");
  add_common(c_dim);
  CLI::App* c_cls = app.add_subcommand("adlv-classify", "GL2 nonempty members of Adm(mu)");
  add_common(c_cls);
  c_cls->add_option("--lambda", cfg.lambda, "slope pair, e.g. 1/2,1/2");
  c_cls->add_option("--reading", cfg.reading, "orbit, strict or both")
      ->check(CLI::IsMember({"orbit", "strict", "both"}));
  CLI::App* c_grid = app.add_subcommand("adlv-grid", "GL2 coherence grid");
  add_common(c_grid);
  Int mu_bound = 3;
  c_grid->add_option("--mu-bound", mu_bound, "largest mu_1 in the grid");
  CLI::App* c_invw = app.add_subcommand("oracle-invw", "relative positions of matrices");
  add_common(c_invw);
  c_invw->add_option("--q", cfg.q, "residue field size");
  c_invw->add_option("--m", cfg.m_max, "extension degree");
  c_invw->add_option("--gmat", g_spec, "matrix spec, e.g. diag:t^1,t^0");
  c_invw->add_option("--hmat", h_spec, "matrix spec");
  CLI::App* c_search = app.add_subcommand("oracle-search", "bounded witness search");
  add_common(c_search);
  c_search->add_option("--q", cfg.q, "residue field size");
  c_search->add_option("--m-max", cfg.m_max, "max extension degree");
  c_search->add_option("--depth", cfg.depth, "max cell length scanned");
  c_search->add_option("--b", cfg.b_spec, "sigma-conjugacy representative spec");
  c_search->add_option("--level", level, "iwahori or hyperspecial")
      ->check(CLI::IsMember({"iwahori", "hyperspecial"}));
  CLI::App* c_lm = app.add_subcommand("localmodel-count", "special-fiber point counts");
  add_common(c_lm);
  c_lm->add_option("--r", cfg.r, "subspace rank");
  c_lm->add_option("--chain", cfg.chain, "lattice chain indices")->delimiter(',');
  c_lm->add_option("--q", qs, "field sizes")->delimiter(',');
  CLI::App* c_fix = app.add_subcommand("fixtures-verify", "run the acceptance suite");
  (void)c_fix;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // normalize every usage failure to a single exit code; --help stays 0
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(c_adm)) return run_set_command(cfg, false);
    if (app.got_subcommand(c_perm)) return run_set_command(cfg, true);
    if (app.got_subcommand(c_cmp)) return run_compare(cfg);
    if (app.got_subcommand(c_admk)) return run_admk(cfg, admk_perm);
    if (app.got_subcommand(c_bgmu)) return run_bgmu(cfg);
    if (app.got_subcommand(c_chai)) return run_chailength(cfg);
    if (app.got_subcommand(c_dim)) return run_dimbasic(cfg);
    if (app.got_subcommand(c_cls)) return run_adlv_classify(cfg);
    if (app.got_subcommand(c_grid)) return run_adlv_grid(cfg, mu_bound);
    if (app.got_subcommand(c_invw)) return run_oracle_invw(cfg, g_spec, h_spec);
    if (app.got_subcommand(c_search)) return run_oracle_search(cfg, level);
    if (app.got_subcommand(c_lm)) return run_localmodel(cfg, qs);
    if (app.got_subcommand(c_fix)) return run_fixtures();
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LaurentOverflow& e) {
    std::cerr << "valuation window exhausted: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleError& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
