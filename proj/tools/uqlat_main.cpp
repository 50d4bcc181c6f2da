// uqlat: exact computations in quantized enveloping algebras, their
// deformation lattices and the quantized coordinate ring of SL2.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "uqlat/io.hpp"
#include "uqlat/parse.hpp"
#include "uqlat/verify.hpp"

using namespace uqlat;

namespace {

struct GlobalOpts {
  SessionConfig cfg;
  std::string word_override;  // comma-separated letters
  std::string config_path;
};

void load_config_file(GlobalOpts& g) {
  if (g.config_path.empty()) return;
  std::ifstream in(g.config_path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + g.config_path);
  nlohmann::json doc;
  in >> doc;
  if (doc.contains("p")) g.cfg.p = doc["p"].get<unsigned long>();
  if (doc.contains("type")) g.cfg.lie_type = doc["type"].get<std::string>().at(0);
  if (doc.contains("rank")) g.cfg.rank = doc["rank"].get<int>();
  if (doc.contains("height_cap")) g.cfg.height_cap = doc["height_cap"].get<int>();
  if (doc.contains("depth_cap")) g.cfg.depth_cap = doc["depth_cap"].get<int>();
  if (doc.contains("seed")) g.cfg.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("format")) g.cfg.format = doc["format"].get<std::string>();
  if (doc.contains("word")) g.word_override = doc["word"].get<std::string>();
  if (doc.contains("suites")) g.cfg.suites = doc["suites"].get<std::vector<std::string>>();
}

std::optional<ReducedWord> parse_word_opt(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<int> letters;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) letters.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return ReducedWord(letters);
}

CtxPtr build_ctx(const GlobalOpts& g) {
  SessionConfig cfg = g.cfg;
  cfg.word_override = parse_word_opt(g.word_override);
  return make_context(cfg.lie_type, cfg.rank, cfg);
}

std::vector<int> parse_coords(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

void print_payload(const GlobalOpts& g, const nlohmann::json& j, const Table* table = nullptr) {
  if (g.cfg.format == "json" || table == nullptr) {
    std::cout << emit_json(j);
  } else if (g.cfg.format == "csv") {
    std::cout << table_csv(*table);
  } else {
    std::cout << table_text(*table);
  }
}

Table element_table(const AlgebraElement& x) {
  Table t;
  t.header = {"r", "lambda", "s", "coeff"};
  for (const auto& [m, c] : x.terms) {
    auto vec_str = [](const std::vector<int>& v) {
      std::string s = "[";
      for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
      return s + "]";
    };
    t.rows.push_back({vec_str(m.r), m.lam.str(), vec_str(m.s), c.str()});
  }
  return t;
}

int emit_reports(const GlobalOpts& g, const std::vector<Report>& reports) {
  bool ok = true;
  if (g.cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const Report& r : reports) {
      arr.push_back(report_json(r));
      if (!r.passed()) ok = false;
    }
    std::cout << emit_json(arr);
  } else if (g.cfg.format == "csv") {
    for (const Report& r : reports) {
      std::cout << table_csv(report_table(r));
      if (!r.passed()) ok = false;
    }
  } else {
    for (const Report& r : reports) {
      std::cout << report_text(r);
      if (!r.passed()) ok = false;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact U_q(g) / O_q(SL2) computations over a p-adic coefficient field"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--prime,-p", g.cfg.p, "residue characteristic (odd prime)")
      ->capture_default_str();
  app.add_option("--type,-t", g.cfg.lie_type, "Lie type A..G")->capture_default_str();
  app.add_option("--rank,-r", g.cfg.rank, "rank (<= 4)")->capture_default_str();
  app.add_option("--word", g.word_override, "reduced-word override, e.g. 2,1,2");
  app.add_option("--height-cap", g.cfg.height_cap, "working height cap")->capture_default_str();
  app.add_option("--depth-cap", g.cfg.depth_cap, "Verma search depth cap")->capture_default_str();
  app.add_option("--seed", g.cfg.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--format,-f", g.cfg.format, "output format: table|json|csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--config", g.config_path, "JSON config file (flags take precedence)");

  // rootdata
  auto* sc_rootdata = app.add_subcommand("rootdata", "print Cartan data and the beta-sequence");

  // normal-form
  std::string expr;
  auto* sc_nf = app.add_subcommand("normal-form", "PBW normal form of an expression");
  sc_nf->add_option("expr", expr, "expression, e.g. \"E1*F1 - F1*E1\"")->required();

  // norm
  long level = 1;
  auto* sc_norm = app.add_subcommand("norm", "gauge norm and lattice membership");
  sc_norm->add_option("-n,--level", level, "deformation level n (>= m)")->required();
  sc_norm->add_option("expr", expr, "expression")->required();

  // braid
  std::string braid_word;
  bool braid_check = false, braid_rv = false;
  auto* sc_braid = app.add_subcommand("braid", "apply T_w, or verify braid relations");
  sc_braid->add_option("-w,--braid-word", braid_word, "braid word, e.g. 1,2,1");
  sc_braid->add_flag("--check", braid_check, "verify the braid relations");
  sc_braid->add_flag("--root-vectors", braid_rv, "print the root-vector word expansions");
  sc_braid->add_option("expr", expr, "expression");

  // verma
  std::string lambda_str;
  int depth = 6;
  auto* sc_verma = app.add_subcommand("verma", "weight multiplicities and maximal vectors");
  sc_verma->add_option("--lambda", lambda_str, "highest weight coordinates, e.g. 1,0")->required();
  sc_verma->add_option("--depth", depth, "depth bound")->capture_default_str();

  // blocks
  int grid = 3;
  auto* sc_blocks = app.add_subcommand("blocks", "dot-orbit partition of a weight grid");
  sc_blocks->add_option("--grid", grid, "coordinate bound")->capture_default_str();

  // casimir
  long nmax = -1;
  int degmax = 3;
  auto* sc_casimir = app.add_subcommand("casimir", "sl2 Casimir and center checks");
  sc_casimir->add_option("--nmax", nmax, "largest deformation level (default 2m+2)");
  sc_casimir->add_option("--degmax", degmax, "central polynomial degree bound")
      ->capture_default_str();

  // oq
  auto* sc_oq = app.add_subcommand("oq", "quantized coordinate ring of SL2");
  std::string oq_action;
  sc_oq->add_option("action", oq_action, "normal-form | norm | hopf")->required();
  sc_oq->add_option("expr", expr, "expression over a b c d");
  long oq_level = 1;
  sc_oq->add_option("-n,--level", oq_level, "deformation level for norms")->capture_default_str();

  // verify
  std::string suites_str;
  auto* sc_verify = app.add_subcommand("verify", "run verification suites");
  sc_verify->add_option("--suite", suites_str, "comma-separated suite names (default: all)");

  CLI11_PARSE(app, argc, argv);

  try {
    load_config_file(g);

    if (*sc_rootdata) {
      CtxPtr ctx = build_ctx(g);
      print_payload(g, context_json(*ctx));
      return 0;
    }
    if (*sc_nf) {
      CtxPtr ctx = build_ctx(g);
      AlgebraElement x = word_to_pbw(ctx, parse_uq_expression(expr, ctx->rs, ctx->spec));
      Table t = element_table(x);
      print_payload(g, element_json(x), &t);
      return 0;
    }
    if (*sc_norm) {
      CtxPtr ctx = build_ctx(g);
      AlgebraElement x = word_to_pbw(ctx, parse_uq_expression(expr, ctx->rs, ctx->spec));
      NormValue nv = log_norm(x, level);
      nlohmann::json j{{"schema", kSchemaVersion},
                       {"kind", "norm"},
                       {"n", level},
                       {"m_threshold", m_threshold(*ctx)},
                       {"log_norm", nv.zero ? nlohmann::json("-inf") : nlohmann::json(nv.log_p)},
                       {"in_lattice", in_lattice(x, level)}};
      print_payload(g, j);
      return 0;
    }
    if (*sc_braid) {
      CtxPtr ctx = build_ctx(g);
      if (braid_check) return emit_reports(g, {check_braid_relations(ctx)});
      if (braid_rv) {
        nlohmann::json arr = nlohmann::json::array();
        for (int j = 1; j <= ctx->N; ++j)
          arr.push_back(nlohmann::json{{"j", j},
                                       {"beta", nlohmann::json(ctx->beta[j - 1].a)},
                                       {"height", ctx->beta_ht[j - 1]},
                                       {"expansion", word_element_json(ctx->root_vector_words(j))}});
        print_payload(g, nlohmann::json{{"schema", kSchemaVersion},
                                        {"kind", "root_vectors"},
                                        {"type", ctx->rs.type_str()},
                                        {"w0", nlohmann::json(ctx->w0.letters)},
                                        {"vectors", arr}});
        return 0;
      }
      if (expr.empty() || braid_word.empty())
        throw CLI::ValidationError("braid", "need -w and an expression (or --check/--root-vectors)");
      AlgebraElement x = word_to_pbw(ctx, parse_uq_expression(expr, ctx->rs, ctx->spec));
      AlgebraElement y = braid_Tw(x, ReducedWord(parse_coords(braid_word)));
      Table t = element_table(y);
      print_payload(g, element_json(y), &t);
      return 0;
    }
    if (*sc_verma) {
      CtxPtr ctx = build_ctx(g);
      Weight lam(parse_coords(lambda_str));
      if (lam.rank() != ctx->rs.rank)
        throw CLI::ValidationError("--lambda", "needs " + std::to_string(ctx->rs.rank) + " coordinates");
      Table t;
      t.header = {"mu", "ht", "dim", "kostant", "maximal_vectors"};
      std::function<void(std::vector<int>&, int)> walk = [&](std::vector<int>& nu, int pos) {
        if (pos == ctx->rs.rank) {
          Root r(nu);
          if (r.height() > depth) return;
          Weight mu = lam - ctx->rs.root_to_weight(r);
          long dim = verma_weight_dim(*ctx, lam, mu);
          long kk = kostant(ctx->rs, nu);
          size_t nmax_vec = maximal_vectors(ctx, lam, mu).size();
          t.rows.push_back({mu.str(), std::to_string(r.height()), std::to_string(dim),
                            std::to_string(kk), std::to_string(nmax_vec)});
          return;
        }
        for (int v = 0; v <= depth; ++v) {
          nu[pos] = v;
          walk(nu, pos + 1);
        }
        nu[pos] = 0;
      };
      std::vector<int> nu(ctx->rs.rank, 0);
      walk(nu, 0);
      std::sort(t.rows.begin(), t.rows.end(),
                [](const auto& a, const auto& b) { return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0]; });
      auto res = verma_irreducible(ctx, lam, depth);
      nlohmann::json j{{"schema", kSchemaVersion},
                       {"kind", "verma"},
                       {"lambda", weight_json(lam)},
                       {"depth", depth},
                       {"criterion_irreducible", res.criterion},
                       {"no_maximal_vector_within_depth", res.no_maximal_vector_within_depth},
                       {"weights", table_json(t)["rows"]}};
      print_payload(g, j, &t);
      return 0;
    }
    if (*sc_blocks) {
      CtxPtr ctx = build_ctx(g);
      const RootSystem& rs = ctx->rs;
      std::map<Weight, std::vector<Weight>> classes;
      std::vector<int> c(rs.rank, -grid);
      while (true) {
        Weight lam(std::vector<int>(c.begin(), c.end()));
        classes[rs.dominant_representative(lam).first].push_back(lam);
        int pos = 0;
        while (pos < rs.rank && c[pos] == grid) c[pos++] = -grid;
        if (pos == rs.rank) break;
        ++c[pos];
      }
      Table t;
      t.header = {"representative", "size", "members"};
      for (const auto& [rep, members] : classes) {
        std::string ms;
        for (size_t k = 0; k < members.size(); ++k) ms += (k ? " " : "") + members[k].str();
        t.rows.push_back({rep.str(), std::to_string(members.size()), ms});
      }
      print_payload(g, table_json(t), &t);
      return 0;
    }
    if (*sc_casimir) {
      SessionConfig cfg = g.cfg;
      cfg.lie_type = 'A';
      cfg.rank = 1;
      CtxPtr ctx = make_context('A', 1, cfg);
      long m = m_threshold(*ctx);
      if (nmax < 0) nmax = 2 * m + 2;
      Report rep = verify_sl2_center(ctx, nmax, degmax, 100, g.cfg.seed);
      AlgebraElement cq = casimir_sl2(ctx);
      if (g.cfg.format == "json") {
        nlohmann::json j{{"schema", kSchemaVersion},
                         {"kind", "casimir"},
                         {"element", element_json(cq)},
                         {"report", report_json(rep)}};
        std::cout << emit_json(j);
      } else {
        Table t = element_table(cq);
        std::cout << "C_q =\n" << table_text(t) << "\n" << report_text(rep);
      }
      return rep.passed() ? 0 : 1;
    }
    if (*sc_oq) {
      RootSystem rs = RootSystem::build('A', 1);
      QSpec spec = QSpec::standard(g.cfg.p, rs.d);
      if (oq_action == "normal-form") {
        OqElement x = parse_oq_expression(expr, spec);
        print_payload(g, oq_element_json(x));
        return 0;
      }
      if (oq_action == "norm") {
        OqElement x = parse_oq_expression(expr, spec);
        NormValue nv = oq_log_norm(spec, x, oq_level);
        print_payload(g, nlohmann::json{
                             {"schema", kSchemaVersion},
                             {"kind", "oq_norm"},
                             {"n", oq_level},
                             {"log_norm", nv.zero ? nlohmann::json("-inf") : nlohmann::json(nv.log_p)},
                             {"integral", nv.zero || nv.log_p <= 0}});
        return 0;
      }
      if (oq_action == "hopf") {
        return emit_reports(g, {criterion_oq(g.cfg.seed)});
      }
      throw CLI::ValidationError("oq", "action must be normal-form | norm | hopf");
    }
    if (*sc_verify) {
      SessionConfig cfg = g.cfg;
      cfg.word_override = parse_word_opt(g.word_override);
      if (!suites_str.empty()) {
        cfg.suites.clear();
        std::string cur;
        for (char ch : suites_str + ",") {
          if (ch == ',') {
            if (!cur.empty()) cfg.suites.push_back(cur);
            cur.clear();
          } else {
            cur += ch;
          }
        }
      }
      return emit_reports(g, run_verify(cfg));
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
