#include "uqlat/io.hpp"

#include <algorithm>
#include <sstream>

namespace uqlat {

using nlohmann::json;

json scalar_json(const Scalar& c) { return c.str(); }

json valuation_json(const std::optional<long>& v) {
  if (!v) return "inf";
  return *v;
}

json weight_json(const Weight& w) { return json(w.c); }

json word_element_json(const WordElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms) {
    json letters = json::array();
    for (const Letter& l : w) {
      switch (l.kind) {
        case Letter::Kind::E:
          letters.push_back(json{{"g", "E"}, {"i", l.idx}});
          break;
        case Letter::Kind::F:
          letters.push_back(json{{"g", "F"}, {"i", l.idx}});
          break;
        case Letter::Kind::K:
          letters.push_back(json{{"g", "K"}, {"lambda", weight_json(l.lam)}});
          break;
      }
    }
    terms.push_back(json{{"word", letters}, {"coeff", scalar_json(c)}});
  }
  return json{{"schema", kSchemaVersion}, {"kind", "word_element"}, {"terms", terms}};
}

json element_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms)
    terms.push_back(json{{"r", json(m.r)},
                         {"lambda", weight_json(m.lam)},
                         {"s", json(m.s)},
                         {"coeff", scalar_json(c)}});
  return json{{"schema", kSchemaVersion}, {"kind", "pbw_element"}, {"terms", terms}};
}

namespace {

json monomial_json(const PBWMonomial& m) {
  return json{{"r", json(m.r)}, {"lambda", weight_json(m.lam)}, {"s", json(m.s)}};
}

}  // namespace

json tensor_json(const TensorElement& x) {
  json terms = json::array();
  for (const auto& [mm, c] : x.terms)
    terms.push_back(json{{"left", monomial_json(mm.first)},
                         {"right", monomial_json(mm.second)},
                         {"coeff", scalar_json(c)}});
  return json{{"schema", kSchemaVersion}, {"kind", "tensor_element"}, {"terms", terms}};
}

json oq_element_json(const OqElement& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms) {
    if (m.t == 0)
      terms.push_back(json{{"kind", "a"}, {"exps", json{m.l, m.m, m.s}}, {"coeff", scalar_json(c)}});
    else
      terms.push_back(json{{"kind", "d"}, {"exps", json{m.m, m.s, m.t}}, {"coeff", scalar_json(c)}});
  }
  return json{{"schema", kSchemaVersion}, {"kind", "oq_element"}, {"terms", terms}};
}

json cartan_element_json(const CartanElement& x) {
  json terms = json::array();
  for (const auto& [lam, c] : x.terms)
    terms.push_back(json{{"lambda", weight_json(lam)}, {"coeff", scalar_json(c)}});
  return json{{"schema", kSchemaVersion}, {"kind", "cartan_element"}, {"terms", terms}};
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"check", c.check},
                          {"instance", c.instance},
                          {"pass", c.pass},
                          {"witness", c.witness}});
  return json{{"schema", kSchemaVersion},
              {"kind", "report"},
              {"suite", r.suite},
              {"meta", json(r.meta)},
              {"failures", r.failures()},
              {"checks", checks}};
}

json rootsystem_json(const RootSystem& rs) {
  json roots = json::array();
  for (const Root& b : rs.positive_roots)
    roots.push_back(json{{"alpha_coords", json(b.a)}, {"height", b.height()}});
  return json{{"schema", kSchemaVersion},
              {"kind", "root_system"},
              {"type", rs.type_str()},
              {"rank", rs.rank},
              {"cartan", json(rs.cartan)},
              {"d_i", json(rs.di)},
              {"d", rs.d},
              {"pairing_d", json(rs.pairing_d)},
              {"rho", weight_json(rs.rho)},
              {"positive_roots", roots}};
}

json context_json(const UqContext& ctx) {
  json j = rootsystem_json(ctx.rs);
  j["w0"] = json(ctx.w0.letters);
  json beta = json::array();
  for (int jj = 0; jj < ctx.N; ++jj)
    beta.push_back(json{{"alpha_coords", json(ctx.beta[jj].a)}, {"height", ctx.beta_ht[jj]}});
  j["beta_sequence"] = beta;
  j["p"] = ctx.spec.p;
  j["qprime"] = scalar_json(ctx.spec.qprime);
  j["q"] = scalar_json(ctx.spec.q);
  return j;
}

std::string emit_json(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string table_csv(const Table& t) {
  std::ostringstream os;
  for (size_t k = 0; k < t.header.size(); ++k) os << (k ? "," : "") << csv_escape(t.header[k]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_escape(row[k]);
    os << "\n";
  }
  return os.str();
}

std::string table_text(const Table& t) {
  std::vector<size_t> width(t.header.size(), 0);
  for (size_t k = 0; k < t.header.size(); ++k) width[k] = t.header[k].size();
  for (const auto& row : t.rows)
    for (size_t k = 0; k < row.size() && k < width.size(); ++k)
      width[k] = std::max(width[k], row[k].size());
  std::ostringstream os;
  auto put_row = [&](const std::vector<std::string>& row) {
    for (size_t k = 0; k < row.size(); ++k) {
      os << (k ? "  " : "") << row[k];
      if (k + 1 < row.size()) os << std::string(width[k] - row[k].size(), ' ');
    }
    os << "\n";
  };
  put_row(t.header);
  std::vector<std::string> rule;
  for (size_t w : width) rule.push_back(std::string(w, '-'));
  put_row(rule);
  for (const auto& row : t.rows) put_row(row);
  return os.str();
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj;
    for (size_t k = 0; k < row.size() && k < t.header.size(); ++k) obj[t.header[k]] = row[k];
    rows.push_back(obj);
  }
  return json{{"schema", kSchemaVersion}, {"kind", "table"}, {"rows", rows}};
}

Table report_table(const Report& r) {
  Table t;
  t.header = {"check", "instance", "pass", "witness"};
  for (const auto& c : r.checks)
    t.rows.push_back({c.check, c.instance, c.pass ? "pass" : "FAIL", c.witness});
  return t;
}

std::string report_text(const Report& r, size_t max_failures_listed) {
  std::ostringstream os;
  os << "suite " << r.suite;
  for (const auto& [k, v] : r.meta) os << " " << k << "=" << v;
  os << "\n";

  // Aggregate per check id.
  std::map<std::string, std::pair<size_t, size_t>> agg;  // id -> (total, failed)
  for (const auto& c : r.checks) {
    auto& e = agg[c.check];
    ++e.first;
    if (!c.pass) ++e.second;
  }
  for (const auto& [id, e] : agg)
    os << "  " << (e.second ? "FAIL" : "pass") << "  " << id << "  (" << (e.first - e.second)
       << "/" << e.first << " ok)\n";
  size_t listed = 0;
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    if (listed++ >= max_failures_listed) {
      os << "  ... " << (r.failures() - max_failures_listed) << " more failures\n";
      break;
    }
    os << "    failed: " << c.check << " @ " << c.instance
       << (c.witness.empty() ? "" : ("  [" + c.witness + "]")) << "\n";
  }
  return os.str();
}

}  // namespace uqlat
