#include "doctest.h"
#include "uqlat/io.hpp"
#include "uqlat/rng.hpp"
#include "uqlat/verify.hpp"

using namespace uqlat;

TEST_CASE("scalar and valuation serialization") {
  CHECK(scalar_json(Scalar(35, 6)) == "35/6");
  CHECK(scalar_json(Scalar(-2)) == "-2/1");
  CHECK(valuation_json(std::nullopt) == "inf");
  CHECK(valuation_json(3) == 3);
}

TEST_CASE("canonical element JSON is sorted and byte-stable") {
  CtxPtr ctx = make_context('A', 2, SessionConfig{});
  Rng rng(71);
  AlgebraElement x = rand_element(ctx, rng, 3, 4, 2);

  // Equal elements computed along different routes emit identical bytes.
  AlgebraElement via_words = word_to_pbw(ctx, pbw_to_word(*ctx, x));
  CHECK(via_words == x);
  CHECK(emit_json(element_json(via_words)) == emit_json(element_json(x)));

  // Terms appear in the monomial order.
  PBWOrder lt;
  const auto& terms = element_json(x)["terms"];
  auto keys = x.terms;
  auto it = keys.begin();
  for (size_t k = 0; k + 1 < keys.size(); ++k) {
    auto cur = it++;
    CHECK(lt(cur->first, it->first));
  }
  CHECK(terms.size() == x.terms.size());
}

TEST_CASE("unit emits the singleton monomial record") {
  CtxPtr ctx = make_context('A', 1, SessionConfig{});
  nlohmann::json j = element_json(make_unit(ctx));
  CHECK(j["terms"].size() == 1);
  CHECK(j["terms"][0]["coeff"] == "1/1");
  CHECK(j["terms"][0]["r"] == nlohmann::json::array({0}));
  CHECK(j["schema"] == kSchemaVersion);
}

TEST_CASE("report rendering") {
  Report r;
  r.suite = "demo";
  r.meta["seed"] = "1";
  r.add("alpha", "x=1", true, "min_slack=0");
  r.add("alpha", "x=2", false, "witness, with comma");
  r.add("beta", "y", true);
  CHECK(r.failures() == 1);
  CHECK(!r.passed());

  std::string text = report_text(r);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("alpha") != std::string::npos);

  std::string csv = table_csv(report_table(r));
  CHECK(csv.find("\"witness, with comma\"") != std::string::npos);
  CHECK(csv.substr(0, 5) == "check");

  nlohmann::json j = report_json(r);
  CHECK(j["failures"] == 1);
  CHECK(j["checks"].size() == 3);
}

TEST_CASE("tables") {
  Table t;
  t.header = {"mu", "dim"};
  t.rows = {{"[0,0]", "1"}, {"[-1,2]", "2"}};
  CHECK(table_csv(t) == "mu,dim\n[0,0],1\n[-1,2],2\n");
  std::string text = table_text(t);
  CHECK(text.find("mu") != std::string::npos);
  nlohmann::json j = table_json(t);
  CHECK(j["rows"][1]["dim"] == "2");
}

TEST_CASE("oq element JSON uses the a/d kind encoding") {
  QSpec s = QSpec::standard(5, 2);
  OqElement x = oq_normal_form(s, "ad");
  nlohmann::json j = oq_element_json(x);
  CHECK(j["terms"].size() == 2);
  for (const auto& term : j["terms"]) {
    CHECK((term["kind"] == "a" || term["kind"] == "d"));
    CHECK(term["exps"].size() == 3);
  }
}
