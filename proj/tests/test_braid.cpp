#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "uqlat/braid.hpp"
#include "uqlat/io.hpp"
#include "uqlat/rng.hpp"
#include "uqlat/verify.hpp"

using namespace uqlat;

namespace {

CtxPtr ctx_of(const char* t) { return make_context(t[0], t[1] - '0', SessionConfig{}); }

}  // namespace

TEST_CASE("braid generator table") {
  CtxPtr a1 = ctx_of("A1");
  // T_i E_i = -F_i K_{alpha_i}
  AlgebraElement te = braid_T(make_E(a1, 1), 1);
  AlgebraElement expected = word_to_pbw(
      a1, WordElement::single({Letter::f(1), Letter::k(Weight({2}))}, Scalar(-1)));
  CHECK(te == expected);
  // T_i F_i = -K_{-alpha_i} E_i
  AlgebraElement tf = braid_T(make_F(a1, 1), 1);
  CHECK(tf == word_to_pbw(a1, WordElement::single(
                                  {Letter::k(Weight({-2})), Letter::e(1)}, Scalar(-1))));
  // T_i K_lambda = K_{s_i lambda}
  CHECK(braid_T(make_K(a1, Weight({3})), 1) == make_K(a1, Weight({-3})));
}

TEST_CASE("A2: T_1(E_2) is the second root vector") {
  CtxPtr a2 = ctx_of("A2");
  AlgebraElement img = braid_T(make_E(a2, 2), 1);
  PBWMonomial beta2 = PBWMonomial::unit(3, 2);
  beta2.s[1] = 1;
  CHECK(img == make_monomial(a2, beta2));
  // and as words: -E1E2 + q^{-1} E2E1
  WordElement words = a2->root_vector_words(2);
  WordElement expected;
  expected.add_term({Letter::e(1), Letter::e(2)}, Scalar(-1));
  expected.add_term({Letter::e(2), Letter::e(1)}, Scalar(1, 216));
  CHECK(words == expected);
}

TEST_CASE("braid_Tw") {
  CtxPtr a2 = ctx_of("A2");
  Rng rng(3);
  AlgebraElement x = rand_element(a2, rng, 3, 2, 1);
  CHECK(braid_Tw(x, ReducedWord{}) == x);
  CHECK(braid_Tw(make_E(a2, 1), ReducedWord({1})) == braid_T(make_E(a2, 1), 1));
  // T_{w1 w2} = T_{w1} T_{w2} for additive lengths
  AlgebraElement via_split = braid_Tw(braid_Tw(x, ReducedWord({1})), ReducedWord({2}));
  CHECK(braid_Tw(x, ReducedWord({2, 1})) == via_split);
  CHECK_THROWS_AS(braid_Tw(x, ReducedWord({1, 1})), std::invalid_argument);
}

TEST_CASE("braid operators are algebra automorphisms with inverses") {
  CtxPtr a2 = ctx_of("A2");
  Rng rng(7);
  for (int k = 0; k < 6; ++k) {
    AlgebraElement x = rand_element(a2, rng, 2, 2, 1);
    AlgebraElement y = rand_element(a2, rng, 2, 2, 1);
    for (int i = 1; i <= 2; ++i) {
      CHECK(braid_T(multiply(x, y), i) == multiply(braid_T(x, i), braid_T(y, i)));
      CHECK(braid_T_inverse(braid_T(x, i), i) == x);
      CHECK(braid_T(braid_T_inverse(x, i), i) == x);
    }
  }
}

TEST_CASE("weight covariance wt(T_i x) = s_i(wt x)") {
  CtxPtr a2 = ctx_of("A2");
  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    // weight-homogeneous sample: a single monomial
    AlgebraElement x = rand_element(a2, rng, 3, 1, 1);
    auto comps = weight_components(x);
    REQUIRE(comps.size() == 1);
    Root wt(comps.begin()->first);
    for (int i = 1; i <= 2; ++i) {
      AlgebraElement img = braid_T(x, i);
      auto icomps = weight_components(img);
      REQUIRE(icomps.size() == 1);
      CHECK(Root(icomps.begin()->first) == a2->rs.simple_reflection(i, wt));
    }
  }
}

TEST_CASE("braid relations hold (A1 vacuous, A2, B2)") {
  CHECK(check_braid_relations(ctx_of("A1")).passed());
  CHECK(check_braid_relations(ctx_of("A2")).passed());
  CHECK(check_braid_relations(ctx_of("B2")).passed());
}

TEST_CASE("multiplicity law for root vectors") {
  for (const char* t : {"A2", "B2", "G2"}) {
    CtxPtr ctx = ctx_of(t);
    for (int j = 1; j <= ctx->N; ++j) {
      const WordElement& rv = ctx->root_vector_words(j);
      CHECK(!rv.is_zero());
      for (const auto& [w, c] : rv.terms) {
        (void)c;
        std::vector<int> mult(ctx->rs.rank, 0);
        for (const Letter& l : w) {
          CHECK(l.kind == Letter::Kind::E);
          ++mult[l.idx - 1];
        }
        CHECK(mult == ctx->beta[j - 1].a);
        CHECK(static_cast<int>(w.size()) == ctx->beta_ht[j - 1]);
      }
    }
  }
}

TEST_CASE("root vector integrality (B2)") {
  CtxPtr b2 = ctx_of("B2");
  for (int j = 1; j <= b2->N; ++j)
    for (const auto& [w, c] : b2->root_vector_words(j).terms) {
      (void)w;
      CHECK(*c.valuation(5) >= 0);
    }
}

TEST_CASE("golden root-vector expansions") {
  for (const char* t : {"A2", "B2", "G2"}) {
    CtxPtr ctx = ctx_of(t);
    std::string path = std::string(UQLAT_GOLDEN_DIR) + "/root_vectors_" + t + ".json";
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    nlohmann::json expected;
    in >> expected;
    nlohmann::json actual = nlohmann::json::array();
    for (int j = 1; j <= ctx->N; ++j)
      actual.push_back(nlohmann::json{{"j", j},
                                      {"beta", nlohmann::json(ctx->beta[j - 1].a)},
                                      {"expansion", word_element_json(ctx->root_vector_words(j))}});
    CHECK_MESSAGE(actual == expected, "root vectors changed for " << t);
  }
}
