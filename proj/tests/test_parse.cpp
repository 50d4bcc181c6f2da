#include "doctest.h"
#include "uqlat/parse.hpp"
#include "uqlat/rng.hpp"
#include "uqlat/verify.hpp"

using namespace uqlat;

namespace {

struct Fixture {
  RootSystem rs = RootSystem::build('A', 2);
  QSpec spec = standard_spec(rs);
};

}  // namespace

TEST_CASE("basic expressions") {
  Fixture f;
  WordElement x = parse_uq_expression("E1*F1 - F1*E1", f.rs, f.spec);
  CHECK(x.terms.size() == 2);
  CHECK(x.terms.at({Letter::e(1), Letter::f(1)}) == Scalar(1));
  CHECK(x.terms.at({Letter::f(1), Letter::e(1)}) == Scalar(-1));

  WordElement y = parse_uq_expression("K[1,0]*E2^2", f.rs, f.spec);
  CHECK(y == WordElement::single({Letter::k(Weight({1, 0})), Letter::e(2), Letter::e(2)}));

  WordElement z = parse_uq_expression("(3/2)*q*F1", f.rs, f.spec);
  CHECK(z == WordElement::single({Letter::f(1)}, Scalar(3, 2) * f.spec.q));
}

TEST_CASE("scalars, powers and parentheses") {
  Fixture f;
  CHECK(parse_uq_expression("qq^3", f.rs, f.spec) ==
        WordElement::single(Word{}, f.spec.qp_pow(3)));
  CHECK(parse_uq_expression("q^(-1)", f.rs, f.spec) ==
        WordElement::single(Word{}, f.spec.q.inverse()));
  CHECK(parse_uq_expression("K[0,1]^-2", f.rs, f.spec) ==
        WordElement::single({Letter::k(Weight({0, -2}))}));
  CHECK(parse_uq_expression("-E1", f.rs, f.spec) ==
        WordElement::single({Letter::e(1)}, Scalar(-1)));
  CHECK(parse_uq_expression("(E1 + F2)*E1", f.rs, f.spec).terms.size() == 2);
  CHECK(parse_uq_expression("  E1 * E1 - E1^2 ", f.rs, f.spec).is_zero());
}

TEST_CASE("parse errors carry positions") {
  Fixture f;
  CHECK_THROWS_WITH_AS(parse_uq_expression("E1 + ", f.rs, f.spec),
                       doctest::Contains("position 5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_uq_expression("E5", f.rs, f.spec), std::invalid_argument);
  CHECK_THROWS_AS(parse_uq_expression("K[1]", f.rs, f.spec), std::invalid_argument);
  CHECK_THROWS_AS(parse_uq_expression("E1^-1", f.rs, f.spec), std::invalid_argument);
  CHECK_THROWS_AS(parse_uq_expression("G3", f.rs, f.spec), std::invalid_argument);
  CHECK_THROWS_AS(parse_uq_expression("E1 E2", f.rs, f.spec), std::invalid_argument);
}

TEST_CASE("oq expressions") {
  Fixture f;
  QSpec s = QSpec::standard(5, 2);
  OqElement x = parse_oq_expression("a*d - q*b*c", s);
  CHECK(x == OqElement::one());  // the determinant relation
  CHECK(parse_oq_expression("b^2*c", s) ==
        OqElement::single(OqMonomial{0, 2, 1, 0}));
  CHECK_THROWS_AS(parse_oq_expression("E1", s), std::invalid_argument);
  CHECK_THROWS_AS(parse_oq_expression("K[1]", s), std::invalid_argument);
}

TEST_CASE("round trip through the printer") {
  Fixture f;
  Rng rng(61);
  for (int k = 0; k < 40; ++k) {
    WordElement x;
    int nterms = static_cast<int>(rng.range(1, 3));
    for (int t = 0; t < nterms; ++t)
      x.add_term(rand_word(f.rs, rng, 4, 2, true),
                 Scalar(rng.range(-5, 5), rng.range(1, 4)));
    WordElement back = parse_uq_expression(to_expression(x), f.rs, f.spec);
    CHECK(back == x);
  }
}
