#include "doctest.h"
#include "uqlat/oqsl2.hpp"
#include "uqlat/rng.hpp"

using namespace uqlat;

namespace {

QSpec spec() { return QSpec::standard(5, 2); }  // q = 36, as for sl2

}  // namespace

TEST_CASE("normal form basics") {
  QSpec s = spec();
  const Scalar& q = s.q;

  OqElement ab = oq_normal_form(s, "ab");
  CHECK(ab == OqElement::single(OqMonomial{1, 1, 0, 0}));

  // ad = 1 + q bc
  OqElement ad = oq_normal_form(s, "ad");
  OqElement expected = OqElement::one();
  expected.add_term(OqMonomial{0, 1, 1, 0}, q);
  CHECK(ad == expected);

  // da = 1 + q^{-1} bc
  OqElement da = oq_normal_form(s, "da");
  OqElement expected2 = OqElement::one();
  expected2.add_term(OqMonomial{0, 1, 1, 0}, q.inverse());
  CHECK(da == expected2);

  CHECK(oq_normal_form(s, "") == OqElement::one());
  CHECK(oq_normal_form(s, "ba") == OqElement::single(OqMonomial{1, 1, 0, 0}, q.inverse()));
}

TEST_CASE("no basis monomial mixes a and d") {
  QSpec s = spec();
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    OqWord w;
    for (int j = 0; j < 7; ++j) w += "abcd"[rng.range(0, 3)];
    for (const auto& [m, c] : oq_normal_form(s, w).terms) {
      (void)c;
      CHECK(m.valid());
      CHECK((m.l == 0 || m.t == 0));
    }
  }
}

TEST_CASE("multiplication") {
  QSpec s = spec();
  const Scalar& q = s.q;
  OqElement a = oq_normal_form(s, "a"), b = oq_normal_form(s, "b");
  CHECK(oq_multiply(s, OqElement::one(), a) == a);
  CHECK(oq_multiply(s, a, b) == OqElement::single(OqMonomial{1, 1, 0, 0}));
  CHECK(oq_multiply(s, b, a) == OqElement::single(OqMonomial{1, 1, 0, 0}, q.inverse()));
  // consistency with the word normal form
  OqElement ad_via_mul = oq_multiply(s, a, oq_normal_form(s, "d"));
  CHECK(ad_via_mul == oq_normal_form(s, "ad"));
}

TEST_CASE("confluence against randomized local rewriting") {
  QSpec s = spec();
  Rng rng(11);
  for (int k = 0; k < 120; ++k) {
    OqWord w;
    int len = static_cast<int>(rng.range(0, 8));
    for (int j = 0; j < len; ++j) w += "abcd"[rng.range(0, 3)];
    OqElement canon = oq_normal_form(s, w);
    CHECK(oq_normal_form_local(s, w, &rng) == canon);
    CHECK(oq_normal_form_local(s, w, nullptr) == canon);
  }
}

TEST_CASE("hopf maps on generators") {
  QSpec s = spec();
  const Scalar& q = s.q;
  CHECK(oq_counit(s, oq_normal_form(s, "a")) == Scalar(1));
  CHECK(oq_counit(s, oq_normal_form(s, "d")) == Scalar(1));
  CHECK(oq_counit(s, oq_normal_form(s, "b")).is_zero());

  OqTensor da = oq_coproduct(s, oq_normal_form(s, "a"));
  OqTensor expected;
  expected.add_term(OqMonomial{1, 0, 0, 0}, OqMonomial{1, 0, 0, 0}, Scalar(1));
  expected.add_term(OqMonomial{0, 1, 0, 0}, OqMonomial{0, 0, 1, 0}, Scalar(1));
  CHECK(da == expected);

  CHECK(oq_antipode(s, oq_normal_form(s, "b")) ==
        OqElement::single(OqMonomial{0, 1, 0, 0}, -q.inverse()));
  CHECK(oq_antipode(s, oq_normal_form(s, "c")) ==
        OqElement::single(OqMonomial{0, 0, 1, 0}, -q));
  CHECK(oq_antipode(s, oq_normal_form(s, "a")) == oq_normal_form(s, "d"));
}

TEST_CASE("determinant relation is identically zero") {
  QSpec s = spec();
  OqElement det = oq_normal_form(s, "ad");
  det -= oq_normal_form(s, "bc").scaled(s.q);
  det -= OqElement::one();
  CHECK(det.is_zero());
}

TEST_CASE("oq norms") {
  QSpec s = spec();
  CHECK(oq_log_norm(s, OqElement::one(), 3) == NormValue::of_log(0));
  CHECK(oq_log_norm(s, oq_normal_form(s, "a"), 2) == NormValue::of_log(2));
  CHECK(oq_log_norm(s, oq_normal_form(s, "a").scaled(Scalar(5)), 1) == NormValue::of_log(0));
  CHECK(oq_log_norm(s, OqElement::zero(), 1) == NormValue::of_zero());
}

TEST_CASE("invalid monomials are rejected") {
  OqElement x;
  CHECK_THROWS_AS(x.add_term(OqMonomial{1, 0, 0, 1}, Scalar(1)), InvariantViolation);
  CHECK_THROWS_AS(x.add_term(OqMonomial{-1, 0, 0, 0}, Scalar(1)), InvariantViolation);
}
