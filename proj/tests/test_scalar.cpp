#include "doctest.h"
#include "uqlat/rng.hpp"
#include "uqlat/scalar.hpp"

using namespace uqlat;

TEST_CASE("scalars are canonical rationals") {
  CHECK(Scalar(-3, -9) == Scalar(1, 3));
  CHECK(Scalar(6, 4).str() == "3/2");
  CHECK(Scalar(0, 7).is_zero());
  CHECK(Scalar::from_string("35/6") == Scalar(35, 6));
  CHECK(Scalar::from_string("-4") == Scalar(-4));
  CHECK_THROWS_AS(Scalar(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(3) / Scalar(0), std::invalid_argument);
}

TEST_CASE("p-adic valuation") {
  CHECK(*Scalar(35, 6).valuation(5) == 1);
  CHECK(*Scalar(1).valuation(7) == 0);
  CHECK(!Scalar(0).valuation(5));  // +infinity
  CHECK(*Scalar(1, 25).valuation(5) == -2);
  CHECK(*Scalar(50, 3).valuation(5) == 2);
  CHECK_THROWS_AS(Scalar(1).valuation(6), std::invalid_argument);
}

TEST_CASE("valuation is additive and ultrametric") {
  Rng rng(2024);
  for (int k = 0; k < 200; ++k) {
    long an = rng.range(-40, 40), ad = rng.range(1, 40);
    long bn = rng.range(-40, 40), bd = rng.range(1, 40);
    if (an == 0 || bn == 0) continue;
    Scalar a(an, ad), b(bn, bd);
    CHECK(*(a * b).valuation(5) == *a.valuation(5) + *b.valuation(5));
    Scalar sum = a + b;
    long lo = std::min(*a.valuation(5), *b.valuation(5));
    if (!sum.is_zero()) CHECK(*sum.valuation(5) >= lo);
    if (*a.valuation(5) != *b.valuation(5)) CHECK(*sum.valuation(5) == lo);
  }
}

TEST_CASE("quantum integers") {
  Scalar t(6);
  CHECK(qint(1, t) == Scalar(1));
  CHECK(qint(2, t) == t + t.inverse());
  CHECK(qint(2, t) == Scalar(37, 6));
  CHECK(qint(-3, t) == -qint(3, t));
  CHECK_THROWS_AS(qint(2, Scalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(qint(2, Scalar(0)), std::invalid_argument);
}

TEST_CASE("quantum integers at t = 1 mod p reduce to ordinary integers") {
  QSpec spec = QSpec::standard(5, 2);
  for (long n = 1; n < 10; ++n) {
    Scalar diff = qint(n, spec.qprime) - Scalar(n);
    auto v = diff.valuation(5);
    CHECK((!v || *v >= 1));
    if (n < 5) CHECK(*qint(n, spec.qprime).valuation(5) == 0);  // p-adic unit
  }
}

TEST_CASE("quantum binomials") {
  Scalar t(6);
  CHECK(qbinom(5, 5, t) == Scalar(1));
  CHECK(qbinom(7, 0, t) == Scalar(1));
  CHECK(qbinom(2, 1, t) == qint(2, t));

  // Independent oracle for [4 2]_t: the balanced Gaussian binomial is the
  // symmetric Laurent polynomial t^4 + t^2 + 2 + t^-2 + t^-4.
  Scalar oracle = t.pow(4) + t.pow(2) + Scalar(2) + t.pow(-2) + t.pow(-4);
  CHECK(oracle == Scalar(1728901, 1296));
  CHECK(qbinom(4, 2, t) == oracle);

  for (long n = 0; n <= 6; ++n)
    for (long i = 0; i <= n; ++i) CHECK(qbinom(n, i, t) == qbinom(n, n - i, t));
  CHECK_THROWS_AS(qbinom(2, 3, t), std::invalid_argument);
  CHECK_THROWS_AS(qbinom(2, -1, t), std::invalid_argument);
}

TEST_CASE("QSpec validation") {
  QSpec spec = QSpec::standard(5, 2);
  CHECK(spec.q == Scalar(36));
  CHECK(spec.q_i(1) == Scalar(36));
  CHECK(spec.qp_pow(-1) == Scalar(1, 6));
  CHECK_THROWS_AS(QSpec(4, 1, Scalar(5)), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(QSpec(2, 1, Scalar(3)), std::invalid_argument);   // p = 2
  CHECK_THROWS_AS(QSpec(5, 1, Scalar(7)), std::invalid_argument);   // 7 != 1 mod 5
  CHECK_THROWS_AS(QSpec(5, 1, Scalar(1)), std::invalid_argument);   // root of unity
}
