#include "doctest.h"
#include "uqlat/cato.hpp"
#include "uqlat/rng.hpp"
#include "uqlat/verify.hpp"

using namespace uqlat;

namespace {

CtxPtr a1() {
  static CtxPtr ctx = make_context('A', 1, SessionConfig{});
  return ctx;
}
CtxPtr a2() {
  static CtxPtr ctx = make_context('A', 2, SessionConfig{});
  return ctx;
}

}  // namespace

TEST_CASE("psi characters") {
  const RootSystem& rs = a1()->rs;
  const QSpec& spec = a1()->spec;
  CHECK(psi(rs, spec, Weight({0}), Weight({7})) == Scalar(1));
  // A1: psi(w, alpha) = q
  CHECK(psi(rs, spec, rs.fundamental(1), rs.alpha_as_weight(1)) == spec.q);
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    Weight lam({static_cast<int>(rng.range(-6, 6))});
    Weight mu({static_cast<int>(rng.range(-6, 6))});
    CHECK(*psi(rs, spec, lam, mu).valuation(5) == 0);  // powers of a unit
  }
}

TEST_CASE("residue classes") {
  RootSystem rs = RootSystem::build('A', 1);
  QSpec spec = standard_spec(rs);
  // r = 1, a = 1, b = 1: X = {0}, so M = {0}
  auto m1 = residue_classes(rs, spec, 1, {0}, {1}, 1);
  CHECK(m1 == std::set<mpz_class>{0});
  // a = 1 always contains 0
  auto m2 = residue_classes(rs, spec, 2, {0, 1}, {1, 1}, 1);
  CHECK(m2.count(0) == 1);
  // r = 1, a = 2, p = 5, q' = 6: residues of {0, 6-1, 6^{-1}-1} mod 25
  auto m3 = residue_classes(rs, spec, 1, {0}, {1}, 2);
  CHECK(m3 == std::set<mpz_class>{0, 5, 20});
  CHECK_THROWS_AS(residue_classes(rs, spec, 1, {0, 1}, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(residue_classes(rs, spec, 1, {0}, {1}, 0), std::invalid_argument);
}

TEST_CASE("separating element: explicit instances") {
  const RootSystem& rs = a1()->rs;
  const QSpec& spec = a1()->spec;

  // empty X gives the constant 1
  CartanElement one = separating_element(rs, spec, {}, Weight({3}));
  CHECK(one == CartanElement::one(1));

  // X = {0}, lambda = 2w
  std::vector<Weight> X{Weight({0})};
  Weight lam({2});
  CartanElement p = separating_element(rs, spec, X, lam);
  CHECK(psi_apply(rs, spec, p, Weight({0})).is_zero());
  CHECK(psi_apply(rs, spec, p, lam) == Scalar(1));
  for (int g = -10; g <= 10; ++g) {
    auto v = psi_apply(rs, spec, p, Weight({g})).valuation(5);
    CHECK((!v || *v >= 0));
  }
  CHECK_THROWS_AS(separating_element(rs, spec, X, Weight({0})), std::invalid_argument);
}

TEST_CASE("separating element acts as a weight projector") {
  // Applying the output to a sum of weight vectors kills the X-components and
  // fixes the lambda-component: eigenvalue bookkeeping through psi.
  const RootSystem& rs = a2()->rs;
  const QSpec& spec = a2()->spec;
  std::vector<Weight> X{Weight({1, 0}), Weight({-2, 3}), Weight({0, 0})};
  Weight lam({2, -1});
  CartanElement p = separating_element(rs, spec, X, lam);
  // m = sum of formal weight vectors with coefficients; p acts by psi_nu(p).
  std::map<Weight, Scalar> m{{X[0], Scalar(2)}, {X[1], Scalar(-1)}, {X[2], Scalar(7, 3)},
                             {lam, Scalar(5, 2)}};
  std::map<Weight, Scalar> image;
  for (const auto& [nu, c] : m) {
    Scalar ev = psi_apply(rs, spec, p, nu);
    if (!(ev * c).is_zero()) image[nu] = ev * c;
  }
  CHECK(image.size() == 1);
  CHECK(image.at(lam) == Scalar(5, 2));
}

TEST_CASE("kostant partition counts") {
  RootSystem a2rs = RootSystem::build('A', 2);
  CHECK(kostant(a2rs, {0, 0}) == 1);
  CHECK(kostant(a2rs, {1, 1}) == 2);  // {a1+a2} and {a1, a2}
  CHECK(kostant(a2rs, {2, 1}) == 2);
  RootSystem a1rs = RootSystem::build('A', 1);
  for (int k = 0; k <= 6; ++k) CHECK(kostant(a1rs, {k}) == 1);
  CHECK_THROWS_AS(kostant(a2rs, {-1, 0}), std::invalid_argument);
}

TEST_CASE("verma weight dimensions") {
  Weight lam({1, 1});
  CHECK(verma_weight_dim(*a2(), lam, lam) == 1);
  CHECK(verma_weight_dim(*a2(), lam, lam + a2()->rs.fundamental(1)) == 0);
  Weight zero({0, 0});
  Weight mu = zero - a2()->rs.root_to_weight(Root({1, 1}));
  CHECK(verma_weight_dim(*a2(), zero, mu) == 2);
  // oracle agreement on a grid
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b) {
      Root nu({a, b});
      CHECK(verma_weight_dim(*a2(), lam, lam - a2()->rs.root_to_weight(nu)) ==
            kostant(a2()->rs, nu.a));
    }
}

TEST_CASE("verma module action") {
  VermaElement v = VermaElement::highest(a1(), Weight({3}));
  CHECK(verma_apply(make_E(a1(), 1), v).is_zero());

  // A1: E . (F v_lambda) = [<lambda, alpha>]_q v_lambda
  VermaElement fv = verma_apply(make_F(a1(), 1), v);
  VermaElement efv = verma_apply(make_E(a1(), 1), fv);
  const Scalar& q = a1()->spec.q;
  Scalar expected = (q.pow(3) - q.pow(-3)) / (q - q.inverse());
  CHECK(efv == v.scaled(expected));

  // K_mu acts on F^r v_lambda by the shifted weight
  Weight mu({1});
  VermaElement kfv = verma_apply(make_K(a1(), mu), fv);
  long pairing = a1()->rs.pair_ww_d(Weight({3}) - a1()->rs.alpha_as_weight(1), mu);
  CHECK(kfv == fv.scaled(a1()->spec.qp_pow(pairing)));
}

TEST_CASE("maximal vectors in A1") {
  // mu = lambda gives the highest weight line
  auto top = maximal_vectors(a1(), Weight({2}), Weight({2}));
  CHECK(top.size() == 1);

  // lambda = n w with n >= 0: a maximal vector at lambda - (n+1) alpha
  for (int n = 0; n <= 3; ++n) {
    Weight lam({n});
    Weight mu({n - 2 * (n + 1)});
    auto basis = maximal_vectors(a1(), lam, mu);
    REQUIRE(basis.size() == 1);
    std::vector<int> expo{n + 1};
    CHECK(basis[0].terms.count(expo) == 1);
    // and no maximal vector at other depths up to 8
    for (int k = 1; k <= 8; ++k) {
      if (k == n + 1) continue;
      CHECK(maximal_vectors(a1(), lam, Weight({n - 2 * k})).empty());
    }
  }

  // lambda + rho pairing 0 (lambda = -w): nothing up to depth 8
  for (int k = 1; k <= 8; ++k)
    CHECK(maximal_vectors(a1(), Weight({-1}), Weight({-1 - 2 * k})).empty());
}

TEST_CASE("maximal vectors only in the dot orbit") {
  // nonzero maximal vectors at mu != lambda force chi_lambda = chi_mu
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      Weight lam({a, b});
      for (int x = 0; x <= 3; ++x)
        for (int y = 0; x + y <= 3; ++y) {
          if (x == 0 && y == 0) continue;
          Weight mu = lam - a2()->rs.root_to_weight(Root({x, y}));
          if (!maximal_vectors(a2(), lam, mu).empty())
            CHECK(central_char_equal(a2()->rs, lam, mu));
        }
    }
}

TEST_CASE("verma irreducibility") {
  auto r0 = verma_irreducible(a1(), Weight({0}), 8);
  CHECK(!r0.criterion);
  CHECK(!r0.no_maximal_vector_within_depth);
  CHECK(*r0.witness_depth == 1);

  auto rm1 = verma_irreducible(a1(), Weight({-1}), 8);
  CHECK(rm1.criterion);  // <lambda+rho, alpha^vee> = 0 is not in {1,2,...}
  CHECK(rm1.no_maximal_vector_within_depth);

  auto rd = verma_irreducible(a1(), Weight({4}), 8);
  CHECK(!rd.criterion);
  CHECK(*rd.witness_depth == 5);  // F^{<lambda,alpha^vee>+1} witness
  CHECK(!rd.no_maximal_vector_within_depth);
}

TEST_CASE("central characters") {
  const RootSystem& rs1 = a1()->rs;
  CHECK(central_char_equal(rs1, Weight({3}), Weight({3})));
  CHECK(central_char_equal(rs1, Weight({0}), Weight({-2})));  // s.0 = -2w
  CHECK(!central_char_equal(rs1, Weight({0}), Weight({-1})));
  const RootSystem& rs2 = a2()->rs;
  CHECK(!central_char_equal(rs2, Weight({0, 0}), -rs2.rho));
}

TEST_CASE("casimir element") {
  AlgebraElement cq = casimir_sl2(a1());
  CHECK(cq.terms.size() == 3);
  // centrality
  for (const AlgebraElement& g :
       {make_E(a1(), 1), make_F(a1(), 1), make_K(a1(), Weight({1}))})
    CHECK(multiply(cq, g) == multiply(g, cq));
  // eigenvalue on v_{nw} and its dot symmetry
  for (long n = -4; n <= 4; ++n) {
    VermaElement v = VermaElement::highest(a1(), Weight({static_cast<int>(n)}));
    CHECK(verma_apply(cq, v) == v.scaled(casimir_eigenvalue(a1(), n)));
    CHECK(casimir_eigenvalue(a1(), n) == casimir_eigenvalue(a1(), -n - 2));
  }
  const Scalar& q = a1()->spec.q;
  Scalar denom = (q - q.inverse()) * (q - q.inverse());
  CHECK(casimir_eigenvalue(a1(), 3) == (q.pow(4) + q.pow(-4)) / denom);
  CHECK_THROWS_AS(casimir_sl2(a2()), std::invalid_argument);
}

TEST_CASE("sl2 center report") {
  Report r = verify_sl2_center(a1(), 4, 3, 10, 777);
  CHECK(r.passed());
}
