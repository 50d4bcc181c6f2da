#pragma once

#include <cstdint>
#include <set>

#include "uqlat/lattice.hpp"
#include "uqlat/report.hpp"
#include "uqlat/uqcore.hpp"

namespace uqlat {

// Element of the Cartan subalgebra U_q^0 = L[K_lambda].
struct CartanElement {
  std::map<Weight, Scalar> terms;

  static CartanElement one(int rank);
  static CartanElement k(const Weight& lam, Scalar c = Scalar(1));

  bool is_zero() const { return terms.empty(); }
  CartanElement& add_term(const Weight& lam, const Scalar& c);
  CartanElement& operator+=(const CartanElement& o);
  CartanElement scaled(const Scalar& c) const;
  bool operator==(const CartanElement& o) const { return terms == o.terms; }
};

CartanElement operator*(const CartanElement& a, const CartanElement& b);

// psi_lambda(K_mu) = q^{<lambda, mu>}
Scalar psi(const RootSystem& rs, const QSpec& spec, const Weight& lambda, const Weight& mu);
// psi_lambda extended linearly to U_q^0.
Scalar psi_apply(const RootSystem& rs, const QSpec& spec, const CartanElement& x,
                 const Weight& lambda);

// The finite set M from the residue-finiteness lemma: all products
// prod_i ((q')^{k_i} - 1) over b|k_i| < a (b = v_p(q'-1)), plus 0, reduced
// mod p^a. m_list and fund_list describe the P_gamma instance the set bounds;
// they must have length r.
std::set<mpz_class> residue_classes(const RootSystem& rs, const QSpec& spec, int r,
                                    const std::vector<long>& m_list,
                                    const std::vector<int>& fund_list, int a);

struct SeparatingOptions {
  int grid_bound = 10;       // postcondition sampling grid |coords| <= grid_bound
  int valuation_grid_cap = 6;  // cap on the residue level of the exact-N search
};

// An element of U_q^0 integral on P, vanishing on X and equal to 1 at lambda
// (X finite, lambda outside X). Implements the constructive proof:
// valuation-normalised product of (K_{w_i} - value) factors, then repeated
// application of g = pi^{-1} prod_{v in V}(t - v) with V a residue
// transversal obtained from residue_classes.
CartanElement separating_element(const RootSystem& rs, const QSpec& spec,
                                 const std::vector<Weight>& X, const Weight& lambda,
                                 const SeparatingOptions& opts = {});

// Number of multisets of positive roots summing to mu (root coordinates).
long kostant(const RootSystem& rs, const std::vector<int>& mu);

// dim M(lambda)_mu = #{r : lambda - sum r_j beta_j = mu}
long verma_weight_dim(const UqContext& ctx, const Weight& lambda, const Weight& mu);

// Vector in the Verma module M(lambda): finite combination of F^r v_lambda.
struct VermaElement {
  CtxPtr ctx;
  Weight highest_weight;
  std::map<std::vector<int>, Scalar> terms;

  VermaElement() = default;
  VermaElement(CtxPtr c, Weight hw) : ctx(std::move(c)), highest_weight(std::move(hw)) {}
  static VermaElement highest(CtxPtr c, Weight hw);  // v_lambda

  bool is_zero() const { return terms.empty(); }
  VermaElement& add_term(const std::vector<int>& r, const Scalar& c);
  VermaElement& operator+=(const VermaElement& o);
  VermaElement& operator-=(const VermaElement& o);
  VermaElement scaled(const Scalar& c) const;
  bool operator==(const VermaElement& o) const {
    return highest_weight == o.highest_weight && terms == o.terms;
  }
};

VermaElement verma_apply(const AlgebraElement& u, const VermaElement& v);

// All F-exponent vectors r with sum r_j beta_j = nu (root coordinates).
std::vector<std::vector<int>> verma_basis(const UqContext& ctx, const std::vector<int>& nu);

// Basis of {v in M(lambda)_mu : E_i v = 0 for all i}, by an exact null-space
// computation of the stacked E_i-action matrices.
std::vector<VermaElement> maximal_vectors(CtxPtr ctx, const Weight& lambda,
                                          const Weight& mu, long dim_cap = 4096);

struct IrreducibilityResult {
  bool no_maximal_vector_within_depth = false;  // search verdict at the depth
  bool criterion = false;  // <lambda+rho, beta^vee> not in {1,2,...} for all beta > 0
  std::optional<long> witness_depth;  // ht(k beta) for the smallest criterion witness
};

IrreducibilityResult verma_irreducible(CtxPtr ctx, const Weight& lambda, int depth_bound);

// chi_lambda = chi_mu iff the dot orbits coincide.
bool central_char_equal(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// C_q = FE + (q K^2 + q^{-1} K^{-2}) / (q - q^{-1})^2 with K = K_w (A1 only).
AlgebraElement casimir_sl2(CtxPtr ctx);

// Eigenvalue of C_q on the highest weight vector of M(n w).
Scalar casimir_eigenvalue(CtxPtr ctx, long n);

// Center-of-U_n checks for sl2: p^{2n} C_q in U_n for 2m <= n <= n_max, and
// coefficient bounds v_p(c_i) >= 2ni on random central polynomials, via
// leading-monomial extraction; includes the constructed negative case z = C_q.
Report verify_sl2_center(CtxPtr ctx, long n_max, int deg_max, int samples, std::uint64_t seed);

}  // namespace uqlat
