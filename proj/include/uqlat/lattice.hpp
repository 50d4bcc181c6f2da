#pragma once

#include "uqlat/report.hpp"
#include "uqlat/uqcore.hpp"

namespace uqlat {

// Gauge norm value p^{log_p}; the zero element has norm 0 (log = -infinity).
struct NormValue {
  bool zero = false;
  long log_p = 0;

  static NormValue of_zero() { return {true, 0}; }
  static NormValue of_log(long l) { return {false, l}; }

  bool operator==(const NormValue&) const = default;
  bool operator<=(const NormValue& o) const {
    if (zero) return true;
    if (o.zero) return false;
    return log_p <= o.log_p;
  }
  std::string str() const { return zero ? "0" : "p^" + std::to_string(log_p); }
};

// ht(M) = sum (r_j + s_j) ht(beta_j)
long height(const UqContext& ctx, const PBWMonomial& m);

// Least m with pi^{2m} / (q_i - q_i^{-1}) integral for every i; the
// deformation level above which the PBW description of U_n is valid.
int m_threshold(const UqContext& ctx);

// log_p of ||x||_n = sup |pi^{-n ht(M)} a_M|; requires n >= m_threshold.
NormValue log_norm(const AlgebraElement& x, long n);

// x in U_n, i.e. v_p(a_M) >= n ht(M) for every coefficient.
bool in_lattice(const AlgebraElement& x, long n);

// Minimal valuation slack min_M (v_p(a_M) - n ht(M)); nullopt for x = 0.
std::optional<long> lattice_slack(const AlgebraElement& x, long n);

// Two-sided desk check of the PBW lattice theorem at level n:
// (a) every pi^{n ht(beta_j)} E_{beta_j} is an R-combination of products of
//     the generators pi^n E_i (word coefficients integral, word lengths exact);
// (b) every product of at most height_bound generators pi^n E_i, pi^n F_i,
//     K_{+-w_i} has PBW coefficients with v_p >= n ht(M).
// check_multiplicities additionally re-verifies the multiplicity law per word.
Report verify_pbw_lattice(CtxPtr ctx, long n, int height_bound,
                          bool check_multiplicities = false);

// Mutual R-span containment of the PBW monomial lattices of two reduced
// expressions of w_0, up to the given height.
Report pbw_word_independence(const RootSystem& rs, const QSpec& spec,
                             const ReducedWord& word1, const ReducedWord& word2,
                             int height_bound);

}  // namespace uqlat
