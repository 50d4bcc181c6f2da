#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqlat/word.hpp"

namespace uqlat {

// Ordered monomial F^r K_lambda E^s in the root vectors of a fixed reduced
// expression of w_0. r and s are indexed by the beta-sequence.
struct PBWMonomial {
  std::vector<int> r;
  Weight lam;
  std::vector<int> s;

  static PBWMonomial unit(int N, int rank) {
    return PBWMonomial{std::vector<int>(N, 0), Weight::zero(rank), std::vector<int>(N, 0)};
  }
  bool is_unit() const;
  bool is_cartan() const;  // r = s = 0

  bool operator==(const PBWMonomial&) const = default;

  std::string str() const;
};

// Reverse-lexicographic order on the multidegree (r_1..r_N, s_1..s_N),
// scanning from the last coordinate; ties broken by lambda lexicographically.
struct PBWOrder {
  bool operator()(const PBWMonomial& x, const PBWMonomial& y) const;
};

class UqContext;
using CtxPtr = std::shared_ptr<const UqContext>;

// Element of U_q in canonical PBW coordinates. Zero coefficients never stored.
struct AlgebraElement {
  CtxPtr ctx;
  std::map<PBWMonomial, Scalar, PBWOrder> terms;

  AlgebraElement() = default;
  explicit AlgebraElement(CtxPtr c) : ctx(std::move(c)) {}

  bool is_zero() const { return terms.empty(); }

  AlgebraElement& add_term(const PBWMonomial& m, const Scalar& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement scaled(const Scalar& c) const;

  bool operator==(const AlgebraElement& o) const { return terms == o.terms; }

  std::string str() const;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);

struct PBWPairOrder {
  bool operator()(const std::pair<PBWMonomial, PBWMonomial>& a,
                  const std::pair<PBWMonomial, PBWMonomial>& b) const {
    PBWOrder lt;
    if (lt(a.first, b.first)) return true;
    if (lt(b.first, a.first)) return false;
    return lt(a.second, b.second);
  }
};

// Element of U_q (x) U_q with both legs in PBW form.
struct TensorElement {
  CtxPtr ctx;
  std::map<std::pair<PBWMonomial, PBWMonomial>, Scalar, PBWPairOrder> terms;

  TensorElement() = default;
  explicit TensorElement(CtxPtr c) : ctx(std::move(c)) {}

  bool is_zero() const { return terms.empty(); }
  TensorElement& add_term(const PBWMonomial& a, const PBWMonomial& b, const Scalar& c);
  bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

// Session context: root system, q-specialization, the fixed reduced
// expression of w_0 and its beta-sequence, plus the memo caches of the
// straightening engine. Immutable after construction; the caches are
// mutex-guarded memo tables.
class UqContext {
 public:
  static CtxPtr create(RootSystem rs, QSpec spec,
                       std::optional<ReducedWord> word_override = std::nullopt,
                       int height_cap = 12);
  ~UqContext();

  RootSystem rs;
  QSpec spec;
  ReducedWord w0;
  std::vector<Root> beta;
  std::vector<int> beta_ht;
  int N = 0;
  int height_cap = 12;

  int beta_index_of_simple(int i) const;  // j with beta_j = alpha_i
  long pair_w_alpha_d(const Weight& mu, int i) const;  // d * <mu, alpha_i>
  Scalar q_i(int i) const;                             // q^{d_i}, 1-based i
  const Scalar& ef_denom(int i) const;                 // q_i - q_i^{-1}

  // Word expansion of the root vector E_{beta_j} (1-based j); pure E-letters,
  // cached. Every word carries the multiplicity vector of beta_j.
  const WordElement& root_vector_words(int j) const;
  // omega-image of the above: word expansion of F_{beta_j}.
  const WordElement& root_vector_words_f(int j) const;

  // A word rewritten into the form (F-block, K_lambda, E-block) using only
  // the K-commutation and [E,F] relations.
  struct SortedTriple {
    std::vector<int> f;
    Weight lam;
    std::vector<int> e;
    bool operator==(const SortedTriple&) const = default;
    auto operator<=>(const SortedTriple&) const = default;
  };
  const std::map<SortedTriple, Scalar>& straighten(const Word& w) const;

  // PBW coordinates of a pure E-word / F-word (1-based letter indices).
  const std::vector<std::pair<std::vector<int>, Scalar>>& pbw_of_eword(
      const std::vector<int>& e) const;
  std::vector<std::pair<std::vector<int>, Scalar>> pbw_of_fword(
      const std::vector<int>& f) const;

  // Enumerates s in N^N with sum s_j beta_j = mu (root coordinates).
  std::vector<std::vector<int>> exponents_of_weight(const std::vector<int>& mu) const;

 private:
  UqContext(RootSystem rs_, QSpec spec_);

  struct WeightSolver;
  const WeightSolver& solver_for(const std::vector<int>& mult) const;

  mutable std::mutex rv_mutex_;
  mutable std::vector<std::unique_ptr<WordElement>> root_vectors_;
  mutable std::vector<std::unique_ptr<WordElement>> root_vectors_f_;
  mutable std::mutex straighten_mutex_;
  mutable std::map<Word, std::map<SortedTriple, Scalar>> straighten_cache_;
  mutable std::mutex solver_mutex_;
  mutable std::map<std::vector<int>, std::unique_ptr<WeightSolver>> solvers_;
  mutable std::mutex eword_mutex_;
  mutable std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, Scalar>>>
      eword_cache_;
  mutable std::vector<Scalar> ef_denoms_;
};

// Element constructors.
AlgebraElement make_unit(CtxPtr ctx);
AlgebraElement make_monomial(CtxPtr ctx, PBWMonomial m, Scalar c = Scalar(1));
AlgebraElement make_E(CtxPtr ctx, int i);
AlgebraElement make_F(CtxPtr ctx, int i);
AlgebraElement make_K(CtxPtr ctx, const Weight& lam);

// The quantum Serre relator in the E's for the ordered pair (i, j).
WordElement serre_element(const UqContext& ctx, int i, int j);

// Canonical PBW form of a word element.
AlgebraElement word_to_pbw(CtxPtr ctx, const WordElement& x);
// Pure expansion of PBW monomials into words; no reduction.
WordElement pbw_to_word(const UqContext& ctx, const AlgebraElement& x);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement omega(const AlgebraElement& x);

TensorElement coproduct(const AlgebraElement& x);
Scalar counit(const AlgebraElement& x);
AlgebraElement antipode(const AlgebraElement& x);

// Q-weight of a monomial (root coordinates): sum s_j beta_j - sum r_j beta_j.
std::vector<int> monomial_q_weight(const UqContext& ctx, const PBWMonomial& m);
std::map<std::vector<int>, AlgebraElement> weight_components(const AlgebraElement& x);

// ht(M) = sum (r_j + s_j) ht(beta_j)
long monomial_height(const UqContext& ctx, const PBWMonomial& m);
long max_height(const AlgebraElement& x);

}  // namespace uqlat
