#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqlat/scalar.hpp"

namespace uqlat {

// Element of the weight lattice P, in fundamental-weight coordinates.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(int k) const;

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  std::string str() const;  // "[1,0]"
};

// Element of the root lattice Q, in simple-root coordinates. Positive roots
// have all coordinates >= 0.
struct Root {
  std::vector<int> a;

  Root() = default;
  explicit Root(std::vector<int> coords) : a(std::move(coords)) {}
  static Root zero(int rank) { return Root(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(a.size()); }
  int height() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;

  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;

  std::string str() const;
};

// Word in the simple reflections, 1-based letters.
struct ReducedWord {
  std::vector<int> letters;

  ReducedWord() = default;
  explicit ReducedWord(std::vector<int> ls) : letters(std::move(ls)) {}

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  bool operator==(const ReducedWord&) const = default;

  std::string str() const;  // "(1,2,1)"
};

// Cartan data for an irreducible simple type of bounded rank, together with
// the normalised W-invariant form. All pairings are stored scaled by d so
// they stay integral.
class RootSystem {
 public:
  static RootSystem build(char lie_type, int rank, int rank_cap = 4);

  char lie_type = 'A';
  int rank = 1;
  std::vector<std::vector<int>> cartan;      // a_{ij}
  std::vector<int> di;                       // d_i = <a_i,a_i>/2
  std::vector<std::vector<long>> pairing_d;  // d * <w_i, w_j>, symmetric
  int d = 1;
  Weight rho;
  std::vector<Root> positive_roots;  // sorted
  int num_positive = 0;

  std::string type_str() const;  // "A2"

  // All pairings scaled by d.
  long pair_ww_d(const Weight& x, const Weight& y) const;
  long pair_wa_d(const Weight& x, const Root& b) const;
  long pair_aa_d(const Root& b, const Root& g) const;

  Weight alpha_as_weight(int i) const;  // column i of the Cartan matrix
  Weight fundamental(int i) const;
  Weight root_to_weight(const Root& b) const;
  // Exact Q-membership test: coordinates of x in the simple roots, if integral.
  std::optional<Root> weight_to_root(const Weight& x) const;

  Weight simple_reflection(int i, const Weight& x) const;
  Root simple_reflection(int i, const Root& b) const;

  // Word acts right-to-left: (s_{i_1}...s_{i_k})(x) = s_{i_1}(...(s_{i_k}(x))).
  Weight apply_word(const ReducedWord& w, const Weight& x) const;
  Root apply_word(const ReducedWord& w, const Root& b) const;

  // Coxeter length of the product, via counting inverted positive roots.
  int coxeter_length(const ReducedWord& w) const;
  bool is_reduced(const ReducedWord& w) const;

  // Deterministic reduced expression for w_0 by greedy descent on rho.
  ReducedWord longest_word() const;

  // beta_j = s_{i_1}...s_{i_{j-1}}(alpha_{i_j}); validates reducedness, length
  // N and set equality with the positive roots.
  std::vector<Root> beta_sequence(const ReducedWord& w) const;

  // w . x = w(x + rho) - rho
  Weight dot_action(const ReducedWord& w, const Weight& x) const;

  // Unique dot-orbit member mu with mu + rho dominant, plus a word with
  // dot_action(word, x) = mu.
  std::pair<Weight, ReducedWord> dominant_representative(const Weight& x) const;

 private:
  RootSystem() = default;
};

}  // namespace uqlat
