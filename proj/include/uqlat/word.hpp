#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "uqlat/rootdata.hpp"
#include "uqlat/scalar.hpp"

namespace uqlat {

// One letter of a word in the Chevalley generators: E_i, F_i or K_lambda.
struct Letter {
  enum class Kind : unsigned char { E = 0, F = 1, K = 2 };

  Kind kind = Kind::E;
  int idx = 0;  // 1..rank for E/F, unused for K
  Weight lam;   // K only

  static Letter e(int i) { return Letter{Kind::E, i, Weight{}}; }
  static Letter f(int i) { return Letter{Kind::F, i, Weight{}}; }
  static Letter k(Weight w) { return Letter{Kind::K, 0, std::move(w)}; }

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;

  std::string str() const;
};

using Word = std::vector<Letter>;

std::string word_str(const Word& w);

// Finite linear combination of words; the empty word is 1. Zero coefficients
// are never stored.
struct WordElement {
  std::map<Word, Scalar> terms;

  static WordElement zero() { return {}; }
  static WordElement one() { return single(Word{}); }
  static WordElement single(Word w, Scalar c = Scalar(1));

  bool is_zero() const { return terms.empty(); }

  WordElement& add_term(const Word& w, const Scalar& c);
  WordElement& operator+=(const WordElement& o);
  WordElement& operator-=(const WordElement& o);
  WordElement scaled(const Scalar& c) const;

  bool operator==(const WordElement& o) const { return terms == o.terms; }
};

WordElement operator+(WordElement a, const WordElement& b);
WordElement operator-(WordElement a, const WordElement& b);
// Concatenation product, extended bilinearly.
WordElement operator*(const WordElement& a, const WordElement& b);

// E_i <-> F_i, K_lambda -> K_{-lambda}, applied letterwise.
WordElement omega_words(const WordElement& x);

// Parseable text form ("q"-free; coefficients as rationals).
std::string to_expression(const WordElement& x);

}  // namespace uqlat
