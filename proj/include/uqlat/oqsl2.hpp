#pragma once

#include <map>
#include <string>
#include <utility>

#include "uqlat/lattice.hpp"
#include "uqlat/rng.hpp"
#include "uqlat/scalar.hpp"

namespace uqlat {

// Basis monomial of O_q(SL2): a^l b^m c^s (t = 0) or b^m c^s d^t (l = 0,
// t > 0). a and d never coexist.
struct OqMonomial {
  int l = 0, m = 0, s = 0, t = 0;

  static OqMonomial one() { return {}; }
  bool valid() const { return l >= 0 && m >= 0 && s >= 0 && t >= 0 && (l == 0 || t == 0); }
  long degree() const { return static_cast<long>(l) + m + s + t; }

  bool operator==(const OqMonomial&) const = default;
  auto operator<=>(const OqMonomial&) const = default;

  std::string str() const;  // "a^2*b" etc; "1" for the unit
};

struct OqElement {
  std::map<OqMonomial, Scalar> terms;

  static OqElement zero() { return {}; }
  static OqElement one() { return single(OqMonomial::one()); }
  static OqElement single(OqMonomial mono, Scalar c = Scalar(1));

  bool is_zero() const { return terms.empty(); }
  OqElement& add_term(const OqMonomial& mono, const Scalar& c);
  OqElement& operator+=(const OqElement& o);
  OqElement& operator-=(const OqElement& o);
  OqElement scaled(const Scalar& c) const;
  bool operator==(const OqElement& o) const { return terms == o.terms; }

  std::string str() const;
};

struct OqTensor {
  std::map<std::pair<OqMonomial, OqMonomial>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  OqTensor& add_term(const OqMonomial& a, const OqMonomial& b, const Scalar& c);
  bool operator==(const OqTensor& o) const { return terms == o.terms; }
};

// Words over the alphabet {a, b, c, d}.
using OqWord = std::string;

// Normal form over the basis S, by ordered letter multiplication.
OqElement oq_normal_form(const QSpec& spec, const OqWord& word);

// Same normal form computed by local rewriting with a randomized redex
// choice; used to exercise confluence. Falls back to a deterministic
// leftmost strategy when rng is null.
OqElement oq_normal_form_local(const QSpec& spec, const OqWord& word, Rng* rng);

OqElement oq_multiply(const QSpec& spec, const OqElement& x, const OqElement& y);

OqTensor oq_coproduct(const QSpec& spec, const OqElement& x);
Scalar oq_counit(const QSpec& spec, const OqElement& x);
OqElement oq_antipode(const QSpec& spec, const OqElement& x);

// max over terms of n * deg - v_p(coeff); the deformation grades every
// generator with degree 1.
NormValue oq_log_norm(const QSpec& spec, const OqElement& x, long n);

}  // namespace uqlat
