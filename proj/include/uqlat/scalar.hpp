#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace uqlat {

// Thrown when a configurable cap (height, depth, grid size) is exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check fails. Indicates a bug, not bad
// input; callers must not catch and continue.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Exact rational number. Always stored in lowest terms with positive
// denominator (mpq canonical form).
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}  // NOLINT: implicit by design
  Scalar(long num, long den);
  explicit Scalar(const mpz_class& z) : v_(z) {}
  explicit Scalar(mpq_class q);

  // Accepts "num", "num/den", optional leading '-'.
  static Scalar from_string(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& rat() const { return v_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  Scalar inverse() const;
  // Integer exponent; negative exponents require a nonzero base.
  Scalar pow(long e) const;

  // p-adic valuation v_p(num) - v_p(den); nullopt encodes +infinity (x = 0).
  std::optional<long> valuation(unsigned long p) const;

  std::string str() const;  // canonical "num/den"

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

// v_p of a nonzero integer.
long valuation_exact(const mpz_class& z, unsigned long p);

bool is_prime(unsigned long n);

// The q-specialization. pi = p, and q' = q^{1/d} is a fixed rational with
// q' = 1 (mod p). All q-powers q^{<lambda,mu>} are integer powers of q'.
struct QSpec {
  unsigned long p;
  int d;
  Scalar qprime;  // q^{1/d}
  Scalar q;       // qprime^d

  QSpec(unsigned long p_, int d_, const Scalar& qprime_);
  static QSpec standard(unsigned long p, int d) {
    return QSpec(p, d, Scalar(1 + static_cast<long>(p)));
  }

  Scalar qp_pow(long k) const { return qprime.pow(k); }
  // q_i = q^{d_i} = qprime^{d*d_i}
  Scalar q_i(int di) const { return qprime.pow(static_cast<long>(d) * di); }

  bool operator==(const QSpec& o) const {
    return p == o.p && d == o.d && qprime == o.qprime;
  }
};

// [n]_t = (t^n - t^{-n}) / (t - t^{-1}); requires t != 0, t^2 != 1.
Scalar qint(long n, const Scalar& t);
// [n]_t! for n >= 0.
Scalar qfact(long n, const Scalar& t);
// Balanced Gaussian binomial; requires n >= i >= 0.
Scalar qbinom(long n, long i, const Scalar& t);

}  // namespace uqlat
