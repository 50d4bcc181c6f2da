#include "uqlat/scalar.hpp"

namespace uqlat {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Scalar Scalar::from_string(const std::string& text) {
  auto slash = text.find('/');
  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(mpz_class(text));
  } else {
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    v = mpq_class(num, den);
  }
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.v_ = -v_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  v_ += o.v_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  v_ -= o.v_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  v_ *= o.v_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
  Scalar r;
  r.v_ = 1 / v_;
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  if (is_zero()) {
    if (e < 0) throw std::invalid_argument("Scalar: negative power of zero");
    return Scalar(0);
  }
  mpz_class num = v_.get_num(), den = v_.get_den();
  if (e < 0) {
    std::swap(num, den);
    e = -e;
    if (sgn(den) < 0) {  // keep denominator positive
      num = -num;
      den = -den;
    }
  }
  mpz_class rn, rd;
  mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Scalar r;
  r.v_ = mpq_class(rn, rd);  // already coprime
  return r;
}

std::optional<long> Scalar::valuation(unsigned long p) const {
  if (!is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
  if (is_zero()) return std::nullopt;
  return valuation_exact(v_.get_num(), p) - valuation_exact(v_.get_den(), p);
}

std::string Scalar::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

long valuation_exact(const mpz_class& z, unsigned long p) {
  if (sgn(z) == 0) throw std::invalid_argument("valuation_exact: zero input");
  mpz_class rest;
  mpz_class pz(static_cast<long>(p));
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

QSpec::QSpec(unsigned long p_, int d_, const Scalar& qprime_)
    : p(p_), d(d_), qprime(qprime_), q(qprime_.pow(d_)) {
  if (!is_prime(p) || p <= 2) throw std::invalid_argument("QSpec: p must be an odd prime");
  if (d < 1) throw std::invalid_argument("QSpec: d must be positive");
  if (qprime.is_zero() || qprime == Scalar(1) || qprime == Scalar(-1))
    throw std::invalid_argument("QSpec: qprime must not be 0 or a root of unity");
  auto v = (qprime - Scalar(1)).valuation(p);
  if (!v || *v < 1)
    throw std::invalid_argument("QSpec: qprime must be congruent to 1 mod p");
}

Scalar qint(long n, const Scalar& t) {
  if (t.is_zero() || t == Scalar(1) || t == Scalar(-1))
    throw std::invalid_argument("qint: t must satisfy t != 0, t^2 != 1");
  return (t.pow(n) - t.pow(-n)) / (t - t.inverse());
}

Scalar qfact(long n, const Scalar& t) {
  if (n < 0) throw std::invalid_argument("qfact: n must be >= 0");
  Scalar r(1);
  for (long k = 2; k <= n; ++k) r *= qint(k, t);
  return r;
}

Scalar qbinom(long n, long i, const Scalar& t) {
  if (i < 0 || n < i) throw std::invalid_argument("qbinom: need n >= i >= 0");
  return qfact(n, t) / (qfact(i, t) * qfact(n - i, t));
}

}  // namespace uqlat
