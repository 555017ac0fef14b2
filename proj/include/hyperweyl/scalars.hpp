#ifndef HYPERWEYL_SCALARS_HPP
#define HYPERWEYL_SCALARS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperweyl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a rational cannot be reduced modulo p (denominator divisible by p).
class NotIntegralError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when scalars from different fields are combined.
class FieldMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Element of the prime field F_p. The residue is always kept in [0, p).
class Residue {
public:
  Residue() = default;
  Residue(std::int64_t value, std::uint32_t prime) : prime_(prime) {
    if (prime < 2) throw std::invalid_argument("Residue: modulus must be a prime >= 2");
    auto r = value % static_cast<std::int64_t>(prime);
    if (r < 0) r += prime;
    value_ = static_cast<std::uint32_t>(r);
  }
  Residue(const Integer& value, std::uint32_t prime) : prime_(prime) {
    if (prime < 2) throw std::invalid_argument("Residue: modulus must be a prime >= 2");
    Integer r = value % prime;
    if (r < 0) r += prime;
    value_ = static_cast<std::uint32_t>(r.get_ui());
  }

  [[nodiscard]] std::uint32_t value() const noexcept { return value_; }
  [[nodiscard]] std::uint32_t prime() const noexcept { return prime_; }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

  Residue& operator+=(const Residue& o) {
    check(o);
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + o.value_) % prime_);
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    check(o);
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + prime_ - o.value_) % prime_);
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    check(o);
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * o.value_) % prime_);
    return *this;
  }
  Residue& operator/=(const Residue& o) {
    check(o);
    if (o.value_ == 0) throw std::domain_error("Residue: division by zero");
    return *this *= o.inverse();
  }
  [[nodiscard]] Residue inverse() const {
    if (value_ == 0) throw std::domain_error("Residue: zero has no inverse");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = value_, e = prime_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % prime_;
      base = base * base % prime_;
      e >>= 1;
    }
    Residue r;
    r.value_ = static_cast<std::uint32_t>(result);
    r.prime_ = prime_;
    return r;
  }
  Residue operator-() const {
    Residue r = *this;
    r.value_ = value_ == 0 ? 0 : prime_ - value_;
    return r;
  }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.prime_ == b.prime_;
  }

private:
  void check(const Residue& o) const {
    if (o.prime_ != prime_)
      throw FieldMismatchError("Residue: mixing F_" + std::to_string(prime_) + " and F_" +
                               std::to_string(o.prime_));
  }

  std::uint32_t value_ = 0;
  std::uint32_t prime_ = 2;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Residue& r) { return r.is_zero(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, exact for any integer n.
inline Integer rational_binomial(const Integer& n, unsigned long k) {
  Integer num = 1, den = 1;
  for (unsigned long j = 0; j < k; ++j) {
    num *= n - j;
    den *= j + 1;
  }
  return num / den;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// Residue of a p-integral rational.
inline Residue reduce_mod_p(const Rational& q, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_mod_p: " + std::to_string(p) + " is not prime");
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), p))
    throw NotIntegralError("reduce_mod_p: " + q.get_str() + " is not " + std::to_string(p) + "-integral");
  return Residue(q.get_num(), p) / Residue(q.get_den(), p);
}

/// num / den in lowest terms.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "3", "-7/2", " 4/6 " into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational");
  const std::string t = text.substr(first, last - first + 1);
  const auto slash = t.find('/');
  auto integer = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size() || part.find_first_not_of("0123456789", i) != std::string::npos)
      throw std::invalid_argument("cannot parse rational '" + text + "'");
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(integer(t));
  const Integer num = integer(t.substr(0, slash));
  const Integer den = integer(t.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Field selector: characteristic 0 means Q, otherwise F_p.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  [[nodiscard]] bool is_rational() const noexcept { return characteristic == 0; }
  [[nodiscard]] std::string name() const {
    return characteristic == 0 ? "Q" : "F_" + std::to_string(characteristic);
  }
};

/// Maps integers and rationals into a concrete field value type.
template <class V>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational from(const Rational& q, const FieldSpec&) { return q; }
  static Rational from(const Integer& z, const FieldSpec&) { return Rational(z); }
  static std::string str(const Rational& q) { return q.get_str(); }
};

template <>
struct FieldOps<Residue> {
  static Residue from(const Rational& q, const FieldSpec& f) { return reduce_mod_p(q, f.characteristic); }
  static Residue from(const Integer& z, const FieldSpec& f) { return Residue(z, f.characteristic); }
  static std::string str(const Residue& r) { return std::to_string(r.value()); }
};

}  // namespace hyperweyl

#endif
