#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace kstab {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq. Every operation canonicalizes, so two
/// equal rationals always have identical numerator and denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : q_(to_integer(value)) {}  // NOLINT

  Rational(const Integer& value) : q_(value) {}  // NOLINT

  /// Throws DomainError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" (optional leading sign). Throws ParseError.
  static Rational parse(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  /// Largest integer not exceeding the value (rounds toward -inf).
  Integer floor() const;
  Integer ceil() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  template <std::integral T>
  static Integer to_integer(T value) {
    if constexpr (std::is_signed_v<T>) {
      return Integer(static_cast<long>(value));
    } else {
      return Integer(static_cast<unsigned long>(value));
    }
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// r^e for any integer exponent; negative exponents require r != 0.
Rational pow(const Rational& r, long e);

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// The positive rational t with t^n == r, if one exists (r > 0, n >= 1).
std::optional<Rational> exact_root(const Rational& r, unsigned long n);

}  // namespace kstab
