#include "kstab/symcore/rational.hpp"

#include <ostream>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t slash = text.find('/', pos);
  const std::string_view num_text =
      text.substr(pos, slash == std::string_view::npos ? std::string_view::npos
                                                       : slash - pos);
  if (!is_digits(num_text)) throw ParseError("malformed rational", pos);
  Integer num(std::string(num_text), 10);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) throw ParseError("malformed rational", slash + 1);
    den = Integer(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return out;
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& other) {
  q_ += other.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  q_ -= other.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  q_ *= other.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  q_ /= other.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw DomainError("zero to a negative power");
    return Rational(1) / pow(r, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(),
             static_cast<unsigned long>(e));
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::optional<Rational> exact_root(const Rational& r, unsigned long n) {
  if (n == 0 || r.sign() <= 0) return std::nullopt;
  Integer num, den;
  if (mpz_root(num.get_mpz_t(), r.num().get_mpz_t(), n) == 0) {
    return std::nullopt;
  }
  if (mpz_root(den.get_mpz_t(), r.den().get_mpz_t(), n) == 0) {
    return std::nullopt;
  }
  return Rational(num, den);
}

}  // namespace kstab
