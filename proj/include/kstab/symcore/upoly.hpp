#pragma once

#include <span>
#include <vector>

#include "kstab/symcore/rational.hpp"

namespace kstab {

/// Dense univariate polynomial over Q in one indeterminate k; coeff(i) is
/// the coefficient of k^i. Trailing zeros are trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);
  /// k + shift
  static UPoly linear(const Rational& shift);
  /// The polynomial C(k + shift, n) = (k+shift)(k+shift-1)...(k+shift-n+1)/n!
  /// in k. Agrees with binomial(k + shift, n) whenever k + shift >= 0.
  static UPoly binomial_in_k(long shift, long n);
  /// Unique polynomial of degree < xs.size() through the points (Newton
  /// form, exact). Abscissae must be distinct.
  static UPoly interpolate(std::span<const Rational> xs,
                           std::span<const Rational> ys);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(long i) const;
  Rational evaluate(const Rational& k) const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace kstab
