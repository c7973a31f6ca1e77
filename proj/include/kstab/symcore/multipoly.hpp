#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kstab/symcore/rational.hpp"

namespace kstab {

/// Exponent vector x^a, one entry per ambient variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  long total_degree() const;
  bool is_one() const { return total_degree() == 0; }
  bool divides(const Monomial& other) const;
  /// True when the monomials share no variable.
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Positive integer weight per variable.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws PreconditionError if any weight is < 1.
  explicit WeightVector(std::vector<long> weights);

  std::size_t size() const { return w_.size(); }
  long operator[](std::size_t i) const { return w_[i]; }
  std::span<const long> values() const { return w_; }
  long sum() const;

  /// w . exponents
  long weight(const Monomial& m) const;

 private:
  std::vector<long> w_;
};

/// Grevlex, or weight-then-grevlex. Both are multiplicative total orders.
class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kWeightGrevlex };

  static MonomialOrder grevlex() { return MonomialOrder(); }
  static MonomialOrder weighted(WeightVector w);

  Kind kind() const { return kind_; }
  const WeightVector& weights() const { return weights_; }

  /// Strict "a < b".
  bool less(const Monomial& a, const Monomial& b) const;
  /// -1, 0, +1
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  Kind kind_ = Kind::kGrevlex;
  WeightVector weights_;
};

/// Sparse multivariate polynomial over Q with no stored zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c*m to the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  /// Maximum total degree; -1 for the zero polynomial.
  long degree() const;
  bool is_homogeneous() const;
  /// Sum of the terms of total degree `d`.
  MultiPoly homogeneous_component(long d) const;

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial(const MonomialOrder& order) const;
  const Rational& leading_coefficient(const MonomialOrder& order) const;
  /// Divides through by the leading coefficient.
  MultiPoly monic(const MonomialOrder& order) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable i by images[i]; all images share an ambient ring.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const Monomial& m);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void check_ring(const MultiPoly& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& f, unsigned e);

/// Weighted multiplicity at the origin: min over terms of w . exponents.
/// Throws DomainError for the zero polynomial.
long weighted_order(const MultiPoly& f, const WeightVector& w);

}  // namespace kstab
