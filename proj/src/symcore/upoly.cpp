#include "kstab/symcore/upoly.hpp"

#include <algorithm>

#include "kstab/errors.hpp"

namespace kstab {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::linear(const Rational& shift) { return UPoly({shift, 1}); }

UPoly UPoly::binomial_in_k(long shift, long n) {
  if (n < 0) return UPoly();
  UPoly out = constant(1);
  Integer factorial = 1;
  for (long i = 0; i < n; ++i) {
    out = out * linear(shift - i);
    factorial *= i + 1;
  }
  return out * (Rational(1) / Rational(factorial));
}

UPoly UPoly::interpolate(std::span<const Rational> xs,
                         std::span<const Rational> ys) {
  if (xs.size() != ys.size()) {
    throw PreconditionError("interpolation needs matching abscissae/values");
  }
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (gap.is_zero()) throw DomainError("repeated interpolation abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  UPoly out;
  UPoly basis = constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    out += basis * dd[i];
    basis = basis * linear(-xs[i]);
  }
  return out;
}

Rational UPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational UPoly::evaluate(const Rational& k) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

}  // namespace kstab
