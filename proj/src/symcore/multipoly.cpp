#include "kstab/symcore/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kstab/errors.hpp"

namespace kstab {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

long Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0L);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out[i] = a[i] - b[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

// ---- WeightVector -----------------------------------------------------------

WeightVector::WeightVector(std::vector<long> weights) : w_(std::move(weights)) {
  for (long w : w_) {
    if (w < 1) throw PreconditionError("weights must be positive integers");
  }
}

long WeightVector::sum() const {
  return std::accumulate(w_.begin(), w_.end(), 0L);
}

long WeightVector::weight(const Monomial& m) const {
  if (m.nvars() != w_.size()) {
    throw PreconditionError("weight vector length does not match variables");
  }
  long total = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    total += w_[i] * static_cast<long>(m[i]);
  }
  return total;
}

// ---- MonomialOrder ----------------------------------------------------------

MonomialOrder MonomialOrder::weighted(WeightVector w) {
  MonomialOrder order;
  order.kind_ = Kind::kWeightGrevlex;
  order.weights_ = std::move(w);
  return order;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::kWeightGrevlex) {
    const long wa = weights_.weight(a);
    const long wb = weights_.weight(b);
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  const long da = a.total_degree();
  const long db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the monomial with the smaller last differing exponent wins.
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  return compare(a, b) < 0;
}

// ---- MultiPoly --------------------------------------------------------------

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  return term(Monomial::variable(nvars, index), 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p(m.nvars());
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) {
    throw PreconditionError("monomial has the wrong number of variables");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

long MultiPoly::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool MultiPoly::is_homogeneous() const {
  long d = -1;
  for (const auto& [m, c] : terms_) {
    const long md = m.total_degree();
    if (d >= 0 && md != d) return false;
    d = md;
  }
  return true;
}

MultiPoly MultiPoly::homogeneous_component(long d) const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() == d) out.terms_.emplace(m, c);
  }
  return out;
}

const Monomial& MultiPoly::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) {
    throw PreconditionError("leading monomial of the zero polynomial");
  }
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return best->first;
}

const Rational& MultiPoly::leading_coefficient(
    const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

MultiPoly MultiPoly::monic(const MonomialOrder& order) const {
  const Rational inv = Rational(1) / leading_coefficient(order);
  return *this * inv;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw PreconditionError("evaluation point has the wrong dimension");
  }
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) value *= pow(point[i], m[i]);
    }
    total += value;
  }
  return total;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) {
    throw PreconditionError("substitution needs one image per variable");
  }
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  // Cache powers per variable; inputs are small.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly product = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      if (m[i] != 0) product = product * cache[m[i]];
    }
    out += product;
  }
  return out;
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw PreconditionError("polynomials live in different rings");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly operator*(const MultiPoly& a, const Monomial& m) {
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) out.terms_.emplace(ma * m, ca);
  return out;
}

MultiPoly pow(const MultiPoly& f, unsigned e) {
  MultiPoly out = MultiPoly::constant(f.nvars(), 1);
  for (unsigned i = 0; i < e; ++i) out = out * f;
  return out;
}

long weighted_order(const MultiPoly& f, const WeightVector& w) {
  if (f.is_zero()) {
    throw DomainError("weighted order of the zero polynomial is undefined");
  }
  if (w.size() != f.nvars()) {
    throw PreconditionError("weight vector length does not match variables");
  }
  long best = std::numeric_limits<long>::max();
  for (const auto& [m, c] : f.terms()) best = std::min(best, w.weight(m));
  return best;
}

}  // namespace kstab
