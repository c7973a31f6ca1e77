#include "kstab/blowup.hpp"

#include "kstab/errors.hpp"

namespace kstab {

long WeightedBlowupData::dim() const {
  return static_cast<long>(nvars()) - static_cast<long>(eq_mults.size());
}

void WeightedBlowupData::validate() const {
  if (weights.size() == 0) throw PreconditionError("no weights");
  for (long m : eq_mults) {
    if (m < 1) throw PreconditionError("weighted multiplicities must be >= 1");
  }
  if (dim() < 0) throw PreconditionError("more equations than variables");
}

Rational log_discrepancy(const WeightedBlowupData& data) {
  data.validate();
  long a = data.weights.sum();
  for (long m : data.eq_mults) a -= m;
  if (a <= 0) {
    throw DomainError("valuation not klt-admissible as computed (A <= 0)");
  }
  return a;
}

Rational monomial_valuation_volume(const WeightedBlowupData& data) {
  data.validate();
  Integer num = 1;
  Integer den = 1;
  for (long m : data.eq_mults) num *= m;
  for (long w : data.weights.values()) den *= w;
  return Rational(num, den);
}

Rational tau_from_volume(const Rational& V, const Rational& volF, int n) {
  if (V.sign() <= 0 || volF.sign() <= 0 || n < 1) {
    throw PreconditionError("tau needs V > 0, volF > 0 and n >= 1");
  }
  auto root = exact_root(V / volF, static_cast<unsigned long>(n));
  if (!root) throw DomainError("V/volF is not an exact n-th power");
  return *root;
}

Rational vol_curve(const Rational& V, const Rational& tau, int n,
                   const Rational& t) {
  if (t.sign() < 0 || t > tau) throw DomainError("t outside [0, tau]");
  return V * (Rational(1) - pow(t / tau, n));
}

Rational beta_invariant(const Rational& A, const Rational& tau, int n) {
  return A - Rational(n) * tau / Rational(n + 1);
}

Rational normalized_volume(const Rational& A, const Rational& volF, int n) {
  if (A.sign() <= 0 || volF.sign() <= 0) {
    throw PreconditionError("normalized volume needs A > 0 and volF > 0");
  }
  return pow(A, n) * volF;
}

Rational pair_log_discrepancy(const WeightVector& w,
                              const std::vector<BoundaryComponent>& boundary) {
  Rational a = w.sum();
  for (const auto& b : boundary) {
    if (b.coeff.sign() < 0) {
      throw PreconditionError("boundary coefficients must be non-negative");
    }
    a -= b.coeff * Rational(b.weighted_mult);
  }
  return a;
}

WeightedBlowupData family_blowup(const Family& family) {
  const long n = family.n;
  if (n < 1) throw PreconditionError("family dimension must be positive");
  if (family.kind == Family::Kind::kX) {
    std::vector<long> w(static_cast<std::size_t>(n), n + 1);
    w.push_back(n);
    return {WeightVector(std::move(w)), {n * (n + 1)}};
  }
  const long e = family.e;
  if (e < 1 || e > n) throw PreconditionError("Y family needs 1 <= e <= n");
  const long top = n + 2 - e;
  std::vector<long> w(static_cast<std::size_t>(n + 1), top);
  w.push_back(top - 1);
  return {WeightVector(std::move(w)), {e * top, (top - 1) * top}};
}

Rational family_anticanonical_volume(const Family& family) {
  if (family.kind == Family::Kind::kX) return family.n + 1;
  return Rational(family.e) * Rational(family.n + 2 - family.e);
}

std::string family_range_violation(const Family& family) {
  const int n = family.n;
  if (family.kind == Family::Kind::kX) {
    if (n == 4 || n >= 7) return {};
    return "X family requires n = 4 or n >= 7";
  }
  const int e = family.e;
  if (e < 2) return "Y family requires e >= 2";
  if (n < 10 + e * e) {
    return "Y family requires n >= 10 + e^2 (n >= " + std::to_string(10 + e * e) +
           ")";
  }
  return {};
}

KollarInvariants family_invariants(const Family& family) {
  if (auto why = family_range_violation(family); !why.empty()) {
    throw DomainError(why);
  }
  const int n = family.n;
  const WeightedBlowupData data = family_blowup(family);
  KollarInvariants inv;
  inv.A = log_discrepancy(data);
  inv.volF = monomial_valuation_volume(data);
  inv.V = family_anticanonical_volume(family);
  inv.tau = tau_from_volume(inv.V, inv.volF, n);
  inv.eps = inv.tau;
  inv.beta = beta_invariant(inv.A, inv.tau, n);
  inv.nvol = normalized_volume(inv.A, inv.volF, n);
  // The Kollar component computes alpha: alpha = A / tau.
  inv.alpha = inv.A / inv.tau;
  return inv;
}

}  // namespace kstab
