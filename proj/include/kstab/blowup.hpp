#pragma once

#include <string>
#include <vector>

#include "kstab/symcore/multipoly.hpp"
#include "kstab/symcore/rational.hpp"

namespace kstab {

/// Weighted blowup of a complete-intersection singularity at the origin of
/// A^nvars: the weights and the weighted multiplicity of each equation.
struct WeightedBlowupData {
  WeightVector weights;
  std::vector<long> eq_mults;

  std::size_t nvars() const { return weights.size(); }
  /// nvars - #equations
  long dim() const;
  /// Throws PreconditionError on empty data or a multiplicity < 1.
  void validate() const;
};

/// A = sum(w) - sum(eq_mults). Throws DomainError when A <= 0.
Rational log_discrepancy(const WeightedBlowupData& data);

/// prod(eq_mults) / prod(w), the volume of the monomial valuation.
Rational monomial_valuation_volume(const WeightedBlowupData& data);

/// The positive rational tau with tau^n * volF == V. Throws DomainError
/// when V/volF is not an exact n-th power.
Rational tau_from_volume(const Rational& V, const Rational& volF, int n);

/// V * (1 - (t/tau)^n) for 0 <= t <= tau; DomainError outside.
Rational vol_curve(const Rational& V, const Rational& tau, int n,
                   const Rational& t);

/// beta per unit volume under the pure-power volume curve:
/// A - (1/V) * int_0^tau vol dt = A - n tau / (n+1).
Rational beta_invariant(const Rational& A, const Rational& tau, int n);

/// A^n * volF
Rational normalized_volume(const Rational& A, const Rational& volF, int n);

struct BoundaryComponent {
  Rational coeff;
  long weighted_mult;
};

/// sum(w) - sum(coeff * weighted_mult): the log discrepancy of the exceptional
/// divisor with respect to the pair. Negative means the pair is not lc.
Rational pair_log_discrepancy(const WeightVector& w,
                              const std::vector<BoundaryComponent>& boundary);

/// The two families: X(n) is x0*f + g = 0 in P^{n+1} (degree n+1), Y(n, e)
/// is f = g + x_{n+2} h = 0 in P^{n+2} with deg f = e.
struct Family {
  enum class Kind { kX, kY };
  Kind kind;
  int n;
  int e = 0;

  static Family x(int n) { return {Kind::kX, n, 0}; }
  static Family y(int n, int e) { return {Kind::kY, n, e}; }
};

/// Weighted blowup data of the distinguished singular point.
/// X: weights (n+1 x n, n) with multiplicity n(n+1);
/// Y: weights (n+2-e x (n+1), n+1-e) with multiplicities
///    e(n+2-e) and (n+1-e)(n+2-e).
WeightedBlowupData family_blowup(const Family& family);

/// (-K)^n of the family: n+1 for X, e(n+2-e) for Y.
Rational family_anticanonical_volume(const Family& family);

struct KollarInvariants {
  Rational A;
  Rational tau;
  /// Seshadri constant; set to tau from base-point-freeness of the
  /// relevant linear system (not re-derived here).
  Rational eps;
  Rational V;
  Rational volF;
  /// Per unit volume: A - n tau / (n+1). The un-normalized beta is V times
  /// this.
  Rational beta;
  Rational nvol;
  /// A / tau: n/(n+1) for X, 1 - 1/(n+2-e) for Y.
  Rational alpha;
};

/// Assembles all invariants. Throws DomainError unless n = 4 or n >= 7 (X),
/// resp. e >= 2 and n >= 10 + e^2 (Y).
KollarInvariants family_invariants(const Family& family);

/// Checks the admissible parameter range without throwing; the message
/// names the violated hypothesis, empty when admissible.
std::string family_range_violation(const Family& family);

}  // namespace kstab
