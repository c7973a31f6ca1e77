#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/slopes.hpp"
#include "kstab/symcore/rational.hpp"

namespace kstab {

enum class LctMethod {
  kGeneralSlope,
  kCyCompleteIntersection,
  kHypersurfacePukhlikov,
  kLargeIndex,
  kModerateDegree,
  kLowDegree,
  kCited,
};

std::string to_string(LctMethod method);

struct Hypothesis {
  enum class Status { kSatisfied, kViolated, kAssumed };
  std::string condition;
  Status status;
};

std::string to_string(Hypothesis::Status status);

/// Lower bound for lct(X; |H|_Q) together with the hypotheses it rests on.
/// `value` is empty ("not applicable") exactly when a hypothesis is violated.
/// Genericity conditions that cannot be certified are recorded as assumed.
struct LctBound {
  LctMethod method;
  std::optional<Rational> value;
  std::vector<Hypothesis> hypotheses;
  /// Slope index for general-slope bounds; strong-regularity level for the
  /// large-degree hypersurface bound.
  std::optional<int> m;
  /// Dimension from which the large-degree hypersurface bound equals 1.
  std::optional<long> n0;

  bool applicable() const { return value.has_value(); }
};

/// min{1, (2 / deg X) * prod_{i != m} beta_i} assuming (m-1)-strong
/// P-regularity. Throws PreconditionError when beta_m == 1.
LctBound lct_lower_bound_general(
    const CIProfile& profile, int m,
    Arrangement arrangement = Arrangement::kLargestQuadraticFirst);

/// Calabi-Yau complete intersection with n >= 2r+3 and d_r >= 12: bound 1.
LctBound lct_bound_cy_ci(const CIProfile& profile);

/// General hypersurface of degree d >= n+1 in P^{n+1}, n >= 5:
/// min{1, 3(n-1)/(2d)}, which is always >= (n+1)/d.
LctBound lct_bound_hypersurface(int n, int d);

/// General degree-n hypersurface in P^{n-1}: at least (n-1)/n for n = 4 or
/// n >= 7.
LctBound lct_bound_cy_hypersurface(int n);

/// Fano complete intersection of index s >= r + 1: lct = 1.
LctBound lct_large_index(const CIProfile& profile);

/// General hypersurface of degree d <= (2 - epsilon) n in P^{n+1}. Picks the
/// minimal admissible strong-regularity level m and reports the dimension
/// n0 from which the bound equals 1.
LctBound moderate_degree_bound(int n, int d, const Rational& epsilon);

enum class StabilityKind {
  kKStable,
  kKSemistable,
  kStrictlyKSemistable,
  kKUnstable,
  kInconclusive,
};

std::string to_string(StabilityKind kind);

struct StabilityVerdict {
  StabilityKind kind;
  std::optional<Rational> alpha;
  std::string justification;
};

/// Tian's criterion and its semistable refinement for an n-dimensional
/// Q-Fano variety with the given alpha invariant.
StabilityVerdict tian_verdict(int n, const Rational& alpha, bool smooth);

}  // namespace kstab
