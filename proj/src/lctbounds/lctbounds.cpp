#include "kstab/lctbounds.hpp"

#include <stdexcept>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

using Status = Hypothesis::Status;

Hypothesis check(std::string condition, bool ok) {
  return {std::move(condition), ok ? Status::kSatisfied : Status::kViolated};
}

Hypothesis assumed(std::string condition) {
  return {std::move(condition), Status::kAssumed};
}

bool any_violated(const std::vector<Hypothesis>& hs) {
  for (const auto& h : hs) {
    if (h.status == Status::kViolated) return true;
  }
  return false;
}

Rational cap(const Rational& v) { return min(Rational(1), v); }

}  // namespace

std::string to_string(LctMethod method) {
  switch (method) {
    case LctMethod::kGeneralSlope: return "general-slope";
    case LctMethod::kCyCompleteIntersection: return "cy-ci";
    case LctMethod::kHypersurfacePukhlikov: return "hypersurface-pukhlikov";
    case LctMethod::kLargeIndex: return "large-index";
    case LctMethod::kModerateDegree: return "moderate-degree";
    case LctMethod::kLowDegree: return "low-degree";
    case LctMethod::kCited: return "cited";
  }
  return "unknown";
}

std::string to_string(Hypothesis::Status status) {
  switch (status) {
    case Status::kSatisfied: return "satisfied";
    case Status::kViolated: return "violated";
    case Status::kAssumed: return "assumed";
  }
  return "unknown";
}

std::string to_string(StabilityKind kind) {
  switch (kind) {
    case StabilityKind::kKStable: return "K-stable";
    case StabilityKind::kKSemistable: return "K-semistable";
    case StabilityKind::kStrictlyKSemistable: return "strictly-K-semistable";
    case StabilityKind::kKUnstable: return "K-unstable";
    case StabilityKind::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

LctBound lct_lower_bound_general(const CIProfile& profile, int m,
                                 Arrangement arrangement) {
  const SlopeSequence seq = build_slope_sequence(profile, arrangement);
  if (!(seq.beta(m) > Rational(1))) {
    throw PreconditionError("lct bound needs beta_m > 1 at the chosen index");
  }
  LctBound bound{LctMethod::kGeneralSlope, std::nullopt, {}, m, std::nullopt};
  bound.hypotheses.push_back(assumed(std::to_string(m - 1) +
                                     "-strong P-regularity of X"));
  bound.value = cap(Rational(2) / Rational(profile.degree_of_x()) *
                    slope_product(seq, m));
  return bound;
}

LctBound lct_bound_cy_ci(const CIProfile& profile) {
  const int n = profile.dim();
  const int r = profile.codim();
  LctBound bound{LctMethod::kCyCompleteIntersection, std::nullopt, {},
                 std::nullopt, std::nullopt};
  bound.hypotheses.push_back(
      check("Calabi-Yau: sum d_i = n + r + 1", profile.is_calabi_yau()));
  bound.hypotheses.push_back(check("n >= 2r + 3", n >= 2 * r + 3));
  bound.hypotheses.push_back(check("d_r >= 12", profile.max_degree() >= 12));
  bound.hypotheses.push_back(assumed("X is P-regular"));
  if (any_violated(bound.hypotheses)) return bound;

  const int m = first_quadratic_index(profile);
  const SlopeSequence seq = build_slope_sequence(profile);
  if (seq.beta(m) != Rational(3, 2)) {
    throw std::logic_error("largest quadratic slope is not 3/2");
  }
  const LctBound general = lct_lower_bound_general(profile, m);
  const Rational closed = cap(Rational(4) /
                              (Rational(3) * Rational(profile.degree_of_x())) *
                              slope_product(seq));
  if (*general.value != closed) {
    throw std::logic_error("CY bound disagrees with its closed form");
  }
  bound.m = m;
  bound.value = general.value;
  return bound;
}

LctBound lct_bound_hypersurface(int n, int d) {
  LctBound bound{LctMethod::kHypersurfacePukhlikov, std::nullopt, {},
                 std::nullopt, std::nullopt};
  bound.hypotheses.push_back(check("n >= 5", n >= 5));
  bound.hypotheses.push_back(check("d >= n + 1", d >= n + 1));
  bound.hypotheses.push_back(assumed("X is P-regular and satisfies (I_2)"));
  if (any_violated(bound.hypotheses)) return bound;

  const Rational value = cap(Rational(3 * (n - 1), 2 * d));
  // Same number through the slope sequence at m = 3.
  const LctBound general = lct_lower_bound_general(CIProfile(n + 1, {d}), 3);
  if (*general.value != value) {
    throw std::logic_error("hypersurface bound disagrees with slope route");
  }
  if (value < cap(Rational(n + 1, d))) {
    throw std::logic_error("hypersurface bound fell below (n+1)/d");
  }
  bound.m = 3;
  bound.value = value;
  return bound;
}

LctBound lct_bound_cy_hypersurface(int n) {
  if (n == 4) {
    LctBound bound{LctMethod::kCited, Rational(3, 4), {}, std::nullopt,
                   std::nullopt};
    bound.hypotheses.push_back(assumed("quartic surface case, external result"));
    return bound;
  }
  LctBound bound = lct_bound_hypersurface(n - 2, n);
  bound.hypotheses.insert(bound.hypotheses.begin(),
                          check("n = 4 or n >= 7", n >= 7));
  if (!bound.applicable()) return bound;
  if (*bound.value < Rational(n - 1, n)) {
    throw std::logic_error("CY hypersurface bound fell below (n-1)/n");
  }
  return bound;
}

LctBound lct_large_index(const CIProfile& profile) {
  LctBound bound{LctMethod::kLargeIndex, std::nullopt, {}, std::nullopt,
                 std::nullopt};
  bound.hypotheses.push_back(check("index s >= r + 1",
                                   profile.fano_index() >= profile.codim() + 1));
  bound.hypotheses.push_back(assumed("X is smooth"));
  if (!any_violated(bound.hypotheses)) bound.value = Rational(1);
  return bound;
}

LctBound moderate_degree_bound(int n, int d, const Rational& epsilon) {
  LctBound bound{LctMethod::kModerateDegree, std::nullopt, {}, std::nullopt,
                 std::nullopt};
  bound.hypotheses.push_back(
      check("0 < epsilon < 1", epsilon.sign() > 0 && epsilon < Rational(1)));
  bound.hypotheses.push_back(check("d >= 1", d >= 1));
  if (any_violated(bound.hypotheses)) return bound;
  bound.hypotheses.push_back(
      check("d <= (2 - epsilon) n",
            Rational(d) <= (Rational(2) - epsilon) * Rational(n)));
  if (any_violated(bound.hypotheses)) return bound;

  if (d <= n) {
    bound.method = LctMethod::kLowDegree;
    bound.hypotheses.push_back(assumed("low-degree theorem for d <= n"));
    bound.value = Rational(1);
    return bound;
  }

  // Minimal m with 2(m+1) > (2 - eps)(m+2), i.e. m > 2/eps - 2.
  const Rational two_minus = Rational(2) - epsilon;
  long m = std::max<long>(1, (Rational(2) / epsilon - Rational(2)).floor().get_si() + 1);
  while (!(Rational(2 * (m + 1)) > two_minus * Rational(m + 2))) ++m;
  const Rational slack = Rational(2 * (m + 1)) - two_minus * Rational(m + 2);
  const long n0 = (Rational(2 * (m + 1)) / slack).ceil().get_si();

  bound.m = static_cast<int>(m);
  bound.n0 = n0;
  bound.hypotheses.push_back(
      assumed(std::to_string(m) + "-strong P-regularity (n large)"));
  bound.value = cap(Rational(m + 1, m + 2) * Rational(2 * (n - 1), d));
  if (n >= n0 && *bound.value != Rational(1)) {
    throw std::logic_error("moderate-degree bound below 1 past its threshold");
  }
  return bound;
}

StabilityVerdict tian_verdict(int n, const Rational& alpha, bool smooth) {
  if (n < 1 || alpha.sign() <= 0) {
    throw PreconditionError("tian_verdict needs n >= 1 and alpha > 0");
  }
  const Rational threshold(n, n + 1);
  if (alpha > threshold) {
    return {StabilityKind::kKStable, alpha, "tian-criterion(1): alpha > n/(n+1)"};
  }
  if (alpha == threshold) {
    if (smooth && n >= 2) {
      return {StabilityKind::kKStable, alpha,
              "tian-criterion(1): alpha = n/(n+1), smooth, n >= 2"};
    }
    return {StabilityKind::kKSemistable, alpha,
            "tian-criterion(2): alpha >= n/(n+1)"};
  }
  return {StabilityKind::kInconclusive, alpha, "alpha below n/(n+1)"};
}

}  // namespace kstab
