#include "kstab/blowup.hpp"
#include "kstab/cli.hpp"
#include "kstab/cone.hpp"

namespace kstab::cli {

namespace {

MainTheoremRow x_row(int n) {
  MainTheoremRow row{'X', n, 0, false, {}, {}, {}, {}, {}, {}};
  row.singular_point =
      "[1:0:...:0], weights (" + std::to_string(n + 1) + " x " +
      std::to_string(n) + ", " + std::to_string(n) + ")";
  const Family fam = Family::x(n);
  if (!family_range_violation(fam).empty()) return row;
  row.in_range = true;

  const KollarInvariants inv = family_invariants(fam);
  row.alpha = inv.alpha;
  row.beta = inv.beta;
  row.df = df_invariant(central_fiber_action(n));

  // alpha = n/(n+1) gives semistability; a non-isomorphic degeneration with
  // vanishing Futaki invariant rules out polystability.
  StabilityVerdict v = tian_verdict(n, inv.alpha, /*smooth=*/false);
  if (v.kind == StabilityKind::kKSemistable && row.df->is_zero()) {
    v.kind = StabilityKind::kStrictlyKSemistable;
    v.justification += "; degenerates to the cone X0 with DF = 0";
  }
  row.verdict = v;

  if (inv.alpha != Rational(n, n + 1)) row.mismatches.push_back("alpha != n/(n+1)");
  if (!inv.beta.is_zero()) row.mismatches.push_back("beta != 0");
  if (!row.df->is_zero()) row.mismatches.push_back("DF != 0");
  if (v.kind != StabilityKind::kStrictlyKSemistable) {
    row.mismatches.push_back("verdict is not strictly-K-semistable");
  }
  return row;
}

MainTheoremRow y_row(int n, int e) {
  MainTheoremRow row{'Y', n, e, false, {}, {}, {}, {}, {}, {}};
  const int top = n + 2 - e;
  row.singular_point = "[0:...:0:1], weights (" + std::to_string(top) + " x " +
                       std::to_string(n + 1) + ", " + std::to_string(top - 1) +
                       ")";
  const Family fam = Family::y(n, e);
  if (!family_range_violation(fam).empty()) return row;
  row.in_range = true;

  const KollarInvariants inv = family_invariants(fam);
  row.alpha = inv.alpha;
  row.beta = inv.beta;
  if (inv.beta.sign() < 0) {
    row.verdict = StabilityVerdict{StabilityKind::kKUnstable, inv.alpha,
                                   "beta of the Kollar component is negative"};
  } else {
    row.verdict = StabilityVerdict{StabilityKind::kInconclusive, inv.alpha,
                                   "beta of the Kollar component is non-negative"};
  }

  if (inv.alpha != Rational(n + 1 - e, top)) {
    row.mismatches.push_back("alpha != (n+1-e)/(n+2-e)");
  }
  if (inv.beta.sign() >= 0) row.mismatches.push_back("beta >= 0");
  if (e == 2 && inv.beta != Rational(-1, n + 1)) {
    row.mismatches.push_back("beta != -1/(n+1)");
  }
  if (row.verdict->kind != StabilityKind::kKUnstable) {
    row.mismatches.push_back("verdict is not K-unstable");
  }
  return row;
}

}  // namespace

std::vector<MainTheoremRow> reproduce_main_theorem(
    const std::vector<int>& x_values, const std::vector<int>& y_values, int e) {
  std::vector<MainTheoremRow> rows;
  for (int n : x_values) rows.push_back(x_row(n));
  for (int n : y_values) rows.push_back(y_row(n, e));
  return rows;
}

}  // namespace kstab::cli
