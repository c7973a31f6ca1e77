#include <gtest/gtest.h>

#include "kstab/blowup.hpp"
#include "kstab/errors.hpp"
#include "kstab/symcore/random.hpp"

using namespace kstab;

namespace {

Rational R(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

std::vector<BoundaryComponent> eckardt_boundary(long n) {
  return {{R(n, n + 1), n}, {R(n, n + 1), n}};
}

WeightVector eckardt_weights(long n) {
  std::vector<long> w{n};
  for (long i = 0; i < n - 2; ++i) w.push_back(1);
  return WeightVector(w);
}

}  // namespace

TEST(LogDiscrepancy, Examples) {
  EXPECT_EQ(log_discrepancy(family_blowup(Family::x(4))), R(4));
  const WeightedBlowupData y = family_blowup(Family::y(14, 2));
  EXPECT_EQ(y.weights.sum(), 223);
  EXPECT_EQ(y.eq_mults, (std::vector<long>{28, 182}));
  EXPECT_EQ(log_discrepancy(y), R(13));
  for (long N = 2; N <= 6; ++N) {
    const WeightedBlowupData smooth{WeightVector(std::vector<long>(N, 1)), {1}};
    EXPECT_EQ(log_discrepancy(smooth), R(N - 1));
    EXPECT_EQ(monomial_valuation_volume(smooth), R(1));
  }
  EXPECT_THROW(log_discrepancy({WeightVector({1, 1}), {2}}), DomainError);
  EXPECT_THROW(log_discrepancy({WeightVector({1, 1}), {0}}), PreconditionError);
}

TEST(LogDiscrepancy, AgreesWithWeightedOrderOfSampledEquations) {
  PolySampler s(1234, 20);
  for (int n = 2; n <= 5; ++n) {
    // X: local equation f + g with f a form of degree n in x1..xn and g a
    // form of degree n+1 in x1..x_{n+1}.
    const std::size_t nv = static_cast<std::size_t>(n + 1);
    std::vector<bool> first_n(nv, true);
    first_n.back() = false;
    const MultiPoly fx = s.form_in(nv, n, first_n) + s.form(nv, n + 1);
    const WeightedBlowupData x = family_blowup(Family::x(n));
    ASSERT_EQ(weighted_order(fx, x.weights), x.eq_mults[0]);
    ASSERT_EQ(log_discrepancy(x), R(x.weights.sum() - weighted_order(fx, x.weights)));
    ASSERT_EQ(log_discrepancy(x), R(n));

    // Y: f of degree e and h of degree n+1-e in x0..xn, g of degree n+2-e
    // in all of x0..x_{n+1}.
    for (int e = 2; e <= n; ++e) {
      const std::size_t ny = static_cast<std::size_t>(n + 2);
      std::vector<bool> no_last(ny, true);
      no_last.back() = false;
      const MultiPoly f = s.form_in(ny, e, no_last);
      const MultiPoly gh = s.form_in(ny, n + 1 - e, no_last) + s.form(ny, n + 2 - e);
      const WeightedBlowupData y = family_blowup(Family::y(n, e));
      ASSERT_EQ(weighted_order(f, y.weights), y.eq_mults[0]);
      ASSERT_EQ(weighted_order(gh, y.weights), y.eq_mults[1]);
      ASSERT_EQ(log_discrepancy(y), R(n + 1 - e));
    }
  }
}

TEST(ValuationVolume, ClosedForms) {
  EXPECT_EQ(monomial_valuation_volume(family_blowup(Family::x(4))), R(1, 125));
  EXPECT_EQ(monomial_valuation_volume(family_blowup(Family::y(14, 2))),
            R(2) * pow(R(14), -13));
  for (int n = 2; n <= 20; ++n) {
    ASSERT_EQ(monomial_valuation_volume(family_blowup(Family::x(n))), pow(R(n + 1), 1 - n));
    for (int e = 2; e <= std::min(n, 5); ++e) {
      ASSERT_EQ(monomial_valuation_volume(family_blowup(Family::y(n, e))),
                R(e) * pow(R(n + 2 - e), 1 - n));
    }
  }
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau_from_volume(R(5), R(1, 125), 4), R(5));
  EXPECT_EQ(tau_from_volume(R(28), R(2) * pow(R(14), -13), 14), R(14));
  EXPECT_EQ(tau_from_volume(R(7, 3), R(7, 3), 6), R(1));
  EXPECT_THROW(tau_from_volume(R(2), R(1), 2), DomainError);
  EXPECT_THROW(tau_from_volume(R(0), R(1), 2), PreconditionError);
}

TEST(VolCurve, Examples) {
  EXPECT_EQ(vol_curve(R(5), R(5), 4, R(0)), R(5));
  EXPECT_EQ(vol_curve(R(5), R(5), 4, R(5)), R(0));
  EXPECT_EQ(vol_curve(R(5), R(5), 4, R(1)), R(624, 125));
  EXPECT_THROW(vol_curve(R(5), R(5), 4, R(-1)), DomainError);
  EXPECT_THROW(vol_curve(R(5), R(5), 4, R(6)), DomainError);
}

TEST(VolCurve, StrictlyDecreasing) {
  for (int n = 2; n <= 8; ++n) {
    const Rational tau = R(n + 1);
    Rational prev = vol_curve(R(n + 1), tau, n, R(0));
    for (int i = 1; i <= 40; ++i) {
      const Rational v = vol_curve(R(n + 1), tau, n, tau * R(i, 40));
      ASSERT_LT(v, prev);
      prev = v;
    }
    ASSERT_TRUE(prev.is_zero());
  }
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta_invariant(R(4), R(5), 4), R(0));
  EXPECT_EQ(beta_invariant(R(13), R(14), 14), R(-1, 15));
  EXPECT_EQ(beta_invariant(R(5), R(5), 4), R(1));
}

TEST(Beta, IntegralOfVolumeCurve) {
  // (1/V) int_0^tau V (1 - (t/tau)^n) dt = tau - tau/(n+1), integrated
  // exactly term by term here.
  for (int n = 2; n <= 12; ++n) {
    const Rational tau = R(n + 3, 2);
    const Rational integral = tau - pow(tau, n + 1) / (Rational(n + 1) * pow(tau, n));
    ASSERT_EQ(beta_invariant(R(3), tau, n), R(3) - integral);
  }
}

TEST(NormalizedVolume, Identities) {
  EXPECT_EQ(normalized_volume(R(1), R(1), 5), R(1));
  EXPECT_EQ(normalized_volume(R(13), R(2) * pow(R(14), -13), 14),
            pow(R(13), 14) * R(2) * pow(R(14), -13));
  for (int n = 2; n <= 30; ++n) {
    const KollarInvariants inv = [&] {
      const WeightedBlowupData x = family_blowup(Family::x(n));
      KollarInvariants k;
      k.A = log_discrepancy(x);
      k.volF = monomial_valuation_volume(x);
      k.nvol = normalized_volume(k.A, k.volF, n);
      return k;
    }();
    ASSERT_EQ(pow(R(1) + R(1, n), n) * inv.nvol, R(n + 1));
  }
}

TEST(PairLogDiscrepancy, Examples) {
  EXPECT_EQ(pair_log_discrepancy(eckardt_weights(5), eckardt_boundary(5)), R(-1, 3));
  EXPECT_EQ(pair_log_discrepancy(WeightVector({2, 3, 4}), {}), R(9));
  for (long n = 3; n <= 20; ++n) {
    ASSERT_EQ(pair_log_discrepancy(eckardt_weights(n), eckardt_boundary(n)), R(-2, n + 1));
  }
  // (n/(n+1)) times a divisor of weighted multiplicity n(n+1) against the
  // weights (n+1 x n, n): n(n+1) + n - n^2 = 2n.
  for (long n = 2; n <= 10; ++n) {
    const WeightedBlowupData x = family_blowup(Family::x(static_cast<int>(n)));
    ASSERT_EQ(pair_log_discrepancy(x.weights, {{R(n, n + 1), n * (n + 1)}}), R(2 * n));
  }
  EXPECT_THROW(pair_log_discrepancy(WeightVector({1}), {{R(-1), 1}}), PreconditionError);
}

TEST(Families, Invariants) {
  const KollarInvariants x = family_invariants(Family::x(14));
  EXPECT_EQ(x.A, R(14));
  EXPECT_EQ(x.tau, R(15));
  EXPECT_EQ(x.eps, R(15));
  EXPECT_EQ(x.V, R(15));
  EXPECT_EQ(x.beta, R(0));
  EXPECT_EQ(x.alpha, R(14, 15));

  const KollarInvariants y = family_invariants(Family::y(14, 2));
  EXPECT_EQ(y.A, R(13));
  EXPECT_EQ(y.tau, R(14));
  EXPECT_EQ(y.eps, R(14));
  EXPECT_EQ(y.V, R(28));
  EXPECT_EQ(y.beta, R(-1, 15));
  EXPECT_EQ(y.alpha, R(13, 14));

  EXPECT_THROW(family_invariants(Family::y(10, 2)), DomainError);
  EXPECT_THROW(family_invariants(Family::x(5)), DomainError);
  EXPECT_THROW(family_invariants(Family::x(6)), DomainError);
  EXPECT_NE(family_range_violation(Family::y(13, 2)).find("n >= 14"), std::string::npos);
}

TEST(Families, TauConsistencyAndSignLaw) {
  for (int n = 2; n <= 40; ++n) {
    const WeightedBlowupData x = family_blowup(Family::x(n));
    const Rational tx = tau_from_volume(family_anticanonical_volume(Family::x(n)),
                                        monomial_valuation_volume(x), n);
    ASSERT_EQ(tx, R(n + 1));
    ASSERT_EQ(beta_invariant(log_discrepancy(x), tx, n), R(0));
    for (int e = 2; e <= std::min(n, 5); ++e) {
      const WeightedBlowupData y = family_blowup(Family::y(n, e));
      const Rational ty = tau_from_volume(family_anticanonical_volume(Family::y(n, e)),
                                          monomial_valuation_volume(y), n);
      ASSERT_EQ(ty, R(n + 2 - e));
      ASSERT_LT(beta_invariant(log_discrepancy(y), ty, n), R(0));
    }
  }
}
