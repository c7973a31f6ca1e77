#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

#include "kstab/errors.hpp"
#include "kstab/slopes.hpp"

using namespace kstab;

namespace {

std::vector<Rational> betas(const SlopeSequence& s) {
  std::vector<Rational> out;
  for (const auto& e : s.entries()) out.push_back(e.beta);
  return out;
}

Rational R(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

// Every non-decreasing degree vector of length r with entries in [2, dmax].
void for_each_degrees(int r, int dmax, const std::function<void(std::vector<int>)>& f) {
  std::vector<int> d(r, 2);
  while (true) {
    f(d);
    int i = r - 1;
    while (i >= 0 && d[i] == dmax) --i;
    if (i < 0) return;
    ++d[i];
    for (int j = i + 1; j < r; ++j) d[j] = d[i];
  }
}

}  // namespace

TEST(CIProfile, DerivedQuantities) {
  const CIProfile p(13, {12, 2});
  EXPECT_EQ(p.degrees(), (std::vector<int>{2, 12}));
  EXPECT_EQ(p.dim(), 11);
  EXPECT_EQ(p.codim(), 2);
  EXPECT_EQ(p.total_degree(), 14);
  EXPECT_EQ(p.degree_of_x(), 24);
  EXPECT_EQ(p.fano_index(), 0);
  EXPECT_TRUE(p.is_calabi_yau());
}

TEST(CIProfile, Validation) {
  EXPECT_THROW(CIProfile(5, {}), PreconditionError);
  EXPECT_THROW(CIProfile(5, {1, 3}), PreconditionError);
  EXPECT_THROW(CIProfile(2, {2, 2}), PreconditionError);
}

TEST(Slopes, HypersurfaceExample) {
  const auto s = build_slope_sequence(CIProfile(7, {7}));
  EXPECT_EQ(s.k(), 5);
  EXPECT_EQ(betas(s), (std::vector<Rational>{R(2), R(3, 2), R(4, 3), R(5, 4), R(1), R(1), R(1)}));
  EXPECT_EQ(slope_product(s), R(5));
  EXPECT_EQ(slope_product(s, 3), R(15, 4));
  EXPECT_THROW(slope_product(s, 5), PreconditionError);
}

TEST(Slopes, Quadric) {
  for (int n = 3; n <= 8; ++n) {
    const auto s = build_slope_sequence(CIProfile(n + 1, {2}));
    EXPECT_EQ(betas(s), (std::vector<Rational>{R(2), R(1)}));
    EXPECT_EQ(slope_product(s), R(2));
    EXPECT_EQ(first_quadratic_index(CIProfile(n + 1, {2})), 2);
  }
}

TEST(Slopes, CalabiYauPair) {
  const CIProfile p(13, {2, 12});
  const auto s = build_slope_sequence(p);
  EXPECT_EQ(s.k(), 11);
  EXPECT_EQ(s.size(), 14u);
  EXPECT_EQ(slope_product(s), R(18));
  EXPECT_EQ(R(3, 4) * Rational(p.degree_of_x()), R(18));

  // Largest-degree quadratic placed first among quadratics.
  const int m = first_quadratic_index(p);
  EXPECT_EQ(m, 3);
  EXPECT_EQ(s.at(m).source, 2);
  EXPECT_EQ(s.beta(m), R(3, 2));
  EXPECT_EQ(slope_product(s, m), R(12));

  // Plain (degree, index) order puts it fourth.
  const auto lex = build_slope_sequence(p, Arrangement::kLexicographic);
  const int mlex = first_quadratic_index(p, Arrangement::kLexicographic);
  EXPECT_EQ(mlex, 4);
  EXPECT_EQ(lex.beta(mlex), R(3, 2));
  EXPECT_EQ(slope_product(lex, mlex), R(12));
  EXPECT_EQ(slope_product(lex), R(18));
}

TEST(Slopes, FirstQuadraticIndexHypersurface) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(first_quadratic_index(CIProfile(n + 1, {n + 1})), 2);
  }
}

TEST(Slopes, PositionsAreOneBased) {
  const auto s = build_slope_sequence(CIProfile(7, {7}));
  EXPECT_THROW(s.at(0), PreconditionError);
  EXPECT_THROW(s.at(8), PreconditionError);
}

TEST(SlopesProperty, EntryInvariants) {
  for (int r = 1; r <= 3; ++r) {
    for_each_degrees(r, 9, [&](std::vector<int> degs) {
      for (int n = 1; n <= 14; ++n) {
        const CIProfile p(n + r, degs);
        for (auto arr : {Arrangement::kLargestQuadraticFirst, Arrangement::kLexicographic}) {
          const auto s = build_slope_sequence(p, arr);
          const int d = p.total_degree();
          ASSERT_EQ(static_cast<int>(s.size()), d);
          ASSERT_EQ(s.k(), std::min(d, n + r - 2));

          // Every (u, v) exactly once, degrees non-decreasing.
          std::set<std::pair<int, int>> seen;
          int prev_v = 0;
          int lambda = 0;
          for (int ell = 1; ell <= d; ++ell) {
            const auto& e = s.at(ell);
            ASSERT_TRUE(seen.insert({e.source, e.degree}).second);
            ASSERT_GE(e.degree, prev_v);
            prev_v = e.degree;
            const bool plain = e.beta == R(1);
            ASSERT_TRUE(plain || e.beta == R(e.degree + 1, e.degree));
            ASSERT_LE(e.beta, R(2));
            ASSERT_LE(e.degree + 1, p.max_degree() + (plain ? 1 : 0));
            if (ell > s.k()) {
              ASSERT_TRUE(plain);
            }
            if (!plain) ++lambda;
            ASSERT_EQ(e.lambda, lambda);
          }
          if (s.k() >= r) {
            ASSERT_EQ(s.lambda(s.k()), s.k() - r);
          }
          if (arr == Arrangement::kLexicographic && s.k() >= r + 1) {
            ASSERT_EQ(s.beta(1), R(2));
          }
          // Under the rearranged order the first entry is still the linear
          // piece of the first equation; its quadratic sits inside the cutoff
          // whenever k > r.
          if (s.k() >= r + 1 && p.degrees()[0] >= 2) {
            const int pos = [&] {
              for (int ell = 1; ell <= d; ++ell) {
                if (s.at(ell).source == 1 && s.at(ell).degree == 2) return ell;
              }
              return 0;
            }();
            ASSERT_EQ(s.beta(1) == R(2), pos <= s.k());
          }
        }
      }
    });
  }
}

TEST(SlopesProperty, HypersurfaceProductTelescopes) {
  for (int n = 3; n <= 40; ++n) {
    for (int d = n + 1; d <= 3 * n; ++d) {
      ASSERT_EQ(slope_product(build_slope_sequence(CIProfile(n + 1, {d}))), R(n - 1))
          << n << " " << d;
    }
  }
}

TEST(SlopesProperty, CalabiYauProductBound) {
  int exact_cases = 0;
  for (int r = 1; r <= 3; ++r) {
    for_each_degrees(r, 30, [&](std::vector<int> degs) {
      const int sum = std::accumulate(degs.begin(), degs.end(), 0);
      const int n = sum - r - 1;
      if (degs.back() < 12 || n < 2 * r + 3 || n > 30) return;
      const CIProfile p(n + r, degs);
      ASSERT_TRUE(p.is_calabi_yau());
      const auto s = build_slope_sequence(p);
      const Rational prod = slope_product(s);
      const Rational degx = Rational(p.degree_of_x());
      ASSERT_GE(prod, R(3, 4) * degx);

      // Which entries of the full product are missing at 1?  Beyond the
      // cutoff each equation contributes its whole telescoping product d_u
      // except for the tail that falls past k.
      const int dr = degs.back();
      const int cut_r = [&] {
        int top = 0;
        for (int ell = 1; ell <= s.k(); ++ell) {
          if (s.at(ell).source == r) top = std::max(top, s.at(ell).degree);
        }
        return top;
      }();
      bool others_complete = true;
      for (int u = 1; u < r; ++u) {
        int top = 0;
        for (int ell = 1; ell <= s.k(); ++ell) {
          if (s.at(ell).source == u) top = std::max(top, s.at(ell).degree);
        }
        others_complete = others_complete && top == degs[u - 1];
      }
      if (others_complete && cut_r == dr - 3) {
        ++exact_cases;
        ASSERT_EQ(prod, R(dr - 3, dr) * degx);
      }
    });
  }
  EXPECT_GT(exact_cases, 0);
}

TEST(SlopesProperty, LambdaAtCutoff) {
  for (int r = 1; r <= 3; ++r) {
    for_each_degrees(r, 8, [&](std::vector<int> degs) {
      for (int n = 2; n <= 12; ++n) {
        const CIProfile p(n + r, degs);
        if (p.total_degree() < n + r - 2) continue;
        const auto s = build_slope_sequence(p);
        ASSERT_EQ(s.lambda(s.k()), s.k() - r);
      }
    });
  }
}
