#pragma once

#include <optional>
#include <vector>

#include "kstab/symcore/rational.hpp"
#include "kstab/symcore/upoly.hpp"

namespace kstab {

/// The orbifold cone over P^{n-1} polarized by M = (n/(n+1)) S - (n-1) H
/// with S a degree-n hypersurface. deg M = 1/(n+1).
struct ConeProfile {
  int n;

  /// Throws PreconditionError unless n >= 3.
  explicit ConeProfile(int n);
  Rational degree_of_m() const { return Rational(1, n + 1); }
};

/// deg floor(mM) = n * floor(m n / (n+1)) - m (n-1).
long floor_divisor_degree(const ConeProfile& profile, long m);

/// dim of the degree-k piece of the section ring when R_{m,i} has degree
/// m + i: sum_{m=0}^{k} h^0(P^{n-1}, floor(mM)).
Integer cone_graded_dim(const ConeProfile& profile, long k);

/// (L^n) for L = O(n+1) in that grading: fits the exact degree-n polynomial
/// through dim R_{j(n+1)}, j = 0..n+2, and returns n! times its leading
/// coefficient. Throws DomainError if the samples are not polynomial of
/// degree n.
Rational selfintersection_L(const ConeProfile& profile);

/// dim of degree-k forms on P^N modulo one form of degree d0.
Integer hilbert_hypersurface(long N, long d0, long k);

/// Diagonal G_m-action on P^N with integer weights xi (one per coordinate),
/// optionally preserving a hypersurface F0 of degree d0 that is
/// xi-homogeneous of weight mu.
struct MonomialAction {
  long N;
  std::vector<long> xi;
  struct Equation {
    long d0;
    long mu;
  };
  std::optional<Equation> eq;
};

struct DFExpansion {
  UPoly chi;     // Hilbert polynomial, degree n
  UPoly weight;  // total weight polynomial, degree n+1
  Rational a0, a1, b0, b1;
  Rational df;
};

/// Exact symbolic expansion behind df_invariant.
DFExpansion df_expansion(const MonomialAction& action);

/// DF = 2 (a1 b0 - a0 b1) / a0^2 where chi(k) = a0 k^n + a1 k^{n-1} + ...
/// and w(k) = b0 k^{n+1} + b1 k^n + ... Throws DomainError when chi does not
/// have the expected degree.
Rational df_invariant(const MonomialAction& action);

/// Total weight of all degree-k monomials on P^N: (sum xi) * C(k+N, N+1).
Rational weight_sum_ambient(long N, const std::vector<long>& xi, long k);

/// The one-parameter subgroup degenerating x0 f + g to x0 f + x_{n+1}^{n+1}:
/// N = n+1, xi = (0, n+1 x n, n), d0 = n+1, mu = n(n+1).
MonomialAction central_fiber_action(int n);

}  // namespace kstab
