#include "kstab/cone.hpp"

#include <numeric>

#include "kstab/errors.hpp"
#include "kstab/symcore/binomial.hpp"

namespace kstab {

ConeProfile::ConeProfile(int n) : n(n) {
  if (n < 3) throw PreconditionError("cone profile needs n >= 3");
}

long floor_divisor_degree(const ConeProfile& profile, long m) {
  if (m < 0) throw PreconditionError("m must be non-negative");
  const long n = profile.n;
  const long q = Rational(m * n, n + 1).floor().get_si();
  return n * q - m * (n - 1);
}

Integer cone_graded_dim(const ConeProfile& profile, long k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  Integer total = 0;
  for (long m = 0; m <= k; ++m) {
    const long deg = floor_divisor_degree(profile, m);
    total += binomial(deg + profile.n - 1, profile.n - 1);
  }
  return total;
}

Rational selfintersection_L(const ConeProfile& profile) {
  const long n = profile.n;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (long j = 0; j <= n + 2; ++j) {
    xs.push_back(j);
    ys.push_back(cone_graded_dim(profile, j * (n + 1)));
  }
  // Fit on the first n+1 samples, then demand the rest agree.
  const UPoly fit = UPoly::interpolate(std::span(xs).first(n + 1),
                                       std::span(ys).first(n + 1));
  for (std::size_t i = static_cast<std::size_t>(n + 1); i < xs.size(); ++i) {
    if (fit.evaluate(xs[i]) != ys[i]) {
      throw DomainError("graded dimensions are not a degree-n polynomial");
    }
  }
  if (fit.degree() != n) {
    throw DomainError("graded dimensions are not a degree-n polynomial");
  }
  Integer factorial = 1;
  for (long i = 2; i <= n; ++i) factorial *= i;
  return Rational(factorial) * fit.coeff(n);
}

Integer hilbert_hypersurface(long N, long d0, long k) {
  if (N < 1 || d0 < 1 || k < 0) {
    throw PreconditionError("hilbert_hypersurface needs N, d0 >= 1, k >= 0");
  }
  return binomial(k + N, N) - binomial(k - d0 + N, N);
}

DFExpansion df_expansion(const MonomialAction& action) {
  const long N = action.N;
  if (N < 1 || static_cast<long>(action.xi.size()) != N + 1) {
    throw PreconditionError("action needs N >= 1 and N+1 weights");
  }
  const Rational xi_sum = std::accumulate(action.xi.begin(), action.xi.end(), 0L);
  DFExpansion out;
  long n = N;
  out.chi = UPoly::binomial_in_k(N, N);
  out.weight = UPoly::binomial_in_k(N, N + 1) * xi_sum;
  if (action.eq) {
    const long d0 = action.eq->d0;
    if (d0 < 1) throw PreconditionError("equation degree must be positive");
    n = N - 1;
    out.chi -= UPoly::binomial_in_k(N - d0, N);
    out.weight -= UPoly::binomial_in_k(N - d0, N + 1) * xi_sum;
    out.weight -= UPoly::binomial_in_k(N - d0, N) * Rational(action.eq->mu);
  }
  if (n < 1 || out.chi.degree() != n) {
    throw DomainError("Hilbert polynomial does not have degree n");
  }
  out.a0 = out.chi.coeff(n);
  out.a1 = out.chi.coeff(n - 1);
  out.b0 = out.weight.coeff(n + 1);
  out.b1 = out.weight.coeff(n);
  out.df = Rational(2) * (out.a1 * out.b0 - out.a0 * out.b1) / (out.a0 * out.a0);
  return out;
}

Rational df_invariant(const MonomialAction& action) {
  return df_expansion(action).df;
}

Rational weight_sum_ambient(long N, const std::vector<long>& xi, long k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  if (static_cast<long>(xi.size()) != N + 1) {
    throw PreconditionError("need N+1 weights");
  }
  const Rational xi_sum = std::accumulate(xi.begin(), xi.end(), 0L);
  return xi_sum * Rational(binomial(k + N, N + 1));
}

MonomialAction central_fiber_action(int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  std::vector<long> xi{0};
  for (int i = 0; i < n; ++i) xi.push_back(n + 1);
  xi.push_back(n);
  return {n + 1, std::move(xi),
          MonomialAction::Equation{n + 1, static_cast<long>(n) * (n + 1)}};
}

}  // namespace kstab
