#pragma once

#include <cstdint>
#include <random>

#include "kstab/symcore/multipoly.hpp"

namespace kstab {

/// Seeded source of "general" polynomials: every coefficient is an integer
/// drawn uniformly from [-bound, bound].
class PolySampler {
 public:
  explicit PolySampler(std::uint64_t seed, long bound = 100)
      : rng_(seed), bound_(bound) {}

  long coefficient();
  long uniform(long lo, long hi);

  /// Dense homogeneous form of degree `degree` in `nvars` variables.
  MultiPoly form(std::size_t nvars, long degree);
  /// Dense form in a subset of the variables (mask[i] true = allowed).
  MultiPoly form_in(std::size_t nvars, long degree,
                    const std::vector<bool>& mask);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, long degree);

}  // namespace kstab
