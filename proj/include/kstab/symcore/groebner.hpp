#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kstab/symcore/multipoly.hpp"

namespace kstab {

/// Hard caps for the Buchberger engine; only desk-scale inputs are expected.
struct GroebnerLimits {
  std::size_t max_nvars = 8;
  long max_degree = 40;
  std::size_t max_pairs = 1'000'000;
};

/// Reduced, monic Groebner basis of the ideal generated by `gens`, sorted by
/// descending leading monomial. Uses Buchberger's algorithm with the product
/// and chain criteria. Throws PreconditionError on a zero generator and
/// ResourceLimitError when a cap in `limits` is exceeded.
std::vector<MultiPoly> groebner_basis(
    std::span<const MultiPoly> gens,
    const MonomialOrder& order = MonomialOrder::grevlex(),
    const GroebnerLimits& limits = {});

/// Fully reduced normal form of f modulo `basis`.
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis,
                 const MonomialOrder& order = MonomialOrder::grevlex());

/// Dimension of the affine zero set of the ideal with Groebner basis `gb`:
/// the size of a largest variable subset containing the support of no
/// leading monomial. Returns -1 for the unit ideal.
int ideal_dimension(std::span<const MultiPoly> gb, std::size_t nvars,
                    const MonomialOrder& order = MonomialOrder::grevlex());

/// True iff every prefix (f1..fi) of the homogeneous forms cuts out a set of
/// codimension i, which for homogeneous forms is equivalent to being a
/// regular sequence.
bool is_regular_sequence(std::span<const MultiPoly> fs, std::size_t nvars,
                         const GroebnerLimits& limits = {});

}  // namespace kstab
