#pragma once

#include "kstab/symcore/rational.hpp"

namespace kstab {

/// C(a, b) for arbitrary integers; zero when b < 0 or a < b.
Integer binomial(long a, long b);

}  // namespace kstab
