#include "kstab/symcore/binomial.hpp"

namespace kstab {

Integer binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

}  // namespace kstab
