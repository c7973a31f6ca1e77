#include "kstab/symcore/random.hpp"

namespace kstab {

namespace {

void enumerate(std::size_t index, long remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (index + 1 == current.nvars()) {
    current[index] = static_cast<std::uint32_t>(remaining);
    out.push_back(current);
    return;
  }
  for (long e = remaining; e >= 0; --e) {
    current[index] = static_cast<std::uint32_t>(e);
    enumerate(index + 1, remaining - e, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, long degree) {
  std::vector<Monomial> out;
  if (nvars == 0 || degree < 0) return out;
  Monomial current(nvars);
  enumerate(0, degree, current, out);
  return out;
}

long PolySampler::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

long PolySampler::coefficient() { return uniform(-bound_, bound_); }

MultiPoly PolySampler::form(std::size_t nvars, long degree) {
  return form_in(nvars, degree, std::vector<bool>(nvars, true));
}

MultiPoly PolySampler::form_in(std::size_t nvars, long degree,
                               const std::vector<bool>& mask) {
  MultiPoly f(nvars);
  for (const auto& m : monomials_of_degree(nvars, degree)) {
    bool allowed = true;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i] != 0 && !mask[i]) allowed = false;
    }
    // Draw for every monomial so the stream does not depend on the mask.
    const long c = coefficient();
    if (allowed) f.add_term(m, c);
  }
  return f;
}

}  // namespace kstab
