#include <algorithm>
#include <map>
#include <numeric>

#include "kstab/errors.hpp"
#include "kstab/slopes.hpp"

namespace kstab {

CIProfile::CIProfile(int ambient, std::vector<int> degrees)
    : ambient_(ambient), degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw PreconditionError("profile needs r >= 1");
  for (int d : degrees_) {
    if (d < 2) throw PreconditionError("every degree must be at least 2");
  }
  std::sort(degrees_.begin(), degrees_.end());
  if (dim() < 1) throw PreconditionError("profile needs dim X = N - r >= 1");
}

int CIProfile::total_degree() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

Integer CIProfile::degree_of_x() const {
  Integer out = 1;
  for (int d : degrees_) out *= d;
  return out;
}

int CIProfile::fano_index() const { return ambient_ + 1 - total_degree(); }

SlopeSequence::SlopeSequence(std::vector<SlopeEntry> entries, int k, int codim)
    : entries_(std::move(entries)), k_(k), codim_(codim) {}

const SlopeEntry& SlopeSequence::at(int position) const {
  if (position < 1 || position > static_cast<int>(entries_.size())) {
    throw PreconditionError("slope position out of range");
  }
  return entries_[static_cast<std::size_t>(position - 1)];
}

namespace {

// (u, v) pairs in sequence order, both 1-based.
std::vector<std::pair<int, int>> arrange(const CIProfile& profile,
                                         Arrangement arrangement) {
  const auto& degrees = profile.degrees();
  const int r = profile.codim();
  std::vector<std::pair<int, int>> order;
  for (int v = 1; v <= profile.max_degree(); ++v) {
    std::vector<int> sources;
    for (int u = 1; u <= r; ++u) {
      if (degrees[static_cast<std::size_t>(u - 1)] >= v) sources.push_back(u);
    }
    if (v == 2 && arrangement == Arrangement::kLargestQuadraticFirst) {
      // Sorted degrees: polynomial r has the largest degree.
      std::rotate(sources.begin(), sources.end() - 1, sources.end());
    }
    for (int u : sources) order.emplace_back(u, v);
  }
  return order;
}

}  // namespace

SlopeSequence build_slope_sequence(const CIProfile& profile,
                                   Arrangement arrangement) {
  const auto order = arrange(profile, arrangement);
  const int d = profile.total_degree();
  const int k = std::min(d, profile.dim() + profile.codim() - 2);
  std::map<std::pair<int, int>, int> position;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<int>(i) + 1;
  }
  std::vector<SlopeEntry> entries;
  entries.reserve(order.size());
  int lambda = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [u, v] = order[i];
    const int ell = static_cast<int>(i) + 1;
    Rational beta = 1;
    if (ell <= k && v < profile.degrees()[static_cast<std::size_t>(u - 1)] &&
        position.at({u, v + 1}) <= k) {
      beta = Rational(v + 1, v);
    }
    if (beta > Rational(1)) ++lambda;
    entries.push_back({u, v, std::move(beta), lambda});
  }
  return SlopeSequence(std::move(entries), k, profile.codim());
}

Rational slope_product(const SlopeSequence& seq, std::optional<int> skip) {
  if (skip && !(seq.beta(*skip) > Rational(1))) {
    throw PreconditionError("skipped slope must exceed 1");
  }
  Rational product = 1;
  for (int ell = 1; ell <= static_cast<int>(seq.size()); ++ell) {
    if (skip && ell == *skip) continue;
    product *= seq.beta(ell);
  }
  return product;
}

int first_quadratic_index(const CIProfile& profile, Arrangement arrangement) {
  const auto order = arrange(profile, arrangement);
  const auto it = std::find(order.begin(), order.end(),
                            std::pair<int, int>{profile.codim(), 2});
  return static_cast<int>(it - order.begin()) + 1;
}

}  // namespace kstab
