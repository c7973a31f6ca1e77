#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kstab/symcore/rational.hpp"

namespace kstab {

/// Outcome of one dimension-count check or of a sweep over many.
/// For sweeps, `witness` is the tuple of least slack and `min_value` /
/// `threshold` are taken at that tuple, so passed == (min_value >= threshold).
struct CountReport {
  std::string lemma;
  std::string ranges;
  std::vector<std::pair<std::string, long>> witness;
  long min_value = 0;
  long threshold = 0;
  bool passed = true;
  /// Tuples that were evaluated (vacuous ones excluded).
  long cases = 0;
  std::string note;

  long slack() const { return min_value - threshold; }
  /// Value of a named witness entry; throws PreconditionError if absent.
  long at(const std::string& key) const;
};

/// Conditions for a complete intersection to contain a line:
/// min over 1 <= a_i <= d_i, sum a_i = n+r-2 of sum a_i(a_i+1)/2 - (n+r-2),
/// against n+1. Outside n >= 2r+3, or when sum d_i < n+r-2, the report
/// passes vacuously with a note.
CountReport line_condition_count(long n, const std::vector<long>& degrees);

enum class MlCase { kAuto, kQuadratic, kCubic };

/// C(n-l+1, 2) (quadratic piece, l <= r) or C(n-l+2, 3) (cubic piece,
/// l <= r+1) against 2n. kAuto picks quadratic when l <= r.
/// Throws PreconditionError unless n >= 2r+3 and l is in range.
CountReport ml2_ml3_bounds(long n, long r, long ell, MlCase which = MlCase::kAuto);

/// (2l+2)(n-2-b) + l - b(n-1-b). Requires 1 <= l <= n-2, 0 <= b <= l-1 and
/// b <= n-4 when l = n-2.
long quadratic_bound(long n, long ell, long b);

/// Minimum of quadratic_bound over admissible b, against 2n.
CountReport min_quadratic_bound(long n, long ell);

/// C(m+d, d)
Integer hyp_contain_bound(long m, long d);

/// sum_{i=1}^{q-c} C(m-c+d_i, d_i) over the q-c smallest degrees.
/// Requires ascending degrees, 0 <= c <= q and m >= c.
Integer cpi_codim_bound(long m, long c, const std::vector<long>& degrees);

/// min{C(n-m+d, d), floor(((n-m-1)/2 - c) * C(n-m-c+d-1, d-1))}.
/// May be non-positive near n = m+c. Requires n >= m+c, d >= 1.
Integer sing_codim_p(long n, long m, long d, long c);

/// 2r + 3 + max{2 sum_{i<=s} d_i, sum_{i<=s} d_i(d_i+1)/2}.
/// Requires 0 <= s < r and at least s degrees, each >= 2.
long cone_threshold(long r, long s, const std::vector<long>& degrees);

struct SweepRanges {
  long n_max = 60;
  long r_max = 4;
  long d_max = 15;
};

/// Tags accepted by verify_lemma, in a fixed order.
const std::vector<std::string>& lemma_tags();

/// Sweeps every admissible tuple of one inequality family and reports the
/// global least slack. `threads` <= 0 means hardware concurrency; the
/// result does not depend on it. Throws PreconditionError for an unknown tag.
CountReport verify_lemma(const std::string& tag, const SweepRanges& ranges = {},
                         int threads = 1);

}  // namespace kstab
