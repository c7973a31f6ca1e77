#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/symcore/groebner.hpp"
#include "kstab/symcore/multipoly.hpp"
#include "kstab/symcore/rational.hpp"

namespace kstab {

/// Complete intersection X = F_1 ∩ ... ∩ F_r in P^N of hypersurfaces of the
/// given degrees. Degrees are stored ascending; polynomial indices used
/// elsewhere (1-based) refer to this sorted order.
class CIProfile {
 public:
  /// Throws PreconditionError unless r >= 1, every degree >= 2 and
  /// n = N - r >= 1.
  CIProfile(int ambient, std::vector<int> degrees);

  int ambient() const { return ambient_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int codim() const { return static_cast<int>(degrees_.size()); }
  int dim() const { return ambient_ - codim(); }
  int total_degree() const;
  Integer degree_of_x() const;
  /// s = N + 1 - sum(d_i); -K_X ~ sH. May be <= 0.
  int fano_index() const;
  bool is_calabi_yau() const { return fano_index() == 0; }
  int max_degree() const { return degrees_.back(); }

 private:
  int ambient_;
  std::vector<int> degrees_;
};

/// Order of the homogeneous pieces q_{u,v} within a degree.
enum class Arrangement {
  /// Ascending polynomial index within each degree, except that among the
  /// quadratic pieces the one from the largest-degree equation comes first.
  kLargestQuadraticFirst,
  /// Plain (degree, polynomial index) order.
  kLexicographic,
};

struct SlopeEntry {
  int source;   // u, 1-based polynomial index
  int degree;   // v
  Rational beta;
  int lambda;   // #{i <= position : beta_i > 1}
};

/// The ordered pieces q_1..q_d with their slopes. Positions are 1-based.
class SlopeSequence {
 public:
  SlopeSequence(std::vector<SlopeEntry> entries, int k, int codim);

  const std::vector<SlopeEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int k() const { return k_; }
  int codim() const { return codim_; }

  const SlopeEntry& at(int position) const;
  const Rational& beta(int position) const { return at(position).beta; }
  int lambda(int position) const { return at(position).lambda; }

 private:
  std::vector<SlopeEntry> entries_;
  int k_;
  int codim_;
};

/// Orders the pieces q_{u,v} (1 <= v <= d_u) and assigns
/// beta = (v+1)/v when v < d_u and q_{u,v+1} is among the first
/// k = min(d, n+r-2) entries, and 1 otherwise.
SlopeSequence build_slope_sequence(
    const CIProfile& profile,
    Arrangement arrangement = Arrangement::kLargestQuadraticFirst);

/// Product of all slopes except position `skip` (when given). Throws
/// PreconditionError if the skipped slope equals 1.
Rational slope_product(const SlopeSequence& seq,
                       std::optional<int> skip = std::nullopt);

/// Position of the quadratic piece of the largest-degree equation.
int first_quadratic_index(
    const CIProfile& profile,
    Arrangement arrangement = Arrangement::kLargestQuadraticFirst);

// ---- pointwise P-regularity -------------------------------------------------

struct PRegularityVerdict {
  bool regular = false;
  int k = 0;
  /// Chart coordinate set to 1.
  std::size_t chart = 0;
  /// h, q_1, ..., q_k in the affine chart coordinates.
  std::vector<MultiPoly> sequence;
  /// Irreducibility of the cut (strong regularity) is never certified.
  std::string irreducibility = "not checked";
};

/// Checks P-regularity of X = (equations = 0) ⊂ P^N at one point.
///
/// `equations` are homogeneous in N+1 variables and `point` is a projective
/// point on X. The chart is the first nonzero coordinate of the point; the
/// remaining coordinates, shifted so that the point is the origin, are the
/// N affine variables in which `h` (a linear form) is written.
///
/// Throws DomainError if the point is not on X and PreconditionError if h
/// lies in the span of the linear pieces q_1..q_r. Groebner resource errors
/// propagate.
PRegularityVerdict p_regularity_check(const std::vector<MultiPoly>& equations,
                                      const std::vector<Rational>& point,
                                      const MultiPoly& h,
                                      const GroebnerLimits& limits = {});

/// Homogeneous pieces f(point + z) in the affine chart around `point`:
/// result[j] is the degree-j piece, j = 0..deg f.
std::vector<MultiPoly> local_pieces(const MultiPoly& f,
                                    const std::vector<Rational>& point,
                                    std::size_t chart);

}  // namespace kstab
