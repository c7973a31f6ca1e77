#include <algorithm>
#include <numeric>

#include "kstab/errors.hpp"
#include "kstab/slopes.hpp"

namespace kstab {

namespace {

// Rank of linear forms given by their coefficient rows (exact elimination).
std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<long>(rank),
                              rows.end(),
                              [&](const auto& row) { return !row[col].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<long>(rank), pivot);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Rational factor = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] -= factor * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> linear_row(const MultiPoly& f) {
  std::vector<Rational> row(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    row[i] = f.coefficient(Monomial::variable(f.nvars(), i));
  }
  return row;
}

}  // namespace

std::vector<MultiPoly> local_pieces(const MultiPoly& f,
                                    const std::vector<Rational>& point,
                                    std::size_t chart) {
  const std::size_t nvars = f.nvars();
  if (point.size() != nvars) {
    throw PreconditionError("point has the wrong number of coordinates");
  }
  if (chart >= nvars || point[chart].is_zero()) {
    throw PreconditionError("chart coordinate of the point must be nonzero");
  }
  const std::size_t local = nvars - 1;
  std::vector<MultiPoly> images;
  std::size_t next = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    const Rational pj = point[j] / point[chart];
    if (j == chart) {
      images.push_back(MultiPoly::constant(local, 1));
    } else {
      images.push_back(MultiPoly::constant(local, pj) +
                       MultiPoly::variable(local, next++));
    }
  }
  const MultiPoly shifted = f.substitute(images);
  std::vector<MultiPoly> pieces;
  for (long j = 0; j <= f.degree(); ++j) {
    pieces.push_back(shifted.homogeneous_component(j));
  }
  return pieces;
}

PRegularityVerdict p_regularity_check(const std::vector<MultiPoly>& equations,
                                      const std::vector<Rational>& point,
                                      const MultiPoly& h,
                                      const GroebnerLimits& limits) {
  if (equations.empty()) throw PreconditionError("no defining equations");
  const std::size_t nvars = equations.front().nvars();
  for (const auto& f : equations) {
    if (f.nvars() != nvars || f.is_zero() || !f.is_homogeneous()) {
      throw PreconditionError("equations must be nonzero forms in one ring");
    }
  }
  const auto chart_it = std::find_if(point.begin(), point.end(),
                                     [](const Rational& c) { return !c.is_zero(); });
  if (point.size() != nvars || chart_it == point.end()) {
    throw PreconditionError("point must be a projective point of the ambient");
  }
  const std::size_t chart = static_cast<std::size_t>(chart_it - point.begin());
  const std::size_t local = nvars - 1;
  if (h.nvars() != local || h.is_zero() || h.degree() != 1 ||
      !h.is_homogeneous()) {
    throw PreconditionError("h must be a nonzero linear form in the chart");
  }

  // Sort equations by degree to match the profile's polynomial indices.
  std::vector<std::size_t> by_degree(equations.size());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t a, std::size_t b) {
                     return equations[a].degree() < equations[b].degree();
                   });
  std::vector<int> degrees;
  std::vector<std::vector<MultiPoly>> pieces;
  for (std::size_t idx : by_degree) {
    degrees.push_back(static_cast<int>(equations[idx].degree()));
    pieces.push_back(local_pieces(equations[idx], point, chart));
    if (!pieces.back()[0].is_zero()) {
      throw DomainError("point does not lie on X");
    }
  }
  const CIProfile profile(static_cast<int>(local), degrees);

  std::vector<std::vector<Rational>> rows;
  for (const auto& p : pieces) rows.push_back(linear_row(p[1]));
  const std::size_t base_rank = rank(rows);
  rows.push_back(linear_row(h));
  if (rank(rows) == base_rank) {
    throw PreconditionError("h lies in the span of the linear pieces");
  }

  const SlopeSequence seq = build_slope_sequence(profile);
  PRegularityVerdict verdict;
  verdict.k = seq.k();
  verdict.chart = chart;
  verdict.sequence.push_back(h);
  for (int ell = 1; ell <= seq.k(); ++ell) {
    const SlopeEntry& e = seq.at(ell);
    verdict.sequence.push_back(
        pieces[static_cast<std::size_t>(e.source - 1)]
              [static_cast<std::size_t>(e.degree)]);
  }
  const bool has_zero =
      std::any_of(verdict.sequence.begin(), verdict.sequence.end(),
                  [](const MultiPoly& q) { return q.is_zero(); });
  verdict.regular =
      !has_zero && is_regular_sequence(verdict.sequence, local, limits);
  return verdict;
}

}  // namespace kstab
