#include "kstab/symcore/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

struct Term {
  Monomial m;
  Rational c;
};

// Terms in ascending order, so the leading term is back().
using Poly = std::vector<Term>;

Poly to_poly(const MultiPoly& f, const MonomialOrder& order) {
  Poly p;
  p.reserve(f.size());
  for (const auto& [m, c] : f.terms()) p.push_back({m, c});
  std::sort(p.begin(), p.end(),
            [&](const Term& a, const Term& b) { return order.less(a.m, b.m); });
  return p;
}

MultiPoly to_multipoly(const Poly& p, std::size_t nvars) {
  MultiPoly f(nvars);
  for (const auto& t : p) f.add_term(t.m, t.c);
  return f;
}

void make_monic(Poly& p) {
  const Rational inv = Rational(1) / p.back().c;
  for (auto& t : p) t.c *= inv;
}

// p - c * shift * g, both ascending.
Poly sub_scaled(const Poly& p, const Rational& c, const Monomial& shift,
                const Poly& g, const MonomialOrder& order) {
  Poly out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].m * shift;
    if (i == p.size()) {
      out.push_back({std::move(gm), -(c * g[j].c)});
      ++j;
      continue;
    }
    const int cmp = order.compare(p[i].m, gm);
    if (cmp < 0) {
      out.push_back(p[i++]);
    } else if (cmp > 0) {
      out.push_back({std::move(gm), -(c * g[j].c)});
      ++j;
    } else {
      Rational v = p[i].c - c * g[j].c;
      if (!v.is_zero()) out.push_back({p[i].m, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full normal form of p with respect to `basis` (each element monic).
Poly normal_form(Poly p, const std::vector<Poly>& basis,
                 const MonomialOrder& order, std::size_t skip = SIZE_MAX) {
  Poly remainder;  // collected in descending order, reversed at the end
  while (!p.empty()) {
    const Term& lead = p.back();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const Term& glead = basis[k].back();
      if (glead.m.divides(lead.m)) {
        const Rational c = lead.c / glead.c;
        const Monomial shift = lead.m / glead.m;
        p = sub_scaled(p, c, shift, basis[k], order);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(std::move(p.back()));
      p.pop_back();
    }
  }
  std::reverse(remainder.begin(), remainder.end());
  return remainder;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.back().m, g.back().m);
  Poly scaled_f;
  scaled_f.reserve(f.size());
  const Monomial shift_f = l / f.back().m;
  const Rational inv_f = Rational(1) / f.back().c;
  for (const auto& t : f) scaled_f.push_back({t.m * shift_f, t.c * inv_f});
  return sub_scaled(scaled_f, Rational(1) / g.back().c, l / g.back().m, g,
                    order);
}

long poly_degree(const Poly& p) {
  long d = -1;
  for (const auto& t : p) d = std::max(d, t.m.total_degree());
  return d;
}

}  // namespace

std::vector<MultiPoly> groebner_basis(std::span<const MultiPoly> gens,
                                      const MonomialOrder& order,
                                      const GroebnerLimits& limits) {
  if (gens.empty()) return {};
  const std::size_t nvars = gens.front().nvars();
  if (nvars > limits.max_nvars) {
    throw ResourceLimitError("too many variables for the Groebner engine");
  }
  std::vector<Poly> basis;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) {
      throw PreconditionError("generators live in different rings");
    }
    if (g.is_zero()) throw PreconditionError("zero generator");
    if (g.degree() > limits.max_degree) {
      throw ResourceLimitError("generator degree exceeds the configured cap");
    }
    Poly p = to_poly(g, order);
    make_monic(p);
    basis.push_back(std::move(p));
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  }
  const auto in_pairs = [&](std::size_t a, std::size_t b) {
    return pairs.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pairs.empty()) {
    if (pairs.size() > limits.max_pairs) {
      throw ResourceLimitError("S-pair queue exceeds the configured cap");
    }
    // Normal selection strategy: smallest lcm first.
    auto best = pairs.begin();
    Monomial best_lcm = lcm(basis[best->first].back().m,
                            basis[best->second].back().m);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = lcm(basis[it->first].back().m, basis[it->second].back().m);
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);

    const Monomial& mi = basis[i].back().m;
    const Monomial& mj = basis[j].back().m;
    if (mi.coprime(mj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = basis[k].back().m.divides(best_lcm) && !in_pairs(i, k) &&
              !in_pairs(j, k);
    }
    if (chain) continue;

    Poly h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
    if (h.empty()) continue;
    if (poly_degree(h) > limits.max_degree) {
      throw ResourceLimitError("basis degree exceeds the configured cap");
    }
    make_monic(h);
    const std::size_t index = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t k = 0; k < index; ++k) pairs.emplace(k, index);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another.
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& ma = basis[a].back().m;
      const Monomial& mb = basis[b].back().m;
      // Ties between equal leading monomials keep the lower index.
      redundant = mb.divides(ma) && (ma != mb || b < a);
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  // Inter-reduce the tails.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    minimal[a] = normal_form(minimal[a], minimal, order, a);
    make_monic(minimal[a]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return order.less(b.back().m, a.back().m);
  });
  std::vector<MultiPoly> out;
  out.reserve(minimal.size());
  for (const auto& p : minimal) out.push_back(to_multipoly(p, nvars));
  return out;
}

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis,
                 const MonomialOrder& order) {
  std::vector<Poly> polys;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    Poly p = to_poly(g, order);
    make_monic(p);
    polys.push_back(std::move(p));
  }
  return to_multipoly(normal_form(to_poly(f, order), polys, order), f.nvars());
}

int ideal_dimension(std::span<const MultiPoly> gb, std::size_t nvars,
                    const MonomialOrder& order) {
  if (nvars > 20) throw ResourceLimitError("too many variables for dimension");
  std::vector<unsigned long> supports;
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    const Monomial& lm = g.leading_monomial(order);
    unsigned long mask = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (lm[v] != 0) mask |= 1UL << v;
    }
    if (mask == 0) return -1;
    supports.push_back(mask);
  }
  int best = 0;
  for (unsigned long subset = 0; subset < (1UL << nvars); ++subset) {
    const int size = __builtin_popcountl(subset);
    if (size <= best) continue;
    const bool independent =
        std::none_of(supports.begin(), supports.end(),
                     [&](unsigned long s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool is_regular_sequence(std::span<const MultiPoly> fs, std::size_t nvars,
                         const GroebnerLimits& limits) {
  if (fs.size() > nvars) {
    throw PreconditionError("sequence is longer than the number of variables");
  }
  for (const auto& f : fs) {
    if (f.is_zero() || !f.is_homogeneous()) {
      throw PreconditionError("regular-sequence check needs nonzero forms");
    }
  }
  for (std::size_t i = 1; i <= fs.size(); ++i) {
    const auto gb = groebner_basis(fs.first(i), MonomialOrder::grevlex(),
                                   limits);
    const int dim = ideal_dimension(gb, nvars);
    if (dim != static_cast<int>(nvars - i)) return false;
  }
  return true;
}

}  // namespace kstab
