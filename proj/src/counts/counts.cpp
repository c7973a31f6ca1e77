#include "kstab/counts.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "kstab/errors.hpp"
#include "kstab/symcore/binomial.hpp"

namespace kstab {

namespace {

using Witness = std::vector<std::pair<std::string, long>>;

long tri(long a) { return a * (a + 1) / 2; }

long small(const Integer& z) {
  if (!z.fits_slong_p()) throw ResourceLimitError("count exceeds 64 bits");
  return z.get_si();
}

std::string join(const std::vector<long>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

// min sum tri(a_i) with 1 <= a_i <= d_i, for every total S at once.
// best[S] is the minimum (or nullopt), choice[i][S] the a_i used.
struct LineTable {
  std::vector<std::optional<long>> best;
  std::vector<std::vector<long>> choice;
  std::vector<long> degrees;

  explicit LineTable(const std::vector<long>& degs) : degrees(degs) {
    best.assign(1, 0L);
    for (long d : degrees) {
      std::vector<std::optional<long>> next(best.size() + d);
      std::vector<long> pick(next.size(), 0);
      for (std::size_t s = 0; s < best.size(); ++s) {
        if (!best[s]) continue;
        for (long a = 1; a <= d; ++a) {
          const long v = *best[s] + tri(a);
          auto& slot = next[s + a];
          if (!slot || v < *slot) {
            slot = v;
            pick[s + a] = a;
          }
        }
      }
      best = std::move(next);
      choice.push_back(std::move(pick));
    }
  }

  std::optional<long> min_at(long total) const {
    if (total < 0 || total >= static_cast<long>(best.size())) return {};
    return best[total];
  }

  std::vector<long> parts(long total) const {
    std::vector<long> a(degrees.size());
    for (std::size_t i = degrees.size(); i-- > 0;) {
      a[i] = choice[i][total];
      total -= a[i];
    }
    return a;
  }
};

void append_parts(Witness& w, const std::string& prefix,
                  const std::vector<long>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    w.emplace_back(prefix + std::to_string(i + 1), values[i]);
  }
}

// Candidate ordering: least slack, then the witness values lexicographically.
struct Candidate {
  long value;
  long threshold;
  Witness witness;

  long slack() const { return value - threshold; }
  bool better_than(const Candidate& other) const {
    if (slack() != other.slack()) return slack() < other.slack();
    return std::lexicographical_compare(
        witness.begin(), witness.end(), other.witness.begin(),
        other.witness.end(),
        [](const auto& x, const auto& y) { return x.second < y.second; });
  }
};

struct Partial {
  std::optional<Candidate> best;
  long cases = 0;

  void offer(Candidate c) {
    ++cases;
    if (!best || c.better_than(*best)) best = std::move(c);
  }
  void merge(Partial other) {
    cases += other.cases;
    if (other.best && (!best || other.best->better_than(*best))) {
      best = std::move(other.best);
    }
  }
};

// Non-decreasing tuples of length len with entries in [lo, hi].
void for_each_sorted_tuple(long len, long lo, long hi,
                           const auto& body) {
  std::vector<long> t(len, lo);
  if (len == 0) {
    body(t);
    return;
  }
  if (lo > hi) return;
  while (true) {
    body(t);
    long i = len - 1;
    while (i >= 0 && t[i] == hi) --i;
    if (i < 0) return;
    ++t[i];
    for (long j = i + 1; j < len; ++j) t[j] = t[i];
  }
}

// Each sweep is split by a single outer parameter; a unit evaluates all
// tuples for one value of it.
using Unit = std::function<void(long, Partial&)>;

Partial run_units(long first, long last, const Unit& unit, int threads) {
  const long count = std::max(0L, last - first + 1);
  std::vector<Partial> parts(count);
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<long>(workers, std::max(1L, count)));
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) unit(first + i, parts[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (long i = w; i < count; i += workers) unit(first + i, parts[i]);
      });
    }
    for (auto& t : pool) t.join();
  }
  Partial total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

CountReport finish(const std::string& tag, const std::string& ranges,
                   Partial total) {
  CountReport report;
  report.lemma = tag;
  report.ranges = ranges;
  report.cases = total.cases;
  if (!total.best) {
    report.note = "no admissible tuples in range";
    return report;
  }
  report.witness = std::move(total.best->witness);
  report.min_value = total.best->value;
  report.threshold = total.best->threshold;
  report.passed = report.min_value >= report.threshold;
  return report;
}

void line_unit(long r, const SweepRanges& rg, Partial& out) {
  for_each_sorted_tuple(r, 2, rg.d_max, [&](const std::vector<long>& degs) {
    const LineTable table(degs);
    for (long n = 2 * r + 3; n <= rg.n_max; ++n) {
      const long total = n + r - 2;
      const auto best = table.min_at(total);
      if (!best) continue;
      Witness w{{"n", n}, {"r", r}};
      append_parts(w, "d", degs);
      append_parts(w, "a", table.parts(total));
      out.offer({*best - total, n + 1, std::move(w)});
    }
  });
}

void ml_unit(long r, MlCase which, const SweepRanges& rg, Partial& out) {
  const long ell_max = which == MlCase::kQuadratic ? r : r + 1;
  for (long n = 2 * r + 3; n <= rg.n_max; ++n) {
    for (long ell = 1; ell <= ell_max; ++ell) {
      const CountReport c = ml2_ml3_bounds(n, r, ell, which);
      out.offer({c.min_value, c.threshold, {{"n", n}, {"r", r}, {"l", ell}}});
    }
  }
}

void quadratic_unit(long n, Partial& out) {
  for (long ell = 1; ell <= n - 2; ++ell) {
    const CountReport c = min_quadratic_bound(n, ell);
    out.offer({c.min_value, c.threshold, {{"n", n}, {"l", ell}, {"b", c.at("b")}}});
  }
}

void cone_unit(long r, bool line_family, const SweepRanges& rg, Partial& out) {
  for (long s = 0; s < r; ++s) {
    for_each_sorted_tuple(s, 2, rg.d_max, [&](const std::vector<long>& degs) {
      long sum_d = 0;
      long sum_tri = 0;
      for (long d : degs) {
        sum_d += d;
        sum_tri += tri(d);
      }
      for (long n = cone_threshold(r, s, degs); n <= rg.n_max; ++n) {
        Witness w{{"n", n}, {"r", r}, {"s", s}};
        append_parts(w, "d", degs);
        if (line_family) {
          out.offer({2 * (n + r - 2 - sum_d) - r, n + 1, std::move(w)});
        } else {
          out.offer({3 * n - 5 - sum_tri, 2 * n, std::move(w)});
        }
      }
    });
  }
}

}  // namespace

long CountReport::at(const std::string& key) const {
  for (const auto& [k, v] : witness) {
    if (k == key) return v;
  }
  throw PreconditionError("witness has no entry '" + key + "'");
}

CountReport line_condition_count(long n, const std::vector<long>& degrees) {
  const long r = static_cast<long>(degrees.size());
  if (r < 1) throw PreconditionError("need at least one degree");
  for (long d : degrees) {
    if (d < 1) throw PreconditionError("degrees must be positive");
  }
  CountReport report;
  report.lemma = "contain-a-line";
  report.ranges = "n=" + std::to_string(n) + " degrees=" + join(degrees);
  report.threshold = n + 1;
  if (n < 2 * r + 3) {
    report.note = "hypothesis n >= 2r+3 not met; no assertion";
    return report;
  }
  const long total = n + r - 2;
  const LineTable table(degrees);
  const auto best = table.min_at(total);
  if (!best) {
    report.note = "sum of degrees below n+r-2; vacuous";
    return report;
  }
  report.cases = 1;
  report.min_value = *best - total;
  report.witness = {{"n", n}, {"r", r}};
  append_parts(report.witness, "a", table.parts(total));
  report.passed = report.min_value >= report.threshold;
  return report;
}

CountReport ml2_ml3_bounds(long n, long r, long ell, MlCase which) {
  if (r < 1 || n < 2 * r + 3) {
    throw PreconditionError("need r >= 1 and n >= 2r+3");
  }
  if (which == MlCase::kAuto) {
    which = ell <= r ? MlCase::kQuadratic : MlCase::kCubic;
  }
  const bool quad = which == MlCase::kQuadratic;
  if (ell < 1 || ell > (quad ? r : r + 1)) {
    throw PreconditionError(quad ? "quadratic case needs 1 <= l <= r"
                                 : "cubic case needs 1 <= l <= r+1");
  }
  CountReport report;
  report.lemma = quad ? "m_l=2" : "m_l=3";
  report.ranges = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                  " l=" + std::to_string(ell);
  report.witness = {{"n", n}, {"r", r}, {"l", ell}};
  report.min_value =
      small(quad ? binomial(n - ell + 1, 2) : binomial(n - ell + 2, 3));
  report.threshold = 2 * n;
  report.cases = 1;
  report.passed = report.min_value >= report.threshold;
  return report;
}

long quadratic_bound(long n, long ell, long b) {
  if (ell < 1 || ell > n - 2) throw PreconditionError("need 1 <= l <= n-2");
  if (b < 0 || b > ell - 1) throw PreconditionError("need 0 <= b <= l-1");
  if (ell == n - 2 && b > n - 4) {
    throw PreconditionError("need b <= n-4 when l = n-2");
  }
  return (2 * ell + 2) * (n - 2 - b) + ell - b * (n - 1 - b);
}

CountReport min_quadratic_bound(long n, long ell) {
  const long b_max = ell == n - 2 ? std::min(ell - 1, n - 4) : ell - 1;
  CountReport report;
  report.lemma = "m_l>2";
  report.ranges = "n=" + std::to_string(n) + " l=" + std::to_string(ell);
  report.threshold = 2 * n;
  long best = std::numeric_limits<long>::max();
  long arg = -1;
  for (long b = 0; b <= b_max; ++b) {
    const long v = quadratic_bound(n, ell, b);
    ++report.cases;
    if (v < best) {
      best = v;
      arg = b;
    }
  }
  if (arg < 0) throw PreconditionError("no admissible b");
  report.min_value = best;
  report.witness = {{"n", n}, {"l", ell}, {"b", arg}};
  report.passed = best >= report.threshold;
  return report;
}

Integer hyp_contain_bound(long m, long d) {
  if (m < 1 || d < 1) throw PreconditionError("need m, d >= 1");
  return binomial(m + d, d);
}

Integer cpi_codim_bound(long m, long c, const std::vector<long>& degrees) {
  const long q = static_cast<long>(degrees.size());
  if (c < 0 || c > q) throw PreconditionError("need 0 <= c <= q");
  if (m < c) throw PreconditionError("need m >= c");
  if (!std::is_sorted(degrees.begin(), degrees.end())) {
    throw PreconditionError("degrees must be ascending");
  }
  Integer total = 0;
  for (long i = 0; i < q - c; ++i) {
    total += binomial(m - c + degrees[i], degrees[i]);
  }
  return total;
}

Integer sing_codim_p(long n, long m, long d, long c) {
  if (n < m + c) throw PreconditionError("need n >= m + c");
  if (d < 1) throw PreconditionError("need d >= 1");
  const Integer first = binomial(n - m + d, d);
  const Rational factor = Rational(n - m - 1, 2) - Rational(c);
  const Integer second =
      (factor * Rational(binomial(n - m - c + d - 1, d - 1))).floor();
  return first < second ? first : second;
}

long cone_threshold(long r, long s, const std::vector<long>& degrees) {
  if (s < 0 || s >= r) throw PreconditionError("need 0 <= s < r");
  if (static_cast<long>(degrees.size()) < s) {
    throw PreconditionError("need at least s degrees");
  }
  long sum_d = 0;
  long sum_tri = 0;
  for (long i = 0; i < s; ++i) {
    if (degrees[i] < 2) throw PreconditionError("degrees must be >= 2");
    sum_d += degrees[i];
    sum_tri += tri(degrees[i]);
  }
  return 2 * r + 3 + std::max(2 * sum_d, sum_tri);
}

const std::vector<std::string>& lemma_tags() {
  static const std::vector<std::string> tags{
      "contain-a-line", "m_l=2", "m_l=3", "m_l>2", "cone-3n-5", "cone-line"};
  return tags;
}

CountReport verify_lemma(const std::string& tag, const SweepRanges& ranges,
                         int threads) {
  if (ranges.n_max < 1 || ranges.r_max < 1 || ranges.d_max < 2) {
    throw PreconditionError("sweep ranges need n_max, r_max >= 1, d_max >= 2");
  }
  std::ostringstream desc;
  desc << "n<=" << ranges.n_max << " r<=" << ranges.r_max
       << " d<=" << ranges.d_max;
  const SweepRanges rg = ranges;
  Partial total;
  if (tag == "contain-a-line") {
    total = run_units(1, rg.r_max, [&](long r, Partial& p) { line_unit(r, rg, p); },
                      threads);
  } else if (tag == "m_l=2" || tag == "m_l=3") {
    const MlCase which = tag == "m_l=2" ? MlCase::kQuadratic : MlCase::kCubic;
    total = run_units(1, rg.r_max,
                      [&](long r, Partial& p) { ml_unit(r, which, rg, p); },
                      threads);
  } else if (tag == "m_l>2") {
    // The surrounding argument runs under n >= 2r+3 >= 5.
    total = run_units(5, rg.n_max, [](long n, Partial& p) { quadratic_unit(n, p); },
                      threads);
    desc.str("");
    desc << "5<=n<=" << rg.n_max << " 1<=l<=n-2";
  } else if (tag == "cone-3n-5" || tag == "cone-line") {
    const bool line = tag == "cone-line";
    total = run_units(1, rg.r_max,
                      [&](long r, Partial& p) { cone_unit(r, line, rg, p); },
                      threads);
  } else {
    throw PreconditionError("unknown lemma tag '" + tag + "'");
  }
  return finish(tag, desc.str(), std::move(total));
}

}  // namespace kstab
