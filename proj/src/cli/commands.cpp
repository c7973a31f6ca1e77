#include "commands.hpp"

#include "kstab/counts.hpp"
#include "kstab/errors.hpp"
#include "kstab/lctbounds.hpp"
#include "kstab/symcore/groebner.hpp"
#include "kstab/symcore/parse.hpp"
#include "kstab/symcore/random.hpp"

namespace kstab::cli {

namespace {

Json rat(const Rational& r) { return r.str(); }

Json opt_rat(const std::optional<Rational>& r) {
  return r ? rat(*r) : Json(nullptr);
}

Json int_str(const Integer& z) { return z.get_str(); }

std::string str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

// Scalars of an object as key,value rows.
void key_value_csv(Report& r) {
  r.csv_header = {"key", "value"};
  for (const auto& [k, v] : r.body.items()) {
    if (v.is_structured()) continue;
    r.csv_rows.push_back({k, str(v)});
  }
}

CIProfile profile_of(const LctArgs& a) {
  if (!a.ambient || a.degrees.empty()) {
    throw PreconditionError("--ambient and --degrees are required for --family " +
                            a.family);
  }
  return CIProfile(*a.ambient, a.degrees);
}

int need(const std::optional<int>& v, const char* flag, const std::string& fam) {
  if (!v) throw PreconditionError(std::string(flag) + " is required for --family " + fam);
  return *v;
}

MonomialOrder order_of(const PolyArgs& a, std::size_t nvars) {
  if (a.order == "grevlex") return MonomialOrder::grevlex();
  if (a.order == "weighted") {
    if (a.weights.size() != nvars) {
      throw PreconditionError("--weights needs one weight per variable");
    }
    return MonomialOrder::weighted(WeightVector(a.weights));
  }
  throw PreconditionError("--order must be grevlex or weighted");
}

struct Ring {
  std::vector<std::string> vars;
  std::vector<MultiPoly> polys;
};

Ring ring_of(const PolyArgs& a, std::uint64_t seed) {
  Ring ring;
  if (!a.random.empty()) {
    if (a.random.size() != 3 || a.random[0] < 1 || a.random[1] < 1 ||
        a.random[2] < 1) {
      throw PreconditionError("--random expects nvars,ngens,degree (all >= 1)");
    }
    ring.vars = a.vars.empty() ? default_var_names(a.random[0]) : a.vars;
    if (ring.vars.size() != static_cast<std::size_t>(a.random[0])) {
      throw PreconditionError("--vars does not match the random ring size");
    }
    PolySampler sampler(seed, 9);
    for (long i = 0; i < a.random[1]; ++i) {
      ring.polys.push_back(sampler.form(ring.vars.size(), a.random[2]));
    }
    return ring;
  }
  if (a.vars.empty()) throw PreconditionError("--vars is required");
  ring.vars = a.vars;
  for (const auto& text : a.polys) ring.polys.push_back(parse_poly(text, ring.vars));
  if (ring.polys.empty()) throw PreconditionError("--polys is required");
  return ring;
}

Json poly_list(const std::vector<MultiPoly>& ps, const std::vector<std::string>& vars) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_string(p, vars));
  return out;
}

Json lct_json(const LctBound& b) {
  Json j;
  j["value"] = opt_rat(b.value);
  j["method"] = to_string(b.method);
  j["applicable"] = b.applicable();
  Json hs = Json::array();
  for (const auto& h : b.hypotheses) {
    hs.push_back({{"condition", h.condition}, {"status", to_string(h.status)}});
  }
  j["hypotheses"] = hs;
  j["m"] = b.m ? Json(*b.m) : Json(nullptr);
  j["n0"] = b.n0 ? Json(*b.n0) : Json(nullptr);
  return j;
}

Json report_json(const CountReport& c) {
  Json w = Json::object();
  for (const auto& [k, v] : c.witness) w[k] = v;
  return {{"lemma", c.lemma},       {"ranges", c.ranges},
          {"passed", c.passed},     {"min_value", c.min_value},
          {"threshold", c.threshold}, {"slack", c.slack()},
          {"cases", c.cases},       {"witness", w},
          {"note", c.note}};
}

std::string witness_text(const CountReport& c) {
  std::string s;
  for (const auto& [k, v] : c.witness) {
    if (!s.empty()) s += ' ';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
  if (text == "largest-quadratic-first") return Arrangement::kLargestQuadraticFirst;
  if (text == "lexicographic") return Arrangement::kLexicographic;
  throw PreconditionError("--arrangement must be largest-quadratic-first or lexicographic");
}

Report slopes_report(int ambient, const std::vector<int>& degrees,
                     Arrangement arrangement, std::optional<int> skip) {
  const CIProfile profile(ambient, degrees);
  const SlopeSequence seq = build_slope_sequence(profile, arrangement);
  Report r;
  r.csv_header = {"position", "source", "degree", "beta", "lambda", "product"};
  Json entries = Json::array();
  Rational running = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const SlopeEntry& e = seq.entries()[i];
    running *= e.beta;
    entries.push_back({{"position", i + 1}, {"source", e.source},
                       {"degree", e.degree}, {"beta", rat(e.beta)},
                       {"lambda", e.lambda}, {"product", rat(running)}});
    r.csv_rows.push_back({std::to_string(i + 1), std::to_string(e.source),
                          std::to_string(e.degree), e.beta.str(),
                          std::to_string(e.lambda), running.str()});
  }
  r.body["ambient"] = ambient;
  r.body["degrees"] = profile.degrees();
  r.body["n"] = profile.dim();
  r.body["r"] = profile.codim();
  r.body["k"] = seq.k();
  r.body["arrangement"] = arrangement == Arrangement::kLexicographic
                              ? "lexicographic"
                              : "largest-quadratic-first";
  r.body["first_quadratic_index"] = first_quadratic_index(profile, arrangement);
  r.body["product"] = rat(slope_product(seq));
  if (skip) {
    r.body["skip"] = *skip;
    r.body["product_without_skip"] = rat(slope_product(seq, *skip));
  }
  r.body["entries"] = entries;
  return r;
}

Report lct_report(const LctArgs& a) {
  LctBound b;
  if (a.family == "general") {
    b = lct_lower_bound_general(profile_of(a), need(a.m, "--m", a.family),
                                a.arrangement);
  } else if (a.family == "cy-ci") {
    b = lct_bound_cy_ci(profile_of(a));
  } else if (a.family == "hypersurface") {
    b = lct_bound_hypersurface(need(a.n, "--n", a.family), need(a.d, "--d", a.family));
  } else if (a.family == "cy-hypersurface") {
    b = lct_bound_cy_hypersurface(need(a.n, "--n", a.family));
  } else if (a.family == "large-index") {
    b = lct_large_index(profile_of(a));
  } else if (a.family == "moderate-degree") {
    b = moderate_degree_bound(need(a.n, "--n", a.family), need(a.d, "--d", a.family),
                        Rational::parse(a.epsilon));
  } else {
    throw PreconditionError("unknown --family '" + a.family + "'");
  }
  Report r;
  r.body = lct_json(b);
  key_value_csv(r);
  return r;
}

Report blowup_report(const Family& fam) {
  Report r;
  const bool is_x = fam.kind == Family::Kind::kX;
  r.body["family"] = is_x ? "X" : "Y";
  r.body["n"] = fam.n;
  if (!is_x) r.body["e"] = fam.e;
  const std::string why = family_range_violation(fam);
  if (!why.empty()) throw DomainError(why);
  const WeightedBlowupData data = family_blowup(fam);
  r.body["weights"] = data.weights.values();
  r.body["equation_multiplicities"] = data.eq_mults;
  const KollarInvariants inv = family_invariants(fam);
  r.body["A"] = rat(inv.A);
  r.body["tau"] = rat(inv.tau);
  r.body["eps"] = rat(inv.eps);
  r.body["V"] = rat(inv.V);
  r.body["volF"] = rat(inv.volF);
  r.body["beta"] = rat(inv.beta);
  r.body["beta_total"] = rat(inv.beta * inv.V);
  r.body["nvol"] = rat(inv.nvol);
  r.body["alpha"] = rat(inv.alpha);
  key_value_csv(r);
  return r;
}

Report cone_hilbert_report(int n, long kmax) {
  const ConeProfile profile(n);
  if (kmax < 0) throw PreconditionError("--kmax must be non-negative");
  Report r;
  r.csv_header = {"k", "floor_degree", "dim"};
  Json rows = Json::array();
  for (long k = 0; k <= kmax; ++k) {
    const long deg = floor_divisor_degree(profile, k);
    const Integer dim = cone_graded_dim(profile, k);
    rows.push_back({{"k", k}, {"floor_degree", deg}, {"dim", int_str(dim)}});
    r.csv_rows.push_back({std::to_string(k), std::to_string(deg), dim.get_str()});
  }
  r.body["n"] = n;
  r.body["degree_of_m"] = rat(profile.degree_of_m());
  r.body["rows"] = rows;
  return r;
}

Report cone_selfint_report(int n) {
  const ConeProfile profile(n);
  const Rational value = selfintersection_L(profile);
  Report r;
  r.body["n"] = n;
  r.body["selfintersection"] = rat(value);
  r.body["expected"] = rat(Rational(n + 1));
  r.body["matches"] = value == Rational(n + 1);
  r.status = value == Rational(n + 1) ? 0 : 2;
  key_value_csv(r);
  return r;
}

Report df_report(const MonomialAction& action) {
  const DFExpansion x = df_expansion(action);
  Report r;
  r.body["ambient"] = action.N;
  r.body["weights"] = action.xi;
  r.body["eq_degree"] = action.eq ? Json(action.eq->d0) : Json(nullptr);
  r.body["eq_weight"] = action.eq ? Json(action.eq->mu) : Json(nullptr);
  r.body["a0"] = rat(x.a0);
  r.body["a1"] = rat(x.a1);
  r.body["b0"] = rat(x.b0);
  r.body["b1"] = rat(x.b1);
  r.body["df"] = rat(x.df);
  key_value_csv(r);
  return r;
}

Report counts_report(const std::vector<std::string>& tags,
                     const SweepRanges& ranges, int threads) {
  Report r;
  r.csv_header = {"lemma", "passed", "min_value", "threshold", "slack",
                  "cases", "witness"};
  Json reports = Json::array();
  bool all = true;
  for (const auto& tag : tags) {
    const CountReport c = verify_lemma(tag, ranges, threads);
    all = all && c.passed;
    reports.push_back(report_json(c));
    r.csv_rows.push_back({c.lemma, c.passed ? "true" : "false",
                          std::to_string(c.min_value), std::to_string(c.threshold),
                          std::to_string(c.slack()), std::to_string(c.cases),
                          witness_text(c)});
  }
  r.body["passed"] = all;
  r.body["reports"] = reports;
  r.status = all ? 0 : 2;
  return r;
}

Report reproduce_report(const RunConfig& config) {
  const auto rows = reproduce_main_theorem(parse_int_list(config.x_range),
                                           parse_int_list(config.y_range),
                                           config.e);
  Report r;
  r.csv_header = {"family", "n", "e", "alpha", "beta", "df", "verdict", "status"};
  Json out = Json::array();
  bool ok = true;
  for (const auto& row : rows) {
    const std::string status = !row.in_range          ? "hypothesis not met"
                               : row.mismatches.empty() ? "ok"
                                                        : "mismatch";
    ok = ok && row.mismatches.empty();
    Json j;
    j["family"] = std::string(1, row.family);
    j["n"] = row.n;
    j["e"] = row.family == 'Y' ? Json(row.e) : Json(nullptr);
    j["alpha"] = opt_rat(row.alpha);
    j["beta"] = opt_rat(row.beta);
    j["df"] = opt_rat(row.df);
    j["verdict"] = row.verdict ? Json(to_string(row.verdict->kind)) : Json(nullptr);
    j["justification"] = row.verdict ? Json(row.verdict->justification) : Json(nullptr);
    j["singular_point"] = row.singular_point;
    j["status"] = status;
    j["mismatches"] = row.mismatches;
    out.push_back(j);
    r.csv_rows.push_back({str(j["family"]), std::to_string(row.n), str(j["e"]),
                          str(j["alpha"]), str(j["beta"]), str(j["df"]),
                          str(j["verdict"]), status});
  }
  r.body["x_range"] = config.x_range;
  r.body["y_range"] = config.y_range;
  r.body["e"] = config.e;
  r.body["consistent"] = ok;
  r.body["rows"] = out;
  r.status = ok ? 0 : 2;
  return r;
}

Report poly_gb_report(const PolyArgs& a, const RunConfig& config) {
  const Ring ring = ring_of(a, config.seed);
  const MonomialOrder order = order_of(a, ring.vars.size());
  const auto gb = groebner_basis(ring.polys, order, config.limits);
  Report r;
  r.body["vars"] = ring.vars;
  r.body["order"] = a.order;
  r.body["generators"] = poly_list(ring.polys, ring.vars);
  r.body["basis"] = poly_list(gb, ring.vars);
  r.body["dimension"] = ideal_dimension(gb, ring.vars.size(), order);
  r.csv_header = {"basis"};
  for (const auto& p : gb) r.csv_rows.push_back({to_string(p, ring.vars)});
  return r;
}

Report poly_wt_report(const PolyArgs& a) {
  const Ring ring = ring_of(a, 0);
  const WeightVector w(a.weights);
  Report r;
  r.body["vars"] = ring.vars;
  r.body["weights"] = a.weights;
  Json rows = Json::array();
  r.csv_header = {"poly", "weighted_order"};
  for (const auto& p : ring.polys) {
    const long wt = weighted_order(p, w);
    rows.push_back({{"poly", to_string(p, ring.vars)}, {"weighted_order", wt}});
    r.csv_rows.push_back({to_string(p, ring.vars), std::to_string(wt)});
  }
  r.body["orders"] = rows;
  return r;
}

Report poly_regseq_report(const PolyArgs& a, const RunConfig& config) {
  const Ring ring = ring_of(a, config.seed);
  const bool regular = is_regular_sequence(ring.polys, ring.vars.size(), config.limits);
  Report r;
  r.body["vars"] = ring.vars;
  r.body["polys"] = poly_list(ring.polys, ring.vars);
  r.body["regular"] = regular;
  r.csv_header = {"key", "value"};
  r.csv_rows.push_back({"regular", regular ? "true" : "false"});
  return r;
}

}  // namespace kstab::cli
