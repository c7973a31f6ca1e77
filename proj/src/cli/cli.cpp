#include <cstdlib>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "kstab/errors.hpp"

namespace kstab::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Report& r) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << csv_field(cells[i]);
    }
    out << '\n';
  };
  line(r.csv_header);
  for (const auto& row : r.csv_rows) line(row);
}

int thread_count() {
  const char* env = std::getenv("KSTAB_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    throw PreconditionError("KSTAB_THREADS must be a positive integer");
  }
  return static_cast<int>(v);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact invariants for K-stability of Fano complete intersections"};
  app.name("kstab");
  app.require_subcommand(1);

  std::string format;
  std::uint64_t seed = 0;
  std::string config_path;
  long limit_degree = 0;
  std::size_t limit_pairs = 0;
  auto* format_opt = app.add_option("--format", format, "json (default) or csv")
                         ->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed for randomized inputs");
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  auto* deg_opt = app.add_option("--limit-degree", limit_degree,
                                 "Groebner degree cap")->check(CLI::PositiveNumber);
  auto* pairs_opt = app.add_option("--limit-pairs", limit_pairs,
                                   "Groebner pair-queue cap")->check(CLI::PositiveNumber);

  // The selected command fills in the report once settings are merged.
  std::function<Report(const RunConfig&)> action;
  std::string command;

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // slopes
  int ambient = 0;
  std::vector<int> degrees;
  std::string arrangement = "largest-quadratic-first";
  std::optional<int> skip;
  {
    auto* s = sub(&app, "slopes", "Slope sequence of a complete intersection");
    s->add_option("--ambient", ambient, "ambient dimension N")->required();
    s->add_option("--degrees", degrees, "d1,...,dr")->required()->delimiter(',');
    s->add_option("--arrangement", arrangement);
    s->add_option("--skip", skip, "position omitted from the product");
    s->callback([&] {
      command = "slopes";
      action = [&](const RunConfig&) {
        return slopes_report(ambient, degrees, parse_arrangement(arrangement), skip);
      };
    });
  }

  // lct
  LctArgs lct;
  std::string lct_arrangement = "largest-quadratic-first";
  {
    auto* s = sub(&app, "lct", "Lower bounds for lct(X; |H|)");
    s->add_option("--family", lct.family,
                  "general|cy-ci|hypersurface|cy-hypersurface|large-index|moderate-degree")
        ->required();
    s->add_option("--ambient", lct.ambient);
    s->add_option("--degrees", lct.degrees)->delimiter(',');
    s->add_option("--m", lct.m, "slope index (general)");
    s->add_option("--n", lct.n);
    s->add_option("--d", lct.d);
    s->add_option("--epsilon", lct.epsilon, "p/q (moderate-degree)");
    s->add_option("--arrangement", lct_arrangement);
    s->callback([&] {
      command = "lct";
      action = [&](const RunConfig&) {
        lct.arrangement = parse_arrangement(lct_arrangement);
        return lct_report(lct);
      };
    });
  }

  // blowup
  std::string family;
  int fam_n = 0;
  int fam_e = 2;
  {
    auto* s = sub(&app, "blowup", "Kollar component invariants of the X and Y families");
    s->add_option("--family", family)->required()->check(CLI::IsMember({"X", "Y"}));
    s->add_option("--n", fam_n)->required();
    s->add_option("--e", fam_e, "Y only; default 2");
    s->callback([&] {
      command = "blowup";
      action = [&](const RunConfig&) {
        return blowup_report(family == "X" ? Family::x(fam_n) : Family::y(fam_n, fam_e));
      };
    });
  }

  // cone
  int cone_n = 0;
  long kmax = 10;
  {
    auto* s = sub(&app, "cone", "Graded pieces of the orbifold cone");
    s->require_subcommand(1);
    auto* h = sub(s, "hilbert", "dim R_k for k <= kmax");
    h->add_option("--n", cone_n)->required();
    h->add_option("--kmax", kmax);
    h->callback([&] {
      command = "cone hilbert";
      action = [&](const RunConfig&) { return cone_hilbert_report(cone_n, kmax); };
    });
    auto* si = sub(s, "selfint", "(L^n) from the Hilbert function");
    si->add_option("--n", cone_n)->required();
    si->callback([&] {
      command = "cone selfint";
      action = [&](const RunConfig&) { return cone_selfint_report(cone_n); };
    });
  }

  // df
  long df_ambient = 0;
  std::vector<long> df_weights;
  std::optional<long> eq_degree;
  std::optional<long> eq_weight;
  {
    auto* s = sub(&app, "df", "Donaldson-Futaki invariant of a diagonal action");
    s->add_option("--ambient", df_ambient)->required();
    s->add_option("--weights", df_weights, "w0,...,wN")->required()->delimiter(',');
    auto* d0 = s->add_option("--eq-degree", eq_degree);
    auto* mu = s->add_option("--eq-weight", eq_weight);
    d0->needs(mu);
    mu->needs(d0);
    s->callback([&] {
      command = "df";
      action = [&](const RunConfig&) {
        MonomialAction a{df_ambient, df_weights, std::nullopt};
        if (eq_degree) a.eq = MonomialAction::Equation{*eq_degree, *eq_weight};
        return df_report(a);
      };
    });
  }

  // counts
  std::string lemma = "all";
  std::optional<long> n_max;
  std::optional<long> r_max;
  std::optional<long> d_max;
  {
    auto* s = sub(&app, "counts", "Dimension-count inequalities");
    s->require_subcommand(1);
    auto* v = sub(s, "verify", "Sweep one inequality family (or all)");
    v->add_option("--lemma", lemma, "tag or 'all'");
    v->add_option("--n-max", n_max);
    v->add_option("--r-max", r_max);
    v->add_option("--d-max", d_max);
    v->callback([&] {
      command = "counts verify";
      action = [&](const RunConfig& cfg) {
        SweepRanges rg = cfg.sweep;
        if (n_max) rg.n_max = *n_max;
        if (r_max) rg.r_max = *r_max;
        if (d_max) rg.d_max = *d_max;
        const auto tags = lemma == "all" ? lemma_tags() : std::vector<std::string>{lemma};
        return counts_report(tags, rg, thread_count());
      };
    });
  }

  // reproduce
  std::optional<std::string> x_range;
  std::optional<std::string> y_range;
  std::optional<int> rep_e;
  {
    auto* s = sub(&app, "reproduce", "End-to-end verdict tables");
    s->require_subcommand(1);
    auto* m = sub(s, "main-theorem", "alpha, beta and verdicts for the X and Y families");
    m->add_option("--x-range", x_range, "e.g. 4,7..20");
    m->add_option("--y-range", y_range, "e.g. 14..20");
    m->add_option("--e", rep_e, "degree of f in the Y family");
    m->callback([&] {
      command = "reproduce main-theorem";
      action = [&](const RunConfig& cfg) {
        RunConfig c = cfg;
        if (x_range) c.x_range = *x_range;
        if (y_range) c.y_range = *y_range;
        if (rep_e) c.e = *rep_e;
        return reproduce_report(c);
      };
    });
  }

  // poly
  PolyArgs poly;
  {
    auto* s = sub(&app, "poly", "Groebner kernel utilities");
    s->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
      c->add_option("--vars", poly.vars, "x,y,z")->delimiter(',');
      c->add_option("--polys", poly.polys, "f1;f2;...")->delimiter(';');
    };
    auto* gb = sub(s, "gb", "Reduced Groebner basis and dimension");
    add_common(gb);
    gb->add_option("--order", poly.order, "grevlex or weighted");
    gb->add_option("--weights", poly.weights)->delimiter(',');
    gb->add_option("--random", poly.random, "nvars,ngens,degree (seeded)")->delimiter(',');
    gb->callback([&] {
      command = "poly gb";
      action = [&](const RunConfig& cfg) { return poly_gb_report(poly, cfg); };
    });
    auto* wt = sub(s, "wt", "Weighted order at the origin");
    add_common(wt);
    wt->add_option("--weights", poly.weights)->required()->delimiter(',');
    wt->callback([&] {
      command = "poly wt";
      action = [&](const RunConfig&) { return poly_wt_report(poly); };
    });
    auto* rs = sub(s, "regseq", "Regular-sequence test for homogeneous forms");
    add_common(rs);
    rs->add_option("--random", poly.random, "nvars,ngens,degree (seeded)")->delimiter(',');
    rs->callback([&] {
      command = "poly regseq";
      action = [&](const RunConfig& cfg) { return poly_regseq_report(poly, cfg); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path, cfg);
    if (*format_opt) cfg.format = format == "csv" ? Format::kCsv : Format::kJson;
    if (*seed_opt) cfg.seed = seed;
    if (*deg_opt) cfg.limits.max_degree = limit_degree;
    if (*pairs_opt) cfg.limits.max_pairs = limit_pairs;

    const Report report = action(cfg);
    if (cfg.format == Format::kCsv) {
      write_csv(out, report);
    } else {
      Json header;
      header["tool"] = "kstab";
      header["command"] = command;
      header["seed"] = cfg.seed;
      header["config"] = cfg.config_path ? Json(*cfg.config_path) : Json(nullptr);
      header["limits"] = {{"degree", cfg.limits.max_degree},
                          {"pairs", cfg.limits.max_pairs}};
      Json doc;
      doc["header"] = header;
      doc["result"] = report.body;
      out << doc.dump(2) << '\n';
    }
    if (report.status != 0) {
      err << "kstab: a consistency check failed\n";
    }
    return report.status;
  } catch (const std::exception& e) {
    err << "kstab: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace kstab::cli
