#pragma once

// Report builders behind each subcommand. Internal to the CLI library.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kstab/blowup.hpp"
#include "kstab/cli.hpp"
#include "kstab/cone.hpp"
#include "kstab/slopes.hpp"

namespace kstab::cli {

using Json = nlohmann::ordered_json;

struct Report {
  Json body;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int status = 0;
};

struct LctArgs {
  std::string family;
  std::optional<int> ambient;
  std::vector<int> degrees;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> d;
  std::string epsilon = "1/2";
  Arrangement arrangement = Arrangement::kLargestQuadraticFirst;
};

struct PolyArgs {
  std::vector<std::string> vars;
  std::vector<std::string> polys;
  std::vector<long> weights;
  std::string order = "grevlex";
  /// nvars,ngens,degree: seeded random dense forms instead of polys.
  std::vector<long> random;
};

Report slopes_report(int ambient, const std::vector<int>& degrees,
                     Arrangement arrangement, std::optional<int> skip);
Report lct_report(const LctArgs& args);
Report blowup_report(const Family& family);
Report cone_hilbert_report(int n, long kmax);
Report cone_selfint_report(int n);
Report df_report(const MonomialAction& action);
Report counts_report(const std::vector<std::string>& tags,
                     const SweepRanges& ranges, int threads);
Report reproduce_report(const RunConfig& config);
Report poly_gb_report(const PolyArgs& args, const RunConfig& config);
Report poly_wt_report(const PolyArgs& args);
Report poly_regseq_report(const PolyArgs& args, const RunConfig& config);

Arrangement parse_arrangement(const std::string& text);

}  // namespace kstab::cli
