#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kstab/counts.hpp"
#include "kstab/lctbounds.hpp"
#include "kstab/symcore/groebner.hpp"
#include "kstab/symcore/rational.hpp"

namespace kstab::cli {

enum class Format { kJson, kCsv };

/// Settings shared by all subcommands. Command-line flags override values
/// read from a config file.
struct RunConfig {
  Format format = Format::kJson;
  std::uint64_t seed = 0;
  GroebnerLimits limits;
  SweepRanges sweep;
  /// "4,7..20" style lists; see parse_int_list.
  std::string x_range = "4,7..20";
  std::string y_range = "14..20";
  int e = 2;
  std::optional<std::string> config_path;
};

/// Reads a JSON config into `base`. Recognized keys: seed, format,
/// limits.{degree,pairs}, counts.{n_max,r_max,d_max},
/// reproduce.{x_range,y_range,e}. Throws ParseError (with the line number in
/// the message) on malformed JSON and PreconditionError on bad values or
/// unknown keys.
RunConfig load_config(const std::string& path, RunConfig base = {});

/// "4,7..20" -> {4, 7, 8, ..., 20}. Sorted, duplicates removed.
std::vector<int> parse_int_list(const std::string& text);

struct MainTheoremRow {
  char family;  // 'X' or 'Y'
  int n;
  int e;        // 0 for X
  bool in_range;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<Rational> df;  // X rows: Futaki invariant of the degeneration
  std::optional<StabilityVerdict> verdict;
  std::string singular_point;
  /// Failed consistency checks for this row; empty when it matches.
  std::vector<std::string> mismatches;
};

/// Rows for X over x_values and Y (fixed e) over y_values. Rows outside the
/// admissible range are marked and carry no numbers.
std::vector<MainTheoremRow> reproduce_main_theorem(
    const std::vector<int>& x_values, const std::vector<int>& y_values, int e);

/// Runs the tool. Reports go to `out`, diagnostics to `err`. Returns 0 on
/// success, 1 on usage, config or input errors, 2 when a computed result
/// fails one of its consistency checks.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace kstab::cli
