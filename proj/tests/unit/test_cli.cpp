#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kstab/cli.hpp"
#include "kstab/errors.hpp"
#include "json.hpp"

using namespace kstab;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome kstab_run(std::vector<std::string> args) {
  args.insert(args.begin(), "kstab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json result_of(const Outcome& o) { return json::parse(o.out).at("result"); }

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

// Every string that looks like "p/q" or an integer must survive a round trip
// through Rational::parse unchanged.
void check_rationals(const json& j, int& seen) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) return;
    if (s.find('/') == std::string::npos) return;
    ++seen;
    ASSERT_EQ(Rational::parse(s).str(), s);
    return;
  }
  if (j.is_structured()) {
    for (const auto& v : j) check_rationals(v, seen);
  }
}

}  // namespace

TEST(Cli, SlopesJsonAndCsv) {
  const Outcome j = kstab_run({"slopes", "--ambient", "13", "--degrees", "2,12"});
  ASSERT_EQ(j.code, 0) << j.err;
  const json r = result_of(j);
  EXPECT_EQ(r.at("entries").size(), 14u);
  EXPECT_EQ(r.at("product"), "18");
  EXPECT_EQ(r.at("first_quadratic_index"), 3);

  const Outcome lex = kstab_run(
      {"slopes", "--ambient", "13", "--degrees", "2,12", "--arrangement", "lexicographic"});
  ASSERT_EQ(lex.code, 0);
  EXPECT_EQ(result_of(lex).at("first_quadratic_index"), 4);

  const Outcome c = kstab_run({"--format", "csv", "slopes", "--ambient", "13", "--degrees", "2,12"});
  ASSERT_EQ(c.code, 0) << c.err;
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "position,source,degree,beta,lambda,product");
  int rows = 0;
  std::string last;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    last = line;
  }
  EXPECT_EQ(rows, 14);
  EXPECT_EQ(last.substr(last.rfind(',') + 1), "18");
}

TEST(Cli, Lct) {
  const Outcome o = kstab_run({"lct", "--family", "hypersurface", "--n", "5", "--d", "12"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = result_of(o);
  EXPECT_EQ(r.at("value"), "1/2");
  EXPECT_EQ(r.at("method"), "hypersurface-pukhlikov");
}

TEST(Cli, Blowup) {
  const Outcome x = kstab_run({"blowup", "--family", "X", "--n", "7"});
  ASSERT_EQ(x.code, 0) << x.err;
  EXPECT_EQ(result_of(x).at("alpha"), "7/8");
  EXPECT_EQ(result_of(x).at("beta"), "0");
  const Outcome y = kstab_run({"blowup", "--family", "Y", "--n", "14", "--e", "2"});
  ASSERT_EQ(y.code, 0) << y.err;
  EXPECT_EQ(result_of(y).at("beta"), "-1/15");
}

TEST(Cli, ConeAndDf) {
  const Outcome s = kstab_run({"cone", "selfint", "--n", "7"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(result_of(s).at("selfintersection"), "8");
  EXPECT_TRUE(result_of(s).at("matches").get<bool>());

  const Outcome h = kstab_run({"cone", "hilbert", "--n", "4", "--kmax", "5"});
  ASSERT_EQ(h.code, 0) << h.err;
  const json rows = result_of(h).at("rows");
  EXPECT_EQ(rows.back().at("k"), 5);
  EXPECT_EQ(rows.back().at("dim"), "6");

  const Outcome d = kstab_run(
      {"df", "--ambient", "2", "--weights", "1,0,0", "--eq-degree", "2", "--eq-weight", "1"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(result_of(d).at("df"), "-1/4");
}

TEST(Cli, CountsVerify) {
  const Outcome o = kstab_run({"counts", "verify"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = result_of(o);
  EXPECT_TRUE(r.at("passed").get<bool>());
  EXPECT_EQ(r.at("reports").size(), 6u);

  const Outcome one = kstab_run({"counts", "verify", "--lemma", "m_l=2", "--n-max", "30"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(result_of(one).at("reports").size(), 1u);

  EXPECT_EQ(kstab_run({"counts", "verify", "--lemma", "bogus"}).code, 1);
}

TEST(Cli, ReproduceMainTheorem) {
  const Outcome o = kstab_run({"reproduce", "main-theorem"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = result_of(o);
  EXPECT_TRUE(r.at("consistent").get<bool>());
  for (const auto& row : r.at("rows")) {
    if (row.at("family") == "X") {
      EXPECT_EQ(row.at("verdict"), "strictly-K-semistable");
      EXPECT_EQ(row.at("df"), "0");
    } else {
      EXPECT_EQ(row.at("verdict"), "K-unstable");
    }
  }
  // Out-of-range values are reported, not failed.
  const Outcome gated = kstab_run({"reproduce", "main-theorem", "--x-range", "2,3,4", "--y-range", "5"});
  ASSERT_EQ(gated.code, 0) << gated.err;
  int flagged = 0;
  const json gated_result = result_of(gated);
  for (const auto& row : gated_result.at("rows")) {
    if (row.at("status") == "hypothesis not met") ++flagged;
  }
  EXPECT_GE(flagged, 1);
}

TEST(Cli, Poly) {
  const Outcome gb = kstab_run({"poly", "gb", "--vars", "x,y", "--polys", "x^2-y;x*y-1"});
  ASSERT_EQ(gb.code, 0) << gb.err;
  EXPECT_EQ(result_of(gb).at("basis").size(), 3u);
  EXPECT_EQ(result_of(gb).at("dimension"), 0);

  const Outcome wt = kstab_run(
      {"poly", "wt", "--vars", "x,y", "--polys", "x^4+y^5", "--weights", "5,4"});
  ASSERT_EQ(wt.code, 0) << wt.err;
  EXPECT_EQ(result_of(wt).at("orders").at(0).at("weighted_order"), 20);

  const Outcome rs = kstab_run({"poly", "regseq", "--vars", "x,y,z", "--polys", "x;y;z"});
  ASSERT_EQ(rs.code, 0) << rs.err;
  EXPECT_TRUE(result_of(rs).at("regular").get<bool>());

  EXPECT_EQ(kstab_run({"poly", "gb", "--vars", "x,y", "--polys", "x^2+"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(kstab_run({}).code, 1);
  EXPECT_EQ(kstab_run({"frobnicate"}).code, 1);
  EXPECT_EQ(kstab_run({"slopes", "--ambient", "13"}).code, 1);
  EXPECT_EQ(kstab_run({"--format", "xml", "slopes", "--ambient", "13", "--degrees", "2"}).code, 1);
  EXPECT_EQ(kstab_run({"blowup", "--family", "X", "--n", "1"}).code, 1);
  EXPECT_EQ(kstab_run({"blowup", "--family", "X", "--n", "5"}).code, 1);
  EXPECT_EQ(kstab_run({"--help"}).code, 0);
}

TEST(Cli, ResourceLimitIsReported) {
  const Outcome o = kstab_run({"--limit-pairs", "1", "poly", "gb", "--vars", "x,y,z",
                               "--polys", "x^2-y*z;y^2-x*z;z^2-x*y+x"});
  EXPECT_EQ(o.code, 1);
  EXPECT_FALSE(o.err.empty());
}

TEST(Cli, ConfigFiles) {
  const auto minimal = temp_file("kstab_min.json", "{\"seed\": 1}\n");
  const Outcome a = kstab_run({"--config", minimal, "cone", "selfint", "--n", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  const json header = json::parse(a.out).at("header");
  EXPECT_EQ(header.at("seed"), 1);

  const auto sweep = temp_file("kstab_sweep.json",
                               "{\n  \"counts\": {\"n_max\": 20, \"r_max\": 2, \"d_max\": 5}\n}\n");
  const Outcome b = kstab_run({"--config", sweep, "counts", "verify", "--lemma", "m_l=2"});
  ASSERT_EQ(b.code, 0) << b.err;
  const std::string ranges = result_of(b).at("reports").at(0).at("ranges");
  EXPECT_NE(ranges.find("n<=20"), std::string::npos);
  EXPECT_NE(ranges.find("r<=2"), std::string::npos);
  // Flags override the file.
  const Outcome c = kstab_run(
      {"--config", sweep, "counts", "verify", "--lemma", "m_l=2", "--n-max", "25"});
  ASSERT_EQ(c.code, 0);
  EXPECT_NE(result_of(c).at("reports").at(0).at("ranges").get<std::string>().find("n<=25"),
            std::string::npos);

  const auto broken = temp_file("kstab_bad.json", "{\n  \"seed\": 1,\n  \"format\" \"csv\"\n}\n");
  const Outcome d = kstab_run({"--config", broken, "cone", "selfint", "--n", "4"});
  EXPECT_EQ(d.code, 1);
  EXPECT_NE(d.err.find("line 3"), std::string::npos) << d.err;

  const auto unknown = temp_file("kstab_unknown.json", "{\"sede\": 1}");
  EXPECT_EQ(kstab_run({"--config", unknown, "cone", "selfint", "--n", "4"}).code, 1);
  EXPECT_THROW(cli::load_config(broken), ParseError);
  EXPECT_THROW(cli::load_config(unknown), PreconditionError);
  const cli::RunConfig cfg = cli::load_config(sweep);
  EXPECT_EQ(cfg.sweep.n_max, 20);
  EXPECT_EQ(cfg.sweep.r_max, 2);
  EXPECT_EQ(cfg.sweep.d_max, 5);
}

TEST(Cli, IntList) {
  EXPECT_EQ(cli::parse_int_list("4,7..10"), (std::vector<int>{4, 7, 8, 9, 10}));
  EXPECT_EQ(cli::parse_int_list("5,3,5"), (std::vector<int>{3, 5}));
  EXPECT_THROW(cli::parse_int_list("4,x"), Error);
  EXPECT_THROW(cli::parse_int_list("9..3"), Error);
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  const std::vector<std::vector<std::string>> commands{
      {"--seed", "7", "counts", "verify"},
      {"--seed", "7", "reproduce", "main-theorem"},
      {"--seed", "7", "poly", "regseq", "--random", "4,3,2"},
      {"--seed", "7", "poly", "gb", "--random", "3,3,2"},
  };
  for (const auto& cmd : commands) {
    ::setenv("KSTAB_THREADS", "1", 1);
    const Outcome a = kstab_run(cmd);
    ::setenv("KSTAB_THREADS", "6", 1);
    const Outcome b = kstab_run(cmd);
    ::unsetenv("KSTAB_THREADS");
    const Outcome c = kstab_run(cmd);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
  }
  ::setenv("KSTAB_THREADS", "zero", 1);
  EXPECT_EQ(kstab_run({"counts", "verify"}).code, 1);
  ::unsetenv("KSTAB_THREADS");
}

TEST(Cli, RationalsRoundTrip) {
  const std::vector<std::vector<std::string>> commands{
      {"reproduce", "main-theorem"},
      {"blowup", "--family", "Y", "--n", "19", "--e", "3"},
      {"slopes", "--ambient", "15", "--degrees", "2,2,12"},
      {"df", "--ambient", "2", "--weights", "1,0,0", "--eq-degree", "2", "--eq-weight", "1"},
  };
  int seen = 0;
  for (const auto& cmd : commands) {
    const Outcome o = kstab_run(cmd);
    ASSERT_EQ(o.code, 0) << o.err;
    check_rationals(json::parse(o.out), seen);
  }
  EXPECT_GT(seen, 10);
}
