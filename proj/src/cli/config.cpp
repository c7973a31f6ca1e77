#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kstab/cli.hpp"
#include "kstab/errors.hpp"

namespace kstab::cli {

namespace {

using nlohmann::json;

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) {
      throw PreconditionError("config: unknown key '" + where + key + "'");
    }
  }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw PreconditionError("config: bad value for '" + where + key + "'");
  }
}

}  // namespace

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("config: malformed JSON on line " +
                         std::to_string(line_of(text, byte)),
                     byte);
  }
  if (!doc.is_object()) throw PreconditionError("config: top level must be an object");
  reject_unknown(doc, {"seed", "format", "limits", "counts", "reproduce"}, "");

  if (doc.contains("seed")) base.seed = get<std::uint64_t>(doc, "seed", "");
  if (doc.contains("format")) {
    const auto f = get<std::string>(doc, "format", "");
    if (f == "json") {
      base.format = Format::kJson;
    } else if (f == "csv") {
      base.format = Format::kCsv;
    } else {
      throw PreconditionError("config: format must be json or csv");
    }
  }
  if (doc.contains("limits")) {
    const json& l = doc["limits"];
    reject_unknown(l, {"degree", "pairs"}, "limits.");
    if (l.contains("degree")) base.limits.max_degree = get<long>(l, "degree", "limits.");
    if (l.contains("pairs")) base.limits.max_pairs = get<std::size_t>(l, "pairs", "limits.");
  }
  if (doc.contains("counts")) {
    const json& c = doc["counts"];
    reject_unknown(c, {"n_max", "r_max", "d_max"}, "counts.");
    if (c.contains("n_max")) base.sweep.n_max = get<long>(c, "n_max", "counts.");
    if (c.contains("r_max")) base.sweep.r_max = get<long>(c, "r_max", "counts.");
    if (c.contains("d_max")) base.sweep.d_max = get<long>(c, "d_max", "counts.");
  }
  if (doc.contains("reproduce")) {
    const json& r = doc["reproduce"];
    reject_unknown(r, {"x_range", "y_range", "e"}, "reproduce.");
    if (r.contains("x_range")) base.x_range = get<std::string>(r, "x_range", "reproduce.");
    if (r.contains("y_range")) base.y_range = get<std::string>(r, "y_range", "reproduce.");
    if (r.contains("e")) base.e = get<int>(r, "e", "reproduce.");
  }
  base.config_path = path;
  return base;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::set<int> values;
  std::stringstream items(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw PreconditionError("bad integer '" + s + "' in list '" + text + "'");
    }
    return v;
  };
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      values.insert(to_int(item));
      continue;
    }
    const int lo = to_int(item.substr(0, dots));
    const int hi = to_int(item.substr(dots + 2));
    if (hi < lo) throw PreconditionError("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) values.insert(v);
  }
  if (values.empty()) throw PreconditionError("empty list '" + text + "'");
  return {values.begin(), values.end()};
}

}  // namespace kstab::cli
