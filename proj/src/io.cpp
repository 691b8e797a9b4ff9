#include "ybe/io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace ybe {

namespace {

Json rows(const std::vector<Elem>& flat, std::size_t n) {
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(flat[i * n + j]);
    out.push_back(std::move(row));
  }
  return out;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const ParseOptions& options,
                const std::string& what) {
  if (!j.is_object()) throw FormatError(what + ": expected an object");
  if (!options.strict) return;
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [k, _] : j.items())
    if (!keys.count(k)) throw FormatError(what + ": unknown key \"" + k + "\"");
}

const Json& require(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw FormatError(what + ": missing key \"" + key + "\"");
  return j.at(key);
}

std::size_t as_size(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw FormatError(what + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Elem> as_elems(const Json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": expected an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(static_cast<Elem>(as_size(v, what)));
  return out;
}

std::vector<Elem> as_table(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw FormatError(what + ": expected " + std::to_string(n) + " rows");
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : j) {
    auto r = as_elems(row, what);
    if (r.size() != n) throw FormatError(what + ": row of wrong length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

template <class F>
auto wrap(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw FormatError(what + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const FiniteSolution& s) {
  return Json{{"n", s.size()}, {"lambda", rows(s.lambda_table(), s.size())}, {"rho", rows(s.rho_table(), s.size())}};
}

Json to_json(const SkewBrace& b) {
  return Json{{"n", b.size()},
              {"add", rows(b.add_table(), b.size())},
              {"mul", rows(b.mul_table(), b.size())},
              {"identity", b.identity()}};
}

Json to_json(const SolutionMap& f) {
  return Json{{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"table", f.table}};
}

Json to_json(const SolubilityWitness& w) {
  Json levels = Json::array();
  for (const auto& lv : w.levels) {
    levels.push_back(Json{{"brace", to_json(lv.brace)},
                          {"map", lv.map},
                          {"i_kernel", lv.i_kernel ? Json(*lv.i_kernel) : Json(nullptr)},
                          {"abelian_ideal", lv.abelian_ideal ? Json(*lv.abelian_ideal) : Json(nullptr)}});
  }
  return Json{{"t", w.t()}, {"levels", std::move(levels)}};
}

Json to_json(const SolubilityVerdict& v) {
  Json out{{"verdict", verdict_name(v)}};
  if (const auto* s = std::get_if<Soluble>(&v)) out["witness"] = to_json(s->witness);
  if (const auto* s = std::get_if<NotSoluble>(&v)) out["reason"] = s->reason;
  if (const auto* s = std::get_if<Unknown>(&v)) {
    out["bounds"] = Json{{"max_depth", s->bounds.max_depth},
                         {"max_target_order", s->bounds.max_target_order},
                         {"congruence_bound", s->bounds.congruence_bound}};
    out["note"] = s->note;
  }
  return out;
}

Json to_json(const WitnessCheck& c) {
  Json out{{"status", to_string(c.status)}, {"final_injective", c.final_injective}};
  if (c.failed != WitnessCondition::none) {
    out["condition"] = to_string(c.failed);
    out["level"] = c.level;
    out["detail"] = c.detail;
  }
  return out;
}

Json to_json(const PermBrace& pb) {
  Json out = to_json(pb.brace());
  out["generators"] = pb.group().generators;
  Json ws = Json::array();
  for (const auto& w : pb.group().witnesses) ws.push_back(w);
  out["witnesses"] = std::move(ws);
  return out;
}

FiniteSolution solution_from_json(const Json& j, const ParseOptions& options) {
  const std::string what = "solution";
  check_keys(j, {"n", "lambda", "rho"}, options, what);
  const std::size_t n = as_size(require(j, "n", what), what);
  auto lam = as_table(require(j, "lambda", what), n, what + ".lambda");
  auto rho = as_table(require(j, "rho", what), n, what + ".rho");
  return wrap(what, [&] { return FiniteSolution(n, std::move(lam), std::move(rho)); });
}

SkewBrace brace_from_json(const Json& j, const ParseOptions& options, bool check) {
  const std::string what = "brace";
  check_keys(j, {"n", "add", "mul", "identity", "generators", "witnesses"}, options, what);
  const std::size_t n = as_size(require(j, "n", what), what);
  auto add = as_table(require(j, "add", what), n, what + ".add");
  auto mul = as_table(require(j, "mul", what), n, what + ".mul");
  const auto id = static_cast<Elem>(j.contains("identity") ? as_size(j.at("identity"), what) : 0);
  SkewBrace b = wrap(what, [&] { return SkewBrace(n, std::move(add), std::move(mul), id); });
  if (check)
    if (auto v = validate_brace(b); !v.ok) throw FormatError("brace: " + v.first_violation);
  return b;
}

SolutionMap map_from_json(const Json& j, const ParseOptions& options) {
  const std::string what = "map";
  check_keys(j, {"source", "target", "table"}, options, what);
  SolutionMap f{solution_from_json(require(j, "source", what), options),
                solution_from_json(require(j, "target", what), options),
                as_elems(require(j, "table", what), what + ".table")};
  if (f.table.size() != f.source.size()) throw FormatError("map: table size differs from source size");
  for (Elem v : f.table)
    if (v >= f.target.size()) throw FormatError("map: table value out of range");
  return f;
}

SolubilityWitness witness_from_json(const Json& j, const FiniteSolution& source, const ParseOptions& options) {
  const std::string what = "witness";
  check_keys(j, {"t", "levels"}, options, what);
  const std::size_t t = as_size(require(j, "t", what), what);
  const Json& levels = require(j, "levels", what);
  if (!levels.is_array() || levels.size() != t + 1) throw FormatError("witness: expected t + 1 levels");
  SolubilityWitness w;
  w.source = source;
  for (const auto& lj : levels) {
    check_keys(lj, {"brace", "map", "i_kernel", "abelian_ideal"}, options, "witness level");
    WitnessLevel lv{brace_from_json(require(lj, "brace", what), options, false),
                    as_elems(require(lj, "map", what), what + ".map"), std::nullopt, std::nullopt};
    if (lj.contains("i_kernel") && !lj.at("i_kernel").is_null())
      lv.i_kernel = as_elems(lj.at("i_kernel"), what + ".i_kernel");
    if (lj.contains("abelian_ideal") && !lj.at("abelian_ideal").is_null())
      lv.abelian_ideal = as_elems(lj.at("abelian_ideal"), what + ".abelian_ideal");
    w.levels.push_back(std::move(lv));
  }
  return w;
}

std::string detect_kind(const Json& j) {
  if (j.is_object() && j.contains("lambda")) return "solution";
  if (j.is_object() && j.contains("add")) return "brace";
  throw FormatError("input is neither a solution nor a brace");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::string content_hash(const Json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace ybe
