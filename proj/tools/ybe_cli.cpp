#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "ybe/catalog.hpp"
#include "ybe/harness.hpp"
#include "ybe/io.hpp"
#include "ybe/report.hpp"

namespace fs = std::filesystem;
using namespace ybe;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kCapacity = 2, kParse = 3 };

struct Input {
  std::string identity;
  std::optional<SkewBrace> brace;  // unchecked
  FiniteSolution solution;
};

// A path wins over a catalog name of the same spelling.
Input load_input(const std::string& arg, bool strict) {
  if (fs::exists(arg)) {
    const Json j = read_json_file(arg);
    Input in{content_hash(j), std::nullopt, {}};
    if (detect_kind(j) == "brace") {
      in.brace = brace_from_json(j, {.strict = strict}, false);
    } else {
      in.solution = solution_from_json(j, {.strict = strict});
    }
    if (in.brace) {
      if (auto v = validate_brace(*in.brace); !v.ok) return in;  // caller reports
      in.solution = associated_solution(*in.brace);
    }
    return in;
  }
  if (auto e = find_catalog_entry(arg)) {
    Input in{e->name, std::nullopt, e->solution()};
    if (const auto* b = std::get_if<SkewBrace>(&e->payload)) in.brace = *b;
    return in;
  }
  throw FormatError("no such file or catalog entry: " + arg);
}

// Returns an empty string when the input is a valid solution (and brace).
std::string input_problem(const Input& in) {
  if (in.brace)
    if (auto v = validate_brace(*in.brace); !v.ok) return "invalid brace: " + v.first_violation;
  if (auto v = validate_ybe(in.solution); !v.ok()) return "invalid solution: " + v.diagnostic();
  return {};
}

void emit(const Json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_validate(const std::string& arg, bool strict, bool as_json) {
  const Input in = load_input(arg, strict);
  Json out{{"input", in.identity}};
  std::string text;
  bool ok = true;
  if (in.brace) {
    const auto bv = validate_brace(*in.brace);
    out["brace"] = bv.ok;
    if (!bv.ok) {
      ok = false;
      out["diagnostic"] = bv.first_violation;
      text = "invalid brace: " + bv.first_violation + '\n';
    }
  }
  if (ok) {
    const auto v = validate_ybe(in.solution);
    out["ybe"] = v.ok();
    if (!v.ok()) {
      ok = false;
      out["diagnostic"] = v.diagnostic();
      text = "invalid solution: " + v.diagnostic() + '\n';
    } else {
      out["involutive"] = is_involutive(in.solution);
      text = "ok: " + in.identity + " (n = " + std::to_string(in.solution.size()) + ")\n";
    }
  }
  out["ok"] = ok;
  emit(out, as_json, text);
  return ok ? kOk : kInvalid;
}

int cmd_analyze(const std::string& arg, AnalyzeFlags flags, bool strict, bool as_json) {
  const Input in = load_input(arg, strict);
  if (in.brace)
    if (auto v = validate_brace(*in.brace); !v.ok) {
      std::cerr << "invalid brace: " << v.first_violation << '\n';
      return kInvalid;
    }
  const Json report = analyze({in.identity, in.brace, in.solution}, flags);
  emit(report, as_json, render_text(report));
  return report["validation"].value("ybe", false) ? kOk : kInvalid;
}

int cmd_enumerate(const std::string& kind, std::size_t n, const std::string& out_dir, bool as_json) {
  std::vector<Json> objects;
  if (kind == "solutions" || kind == "involutive") {
    const auto mode = kind == "solutions" ? EnumerationMode::all : EnumerationMode::involutive;
    for (const auto& s : enumerate_solutions(n, mode)) objects.push_back(to_json(s));
  } else if (kind == "braces") {
    for (const auto& b : enumerate_braces(n)) objects.push_back(to_json(b));
  } else {
    throw FormatError("unknown kind \"" + kind + "\" (solutions, involutive, braces)");
  }
  fs::create_directories(out_dir);
  Json files = Json::array();
  for (const auto& j : objects) {
    const std::string name = kind + "-n" + std::to_string(n) + "-" + content_hash(j) + ".json";
    write_json_file(fs::path(out_dir) / name, j);
    files.push_back(name);
  }
  emit(Json{{"kind", kind}, {"n", n}, {"count", objects.size()}, {"files", files}}, as_json,
       "wrote " + std::to_string(objects.size()) + " files to " + out_dir + "\n");
  return kOk;
}

int cmd_harness(const std::string& name, const HarnessOptions& options, bool as_json) {
  std::vector<std::string> names = name == "all" ? harness_names() : std::vector<std::string>{name};
  bool ok = true;
  Json all = Json::array();
  for (const auto& h : names) {
    const auto r = run_harness(h, options);
    ok = ok && r.ok();
    Json j{{"name", r.name}, {"ok", r.ok()}, {"checked", r.checked}, {"failures", r.failures},
           {"seconds", r.seconds}, {"warnings", r.warnings}};
    if (!r.ok()) j["counterexample"] = r.counterexample;
    all.push_back(j);
    if (!as_json) {
      for (const auto& w : r.warnings) std::cerr << "warning: " << h << ": " << w << '\n';
      std::cout << (r.ok() ? "PASS " : "FAIL ") << h << "  checked=" << r.checked << " failures=" << r.failures
                << " time=" << r.seconds << "s\n";
      if (!r.ok()) std::cout << r.counterexample.dump() << '\n';
    }
  }
  if (as_json) std::cout << all.dump(2) << '\n';
  return ok ? kOk : kInvalid;
}

int cmd_catalog(bool as_json) {
  Json out = Json::array();
  std::string text;
  for (const auto& e : builtin_catalog()) {
    const std::size_t n = e.solution().size();
    out.push_back(Json{{"name", e.name}, {"kind", e.kind}, {"n", n}, {"note", e.note}});
    text += e.name + "  " + e.kind + "  n=" + std::to_string(n) + "  " + e.note + '\n';
  }
  emit(out, as_json, text);
  return kOk;
}

int cmd_permbrace(const std::string& arg, const std::string& out_file, bool strict) {
  const Input in = load_input(arg, strict);
  if (const auto p = input_problem(in); !p.empty()) {
    std::cerr << p << '\n';
    return kInvalid;
  }
  const auto pb = PermBrace::build(in.solution);
  const Json j = to_json(pb);
  if (out_file.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(out_file, j);
  return kOk;
}

int cmd_soluble(const std::string& arg, const SearchBounds& bounds, const std::string& witness_out,
                const std::string& verify, bool strict, bool as_json) {
  const Input in = load_input(arg, strict);
  if (const auto p = input_problem(in); !p.empty()) {
    std::cerr << p << '\n';
    return kInvalid;
  }
  if (!verify.empty()) {
    const auto w = witness_from_json(read_json_file(verify), in.solution, {.strict = strict});
    const auto check = verify_witness(in.solution, w, {.injective_source = in.brace.has_value()});
    emit(to_json(check), as_json,
         to_string(check.status) + (check.failed == WitnessCondition::none ? "" : " (" + to_string(check.failed) +
                                                                                       ": " + check.detail + ")") +
             '\n');
    return check.status == WitnessStatus::fail ? kInvalid : kOk;
  }
  const auto verdict = search_witness(in.solution, bounds);
  Json j = to_json(verdict);
  if (const auto* s = std::get_if<Soluble>(&verdict); s && !witness_out.empty())
    write_json_file(witness_out, to_json(s->witness));
  std::string text = verdict_name(verdict);
  if (const auto* u = std::get_if<Unknown>(&verdict)) text += " (" + u->note + ")";
  if (const auto* ns = std::get_if<NotSoluble>(&verdict)) text += " (" + ns->reason + ")";
  if (const auto* s = std::get_if<Soluble>(&verdict)) text += " (witness with t = " + std::to_string(s->witness.t()) + ")";
  emit(j, as_json, text + '\n');
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Yang-Baxter solutions and skew braces"};
  app.require_subcommand(1);
  bool as_json = false, strict = false;
  std::size_t max_order = 0, max_depth = 3;
  std::uint64_t seed = HarnessOptions{}.seed;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("--strict", strict, "Reject unknown keys in input files");

  std::string input;
  auto* validate = app.add_subcommand("validate", "Check a solution or brace file (or catalog name)");
  validate->add_option("input", input)->required();

  AnalyzeFlags flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report on a solution or brace");
  analyze_cmd->add_option("input", input)->required();
  analyze_cmd->add_flag("--simple", flags.simple);
  analyze_cmd->add_flag("--decompose", flags.decompose);
  analyze_cmd->add_flag("--retract", flags.retract);
  analyze_cmd->add_flag("--permbrace", flags.permbrace);
  analyze_cmd->add_flag("--soluble", flags.soluble);
  analyze_cmd->add_option("--max-order", max_order, "Largest brace order tried as a witness level");
  analyze_cmd->add_option("--max-depth", max_depth, "Longest witness tower");

  std::string kind, out_dir;
  std::size_t n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Write every object of a kind and size to a directory");
  enumerate->add_option("kind", kind, "solutions | involutive | braces")->required();
  enumerate->add_option("n", n)->required();
  enumerate->add_option("out_dir", out_dir)->required();

  std::string harness_name;
  auto* harness = app.add_subcommand("harness", "Run a named property harness (or all)");
  harness->add_option("name", harness_name)->required();
  harness->add_option("--max-order", max_order, "Corpus bound");
  harness->add_option("--seed", seed, "Seed for randomized samples");

  auto* catalog = app.add_subcommand("catalog", "List built-in examples");

  std::string out_file;
  auto* permbrace = app.add_subcommand("permbrace", "Export the permutation brace");
  permbrace->add_option("input", input)->required();
  permbrace->add_option("-o,--output", out_file);

  std::string witness_out, verify;
  auto* soluble = app.add_subcommand("soluble", "Search for a solubility witness, or verify one");
  soluble->add_option("input", input)->required();
  soluble->add_option("--max-order", max_order, "Largest brace order tried as a witness level");
  soluble->add_option("--max-depth", max_depth, "Longest witness tower");
  soluble->add_option("--witness-out", witness_out, "Write the witness here when one is found");
  soluble->add_option("--verify", verify, "Verify this witness file instead of searching");

  for (auto* sub : {validate, analyze_cmd, enumerate, harness, catalog, permbrace, soluble}) {
    sub->add_flag("--json", as_json, "Machine-readable output");
    sub->add_flag("--strict", strict, "Reject unknown keys in input files");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  SearchBounds bounds;
  bounds.max_depth = max_depth;
  if (max_order) bounds.max_target_order = max_order;
  flags.bounds = bounds;

  try {
    if (*validate) return cmd_validate(input, strict, as_json);
    if (*analyze_cmd) return cmd_analyze(input, flags, strict, as_json);
    if (*enumerate) return cmd_enumerate(kind, n, out_dir, as_json);
    if (*harness) return cmd_harness(harness_name, {.max_order = max_order, .seed = seed}, as_json);
    if (*catalog) return cmd_catalog(as_json);
    if (*permbrace) return cmd_permbrace(input, out_file, strict);
    if (*soluble) return cmd_soluble(input, bounds, witness_out, verify, strict, as_json);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
