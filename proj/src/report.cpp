#include "ybe/report.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace ybe {

namespace {

Json subsets_json(const std::vector<Subset>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.members());
  return out;
}

void section(Json& report, Json& timings, const char* name, const std::function<Json()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Json out;
  try {
    out = body();
  } catch (const CapacityError& e) {
    out = Json{{"error", "capacity"}, {"message", e.what()}};
  }
  report[name] = std::move(out);
  timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Json analyze(const AnalysisInput& input, const AnalyzeFlags& flags) {
  const FiniteSolution& s = input.solution;
  Json report{{"input", input.identity}, {"kind", input.brace ? "brace" : "solution"}, {"n", s.size()}};
  Json timings = Json::object();

  section(report, timings, "validation", [&] {
    const auto v = validate_ybe(s);
    Json out{{"ybe", v.ok()}, {"involutive", v.ok() && is_involutive(s)}, {"twist", is_twist(s)}};
    if (!v.ok()) out["diagnostic"] = v.diagnostic();
    if (input.brace) {
      const auto bv = validate_brace(*input.brace);
      out["brace"] = bv.ok;
      if (!bv.ok) out["brace_diagnostic"] = bv.first_violation;
    }
    return out;
  });
  if (!report["validation"].value("ybe", false)) {
    report["timings"] = std::move(timings);
    return report;
  }

  if (flags.simple)
    section(report, timings, "simple", [&] {
      Json out;
      if (s.size() < 2) {
        out["simple"] = nullptr;
        out["i_simple"] = nullptr;
      } else {
        out["simple"] = is_simple_solution(s);
        out["i_simple"] = is_i_simple(s);
      }
      if (input.brace) out["simple_brace"] = is_simple_brace(*input.brace);
      return out;
    });

  if (flags.decompose)
    section(report, timings, "decompose", [&] {
      const auto d = is_decomposable(s);
      Json out{{"decomposable", d.has_value()}};
      out["partition"] = d ? Json{d->first, d->second} : Json(nullptr);
      return out;
    });

  if (flags.retract)
    section(report, timings, "retract", [&] {
      const auto r = retraction(s);
      const auto level = multipermutation_level(s, s.size() + 1);
      return Json{{"retraction_size", r.solution.size()},
                  {"class_map", r.class_map},
                  {"multipermutation_level", level ? Json(*level) : Json(nullptr)}};
    });

  if (flags.permbrace)
    section(report, timings, "permbrace", [&] {
      const auto pb = PermBrace::build(s);
      const auto chain = is_soluble_brace(pb.brace());
      return Json{{"order", pb.order()},
                  {"generators", pb.group().generators},
                  {"soluble_chain", chain ? subsets_json(chain->ideals) : Json(nullptr)}};
    });

  if (flags.soluble)
    section(report, timings, "soluble", [&] {
      Json out;
      if (input.brace) {
        const auto chain = is_soluble_brace(*input.brace);
        out["brace_chain"] = chain ? subsets_json(chain->ideals) : Json(nullptr);
      }
      const auto verdict = search_witness(s, flags.bounds);
      out["verdict"] = to_json(verdict);
      return out;
    });
  report["timings"] = std::move(timings);
  return report;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "input: " << report.value("input", "") << " (" << report.value("kind", "") << ", n = " << report.value("n", 0)
     << ")\n";
  for (const auto& [name, body] : report.items()) {
    if (name == "input" || name == "kind" || name == "n" || name == "timings") continue;
    os << name << ":\n";
    for (const auto& [key, value] : body.items()) {
      if (key == "verdict" && value.is_object()) {
        os << "  verdict: " << value.value("verdict", "");
        if (value.contains("reason")) os << " (" << value["reason"].get<std::string>() << ")";
        if (value.contains("note")) os << " (" << value["note"].get<std::string>() << ")";
        if (value.contains("witness")) os << " (witness with t = " << value["witness"]["t"].dump() << ")";
        os << '\n';
        continue;
      }
      os << "  " << key << ": " << value.dump() << '\n';
    }
  }
  if (report.contains("timings")) {
    os << "timings (s):";
    for (const auto& [name, t] : report["timings"].items()) os << ' ' << name << '=' << t.get<double>();
    os << '\n';
  }
  return os.str();
}

}  // namespace ybe
