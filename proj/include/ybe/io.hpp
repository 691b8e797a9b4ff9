#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ybe/brace.hpp"
#include "ybe/morphism.hpp"
#include "ybe/perm_brace.hpp"
#include "ybe/solubility.hpp"
#include "ybe/solution.hpp"

namespace ybe {

using Json = nlohmann::ordered_json;

/// Strict parsing rejects keys outside the documented set; missing or
/// mistyped keys are always a FormatError.
struct ParseOptions {
  bool strict = false;
};

Json to_json(const FiniteSolution& s);
Json to_json(const SkewBrace& b);
Json to_json(const SolutionMap& f);
Json to_json(const SolubilityWitness& w);
Json to_json(const SolubilityVerdict& v);
Json to_json(const WitnessCheck& c);
/// Brace keys plus "generators" and "witnesses" (signed letters ±(x+1)).
Json to_json(const PermBrace& pb);

FiniteSolution solution_from_json(const Json& j, const ParseOptions& options = {});
/// Also checks the brace axioms unless check is false.
SkewBrace brace_from_json(const Json& j, const ParseOptions& options = {}, bool check = true);
SolutionMap map_from_json(const Json& j, const ParseOptions& options = {});
/// The witness file carries no source; the caller supplies it.
SolubilityWitness witness_from_json(const Json& j, const FiniteSolution& source, const ParseOptions& options = {});

/// "solution" or "brace", decided by the keys present.
std::string detect_kind(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// FNV-1a 64 of the compact serialization, as 16 hex digits.
std::string content_hash(const Json& j);

}  // namespace ybe
