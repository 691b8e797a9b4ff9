#pragma once

#include <optional>
#include <string>

#include "ybe/io.hpp"

namespace ybe {

struct AnalyzeFlags {
  bool simple = false;
  bool decompose = false;
  bool retract = false;
  bool permbrace = false;
  bool soluble = false;
  SearchBounds bounds;
};

struct AnalysisInput {
  std::string identity;  // catalog name or content hash
  std::optional<SkewBrace> brace;
  FiniteSolution solution;  // associated solution for braces
};

/// Runs the requested analyses; a capacity error in one section is recorded
/// in that section and the others still run.
Json analyze(const AnalysisInput& input, const AnalyzeFlags& flags);

/// Plain-text rendering of an analyze() report.
std::string render_text(const Json& report);

}  // namespace ybe
