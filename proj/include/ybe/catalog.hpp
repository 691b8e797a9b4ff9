#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct CatalogEntry {
  std::string name;
  std::string kind;  // "solution" or "brace"
  std::variant<FiniteSolution, SkewBrace> payload;
  std::string note;

  FiniteSolution solution() const;  // the associated solution for braces
};

/// lyubashenko3, twist1..twist4, union-twist1-lyubashenko3, and
/// trivial-<group> for every catalog group including A5.
const std::vector<CatalogEntry>& builtin_catalog();

/// Exact name lookup; "twist<N>" is accepted for any N >= 1.
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);

/// λ_x = σ and ρ_y = σ^{-1} on {0, 1, 2} with σ(y) = y + 1 mod 3.
FiniteSolution lyubashenko3();

}  // namespace ybe
