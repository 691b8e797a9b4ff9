#pragma once

#include <string>
#include <vector>

#include "ybe/io.hpp"
#include "ybe/morphism.hpp"

namespace ybe {

struct HarnessOptions {
  /// 0 keeps the harness default (solutions n <= 4, braces of order <= 6).
  std::size_t max_order = 0;
  std::uint64_t seed = 20240917;
  std::size_t samples = 100;  // random element/word pairs per solution
  Exec exec = Exec::parallel;
};

struct HarnessResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  Json counterexample;  // first failing object in corpus order, or null
  std::vector<std::string> warnings;
  double seconds = 0;

  bool ok() const { return failures == 0; }
};

std::vector<std::string> harness_names();
/// Throws PreconditionError for an unknown name.
HarnessResult run_harness(const std::string& name, const HarnessOptions& options = {});

/// Every solution with n <= min(max_n, 3), then the involutive ones with
/// n = 4 when max_n >= 4.
std::vector<FiniteSolution> solution_corpus(std::size_t max_n, Exec exec = Exec::parallel);
/// Every enumerated brace of order <= max_order, by order.
std::vector<SkewBrace> brace_corpus(std::size_t max_order);

struct IEpimorphism {
  SolutionMap map;
  std::vector<std::vector<Elem>> i_kernels;
  std::string origin;
  // Set for maps that come from brace data.
  std::optional<SkewBrace> source_brace;
  std::optional<SkewBrace> target_brace;
};

/// Quotient projections B -> B/I for every ideal I, and the maps B -> C2
/// attached to proper strong left ideals, over braces of order <= max_order.
std::vector<IEpimorphism> brace_i_epimorphisms(std::size_t max_order);
/// Quotient maps s -> s/P for congruences P with at least one i-kernel.
std::vector<IEpimorphism> quotient_i_epimorphisms(const FiniteSolution& s);

/// Whether y0 = f(X0) has λ_{y0} = ρ_{y0} = id and is fixed by every λ_y, ρ_y.
bool image_point_is_trivial(const FiniteSolution& target, Elem y0);

}  // namespace ybe
