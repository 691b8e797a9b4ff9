#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/morphism.hpp"
#include "ybe/perm_brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct WitnessLevel {
  SkewBrace brace;
  std::vector<Elem> map;                          // source carrier -> brace element
  std::optional<std::vector<Elem>> i_kernel;      // every level but the last
  std::optional<std::vector<Elem>> abelian_ideal; // every level but the first
};

/// Tower of epimorphisms f_k: X -> B_k, k = 0..t.
struct SolubilityWitness {
  FiniteSolution source;
  std::vector<WitnessLevel> levels;

  std::size_t t() const { return levels.empty() ? 0 : levels.size() - 1; }
};

enum class WitnessCondition {
  none,
  i_kernel,          // f_k (k < t) is an i-epimorphism and X_k one of its i-kernels
  epimorphism,       // f_t is an epimorphism of solutions
  refinement,        // ker f_k ⊆ ker f_{k-1}
  initial_level,     // ker f_0 has one block
  final_level,       // ker f_t ⊆ ker ι, checked through injectivity of f_t
  abelian_ideal,     // f_k(X_{k-1}) ⊆ J_k, J_k an abelian ideal of B_k
  coset,             // x ker f_{k-1} y  =>  f_k(x) J_k = f_k(y) J_k
};

std::string to_string(WitnessCondition c);

enum class WitnessStatus { pass, conditional, fail };

std::string to_string(WitnessStatus s);

struct WitnessCheck {
  WitnessStatus status = WitnessStatus::fail;
  WitnessCondition failed = WitnessCondition::none;
  std::size_t level = 0;
  std::string detail;
  bool final_injective = false;

  bool strict_pass() const { return status == WitnessStatus::pass; }
};

struct VerifyOptions {
  /// The source is known to have ι injective (brace solutions), so a
  /// non-injective f_t is a definite failure rather than a conditional pass.
  bool injective_source = false;
};

/// Throws FormatError on structural mismatches (carrier sizes, map ranges,
/// missing or extra optional fields).
WitnessCheck verify_witness(const FiniteSolution& s, const SolubilityWitness& w, const VerifyOptions& options = {});

/// Canonical witness for (B, r_B): B_k = B/K_k with the projections,
/// X_k = K_k and J_k = K_{k-1}/K_k.
SolubilityWitness brace_chain_to_witness(const SkewBrace& b, const BraceChain& chain);

struct SearchBounds {
  std::size_t max_depth = 3;
  std::size_t max_target_order = 6;
  std::size_t congruence_bound = kMaxCongruenceCarrier;
};

struct Soluble {
  SolubilityWitness witness;
};
struct NotSoluble {
  std::string reason;
};
struct Unknown {
  SearchBounds bounds;
  std::string note;
};

using SolubilityVerdict = std::variant<Soluble, NotSoluble, Unknown>;

inline bool is_soluble_verdict(const SolubilityVerdict& v) { return std::holds_alternative<Soluble>(v); }
std::string verdict_name(const SolubilityVerdict& v);

inline constexpr const char* kPermBraceInsoluble = "permutation brace insoluble";

/// Shortest-first search over refining congruence chains whose quotients are
/// realized as brace solutions of order <= max_target_order (at most 7).
/// A witness is only accepted with an injective last level.
SolubilityVerdict search_witness(const FiniteSolution& s, const SearchBounds& bounds = {});

/// A brace B with a solution isomorphism phi from q onto (B, r_B).
struct Realization {
  SkewBrace brace;
  std::vector<Elem> phi;
};

/// Every distinct brace structure on the carrier of q whose solution is q,
/// each given through a brace from enumerate_braces(|q|). Deterministic order.
std::vector<Realization> brace_realizations(const FiniteSolution& q);

struct AttemptReport {
  std::optional<SolubilityWitness> witness;
  std::string route;  // "permutation-brace" or "brace-solution" or "none"
  WitnessCheck perm_route_check;
  std::string detail;
};

/// Builds f_k(x) = h(x) I_k from a soluble chain I_k of the permutation
/// brace, and falls back to a brace realization of s when that tower fails.
AttemptReport attempt_witness_via_perm_brace(const FiniteSolution& s);

struct CorollaryRow {
  SkewBrace brace;
  bool brace_soluble = false;
  bool search_soluble = false;
  bool perm_brace_soluble = false;
  bool agree() const { return brace_soluble == search_soluble && search_soluble == perm_brace_soluble; }
};

struct CorollaryReport {
  std::vector<CorollaryRow> rows;
  std::size_t disagreements = 0;
  bool ok() const { return disagreements == 0; }
};

/// For every enumerated brace B of order <= order_bound (at most 6): brace
/// solubility, witness search on (B, r_B) with depth 3 and target order |B|,
/// and solubility of the permutation brace of (B, r_B).
CorollaryReport corollary_equivalence_harness(std::size_t order_bound, Exec exec = Exec::parallel);

}  // namespace ybe
