// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "ybe/catalog.hpp"
#include "ybe/harness.hpp"
#include "ybe/solubility.hpp"

using namespace ybe;

namespace {

int failures = 0;

void criterion(int id, const std::string& what, double limit_s, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string err;
  try {
    err = body();
  } catch (const std::exception& e) {
    err = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (err.empty() && s > limit_s) err = "over time limit";
  if (!err.empty()) ++failures;
  std::printf("%s criterion %d: %s (%.3fs, limit %.0fs)%s%s\n", err.empty() ? "PASS" : "FAIL", id, what.c_str(), s,
              limit_s, err.empty() ? "" : " - ", err.c_str());
  std::fflush(stdout);
}

std::string harness(const std::string& name) {
  const auto r = run_harness(name);
  if (r.checked == 0) return "empty corpus";
  if (!r.ok()) return std::to_string(r.failures) + " failures, first: " + r.counterexample.dump();
  return {};
}

}  // namespace

int main() {
  const auto l3 = lyubashenko3();

  criterion(1, "lyubashenko3 is a solution and involutive", 1, [&]() -> std::string {
    const Perm sigma{1, 2, 0}, sigma_inv{2, 0, 1};
    for (Elem x = 0; x < 3; ++x)
      for (Elem y = 0; y < 3; ++y)
        if (l3.lam(x, y) != sigma[y] || l3.rho(x, y) != sigma_inv[y]) return "tables differ from σ, σ^{-1}";
    if (!validate_ybe(l3).ok()) return "validate_ybe failed";
    if (!is_involutive(l3)) return "not involutive";
    return {};
  });

  criterion(2, "lyubashenko3 is simple", 1, [&]() -> std::string {
    if (!is_simple_solution(l3)) return "has a nontrivial congruence";
    for (const auto& p : enumerate_congruences(l3))
      if (!p.is_singletons() && !p.is_one_block()) return "nontrivial quotient " + to_string(p);
    return {};
  });

  criterion(3, "multipermutation level of lyubashenko3 is 1", 1, [&]() -> std::string {
    const auto lvl = multipermutation_level(l3, 8);
    if (lvl != std::optional<std::size_t>(1)) return "level " + (lvl ? std::to_string(*lvl) : std::string("none"));
    return {};
  });

  criterion(4, "permutation brace of lyubashenko3 is the trivial brace on C3", 1, [&]() -> std::string {
    const auto pb = PermBrace::build(l3);
    const auto reference = oracle::perm_group(l3);
    if (pb.order() != 3 || reference.size() != 3) return "order " + std::to_string(pb.order());
    if (!validate_brace(pb.brace()).ok) return "validate_brace failed";
    if (pb.brace().add_table() != pb.brace().mul_table()) return "add != mul";
    return {};
  });

  criterion(5, "no witness for lyubashenko3 (depth 3, target order 3)", 30, [&]() -> std::string {
    const auto v = search_witness(l3, {.max_depth = 3, .max_target_order = 3});
    if (is_soluble_verdict(v)) return "search returned soluble";
    return {};
  });

  criterion(6, "i-simple iff indecomposable on the solution corpus", 300,
            [] { return harness("i-simple-equivalence"); });
  criterion(7, "strong left ideals are lambda and rho invariant (order <= 6)", 300,
            [] { return harness("strong-left-ideal-invariance"); });
  criterion(8, "brace, witness-search and permutation-brace solubility agree (order <= 6)", 900,
            [] { return harness("soluble-equivalence"); });
  criterion(9, "chain witnesses verify strictly for soluble braces (order <= 6)", 300,
            [] { return harness("witness-roundtrip"); });
  criterion(10, "i-kernel ideal checks in the permutation braces", 600, [] { return harness("i-kernel-ideal"); });
  criterion(11, "permutation brace self-checks with 100 random words per solution", 600,
            [] { return harness("perm-brace-selfcheck"); });
  criterion(12, "image point of an i-kernel is trivial", 600, [] { return harness("i-epi-image-point"); });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
