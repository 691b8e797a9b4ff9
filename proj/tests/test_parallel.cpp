#include <gtest/gtest.h>

#include "ybe/harness.hpp"
#include "ybe/perm_brace.hpp"
#include "ybe/solubility.hpp"

using namespace ybe;

TEST(SerialParallel, Enumerations) {
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_EQ(enumerate_solutions(n, EnumerationMode::all, Exec::serial),
              enumerate_solutions(n, EnumerationMode::all, Exec::parallel));
  EXPECT_EQ(enumerate_solutions(4, EnumerationMode::involutive, Exec::serial),
            enumerate_solutions(4, EnumerationMode::involutive, Exec::parallel));
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_braces(n, Exec::serial), enumerate_braces(n, Exec::parallel));
}

TEST(SerialParallel, Validation) {
  for (const auto& s : enumerate_solutions(4, EnumerationMode::involutive)) {
    const auto a = validate_ybe(s, Exec::serial), b = validate_ybe(s, Exec::parallel);
    EXPECT_EQ(a.ok(), b.ok());
    EXPECT_EQ(a.failing_count, b.failing_count);
    EXPECT_EQ(a.failing_triples, b.failing_triples);
  }
  // A non-solution with many failing triples: the reported prefix must agree.
  std::vector<Elem> lam(16), rho(16);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) {
      lam[x * 4 + y] = (y + x) % 4;
      rho[x * 4 + y] = (y + 2 * x + 1) % 4;
    }
  const FiniteSolution bad(4, lam, rho);
  const auto a = validate_ybe(bad, Exec::serial), b = validate_ybe(bad, Exec::parallel);
  EXPECT_FALSE(a.ok());
  EXPECT_EQ(a.failing_count, b.failing_count);
  EXPECT_EQ(a.failing_triples, b.failing_triples);
  for (const auto& br : enumerate_braces(6)) EXPECT_EQ(validate_brace(br, Exec::serial).ok, validate_brace(br, Exec::parallel).ok);
}

TEST(SerialParallel, Congruences) {
  for (const auto& s : enumerate_solutions(3, EnumerationMode::all))
    EXPECT_EQ(enumerate_congruences(s, Exec::serial), enumerate_congruences(s, Exec::parallel));
}

TEST(SerialParallel, PermBraceTables) {
  for (const auto& b : enumerate_braces(6)) {
    const auto s = associated_solution(b);
    EXPECT_EQ(PermBrace::build(s, {.exec = Exec::serial}).brace(), PermBrace::build(s, {.exec = Exec::parallel}).brace());
  }
}

TEST(SerialParallel, Harnesses) {
  for (const auto& name : harness_names()) {
    HarnessOptions so{.max_order = 4, .exec = Exec::serial}, po{.max_order = 4, .exec = Exec::parallel};
    const auto a = run_harness(name, so), b = run_harness(name, po);
    EXPECT_EQ(a.checked, b.checked) << name;
    EXPECT_EQ(a.failures, b.failures) << name;
    EXPECT_EQ(a.counterexample, b.counterexample) << name;
  }
  const auto a = corollary_equivalence_harness(4, Exec::serial), b = corollary_equivalence_harness(4, Exec::parallel);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].search_soluble, b.rows[i].search_soluble);
}
