#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ybe/catalog.hpp"
#include "ybe/group_catalog.hpp"
#include "ybe/perm_brace.hpp"

using namespace ybe;

namespace {

std::vector<FiniteSolution> corpus() {
  auto c = enumerate_solutions(3, EnumerationMode::all);
  for (auto& s : enumerate_solutions(4, EnumerationMode::involutive)) c.push_back(s);
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& b : enumerate_braces(m)) c.push_back(associated_solution(b));
  return c;
}

}  // namespace

TEST(PermGroup, OrdersMatchClosureOracle) {
  for (const auto& s : corpus()) {
    const auto g = generate_perm_group(s);
    const auto ref = oracle::perm_group(s);
    ASSERT_EQ(g.order(), ref.size());
    for (const auto& e : g.elements) EXPECT_TRUE(ref.count({e.p, e.q}));
  }
}

TEST(PermGroup, WitnessesArePrefixClosedAndShortest) {
  const auto g = generate_perm_group(associated_solution(trivial_brace(catalog_group("S3"))));
  for (Elem k = 0; k < g.order(); ++k) {
    const auto& w = g.witnesses[k];
    Elem cur = 0;
    for (Letter l : w) cur = g.times_letter(cur, l);
    EXPECT_EQ(cur, k);
    if (k > 0) {
      EXPECT_EQ(g.witnesses[g.parent[k]].size() + 1, w.size());
      EXPECT_LE(g.witnesses[g.parent[k]].size(), w.size());
    }
  }
}

TEST(PermGroup, Examples) {
  EXPECT_EQ(generate_perm_group(twist(4)).order(), 1u);
  const auto l3 = generate_perm_group(lyubashenko3());
  EXPECT_EQ(l3.order(), 3u);
  EXPECT_EQ(l3.generators, (std::vector<Elem>{1, 1, 1}));
  // Trivial S3 brace: generators (id, conjugation by x), so the group is Inn(S3).
  EXPECT_EQ(generate_perm_group(associated_solution(trivial_brace(catalog_group("S3")))).order(), 6u);
  EXPECT_THROW(generate_perm_group(associated_solution(trivial_brace(catalog_group("A5"))), 10), CapacityError);
}

TEST(PermBrace, Lyubashenko3IsTrivialC3) {
  const auto pb = PermBrace::build(lyubashenko3());
  ASSERT_EQ(pb.order(), 3u);
  const auto& b = pb.brace();
  EXPECT_TRUE(validate_brace(b).ok);
  EXPECT_EQ(b.add_table(), b.mul_table());
  EXPECT_TRUE(is_abelian_brace(b));
  // λ of the generator on generators: g_{σ(y)} = g for every y.
  const Elem g = pb.generator(0);
  for (Elem y = 0; y < 3; ++y) EXPECT_EQ(pb.lam_eval(g, Word{letter_of(y)}).index, g);
}

TEST(PermBrace, SingletonCases) {
  EXPECT_EQ(PermBrace::build(twist(3)).order(), 1u);
  EXPECT_EQ(PermBrace::build(associated_solution(trivial_brace(catalog_group("C2")))).order(), 1u);
}

TEST(PermBrace, EvaluationBasics) {
  const auto pb = PermBrace::build(associated_solution(trivial_brace(catalog_group("S3"))));
  for (Elem k = 0; k < pb.order(); ++k) EXPECT_EQ(pb.lam_eval(0, pb.witness(k)).index, k);
  const Word cancel{letter_of(2), letter_of(2, true)};
  for (Elem k = 0; k < pb.order(); ++k) {
    EXPECT_EQ(pb.lam_eval(k, cancel).index, 0u);
    EXPECT_EQ(pb.rho_eval(k, cancel).index, 0u);
  }
  EXPECT_THROW(pb.lam_eval(0, Word{letter_of(9)}), PreconditionError);
  EXPECT_THROW(pb.evaluate(Word{0}), PreconditionError);
}

TEST(PermBrace, SelfChecksAndWitnessIndependence) {
  std::mt19937_64 rng(7);
  for (const auto& s : corpus()) {
    const auto pb = PermBrace::build(s);
    const auto& b = pb.brace();
    ASSERT_TRUE(validate_brace(b).ok);
    Subset gens(b.size());
    for (Elem x = 0; x < s.size(); ++x) gens.insert(pb.generator(x));
    EXPECT_EQ(additive_closure(b, gens), multiplicative_closure(b, gens));
    EXPECT_EQ(ideal_closure(b, gens).size(), b.size());
    for (Elem k = 0; k < b.size(); ++k)
      for (Elem y = 0; y < s.size(); ++y) {
        EXPECT_EQ(b.lambda(k, pb.generator(y)), pb.generator(pb.group().elements[k].p[y]));
        EXPECT_EQ(pb.lambda_generator(y, k), b.lambda(pb.generator(y), k));
        EXPECT_EQ(pb.rho_generator(y, k), b.rho(pb.generator(y), k));
      }
    std::uniform_int_distribution<Elem> elem(0, static_cast<Elem>(b.size() - 1)), gen(0, static_cast<Elem>(s.size() - 1));
    for (int trial = 0; trial < 20; ++trial) {
      const Elem g = elem(rng);
      Word w(rng() % 7);
      for (auto& l : w) l = letter_of(gen(rng), rng() & 1);
      const Elem k = pb.evaluate(w);
      EXPECT_EQ(pb.lam_eval(g, w).index, pb.lam_eval(g, pb.witness(k)).index);
      EXPECT_EQ(pb.rho_eval(g, w).index, pb.rho_eval(g, pb.witness(k)).index);
      EXPECT_EQ(pb.lam_eval(g, w).index, b.lambda(g, k));
      EXPECT_EQ(pb.rho_eval(g, w).index, b.rho(g, k));
      EXPECT_EQ(pb.lam_eval(g, w).witness.size(), w.size());
    }
  }
}

TEST(PermBrace, TableBudget) {
  const auto s = associated_solution(trivial_brace(catalog_group("A5")));
  EXPECT_THROW(PermBrace::build(s, {.table_budget = 100}), CapacityError);
  const auto pb = PermBrace::build(s);
  EXPECT_EQ(pb.order(), 60u);
  EXPECT_FALSE(is_soluble_brace(pb.brace()));
}

TEST(HMap, Examples) {
  const auto l3 = lyubashenko3();
  const auto pb = PermBrace::build(l3);
  const auto h = h_map(l3, pb);
  EXPECT_EQ(h.table, (std::vector<Elem>{1, 1, 1}));
  EXPECT_EQ(h_map(twist(3), PermBrace::build(twist(3))).table, (std::vector<Elem>{0, 0, 0}));
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& b : enumerate_braces(m)) {
      const auto s = associated_solution(b);
      const auto p = PermBrace::build(s);
      EXPECT_TRUE(is_homomorphism(h_map(s, p)));
      EXPECT_EQ(is_soluble_brace(b).has_value(), is_soluble_brace(p.brace()).has_value());
    }
}

TEST(InducedEpi, Examples) {
  const auto l3 = lyubashenko3();
  const auto pb = PermBrace::build(l3);
  const auto pt = PermBrace::build(twist(1));
  const auto to_point = induced_perm_epi({l3, twist(1), {0, 0, 0}}, pb, pt);
  EXPECT_EQ(to_point.kernel.size(), 3u);
  const auto id = induced_perm_epi({l3, l3, {0, 1, 2}}, pb, pb);
  EXPECT_EQ(id.kernel.members(), std::vector<Elem>{0});
  const auto t4 = PermBrace::build(twist(4)), t2 = PermBrace::build(twist(2));
  const auto merge = induced_perm_epi({twist(4), twist(2), {0, 0, 1, 1}}, t4, t2);
  EXPECT_EQ(merge.kernel.members(), std::vector<Elem>{0});
  EXPECT_THROW(induced_perm_epi({l3, twist(2), {0, 0, 1}}, pb, t2), PreconditionError);
}

TEST(IKernelIdealCheck, Examples) {
  const auto s3 = trivial_brace(catalog_group("S3"));
  const auto c2 = trivial_brace(catalog_group("C2"));
  const auto q = quotient_brace(s3, Subset::of(6, std::vector<Elem>{0, 1, 2}));
  const SolutionMap f{associated_solution(s3), associated_solution(c2), q.projection};
  const auto ps = PermBrace::build(f.source), pt = PermBrace::build(f.target);
  const auto r = i_kernel_ideal_check(f, std::vector<Elem>{0, 1, 2}, ps, pt);
  EXPECT_TRUE(r.ok()) << r.detail;

  const auto l3 = lyubashenko3();
  const auto pl = PermBrace::build(l3);
  const auto c = i_kernel_ideal_check({l3, twist(1), {0, 0, 0}}, std::vector<Elem>{0, 1, 2}, pl,
                                      PermBrace::build(twist(1)));
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.product.size(), pl.order());

  const auto t2 = twist(2);
  const auto p2 = PermBrace::build(t2);
  const auto d = i_kernel_ideal_check({t2, t2, {0, 1}}, std::vector<Elem>{0}, p2, p2);
  EXPECT_TRUE(d.ok());
  EXPECT_THROW(i_kernel_ideal_check({l3, l3, {0, 1, 2}}, std::vector<Elem>{0}, pl, pl), PreconditionError);
}
