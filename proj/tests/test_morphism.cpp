#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ybe/catalog.hpp"
#include "ybe/group_catalog.hpp"
#include "ybe/morphism.hpp"

using namespace ybe;

namespace {

std::vector<Elem> identity_map(std::size_t n) { return identity_perm(n); }

std::vector<FiniteSolution> small_corpus() {
  auto c = enumerate_solutions(3, EnumerationMode::all);
  for (auto& s : enumerate_solutions(2, EnumerationMode::all)) c.push_back(s);
  for (auto& s : enumerate_solutions(4, EnumerationMode::involutive)) c.push_back(s);
  return c;
}

}  // namespace

TEST(Homomorphism, Examples) {
  const auto l3 = lyubashenko3();
  EXPECT_TRUE(is_homomorphism({l3, l3, identity_map(3)}));
  EXPECT_TRUE(is_homomorphism({l3, twist(1), {0, 0, 0}}));
  EXPECT_FALSE(is_homomorphism({l3, twist(2), {0, 0, 1}}));
  EXPECT_FALSE(is_homomorphism({l3, twist(2), {0, 1}}));  // not total
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_congruence(identity_map(4)).is_singletons());
  EXPECT_TRUE(kernel_congruence(std::vector<Elem>(4, 2)).is_one_block());
  const auto p = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  const auto q = quotient_solution(twist(4), p);
  ASSERT_TRUE(q);
  EXPECT_EQ(kernel_congruence(q->projection), p);
  EXPECT_EQ(q->solution, twist(2));
}

TEST(Quotient, Examples) {
  const auto l3 = lyubashenko3();
  const auto same = quotient_solution(l3, Partition::singletons(3));
  ASSERT_TRUE(same);
  EXPECT_EQ(same->solution, l3);
  const auto point = quotient_solution(l3, Partition::one_block(3));
  ASSERT_TRUE(point);
  EXPECT_TRUE(is_singleton(point->solution));
  EXPECT_FALSE(quotient_solution(l3, Partition::from_blocks(3, {{0, 1}, {2}})));
}

TEST(Congruences, Examples) {
  EXPECT_EQ(enumerate_congruences(twist(1)).size(), 1u);
  const auto l3 = enumerate_congruences(lyubashenko3());
  ASSERT_EQ(l3.size(), 2u);
  EXPECT_TRUE(l3[0].is_one_block());
  EXPECT_TRUE(l3[1].is_singletons());
  EXPECT_EQ(enumerate_congruences(twist(2)).size(), 2u);
  EXPECT_THROW(enumerate_congruences(twist(11)), CapacityError);
}

TEST(Congruences, MatchDefinitionOracle) {
  for (const auto& s : small_corpus()) {
    std::vector<std::vector<Elem>> ref;
    for (const auto& labels : oracle::all_partitions(static_cast<Elem>(s.size())))
      if (oracle::is_congruence(s, labels)) ref.push_back(labels);
    std::vector<std::vector<Elem>> ours;
    for (const auto& p : enumerate_congruences(s)) {
      ours.push_back(p.labels());
      const auto q = quotient_solution(s, p);
      ASSERT_TRUE(q);
      EXPECT_TRUE(validate_ybe(q->solution).ok());
    }
    EXPECT_EQ(ours, ref);
  }
}

TEST(Simple, Examples) {
  EXPECT_TRUE(is_simple_solution(lyubashenko3()));
  EXPECT_FALSE(is_simple_solution(twist(3)));
  EXPECT_TRUE(is_simple_solution(twist(2)));
  EXPECT_THROW(is_simple_solution(twist(1)), PreconditionError);
}

TEST(IKernels, Examples) {
  const auto t3 = twist(3);
  EXPECT_EQ(i_kernels(SolutionMap{t3, t3, identity_map(3)}),
            (std::vector<std::vector<Elem>>{{0}, {1}, {2}}));
  const auto l3 = lyubashenko3();
  EXPECT_EQ(i_kernels(SolutionMap{l3, twist(1), {0, 0, 0}}), (std::vector<std::vector<Elem>>{{0, 1, 2}}));
  EXPECT_TRUE(i_kernels(SolutionMap{l3, l3, identity_map(3)}).empty());
  EXPECT_THROW(i_kernels(SolutionMap{l3, twist(2), {0, 0, 1}}), PreconditionError);
}

TEST(IKernels, MatchDefinitionOracle) {
  for (const auto& s : small_corpus())
    for (const auto& p : enumerate_congruences(s)) {
      const auto ks = i_kernels(s, p);
      for (std::size_t b = 0; b < p.block_count(); ++b) {
        const bool ours = std::find(ks.begin(), ks.end(), p.blocks()[b]) != ks.end();
        EXPECT_EQ(ours, oracle::is_i_kernel(s, p.labels(), static_cast<Elem>(b)));
        // i-kernel blocks are closed under r.
        if (ours) EXPECT_TRUE(is_subsolution(s, Subset::of(s.size(), p.blocks()[b])));
      }
    }
}

TEST(ISimple, Examples) {
  EXPECT_TRUE(is_i_simple(lyubashenko3()));
  EXPECT_FALSE(is_i_simple(twist(2)));
  EXPECT_FALSE(is_i_simple(disjoint_union(twist(1), lyubashenko3())));
}

TEST(ISimple, EquivalentToIndecomposable) {
  for (const auto& s : small_corpus()) {
    if (s.size() < 2) continue;
    EXPECT_EQ(is_i_simple(s), !is_decomposable(s).has_value());
  }
}

TEST(IHom, FromBraceHomomorphisms) {
  const auto s3 = trivial_brace(catalog_group("S3"));
  const auto c2 = trivial_brace(catalog_group("C2"));
  const auto q = quotient_brace(s3, Subset::of(6, std::vector<Elem>{0, 1, 2}));
  ASSERT_EQ(q.brace, c2);
  const auto ih = brace_hom_to_i_hom(q.projection, s3, c2);
  EXPECT_EQ(ih.i_kernel, (std::vector<Elem>{0, 1, 2}));
  const auto id = brace_hom_to_i_hom(identity_map(6), s3, s3);
  EXPECT_EQ(id.i_kernel, std::vector<Elem>{0});
  const auto zero = brace_hom_to_i_hom(std::vector<Elem>(6, 0), s3, singleton_brace());
  EXPECT_EQ(zero.i_kernel.size(), 6u);
  EXPECT_THROW(brace_hom_to_i_hom(std::vector<Elem>{0, 0, 0, 1, 0, 0}, s3, c2), PreconditionError);
}

TEST(IHom, FromStrongLeftIdeals) {
  const auto s3 = trivial_brace(catalog_group("S3"));
  const auto a3 = strong_left_ideal_to_i_hom(s3, Subset::of(6, std::vector<Elem>{0, 1, 2}));
  EXPECT_EQ(a3.i_kernel, (std::vector<Elem>{0, 1, 2}));
  EXPECT_EQ(a3.map.target, twist(2));
  const auto e = strong_left_ideal_to_i_hom(s3, Subset::of(6, std::vector<Elem>{0}));
  EXPECT_EQ(e.i_kernel, std::vector<Elem>{0});
  EXPECT_THROW(strong_left_ideal_to_i_hom(s3, Subset::of(6, std::vector<Elem>{0, 3})), PreconditionError);
  EXPECT_THROW(strong_left_ideal_to_i_hom(s3, Subset::full(6)), PreconditionError);
}
