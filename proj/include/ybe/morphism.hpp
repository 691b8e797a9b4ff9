#pragma once

#include <optional>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/common.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// A map between carriers of two solutions.
struct SolutionMap {
  FiniteSolution source;
  FiniteSolution target;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }
};

/// f(λ_x(y)) = λ_{f(x)}(f(y)) and f(ρ_y(x)) = ρ_{f(y)}(f(x)) for all x, y.
bool is_homomorphism(const SolutionMap& f);
bool is_surjective(const SolutionMap& f);
bool is_injective(const SolutionMap& f);

/// Partition by equal image.
Partition kernel_congruence(const SolutionMap& f);
Partition kernel_congruence(std::span<const Elem> table);

struct QuotientSolution {
  FiniteSolution solution;
  SolutionMap projection;
};

/// λ̄_[x]([y]) = [λ_x(y)], ρ̄ likewise; std::nullopt unless well defined,
/// non-degenerate and a solution.
std::optional<QuotientSolution> quotient_solution(const FiniteSolution& s, const Partition& p);

inline constexpr std::size_t kMaxCongruenceCarrier = 10;

/// Every partition with a valid quotient, in restricted-growth-string order.
std::vector<Partition> enumerate_congruences(const FiniteSolution& s, Exec exec = Exec::parallel);

/// Simple: every congruence with valid quotient is trivial. Requires n >= 2.
bool is_simple_solution(const FiniteSolution& s);

/// Whether block x0 of the partition satisfies r(X0,Z) = Z×X0 and
/// r(Z,X0) = X0×Z for every block Z.
bool is_i_kernel_block(const FiniteSolution& s, const Partition& p, std::size_t block);

/// All i-kernel blocks of ker f (f a homomorphism), as sorted member lists.
std::vector<std::vector<Elem>> i_kernels(const SolutionMap& f);
std::vector<std::vector<Elem>> i_kernels(const FiniteSolution& s, const Partition& p);

bool is_i_simple(const FiniteSolution& s);

/// A brace homomorphism viewed as a map of associated solutions, with its
/// kernel verified to be an i-kernel.
struct IHomomorphism {
  SolutionMap map;
  std::vector<Elem> i_kernel;
};

IHomomorphism brace_hom_to_i_hom(std::span<const Elem> f, const SkewBrace& from, const SkewBrace& to);

/// Sends S to 0 and its complement to 1 in the solution of the trivial brace
/// of order 2 (the twist on two points).
IHomomorphism strong_left_ideal_to_i_hom(const SkewBrace& b, const Subset& s);

}  // namespace ybe
