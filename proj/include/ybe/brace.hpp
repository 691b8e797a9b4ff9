#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/common.hpp"
#include "ybe/group_catalog.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// Finite skew brace: one carrier with an additive and a multiplicative
/// group table sharing the identity.
class SkewBrace {
 public:
  SkewBrace() = default;
  /// Checks shape and entry range only; see validate_brace for the axioms.
  SkewBrace(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem identity = 0);

  std::size_t size() const { return n_; }
  Elem identity() const { return e_; }
  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const { return inv_[a]; }
  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

  /// λ_a(b) = (-a) + (a·b)
  Elem lambda(Elem a, Elem b) const { return add(neg(a), mul(a, b)); }
  /// ρ_b(a) = λ_a(b)^{-1} · a · b
  Elem rho(Elem b, Elem a) const { return mul(mul(inv(lambda(a, b)), a), b); }

  friend bool operator==(const SkewBrace& x, const SkewBrace& y) {
    return x.n_ == y.n_ && x.e_ == y.e_ && x.add_ == y.add_ && x.mul_ == y.mul_;
  }

 private:
  std::size_t n_ = 0;
  Elem e_ = 0;
  std::vector<Elem> add_, mul_;
  std::vector<Elem> neg_, inv_;  // derived; stay at identity if a row has no inverse
};

struct BraceValidation {
  bool ok = true;
  std::string first_violation;  // empty when ok
};

/// Checks both group laws, the shared identity, λ_a ∈ Aut(B,+), the sum law
/// a + b = a·λ_{a^-1}(b), λ homomorphism, ρ antihomomorphism and
/// a·b = λ_a(b)·ρ_b(a). Reports the first violated axiom in that order.
BraceValidation validate_brace(const SkewBrace& b, Exec exec = Exec::parallel);

Perm lambda_of(const SkewBrace& b, Elem a);
/// ρ_b as a permutation; cross-checks λ_a(b)^{-1}ab against (a^{-1}+b)^{-1}b.
Perm rho_of(const SkewBrace& b, Elem bb);

FiniteSolution associated_solution(const SkewBrace& b);

SkewBrace trivial_brace(const GroupTable& g);
SkewBrace singleton_brace();

bool is_additive_subgroup(const SkewBrace& b, const Subset& s);
bool is_left_ideal(const SkewBrace& b, const Subset& s);
bool is_strong_left_ideal(const SkewBrace& b, const Subset& s);
bool is_ideal(const SkewBrace& b, const Subset& s);

enum class SubsetKind { subbrace, left_ideal, strong_left_ideal, ideal };

struct BraceSubset {
  Subset members;
  SubsetKind kind = SubsetKind::subbrace;
};

/// {a : λ_a = id and a + c = c + a for all c}
BraceSubset socle(const SkewBrace& b);
/// {a : λ_a = ρ_a = id}; asserted to lie inside the socle.
Subset annihilator_like(const SkewBrace& b);

bool is_abelian_brace(const SkewBrace& b);
/// Whether the restriction of b to s is an abelian brace (s closed, + = · on
/// s, + commutative on s).
bool is_abelian_subbrace(const SkewBrace& b, const Subset& s);

struct Quotient {
  SkewBrace brace;
  std::vector<Elem> projection;  // element -> coset index
};

/// Cosets numbered by least representative.
Quotient quotient_brace(const SkewBrace& b, const Subset& ideal);

/// Least ideal (resp. strong left ideal, left ideal) containing seed.
Subset ideal_closure(const SkewBrace& b, const Subset& seed);
Subset strong_left_ideal_closure(const SkewBrace& b, const Subset& seed);
Subset left_ideal_closure(const SkewBrace& b, const Subset& seed);
Subset multiplicative_closure(const SkewBrace& b, const Subset& seed);
Subset additive_closure(const SkewBrace& b, const Subset& seed);

/// All ideals sorted by size then lexicographically (Subset ordering).
std::vector<Subset> enumerate_ideals(const SkewBrace& b);
std::vector<Subset> enumerate_left_ideals(const SkewBrace& b);
std::vector<Subset> enumerate_strong_left_ideals(const SkewBrace& b);

bool is_simple_brace(const SkewBrace& b);

/// K_0 = B ⊋ K_1 ⊋ ... ⊋ K_t = {0}; each K_{k-1}/K_k abelian inside B/K_k.
struct BraceChain {
  std::vector<Subset> ideals;
  std::size_t length() const { return ideals.empty() ? 0 : ideals.size() - 1; }
};

/// Whether K is an ideal inside I (both ideals of b) with I/K an abelian brace.
bool is_abelian_factor(const SkewBrace& b, const Subset& upper, const Subset& lower);

/// Shortest chain of ideals with abelian factors; ties go to the earlier
/// ideal in enumerate_ideals order. std::nullopt if b is not soluble.
std::optional<BraceChain> is_soluble_brace(const SkewBrace& b);

bool is_valid_chain(const SkewBrace& b, const BraceChain& chain);

bool is_brace_hom(std::span<const Elem> f, const SkewBrace& from, const SkewBrace& to);
/// {a : f(a) = 0}; throws PreconditionError if f is not a brace homomorphism.
BraceSubset brace_hom_kernel(std::span<const Elem> f, const SkewBrace& from, const SkewBrace& to);

inline constexpr std::size_t kMaxEnumerateBraces = 7;

/// Skew braces of order n: additive table ranges over the canonical catalog
/// groups of order n, multiplicative table over all identity-fixing labeled
/// copies of catalog groups of order n. Complete up to isomorphism. Order 8
/// requires a fixed additive group (see the overload).
std::vector<SkewBrace> enumerate_braces(std::size_t n, Exec exec = Exec::parallel);
/// Same with the additive group fixed by the caller (any order <= 8).
std::vector<SkewBrace> enumerate_braces_with_additive(const GroupTable& additive,
                                                      Exec exec = Exec::parallel);

}  // namespace ybe
