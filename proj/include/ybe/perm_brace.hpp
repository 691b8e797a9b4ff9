#pragma once

#include <cstdint>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/morphism.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// Word over X ∪ X^{-1}; letter +(x+1) is x, -(x+1) is x^{-1}.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline Letter letter_of(Elem x, bool inverse = false) {
  return inverse ? -static_cast<Letter>(x + 1) : static_cast<Letter>(x + 1);
}
inline Elem letter_generator(Letter l) { return static_cast<Elem>((l < 0 ? -l : l) - 1); }
inline bool letter_is_inverse(Letter l) { return l < 0; }

/// (p, q) in Sym_X × Sym_X; the generator for x is (λ_x, ρ_x^{-1}).
struct PermPair {
  Perm p;
  Perm q;
  friend bool operator==(const PermPair&, const PermPair&) = default;
};

/// An element of the permutation group with a word that evaluates to it.
struct GElement {
  Elem index = 0;
  Word witness;
};

/// BFS closure of the generators (λ_x, ρ_x^{-1}) under right multiplication
/// by letters. Element 0 is the identity; witnesses are shortest words and
/// prefix-closed (the parent of an element is its witness minus the last
/// letter).
struct PermGroup {
  std::size_t degree = 0;
  std::vector<PermPair> elements;
  std::vector<Word> witnesses;
  std::vector<Elem> parent;
  std::vector<Letter> last_letter;
  std::vector<Elem> generators;  // x -> element index
  std::vector<Elem> right_mul;   // [k * 2n + slot]; slot x is x, slot n+x is x^{-1}

  std::size_t order() const { return elements.size(); }
  std::size_t slot(Letter l) const {
    return letter_is_inverse(l) ? degree + letter_generator(l) : letter_generator(l);
  }
  Elem times_letter(Elem k, Letter l) const { return right_mul[k * 2 * degree + slot(l)]; }
};

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;
inline constexpr std::size_t kDefaultTableBudget = std::size_t{1} << 24;

PermGroup generate_perm_group(const FiniteSolution& s, std::size_t order_cap = kDefaultOrderCap);

struct PermBraceOptions {
  std::size_t order_cap = kDefaultOrderCap;
  /// Upper bound on |G|^2 for the full addition and multiplication tables.
  std::size_t table_budget = kDefaultTableBudget;
  Exec exec = Exec::parallel;
};

/// The permutation skew brace of a finite solution: the group generated by
/// (λ_x, ρ_x^{-1}) with the addition a + b = a·λ_{a^{-1}}(b), where λ is
/// evaluated on witness words through the product recursions
///   λ_w(w_1 w_2...w_n) = λ_w(w_1) λ_{ρ_{w_1}(w)}(w_2...w_n)
///   ρ_w(w_1...w_{n-1} w_n) = ρ_{λ_{w_n}(w)}(w_1...w_{n-1}) ρ_w(w_n).
class PermBrace {
 public:
  static PermBrace build(const FiniteSolution& s, const PermBraceOptions& options = {});

  const FiniteSolution& source() const { return source_; }
  const PermGroup& group() const { return group_; }
  const SkewBrace& brace() const { return brace_; }
  std::size_t order() const { return group_.order(); }
  Elem generator(Elem x) const { return group_.generators[x]; }
  const Word& witness(Elem k) const { return group_.witnesses[k]; }

  /// Product of the letters of w.
  Elem evaluate(const Word& w) const;

  /// λ_g(w) through the λ recursion; the returned witness has length |w|.
  GElement lam_eval(Elem g, const Word& w) const;
  /// ρ_g(w) through the ρ recursion; the returned witness has length |w|.
  GElement rho_eval(Elem g, const Word& w) const;

  /// λ_{g_x}(k) and ρ_{g_x}(k) for a generator subscript, from the tables
  /// built in BFS order.
  Elem lambda_generator(Elem x, Elem k) const { return lam_gen_[x * order() + k]; }
  Elem rho_generator(Elem x, Elem k) const { return rho_gen_[x * order() + k]; }

 private:
  Letter lambda_letter(Elem k, Letter l) const;
  Letter rho_letter(Elem k, Letter l) const;
  Elem rho_by_letter(Letter l, Elem k) const;
  Elem lambda_by_letter(Letter l, Elem k) const;

  FiniteSolution source_;
  PermGroup group_;
  SkewBrace brace_;
  std::vector<Elem> lam_gen_, lam_gen_inv_, rho_gen_, rho_gen_inv_;  // [x * |G| + k]
  std::vector<Perm> q_inverse_;                                      // q_k^{-1} per element
};

/// x -> generator index, as a map from s to the solution of its permutation
/// brace. Verified to be a homomorphism.
SolutionMap h_map(const FiniteSolution& s, const PermBrace& pb);

struct InducedEpi {
  std::vector<Elem> table;  // element of G_S -> element of G_T
  Subset kernel;
};

/// Extends g_x -> g_{f(x)} along witness words and verifies the result is a
/// brace homomorphism; throws InternalError when the extension is
/// inconsistent.
InducedEpi induced_perm_epi(const SolutionMap& f, const PermBrace& pb_source, const PermBrace& pb_target);

/// Image-level check that an i-kernel generates ideals: performed inside the
/// finite permutation braces, not the structure braces themselves.
struct IKernelIdealReport {
  bool closures_coincide = false;   // mul and add closures of {g_x : x in X0}
  bool strong_left_ideal = false;   // that closure is a strong left ideal
  bool product_is_ideal = false;    // closure * K is an ideal
  bool coset_separation = false;    // x ker f y  =>  g_x I = g_y I
  Subset generated;
  Subset product;
  std::string detail;

  bool ok() const { return closures_coincide && strong_left_ideal && product_is_ideal && coset_separation; }
};

IKernelIdealReport i_kernel_ideal_check(const SolutionMap& f, std::span<const Elem> x0,
                                        const PermBrace& pb_source, const PermBrace& pb_target);

}  // namespace ybe
