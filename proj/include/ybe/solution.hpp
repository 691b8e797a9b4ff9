#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/common.hpp"

namespace ybe {

/// Finite non-degenerate set-theoretic solution r(x,y) = (λ_x(y), ρ_y(x)) on
/// the carrier {0, ..., n-1}. Tables are row-major: lambda row x is λ_x, rho
/// row y is ρ_y.
class FiniteSolution {
 public:
  FiniteSolution() = default;
  /// Checks table shape and entry range only; axioms are checked by
  /// validate_ybe.
  FiniteSolution(std::size_t n, std::vector<Elem> lambda, std::vector<Elem> rho);
  /// Same, from nested rows.
  static FiniteSolution from_rows(const std::vector<std::vector<Elem>>& lambda,
                                  const std::vector<std::vector<Elem>>& rho);

  std::size_t size() const { return n_; }
  Elem lam(Elem x, Elem y) const { return lambda_[x * n_ + y]; }
  Elem rho(Elem y, Elem x) const { return rho_[y * n_ + x]; }
  std::span<const Elem> lambda_row(Elem x) const { return {lambda_.data() + x * n_, n_}; }
  std::span<const Elem> rho_row(Elem y) const { return {rho_.data() + y * n_, n_}; }
  const std::vector<Elem>& lambda_table() const { return lambda_; }
  const std::vector<Elem>& rho_table() const { return rho_; }

  friend bool operator==(const FiniteSolution&, const FiniteSolution&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> lambda_;
  std::vector<Elem> rho_;
};

struct YbeValidation {
  bool nondegenerate = true;
  bool braid = true;
  std::vector<Elem> bad_lambda_rows;
  std::vector<Elem> bad_rho_rows;
  /// Triples (x,y,z) where the braid relation fails; capped at max_reported.
  std::vector<std::array<Elem, 3>> failing_triples;
  std::size_t failing_count = 0;

  bool ok() const { return nondegenerate && braid; }
  std::string diagnostic() const;
};

/// Checks non-degeneracy and (r×id)(id×r)(r×id) = (id×r)(r×id)(id×r) on X³.
YbeValidation validate_ybe(const FiniteSolution& s, Exec exec = Exec::parallel,
                           std::size_t max_reported = 16);

std::pair<Elem, Elem> apply_r(const FiniteSolution& s, Elem x, Elem y);
/// Inverse of r on X×X; requires s to be non-degenerate with bijective r.
std::pair<Elem, Elem> apply_r_inverse(const FiniteSolution& s, Elem x, Elem y);

bool is_involutive(const FiniteSolution& s);
bool is_twist(const FiniteSolution& s);
bool is_singleton(const FiniteSolution& s);
bool is_subsolution(const FiniteSolution& s, const Subset& z);

/// Returns {Y, Z} where Y is the smallest subset containing 0 that is closed
/// under every λ_x and ρ_x, when that is proper; std::nullopt if indecomposable.
std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> is_decomposable(
    const FiniteSolution& s);

struct Retraction {
  FiniteSolution solution;
  std::vector<Elem> class_map;  // x -> [x]
};

/// Quotient by x ~ y iff λ_x = λ_y and ρ_x = ρ_y. Classes are numbered by
/// first occurrence.
Retraction retraction(const FiniteSolution& s);

std::optional<std::size_t> multipermutation_level(const FiniteSolution& s,
                                                  std::size_t max_iter);

FiniteSolution twist(std::size_t n);
FiniteSolution singleton_solution();
/// r(x,y) = (σ(y), τ(x)) for commuting permutations σ, τ.
FiniteSolution lyubashenko(const Perm& sigma, const Perm& tau);
/// Disjoint union with trivial cross actions (λ_x = ρ_x = id across blocks).
FiniteSolution disjoint_union(const FiniteSolution& a, const FiniteSolution& b);

enum class EnumerationMode { all, involutive };

inline constexpr std::size_t kMaxEnumerateAll = 3;
inline constexpr std::size_t kMaxEnumerateInvolutive = 4;

/// Every labeled solution of size n (not up to isomorphism), in a fixed
/// deterministic order. Throws CapacityError past the size bounds.
std::vector<FiniteSolution> enumerate_solutions(std::size_t n, EnumerationMode mode,
                                                Exec exec = Exec::parallel);

/// Streaming form of the serial enumeration.
void for_each_solution(std::size_t n, EnumerationMode mode,
                       const std::function<void(const FiniteSolution&)>& visit);

}  // namespace ybe
