#include "ybe/brace.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <set>

namespace ybe {

SkewBrace::SkewBrace(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem identity)
    : n_(n), e_(identity), add_(std::move(add)), mul_(std::move(mul)) {
  if (n_ == 0) throw FormatError("brace carrier must be nonempty");
  if (add_.size() != n_ * n_ || mul_.size() != n_ * n_)
    throw FormatError("brace tables must be n x n");
  if (e_ >= n_) throw FormatError("brace identity out of range");
  for (std::size_t i = 0; i < n_ * n_; ++i)
    if (add_[i] >= n_ || mul_[i] >= n_) throw FormatError("brace table entry out of range");
  neg_.assign(n_, e_);
  inv_.assign(n_, e_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      if (add_[a * n_ + b] == e_) neg_[a] = b;
      if (mul_[a * n_ + b] == e_) inv_[a] = b;
    }
}

namespace {

// Smallest a in [0, n) for which ok(a) is false, if any.
std::optional<Elem> first_failure(std::size_t n, Exec exec, const std::function<bool(Elem)>& ok) {
  if (exec == Exec::serial) {
    for (Elem a = 0; a < n; ++a)
      if (!ok(a)) return a;
    return std::nullopt;
  }
  std::vector<std::uint8_t> bad(n, 0);
#pragma omp parallel for schedule(dynamic)
  for (long long a = 0; a < static_cast<long long>(n); ++a) bad[a] = !ok(static_cast<Elem>(a));
  for (Elem a = 0; a < n; ++a)
    if (bad[a]) return a;
  return std::nullopt;
}

std::optional<Elem> identity_of(std::span<const Elem> t, std::size_t n) {
  for (Elem e = 0; e < n; ++e) {
    bool good = true;
    for (Elem a = 0; a < n && good; ++a) good = t[e * n + a] == a && t[a * n + e] == a;
    if (good) return e;
  }
  return std::nullopt;
}

}  // namespace

BraceValidation validate_brace(const SkewBrace& b, Exec exec) {
  const std::size_t n = b.size();
  const Elem e = b.identity();
  auto fail = [](std::string what) { return BraceValidation{false, std::move(what)}; };

  const auto add_id = identity_of(b.add_table(), n);
  const auto mul_id = identity_of(b.mul_table(), n);
  if (add_id && mul_id && *add_id != *mul_id)
    return fail("identity not shared: additive identity " + std::to_string(*add_id) +
                ", multiplicative identity " + std::to_string(*mul_id));
  if (!is_group_table(b.add_table(), n, e)) return fail("(B,+) is not a group with identity " + std::to_string(e));
  if (!is_group_table(b.mul_table(), n, e)) return fail("(B,*) is not a group with identity " + std::to_string(e));

  auto at = [](const char* law, Elem a) { return std::string(law) + " fails at a=" + std::to_string(a); };

  // a(b + c) = ab - a + ac
  if (auto a = first_failure(n, exec, [&](Elem a) {
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y)
            if (b.mul(a, b.add(x, y)) != b.add(b.add(b.mul(a, x), b.neg(a)), b.mul(a, y))) return false;
        return true;
      }))
    return fail(at("brace compatibility a(b+c) = ab - a + ac", *a));
  // a + b = a λ_{a^-1}(b)
  if (auto a = first_failure(n, exec, [&](Elem a) {
        for (Elem x = 0; x < n; ++x)
          if (b.add(a, x) != b.mul(a, b.lambda(b.inv(a), x))) return false;
        return true;
      }))
    return fail(at("sum law a+b = a*lambda_{a^-1}(b)", *a));
  if (auto a = first_failure(n, exec, [&](Elem a) {
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y)
            if (b.lambda(b.mul(a, x), y) != b.lambda(a, b.lambda(x, y))) return false;
        return true;
      }))
    return fail(at("lambda homomorphism law", *a));
  if (auto a = first_failure(n, exec, [&](Elem a) {
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y)
            if (b.rho(b.mul(a, x), y) != b.rho(x, b.rho(a, y))) return false;
        return true;
      }))
    return fail(at("rho antihomomorphism law", *a));
  if (auto a = first_failure(n, exec, [&](Elem a) {
        for (Elem x = 0; x < n; ++x) {
          if (b.mul(a, x) != b.mul(b.lambda(a, x), b.rho(x, a))) return false;
          // ρ_x(a) = (a^-1 + x)^-1 x
          if (b.rho(x, a) != b.mul(b.inv(b.add(b.inv(a), x)), x)) return false;
        }
        return true;
      }))
    return fail(at("factorisation ab = lambda_a(b) rho_b(a)", *a));
  return {};
}

Perm lambda_of(const SkewBrace& b, Elem a) {
  Perm p(b.size());
  for (Elem x = 0; x < b.size(); ++x) p[x] = b.lambda(a, x);
  return p;
}

Perm rho_of(const SkewBrace& b, Elem bb) {
  Perm p(b.size());
  for (Elem a = 0; a < b.size(); ++a) {
    p[a] = b.rho(bb, a);
    if (p[a] != b.mul(b.inv(b.add(b.inv(a), bb)), bb))
      throw InternalError("rho formulas disagree; brace is invalid");
  }
  return p;
}

FiniteSolution associated_solution(const SkewBrace& b) {
  const std::size_t n = b.size();
  std::vector<Elem> lam(n * n), rho(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      lam[a * n + c] = b.lambda(a, c);
      rho[c * n + a] = b.rho(c, a);
    }
  return FiniteSolution(n, std::move(lam), std::move(rho));
}

SkewBrace trivial_brace(const GroupTable& g) { return SkewBrace(g.n, g.table, g.table, 0); }

SkewBrace singleton_brace() { return SkewBrace(1, {0}, {0}, 0); }

namespace {

bool contains_identity(const SkewBrace& b, const Subset& s) {
  return s.universe() == b.size() && s.contains(b.identity());
}

bool lambda_invariant(const SkewBrace& b, const std::vector<Elem>& members, const Subset& s) {
  for (Elem a = 0; a < b.size(); ++a)
    for (Elem x : members)
      if (!s.contains(b.lambda(a, x))) return false;
  return true;
}

bool additively_normal(const SkewBrace& b, const std::vector<Elem>& members, const Subset& s) {
  for (Elem a = 0; a < b.size(); ++a)
    for (Elem x : members)
      if (!s.contains(b.add(b.add(a, x), b.neg(a)))) return false;
  return true;
}

bool multiplicatively_normal(const SkewBrace& b, const std::vector<Elem>& members, const Subset& s) {
  for (Elem a = 0; a < b.size(); ++a)
    for (Elem x : members)
      if (!s.contains(b.mul(b.mul(a, x), b.inv(a)))) return false;
  return true;
}

}  // namespace

bool is_additive_subgroup(const SkewBrace& b, const Subset& s) {
  if (!contains_identity(b, s)) return false;
  const auto m = s.members();
  for (Elem x : m) {
    if (!s.contains(b.neg(x))) return false;
    for (Elem y : m)
      if (!s.contains(b.add(x, y))) return false;
  }
  return true;
}

bool is_left_ideal(const SkewBrace& b, const Subset& s) {
  return is_additive_subgroup(b, s) && lambda_invariant(b, s.members(), s);
}

bool is_strong_left_ideal(const SkewBrace& b, const Subset& s) {
  return is_left_ideal(b, s) && additively_normal(b, s.members(), s);
}

bool is_ideal(const SkewBrace& b, const Subset& s) {
  return is_strong_left_ideal(b, s) && multiplicatively_normal(b, s.members(), s);
}

BraceSubset socle(const SkewBrace& b) {
  Subset s(b.size());
  for (Elem a = 0; a < b.size(); ++a) {
    bool in = true;
    for (Elem c = 0; c < b.size() && in; ++c) in = b.lambda(a, c) == c && b.add(a, c) == b.add(c, a);
    if (in) s.insert(a);
  }
  if (!is_ideal(b, s)) throw InternalError("socle is not an ideal");
  return {std::move(s), SubsetKind::ideal};
}

Subset annihilator_like(const SkewBrace& b) {
  Subset s(b.size());
  for (Elem a = 0; a < b.size(); ++a) {
    bool in = true;
    for (Elem c = 0; c < b.size() && in; ++c) in = b.lambda(a, c) == c && b.rho(a, c) == c;
    if (in) s.insert(a);
  }
  // λ_a = id gives a + c = ac, and ρ_a = id gives c + a = c λ_{c^{-1}}(a) = ac.
  if (!s.is_subset_of(socle(b).members)) throw InternalError("annihilator-like set escapes the socle");
  return s;
}

bool is_abelian_brace(const SkewBrace& b) {
  const std::size_t n = b.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (b.add(x, y) != b.mul(x, y) || b.add(x, y) != b.add(y, x)) return false;
  return true;
}

bool is_abelian_subbrace(const SkewBrace& b, const Subset& s) {
  if (!is_additive_subgroup(b, s)) return false;
  const auto m = s.members();
  for (Elem x : m)
    for (Elem y : m)
      if (b.add(x, y) != b.mul(x, y) || b.add(x, y) != b.add(y, x)) return false;
  return true;
}

Quotient quotient_brace(const SkewBrace& b, const Subset& ideal) {
  if (!is_ideal(b, ideal)) throw PreconditionError("quotient_brace: subset is not an ideal");
  const std::size_t n = b.size();
  const auto members = ideal.members();
  std::vector<Elem> label(n);
  for (Elem a = 0; a < n; ++a) {
    Elem least = a;
    for (Elem k : members) least = std::min(least, b.add(a, k));
    label[a] = least;
  }
  const Partition cosets = Partition::from_labels(label);
  const std::size_t m = cosets.block_count();
  std::vector<Elem> add(m * m), mul(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const Elem x = cosets.blocks()[i].front(), y = cosets.blocks()[j].front();
      add[i * m + j] = cosets.block_of(b.add(x, y));
      mul[i * m + j] = cosets.block_of(b.mul(x, y));
    }
  return {SkewBrace(m, std::move(add), std::move(mul), cosets.block_of(b.identity())),
          cosets.labels()};
}

namespace {

struct ClosureRules {
  bool add = false;
  bool mul = false;
  bool lambda = false;
  bool add_normal = false;
  bool mul_normal = false;
};

Subset close(const SkewBrace& b, const Subset& seed, ClosureRules rules) {
  const std::size_t n = b.size();
  if (seed.universe() != n) throw PreconditionError("closure: subset universe mismatch");
  Subset s(n);
  std::vector<Elem> members;
  std::deque<Elem> queue;
  auto push = [&](Elem x) {
    if (!s.contains(x)) {
      s.insert(x);
      members.push_back(x);
      queue.push_back(x);
    }
  };
  push(b.identity());
  for (Elem x : seed.members()) push(x);
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Elem m = members[i];
      if (rules.add) {
        push(b.add(x, m));
        push(b.add(m, x));
      }
      if (rules.mul) {
        push(b.mul(x, m));
        push(b.mul(m, x));
      }
    }
    for (Elem c = 0; c < n; ++c) {
      if (rules.lambda) push(b.lambda(c, x));
      if (rules.add_normal) push(b.add(b.add(c, x), b.neg(c)));
      if (rules.mul_normal) push(b.mul(b.mul(c, x), b.inv(c)));
    }
  }
  return s;
}

// Every closed set is a join of principal closures.
std::vector<Subset> enumerate_closed(const SkewBrace& b, const std::function<Subset(const Subset&)>& cl) {
  const std::size_t n = b.size();
  std::vector<Subset> principal;
  std::set<Subset> seen_principal;
  Subset covered(n);
  for (Elem a = 0; a < n; ++a) {
    Subset p = cl(Subset::of(n, std::vector<Elem>{a}));
    if (seen_principal.insert(p).second) principal.push_back(std::move(p));
  }
  std::set<Subset> lattice{cl(Subset(n))};
  for (const auto& p : principal) {
    std::vector<Subset> fresh;
    for (const auto& i : lattice) {
      if (p.is_subset_of(i)) continue;
      Subset seed = i;
      for (Elem x : p.members()) seed.insert(x);
      fresh.push_back(cl(seed));
    }
    lattice.insert(fresh.begin(), fresh.end());
  }
  return {lattice.begin(), lattice.end()};
}

}  // namespace

Subset ideal_closure(const SkewBrace& b, const Subset& seed) {
  return close(b, seed, {.add = true, .lambda = true, .add_normal = true, .mul_normal = true});
}
Subset strong_left_ideal_closure(const SkewBrace& b, const Subset& seed) {
  return close(b, seed, {.add = true, .lambda = true, .add_normal = true});
}
Subset left_ideal_closure(const SkewBrace& b, const Subset& seed) {
  return close(b, seed, {.add = true, .lambda = true});
}
Subset multiplicative_closure(const SkewBrace& b, const Subset& seed) {
  return close(b, seed, {.mul = true});
}
Subset additive_closure(const SkewBrace& b, const Subset& seed) {
  return close(b, seed, {.add = true});
}

std::vector<Subset> enumerate_ideals(const SkewBrace& b) {
  return enumerate_closed(b, [&](const Subset& s) { return ideal_closure(b, s); });
}
std::vector<Subset> enumerate_left_ideals(const SkewBrace& b) {
  return enumerate_closed(b, [&](const Subset& s) { return left_ideal_closure(b, s); });
}
std::vector<Subset> enumerate_strong_left_ideals(const SkewBrace& b) {
  return enumerate_closed(b, [&](const Subset& s) { return strong_left_ideal_closure(b, s); });
}

bool is_simple_brace(const SkewBrace& b) { return b.size() > 1 && enumerate_ideals(b).size() == 2; }

bool is_abelian_factor(const SkewBrace& b, const Subset& upper, const Subset& lower) {
  if (!lower.is_subset_of(upper)) return false;
  const auto m = upper.members();
  for (Elem x : m)
    for (Elem y : m) {
      const Elem s = b.add(x, y);
      if (!lower.contains(b.add(b.neg(s), b.mul(x, y)))) return false;
      if (!lower.contains(b.add(b.neg(s), b.add(y, x)))) return false;
    }
  return true;
}

std::optional<BraceChain> is_soluble_brace(const SkewBrace& b) {
  const auto ideals = enumerate_ideals(b);  // ideals.front() = {0}, back() = B
  const std::size_t k = ideals.size();
  const std::size_t top = k - 1, bottom = 0;
  std::vector<std::size_t> parent(k, k);
  std::vector<std::uint8_t> seen(k, 0);
  std::deque<std::size_t> queue{top};
  seen[top] = 1;
  while (!queue.empty() && !seen[bottom]) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < k; ++j) {
      if (seen[j] || j == i || !ideals[j].is_subset_of(ideals[i])) continue;
      if (!is_abelian_factor(b, ideals[i], ideals[j])) continue;
      seen[j] = 1;
      parent[j] = i;
      queue.push_back(j);
    }
  }
  if (!seen[bottom]) return std::nullopt;
  BraceChain chain;
  for (std::size_t i = bottom;; i = parent[i]) {
    chain.ideals.push_back(ideals[i]);
    if (i == top) break;
  }
  std::reverse(chain.ideals.begin(), chain.ideals.end());
  return chain;
}

bool is_valid_chain(const SkewBrace& b, const BraceChain& chain) {
  const std::size_t n = b.size();
  if (chain.ideals.empty()) return false;
  if (chain.ideals.front() != Subset::full(n)) return false;
  if (chain.ideals.back() != Subset::of(n, std::vector<Elem>{b.identity()})) return false;
  for (const auto& i : chain.ideals)
    if (!is_ideal(b, i)) return false;
  for (std::size_t k = 1; k < chain.ideals.size(); ++k)
    if (!is_abelian_factor(b, chain.ideals[k - 1], chain.ideals[k])) return false;
  return true;
}

bool is_brace_hom(std::span<const Elem> f, const SkewBrace& from, const SkewBrace& to) {
  const std::size_t n = from.size();
  if (f.size() != n) return false;
  for (Elem v : f)
    if (v >= to.size()) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c)
      if (f[from.add(a, c)] != to.add(f[a], f[c]) || f[from.mul(a, c)] != to.mul(f[a], f[c]))
        return false;
  return true;
}

BraceSubset brace_hom_kernel(std::span<const Elem> f, const SkewBrace& from, const SkewBrace& to) {
  if (!is_brace_hom(f, from, to)) throw PreconditionError("brace_hom_kernel: not a brace homomorphism");
  Subset k(from.size());
  for (Elem a = 0; a < from.size(); ++a)
    if (f[a] == to.identity()) k.insert(a);
  if (!is_ideal(from, k)) throw InternalError("kernel of a brace homomorphism is not an ideal");
  return {std::move(k), SubsetKind::ideal};
}

namespace {

std::vector<SkewBrace> braces_over(const std::vector<Elem>& add, std::size_t n, Exec exec) {
  std::vector<std::vector<Elem>> muls;
  for (const auto& g : catalog_groups_of_order(n))
    for (auto& t : labeled_copies(g)) muls.push_back(std::move(t));
  std::vector<std::uint8_t> ok(muls.size(), 0);
  auto check = [&](std::size_t i) {
    ok[i] = validate_brace(SkewBrace(n, add, muls[i], 0), Exec::serial).ok;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(muls.size()); ++i) check(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < muls.size(); ++i) check(i);
  }
  std::vector<SkewBrace> out;
  for (std::size_t i = 0; i < muls.size(); ++i)
    if (ok[i]) out.emplace_back(n, add, muls[i], 0);
  return out;
}

}  // namespace

std::vector<SkewBrace> enumerate_braces(std::size_t n, Exec exec) {
  if (n == 0) throw PreconditionError("enumerate_braces: n must be positive");
  if (n > kMaxEnumerateBraces)
    throw CapacityError("enumerate_braces: orders above 7 need a fixed additive group");
  std::vector<SkewBrace> out;
  for (const auto& g : catalog_groups_of_order(n)) {
    auto part = braces_over(g.table, n, exec);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<SkewBrace> enumerate_braces_with_additive(const GroupTable& additive, Exec exec) {
  if (additive.n == 0 || additive.n > 8)
    throw CapacityError("enumerate_braces_with_additive: order must be in [1, 8]");
  if (!is_group_table(additive.table, additive.n, 0))
    throw PreconditionError("enumerate_braces_with_additive: not a group table with identity 0");
  return braces_over(additive.table, additive.n, exec);
}

}  // namespace ybe
