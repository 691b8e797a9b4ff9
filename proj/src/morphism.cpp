#include "ybe/morphism.hpp"

#include <algorithm>

namespace ybe {

bool is_homomorphism(const SolutionMap& f) {
  const auto n = static_cast<Elem>(f.source.size());
  if (f.table.size() != n) return false;
  for (Elem v : f.table)
    if (v >= f.target.size()) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (f(f.source.lam(x, y)) != f.target.lam(f(x), f(y))) return false;
      if (f(f.source.rho(y, x)) != f.target.rho(f(y), f(x))) return false;
    }
  // The image is a subsolution of the target.
  Subset image(f.target.size());
  for (Elem v : f.table) image.insert(v);
  if (!is_subsolution(f.target, image)) throw InternalError("homomorphic image is not a subsolution");
  return true;
}

bool is_surjective(const SolutionMap& f) {
  Subset image(f.target.size());
  for (Elem v : f.table) image.insert(v);
  return image.size() == f.target.size();
}

bool is_injective(const SolutionMap& f) {
  return kernel_congruence(f.table).is_singletons();
}

Partition kernel_congruence(std::span<const Elem> table) { return Partition::from_labels(table); }

Partition kernel_congruence(const SolutionMap& f) { return kernel_congruence(f.table); }

std::optional<QuotientSolution> quotient_solution(const FiniteSolution& s, const Partition& p) {
  const auto n = static_cast<Elem>(s.size());
  if (p.universe() != n) throw PreconditionError("quotient_solution: partition universe mismatch");
  const auto m = static_cast<Elem>(p.block_count());
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> lam(m * m, unset), rho(m * m, unset);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem bx = p.block_of(x), by = p.block_of(y);
      Elem& l = lam[bx * m + by];
      Elem& r = rho[by * m + bx];
      const Elem lv = p.block_of(s.lam(x, y)), rv = p.block_of(s.rho(y, x));
      if ((l != unset && l != lv) || (r != unset && r != rv)) return std::nullopt;
      l = lv;
      r = rv;
    }
  FiniteSolution q(m, std::move(lam), std::move(rho));
  if (!validate_ybe(q, Exec::serial).ok()) return std::nullopt;
  SolutionMap proj{s, q, p.labels()};
  return QuotientSolution{std::move(q), std::move(proj)};
}

namespace {

std::size_t bell_bounded_count(std::size_t n) {
  // Bell numbers up to 10.
  static constexpr std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  return bell[n];
}

std::vector<std::vector<Elem>> restricted_growth_strings(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  out.reserve(bell_bounded_count(n));
  std::vector<Elem> a(n, 0), maxes(n, 0);
  // Iterative generation in lexicographic order.
  while (true) {
    out.push_back(a);
    std::size_t i = n;
    while (i-- > 1) {
      if (a[i] <= maxes[i - 1]) break;
    }
    if (i == 0 || i >= n) break;
    ++a[i];
    maxes[i] = std::max(maxes[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxes[j] = maxes[i];
    }
  }
  return out;
}

}  // namespace

std::vector<Partition> enumerate_congruences(const FiniteSolution& s, Exec exec) {
  const std::size_t n = s.size();
  if (n > kMaxCongruenceCarrier)
    throw CapacityError("enumerate_congruences: carrier size above 10");
  const auto rgs = restricted_growth_strings(n);
  std::vector<std::uint8_t> ok(rgs.size(), 0);
  auto check = [&](std::size_t i) {
    ok[i] = quotient_solution(s, Partition::from_labels(rgs[i])).has_value();
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(rgs.size()); ++i) check(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < rgs.size(); ++i) check(i);
  }
  std::vector<Partition> out;
  for (std::size_t i = 0; i < rgs.size(); ++i)
    if (ok[i]) out.push_back(Partition::from_labels(rgs[i]));
  return out;
}

bool is_simple_solution(const FiniteSolution& s) {
  if (s.size() < 2) throw PreconditionError("is_simple_solution: needs at least two elements");
  for (const auto& p : enumerate_congruences(s))
    if (!p.is_singletons() && !p.is_one_block()) return false;
  return true;
}

bool is_i_kernel_block(const FiniteSolution& s, const Partition& p, std::size_t block) {
  const auto& x0 = p.blocks()[block];
  const std::size_t n = s.size();
  for (const auto& z : p.blocks()) {
    // Images of X0×Z and Z×X0 must be exactly Z×X0 and X0×Z.
    std::vector<std::uint8_t> hit_a(n * n, 0), hit_b(n * n, 0);
    for (Elem a : x0)
      for (Elem c : z) {
        const Elem u = s.lam(a, c), v = s.rho(c, a);
        if (p.block_of(u) != p.block_of(c) || p.block_of(v) != block) return false;
        hit_a[u * n + v] = 1;
        const Elem u2 = s.lam(c, a), v2 = s.rho(a, c);
        if (p.block_of(u2) != block || p.block_of(v2) != p.block_of(c)) return false;
        hit_b[u2 * n + v2] = 1;
      }
    for (Elem c : z)
      for (Elem a : x0)
        if (!hit_a[c * n + a] || !hit_b[a * n + c]) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> i_kernels(const FiniteSolution& s, const Partition& p) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t b = 0; b < p.block_count(); ++b)
    if (is_i_kernel_block(s, p, b)) out.push_back(p.blocks()[b]);
  return out;
}

std::vector<std::vector<Elem>> i_kernels(const SolutionMap& f) {
  if (!is_homomorphism(f)) throw PreconditionError("i_kernels: map is not a homomorphism");
  return i_kernels(f.source, kernel_congruence(f));
}

bool is_i_simple(const FiniteSolution& s) {
  if (s.size() < 2) throw PreconditionError("is_i_simple: needs at least two elements");
  for (const auto& p : enumerate_congruences(s)) {
    if (p.is_one_block()) continue;
    for (std::size_t b = 0; b < p.block_count(); ++b)
      if (is_i_kernel_block(s, p, b)) return false;
  }
  return true;
}

IHomomorphism brace_hom_to_i_hom(std::span<const Elem> f, const SkewBrace& from, const SkewBrace& to) {
  if (!is_brace_hom(f, from, to)) throw PreconditionError("brace_hom_to_i_hom: not a brace homomorphism");
  const auto kernel = brace_hom_kernel(f, from, to).members.members();
  SolutionMap map{associated_solution(from), associated_solution(to), {f.begin(), f.end()}};
  if (!is_homomorphism(map)) throw InternalError("brace homomorphism is not a solution homomorphism");
  const auto ks = i_kernels(map);
  if (std::find(ks.begin(), ks.end(), kernel) == ks.end())
    throw InternalError("kernel of a brace homomorphism is not an i-kernel");
  return {std::move(map), kernel};
}

IHomomorphism strong_left_ideal_to_i_hom(const SkewBrace& b, const Subset& s) {
  if (!is_strong_left_ideal(b, s)) throw PreconditionError("strong_left_ideal_to_i_hom: not a strong left ideal");
  if (s.size() == b.size()) throw PreconditionError("strong_left_ideal_to_i_hom: ideal must be proper");
  std::vector<Elem> table(b.size());
  for (Elem a = 0; a < b.size(); ++a) table[a] = s.contains(a) ? 0 : 1;
  SolutionMap map{associated_solution(b), associated_solution(trivial_brace(catalog_group("C2"))),
                  std::move(table)};
  if (!is_homomorphism(map)) throw InternalError("strong left ideal map is not a homomorphism");
  auto members = s.members();
  const auto ks = i_kernels(map);
  if (std::find(ks.begin(), ks.end(), members) == ks.end())
    throw InternalError("strong left ideal is not an i-kernel of its map");
  return {std::move(map), std::move(members)};
}

}  // namespace ybe
