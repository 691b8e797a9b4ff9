#include "ybe/solution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ybe {

FiniteSolution::FiniteSolution(std::size_t n, std::vector<Elem> lambda, std::vector<Elem> rho)
    : n_(n), lambda_(std::move(lambda)), rho_(std::move(rho)) {
  if (n_ == 0) throw FormatError("solution carrier must be nonempty");
  if (lambda_.size() != n_ * n_ || rho_.size() != n_ * n_)
    throw FormatError("solution tables must be n x n");
  auto in_range = [&](Elem v) { return v < n_; };
  if (!std::all_of(lambda_.begin(), lambda_.end(), in_range) ||
      !std::all_of(rho_.begin(), rho_.end(), in_range))
    throw FormatError("solution table entry out of range");
}

FiniteSolution FiniteSolution::from_rows(const std::vector<std::vector<Elem>>& lambda,
                                         const std::vector<std::vector<Elem>>& rho) {
  const std::size_t n = lambda.size();
  if (rho.size() != n) throw FormatError("lambda and rho row counts differ");
  std::vector<Elem> l, r;
  l.reserve(n * n);
  r.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i].size() != n || rho[i].size() != n)
      throw FormatError("solution tables must be n x n");
    l.insert(l.end(), lambda[i].begin(), lambda[i].end());
    r.insert(r.end(), rho[i].begin(), rho[i].end());
  }
  return FiniteSolution(n, std::move(l), std::move(r));
}

namespace {

struct Triple {
  Elem a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// r acting on positions (i, i+1) of a triple.
inline Triple r12(const FiniteSolution& s, Triple t) {
  return {s.lam(t.a, t.b), s.rho(t.b, t.a), t.c};
}
inline Triple r23(const FiniteSolution& s, Triple t) {
  return {t.a, s.lam(t.b, t.c), s.rho(t.c, t.b)};
}

inline bool braid_at(const FiniteSolution& s, Elem x, Elem y, Elem z) {
  const Triple t{x, y, z};
  return r12(s, r23(s, r12(s, t))) == r23(s, r12(s, r23(s, t)));
}

// Fast path for the enumerators: raw tables, early exit.
bool braid_holds(std::size_t n, const Elem* lam, const Elem* rho) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        // left side: r12, r23, r12
        Elem a = lam[x * n + y], b = rho[y * n + x], c = z;
        Elem b2 = lam[b * n + c], c2 = rho[c * n + b];
        b = b2;
        c = c2;
        const Elem l1 = lam[a * n + b], l2 = rho[b * n + a], l3 = c;
        // right side: r23, r12, r23
        Elem p = x, q = lam[y * n + z], u = rho[z * n + y];
        Elem p2 = lam[p * n + q], q2 = rho[q * n + p];
        p = p2;
        q = q2;
        const Elem m1 = p, m2 = lam[q * n + u], m3 = rho[u * n + q];
        if (l1 != m1 || l2 != m2 || l3 != m3) return false;
      }
  return true;
}

bool rows_are_permutations(std::size_t n, const Elem* table) {
  for (std::size_t i = 0; i < n; ++i)
    if (!is_permutation(std::span<const Elem>(table + i * n, n), n)) return false;
  return true;
}

}  // namespace

std::string YbeValidation::diagnostic() const {
  std::ostringstream os;
  if (!nondegenerate) {
    os << "non-degeneracy violated:";
    for (Elem x : bad_lambda_rows) os << " lambda row " << x << " is not a permutation;";
    for (Elem y : bad_rho_rows) os << " rho row " << y << " is not a permutation;";
  }
  if (!braid) {
    if (!nondegenerate) os << ' ';
    os << "braid relation fails on " << failing_count << " triple(s)";
    if (!failing_triples.empty()) {
      const auto& t = failing_triples.front();
      os << ", first (" << t[0] << ',' << t[1] << ',' << t[2] << ')';
    }
  }
  if (ok()) os << "ok";
  return os.str();
}

YbeValidation validate_ybe(const FiniteSolution& s, Exec exec, std::size_t max_reported) {
  YbeValidation v;
  const auto n = static_cast<Elem>(s.size());
  for (Elem x = 0; x < n; ++x) {
    if (!is_permutation(s.lambda_row(x), n)) v.bad_lambda_rows.push_back(x);
    if (!is_permutation(s.rho_row(x), n)) v.bad_rho_rows.push_back(x);
  }
  v.nondegenerate = v.bad_lambda_rows.empty() && v.bad_rho_rows.empty();

  // One slot per x keeps the report order independent of scheduling.
  std::vector<std::vector<std::array<Elem, 3>>> failures(n);
  std::vector<std::size_t> counts(n, 0);
  auto scan = [&](Elem x) {
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (!braid_at(s, x, y, z)) {
          ++counts[x];
          if (failures[x].size() < max_reported) failures[x].push_back({x, y, z});
        }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long x = 0; x < static_cast<long long>(n); ++x) scan(static_cast<Elem>(x));
  } else {
    for (Elem x = 0; x < n; ++x) scan(x);
  }
  for (Elem x = 0; x < n; ++x) {
    v.failing_count += counts[x];
    for (const auto& t : failures[x])
      if (v.failing_triples.size() < max_reported) v.failing_triples.push_back(t);
  }
  v.braid = v.failing_count == 0;
  return v;
}

std::pair<Elem, Elem> apply_r(const FiniteSolution& s, Elem x, Elem y) {
  if (x >= s.size() || y >= s.size()) throw std::out_of_range("apply_r: index out of range");
  return {s.lam(x, y), s.rho(y, x)};
}

std::pair<Elem, Elem> apply_r_inverse(const FiniteSolution& s, Elem u, Elem v) {
  const auto n = static_cast<Elem>(s.size());
  if (u >= n || v >= n) throw std::out_of_range("apply_r_inverse: index out of range");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (s.lam(x, y) == u && s.rho(y, x) == v) return {x, y};
  throw PreconditionError("apply_r_inverse: r is not bijective");
}

bool is_involutive(const FiniteSolution& s) {
  const auto n = static_cast<Elem>(s.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem u = s.lam(x, y), v = s.rho(y, x);
      if (s.lam(u, v) != x || s.rho(v, u) != y) return false;
    }
  return true;
}

bool is_twist(const FiniteSolution& s) {
  const auto n = static_cast<Elem>(s.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (s.lam(x, y) != y || s.rho(y, x) != x) return false;
  return true;
}

bool is_singleton(const FiniteSolution& s) { return s.size() == 1; }

bool is_subsolution(const FiniteSolution& s, const Subset& z) {
  if (z.universe() != s.size()) throw PreconditionError("subset universe mismatch");
  const auto members = z.members();
  for (Elem a : members)
    for (Elem b : members)
      if (!z.contains(s.lam(a, b)) || !z.contains(s.rho(b, a))) return false;
  return true;
}

std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> is_decomposable(
    const FiniteSolution& s) {
  // Y and X\Y both closed under r  <=>  Y is invariant under every λ_x, ρ_x
  // (non-degeneracy), so the least candidate containing 0 is its orbit.
  const auto n = static_cast<Elem>(s.size());
  Subset orbit(n);
  std::vector<Elem> frontier{0};
  orbit.insert(0);
  while (!frontier.empty()) {
    const Elem y = frontier.back();
    frontier.pop_back();
    for (Elem x = 0; x < n; ++x)
      for (Elem img : {s.lam(x, y), s.rho(x, y)})
        if (!orbit.contains(img)) {
          orbit.insert(img);
          frontier.push_back(img);
        }
  }
  if (orbit.size() == n) return std::nullopt;
  std::vector<Elem> rest;
  for (Elem x = 0; x < n; ++x)
    if (!orbit.contains(x)) rest.push_back(x);
  return std::make_pair(orbit.members(), std::move(rest));
}

Retraction retraction(const FiniteSolution& s) {
  const auto n = static_cast<Elem>(s.size());
  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, Elem> classes;
  std::vector<Elem> class_map(n);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    auto key = std::make_pair(std::vector<Elem>(s.lambda_row(x).begin(), s.lambda_row(x).end()),
                              std::vector<Elem>(s.rho_row(x).begin(), s.rho_row(x).end()));
    auto [it, fresh] = classes.try_emplace(std::move(key), static_cast<Elem>(reps.size()));
    if (fresh) reps.push_back(x);
    class_map[x] = it->second;
  }
  const auto m = static_cast<Elem>(reps.size());
  std::vector<Elem> lam(m * m), rho(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      lam[i * m + j] = class_map[s.lam(reps[i], reps[j])];
      rho[i * m + j] = class_map[s.rho(reps[i], reps[j])];
    }
  // Well-definedness: every representative choice gives the same class.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (lam[class_map[x] * m + class_map[y]] != class_map[s.lam(x, y)] ||
          rho[class_map[y] * m + class_map[x]] != class_map[s.rho(y, x)])
        throw InternalError("retraction is not well defined; input is not a solution");
  Retraction out{FiniteSolution(m, std::move(lam), std::move(rho)), std::move(class_map)};
  if (!validate_ybe(out.solution, Exec::serial).ok())
    throw InternalError("retraction failed validation; input is not a solution");
  return out;
}

std::optional<std::size_t> multipermutation_level(const FiniteSolution& s, std::size_t max_iter) {
  FiniteSolution cur = s;
  for (std::size_t m = 0;; ++m) {
    if (is_singleton(cur)) return m;
    if (m == max_iter) return std::nullopt;
    auto next = retraction(cur).solution;
    if (next.size() == cur.size()) return std::nullopt;  // fixpoint, never shrinks
    cur = std::move(next);
  }
}

FiniteSolution twist(std::size_t n) {
  std::vector<Elem> lam(n * n), rho(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      lam[x * n + y] = static_cast<Elem>(y);
      rho[y * n + x] = static_cast<Elem>(x);
    }
  return FiniteSolution(n, std::move(lam), std::move(rho));
}

FiniteSolution singleton_solution() { return twist(1); }

FiniteSolution lyubashenko(const Perm& sigma, const Perm& tau) {
  const std::size_t n = sigma.size();
  if (!is_permutation(sigma, n) || !is_permutation(tau, n))
    throw PreconditionError("lyubashenko: arguments must be permutations of equal degree");
  if (compose(sigma, tau) != compose(tau, sigma))
    throw PreconditionError("lyubashenko: permutations must commute");
  std::vector<Elem> lam(n * n), rho(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      lam[x * n + y] = sigma[y];
      rho[y * n + x] = tau[x];
    }
  return FiniteSolution(n, std::move(lam), std::move(rho));
}

FiniteSolution disjoint_union(const FiniteSolution& a, const FiniteSolution& b) {
  const std::size_t na = a.size(), n = a.size() + b.size();
  std::vector<Elem> lam(n * n), rho(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool xa = x < na, ya = y < na;
      Elem l = static_cast<Elem>(y), r = static_cast<Elem>(x);
      if (xa && ya) {
        l = a.lam(x, y);
        r = a.rho(y, x);
      } else if (!xa && !ya) {
        l = static_cast<Elem>(na + b.lam(x - na, y - na));
        r = static_cast<Elem>(na + b.rho(y - na, x - na));
      }
      lam[x * n + y] = l;
      rho[y * n + x] = r;
    }
  return FiniteSolution(n, std::move(lam), std::move(rho));
}

namespace {

std::vector<Perm> all_permutations(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Decodes index -> n rows chosen from perms (mixed radix, row 0 most significant).
void decode_rows(std::size_t index, const std::vector<Perm>& perms, std::size_t n, Elem* out) {
  const std::size_t k = perms.size();
  for (std::size_t row = n; row-- > 0;) {
    const Perm& p = perms[index % k];
    std::copy(p.begin(), p.end(), out + row * n);
    index /= k;
  }
}

void check_bounds(std::size_t n, EnumerationMode mode) {
  if (n == 0) throw PreconditionError("enumerate_solutions: n must be positive");
  if (mode == EnumerationMode::all && n > kMaxEnumerateAll)
    throw CapacityError("enumerate_solutions: mode=all supports n <= 3");
  if (mode == EnumerationMode::involutive && n > kMaxEnumerateInvolutive)
    throw CapacityError("enumerate_solutions: mode=involutive supports n <= 4");
}

// All solutions whose lambda table is the index-th choice, in rho order.
std::vector<FiniteSolution> solutions_for_lambda(std::size_t n, EnumerationMode mode,
                                                 const std::vector<Perm>& perms,
                                                 std::size_t lambda_index) {
  std::vector<FiniteSolution> out;
  std::vector<Elem> lam(n * n), rho(n * n);
  decode_rows(lambda_index, perms, n, lam.data());
  if (mode == EnumerationMode::involutive) {
    // ρ_y(x) = λ^{-1}_{λ_x(y)}(x)
    std::vector<Elem> inv(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) inv[x * n + lam[x * n + y]] = static_cast<Elem>(y);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) rho[y * n + x] = inv[lam[x * n + y] * n + x];
    if (rows_are_permutations(n, rho.data()) && braid_holds(n, lam.data(), rho.data()))
      out.emplace_back(n, lam, rho);
    return out;
  }
  const std::size_t choices = ipow(perms.size(), n);
  for (std::size_t ri = 0; ri < choices; ++ri) {
    decode_rows(ri, perms, n, rho.data());
    if (braid_holds(n, lam.data(), rho.data())) out.emplace_back(n, lam, rho);
  }
  return out;
}

}  // namespace

std::vector<FiniteSolution> enumerate_solutions(std::size_t n, EnumerationMode mode, Exec exec) {
  check_bounds(n, mode);
  const auto perms = all_permutations(n);
  const std::size_t lambda_choices = ipow(perms.size(), n);
  std::vector<std::vector<FiniteSolution>> buckets(lambda_choices);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long li = 0; li < static_cast<long long>(lambda_choices); ++li)
      buckets[li] = solutions_for_lambda(n, mode, perms, static_cast<std::size_t>(li));
  } else {
    for (std::size_t li = 0; li < lambda_choices; ++li)
      buckets[li] = solutions_for_lambda(n, mode, perms, li);
  }
  std::vector<FiniteSolution> out;
  for (auto& b : buckets)
    for (auto& s : b) out.push_back(std::move(s));
  return out;
}

void for_each_solution(std::size_t n, EnumerationMode mode,
                       const std::function<void(const FiniteSolution&)>& visit) {
  check_bounds(n, mode);
  const auto perms = all_permutations(n);
  const std::size_t lambda_choices = ipow(perms.size(), n);
  for (std::size_t li = 0; li < lambda_choices; ++li)
    for (const auto& s : solutions_for_lambda(n, mode, perms, li)) visit(s);
}

}  // namespace ybe
