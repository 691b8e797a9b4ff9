#pragma once

// Deliberately naive reference computations, written without the library's
// helpers so that tests compare two independent derivations.

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace oracle {

using ybe::Elem;
using Table = std::vector<std::vector<Elem>>;

inline std::vector<std::vector<Elem>> all_perms(Elem n) {
  std::vector<Elem> p(n);
  for (Elem i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<Elem>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// r as a map on X³ positions, composed literally.
inline bool braid(Elem n, const Table& lam, const Table& rho) {
  auto r = [&](Elem x, Elem y) { return std::pair{lam[x][y], rho[y][x]}; };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        Elem a = x, b = y, c = z;
        std::tie(a, b) = r(a, b);
        std::tie(b, c) = r(b, c);
        std::tie(a, b) = r(a, b);
        const auto lhs = std::tuple{a, b, c};
        a = x, b = y, c = z;
        std::tie(b, c) = r(b, c);
        std::tie(a, b) = r(a, b);
        std::tie(b, c) = r(b, c);
        if (lhs != std::tuple{a, b, c}) return false;
      }
  return true;
}

inline ybe::FiniteSolution make(Elem n, const Table& lam, const Table& rho) {
  std::vector<Elem> l, r;
  for (Elem i = 0; i < n; ++i) {
    l.insert(l.end(), lam[i].begin(), lam[i].end());
    r.insert(r.end(), rho[i].begin(), rho[i].end());
  }
  return ybe::FiniteSolution(n, l, r);
}

// Every non-degenerate solution by brute force over λ and ρ tables.
inline std::vector<ybe::FiniteSolution> all_solutions(Elem n, bool involutive_only) {
  const auto perms = all_perms(n);
  std::vector<ybe::FiniteSolution> out;
  std::size_t rows = 1;
  for (Elem i = 0; i < n; ++i) rows *= perms.size();
  for (std::size_t li = 0; li < rows; ++li) {
    Table lam(n);
    for (std::size_t v = li, i = 0; i < n; ++i, v /= perms.size()) lam[i] = perms[v % perms.size()];
    for (std::size_t ri = 0; ri < rows; ++ri) {
      Table rho(n);
      for (std::size_t v = ri, i = 0; i < n; ++i, v /= perms.size()) rho[i] = perms[v % perms.size()];
      if (!braid(n, lam, rho)) continue;
      if (involutive_only) {
        bool inv = true;
        for (Elem x = 0; x < n && inv; ++x)
          for (Elem y = 0; y < n && inv; ++y) {
            const Elem u = lam[x][y], v = rho[y][x];
            inv = lam[u][v] == x && rho[v][u] == y;
          }
        if (!inv) continue;
      }
      out.push_back(make(n, lam, rho));
    }
  }
  return out;
}

inline std::pair<std::vector<Elem>, std::vector<Elem>> canonical_form(const ybe::FiniteSolution& s) {
  const auto n = static_cast<Elem>(s.size());
  std::pair<std::vector<Elem>, std::vector<Elem>> best;
  bool first = true;
  for (const auto& p : all_perms(n)) {
    std::vector<Elem> l(n * n), r(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        l[p[x] * n + p[y]] = p[s.lam(x, y)];
        r[p[y] * n + p[x]] = p[s.rho(y, x)];
      }
    std::pair c{l, r};
    if (first || c < best) best = c, first = false;
  }
  return best;
}

inline std::size_t isomorphism_classes(const std::vector<ybe::FiniteSolution>& v) {
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> seen;
  for (const auto& s : v) seen.insert(canonical_form(s));
  return seen.size();
}

inline std::size_t brace_isomorphism_classes(const std::vector<ybe::SkewBrace>& v) {
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> seen;
  for (const auto& b : v) {
    const auto n = static_cast<Elem>(b.size());
    std::pair<std::vector<Elem>, std::vector<Elem>> best;
    bool first = true;
    for (const auto& p : all_perms(n)) {
      if (p[0] != 0) continue;
      std::vector<Elem> a(n * n), m(n * n);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          a[p[x] * n + p[y]] = p[b.add(x, y)];
          m[p[x] * n + p[y]] = p[b.mul(x, y)];
        }
      std::pair c{a, m};
      if (first || c < best) best = c, first = false;
    }
    seen.insert(best);
  }
  return seen.size();
}

// Subsets as bit masks; n <= 16.
inline std::vector<Elem> members(unsigned mask, Elem n) {
  std::vector<Elem> out;
  for (Elem i = 0; i < n; ++i)
    if (mask >> i & 1u) out.push_back(i);
  return out;
}

inline bool closed(const ybe::FiniteSolution& s, unsigned mask) {
  const auto n = static_cast<Elem>(s.size());
  for (Elem x : members(mask, n))
    for (Elem y : members(mask, n))
      if (!(mask >> s.lam(x, y) & 1u) || !(mask >> s.rho(y, x) & 1u)) return false;
  return true;
}

// Every Y containing 0 with Y and its complement proper and closed.
inline std::vector<unsigned> decompositions(const ybe::FiniteSolution& s) {
  const auto n = static_cast<Elem>(s.size());
  const unsigned full = (1u << n) - 1;
  std::vector<unsigned> out;
  for (unsigned m = 1; m < full; ++m)
    if ((m & 1u) && closed(s, m) && closed(s, full & ~m)) out.push_back(m);
  return out;
}

// All set partitions of {0..n-1} as label vectors, recursively.
inline void partitions_rec(Elem n, std::vector<Elem>& cur, Elem blocks, std::vector<std::vector<Elem>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (Elem b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    partitions_rec(n, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<Elem>> all_partitions(Elem n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur;
  partitions_rec(n, cur, 0, out);
  return out;
}

// Quotient check straight from the definition: well defined, non-degenerate,
// braid relation.
inline bool is_congruence(const ybe::FiniteSolution& s, const std::vector<Elem>& label) {
  const auto n = static_cast<Elem>(s.size());
  const Elem m = *std::max_element(label.begin(), label.end()) + 1;
  std::map<std::pair<Elem, Elem>, Elem> lam, rho;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto [it, fresh] = lam.emplace(std::pair{label[x], label[y]}, label[s.lam(x, y)]);
      if (!fresh && it->second != label[s.lam(x, y)]) return false;
      auto [jt, fresh2] = rho.emplace(std::pair{label[y], label[x]}, label[s.rho(y, x)]);
      if (!fresh2 && jt->second != label[s.rho(y, x)]) return false;
    }
  Table L(m, std::vector<Elem>(m)), R(m, std::vector<Elem>(m));
  for (auto [k, v] : lam) L[k.first][k.second] = v;
  for (auto [k, v] : rho) R[k.first][k.second] = v;
  for (Elem i = 0; i < m; ++i) {
    std::set<Elem> a(L[i].begin(), L[i].end()), b(R[i].begin(), R[i].end());
    if (a.size() != m || b.size() != m) return false;
  }
  return braid(m, L, R);
}

// Image sets of r on X0×Z and Z×X0 compared with Z×X0 and X0×Z.
inline bool is_i_kernel(const ybe::FiniteSolution& s, const std::vector<Elem>& label, Elem block) {
  const auto n = static_cast<Elem>(s.size());
  std::vector<Elem> x0;
  for (Elem x = 0; x < n; ++x)
    if (label[x] == block) x0.push_back(x);
  const Elem m = *std::max_element(label.begin(), label.end()) + 1;
  for (Elem zb = 0; zb < m; ++zb) {
    std::vector<Elem> z;
    for (Elem x = 0; x < n; ++x)
      if (label[x] == zb) z.push_back(x);
    std::set<std::pair<Elem, Elem>> img1, img2, want1, want2;
    for (Elem a : x0)
      for (Elem c : z) {
        img1.insert({s.lam(a, c), s.rho(c, a)});
        img2.insert({s.lam(c, a), s.rho(a, c)});
        want1.insert({c, a});
        want2.insert({a, c});
      }
    if (img1 != want1 || img2 != want2) return false;
  }
  return true;
}

// Permutation group generated by (λ_x, ρ_x^{-1}) by plain closure under
// products of known elements with generators.
inline std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> perm_group(const ybe::FiniteSolution& s) {
  const auto n = static_cast<Elem>(s.size());
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> gens;
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> l(n), ri(n);
    for (Elem y = 0; y < n; ++y) {
      l[y] = s.lam(x, y);
      ri[s.rho(x, y)] = y;
    }
    gens.push_back({l, ri});
  }
  std::vector<Elem> id(n);
  for (Elem i = 0; i < n; ++i) id[i] = i;
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> g{{id, id}};
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = g;
    for (const auto& [p, q] : snapshot)
      for (const auto& [gp, gq] : gens) {
        std::vector<Elem> a(n), b(n);
        for (Elem i = 0; i < n; ++i) a[i] = p[gp[i]], b[i] = q[gq[i]];
        grew |= g.insert({a, b}).second;
      }
  }
  return g;
}

// Ideals from the definition over all subsets; n <= 16.
inline std::vector<std::vector<Elem>> ideals(const ybe::SkewBrace& b) {
  const auto n = static_cast<Elem>(b.size());
  std::vector<std::vector<Elem>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    auto in = [&](Elem e) { return (mask >> e & 1u) != 0; };
    bool ok = true;
    const auto mem = members(mask, n);
    for (Elem x : mem)
      for (Elem y : mem) ok = ok && in(b.add(x, b.neg(y)));
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem x : mem) {
        ok = ok && in(b.lambda(a, x)) && in(b.add(b.add(a, x), b.neg(a))) &&
             in(b.mul(b.mul(a, x), b.inv(a)));
      }
    if (ok) out.push_back(mem);
  }
  return out;
}

// Soluble from the definition: recursive descent through ideals with
// abelian factors; trivial brace factor means x+y = xy and x+y = y+x
// modulo the lower ideal.
inline bool soluble(const ybe::SkewBrace& b) {
  const auto all = ideals(b);
  const auto n = static_cast<Elem>(b.size());
  auto contains = [](const std::vector<Elem>& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); };
  auto abelian_factor = [&](const std::vector<Elem>& up, const std::vector<Elem>& low) {
    if (!std::includes(up.begin(), up.end(), low.begin(), low.end())) return false;
    for (Elem x : up)
      for (Elem y : up) {
        const Elem s = b.add(x, y);
        if (!contains(low, b.add(b.neg(s), b.mul(x, y)))) return false;
        if (!contains(low, b.add(b.neg(s), b.add(y, x)))) return false;
      }
    return true;
  };
  std::vector<Elem> full(n);
  for (Elem i = 0; i < n; ++i) full[i] = i;
  std::set<std::vector<Elem>> reach{full}, frontier{full};
  while (!frontier.empty()) {
    std::set<std::vector<Elem>> next;
    for (const auto& up : frontier)
      for (const auto& low : all)
        if (low.size() < up.size() && abelian_factor(up, low) && reach.insert(low).second) next.insert(low);
    frontier = std::move(next);
  }
  return reach.count({0}) > 0;
}

}  // namespace oracle
