#include "ybe/group_catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ybe {

namespace {

GroupTable cyclic(std::size_t n) {
  GroupTable g{"C" + std::to_string(n), n, std::vector<Elem>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = static_cast<Elem>((a + b) % n);
  return g;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::string name) {
  // (a, b) encoded as a * |h| + b; identity stays 0.
  const std::size_t n = g.n * h.n;
  GroupTable p{std::move(name), n, std::vector<Elem>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem a = g.op(static_cast<Elem>(x / h.n), static_cast<Elem>(y / h.n));
      const Elem b = h.op(static_cast<Elem>(x % h.n), static_cast<Elem>(y % h.n));
      p.table[x * n + y] = static_cast<Elem>(a * h.n + b);
    }
  return p;
}

// D_m = <r, s | r^m, s^2, s r s = r^-1>, element r^i s^j encoded i + m*j.
GroupTable dihedral(std::size_t m, std::string name) {
  const std::size_t n = 2 * m;
  GroupTable g{std::move(name), n, std::vector<Elem>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
      const std::size_t i = j1 ? (i1 + m - i2) % m : (i1 + i2) % m;
      g.table[x * n + y] = static_cast<Elem>(i + m * (j1 ^ j2));
    }
  return g;
}

// Q8 = <a, b | a^4, b^2 = a^2, b a b^-1 = a^-1>, element a^i b^j encoded i + 4*j.
GroupTable quaternion() {
  const std::size_t n = 8;
  GroupTable g{"Q8", n, std::vector<Elem>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i1 = x % 4, j1 = x / 4, i2 = y % 4, j2 = y / 4;
      std::size_t i = j1 ? (i1 + 4 - i2) % 4 : (i1 + i2) % 4;
      std::size_t j = j1 ^ j2;
      if (j1 && j2) i = (i + 2) % 4;  // b^2 = a^2
      g.table[x * n + y] = static_cast<Elem>(i + 4 * j);
    }
  return g;
}

// Closure of permutation generators; identity first, then BFS order.
GroupTable from_permutations(std::string name, std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<Perm> elems{identity_perm(degree)};
  std::map<Perm, Elem> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm p = compose(elems[i], g);
      if (index.try_emplace(p, static_cast<Elem>(elems.size())).second) elems.push_back(std::move(p));
    }
  const std::size_t n = elems.size();
  GroupTable t{std::move(name), n, std::vector<Elem>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.table[a * n + b] = index.at(compose(elems[a], elems[b]));
  return t;
}

GroupTable alternating5() {
  return from_permutations("A5", 5, {Perm{1, 2, 3, 4, 0}, Perm{1, 2, 0, 3, 4}});
}

}  // namespace

const std::vector<GroupTable>& small_group_catalog() {
  static const std::vector<GroupTable> catalog = [] {
    std::vector<GroupTable> c;
    c.push_back(cyclic(1));
    c.push_back(cyclic(2));
    c.push_back(cyclic(3));
    c.push_back(cyclic(4));
    c.push_back(direct_product(cyclic(2), cyclic(2), "C2xC2"));
    c.push_back(cyclic(5));
    c.push_back(cyclic(6));
    c.push_back(dihedral(3, "S3"));
    c.push_back(cyclic(7));
    c.push_back(cyclic(8));
    c.push_back(direct_product(cyclic(4), cyclic(2), "C4xC2"));
    c.push_back(direct_product(direct_product(cyclic(2), cyclic(2), "C2xC2"), cyclic(2), "C2xC2xC2"));
    c.push_back(dihedral(4, "D4"));
    c.push_back(quaternion());
    return c;
  }();
  return catalog;
}

std::vector<GroupTable> catalog_groups_of_order(std::size_t n) {
  std::vector<GroupTable> out;
  for (const auto& g : small_group_catalog())
    if (g.n == n) out.push_back(g);
  return out;
}

const GroupTable& catalog_group(const std::string& name) {
  static const GroupTable a5 = alternating5();
  if (name == a5.name) return a5;
  for (const auto& g : small_group_catalog())
    if (g.name == name) return g;
  throw PreconditionError("unknown catalog group: " + name);
}

std::vector<std::string> catalog_group_names() {
  std::vector<std::string> names;
  for (const auto& g : small_group_catalog()) names.push_back(g.name);
  names.push_back("A5");
  return names;
}

bool is_group_table(std::span<const Elem> t, std::size_t n, Elem e) {
  if (n == 0 || t.size() != n * n || e >= n) return false;
  for (Elem v : t)
    if (v >= n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (t[e * n + a] != a || t[a * n + e] != a) return false;
    if (!is_permutation(t.subspan(a * n, n), n)) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
    }
  return true;
}

std::vector<std::vector<Elem>> labeled_copies(const GroupTable& g) {
  const std::size_t n = g.n;
  std::set<std::vector<Elem>> seen;
  Perm pi = identity_perm(n);
  std::vector<Elem> t(n * n);
  do {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[pi[a] * n + pi[b]] = pi[g.op(a, b)];
    seen.insert(t);
  } while (n > 1 && std::next_permutation(pi.begin() + 1, pi.end()));
  return {seen.begin(), seen.end()};
}

}  // namespace ybe
