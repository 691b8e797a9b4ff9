#include "ybe/common.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ybe {

bool is_permutation(std::span<const Elem> p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<std::uint8_t> seen(n, 0);
  for (Elem v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm inverse(std::span<const Elem> p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Elem>(i);
  return inv;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  return p;
}

Perm compose(std::span<const Elem> a, std::span<const Elem> b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Subset Subset::of(std::size_t universe, std::span<const Elem> members) {
  Subset s(universe);
  for (Elem e : members) s.insert(e);
  return s;
}

Subset Subset::full(std::size_t universe) {
  Subset s;
  s.bits_.assign(universe, 1);
  return s;
}

std::size_t Subset::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Elem> Subset::members() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(static_cast<Elem>(i))) return false;
  return true;
}

bool operator<(const Subset& a, const Subset& b) {
  const auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.members() < b.members();
}

Partition Partition::from_labels(std::span<const Elem> labels) {
  Partition p;
  const std::size_t n = labels.size();
  p.block_of_.assign(n, 0);
  std::unordered_map<Elem, Elem> canon;  // label -> block index
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = canon.try_emplace(labels[x], static_cast<Elem>(canon.size()));
    const Elem b = it->second;
    if (fresh) p.blocks_.emplace_back();
    p.block_of_[x] = b;
    p.blocks_[b].push_back(static_cast<Elem>(x));
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks) {
  std::vector<Elem> labels(n, static_cast<Elem>(-1));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw FormatError("partition has an empty block");
    for (Elem x : blocks[b]) {
      if (x >= n) throw FormatError("partition element out of range");
      if (labels[x] != static_cast<Elem>(-1)) throw FormatError("partition blocks overlap");
      labels[x] = static_cast<Elem>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), static_cast<Elem>(-1)) != labels.end())
    throw FormatError("partition blocks do not cover the carrier");
  return from_labels(labels);
}

Partition Partition::singletons(std::size_t n) { return from_labels(identity_perm(n)); }

Partition Partition::one_block(std::size_t n) { return from_labels(std::vector<Elem>(n, 0)); }

bool Partition::refines(const Partition& coarser) const {
  if (coarser.universe() != universe()) return false;
  for (const auto& block : blocks_)
    for (Elem x : block)
      if (coarser.block_of(x) != coarser.block_of(block.front())) return false;
  return true;
}

std::string to_string(std::span<const Elem> members) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
  os << '}';
  return os.str();
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t b = 0; b < p.block_count(); ++b) os << (b ? "," : "") << to_string(p.blocks()[b]);
  os << '}';
  return os.str();
}

}  // namespace ybe
