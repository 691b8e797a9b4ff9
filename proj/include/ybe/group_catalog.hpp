#pragma once

#include <string>
#include <vector>

#include "ybe/common.hpp"

namespace ybe {

/// Cayley table of a finite group on {0, ..., n-1} with identity 0.
struct GroupTable {
  std::string name;
  std::size_t n = 0;
  std::vector<Elem> table;  // table[a*n+b] = a*b

  Elem op(Elem a, Elem b) const { return table[a * n + b]; }
};

/// The fourteen groups of order <= 8 built from presentations, in catalog
/// order: C1, C2, C3, C4, C2xC2, C5, C6, S3, C7, C8, C4xC2, C2xC2xC2, D4, Q8.
const std::vector<GroupTable>& small_group_catalog();

/// Catalog groups of exactly order n.
std::vector<GroupTable> catalog_groups_of_order(std::size_t n);

/// Looks a group up by name, including the extra entry A5 (order 60).
const GroupTable& catalog_group(const std::string& name);

std::vector<std::string> catalog_group_names();

/// Checks closure, identity at 0, Latin property and associativity.
bool is_group_table(std::span<const Elem> table, std::size_t n, Elem identity = 0);

/// All distinct relabelings of g by permutations fixing the identity, in
/// lexicographic order of the relabeled tables.
std::vector<std::vector<Elem>> labeled_copies(const GroupTable& g);

}  // namespace ybe
