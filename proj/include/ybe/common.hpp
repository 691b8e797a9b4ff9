#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

/// Carrier elements are indices {0, ..., n-1}.
using Elem = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image table.
using Perm = std::vector<Elem>;

/// Malformed tables, files or structural mismatches.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented size bound was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with arguments violating its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A self-check that must hold mathematically failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Selects between the OpenMP kernels and the serial reference path.
enum class Exec { serial, parallel };

bool is_permutation(std::span<const Elem> p, std::size_t n);
Perm inverse(std::span<const Elem> p);
Perm identity_perm(std::size_t n);
/// (a ∘ b)(x) = a(b(x)).
Perm compose(std::span<const Elem> a, std::span<const Elem> b);

/// Membership set over a carrier {0, ..., n-1}.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : bits_(universe, 0) {}
  static Subset of(std::size_t universe, std::span<const Elem> members);
  static Subset full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(Elem e) const { return e < bits_.size() && bits_[e] != 0; }
  void insert(Elem e) { bits_.at(e) = 1; }
  void erase(Elem e) { bits_.at(e) = 0; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Elem> members() const;
  bool is_subset_of(const Subset& other) const;

  friend bool operator==(const Subset&, const Subset&) = default;
  /// Orders by size, then lexicographically by sorted member list.
  friend bool operator<(const Subset& a, const Subset& b);

 private:
  std::vector<std::uint8_t> bits_;
};

/// Set partition of {0, ..., n-1}; blocks sorted internally and ordered by
/// least element.
class Partition {
 public:
  Partition() = default;
  /// Builds from a block label per element (labels need not be canonical).
  static Partition from_labels(std::span<const Elem> labels);
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks);
  static Partition singletons(std::size_t n);
  static Partition one_block(std::size_t n);

  std::size_t universe() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  Elem block_of(Elem x) const { return block_of_[x]; }
  const std::vector<std::vector<Elem>>& blocks() const { return blocks_; }
  const std::vector<Elem>& labels() const { return block_of_; }
  bool is_singletons() const { return block_count() == universe(); }
  bool is_one_block() const { return block_count() == 1; }
  /// True when every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Elem> block_of_;
  std::vector<std::vector<Elem>> blocks_;
};

std::string to_string(const Partition& p);
std::string to_string(std::span<const Elem> members);

}  // namespace ybe
