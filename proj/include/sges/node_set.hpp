#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace sges {

/// Dense variable index in 0..n-1. Integer order is used for every
/// deterministic tie-break in the library.
using NodeId = int;

/// Sorted set of node ids backed by a 64-bit mask.
///
/// All graph algorithms here work on domains of at most kMaxNodes variables;
/// the mask representation makes clique and adjacency tests single
/// instructions. Iteration is always in increasing id order.
class NodeSet {
 public:
  static constexpr int kMaxNodes = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const NodeId*;
    using reference = NodeId;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr NodeId operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<NodeId> ids) {
    for (NodeId id : ids) insert(id);
  }
  template <typename Range>
  static NodeSet from_range(const Range& ids) {
    NodeSet s;
    for (NodeId id : ids) s.insert(id);
    return s;
  }

  /// {0, ..., n-1}
  static NodeSet first(int n) {
    check_id_count(n);
    return NodeSet(n == kMaxNodes ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(NodeId id) const {
    return id >= 0 && id < kMaxNodes && ((bits_ >> id) & 1u) != 0;
  }
  /// Smallest member; the set must be non-empty.
  constexpr NodeId front() const { return std::countr_zero(bits_); }
  constexpr NodeId back() const { return 63 - std::countl_zero(bits_); }

  void insert(NodeId id) {
    check_id(id);
    bits_ |= std::uint64_t{1} << id;
  }
  void erase(NodeId id) {
    check_id(id);
    bits_ &= ~(std::uint64_t{1} << id);
  }
  NodeSet with(NodeId id) const {
    NodeSet s = *this;
    s.insert(id);
    return s;
  }
  NodeSet without(NodeId id) const {
    NodeSet s = *this;
    s.erase(id);
    return s;
  }

  constexpr bool is_subset_of(NodeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(NodeSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
  NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }
  NodeSet& operator-=(NodeSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const NodeSet&) const = default;

  /// Lexicographic order on the ascending member sequences.
  constexpr bool operator<(NodeSet o) const {
    const std::uint64_t diff = bits_ ^ o.bits_;
    if (diff == 0) return false;
    const int first_diff = std::countr_zero(diff);
    const std::uint64_t above = first_diff == 63
                                    ? 0
                                    : ~std::uint64_t{0} << (first_diff + 1);
    if ((bits_ >> first_diff) & 1u) return (o.bits_ & above) != 0;
    return (bits_ & above) == 0;
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<NodeId> to_vector() const { return {begin(), end()}; }
  std::string to_string() const {
    std::string out = "{";
    for (NodeId id : *this) {
      if (out.size() > 1) out += ",";
      out += std::to_string(id);
    }
    return out + "}";
  }

  static void check_id_count(int n) {
    if (n < 0 || n > kMaxNodes)
      throw std::invalid_argument("node count " + std::to_string(n) +
                                  " outside [0, 64]");
  }

 private:
  static void check_id(NodeId id) {
    if (id < 0 || id >= kMaxNodes)
      throw std::out_of_range("node id " + std::to_string(id) +
                              " outside [0, 64)");
  }

  std::uint64_t bits_ = 0;
};

/// Calls fn(subset) for every subset of `set` whose size is at most
/// `max_size` (pass set.size() for all subsets). Order is by mask value.
template <typename Fn>
void for_each_subset(NodeSet set, int max_size, Fn&& fn) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    if (std::popcount(sub) <= max_size) fn(NodeSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace sges
