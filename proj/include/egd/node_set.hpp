#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace egd {

// Subset of the nodes 1..rank of a Dynkin diagram, stored as a bitmask
// (bit i-1 <-> node i).
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}

  static NodeSet all(int rank) { return NodeSet((rank >= 32 ? ~0u : (1u << rank) - 1u)); }
  static NodeSet none() { return NodeSet(); }
  static NodeSet of(std::initializer_list<int> nodes);
  static NodeSet of(const std::vector<int>& nodes);

  // "all", "none" or a comma-separated list of indices in 1..rank.
  static NodeSet parse(std::string_view text, int rank);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int node) const { return (bits_ >> (node - 1)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  NodeSet complement(int rank) const { return NodeSet(all(rank).bits_ & ~bits_); }
  NodeSet with(int node) const { return NodeSet(bits_ | (1u << (node - 1))); }
  NodeSet without(int node) const { return NodeSet(bits_ & ~(1u << (node - 1))); }
  bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }
  NodeSet intersect(NodeSet other) const { return NodeSet(bits_ & other.bits_); }

  std::vector<int> nodes() const;  // increasing order
  std::string str() const;         // "1,2,4"; empty string for the empty set

  friend constexpr bool operator==(NodeSet, NodeSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace egd
