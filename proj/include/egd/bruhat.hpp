#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "egd/node_set.hpp"
#include "egd/weyl_group.hpp"

namespace egd {

// Uncached Bruhat comparison v <= u by descent recursion: peel the smallest
// left descent s of u, and s from v as well when it is a left descent of v.
bool bruhat_leq(const WeylGroup& group, const WeylElement& v, const WeylElement& u);

// Memo table for Bruhat comparisons. Every pair visited along one recursion
// chain has the same answer, so a single query fills the whole chain.
class BruhatCache {
 public:
  explicit BruhatCache(std::size_t max_entries = std::numeric_limits<std::size_t>::max())
      : max_entries_(max_entries) {}

  bool leq(const WeylGroup& group, const WeylElement& v, const WeylElement& u);

  std::size_t size() const { return table_.size(); }
  std::uint64_t hits() const { return hits_; }
  void clear() { table_.clear(); }

 private:
  struct Key {
    WeylElement v, u;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.v.hash() * 0x9e3779b97f4a7c15ull ^ k.u.hash();
    }
  };

  std::size_t max_entries_;
  std::uint64_t hits_ = 0;
  std::unordered_map<Key, bool, KeyHash> table_;
  std::vector<Key> chain_;
};

// Exhaustive subsequence test: does some subword of the reduced word u_word
// evaluate to the element of v_word with length equal to its letter count
// after reduction? Exponential; a testing oracle only.
bool subword_oracle(const WeylGroup& group, const Word& v_word, const Word& u_word);

// Elements of W^J grouped by length. Each stratum is sorted by canonical word.
struct LengthStrata {
  NodeSet J;
  std::vector<std::vector<WeylElement>> by_length;

  int max_length() const { return static_cast<int>(by_length.size()) - 1; }
  std::size_t total() const;
  const std::vector<WeylElement>& at(int l) const { return by_length.at(l); }
};

// BFS over W^J by left multiplication, never materialising W. Throws
// Infeasible once more than `budget` elements have been generated.
LengthStrata quotient_strata(const WeylGroup& group, NodeSet J,
                             std::size_t budget = std::numeric_limits<std::size_t>::max());

std::vector<WeylElement> elements_of_length(const WeylGroup& group, int l);
std::vector<WeylElement> quotient_elements_of_length(const WeylGroup& group, NodeSet J, int l);

bool in_quotient(const WeylGroup& group, const WeylElement& w, NodeSet J);

// Sort by canonical word, lexicographically.
void sort_canonically(const WeylGroup& group, std::vector<WeylElement>& elems);

}  // namespace egd
