#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "egd/dynkin.hpp"
#include "egd/node_set.hpp"

namespace egd {

// Generator indices 1..rank; not required to be reduced.
using Word = std::vector<int>;

Word parse_word(std::string_view text);    // "4,2,3,1"; "" or "e" is the empty word
std::string format_word(const Word& w);    // comma-separated, no spaces

inline constexpr int kMaxPositiveRoots = 120;  // E8

// A Weyl group element, stored as its action on the positive roots: entry k is
// the index of w(beta_k) among all roots, where indices 0..N-1 are the positive
// roots and N..2N-1 their negatives. Two elements are equal iff they act
// identically, so this is a canonical form.
class WeylElement {
 public:
  WeylElement() = default;

  int length() const { return length_; }
  std::uint32_t context_id() const { return context_; }
  std::size_t hash() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  friend class WeylGroup;

  std::uint32_t context_ = 0;
  std::uint16_t length_ = 0;
  std::array<std::uint8_t, kMaxPositiveRoots> image_{};
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

enum class Side { Left, Right };

// Immutable group environment: root system, generator actions and w_0.
class WeylGroup {
 public:
  explicit WeylGroup(DynkinSpec spec);

  const DynkinSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  int num_positive_roots() const { return num_pos_; }
  std::uint32_t id() const { return id_; }
  const Matrix& coxeter() const { return coxeter_; }
  // Positive roots in simple-root coordinates, ordered by height.
  const std::vector<std::vector<int>>& positive_roots() const { return roots_; }

  WeylElement identity() const { return identity_; }
  WeylElement generator(int i) const;
  const WeylElement& longest_element() const { return longest_; }

  WeylElement multiply(const WeylElement& x, const WeylElement& y) const;
  WeylElement inverse(const WeylElement& x) const;
  WeylElement left_multiply(int i, const WeylElement& x) const;   // s_i x
  WeylElement right_multiply(const WeylElement& x, int i) const;  // x s_i

  int length(const WeylElement& x) const;

  bool is_right_descent(const WeylElement& x, int i) const {
    return x.image_[i - 1] >= num_pos_;
  }
  bool is_left_descent(const WeylElement& x, int i) const;
  NodeSet descents(const WeylElement& x, Side side) const;
  int smallest_left_descent(const WeylElement& x) const;  // 0 if x = e

  WeylElement from_word(const Word& w) const;
  // Lexicographically smallest reduced word (peel the smallest left descent).
  Word canonical_word(const WeylElement& x) const;

  // Order of s_1 s_2 ... s_n.
  int coxeter_number() const;
  int element_order(const WeylElement& x) const;

  void check(const WeylElement& x) const;  // throws ContextMismatch

 private:
  int apply(const WeylElement& x, int root) const {
    return root < num_pos_ ? x.image_[root] : negate(x.image_[root - num_pos_]);
  }
  int negate(int root) const { return root < num_pos_ ? root + num_pos_ : root - num_pos_; }
  WeylElement make_element(const std::uint8_t* image) const;

  DynkinSpec spec_;
  Matrix coxeter_;
  std::uint32_t id_;
  int num_pos_ = 0;
  std::vector<std::vector<int>> roots_;
  // reflect_[i][r]: index of s_{i+1}(root r), over all 2N roots.
  std::vector<std::vector<std::uint8_t>> reflect_;
  WeylElement identity_;
  WeylElement longest_;
};

}  // namespace egd
