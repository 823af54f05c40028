#pragma once

#include <vector>

#include "egd/node_set.hpp"
#include "egd/weyl_group.hpp"

namespace egd {

// w = up * down with up in W^J, down in W_J and additive lengths.
struct Decomposition {
  WeylElement up;    // w^J
  WeylElement down;  // w_J
};

// Strips right descents lying in J (scanned in increasing order) until none
// is left; the stripped letters, read backwards, form w_J.
Decomposition decompose(const WeylGroup& group, const WeylElement& w, NodeSet J);

// The letters stripped by decompose(), in stripping order. Their product is
// w_J^{-1}; reversed, it is a reduced word for w_J.
Word stripped_letters(const WeylGroup& group, const WeylElement& w, NodeSet J);

WeylElement longest_in_parabolic(const WeylGroup& group, NodeSet J);  // w_{0J}
WeylElement longest_in_quotient(const WeylGroup& group, NodeSet J);   // w_0^J

// c^J(u) = l(w_0^J) - l(u^J), c_J(u) = l(w_{0J}) - l(u_J), c(u) = l(w_0) - l(u).
struct CodimData {
  int up = 0;
  int down = 0;
  int total = 0;
};

CodimData codimensions(const WeylGroup& group, const WeylElement& u, NodeSet J);

// Reduced word of w_0^{Delta \ {1}} for classical families.
Word stumbo_word(const DynkinSpec& spec);

struct DnDistinguished {
  WeylElement w_alpha;      // s_{n-1} s_{n-2} ... s_1
  WeylElement w_beta;       // s_n s_{n-2} ... s_1
  WeylElement theta_alpha;  // w_alpha^{-1}
  WeylElement theta_beta;   // w_beta^{-1}
  WeylElement sigma_beta;   // spinor element of the sequence (0, 1, ..., n-2)
};

DnDistinguished dn_distinguished(const WeylGroup& group);

struct SpinorCoset {
  std::vector<int> sequence;  // (l_1, ..., l_{n-1})
  Word word;
};

// Reduced words for W^{Delta \ {node}} in type D_n, node = n or n-1, indexed
// by the admissible sequences. node = n-1 is obtained by swapping the letters
// n-1 and n.
std::vector<SpinorCoset> spinor_coset_words(const WeylGroup& group, int node);
inline std::vector<SpinorCoset> spinor_coset_words(const WeylGroup& group) {
  return spinor_coset_words(group, group.rank());
}

// Word of the spinor element for an arbitrary sequence (no admissibility check).
Word spinor_word(int n, const std::vector<int>& sequence);

// [X_u] on G/B is pulled back from G/P_J.
bool is_schubert_pullback(const WeylGroup& group, const WeylElement& u, NodeSet J);
// [X^v] on G/B is pulled back from G/P_J, i.e. v lies in W^J.
bool is_opposite_pullback(const WeylGroup& group, const WeylElement& v, NodeSet J);

}  // namespace egd
