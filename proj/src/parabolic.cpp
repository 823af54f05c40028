#include "egd/parabolic.hpp"

#include <algorithm>
#include <bit>

#include "egd/bruhat.hpp"
#include "egd/error.hpp"

namespace egd {

namespace {

int first_descent_in(const WeylGroup& group, const WeylElement& w, NodeSet J) {
  for (int j : J.nodes())
    if (group.is_right_descent(w, j)) return j;
  return 0;
}

void require_type_d(const WeylGroup& group) {
  if (group.spec().family != Family::D)
    throw Error(ErrorKind::NotTypeD, group.spec().name() + " is not of type D");
}

}  // namespace

Word stripped_letters(const WeylGroup& group, const WeylElement& w, NodeSet J) {
  group.check(w);
  Word out;
  WeylElement p = w;
  while (const int j = first_descent_in(group, p, J)) {
    out.push_back(j);
    p = group.right_multiply(p, j);
  }
  return out;
}

Decomposition decompose(const WeylGroup& group, const WeylElement& w, NodeSet J) {
  group.check(w);
  WeylElement up = w;
  WeylElement down = group.identity();
  while (const int j = first_descent_in(group, up, J)) {
    up = group.right_multiply(up, j);
    down = group.left_multiply(j, down);
  }
  return {up, down};
}

WeylElement longest_in_parabolic(const WeylGroup& group, NodeSet J) {
  WeylElement w = group.identity();
  for (;;) {
    int ascent = 0;
    for (int j : J.nodes())
      if (!group.is_right_descent(w, j)) {
        ascent = j;
        break;
      }
    if (ascent == 0) return w;
    w = group.right_multiply(w, ascent);
  }
}

WeylElement longest_in_quotient(const WeylGroup& group, NodeSet J) {
  return decompose(group, group.longest_element(), J).up;
}

CodimData codimensions(const WeylGroup& group, const WeylElement& u, NodeSet J) {
  const Decomposition d = decompose(group, u, J);
  const int top_down = longest_in_parabolic(group, J).length();
  const int top = group.longest_element().length();
  CodimData c;
  c.up = (top - top_down) - d.up.length();
  c.down = top_down - d.down.length();
  c.total = top - u.length();
  return c;
}

Word stumbo_word(const DynkinSpec& spec) {
  const int n = spec.rank;
  Word w;
  switch (spec.family) {
    case Family::A:
      for (int i = n; i >= 1; --i) w.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) w.push_back(i);
      for (int i = n - 1; i >= 1; --i) w.push_back(i);
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) w.push_back(i);
      w.push_back(n);
      for (int i = n - 1; i >= 1; --i) w.push_back(i);
      break;
    default:
      throw Error(ErrorKind::NotClassical, spec.name() + " is not of classical type");
  }
  return w;
}

namespace {

// theta_beta = [1..n-2, n], theta_alpha = [1..n-2, n-1]; theta(l) is the
// right suffix of length l.
Word theta_suffix(int n, bool beta, int l) {
  Word full;
  for (int i = 1; i <= n - 2; ++i) full.push_back(i);
  full.push_back(beta ? n : n - 1);
  return Word(full.end() - l, full.end());
}

}  // namespace

Word spinor_word(int n, const std::vector<int>& sequence) {
  Word out;
  const int m = static_cast<int>(sequence.size());  // n - 1
  for (int k = 1; k <= m; ++k) {
    // The last factor is theta_beta and the factors alternate leftwards.
    const bool beta = (m - k) % 2 == 0;
    const Word part = theta_suffix(n, beta, sequence[k - 1]);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

DnDistinguished dn_distinguished(const WeylGroup& group) {
  require_type_d(group);
  const int n = group.rank();
  Word wa, wb;
  wa.push_back(n - 1);
  wb.push_back(n);
  for (int i = n - 2; i >= 1; --i) {
    wa.push_back(i);
    wb.push_back(i);
  }
  DnDistinguished d;
  d.w_alpha = group.from_word(wa);
  d.w_beta = group.from_word(wb);
  d.theta_alpha = group.inverse(d.w_alpha);
  d.theta_beta = group.inverse(d.w_beta);
  std::vector<int> seq(n - 1);
  for (int k = 0; k < n - 1; ++k) seq[k] = k;
  d.sigma_beta = group.from_word(spinor_word(n, seq));
  return d;
}

std::vector<SpinorCoset> spinor_coset_words(const WeylGroup& group, int node) {
  require_type_d(group);
  const int n = group.rank();
  if (node != n && node != n - 1)
    throw Error(ErrorKind::Parse, "spinor node must be n-1 or n");
  const int m = n - 1;
  std::vector<std::vector<int>> sequences;
  // 0 = l_1 = ... = l_k < l_{k+1} < ... < l_{n-1} <= n-1, k >= 1: choose the
  // strictly increasing nonzero tail as a subset of {1..n-1} of size < n-1.
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    if (size >= m) continue;
    std::vector<int> seq(m - size, 0);
    for (int v = 1; v <= m; ++v)
      if ((mask >> (v - 1)) & 1u) seq.push_back(v);
    sequences.push_back(std::move(seq));
  }
  std::vector<int> top(m);
  for (int k = 0; k < m; ++k) top[k] = k + 1;
  sequences.push_back(top);
  std::sort(sequences.begin(), sequences.end());

  std::vector<SpinorCoset> out;
  for (auto& seq : sequences) {
    Word w = spinor_word(n, seq);
    if (node == n - 1)
      for (int& letter : w)
        if (letter >= n - 1) letter = (letter == n) ? n - 1 : n;
    out.push_back({std::move(seq), std::move(w)});
  }
  return out;
}

bool is_schubert_pullback(const WeylGroup& group, const WeylElement& u, NodeSet J) {
  return decompose(group, u, J).down == longest_in_parabolic(group, J);
}

bool is_opposite_pullback(const WeylGroup& group, const WeylElement& v, NodeSet J) {
  return decompose(group, v, J).down == group.identity();
}

}  // namespace egd
