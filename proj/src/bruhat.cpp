#include "egd/bruhat.hpp"

#include <algorithm>
#include <unordered_set>

#include "egd/error.hpp"

namespace egd {

bool bruhat_leq(const WeylGroup& group, const WeylElement& v0, const WeylElement& u0) {
  group.check(v0);
  group.check(u0);
  WeylElement v = v0, u = u0;
  for (;;) {
    if (v.length() == 0) return true;
    if (v.length() > u.length()) return false;
    if (v.length() == u.length()) return v == u;
    const int s = group.smallest_left_descent(u);
    if (group.is_left_descent(v, s)) v = group.left_multiply(s, v);
    u = group.left_multiply(s, u);
  }
}

bool BruhatCache::leq(const WeylGroup& group, const WeylElement& v0, const WeylElement& u0) {
  group.check(v0);
  group.check(u0);
  chain_.clear();
  WeylElement v = v0, u = u0;
  bool result;
  for (;;) {
    if (v.length() == 0) { result = true; break; }
    if (v.length() > u.length()) { result = false; break; }
    if (v.length() == u.length()) { result = v == u; break; }
    Key key{v, u};
    if (auto it = table_.find(key); it != table_.end()) {
      ++hits_;
      result = it->second;
      break;
    }
    chain_.push_back(key);
    const int s = group.smallest_left_descent(u);
    if (group.is_left_descent(v, s)) v = group.left_multiply(s, v);
    u = group.left_multiply(s, u);
  }
  for (const Key& k : chain_) {
    if (table_.size() >= max_entries_) break;
    table_.emplace(k, result);
  }
  return result;
}

namespace {

bool subword_search(const WeylGroup& group, const Word& u_word, std::size_t pos,
                    const WeylElement& prefix, const WeylElement& target, int remaining) {
  if (remaining == 0) return prefix == target;
  if (u_word.size() - pos < static_cast<std::size_t>(remaining)) return false;
  // take u_word[pos]
  const WeylElement next = group.right_multiply(prefix, u_word[pos]);
  if (next.length() == prefix.length() + 1 &&
      subword_search(group, u_word, pos + 1, next, target, remaining - 1))
    return true;
  // skip it
  return subword_search(group, u_word, pos + 1, prefix, target, remaining);
}

}  // namespace

bool subword_oracle(const WeylGroup& group, const Word& v_word, const Word& u_word) {
  const WeylElement u = group.from_word(u_word);
  if (static_cast<std::size_t>(u.length()) != u_word.size())
    throw Error(ErrorKind::NonReducedInput, "u word " + format_word(u_word) + " is not reduced");
  const WeylElement v = group.from_word(v_word);
  // Only reduced subwords of length l(v) can be reduced expressions of v.
  return subword_search(group, u_word, 0, group.identity(), v, v.length());
}

std::size_t LengthStrata::total() const {
  std::size_t n = 0;
  for (const auto& s : by_length) n += s.size();
  return n;
}

bool in_quotient(const WeylGroup& group, const WeylElement& w, NodeSet J) {
  for (int j : J.nodes())
    if (group.is_right_descent(w, j)) return false;
  return true;
}

void sort_canonically(const WeylGroup& group, std::vector<WeylElement>& elems) {
  std::vector<std::pair<Word, WeylElement>> keyed;
  keyed.reserve(elems.size());
  for (const auto& w : elems) keyed.emplace_back(group.canonical_word(w), w);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < elems.size(); ++i) elems[i] = keyed[i].second;
}

LengthStrata quotient_strata(const WeylGroup& group, NodeSet J, std::size_t budget) {
  LengthStrata out;
  out.J = J;
  out.by_length.push_back({group.identity()});
  std::size_t count = 1;
  for (;;) {
    const auto& level = out.by_length.back();
    std::unordered_set<WeylElement, WeylElementHash> next_set;
    std::vector<WeylElement> next;
    for (const auto& w : level) {
      for (int s = 1; s <= group.rank(); ++s) {
        // W^J is closed under removing left descents, so every element of the
        // next level is s*w for some w on this level.
        WeylElement t = group.left_multiply(s, w);
        if (t.length() != w.length() + 1 || !in_quotient(group, t, J)) continue;
        if (next_set.insert(t).second) {
          next.push_back(t);
          if (++count > budget)
            throw Error(ErrorKind::Infeasible,
                        "quotient of " + group.spec().name() + " exceeds element budget of " +
                            std::to_string(budget));
        }
      }
    }
    if (next.empty()) break;
    out.by_length.push_back(std::move(next));
  }
  for (auto& stratum : out.by_length) sort_canonically(group, stratum);
  return out;
}

std::vector<WeylElement> quotient_elements_of_length(const WeylGroup& group, NodeSet J, int l) {
  const LengthStrata strata = quotient_strata(group, J);
  if (l < 0 || l > strata.max_length())
    throw Error(ErrorKind::LengthOutOfRange,
                "length " + std::to_string(l) + " outside 0.." + std::to_string(strata.max_length()));
  return strata.at(l);
}

std::vector<WeylElement> elements_of_length(const WeylGroup& group, int l) {
  return quotient_elements_of_length(group, NodeSet::none(), l);
}

}  // namespace egd
