#include "egd/node_set.hpp"

#include <charconv>

#include "egd/error.hpp"

namespace egd {

NodeSet NodeSet::of(std::initializer_list<int> nodes) {
  return of(std::vector<int>(nodes));
}

NodeSet NodeSet::of(const std::vector<int>& nodes) {
  std::uint32_t bits = 0;
  for (int v : nodes) bits |= 1u << (v - 1);
  return NodeSet(bits);
}

NodeSet NodeSet::parse(std::string_view text, int rank) {
  if (text == "all") return all(rank);
  if (text == "none") return none();
  NodeSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, next - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::Parse, "bad node set '" + std::string(text) + "'");
    if (v < 1 || v > rank)
      throw Error(ErrorKind::Parse, "node " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(rank));
    out = out.with(v);
    pos = next + 1;
  }
  return out;
}

std::vector<int> NodeSet::nodes() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((bits_ >> i) & 1u) out.push_back(i + 1);
  return out;
}

std::string NodeSet::str() const {
  std::string out;
  for (int v : nodes()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace egd
