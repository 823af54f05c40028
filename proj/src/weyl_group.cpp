#include "egd/weyl_group.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstring>
#include <map>
#include <numeric>

#include "egd/error.hpp"

namespace egd {

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty() || text == "e" || text == "[]") return out;
  if (text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::Parse, "bad word '" + std::string(text) + "'");
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (int v : w) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::size_t WeylElement::hash() const {
  static_assert(kMaxPositiveRoots % 8 == 0);
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ context_;
  for (std::size_t k = 0; k < kMaxPositiveRoots; k += 8) {
    std::uint64_t word;
    std::memcpy(&word, image_.data() + k, 8);
    h ^= word + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

namespace {

std::atomic<std::uint32_t> next_context_id{1};

}  // namespace

WeylGroup::WeylGroup(DynkinSpec spec)
    : spec_(DynkinSpec::make(spec.family, spec.rank)),
      coxeter_(coxeter_matrix(spec_)),
      id_(next_context_id.fetch_add(1)) {
  const int n = spec_.rank;
  const Matrix k = cartan_matrix(spec_);

  // s_j(beta) = beta - <beta, alpha_j^vee> alpha_j
  auto reflect = [&](const std::vector<int>& beta, int j) {
    int pairing = 0;
    for (int i = 0; i < n; ++i) pairing += beta[i] * k[i][j];
    std::vector<int> out = beta;
    out[j] -= pairing;
    return out;
  };

  // Closure of the simple roots under simple reflections, positive part only.
  std::vector<std::vector<int>> found;
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, 0);
    found.push_back(e);
  }
  for (std::size_t q = 0; q < found.size(); ++q) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> r = reflect(found[q], j);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }) &&
          seen.emplace(r, 0).second)
        found.push_back(r);
    }
  }
  auto height = [](const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;  // alpha_1 before alpha_2 before ...
  });
  roots_ = std::move(found);
  num_pos_ = static_cast<int>(roots_.size());
  if (num_pos_ > kMaxPositiveRoots) throw Error(ErrorKind::Internal, "root system too large");

  std::map<std::vector<int>, int> index;
  for (int r = 0; r < num_pos_; ++r) {
    index.emplace(roots_[r], r);
    std::vector<int> neg = roots_[r];
    for (int& c : neg) c = -c;
    index.emplace(neg, r + num_pos_);
  }
  reflect_.assign(n, std::vector<std::uint8_t>(2 * num_pos_));
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < num_pos_; ++r) {
      const int img = index.at(reflect(roots_[r], j));
      reflect_[j][r] = static_cast<std::uint8_t>(img);
      reflect_[j][r + num_pos_] = static_cast<std::uint8_t>(negate(img));
    }
  }

  std::array<std::uint8_t, kMaxPositiveRoots> id{};
  for (int r = 0; r < num_pos_; ++r) id[r] = static_cast<std::uint8_t>(r);
  identity_ = make_element(id.data());

  // Grow w_0 by right-multiplying with the smallest ascent until none is left.
  WeylElement w = identity_;
  for (;;) {
    int ascent = 0;
    for (int i = 1; i <= n && ascent == 0; ++i)
      if (!is_right_descent(w, i)) ascent = i;
    if (ascent == 0) break;
    w = right_multiply(w, ascent);
  }
  longest_ = w;
}

WeylElement WeylGroup::make_element(const std::uint8_t* image) const {
  WeylElement w;
  w.context_ = id_;
  int len = 0;
  for (int r = 0; r < num_pos_; ++r) {
    w.image_[r] = image[r];
    len += image[r] >= num_pos_;
  }
  w.length_ = static_cast<std::uint16_t>(len);
  return w;
}

void WeylGroup::check(const WeylElement& x) const {
  if (x.context_ != id_)
    throw Error(ErrorKind::ContextMismatch, "element belongs to a different Weyl group");
}

WeylElement WeylGroup::generator(int i) const {
  if (i < 1 || i > rank())
    throw Error(ErrorKind::BadLetter, "generator index " + std::to_string(i) + " out of range");
  return make_element(reflect_[i - 1].data());
}

WeylElement WeylGroup::multiply(const WeylElement& x, const WeylElement& y) const {
  check(x);
  check(y);
  std::array<std::uint8_t, kMaxPositiveRoots> img;
  for (int r = 0; r < num_pos_; ++r) img[r] = static_cast<std::uint8_t>(apply(x, y.image_[r]));
  return make_element(img.data());
}

WeylElement WeylGroup::inverse(const WeylElement& x) const {
  check(x);
  std::array<std::uint8_t, kMaxPositiveRoots> img;
  for (int r = 0; r < num_pos_; ++r) {
    const int t = x.image_[r];
    // x(beta_r) = t  =>  x^{-1}(t) = beta_r, x^{-1}(-t) = -beta_r
    if (t < num_pos_)
      img[t] = static_cast<std::uint8_t>(r);
    else
      img[t - num_pos_] = static_cast<std::uint8_t>(r + num_pos_);
  }
  return make_element(img.data());
}

WeylElement WeylGroup::left_multiply(int i, const WeylElement& x) const {
  check(x);
  if (i < 1 || i > rank()) throw Error(ErrorKind::BadLetter, "bad generator");
  const auto& s = reflect_[i - 1];
  std::array<std::uint8_t, kMaxPositiveRoots> img;
  for (int r = 0; r < num_pos_; ++r) img[r] = s[x.image_[r]];
  return make_element(img.data());
}

WeylElement WeylGroup::right_multiply(const WeylElement& x, int i) const {
  check(x);
  if (i < 1 || i > rank()) throw Error(ErrorKind::BadLetter, "bad generator");
  const auto& s = reflect_[i - 1];
  std::array<std::uint8_t, kMaxPositiveRoots> img;
  for (int r = 0; r < num_pos_; ++r) img[r] = static_cast<std::uint8_t>(apply(x, s[r]));
  return make_element(img.data());
}

int WeylGroup::length(const WeylElement& x) const {
  check(x);
  return x.length();
}

// s_i is a left descent of x iff x^{-1}(alpha_i) < 0, i.e. iff some positive
// root is mapped onto -alpha_i.
bool WeylGroup::is_left_descent(const WeylElement& x, int i) const {
  const int target = (i - 1) + num_pos_;
  for (int r = 0; r < num_pos_; ++r)
    if (x.image_[r] == target) return true;
  return false;
}

NodeSet WeylGroup::descents(const WeylElement& x, Side side) const {
  check(x);
  std::uint32_t bits = 0;
  if (side == Side::Right) {
    for (int i = 1; i <= rank(); ++i)
      if (is_right_descent(x, i)) bits |= 1u << (i - 1);
  } else {
    for (int r = 0; r < num_pos_; ++r) {
      const int t = x.image_[r] - num_pos_;
      if (t >= 0 && t < rank()) bits |= 1u << t;
    }
  }
  return NodeSet(bits);
}

int WeylGroup::smallest_left_descent(const WeylElement& x) const {
  int best = 0;
  for (int r = 0; r < num_pos_; ++r) {
    const int t = x.image_[r] - num_pos_;
    if (t >= 0 && t < rank() && (best == 0 || t + 1 < best)) best = t + 1;
  }
  return best;
}

WeylElement WeylGroup::from_word(const Word& w) const {
  for (int letter : w)
    if (letter < 1 || letter > rank())
      throw Error(ErrorKind::BadLetter, "letter " + std::to_string(letter) +
                                            " out of range for " + spec_.name());
  WeylElement x = identity_;
  for (int letter : w) x = right_multiply(x, letter);
  return x;
}

Word WeylGroup::canonical_word(const WeylElement& x) const {
  check(x);
  Word out;
  out.reserve(x.length());
  WeylElement w = x;
  while (w.length() > 0) {
    const int s = smallest_left_descent(w);
    out.push_back(s);
    w = left_multiply(s, w);
  }
  return out;
}

int WeylGroup::element_order(const WeylElement& x) const {
  check(x);
  int order = 1;
  WeylElement p = x;
  while (p != identity_) {
    p = multiply(p, x);
    ++order;
  }
  return order;
}

int WeylGroup::coxeter_number() const {
  Word w(rank());
  std::iota(w.begin(), w.end(), 1);
  return element_order(from_word(w));
}

}  // namespace egd
