#include "egd/dynkin.hpp"

#include <charconv>

#include "egd/error.hpp"

namespace egd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::BadLetter: return "BadLetter";
    case ErrorKind::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorKind::NonReducedInput: return "NonReducedInput";
    case ErrorKind::NotClassical: return "NotClassical";
    case ErrorKind::NotTypeD: return "NotTypeD";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::EmptyMarkedSet: return "EmptyMarkedSet";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::ClosedFormUnavailable: return "ClosedFormUnavailable";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool rank_ok(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

// Simple edges (i, j, m) in 1-based Bourbaki numbering.
struct Edge {
  int i, j, m;
};

std::vector<Edge> edges(const DynkinSpec& s) {
  std::vector<Edge> out;
  const int n = s.rank;
  switch (s.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) out.push_back({i, i + 1, 3});
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i < n - 1; ++i) out.push_back({i, i + 1, 3});
      out.push_back({n - 1, n, 4});
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) out.push_back({i, i + 1, 3});
      out.push_back({n - 2, n, 3});
      break;
    case Family::E:
      out.push_back({1, 3, 3});
      out.push_back({2, 4, 3});
      for (int i = 3; i < n; ++i) out.push_back({i, i + 1, 3});
      break;
    case Family::F:
      out.push_back({1, 2, 3});
      out.push_back({2, 3, 4});
      out.push_back({3, 4, 3});
      break;
    case Family::G:
      out.push_back({1, 2, 6});
      break;
  }
  return out;
}

}  // namespace

DynkinSpec DynkinSpec::make(Family family, int rank) {
  if (!rank_ok(family, rank))
    throw Error(ErrorKind::InvalidRank, std::string("invalid rank ") + std::to_string(rank) +
                                            " for family " + static_cast<char>(family));
  return DynkinSpec{family, rank};
}

DynkinSpec DynkinSpec::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorKind::Parse, "bad diagram '" + std::string(text) + "'");
  const char c = text[0];
  if (std::string_view("ABCDEFG").find(c) == std::string_view::npos)
    throw Error(ErrorKind::Parse, "bad diagram family in '" + std::string(text) + "'");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::Parse, "bad diagram rank in '" + std::string(text) + "'");
  return make(static_cast<Family>(c), rank);
}

std::string DynkinSpec::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Matrix coxeter_matrix(const DynkinSpec& spec) {
  const int n = spec.rank;
  Matrix m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (const auto& e : edges(spec)) m[e.i - 1][e.j - 1] = m[e.j - 1][e.i - 1] = e.m;
  return m;
}

Matrix oriented_cartan_matrix(const DynkinSpec& spec) {
  const int n = spec.rank;
  Matrix k(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) k[i][i] = 2;
  for (const auto& e : edges(spec)) {
    const int a = e.i - 1, b = e.j - 1;
    k[a][b] = k[b][a] = -1;
    if (e.m == 3) continue;
    const int heavy = e.m == 4 ? -2 : -3;
    // <alpha_long, alpha_short^vee> carries the multiplicity.
    switch (spec.family) {
      case Family::B: k[a][b] = heavy; break;  // alpha_n short
      case Family::C: k[b][a] = heavy; break;  // alpha_n long
      case Family::F: k[a][b] = heavy; break;  // alpha_3, alpha_4 short
      case Family::G: k[b][a] = heavy; break;  // alpha_1 short
      default: break;
    }
  }
  return k;
}

Matrix cartan_matrix(const DynkinSpec& spec) {
  if (spec.family == Family::C) return oriented_cartan_matrix({Family::B, spec.rank});
  return oriented_cartan_matrix(spec);
}

}  // namespace egd
