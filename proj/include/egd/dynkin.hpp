#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace egd {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A connected Dynkin diagram, nodes numbered 1..rank in Bourbaki order.
struct DynkinSpec {
  Family family;
  int rank;

  static DynkinSpec make(Family family, int rank);  // validates rank bounds
  static DynkinSpec parse(std::string_view text);   // "D5", "F4", ...

  bool classical() const {
    return family == Family::A || family == Family::B || family == Family::C ||
           family == Family::D;
  }
  std::string name() const;

  auto operator<=>(const DynkinSpec&) const = default;
};

using Matrix = std::vector<std::vector<int>>;

// m(i,j) with 1 on the diagonal; indices are 0-based.
Matrix coxeter_matrix(const DynkinSpec& spec);

// K[i][j] = <alpha_i, alpha_j^vee>, 0-based. C_n reuses the B_n matrix: the two
// share a Coxeter matrix and therefore a Weyl group, root labelling included.
Matrix cartan_matrix(const DynkinSpec& spec);

// The same matrix with the genuine C_n orientation; used only where arrow
// direction matters (subdiagram embedding).
Matrix oriented_cartan_matrix(const DynkinSpec& spec);

}  // namespace egd
