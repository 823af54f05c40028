#pragma once

#include <vector>

#include "egd/bruhat.hpp"
#include "egd/weyl_group.hpp"

namespace egd {

// A pair (u, v) in W^J with l(v) + c^J(u) = degree and v not <= u. Indices
// point into the canonically sorted strata.
struct Violation {
  int len_v;
  int v_index;
  int codim_u;
  int u_index;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct SweepRequest {
  int degree = 0;
  // Only pairs with l(v) <= c^J(u); valid for J = {} by w -> w_0 w duality.
  bool halve = false;
  // Skip pairs with l(v) = 0 (always comparable).
  bool skip_trivial = true;
  // Return as soon as one violation is known (result then has size <= 1
  // from the serial kernel; the parallel kernel may report a few).
  bool stop_at_first = false;
};

// Violations in sorted order (len_v, v_index, u_index).
std::vector<Violation> sweep_serial(const WeylGroup& group, const LengthStrata& strata,
                                    const SweepRequest& req);

// OpenMP kernel over (v-length, v) work items with per-worker Bruhat caches.
// With stop_at_first unset, the output is identical to sweep_serial.
std::vector<Violation> sweep_parallel(const WeylGroup& group, const LengthStrata& strata,
                                      const SweepRequest& req, int workers);

}  // namespace egd
