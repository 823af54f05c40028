#include "egd/sweep.hpp"

namespace egd {

// Reference kernel: plain loops and the uncached Bruhat recursion.
std::vector<Violation> sweep_serial(const WeylGroup& group, const LengthStrata& strata,
                                    const SweepRequest& req) {
  std::vector<Violation> out;
  const int dim = strata.max_length();
  for (int lv = req.skip_trivial ? 1 : 0; lv <= req.degree; ++lv) {
    const int cu = req.degree - lv;
    if (lv > dim || cu > dim) continue;
    if (req.halve && lv > cu) break;
    const auto& vs = strata.at(lv);
    const auto& us = strata.at(dim - cu);
    for (int a = 0; a < static_cast<int>(vs.size()); ++a) {
      for (int b = 0; b < static_cast<int>(us.size()); ++b) {
        if (bruhat_leq(group, vs[a], us[b])) continue;
        out.push_back({lv, a, cu, b});
        if (req.stop_at_first) return out;
      }
    }
  }
  return out;
}

}  // namespace egd
