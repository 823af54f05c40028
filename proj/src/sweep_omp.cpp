#include <algorithm>
#include <atomic>
#include <utility>

#include "egd/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace egd {

namespace {

// Per-worker cache bound; beyond it the cache stops growing.
constexpr std::size_t kCacheEntriesPerWorker = 1u << 18;

}  // namespace

std::vector<Violation> sweep_parallel(const WeylGroup& group, const LengthStrata& strata,
                                      const SweepRequest& req, int workers) {
  const int dim = strata.max_length();
  std::vector<std::pair<int, int>> items;  // (len_v, v_index)
  for (int lv = req.skip_trivial ? 1 : 0; lv <= req.degree; ++lv) {
    const int cu = req.degree - lv;
    if (lv > dim || cu > dim) continue;
    if (req.halve && lv > cu) break;
    for (int a = 0; a < static_cast<int>(strata.at(lv).size()); ++a) items.emplace_back(lv, a);
  }
  const int n_items = static_cast<int>(items.size());
  if (workers < 1) workers = 1;

  std::vector<std::vector<Violation>> found(workers);
  std::atomic<bool> stop{false};

#pragma omp parallel num_threads(workers)
  {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    BruhatCache cache(kCacheEntriesPerWorker);
    auto& mine = found[tid];

#pragma omp for schedule(dynamic, 1)
    for (int k = 0; k < n_items; ++k) {
      if (stop.load(std::memory_order_relaxed)) continue;
      const auto [lv, a] = items[k];
      const int cu = req.degree - lv;
      const WeylElement& v = strata.at(lv)[a];
      const auto& us = strata.at(dim - cu);
      for (int b = 0; b < static_cast<int>(us.size()); ++b) {
        if (cache.leq(group, v, us[b])) continue;
        mine.push_back({lv, a, cu, b});
        if (req.stop_at_first) {
          stop.store(true, std::memory_order_relaxed);
          break;
        }
      }
    }
  }

  std::vector<Violation> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace egd
