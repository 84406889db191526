#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

#include "kernels_detail.hpp"
#include "primedfa/kernels.hpp"

namespace primedfa::kernels {

std::optional<std::uint64_t> first_pp_breaking_parallel(const MlsAutomaton& a,
                                                        std::uint64_t limit, unsigned jobs) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  const auto n = static_cast<std::int64_t>(limit);

#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
  for (std::int64_t r = 0; r < n; ++r) {
    const auto rank = static_cast<std::uint64_t>(r);
    // Words past the best hit cannot change the answer.
    if (rank >= best.load(std::memory_order_relaxed)) continue;
    if (word_breaks_pp(a, a.max_visiting_word(rank))) {
      std::uint64_t cur = best.load();
      while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

std::vector<std::uint64_t> superset_candidates_parallel(const CandidateSpace& space,
                                                        const Dfa& target, unsigned jobs) {
  std::vector<std::uint64_t> out;
  const auto n = static_cast<std::int64_t>(space.size());

#pragma omp parallel num_threads(jobs)
  {
    std::vector<std::uint64_t> local;
    std::vector<StateId> trans;
    std::vector<char> acc;
    detail::InclusionScratch scratch;
#pragma omp for schedule(static) nowait
    for (std::int64_t r = 0; r < n; ++r) {
      space.decode(static_cast<std::uint64_t>(r), trans, acc);
      if (detail::includes(target, trans, acc, space.num_states(), scratch)) {
        local.push_back(static_cast<std::uint64_t>(r));
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace primedfa::kernels
