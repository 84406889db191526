#pragma once

#include <vector>

#include "primedfa/dfa.hpp"

namespace primedfa::kernels::detail {

// Scratch for repeated inclusion checks against small candidate tables.
struct InclusionScratch {
  std::vector<char> seen;
  std::vector<std::uint32_t> stack;
};

// L(target) subset of L(candidate), where the candidate is given as a raw
// table with initial state 0.
inline bool includes(const Dfa& target, const std::vector<StateId>& transitions,
                     const std::vector<char>& accepting, std::size_t candidate_states,
                     InclusionScratch& scratch) {
  const std::size_t k = target.alphabet_size();
  const std::size_t nb = candidate_states;
  scratch.seen.assign(target.num_states() * nb, 0);
  scratch.stack.clear();
  const std::uint32_t start = target.initial() * nb;
  scratch.seen[start] = 1;
  scratch.stack.push_back(start);
  while (!scratch.stack.empty()) {
    const std::uint32_t key = scratch.stack.back();
    scratch.stack.pop_back();
    const StateId x = key / nb;
    const StateId y = key % nb;
    if (target.is_accepting(x) && !accepting[y]) return false;
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint32_t next = target.next(x, c) * nb + transitions[y * k + c];
      if (!scratch.seen[next]) {
        scratch.seen[next] = 1;
        scratch.stack.push_back(next);
      }
    }
  }
  return true;
}

}  // namespace primedfa::kernels::detail
