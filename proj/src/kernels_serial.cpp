#include <limits>

#include "kernels_detail.hpp"
#include "primedfa/kernels.hpp"

namespace primedfa::kernels {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t e = 0; e < exp; ++e) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

}  // namespace

std::optional<std::uint64_t> first_pp_breaking_serial(const MlsAutomaton& a,
                                                      std::uint64_t limit) {
  for (std::uint64_t r = 0; r < limit; ++r) {
    if (word_breaks_pp(a, a.max_visiting_word(r))) return r;
  }
  return std::nullopt;
}

CandidateSpace::CandidateSpace(std::string alphabet, std::size_t num_states, Shape shape)
    : alphabet_(std::move(alphabet)), num_states_(num_states), shape_(shape), size_(0) {
  const std::size_t k = alphabet_.size();
  if (shape_ == Shape::General) {
    if (num_states_ >= 1) {
      const std::uint64_t acc = saturating_pow(2, num_states_);
      const std::uint64_t trans = saturating_pow(num_states_, num_states_ * k);
      size_ = (trans != 0 && acc > kSaturated / trans) ? kSaturated : acc * trans;
    }
  } else if (num_states_ >= 3) {
    size_ = saturating_pow(num_states_, (num_states_ - 2) * k);
  }
}

void CandidateSpace::decode(std::uint64_t rank, std::vector<StateId>& transitions,
                            std::vector<char>& accepting) const {
  const std::size_t n = num_states_;
  const std::size_t k = alphabet_.size();
  transitions.resize(n * k);
  accepting.resize(n);
  if (shape_ == Shape::General) {
    for (std::size_t s = 0; s < n; ++s) {
      accepting[s] = static_cast<char>(rank & 1U);
      rank >>= 1U;
    }
    for (std::size_t slot = 0; slot < n * k; ++slot) {
      transitions[slot] = static_cast<StateId>(rank % n);
      rank /= n;
    }
    return;
  }
  const std::size_t live = n - 2;
  for (std::size_t slot = 0; slot < live * k; ++slot) {
    transitions[slot] = static_cast<StateId>(rank % n);
    rank /= n;
  }
  for (std::size_t c = 0; c < k; ++c) {
    transitions[live * k + c] = static_cast<StateId>(live);
    transitions[(live + 1) * k + c] = static_cast<StateId>(live + 1);
  }
  for (std::size_t s = 0; s < n; ++s) accepting[s] = s != live + 1;
}

Dfa CandidateSpace::make(std::uint64_t rank) const {
  std::vector<StateId> trans;
  std::vector<char> acc;
  decode(rank, trans, acc);
  std::vector<StateId> accepting;
  for (std::size_t s = 0; s < acc.size(); ++s) {
    if (acc[s]) accepting.push_back(static_cast<StateId>(s));
  }
  return Dfa(alphabet_, num_states_, 0, std::move(accepting), std::move(trans));
}

std::vector<std::uint64_t> superset_candidates_serial(const CandidateSpace& space,
                                                      const Dfa& target) {
  std::vector<std::uint64_t> out;
  std::vector<StateId> trans;
  std::vector<char> acc;
  detail::InclusionScratch scratch;
  for (std::uint64_t r = 0; r < space.size(); ++r) {
    space.decode(r, trans, acc);
    if (detail::includes(target, trans, acc, space.num_states(), scratch)) out.push_back(r);
  }
  return out;
}

}  // namespace primedfa::kernels
