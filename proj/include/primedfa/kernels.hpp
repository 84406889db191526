#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version with the same contract; the tests hold them equal and
// bench/ compares their speed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primedfa/dfa.hpp"
#include "primedfa/primality.hpp"

namespace primedfa::kernels {

// True iff every pair (i, j) has some l <= l_prime(i, j, lin) whose pumping of
// `word` is accepted. Assumes `word` is max-visiting.
bool word_breaks_pp(const MlsAutomaton& a, std::string_view word);

// Smallest rank r < limit whose max-visiting word breaks the pumping property.
std::optional<std::uint64_t> first_pp_breaking_serial(const MlsAutomaton& a, std::uint64_t limit);
std::optional<std::uint64_t> first_pp_breaking_parallel(const MlsAutomaton& a,
                                                        std::uint64_t limit, unsigned jobs);

// A family of small complete DFAs indexed by rank.
//
// General: `num_states` states, initial 0, any accepting set, any transitions.
// Safety:  non-sinks 0..num_states-3 (accepting, initial 0, any transitions),
//          then an accepting sink and a rejecting sink.
class CandidateSpace {
 public:
  enum class Shape { General, Safety };

  CandidateSpace(std::string alphabet, std::size_t num_states, Shape shape);

  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  Shape shape() const noexcept { return shape_; }
  // Saturates at UINT64_MAX.
  std::uint64_t size() const noexcept { return size_; }

  void decode(std::uint64_t rank, std::vector<StateId>& transitions,
              std::vector<char>& accepting) const;
  Dfa make(std::uint64_t rank) const;

 private:
  std::string alphabet_;
  std::size_t num_states_;
  Shape shape_;
  std::uint64_t size_;
};

// Ranks of the candidates B with L(target) subset of L(B), ascending.
std::vector<std::uint64_t> superset_candidates_serial(const CandidateSpace& space,
                                                      const Dfa& target);
std::vector<std::uint64_t> superset_candidates_parallel(const CandidateSpace& space,
                                                        const Dfa& target, unsigned jobs);

}  // namespace primedfa::kernels
