#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "primedfa/dfa.hpp"
#include "primedfa/primality.hpp"

namespace primedfa {

enum class OracleMode { General, SafetyRestricted };

struct OracleConfig {
  OracleMode mode = OracleMode::SafetyRestricted;
  // Largest candidate size; index(A) - 1 when absent. Must stay below index(A).
  std::optional<std::size_t> size_bound;
  // Upper bound on the number of candidate DFAs enumerated.
  std::uint64_t candidate_budget = 4'000'000;
  // Longest word the safety-mode witness search may need (lin + 1).
  std::size_t word_length_bound = 64;
  unsigned jobs = 1;
  std::size_t state_budget = kDefaultStateBudget;
};

// The enumerated DFAs B with L(dfa) subset of L(B), in enumeration order
// (by size, then rank). Empty for index-1 inputs.
std::vector<Dfa> qualifying_candidates(const Dfa& dfa, const OracleConfig& config = {});

// Compositionality by exhaustive search over small DFAs. Methods
// "brute-general" and "brute-safety". Index-1 inputs are reported Prime.
PrimalityVerdict brute_force_composite(const Dfa& dfa, const OracleConfig& config = {});

struct GenConfig {
  std::size_t lin = 1;
  std::size_t alphabet_size = 2;
  std::uint64_t seed = 0;
  std::size_t max_retries = 1000;
};

// A random minimal linear safety ADFA+ with the given lin over the alphabet
// "ab...". States q0..q_lin, then q+ and q-. Deterministic per seed.
Dfa generate_mls(const GenConfig& config);

}  // namespace primedfa
