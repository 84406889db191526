#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "primedfa/dfa.hpp"
#include "primedfa/primality.hpp"

namespace primedfa {

// A_i^+: q_i removed, transitions into it redirected to the accepting sink.
struct SkipState {
  std::size_t i = 0;
};

// A_{w,i,j}: rejects exactly the extensions of the pumpings P[w; i,j; l].
struct PumpGadget {
  Word word;
  std::size_t i = 0;
  std::size_t j = 0;
};

using PartProvenance = std::variant<SkipState, PumpGadget>;

struct Decomposition {
  std::vector<Dfa> parts;
  std::vector<PartProvenance> provenance;
  bool verified = false;
};

struct PumpIndices {
  std::size_t i = 0;
  std::size_t j = 0;
  Word word;
};

// Requires an MLS ADFA+ and 1 <= i <= lin. `i` counts positions in the
// linear order, not state ids.
Dfa build_a_i_plus(const Dfa& dfa, std::size_t i);

// Largest i admitting a j with the PP-condition, then the smallest such j.
PumpIndices choose_pump_indices(const Dfa& dfa, std::string_view word);
PumpIndices choose_pump_indices(const MlsAutomaton& a, std::string_view word);

Dfa build_a_w_i_j(std::string_view word, std::size_t i, std::size_t j,
                  const std::string& alphabet);

struct VerificationReport {
  bool ok = false;
  // Positions in the parts list whose index is not below the source's.
  std::vector<std::size_t> oversized_parts;
  // Shortlex-least word on which the intersection and the source disagree.
  std::optional<Word> separating_word;
};

// Every part strictly smaller than the source (by index) and the parts'
// intersection language-equal to it.
VerificationReport verify_decomposition(const Dfa& source, const std::vector<Dfa>& parts,
                                        std::size_t state_budget = kDefaultStateBudget);

struct DecomposeOptions {
  PrimalityOptions primality;
  bool verify = true;
  std::size_t state_budget = kDefaultStateBudget;
};

// Decomposition of a composite MLS ADFA+ into lin skip-state parts followed by
// one pump gadget per max-visiting word, in lexicographic word order.
Decomposition decompose_mls(const Dfa& dfa, const DecomposeOptions& options = {});

// Largest safety language contained in L(dfa), as a minimal DFA.
Dfa safetyfy(const Dfa& dfa);

nlohmann::ordered_json to_json(const PartProvenance& p);

}  // namespace primedfa
