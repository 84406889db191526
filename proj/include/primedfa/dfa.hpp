#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "primedfa/error.hpp"

namespace primedfa {

using StateId = std::uint32_t;

// Symbols are single characters, so a word is just a string over the
// alphabet. Membership is checked where a word meets a DFA.
using Word = std::string;

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

// Complete deterministic finite automaton. The transition table is total and
// stored row-major: next(s, k) is the target of state s on alphabet[k].
class Dfa {
 public:
  Dfa(std::string alphabet, std::size_t num_states, StateId initial,
      std::vector<StateId> accepting, std::vector<StateId> transitions,
      std::vector<std::string> state_names = {});

  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::size_t num_states() const noexcept { return num_states_; }
  StateId initial() const noexcept { return initial_; }

  bool is_accepting(StateId s) const { return accepting_mask_[s] != 0; }
  // Ascending.
  const std::vector<StateId>& accepting() const noexcept { return accepting_; }

  StateId next(StateId s, std::size_t symbol_index) const {
    return transitions_[s * alphabet_.size() + symbol_index];
  }
  std::span<const StateId> row(StateId s) const {
    return {transitions_.data() + s * alphabet_.size(), alphabet_.size()};
  }
  const std::vector<StateId>& transitions() const noexcept { return transitions_; }

  std::optional<std::size_t> symbol_index(char symbol) const;

  bool is_sink(StateId s) const;

  // Empty when the automaton carries no display names.
  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  std::string display_name(StateId s) const;

  // Structural equality: same alphabet, tables, acceptance and initial state.
  // Names are ignored.
  bool same_table(const Dfa& other) const;

 private:
  std::string alphabet_;
  std::size_t num_states_;
  StateId initial_;
  std::vector<StateId> accepting_;
  std::vector<char> accepting_mask_;
  std::vector<StateId> transitions_;
  std::vector<std::string> state_names_;
};

// 1-state automaton accepting everything (accepting = true) or nothing.
Dfa make_universal(const std::string& alphabet, bool accepting);

StateId run_from(const Dfa& dfa, StateId start, std::string_view word);
StateId run(const Dfa& dfa, std::string_view word);
bool accepts(const Dfa& dfa, std::string_view word);

// Reachable part renumbered breadth-first from the initial state, symbols in
// alphabet order. No states are merged.
Dfa canonicalize(const Dfa& dfa);

// Canonical minimal automaton, numbered as in canonicalize().
Dfa minimize(const Dfa& dfa);

std::size_t index(const Dfa& dfa);

bool isomorphic(const Dfa& a, const Dfa& b);

void require_same_alphabet(const Dfa& a, const Dfa& b);

// Reachable product automaton for the intersection of all inputs.
Dfa product_intersection(std::span<const Dfa> dfas,
                         std::size_t state_budget = kDefaultStateBudget);
Dfa product_intersection(const Dfa& a, const Dfa& b,
                         std::size_t state_budget = kDefaultStateBudget);

// Shortlex-least word accepted by `a` and rejected by `b`, if any.
std::optional<Word> subset_counterexample(const Dfa& a, const Dfa& b);
bool language_subset(const Dfa& a, const Dfa& b);

// Shortlex-least word on which the two automata disagree, if any.
std::optional<Word> separating_word(const Dfa& a, const Dfa& b);
bool language_equal(const Dfa& a, const Dfa& b);

// JSON file format: alphabet, num_states, initial, accepting, transitions,
// optional state_names, in that key order.
nlohmann::ordered_json to_json(const Dfa& dfa);
Dfa dfa_from_json(const nlohmann::json& j);

// 2-space indented, newline terminated.
std::string serialize(const Dfa& dfa);
Dfa parse_dfa(std::string_view text);

}  // namespace primedfa
