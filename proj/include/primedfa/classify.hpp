#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "primedfa/dfa.hpp"

namespace primedfa {

struct ClassReport {
  bool is_minimal = false;
  // Decided on the minimized automaton.
  bool is_safety = false;
  // Accepting sink, rejecting sink, and no cycles besides the sinks' loops.
  bool is_adfa_plus = false;
  bool is_linear = false;
  bool is_mls_adfa_plus = false;
  // Longest word on which no sink is entered; set for minimal ADFA+s.
  std::optional<std::size_t> lin;
  std::optional<StateId> accepting_sink;
  std::optional<StateId> rejecting_sink;
};

ClassReport classify(const Dfa& dfa);

nlohmann::ordered_json to_json(const ClassReport& report);

// Longest path, in transitions, from the initial state through non-sink
// states. Empty if the non-sink part reachable from the initial state has a
// cycle.
std::optional<std::size_t> longest_live_path(const Dfa& dfa);

// Shape of a minimal linear safety ADFA+: non-sinks q_0..q_n in their unique
// reachability order plus the two sinks.
class LinearProfile {
 public:
  LinearProfile(std::vector<StateId> order, StateId accepting_sink, StateId rejecting_sink,
                std::vector<std::vector<std::string>> sigma);

  // order()[i] is the state id of q_i.
  const std::vector<StateId>& order() const noexcept { return order_; }
  std::size_t lin() const noexcept { return order_.size() - 1; }
  StateId accepting_sink() const noexcept { return accepting_sink_; }
  StateId rejecting_sink() const noexcept { return rejecting_sink_; }

  // Symbols leading from q_i to q_target, in alphabet order.
  const std::string& to_state(std::size_t i, std::size_t target) const {
    return sigma_[i][target];
  }
  const std::string& to_accepting_sink(std::size_t i) const { return sigma_[i][lin() + 1]; }
  const std::string& to_rejecting_sink(std::size_t i) const { return sigma_[i][lin() + 2]; }

 private:
  std::vector<StateId> order_;
  StateId accepting_sink_;
  StateId rejecting_sink_;
  // sigma_[i] has lin+3 entries: targets q_0..q_lin, then +, then -.
  std::vector<std::vector<std::string>> sigma_;
};

// Requires classify(dfa).is_mls_adfa_plus; throws NotMlsAdfaPlus otherwise.
LinearProfile linear_profile(const Dfa& dfa);

nlohmann::ordered_json to_json(const LinearProfile& profile, const Dfa& dfa);

}  // namespace primedfa
