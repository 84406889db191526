#include "primedfa/oracle.hpp"

#include <random>

#include "primedfa/classify.hpp"
#include "primedfa/kernels.hpp"

namespace primedfa {

namespace {

using kernels::CandidateSpace;

std::size_t resolve_size_bound(const OracleConfig& config, std::size_t idx) {
  const std::size_t bound = config.size_bound.value_or(idx - 1);
  if (bound < 1) throw Error(ErrorCode::IndexOutOfRange, "size bound must be at least 1");
  if (bound >= idx) {
    throw Error(ErrorCode::IndexOutOfRange, "size bound " + std::to_string(bound) +
                                                " is not below the index " + std::to_string(idx));
  }
  return bound;
}

// Safety-mode candidates all have exactly `bound` states: a smaller safety DFA
// embeds by leaving the extra non-sinks unreachable.
std::vector<CandidateSpace> candidate_spaces(const Dfa& minimal, const OracleConfig& config,
                                             std::size_t bound) {
  std::vector<CandidateSpace> spaces;
  if (config.mode == OracleMode::General) {
    for (std::size_t n = 1; n <= bound; ++n) {
      spaces.emplace_back(minimal.alphabet(), n, CandidateSpace::Shape::General);
    }
  } else if (bound >= 3) {
    spaces.emplace_back(minimal.alphabet(), bound, CandidateSpace::Shape::Safety);
  }
  std::uint64_t total = 0;
  for (const auto& s : spaces) {
    if (s.size() > config.candidate_budget - total) {
      throw Error(ErrorCode::BudgetExceeded,
                  "candidate space exceeds the budget of " +
                      std::to_string(config.candidate_budget));
    }
    total += s.size();
  }
  return spaces;
}

void require_safety_licence(const Dfa& minimal) {
  const ClassReport report = classify(minimal);
  if (!report.is_safety || !report.accepting_sink) {
    throw Error(ErrorCode::ModeUnsound,
                "safety-restricted search needs a safety DFA with an accepting sink");
  }
}

std::vector<Dfa> collect(const Dfa& minimal, const OracleConfig& config, std::size_t bound) {
  std::vector<Dfa> out;
  for (const auto& space : candidate_spaces(minimal, config, bound)) {
    const auto ranks = config.jobs > 1
                           ? kernels::superset_candidates_parallel(space, minimal, config.jobs)
                           : kernels::superset_candidates_serial(space, minimal);
    for (std::uint64_t r : ranks) out.push_back(space.make(r));
  }
  return out;
}

std::optional<Word> fold_witness(const Dfa& minimal, const std::vector<Dfa>& candidates,
                                 std::size_t state_budget) {
  Dfa acc = make_universal(minimal.alphabet(), true);
  for (const Dfa& b : candidates) {
    if (language_subset(acc, b)) continue;
    acc = minimize(product_intersection(acc, b, state_budget));
  }
  return separating_word(acc, minimal);
}

// Shortlex-least word of length <= lin + 1 rejected by `minimal` and accepted
// by every candidate. Every DFA involved is safety, so only words whose proper
// prefixes are accepted by all of them need extending.
std::optional<Word> bounded_witness(const Dfa& minimal, const std::vector<Dfa>& candidates,
                                    std::size_t lin, StateId accepting_sink) {
  struct Node {
    Word word;
    StateId state;
    std::vector<StateId> cand;
  };
  std::vector<Node> frontier;
  {
    Node root{Word(), minimal.initial(), {}};
    for (const Dfa& b : candidates) root.cand.push_back(b.initial());
    frontier.push_back(std::move(root));
  }
  const std::size_t k = minimal.alphabet_size();
  for (std::size_t len = 1; len <= lin + 1 && !frontier.empty(); ++len) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (std::size_t c = 0; c < k; ++c) {
        Node child{node.word + minimal.alphabet()[c], minimal.next(node.state, c), {}};
        child.cand.reserve(candidates.size());
        bool all_accept = true;
        for (std::size_t b = 0; b < candidates.size() && all_accept; ++b) {
          child.cand.push_back(candidates[b].next(node.cand[b], c));
          all_accept = candidates[b].is_accepting(child.cand.back());
        }
        if (!all_accept) continue;
        if (!minimal.is_accepting(child.state)) return child.word;
        if (child.state != accepting_sink) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::vector<Dfa> qualifying_candidates(const Dfa& dfa, const OracleConfig& config) {
  const Dfa minimal = minimize(dfa);
  if (minimal.num_states() == 1) return {};
  if (config.mode == OracleMode::SafetyRestricted) require_safety_licence(minimal);
  return collect(minimal, config, resolve_size_bound(config, minimal.num_states()));
}

PrimalityVerdict brute_force_composite(const Dfa& dfa, const OracleConfig& config) {
  const Dfa minimal = minimize(dfa);
  PrimalityVerdict out;
  out.method = config.mode == OracleMode::General ? "brute-general" : "brute-safety";

  if (minimal.num_states() == 1) {
    out.verdict = Verdict::Prime;
    if (minimal.accepting().empty()) out.witness = Word();
    out.note = "index 1: no smaller DFA exists";
    return out;
  }

  std::optional<std::size_t> lin;
  StateId accepting_sink = 0;
  if (config.mode == OracleMode::SafetyRestricted) {
    require_safety_licence(minimal);
    const ClassReport report = classify(minimal);
    if (report.is_adfa_plus) {
      lin = report.lin;
      accepting_sink = *report.accepting_sink;
      if (*lin + 1 > config.word_length_bound) {
        throw Error(ErrorCode::BudgetExceeded,
                    "witness search needs words of length " + std::to_string(*lin + 1));
      }
    }
  }

  const std::vector<Dfa> candidates =
      collect(minimal, config, resolve_size_bound(config, minimal.num_states()));
  out.witness = lin ? bounded_witness(minimal, candidates, *lin, accepting_sink)
                    : fold_witness(minimal, candidates, config.state_budget);
  out.verdict = out.witness ? Verdict::Prime : Verdict::Composite;
  return out;
}

Dfa generate_mls(const GenConfig& config) {
  if (config.lin < 1) throw Error(ErrorCode::IndexOutOfRange, "generator needs lin >= 1");
  if (config.alphabet_size < 2 || config.alphabet_size > 26) {
    throw Error(ErrorCode::IndexOutOfRange, "generator alphabet size must lie in 2..26");
  }
  const std::size_t lin = config.lin;
  const std::size_t k = config.alphabet_size;
  const std::size_t n = lin + 3;
  const auto plus = static_cast<StateId>(lin + 1);
  const auto minus = static_cast<StateId>(lin + 2);
  std::string alphabet;
  for (std::size_t c = 0; c < k; ++c) alphabet.push_back(static_cast<char>('a' + c));
  std::vector<std::string> names;
  for (std::size_t q = 0; q <= lin; ++q) names.push_back("q" + std::to_string(q));
  names.push_back("q+");
  names.push_back("q-");
  std::vector<StateId> acc;
  for (StateId q = 0; q <= plus; ++q) acc.push_back(q);

  // Plain modulo keeps the stream identical across standard libraries.
  std::mt19937_64 rng(config.seed);
  auto pick = [&](std::uint64_t bound) { return rng() % bound; };

  for (std::size_t attempt = 0; attempt <= config.max_retries; ++attempt) {
    std::vector<StateId> trans(n * k);
    for (std::size_t q = 0; q <= lin; ++q) {
      // Targets: later non-sinks q+1..lin, then q+, then q-.
      const std::size_t choices = lin - q + 2;
      for (std::size_t c = 0; c < k; ++c) {
        trans[q * k + c] = static_cast<StateId>(q + 1 + pick(choices));
      }
      trans[q * k + pick(k)] = q < lin ? static_cast<StateId>(q + 1) : minus;
    }
    for (std::size_t c = 0; c < k; ++c) {
      trans[plus * k + c] = plus;
      trans[minus * k + c] = minus;
    }
    Dfa candidate(alphabet, n, 0, acc, std::move(trans), names);
    if (minimize(candidate).num_states() == n) return candidate;
  }
  throw Error(ErrorCode::RetriesExhausted,
              "no minimal instance after " + std::to_string(config.max_retries + 1) + " attempts");
}

}  // namespace primedfa
