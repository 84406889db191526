#include "primedfa/decompose.hpp"

#include <algorithm>

namespace primedfa {

namespace {

Dfa skip_state(const MlsAutomaton& a, std::size_t i) {
  if (i < 1 || i > a.lin()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "skip index must lie in 1.." + std::to_string(a.lin()));
  }
  const Dfa& dfa = a.dfa();
  const StateId removed = a.profile().order()[i];
  const StateId plus = a.profile().accepting_sink();
  auto renumber = [&](StateId s) { return s > removed ? s - 1 : s; };

  const std::size_t k = dfa.alphabet_size();
  std::vector<StateId> trans;
  trans.reserve((dfa.num_states() - 1) * k);
  std::vector<StateId> acc;
  std::vector<std::string> names;
  for (StateId s = 0; s < dfa.num_states(); ++s) {
    if (s == removed) continue;
    for (StateId t : dfa.row(s)) trans.push_back(renumber(t == removed ? plus : t));
    if (dfa.is_accepting(s)) acc.push_back(renumber(s));
    if (!dfa.state_names().empty()) names.push_back(dfa.state_names()[s]);
  }
  return Dfa(dfa.alphabet(), dfa.num_states() - 1, renumber(dfa.initial()), std::move(acc),
             std::move(trans), std::move(names));
}

}  // namespace

Dfa build_a_i_plus(const Dfa& dfa, std::size_t i) { return skip_state(MlsAutomaton(dfa), i); }

PumpIndices choose_pump_indices(const MlsAutomaton& a, std::string_view word) {
  if (!a.is_max_visiting(word)) {
    throw Error(ErrorCode::WordNotMaxVisiting,
                "\"" + std::string(word) + "\" is not a max-visiting word");
  }
  const std::size_t top = a.lin() + 1;
  for (std::size_t i = top - 1; i >= 1; --i) {
    for (std::size_t j = i + 1; j <= top; ++j) {
      if (!pp_condition_holds(a, word, i, j)) continue;
      if (word[i - 1] == word[j - 1]) {
        throw Error(ErrorCode::InternalInconsistency,
                    "maximal pump position has equal symbols at i and j");
      }
      return PumpIndices{i, j, Word(word)};
    }
  }
  throw Error(ErrorCode::NoPumpablePair,
              "\"" + std::string(word) + "\" breaks the pumping property");
}

PumpIndices choose_pump_indices(const Dfa& dfa, std::string_view word) {
  return choose_pump_indices(MlsAutomaton(dfa), word);
}

Dfa build_a_w_i_j(std::string_view word, std::size_t i, std::size_t j,
                  const std::string& alphabet) {
  if (word.size() < 2) {
    throw Error(ErrorCode::IndexOutOfRange, "pump gadget needs a word of length >= 2");
  }
  std::vector<std::size_t> sym(word.size());
  for (std::size_t p = 0; p < word.size(); ++p) {
    auto pos = alphabet.find(word[p]);
    if (pos == std::string::npos) {
      throw Error(ErrorCode::UnknownSymbol,
                  std::string("symbol '") + word[p] + "' is not in the alphabet", p);
    }
    sym[p] = pos;
  }
  if (std::all_of(word.begin(), word.end(), [&](char c) { return c == word.front(); })) {
    throw Error(ErrorCode::UnaryPowerWord, "pump gadget word is a power of one symbol");
  }
  const std::size_t m = word.size() - 1;
  if (i < 1 || i >= j || j > m + 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "pump gadget indices need 1 <= i < j <= " + std::to_string(m + 1));
  }
  if (word[i - 1] == word[j - 1]) {
    throw Error(ErrorCode::EqualPumpSymbols, "pump gadget needs distinct symbols at i and j");
  }

  // States q_0..q_m without q_{j-1}, then q_+ and q_-.
  std::vector<StateId> id(m + 1, 0);
  std::vector<std::size_t> kept;
  for (std::size_t q = 0; q <= m; ++q) {
    if (q == j - 1) continue;
    id[q] = static_cast<StateId>(kept.size());
    kept.push_back(q);
  }
  const auto plus = static_cast<StateId>(kept.size());
  const auto minus = plus + 1;
  // q_{m+1} stands for the rejecting sink.
  auto state = [&](std::size_t q) { return q == m + 1 ? minus : id[q]; };
  // Symbols are 1-based in the construction.
  auto sigma = [&](std::size_t p) { return sym[p - 1]; };

  const std::size_t k = alphabet.size();
  std::vector<StateId> trans((kept.size() + 2) * k, plus);
  for (std::size_t q : kept) {
    StateId* row = &trans[id[q] * k];
    if (q == m) {
      row[sigma(m + 1)] = minus;
      continue;
    }
    const bool at_start = q == i - 1;
    const bool at_back_edge = q + 2 == j;
    if (!at_start && !at_back_edge) {
      row[sigma(q + 1)] = state(q + 1);
      continue;
    }
    if (at_start) {
      row[sigma(i)] = state(i);
      row[sigma(j)] = state(j);
    }
    // When j = i + 1 both rules apply; the back edge wins on sigma_i, which
    // turns it into a self-loop.
    if (at_back_edge) row[sigma(j - 1)] = state(i - 1);
  }
  for (std::size_t c = 0; c < k; ++c) {
    trans[plus * k + c] = plus;
    trans[minus * k + c] = minus;
  }

  std::vector<StateId> acc;
  std::vector<std::string> names;
  for (std::size_t q : kept) {
    acc.push_back(id[q]);
    names.push_back("q" + std::to_string(q));
  }
  acc.push_back(plus);
  names.push_back("q+");
  names.push_back("q-");
  return Dfa(alphabet, kept.size() + 2, id[0], std::move(acc), std::move(trans),
             std::move(names));
}

VerificationReport verify_decomposition(const Dfa& source, const std::vector<Dfa>& parts,
                                        std::size_t state_budget) {
  for (const Dfa& p : parts) require_same_alphabet(source, p);
  VerificationReport report;
  const std::size_t source_index = index(source);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (index(parts[p]) >= source_index) report.oversized_parts.push_back(p);
  }
  Dfa acc = make_universal(source.alphabet(), true);
  for (const Dfa& p : parts) {
    if (language_subset(acc, p)) continue;
    acc = minimize(product_intersection(acc, p, state_budget));
  }
  report.separating_word = separating_word(acc, source);
  report.ok = report.oversized_parts.empty() && !report.separating_word;
  return report;
}

Decomposition decompose_mls(const Dfa& dfa, const DecomposeOptions& options) {
  const Dfa minimal = minimize(dfa);
  const PrimalityVerdict verdict = decide_primality_mls(minimal, options.primality);
  if (verdict.verdict == Verdict::Prime) {
    throw Error(ErrorCode::IsPrime, "the automaton is prime; witness \"" +
                                        verdict.witness.value_or("") + "\"");
  }
  if (verdict.verdict == Verdict::Inconclusive) {
    throw Error(ErrorCode::Inconclusive, "word budget exhausted before a verdict");
  }

  const MlsAutomaton a(minimal);
  Decomposition out;
  for (std::size_t i = 1; i <= a.lin(); ++i) {
    out.parts.push_back(skip_state(a, i));
    out.provenance.emplace_back(SkipState{i});
  }
  for (std::uint64_t r = 0; r < a.count_max_visiting_words(); ++r) {
    const Word w = a.max_visiting_word(r);
    const PumpIndices pi = choose_pump_indices(a, w);
    out.parts.push_back(build_a_w_i_j(w, pi.i, pi.j, minimal.alphabet()));
    out.provenance.emplace_back(PumpGadget{w, pi.i, pi.j});
  }
  if (options.verify) {
    out.verified = verify_decomposition(minimal, out.parts, options.state_budget).ok;
  }
  return out;
}

Dfa safetyfy(const Dfa& dfa) {
  const Dfa m = minimize(dfa);
  if (!m.is_accepting(m.initial())) return make_universal(m.alphabet(), false);

  const std::size_t k = m.alphabet_size();
  std::vector<StateId> id(m.num_states(), 0);
  StateId next_id = 0;
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (m.is_accepting(s)) id[s] = next_id++;
  }
  const StateId sink = next_id;
  std::vector<StateId> trans;
  std::vector<StateId> acc;
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (!m.is_accepting(s)) continue;
    acc.push_back(id[s]);
    for (StateId t : m.row(s)) trans.push_back(m.is_accepting(t) ? id[t] : sink);
  }
  for (std::size_t c = 0; c < k; ++c) trans.push_back(sink);
  return minimize(Dfa(m.alphabet(), sink + 1, id[m.initial()], std::move(acc), std::move(trans)));
}

nlohmann::ordered_json to_json(const PartProvenance& p) {
  nlohmann::ordered_json j;
  if (const auto* s = std::get_if<SkipState>(&p)) {
    j["kind"] = "skip_state";
    j["i"] = s->i;
  } else {
    const auto& g = std::get<PumpGadget>(p);
    j["kind"] = "pump_gadget";
    j["word"] = g.word;
    j["i"] = g.i;
    j["j"] = g.j;
  }
  return j;
}

}  // namespace primedfa
