#include "primedfa/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace primedfa {

namespace {

constexpr StateId kUnseen = static_cast<StateId>(-1);

struct VectorHash {
  std::size_t operator()(const std::vector<StateId>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (StateId x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// Breadth-first search over pairs of states. Returns the shortlex-least word
// leading to a pair that satisfies `target`.
template <typename Target>
std::optional<Word> pair_search(const Dfa& a, const Dfa& b, Target target) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet_size();
  struct Parent {
    std::uint64_t from;
    std::uint32_t symbol;
  };
  auto key = [&](StateId x, StateId y) {
    return static_cast<std::uint64_t>(x) * b.num_states() + y;
  };
  std::unordered_map<std::uint64_t, Parent> parent;
  std::deque<std::pair<StateId, StateId>> queue;

  const auto start = key(a.initial(), b.initial());
  parent.emplace(start, Parent{start, 0});
  queue.emplace_back(a.initial(), b.initial());

  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (target(x, y)) {
      Word w;
      for (auto cur = key(x, y); cur != start;) {
        const Parent& p = parent.at(cur);
        w.push_back(a.alphabet()[p.symbol]);
        cur = p.from;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    const auto from = key(x, y);
    for (std::size_t s = 0; s < k; ++s) {
      StateId nx = a.next(x, s);
      StateId ny = b.next(y, s);
      if (parent.emplace(key(nx, ny), Parent{from, static_cast<std::uint32_t>(s)}).second) {
        queue.emplace_back(nx, ny);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Dfa::Dfa(std::string alphabet, std::size_t num_states, StateId initial,
         std::vector<StateId> accepting, std::vector<StateId> transitions,
         std::vector<std::string> state_names)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)),
      state_names_(std::move(state_names)) {
  if (alphabet_.empty()) {
    throw Error(ErrorCode::InvalidDfa, "alphabet must not be empty");
  }
  {
    std::string sorted = alphabet_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::InvalidDfa, "alphabet symbols must be distinct");
    }
  }
  if (num_states_ == 0) {
    throw Error(ErrorCode::InvalidDfa, "a DFA needs at least one state");
  }
  if (num_states_ >= kUnseen) {
    throw Error(ErrorCode::InvalidDfa, "too many states");
  }
  if (initial_ >= num_states_) {
    throw Error(ErrorCode::InvalidDfa, "initial state out of range");
  }
  if (transitions_.size() != num_states_ * alphabet_.size()) {
    throw Error(ErrorCode::InvalidDfa, "transition table is not total");
  }
  for (StateId t : transitions_) {
    if (t >= num_states_) {
      throw Error(ErrorCode::InvalidDfa, "transition target out of range");
    }
  }
  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
  accepting_mask_.assign(num_states_, 0);
  for (StateId s : accepting_) {
    if (s >= num_states_) {
      throw Error(ErrorCode::InvalidDfa, "accepting state out of range");
    }
    accepting_mask_[s] = 1;
  }
  if (!state_names_.empty() && state_names_.size() != num_states_) {
    throw Error(ErrorCode::InvalidDfa, "state_names must name every state");
  }
}

std::optional<std::size_t> Dfa::symbol_index(char symbol) const {
  auto pos = alphabet_.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

bool Dfa::is_sink(StateId s) const {
  for (StateId t : row(s)) {
    if (t != s) return false;
  }
  return true;
}

std::string Dfa::display_name(StateId s) const {
  if (!state_names_.empty()) return state_names_[s];
  return std::to_string(s);
}

bool Dfa::same_table(const Dfa& other) const {
  return alphabet_ == other.alphabet_ && num_states_ == other.num_states_ &&
         initial_ == other.initial_ && accepting_ == other.accepting_ &&
         transitions_ == other.transitions_;
}

Dfa make_universal(const std::string& alphabet, bool accepting) {
  std::vector<StateId> acc;
  if (accepting) acc.push_back(0);
  return Dfa(alphabet, 1, 0, std::move(acc), std::vector<StateId>(alphabet.size(), 0));
}

StateId run_from(const Dfa& dfa, StateId start, std::string_view word) {
  StateId s = start;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    auto k = dfa.symbol_index(word[pos]);
    if (!k) {
      throw Error(ErrorCode::UnknownSymbol,
                  std::string("symbol '") + word[pos] + "' is not in the alphabet", pos);
    }
    s = dfa.next(s, *k);
  }
  return s;
}

StateId run(const Dfa& dfa, std::string_view word) {
  return run_from(dfa, dfa.initial(), word);
}

bool accepts(const Dfa& dfa, std::string_view word) {
  return dfa.is_accepting(run(dfa, word));
}

Dfa canonicalize(const Dfa& dfa) {
  const std::size_t k = dfa.alphabet_size();
  std::vector<StateId> new_id(dfa.num_states(), kUnseen);
  std::vector<StateId> order;
  order.reserve(dfa.num_states());
  new_id[dfa.initial()] = 0;
  order.push_back(dfa.initial());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (StateId t : dfa.row(order[head])) {
      if (new_id[t] == kUnseen) {
        new_id[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<StateId> trans(order.size() * k);
  std::vector<StateId> acc;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < order.size(); ++i) {
    StateId old = order[i];
    for (std::size_t s = 0; s < k; ++s) trans[i * k + s] = new_id[dfa.next(old, s)];
    if (dfa.is_accepting(old)) acc.push_back(static_cast<StateId>(i));
    if (!dfa.state_names().empty()) names.push_back(dfa.state_names()[old]);
  }
  return Dfa(dfa.alphabet(), order.size(), 0, std::move(acc), std::move(trans),
             std::move(names));
}

Dfa minimize(const Dfa& input) {
  // Moore partition refinement on the reachable part. States are visited in
  // breadth-first order, so the lowest member of each block is the first one
  // discovered and lends the block its name.
  const Dfa dfa = canonicalize(input);
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.alphabet_size();

  std::vector<StateId> block(n);
  std::size_t num_blocks = 0;
  {
    std::map<bool, StateId> first;
    for (StateId s = 0; s < n; ++s) {
      auto [it, fresh] = first.emplace(dfa.is_accepting(s), static_cast<StateId>(first.size()));
      block[s] = it->second;
    }
    num_blocks = first.size();
  }

  std::vector<StateId> signature(k + 1);
  while (true) {
    std::unordered_map<std::vector<StateId>, StateId, VectorHash> ids;
    ids.reserve(n * 2);
    std::vector<StateId> refined(n);
    for (StateId s = 0; s < n; ++s) {
      signature[0] = block[s];
      for (std::size_t c = 0; c < k; ++c) signature[c + 1] = block[dfa.next(s, c)];
      auto [it, fresh] = ids.emplace(signature, static_cast<StateId>(ids.size()));
      refined[s] = it->second;
    }
    block = std::move(refined);
    if (ids.size() == num_blocks) break;
    num_blocks = ids.size();
  }

  std::vector<StateId> rep(num_blocks, kUnseen);
  for (StateId s = 0; s < n; ++s) {
    if (rep[block[s]] == kUnseen) rep[block[s]] = s;
  }
  std::vector<StateId> trans(num_blocks * k);
  std::vector<StateId> acc;
  std::vector<std::string> names;
  for (StateId b = 0; b < num_blocks; ++b) {
    for (std::size_t c = 0; c < k; ++c) trans[b * k + c] = block[dfa.next(rep[b], c)];
    if (dfa.is_accepting(rep[b])) acc.push_back(b);
    if (!dfa.state_names().empty()) names.push_back(dfa.state_names()[rep[b]]);
  }
  Dfa quotient(dfa.alphabet(), num_blocks, block[dfa.initial()], std::move(acc),
               std::move(trans), std::move(names));
  return canonicalize(quotient);
}

std::size_t index(const Dfa& dfa) { return minimize(dfa).num_states(); }

bool isomorphic(const Dfa& a, const Dfa& b) {
  return canonicalize(a).same_table(canonicalize(b));
}

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch,
                "alphabets differ: \"" + a.alphabet() + "\" vs \"" + b.alphabet() + "\"");
  }
}

Dfa product_intersection(std::span<const Dfa> dfas, std::size_t state_budget) {
  if (dfas.empty()) {
    throw Error(ErrorCode::IndexOutOfRange, "product of an empty list");
  }
  for (const Dfa& d : dfas) require_same_alphabet(dfas.front(), d);
  const std::size_t k = dfas.front().alphabet_size();
  const std::size_t m = dfas.size();

  std::unordered_map<std::vector<StateId>, StateId, VectorHash> ids;
  std::vector<std::vector<StateId>> tuples;
  std::vector<StateId> trans;
  std::vector<StateId> acc;

  auto intern = [&](std::vector<StateId> t) {
    auto [it, fresh] = ids.emplace(t, static_cast<StateId>(tuples.size()));
    if (fresh) {
      if (tuples.size() >= state_budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "product exceeds the state budget of " + std::to_string(state_budget));
      }
      tuples.push_back(std::move(t));
    }
    return it->second;
  };

  std::vector<StateId> start(m);
  for (std::size_t i = 0; i < m; ++i) start[i] = dfas[i].initial();
  intern(start);

  std::vector<StateId> succ(m);
  for (std::size_t head = 0; head < tuples.size(); ++head) {
    bool all_accept = true;
    for (std::size_t i = 0; i < m; ++i) {
      all_accept = all_accept && dfas[i].is_accepting(tuples[head][i]);
    }
    if (all_accept) acc.push_back(static_cast<StateId>(head));
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t i = 0; i < m; ++i) succ[i] = dfas[i].next(tuples[head][i], c);
      trans.push_back(intern(succ));
    }
  }
  return Dfa(dfas.front().alphabet(), tuples.size(), 0, std::move(acc), std::move(trans));
}

Dfa product_intersection(const Dfa& a, const Dfa& b, std::size_t state_budget) {
  const Dfa pair[] = {a, b};
  return product_intersection(std::span<const Dfa>(pair), state_budget);
}

std::optional<Word> subset_counterexample(const Dfa& a, const Dfa& b) {
  return pair_search(a, b, [&](StateId x, StateId y) {
    return a.is_accepting(x) && !b.is_accepting(y);
  });
}

bool language_subset(const Dfa& a, const Dfa& b) {
  return !subset_counterexample(a, b).has_value();
}

std::optional<Word> separating_word(const Dfa& a, const Dfa& b) {
  return pair_search(a, b, [&](StateId x, StateId y) {
    return a.is_accepting(x) != b.is_accepting(y);
  });
}

bool language_equal(const Dfa& a, const Dfa& b) { return !separating_word(a, b).has_value(); }

nlohmann::ordered_json to_json(const Dfa& dfa) {
  nlohmann::ordered_json j;
  auto alphabet = nlohmann::ordered_json::array();
  for (char c : dfa.alphabet()) alphabet.push_back(std::string(1, c));
  j["alphabet"] = std::move(alphabet);
  j["num_states"] = dfa.num_states();
  j["initial"] = dfa.initial();
  j["accepting"] = dfa.accepting();
  auto rows = nlohmann::ordered_json::array();
  for (StateId s = 0; s < dfa.num_states(); ++s) {
    auto r = dfa.row(s);
    rows.push_back(std::vector<StateId>(r.begin(), r.end()));
  }
  j["transitions"] = std::move(rows);
  if (!dfa.state_names().empty()) j["state_names"] = dfa.state_names();
  return j;
}

Dfa dfa_from_json(const nlohmann::json& j) {
  auto malformed = [](const std::string& what) {
    return Error(ErrorCode::MalformedInput, "DFA JSON: " + what);
  };
  if (!j.is_object()) throw malformed("expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "alphabet" && key != "num_states" && key != "initial" && key != "accepting" &&
        key != "transitions" && key != "state_names") {
      throw malformed("unexpected field '" + key + "'");
    }
  }
  for (const char* key : {"alphabet", "num_states", "initial", "accepting", "transitions"}) {
    if (!j.contains(key)) throw malformed(std::string("missing field '") + key + "'");
  }

  std::string alphabet;
  if (!j["alphabet"].is_array()) throw malformed("'alphabet' must be an array");
  for (const auto& sym : j["alphabet"]) {
    if (!sym.is_string() || sym.get_ref<const std::string&>().size() != 1) {
      throw malformed("alphabet entries must be 1-character strings");
    }
    alphabet.push_back(sym.get_ref<const std::string&>()[0]);
  }

  auto as_count = [&](const nlohmann::json& v, const char* what) -> std::uint64_t {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw malformed(std::string("'") + what + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
  };

  const auto n = as_count(j["num_states"], "num_states");
  if (n >= kUnseen) throw malformed("'num_states' too large");
  const auto initial = as_count(j["initial"], "initial");

  std::vector<StateId> accepting;
  if (!j["accepting"].is_array()) throw malformed("'accepting' must be an array");
  for (const auto& s : j["accepting"]) {
    auto v = as_count(s, "accepting");
    if (v >= n) throw Error(ErrorCode::InvalidDfa, "accepting state out of range");
    accepting.push_back(static_cast<StateId>(v));
  }

  const auto& rows = j["transitions"];
  if (!rows.is_array() || rows.size() != n) {
    throw malformed("'transitions' must have num_states rows");
  }
  std::vector<StateId> trans;
  trans.reserve(n * alphabet.size());
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != alphabet.size()) {
      throw malformed("every transition row needs one entry per symbol");
    }
    for (const auto& t : r) {
      auto v = as_count(t, "transitions");
      if (v >= n) throw Error(ErrorCode::InvalidDfa, "transition target out of range");
      trans.push_back(static_cast<StateId>(v));
    }
  }

  std::vector<std::string> names;
  if (j.contains("state_names")) {
    const auto& ns = j["state_names"];
    if (!ns.is_array()) throw malformed("'state_names' must be an array");
    for (const auto& s : ns) {
      if (!s.is_string()) throw malformed("state names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  if (initial >= n) throw Error(ErrorCode::InvalidDfa, "initial state out of range");
  return Dfa(std::move(alphabet), n, static_cast<StateId>(initial), std::move(accepting),
             std::move(trans), std::move(names));
}

std::string serialize(const Dfa& dfa) { return to_json(dfa).dump(2) + "\n"; }

Dfa parse_dfa(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return dfa_from_json(j);
}

}  // namespace primedfa
