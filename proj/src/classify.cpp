#include "primedfa/classify.hpp"

#include <algorithm>

namespace primedfa {

namespace {

// Kahn's algorithm over the non-sink states selected by `keep`. Returns the
// topological order, or nothing if the selected subgraph has a cycle.
std::optional<std::vector<StateId>> live_topological_order(const Dfa& dfa,
                                                           const std::vector<char>& keep) {
  const std::size_t n = dfa.num_states();
  std::vector<std::size_t> indegree(n, 0);
  std::size_t kept = 0;
  for (StateId s = 0; s < n; ++s) {
    if (!keep[s]) continue;
    ++kept;
    for (StateId t : dfa.row(s)) {
      if (keep[t]) ++indegree[t];
    }
  }
  std::vector<StateId> order;
  order.reserve(kept);
  for (StateId s = 0; s < n; ++s) {
    if (keep[s] && indegree[s] == 0) order.push_back(s);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (StateId t : dfa.row(order[head])) {
      if (keep[t] && --indegree[t] == 0) order.push_back(t);
    }
  }
  if (order.size() != kept) return std::nullopt;
  return order;
}

std::vector<char> reachable_from(const Dfa& dfa, StateId start) {
  std::vector<char> seen(dfa.num_states(), 0);
  std::vector<StateId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId t : dfa.row(s)) {
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

// Longest distance from the initial state through non-sinks, per state.
std::optional<std::vector<std::size_t>> live_depths(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  std::vector<char> keep = reachable_from(dfa, dfa.initial());
  for (StateId s = 0; s < n; ++s) {
    if (dfa.is_sink(s)) keep[s] = 0;
  }
  auto order = live_topological_order(dfa, keep);
  if (!order) return std::nullopt;
  std::vector<std::size_t> depth(n, 0);
  for (StateId s : *order) {
    for (StateId t : dfa.row(s)) {
      if (keep[t]) depth[t] = std::max(depth[t], depth[s] + 1);
    }
  }
  return depth;
}

bool is_linear_dfa(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  // reach[q][q'] : q' reachable from q by a non-empty path.
  std::vector<std::vector<char>> reach(n);
  for (StateId q = 0; q < n; ++q) {
    std::vector<char> seen(n, 0);
    std::vector<StateId> stack;
    for (StateId t : dfa.row(q)) {
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (StateId t : dfa.row(s)) {
        if (!seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
      }
    }
    reach[q] = std::move(seen);
  }
  std::vector<char> sink(n);
  for (StateId q = 0; q < n; ++q) sink[q] = dfa.is_sink(q);
  for (StateId q = 0; q < n; ++q) {
    for (StateId p = q + 1; p < n; ++p) {
      const bool forward = reach[q][p];
      const bool backward = reach[p][q];
      const bool apart = !forward && !backward && (sink[q] || sink[p]);
      if (int(forward) + int(backward) + int(apart) != 1) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::size_t> longest_live_path(const Dfa& dfa) {
  if (dfa.is_sink(dfa.initial())) return 0;
  auto depth = live_depths(dfa);
  if (!depth) return std::nullopt;
  return *std::max_element(depth->begin(), depth->end());
}

ClassReport classify(const Dfa& dfa) {
  ClassReport r;
  const Dfa minimal = minimize(dfa);
  r.is_minimal = minimal.num_states() == dfa.num_states();

  {
    std::size_t rejecting = 0;
    bool rejecting_is_sink = true;
    for (StateId s = 0; s < minimal.num_states(); ++s) {
      if (!minimal.is_accepting(s)) {
        ++rejecting;
        rejecting_is_sink = minimal.is_sink(s);
      }
    }
    r.is_safety = rejecting == 0 || (rejecting == 1 && rejecting_is_sink);
  }

  std::vector<char> non_sink(dfa.num_states(), 0);
  for (StateId s = 0; s < dfa.num_states(); ++s) {
    if (dfa.is_sink(s)) {
      if (dfa.is_accepting(s) && !r.accepting_sink) r.accepting_sink = s;
      if (!dfa.is_accepting(s) && !r.rejecting_sink) r.rejecting_sink = s;
    } else {
      non_sink[s] = 1;
    }
  }
  r.is_adfa_plus = r.accepting_sink && r.rejecting_sink &&
                   live_topological_order(dfa, non_sink).has_value();
  r.is_linear = is_linear_dfa(dfa);
  if (r.is_adfa_plus && r.is_minimal) r.lin = longest_live_path(dfa);
  r.is_mls_adfa_plus = r.is_minimal && r.is_safety && r.is_adfa_plus && r.is_linear;
  return r;
}

nlohmann::ordered_json to_json(const ClassReport& r) {
  nlohmann::ordered_json j;
  j["is_minimal"] = r.is_minimal;
  j["is_safety"] = r.is_safety;
  j["is_adfa_plus"] = r.is_adfa_plus;
  j["is_linear"] = r.is_linear;
  j["is_mls_adfa_plus"] = r.is_mls_adfa_plus;
  j["lin"] = r.lin ? nlohmann::ordered_json(*r.lin) : nlohmann::ordered_json(nullptr);
  j["accepting_sink"] =
      r.accepting_sink ? nlohmann::ordered_json(*r.accepting_sink) : nlohmann::ordered_json(nullptr);
  j["rejecting_sink"] =
      r.rejecting_sink ? nlohmann::ordered_json(*r.rejecting_sink) : nlohmann::ordered_json(nullptr);
  return j;
}

LinearProfile::LinearProfile(std::vector<StateId> order, StateId accepting_sink,
                             StateId rejecting_sink, std::vector<std::vector<std::string>> sigma)
    : order_(std::move(order)),
      accepting_sink_(accepting_sink),
      rejecting_sink_(rejecting_sink),
      sigma_(std::move(sigma)) {}

LinearProfile linear_profile(const Dfa& dfa) {
  const ClassReport report = classify(dfa);
  if (!report.is_mls_adfa_plus) {
    throw Error(ErrorCode::NotMlsAdfaPlus, "not a minimal linear safety ADFA+");
  }
  auto depth = live_depths(dfa);
  const std::size_t lin = *report.lin;

  std::vector<StateId> order;
  for (StateId s = 0; s < dfa.num_states(); ++s) {
    if (!dfa.is_sink(s)) order.push_back(s);
  }
  std::sort(order.begin(), order.end(),
            [&](StateId a, StateId b) { return (*depth)[a] < (*depth)[b]; });
  if (order.size() != lin + 1) {
    throw Error(ErrorCode::InternalInconsistency, "non-sink count differs from lin + 1");
  }

  std::vector<std::size_t> position(dfa.num_states(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if ((*depth)[order[i]] != i) {
      throw Error(ErrorCode::InternalInconsistency, "non-sinks are not totally ordered");
    }
    position[order[i]] = i;
  }
  const StateId plus = *report.accepting_sink;
  const StateId minus = *report.rejecting_sink;

  std::vector<std::vector<std::string>> sigma(lin + 1, std::vector<std::string>(lin + 3));
  for (std::size_t i = 0; i <= lin; ++i) {
    for (std::size_t c = 0; c < dfa.alphabet_size(); ++c) {
      StateId t = dfa.next(order[i], c);
      std::size_t slot = t == plus ? lin + 1 : t == minus ? lin + 2 : position[t];
      sigma[i][slot].push_back(dfa.alphabet()[c]);
    }
  }
  for (std::size_t i = 1; i <= lin; ++i) {
    if (sigma[i - 1][i].empty()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "no symbol leads from q_" + std::to_string(i - 1) + " to q_" + std::to_string(i));
    }
  }
  if (sigma[lin][lin + 2].empty()) {
    throw Error(ErrorCode::InternalInconsistency, "last non-sink cannot reach the rejecting sink");
  }
  return LinearProfile(std::move(order), plus, minus, std::move(sigma));
}

nlohmann::ordered_json to_json(const LinearProfile& p, const Dfa& dfa) {
  nlohmann::ordered_json j;
  auto order = nlohmann::ordered_json::array();
  for (StateId s : p.order()) order.push_back(s);
  j["order"] = std::move(order);
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i <= p.lin(); ++i) {
    nlohmann::ordered_json row;
    row["state"] = p.order()[i];
    row["name"] = dfa.display_name(p.order()[i]);
    nlohmann::ordered_json targets;
    for (std::size_t t = 0; t <= p.lin(); ++t) {
      if (!p.to_state(i, t).empty()) targets[std::to_string(t)] = p.to_state(i, t);
    }
    if (!p.to_accepting_sink(i).empty()) targets["+"] = p.to_accepting_sink(i);
    if (!p.to_rejecting_sink(i).empty()) targets["-"] = p.to_rejecting_sink(i);
    row["sigma"] = std::move(targets);
    rows.push_back(std::move(row));
  }
  j["positions"] = std::move(rows);
  return j;
}

}  // namespace primedfa
