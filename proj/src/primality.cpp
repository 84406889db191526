#include "primedfa/primality.hpp"

#include <limits>

#include "primedfa/kernels.hpp"

namespace primedfa {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

void check_pair(std::size_t i, std::size_t j, std::size_t upper) {
  if (i < 1 || i >= j || j > upper) {
    throw Error(ErrorCode::IndexOutOfRange,
                "pump indices need 1 <= i < j <= " + std::to_string(upper) + ", got i=" +
                    std::to_string(i) + " j=" + std::to_string(j));
  }
}

void require_max_visiting(const MlsAutomaton& a, std::string_view word) {
  if (!a.is_max_visiting(word)) {
    throw Error(ErrorCode::WordNotMaxVisiting,
                "\"" + std::string(word) + "\" is not a max-visiting word");
  }
}

// Smallest l in [0, l_prime] whose pumping is not rejected, simulated
// incrementally as x, then y repeated, then z.
std::optional<std::size_t> first_accepted_l(const MlsAutomaton& a, std::string_view word,
                                            std::size_t i, std::size_t j) {
  const Dfa& dfa = a.dfa();
  const std::string_view x = word.substr(0, i - 1);
  const std::string_view y = word.substr(i - 1, j - i);
  const std::string_view z = word.substr(j - 1);
  const std::size_t bound = l_prime(i, j, a.lin());
  StateId s = run_from(dfa, dfa.initial(), x);
  for (std::size_t l = 0; l <= bound; ++l) {
    if (run_from(dfa, s, z) != a.rejecting_sink()) return l;
    s = run_from(dfa, s, y);
  }
  return std::nullopt;
}

}  // namespace

namespace kernels {

bool word_breaks_pp(const MlsAutomaton& a, std::string_view word) {
  const std::size_t top = a.lin() + 1;
  for (std::size_t i = 1; i < top; ++i) {
    for (std::size_t j = i + 1; j <= top; ++j) {
      if (!first_accepted_l(a, word, i, j)) return false;
    }
  }
  return true;
}

}  // namespace kernels

MlsAutomaton::MlsAutomaton(Dfa dfa)
    : dfa_(std::move(dfa)), profile_(linear_profile(dfa_)), count_(1) {
  for (std::size_t i = 0; i < lin(); ++i) {
    count_ = saturating_mul(count_, profile_.to_state(i, i + 1).size());
  }
  count_ = saturating_mul(count_, profile_.to_rejecting_sink(lin()).size());
}

Word MlsAutomaton::max_visiting_word(std::uint64_t rank) const {
  if (rank >= count_) {
    throw Error(ErrorCode::IndexOutOfRange, "max-visiting word rank out of range");
  }
  const std::size_t n = lin();
  Word w(n + 1, '\0');
  // Mixed radix, least significant digit last.
  {
    const std::string& last = profile_.to_rejecting_sink(n);
    w[n] = last[rank % last.size()];
    rank /= last.size();
  }
  for (std::size_t pos = n; pos-- > 0;) {
    const std::string& digits = profile_.to_state(pos, pos + 1);
    w[pos] = digits[rank % digits.size()];
    rank /= digits.size();
  }
  return w;
}

bool MlsAutomaton::is_max_visiting(std::string_view word) const {
  const std::size_t n = lin();
  if (word.size() != n + 1) return false;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (profile_.to_state(pos, pos + 1).find(word[pos]) == std::string::npos) return false;
  }
  return profile_.to_rejecting_sink(n).find(word[n]) != std::string::npos;
}

MaxVisitingWords::MaxVisitingWords(std::shared_ptr<const MlsAutomaton> automaton)
    : automaton_(std::move(automaton)) {}

std::optional<Word> MaxVisitingWords::next() {
  if (rank_ >= automaton_->count_max_visiting_words()) return std::nullopt;
  return automaton_->max_visiting_word(rank_++);
}

MaxVisitingWords max_visiting_words(const Dfa& dfa) {
  return MaxVisitingWords(std::make_shared<const MlsAutomaton>(dfa));
}

Word Pumping::expand() const { return pump(word, i, j, l); }

Word pump(std::string_view word, std::size_t i, std::size_t j, std::size_t l) {
  check_pair(i, j, word.size() + 1);
  const std::string_view y = word.substr(i - 1, j - i);
  Word out(word.substr(0, i - 1));
  out.reserve(word.size() - y.size() + l * y.size());
  for (std::size_t r = 0; r < l; ++r) out.append(y);
  out.append(word.substr(j - 1));
  return out;
}

std::size_t l_prime(std::size_t i, std::size_t j, std::size_t lin) {
  check_pair(i, j, lin + 1);
  const std::size_t need = lin + 1 - (i - 1);
  const std::size_t step = j - i;
  return (need + step - 1) / step;
}

bool pp_condition_holds(const MlsAutomaton& a, std::string_view word, std::size_t i,
                        std::size_t j) {
  require_max_visiting(a, word);
  check_pair(i, j, a.lin() + 1);
  return !first_accepted_l(a, word, i, j).has_value();
}

bool pp_condition_holds(const Dfa& dfa, std::string_view word, std::size_t i, std::size_t j) {
  return pp_condition_holds(MlsAutomaton(dfa), word, i, j);
}

std::optional<PumpEvidence> breaks_pp(const MlsAutomaton& a, std::string_view word) {
  require_max_visiting(a, word);
  PumpEvidence evidence;
  const std::size_t top = a.lin() + 1;
  for (std::size_t i = 1; i < top; ++i) {
    for (std::size_t j = i + 1; j <= top; ++j) {
      auto l = first_accepted_l(a, word, i, j);
      if (!l) return std::nullopt;
      evidence.emplace(std::make_pair(i, j), *l);
    }
  }
  return evidence;
}

std::optional<PumpEvidence> breaks_pp(const Dfa& dfa, std::string_view word) {
  return breaks_pp(MlsAutomaton(dfa), word);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Prime: return "Prime";
    case Verdict::Composite: return "Composite";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

nlohmann::ordered_json to_json(const PrimalityVerdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(v.verdict);
  j["witness"] = v.witness ? nlohmann::ordered_json(*v.witness) : nlohmann::ordered_json(nullptr);
  if (v.evidence) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [pair, l] : *v.evidence) {
      arr.push_back({{"i", pair.first}, {"j", pair.second}, {"l", l}});
    }
    j["evidence"] = std::move(arr);
  } else {
    j["evidence"] = nullptr;
  }
  j["method"] = v.method;
  if (v.note) j["note"] = *v.note;
  return j;
}

PrimalityVerdict decide_primality_mls(const Dfa& dfa, const PrimalityOptions& options) {
  const MlsAutomaton a(minimize(dfa));
  PrimalityVerdict out;
  out.method = "mls";

  if (a.lin() == 0) {
    out.verdict = Verdict::Prime;
    out.witness = Word(1, a.profile().to_rejecting_sink(0).front());
    out.evidence = PumpEvidence{};
    out.note = "trivial (lin = 0)";
    return out;
  }

  const std::uint64_t total = a.count_max_visiting_words();
  const std::uint64_t limit = options.max_words ? std::min(total, *options.max_words) : total;
  const auto rank = options.jobs > 1 ? kernels::first_pp_breaking_parallel(a, limit, options.jobs)
                                     : kernels::first_pp_breaking_serial(a, limit);
  if (rank) {
    out.verdict = Verdict::Prime;
    out.witness = a.max_visiting_word(*rank);
    out.evidence = breaks_pp(a, *out.witness);
    if (!out.evidence) {
      throw Error(ErrorCode::InternalInconsistency, "kernel and evidence check disagree");
    }
  } else if (limit < total) {
    out.verdict = Verdict::Inconclusive;
    out.note = "examined " + std::to_string(limit) + " of " +
               (total == kSaturated ? std::string("more than 2^64") : std::to_string(total)) +
               " max-visiting words";
  } else {
    out.verdict = Verdict::Composite;
  }
  return out;
}

}  // namespace primedfa
