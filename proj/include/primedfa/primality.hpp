#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "primedfa/classify.hpp"
#include "primedfa/dfa.hpp"

namespace primedfa {

// A minimal linear safety ADFA+ together with its linear profile. Building one
// is the validation step every primality operation shares.
class MlsAutomaton {
 public:
  // Throws NotMlsAdfaPlus unless `dfa` itself (not its minimization) is a
  // minimal linear safety ADFA+.
  explicit MlsAutomaton(Dfa dfa);

  const Dfa& dfa() const noexcept { return dfa_; }
  const LinearProfile& profile() const noexcept { return profile_; }
  std::size_t lin() const noexcept { return profile_.lin(); }
  StateId rejecting_sink() const noexcept { return profile_.rejecting_sink(); }

  // |D(A)|, saturating at UINT64_MAX.
  std::uint64_t count_max_visiting_words() const noexcept { return count_; }
  // The rank-th max-visiting word in lexicographic (alphabet) order.
  Word max_visiting_word(std::uint64_t rank) const;
  bool is_max_visiting(std::string_view word) const;

 private:
  Dfa dfa_;
  LinearProfile profile_;
  std::uint64_t count_;
};

// Lazily enumerates D(A) in lexicographic order.
class MaxVisitingWords {
 public:
  explicit MaxVisitingWords(std::shared_ptr<const MlsAutomaton> automaton);

  std::optional<Word> next();

 private:
  std::shared_ptr<const MlsAutomaton> automaton_;
  std::uint64_t rank_ = 0;
};

MaxVisitingWords max_visiting_words(const Dfa& dfa);

// One pumping P[word; i,j; l] of the factorization x = w[1..i-1],
// y = w[i..j-1], z = w[j..n]. Indices are 1-based.
struct Pumping {
  Word word;
  std::size_t i = 1;
  std::size_t j = 2;
  std::size_t l = 0;

  Word expand() const;
};

// Requires 1 <= i < j <= |word| + 1.
Word pump(std::string_view word, std::size_t i, std::size_t j, std::size_t l);

// Smallest l with (i - 1) + l (j - i) >= lin + 1. Requires 1 <= i < j <= lin + 1.
std::size_t l_prime(std::size_t i, std::size_t j, std::size_t lin);

bool pp_condition_holds(const MlsAutomaton& a, std::string_view word, std::size_t i,
                        std::size_t j);
bool pp_condition_holds(const Dfa& dfa, std::string_view word, std::size_t i, std::size_t j);

// (i, j) -> smallest l whose pumping is accepted.
using PumpEvidence = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

// Evidence that `word` breaks the pumping property, or nothing if some pair
// satisfies the PP-condition.
std::optional<PumpEvidence> breaks_pp(const MlsAutomaton& a, std::string_view word);
std::optional<PumpEvidence> breaks_pp(const Dfa& dfa, std::string_view word);

enum class Verdict { Prime, Composite, Inconclusive };

std::string_view to_string(Verdict v);

struct PrimalityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  // Present iff Prime, except for the index-1 language Sigma*, which rejects
  // nothing.
  std::optional<Word> witness;
  std::optional<PumpEvidence> evidence;
  std::string method;
  std::optional<std::string> note;
};

nlohmann::ordered_json to_json(const PrimalityVerdict& v);

struct PrimalityOptions {
  // Upper bound on the number of max-visiting words examined.
  std::optional<std::uint64_t> max_words;
  // > 1 selects the OpenMP kernel.
  unsigned jobs = 1;
};

// Minimizes, then decides primality by exhaustive search of D(A) for a word
// breaking the pumping property. The witness is the lexicographically least
// such word.
PrimalityVerdict decide_primality_mls(const Dfa& dfa, const PrimalityOptions& options = {});

}  // namespace primedfa
