#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "primedfa/dfa.hpp"
#include "primedfa/primality.hpp"

namespace primedfa {

struct CnfFormula {
  std::size_t num_vars = 0;
  // Signed 1-based variable indices; duplicates are kept.
  std::vector<std::vector<int>> clauses;
};

// DIMACS CNF. Errors carry the 1-based line number as their position.
CnfFormula parse_dimacs(std::string_view text);

struct Element {
  enum class Kind { Bot, Pos, Neg };
  Kind kind = Kind::Bot;

  // The bit that makes this element true: 1 for x_i, 0 for not x_i.
  char satisfying_bit() const { return kind == Kind::Pos ? '1' : '0'; }
  bool operator==(const Element&) const = default;
};

// One row per clause, one column per variable: grid[k][i] is Bot or a literal
// of variable i + 1.
struct NormalizedCnf {
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<std::vector<Element>> grid;
  std::size_t kappa = 0;
};

// Every clause was a tautology.
struct TriviallySat {};

std::variant<NormalizedCnf, TriviallySat> normalize(const CnfFormula& f);

// State ids of the CNF-DFA, numbered along its max-visiting run with the
// accepting and rejecting sinks last. Rows and columns are 1-based.
class CnfDfaLayout {
 public:
  CnfDfaLayout(std::size_t r, std::size_t s) : r_(r), s_(s) {}

  std::size_t r() const noexcept { return r_; }
  std::size_t s() const noexcept { return s_; }
  std::size_t num_states() const noexcept { return r_ + 2 + s_ * (2 * r_ + 1) + 2; }

  StateId p(std::size_t i) const { return static_cast<StateId>(i); }
  StateId p_c(std::size_t k) const {
    return k == 0 ? static_cast<StateId>(r_ + 1) : row_base(k) + static_cast<StateId>(2 * r_);
  }
  StateId p_row(std::size_t i, std::size_t k) const {
    return row_base(k) + static_cast<StateId>(2 * (i - 1));
  }
  // p_hat(r, 0) is p_r.
  StateId p_hat(std::size_t i, std::size_t k) const {
    return k == 0 ? p(r_) : p_row(i, k) + 1;
  }
  StateId plus() const { return static_cast<StateId>(num_states() - 2); }
  StateId minus() const { return static_cast<StateId>(num_states() - 1); }

 private:
  StateId row_base(std::size_t k) const {
    return static_cast<StateId>(r_ + 2 + (k - 1) * (2 * r_ + 1));
  }

  std::size_t r_;
  std::size_t s_;
};

inline constexpr const char* kCnfAlphabet = "01cd";

Dfa build_cnf_dfa(const NormalizedCnf& n);

struct Assignment {
  // bits[i] is the value of x_{i+1}, as '0' or '1'.
  std::string bits;
};

struct RowCheck {
  bool automaton = false;
  bool semantic = false;
  StateId landed = 0;
};

// Runs u through clause row k (1-based) from p_hat(r, k-1) and compares the
// landing state with the clause's truth under u.
RowCheck clause_row_check(const Dfa& dfa, const NormalizedCnf& n, const Assignment& u,
                          std::size_t k);

bool eval_formula(const CnfFormula& f, const Assignment& a);

std::optional<Assignment> solve_sat_via_primality(const CnfFormula& f,
                                                  const PrimalityOptions& options = {});

}  // namespace primedfa
