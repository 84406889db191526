#include "primedfa/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "primedfa/classify.hpp"

namespace primedfa {

namespace {

bool parse_long(std::string_view tok, long& out) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::optional<std::size_t> declared_clauses;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream toks(line);
    std::string tok;
    if (!(toks >> tok) || tok == "c" || tok[0] == 'c') continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string kind, vars, clauses, extra;
      long v = 0;
      long c = 0;
      if (declared_clauses || !(toks >> kind >> vars >> clauses) || (toks >> extra) ||
          kind != "cnf" || !parse_long(vars, v) || !parse_long(clauses, c) || v < 0 || c < 0) {
        throw Error(ErrorCode::MalformedHeader, "expected a single 'p cnf <vars> <clauses>'",
                    line_no);
      }
      f.num_vars = static_cast<std::size_t>(v);
      declared_clauses = static_cast<std::size_t>(c);
      continue;
    }
    if (!declared_clauses) {
      throw Error(ErrorCode::MalformedHeader, "clause data before the 'p cnf' header", line_no);
    }
    do {
      long lit = 0;
      if (!parse_long(tok, lit)) {
        throw Error(ErrorCode::MalformedInput, "'" + tok + "' is not a literal", line_no);
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(lit)) > f.num_vars) {
        throw Error(ErrorCode::LiteralOutOfRange,
                    "literal " + tok + " exceeds " + std::to_string(f.num_vars) + " variables",
                    line_no);
      }
      current.push_back(static_cast<int>(lit));
      last_line = line_no;
    } while (toks >> tok);
  }
  if (!declared_clauses) throw Error(ErrorCode::MalformedHeader, "missing 'p cnf' header");
  if (!current.empty()) {
    throw Error(ErrorCode::MalformedInput, "last clause is not terminated by 0", last_line);
  }
  if (f.clauses.size() != *declared_clauses) {
    throw Error(ErrorCode::ClauseCountMismatch,
                "header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                    std::to_string(f.clauses.size()));
  }
  return f;
}

std::variant<NormalizedCnf, TriviallySat> normalize(const CnfFormula& f) {
  if (f.num_vars == 0) throw Error(ErrorCode::NoVariables, "formula has no variables");
  NormalizedCnf n;
  n.r = f.num_vars;
  for (const auto& clause : f.clauses) {
    std::vector<Element> row(n.r);
    bool tautology = false;
    for (int lit : clause) {
      const std::size_t i = static_cast<std::size_t>(std::abs(lit)) - 1;
      if (i >= n.r) {
        throw Error(ErrorCode::LiteralOutOfRange, "literal " + std::to_string(lit) + " out of range");
      }
      const auto kind = lit > 0 ? Element::Kind::Pos : Element::Kind::Neg;
      if (row[i].kind != Element::Kind::Bot && row[i].kind != kind) tautology = true;
      row[i].kind = kind;
    }
    if (!tautology) n.grid.push_back(std::move(row));
  }
  if (n.grid.empty()) return TriviallySat{};
  n.s = n.grid.size();
  n.kappa = n.s * (2 * n.r + 1) + 1;
  return n;
}

Dfa build_cnf_dfa(const NormalizedCnf& n) {
  const CnfDfaLayout L(n.r, n.s);
  const std::size_t r = n.r;
  const std::size_t s = n.s;
  constexpr std::size_t k0 = 0, k1 = 1, kc = 2, kd = 3;
  std::vector<StateId> trans(L.num_states() * 4, L.minus());
  std::vector<std::string> names(L.num_states());

  auto set = [&](StateId from, std::size_t sym, StateId to) { trans[from * 4 + sym] = to; };
  // Entry into column i of row k on the bits: the hat state on the element's
  // satisfying bit, the plain state otherwise.
  auto branch = [&](StateId from, std::size_t i, std::size_t k) {
    const Element e = n.grid[k - 1][i - 1];
    for (std::size_t bit : {k0, k1}) {
      const bool hit = e.kind != Element::Kind::Bot && e.satisfying_bit() == char('0' + bit);
      set(from, bit, hit ? L.p_hat(i, k) : L.p_row(i, k));
    }
  };

  for (std::size_t i = 0; i <= r; ++i) {
    const StateId p = L.p(i);
    names[p] = "p_" + std::to_string(i);
    if (i < r) {
      set(p, k0, L.p(i + 1));
      set(p, k1, L.p(i + 1));
    } else {
      branch(p, 1, 1);
    }
    set(p, kc, L.plus());
    set(p, kd, i == 0 ? L.minus() : i < r ? L.plus() : L.p_c(0));
  }

  for (std::size_t k = 1; k <= s; ++k) {
    for (std::size_t i = 1; i <= r; ++i) {
      const std::string suffix = std::to_string(i) + "^" + std::to_string(k);
      const StateId p = L.p_row(i, k);
      const StateId h = L.p_hat(i, k);
      names[p] = "p_" + suffix;
      names[h] = "phat_" + suffix;

      if (i < r) branch(p, i + 1, k);  // else 0/1 reject
      set(p, kc, h);

      if (i < r) {
        set(h, k0, L.p_hat(i + 1, k));
        set(h, k1, L.p_hat(i + 1, k));
        set(h, kc, L.p_row(i + 1, k));
      } else {
        if (k < s) {
          branch(h, 1, k + 1);
        } else {
          set(h, k0, L.plus());
          set(h, k1, L.plus());
        }
        set(h, kc, L.p_c(k));
      }
    }
  }

  for (std::size_t k = 0; k <= s; ++k) {
    const StateId p = L.p_c(k);
    names[p] = "p_c^" + std::to_string(k);
    const StateId other = k < s ? L.minus() : L.plus();
    set(p, k0, other);
    set(p, k1, other);
    set(p, kd, other);
    set(p, kc, k < s ? L.p_row(1, k + 1) : L.minus());
  }

  for (std::size_t c = 0; c < 4; ++c) {
    set(L.plus(), c, L.plus());
    set(L.minus(), c, L.minus());
  }
  names[L.plus()] = "p_+";
  names[L.minus()] = "p_-";

  std::vector<StateId> acc;
  for (StateId q = 0; q < L.minus(); ++q) acc.push_back(q);
  Dfa dfa(kCnfAlphabet, L.num_states(), L.p(0), std::move(acc), std::move(trans),
          std::move(names));

  const auto lin = longest_live_path(dfa);
  if (!lin || *lin != n.kappa + r || *lin != L.num_states() - 3) {
    throw Error(ErrorCode::InternalInconsistency,
                "CNF-DFA longest live path disagrees with kappa + r");
  }
  return dfa;
}

RowCheck clause_row_check(const Dfa& dfa, const NormalizedCnf& n, const Assignment& u,
                          std::size_t k) {
  if (k < 1 || k > n.s) {
    throw Error(ErrorCode::IndexOutOfRange, "clause index must lie in 1.." + std::to_string(n.s));
  }
  if (u.bits.size() != n.r) {
    throw Error(ErrorCode::IndexOutOfRange, "assignment length differs from variable count");
  }
  const CnfDfaLayout L(n.r, n.s);
  RowCheck out;
  out.landed = run_from(dfa, L.p_hat(n.r, k - 1), u.bits);
  out.automaton = out.landed == L.p_hat(n.r, k);
  const auto& row = n.grid[k - 1];
  for (std::size_t i = 0; i < n.r; ++i) {
    if (row[i].kind != Element::Kind::Bot && row[i].satisfying_bit() == u.bits[i]) {
      out.semantic = true;
    }
  }
  return out;
}

bool eval_formula(const CnfFormula& f, const Assignment& a) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const std::vector<int>& clause) {
    return std::any_of(clause.begin(), clause.end(), [&](int lit) {
      const std::size_t v = static_cast<std::size_t>(std::abs(lit));
      if (v == 0 || v > a.bits.size()) {
        throw Error(ErrorCode::VariableOutOfRange,
                    "variable " + std::to_string(v) + " has no assigned value");
      }
      return (a.bits[v - 1] == '1') == (lit > 0);
    });
  });
}

std::optional<Assignment> solve_sat_via_primality(const CnfFormula& f,
                                                  const PrimalityOptions& options) {
  const auto normalized = normalize(f);
  if (std::holds_alternative<TriviallySat>(normalized)) {
    return Assignment{std::string(f.num_vars, '0')};
  }
  const auto& n = std::get<NormalizedCnf>(normalized);
  const PrimalityVerdict verdict = decide_primality_mls(build_cnf_dfa(n), options);
  if (verdict.verdict == Verdict::Inconclusive) {
    throw Error(ErrorCode::Inconclusive, "word budget exhausted before a verdict");
  }
  if (verdict.verdict == Verdict::Composite) return std::nullopt;

  const Word& w = *verdict.witness;
  const std::string expected_tail = "d" + std::string(n.kappa, 'c');
  const bool shaped = w.size() == n.r + 1 + n.kappa && w.compare(n.r, Word::npos, expected_tail) == 0 &&
                      std::all_of(w.begin(), w.begin() + static_cast<long>(n.r),
                                  [](char c) { return c == '0' || c == '1'; });
  if (!shaped) {
    throw Error(ErrorCode::InternalInconsistency, "primality witness \"" + w +
                                                      "\" does not have the shape u d c^kappa");
  }
  Assignment a{w.substr(0, n.r)};
  if (!eval_formula(f, a)) {
    throw Error(ErrorCode::InternalInconsistency,
                "assignment " + a.bits + " extracted from the witness does not satisfy the formula");
  }
  return a;
}

}  // namespace primedfa
