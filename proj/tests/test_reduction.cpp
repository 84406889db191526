#include <set>

#include "doctest.h"
#include "primedfa/classify.hpp"
#include "primedfa/reduction.hpp"
#include "support/oracles.hpp"

using namespace primedfa;

namespace {

const CnfFormula kPhi0{2, {{1, -2}, {2}}};
const CnfFormula kContradiction{1, {{1}, {-1}}};

NormalizedCnf norm(const CnfFormula& f) { return std::get<NormalizedCnf>(normalize(f)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

std::optional<std::size_t> line_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.position();
  }
  return std::nullopt;
}

Element pos() { return {Element::Kind::Pos}; }
Element neg() { return {Element::Kind::Neg}; }
Element bot() { return {Element::Kind::Bot}; }

}  // namespace

TEST_CASE("parse_dimacs") {
  const CnfFormula f = parse_dimacs("p cnf 2 2\n1 -2 0\n2 0\n");
  CHECK(f.num_vars == 2);
  CHECK(f.clauses == kPhi0.clauses);
  CHECK(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").clauses == kContradiction.clauses);
  CHECK(parse_dimacs("p cnf 2 1\n1 1 0\n").clauses == std::vector<std::vector<int>>{{1, 1}});
  SUBCASE("comments, spanning clauses and the end marker") {
    const CnfFormula g = parse_dimacs("c hello\np cnf 3 2\n1 2\n3 0 -1\n0\n%\n0\n");
    CHECK(g.clauses == std::vector<std::vector<int>>{{1, 2, 3}, {-1}});
  }
  SUBCASE("empty clause") {
    CHECK(parse_dimacs("p cnf 1 1\n0\n").clauses == std::vector<std::vector<int>>{{}});
  }
}

TEST_CASE("parse_dimacs errors carry line numbers") {
  CHECK(code_of([] { parse_dimacs("1 0\n"); }) == ErrorCode::MalformedHeader);
  CHECK(code_of([] { parse_dimacs("p dnf 1 1\n1 0\n"); }) == ErrorCode::MalformedHeader);
  CHECK(code_of([] { parse_dimacs("c only\n"); }) == ErrorCode::MalformedHeader);
  CHECK(code_of([] { parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0\n"); }) == ErrorCode::MalformedHeader);
  CHECK(code_of([] { parse_dimacs("p cnf 2 1\n1 3 0\n"); }) == ErrorCode::LiteralOutOfRange);
  CHECK(line_of([] { parse_dimacs("c x\np cnf 2 2\n1 0\n1 -3 0\n"); }) == 4);
  CHECK(code_of([] { parse_dimacs("p cnf 2 3\n1 0\n2 0\n"); }) == ErrorCode::ClauseCountMismatch);
  CHECK(code_of([] { parse_dimacs("p cnf 2 1\n1 x 0\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_dimacs("p cnf 2 1\n1 2\n"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("normalize") {
  const NormalizedCnf n = norm(kPhi0);
  CHECK(n.r == 2);
  CHECK(n.s == 2);
  CHECK(n.grid == std::vector<std::vector<Element>>{{pos(), neg()}, {bot(), pos()}});
  CHECK(n.kappa == 11);

  CHECK(std::holds_alternative<TriviallySat>(normalize({1, {{1, -1}}})));

  const NormalizedCnf c = norm(kContradiction);
  CHECK(c.grid == std::vector<std::vector<Element>>{{pos()}, {neg()}});
  CHECK(c.kappa == 7);

  SUBCASE("duplicates collapse, tautologies vanish, empty clauses stay") {
    const NormalizedCnf d = norm({2, {{1, 1}, {2, -2}, {}}});
    CHECK(d.s == 2);
    CHECK(d.grid == std::vector<std::vector<Element>>{{pos(), bot()}, {bot(), bot()}});
  }
  CHECK(code_of([] { normalize({0, {{}}}); }) == ErrorCode::NoVariables);
}

TEST_CASE("CNF-DFA of phi0") {
  const Dfa a = build_cnf_dfa(norm(kPhi0));
  CHECK(a.num_states() == 16);
  CHECK(a.alphabet() == "01cd");
  CHECK(classify(a).is_mls_adfa_plus);
  CHECK(classify(a).lin == 13);
  CHECK(a.display_name(run(a, "11")) == "p_2");
  CHECK(a.display_name(run(a, "11d")) == "p_c^0");
  const CnfDfaLayout L(2, 2);
  CHECK(run(a, "11") == L.p_hat(2, 0));
  CHECK(run(a, "11d") == L.p_c(0));
  CHECK(a.display_name(L.plus()) == "p_+");
  CHECK(a.display_name(L.minus()) == "p_-");
  CHECK(a.accepting().size() == 15);
}

TEST_CASE("CNF-DFA of the contradiction") {
  const Dfa a = build_cnf_dfa(norm(kContradiction));
  CHECK(a.num_states() == 11);
  CHECK(classify(a).lin == 8);
}

TEST_CASE("clause_row_check") {
  const NormalizedCnf n = norm(kPhi0);
  const Dfa a = build_cnf_dfa(n);
  const CnfDfaLayout L(2, 2);

  const RowCheck r1 = clause_row_check(a, n, {"11"}, 1);
  CHECK(r1.automaton);
  CHECK(r1.semantic);

  const RowCheck r2 = clause_row_check(a, n, {"10"}, 2);
  CHECK_FALSE(r2.automaton);
  CHECK_FALSE(r2.semantic);
  CHECK(r2.landed == L.p_row(2, 2));

  const RowCheck r3 = clause_row_check(a, n, {"01"}, 1);
  CHECK_FALSE(r3.automaton);
  CHECK_FALSE(r3.semantic);

  CHECK(code_of([&] { clause_row_check(a, n, {"11"}, 0); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { clause_row_check(a, n, {"11"}, 3); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("eval_formula") {
  CHECK(eval_formula(kPhi0, {"11"}));
  CHECK_FALSE(eval_formula(kPhi0, {"01"}));
  CHECK_FALSE(eval_formula(kContradiction, {"0"}));
  CHECK_FALSE(eval_formula(kContradiction, {"1"}));
  CHECK(code_of([] { eval_formula(kPhi0, {"1"}); }) == ErrorCode::VariableOutOfRange);
}

TEST_CASE("solve_sat_via_primality") {
  const auto a = solve_sat_via_primality(kPhi0);
  REQUIRE(a);
  CHECK(a->bits == "11");
  CHECK_FALSE(solve_sat_via_primality(kContradiction));
  const auto t = solve_sat_via_primality({2, {{1, -1}}});
  REQUIRE(t);
  CHECK(t->bits.size() == 2);
  CHECK(code_of([] { solve_sat_via_primality({0, {}}); }) == ErrorCode::NoVariables);
}

TEST_CASE("built CNF-DFAs are minimal MLS ADFA+s with the expected lin") {
  for (const CnfFormula& f : oracle::cnf_corpus(120, 11)) {
    const auto n = normalize(f);
    if (std::holds_alternative<TriviallySat>(n)) continue;
    const NormalizedCnf& g = std::get<NormalizedCnf>(n);
    const Dfa a = build_cnf_dfa(g);
    const ClassReport r = classify(a);
    REQUIRE(r.is_mls_adfa_plus);
    REQUIRE(oracle::table_filling_size(a) == a.num_states());
    REQUIRE(g.kappa > 0);
    REQUIRE(r.lin == g.r + 1 + g.s * (2 * g.r + 1));
  }
}

TEST_CASE("reduction agrees with truth tables on a small corpus") {
  for (const CnfFormula& f : oracle::cnf_corpus(60, 3)) {
    const auto a = solve_sat_via_primality(f);
    REQUIRE(a.has_value() == oracle::truth_table_sat(f));
    if (a) REQUIRE(eval_formula(f, *a));
  }
}
