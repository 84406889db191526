#include <random>
#include <set>

#include "doctest.h"
#include "primedfa/kernels.hpp"
#include "primedfa/oracle.hpp"
#include "primedfa/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace primedfa;
using kernels::CandidateSpace;

TEST_CASE("candidate space sizes") {
  CHECK(CandidateSpace("ab", 1, CandidateSpace::Shape::General).size() == 2);
  CHECK(CandidateSpace("ab", 2, CandidateSpace::Shape::General).size() == 4 * 16);
  CHECK(CandidateSpace("ab", 4, CandidateSpace::Shape::Safety).size() == 256);
  CHECK(CandidateSpace("ab", 2, CandidateSpace::Shape::Safety).size() == 0);
  CHECK(CandidateSpace("abcd", 12, CandidateSpace::Shape::General).size() == UINT64_MAX);
}

TEST_CASE("candidate decoding is a bijection on small spaces") {
  const CandidateSpace space("ab", 2, CandidateSpace::Shape::General);
  std::set<std::pair<std::vector<StateId>, std::vector<StateId>>> seen;
  for (std::uint64_t r = 0; r < space.size(); ++r) {
    const Dfa d = space.make(r);
    REQUIRE(d.initial() == 0);
    seen.insert({d.transitions(), d.accepting()});
  }
  CHECK(seen.size() == space.size());

  const CandidateSpace safety("ab", 4, CandidateSpace::Shape::Safety);
  for (std::uint64_t r = 0; r < safety.size(); ++r) {
    const Dfa d = safety.make(r);
    REQUIRE(d.is_sink(2));
    REQUIRE(d.is_sink(3));
    REQUIRE(d.is_accepting(2));
    REQUIRE_FALSE(d.is_accepting(3));
    REQUIRE(d.accepting().size() == 3);
  }
}

TEST_CASE("superset filter agrees with language_subset") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Dfa target = oracle::random_dfa(rng, 1 + rng() % 4, "ab");
    for (auto shape : {CandidateSpace::Shape::General, CandidateSpace::Shape::Safety}) {
      const CandidateSpace space("ab", shape == CandidateSpace::Shape::General ? 2 : 4, shape);
      const auto ranks = kernels::superset_candidates_serial(space, target);
      std::vector<std::uint64_t> expected;
      for (std::uint64_t r = 0; r < space.size(); ++r) {
        if (language_subset(target, space.make(r))) expected.push_back(r);
      }
      REQUIRE(ranks == expected);
      for (unsigned jobs : {1U, 2U, 4U}) {
        REQUIRE(kernels::superset_candidates_parallel(space, target, jobs) == expected);
      }
    }
  }
}

TEST_CASE("first PP-breaking word: serial and parallel agree") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const MlsAutomaton a(generate_mls(GenConfig{1 + seed % 4, 2 + seed % 3, seed, 1000}));
    const std::uint64_t total = a.count_max_visiting_words();
    for (std::uint64_t limit : {std::uint64_t{1}, total / 2, total}) {
      const auto s = kernels::first_pp_breaking_serial(a, limit);
      for (unsigned jobs : {1U, 2U, 3U, 8U}) {
        REQUIRE(kernels::first_pp_breaking_parallel(a, limit, jobs) == s);
      }
    }
  }
}

TEST_CASE("first PP-breaking word on CNF-DFAs") {
  // Satisfiable by 10 and 11 only: the least breaking word starts with 10.
  CnfFormula f{2, {{1}, {1, 2}}};
  const MlsAutomaton a(build_cnf_dfa(std::get<NormalizedCnf>(normalize(f))));
  const auto r = kernels::first_pp_breaking_parallel(a, a.count_max_visiting_words(), 4);
  REQUIRE(r);
  CHECK(a.max_visiting_word(*r).substr(0, 3) == "10d");
  CHECK(kernels::first_pp_breaking_serial(a, a.count_max_visiting_words()) == r);
}
