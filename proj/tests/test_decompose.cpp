#include <random>

#include "doctest.h"
#include "primedfa/classify.hpp"
#include "primedfa/decompose.hpp"
#include "primedfa/oracle.hpp"
#include "primedfa/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace primedfa;

namespace {

Dfa cnf_dfa(CnfFormula f) { return build_cnf_dfa(std::get<NormalizedCnf>(normalize(f))); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("skip-state parts of fig4a match the reference parts") {
  const Dfa one = build_a_i_plus(fixtures::fig4a(), 1);
  CHECK(one.same_table(fixtures::fig4a_1plus()));
  CHECK(one.state_names() == fixtures::fig4a_1plus().state_names());
  CHECK(build_a_i_plus(fixtures::fig4a(), 2).same_table(fixtures::fig4a_2plus()));
  CHECK(code_of([] { build_a_i_plus(fixtures::fig4a(), 0); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { build_a_i_plus(fixtures::fig4a(), 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { build_a_i_plus(fixtures::even_as(), 1); }) == ErrorCode::NotMlsAdfaPlus);
}

TEST_CASE("skip-state part of the phi0 CNF-DFA") {
  const Dfa a = cnf_dfa({2, {{1, -2}, {2}}});
  const Dfa part = build_a_i_plus(a, 1);
  CHECK(part.num_states() == 15);
  CHECK(language_subset(a, part));
  // Every word reaching p_1 is now accepted outright.
  CHECK(accepts(part, "000d"));
  CHECK_FALSE(accepts(a, "000d"));
}

TEST_CASE("skip-state parts contain the source and are one state smaller") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Dfa d = generate_mls(GenConfig{1 + seed % 5, 2 + seed % 2, seed, 1000});
    const std::size_t lin = *classify(d).lin;
    for (std::size_t i = 1; i <= lin; ++i) {
      const Dfa part = build_a_i_plus(d, i);
      REQUIRE(part.num_states() == d.num_states() - 1);
      REQUIRE(language_subset(d, part));
      REQUIRE(index(part) < index(d));
    }
  }
}

TEST_CASE("choose_pump_indices") {
  const PumpIndices p = choose_pump_indices(fixtures::fig4a(), "abb");
  CHECK(p.i == 1);
  CHECK(p.j == 2);
  const Dfa contra = cnf_dfa({1, {{1}, {-1}}});
  for (const char* u : {"0", "1"}) {
    const PumpIndices q = choose_pump_indices(contra, std::string(u) + "d" + std::string(7, 'c'));
    CHECK(q.i == 1);
    CHECK(q.j == 2);
  }
  CHECK(code_of([] { choose_pump_indices(fixtures::fig4b(), "abb"); }) ==
        ErrorCode::NoPumpablePair);
  CHECK(code_of([] { choose_pump_indices(fixtures::fig4a(), "ab"); }) ==
        ErrorCode::WordNotMaxVisiting);
}

TEST_CASE("choose_pump_indices picks max i then min j") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const MlsAutomaton a(generate_mls(GenConfig{1 + seed % 4, 2 + seed % 2, seed, 1000}));
    for (std::uint64_t r = 0; r < a.count_max_visiting_words(); ++r) {
      const Word w = a.max_visiting_word(r);
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = 1; i <= a.lin(); ++i) {
        for (std::size_t j = i + 1; j <= a.lin() + 1; ++j) {
          if (!pp_condition_holds(a, w, i, j)) continue;
          if (!best || i > best->first) best = {i, j};
          break;
        }
      }
      if (!best) {
        REQUIRE(code_of([&] { choose_pump_indices(a, w); }) == ErrorCode::NoPumpablePair);
        continue;
      }
      const PumpIndices p = choose_pump_indices(a, w);
      REQUIRE(std::make_pair(p.i, p.j) == *best);
      REQUIRE(w[p.i - 1] != w[p.j - 1]);
    }
  }
}

TEST_CASE("pump gadget tables") {
  const Dfa g = build_a_w_i_j("abb", 1, 2, "ab");
  CHECK(g.same_table(fixtures::fig4a_w12()));
  CHECK(g.state_names() == fixtures::fig4a_w12().state_names());
  CHECK_FALSE(accepts(g, "aabb"));
  CHECK_FALSE(accepts(g, "bb"));
  CHECK(accepts(g, "ba"));

  const Dfa small = build_a_w_i_j("ab", 1, 2, "ab");
  CHECK(small.num_states() == 3);
  for (const auto& x : oracle::words_upto("ab", 6)) {
    CHECK(accepts(small, x) == !oracle::extends_a_pumping(x, "ab", 1, 2));
  }
}

TEST_CASE("pump gadget argument checks") {
  CHECK(code_of([] { build_a_w_i_j("abb", 2, 3, "ab"); }) == ErrorCode::EqualPumpSymbols);
  CHECK(code_of([] { build_a_w_i_j("aaa", 1, 2, "ab"); }) == ErrorCode::UnaryPowerWord);
  CHECK(code_of([] { build_a_w_i_j("a", 1, 2, "ab"); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { build_a_w_i_j("abz", 1, 2, "ab"); }) == ErrorCode::UnknownSymbol);
  CHECK(code_of([] { build_a_w_i_j("abb", 2, 4, "ab"); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { build_a_w_i_j("abb", 2, 2, "ab"); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("pump gadgets reject exactly the extensions of the pumpings") {
  std::mt19937_64 rng(31);
  int built = 0;
  while (built < 150) {
    const std::string alphabet = rng() % 3 ? "ab" : "abc";
    Word w;
    for (std::size_t n = 2 + rng() % 4; n > 0; --n) w.push_back(alphabet[rng() % alphabet.size()]);
    const std::size_t i = 1 + rng() % (w.size() - 1);
    const std::size_t j = i + 1 + rng() % (w.size() - i);
    if (w[i - 1] == w[j - 1]) continue;
    ++built;
    const Dfa g = build_a_w_i_j(w, i, j, alphabet);
    REQUIRE(g.num_states() == w.size() + 1);
    const std::size_t len = alphabet.size() == 2 ? 2 * w.size() : std::min<std::size_t>(2 * w.size(), 7);
    for (const auto& x : oracle::words_upto(alphabet, len)) {
      REQUIRE(accepts(g, x) == !oracle::extends_a_pumping(x, w, i, j));
    }
  }
}

TEST_CASE("verify_decomposition") {
  const std::vector<Dfa> fig4c{fixtures::fig4a_1plus(), fixtures::fig4a_2plus(),
                               fixtures::fig4a_w12()};
  CHECK(verify_decomposition(fixtures::fig4a(), fig4c).ok);
  CHECK(verify_decomposition(fixtures::fig4a(), {fixtures::fig4a_2plus(), fixtures::fig4a_w12()}).ok);

  const VerificationReport self = verify_decomposition(fixtures::fig4a(), {fixtures::fig4a()});
  CHECK_FALSE(self.ok);
  CHECK(self.oversized_parts == std::vector<std::size_t>{0});
  CHECK_FALSE(self.separating_word);

  const VerificationReport loose =
      verify_decomposition(fixtures::fig4a(), {fixtures::fig4a_1plus(), fixtures::fig4a_2plus()});
  CHECK_FALSE(loose.ok);
  CHECK(loose.separating_word == Word("abb"));

  const VerificationReport none = verify_decomposition(fixtures::fig4a(), {});
  CHECK(none.separating_word == Word("aa"));
  CHECK(code_of([] { verify_decomposition(fixtures::fig4a(), {make_universal("ba", true)}); }) ==
        ErrorCode::AlphabetMismatch);
}

TEST_CASE("decompose_mls") {
  SUBCASE("fig4a gives the three reference parts") {
    const Decomposition d = decompose_mls(fixtures::fig4a());
    REQUIRE(d.parts.size() == 3);
    CHECK(isomorphic(d.parts[0], fixtures::fig4a_1plus()));
    CHECK(isomorphic(d.parts[1], fixtures::fig4a_2plus()));
    CHECK(isomorphic(d.parts[2], fixtures::fig4a_w12()));
    CHECK(d.verified);
    CHECK(std::get<SkipState>(d.provenance[0]).i == 1);
    const auto& g = std::get<PumpGadget>(d.provenance[2]);
    CHECK(g.word == "abb");
    CHECK(g.i == 1);
    CHECK(g.j == 2);
    CHECK(to_json(d.provenance[2]).dump() == R"({"kind":"pump_gadget","word":"abb","i":1,"j":2})");
  }
  SUBCASE("contradiction CNF-DFA") {
    const Decomposition d = decompose_mls(cnf_dfa({1, {{1}, {-1}}}));
    // lin = 8 skip-state parts plus one gadget per word in {0, 1} d c^7.
    CHECK(d.parts.size() == 10);
    CHECK(d.verified);
  }
  SUBCASE("errors") {
    CHECK(code_of([] { decompose_mls(fixtures::fig4b()); }) == ErrorCode::IsPrime);
    CHECK(code_of([] { decompose_mls(cnf_dfa({2, {{1}, {-1}}}), {{1, 1}}); }) ==
          ErrorCode::Inconclusive);
  }
}

TEST_CASE("every generated composite instance decomposes") {
  int composite = 0;
  for (std::uint64_t seed = 0; seed < 400 && composite < 60; ++seed) {
    const Dfa d = generate_mls(GenConfig{1 + seed % 4, 2 + seed % 2, seed, 1000});
    if (decide_primality_mls(d).verdict != Verdict::Composite) continue;
    ++composite;
    const Decomposition dec = decompose_mls(d);
    REQUIRE(dec.verified);
    for (const Dfa& p : dec.parts) REQUIRE(index(p) < index(d));
  }
  CHECK(composite >= 20);
}

TEST_CASE("safetyfy") {
  SUBCASE("even a's becomes b*") {
    const Dfa s = safetyfy(fixtures::even_as());
    CHECK(s.num_states() == 2);
    CHECK(classify(s).is_safety);
    for (const auto& w : oracle::words_upto("ab", 6)) {
      CHECK(accepts(s, w) == (w.find('a') == Word::npos));
    }
  }
  SUBCASE("fig4a is unchanged") {
    CHECK(language_equal(safetyfy(fixtures::fig4a()), fixtures::fig4a()));
  }
  SUBCASE("empty language") {
    const Dfa s = safetyfy(make_universal("ab", false));
    CHECK(s.num_states() == 1);
    CHECK(s.accepting().empty());
  }
  SUBCASE("rejecting initial state after minimization") {
    const Dfa d("ab", 2, 0, {1}, {1, 1, 1, 1});
    const Dfa s = safetyfy(d);
    CHECK(s.num_states() == 1);
    CHECK(s.accepting().empty());
  }
}

TEST_CASE("safetyfy yields the prefix-closed core") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Dfa d = oracle::random_dfa(rng, 1 + rng() % 5, trial % 4 ? "ab" : "abc");
    const Dfa s = safetyfy(d);
    REQUIRE(classify(s).is_safety);
    REQUIRE(language_subset(s, d));
    REQUIRE(language_equal(safetyfy(s), s));
    for (const auto& w : oracle::words_upto(d.alphabet(), d.alphabet().size() == 2 ? 6 : 4)) {
      REQUIRE(accepts(s, w) == oracle::prefix_closed_member(d, w));
    }
  }
}
