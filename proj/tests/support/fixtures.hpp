#pragma once

// Reference automata fig4a, fig4b and the parts of fig4a, written out state
// by state. Sinks are q+ then q-.

#include "primedfa/dfa.hpp"

namespace fixtures {

using primedfa::Dfa;

// q0 -a-> q1 -b-> q2 -a-> q+; q0 -b-> q2; q1 -a-> q-; q2 -b-> q-.
inline Dfa fig4a() {
  return Dfa("ab", 5, 0, {0, 1, 2, 3},
             {1, 2,  //
              4, 2,  //
              3, 4,  //
              3, 3,  //
              4, 4},
             {"q0", "q1", "q2", "q+", "q-"});
}

// As fig4a except q0 -b-> q+.
inline Dfa fig4b() {
  return Dfa("ab", 5, 0, {0, 1, 2, 3},
             {1, 3,  //
              4, 2,  //
              3, 4,  //
              3, 3,  //
              4, 4},
             {"q0", "q1", "q2", "q+", "q-"});
}

// fig4a without q1.
inline Dfa fig4a_1plus() {
  return Dfa("ab", 4, 0, {0, 1, 2},
             {2, 1,  //
              2, 3,  //
              2, 2,  //
              3, 3},
             {"q0", "q2", "q+", "q-"});
}

// fig4a without q2.
inline Dfa fig4a_2plus() {
  return Dfa("ab", 4, 0, {0, 1, 2},
             {1, 2,  //
              3, 2,  //
              2, 2,  //
              3, 3},
             {"q0", "q1", "q+", "q-"});
}

// Pump gadget for abb at (1, 2): a-loop on q0.
inline Dfa fig4a_w12() {
  return Dfa("ab", 4, 0, {0, 1, 2},
             {0, 1,  //
              2, 3,  //
              2, 2,  //
              3, 3},
             {"q0", "q2", "q+", "q-"});
}

// Two states flipping on a; accepts words with an even number of a's.
inline Dfa even_as() { return Dfa("ab", 2, 0, {0}, {1, 0, 0, 1}); }

}  // namespace fixtures
