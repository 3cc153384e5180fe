#pragma once

#include <vector>

#include "combword/fsa.hpp"
#include "combword/rational.hpp"
#include "combword/words.hpp"

namespace combword {

// A short combing of a group: the word acceptor for the language L, one
// multiplier automaton per letter, the shortness constants, a departure
// table, and the finite set of accepted words evaluating to the identity.
//
// The solvers consume nothing else; in particular they never consult a
// group oracle.
struct Combing {
    Alphabet alphabet;
    Fsa acceptor;
    std::vector<TwoTapeAutomaton> multipliers; // indexed by letter
    Rational lambda{1, 1};  // >= 1
    Rational epsilon{0, 1}; // >= 0
    std::vector<int> departure;    // departure[n-1] = D(n), nondecreasing
    int fellow_traveler_k = 1;
    bool uniqueness = false;
    std::vector<Word> identity_words;

    // floor(lambda * n + epsilon): max representative length for an element
    // of geodesic length n.
    std::int64_t shortness_bound(std::int64_t n) const {
        return lambda.floor_scale_add(n, epsilon);
    }

    bool operator==(const Combing&) const = default;
};

// Structural invariants that need no oracle: one multiplier per letter,
// identity words accepted and within epsilon, uniqueness implies a single
// identity word, nondecreasing departure table, nonempty language.
// Throws InvariantError naming the failed check.
void check_combing_invariants(const Combing& c);

} // namespace combword
