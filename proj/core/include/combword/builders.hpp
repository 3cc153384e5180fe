#pragma once

#include <vector>

#include "combword/combing.hpp"
#include "combword/oracle.hpp"

namespace combword {

// Identity letter marker for build_multiplier_from_differences.
inline constexpr Letter kIdentityLetter = -1;

// Build the multiplier M_x for the language of `acceptor` by tracking word
// differences g = eval(u_prefix)^-1 * eval(v_prefix).
//
// The difference vocabulary is collected empirically: every accepted word up
// to probe_len is paired with its accepted x-partners and the padded pair is
// walked, recording each prefix difference. A difference longer than
// max_diff_len aborts with DifferenceExplosionError: the language does not
// fellow-travel at this bound. States are then (acceptor state pair,
// difference, padding flags), with transitions closed over the collected
// vocabulary, so the machine never accepts a pair whose values do not
// satisfy eval(u) * x = eval(v).
TwoTapeAutomaton build_multiplier_from_differences(const Fsa& acceptor,
                                                   const GroupOracle& oracle,
                                                   Letter x,
                                                   int max_diff_len,
                                                   int probe_len = 6);

// Shortlex automatic structure of the free group of the given rank:
// freely reduced words, lambda = 1, epsilon = 0, D(n) = n, uniqueness.
Combing build_free_group_structure(int rank);

// Combing of G1 x G2 over the disjoint union alphabet with language
// L = { u1 u2 : u1 in L1, u2 in L2 }. Both factors must have uniqueness.
Combing build_direct_product(const Combing& c1, const Combing& c2,
                             const GroupOracle& o1, const GroupOracle& o2);

// Exactly the accepted words of length <= epsilon evaluating to the
// identity, in shortlex order.
std::vector<Word> identity_set(const Fsa& acceptor, const GroupOracle& oracle,
                               const Rational& epsilon);

// Length of the departure table carried by built structures.
inline constexpr int kDepartureTableLen = 64;

} // namespace combword
