#pragma once

#include "combword/combing.hpp"
#include "combword/oracle.hpp"

namespace combword {

// Every accepted word w with |w| <= max_len satisfies
// |w| <= lambda * geodesic_length(eval(w)) + epsilon.
bool validate_shortness(const Combing& c, const GroupOracle& o, int max_len);

// For every accepted w with |w| <= max_len and every factorization w = xyz:
// |y| >= D(n) implies geodesic_length(eval(y)) >= n. The departure table
// must cover n up to max_len.
bool validate_departure(const Combing& c, const GroupOracle& o, int max_len);

// For every letter x and all accepted u, v with |u|, |v| <= max_len:
// accepts_pair(M_x, u, v) iff eval(u) * x = eval(v).
bool validate_multipliers(const Combing& c, const GroupOracle& o, int max_len);

} // namespace combword
