#include "combword/combing.hpp"

#include <deque>

#include "combword/errors.hpp"

namespace combword {

namespace {

bool language_nonempty(const Fsa& m) {
    std::vector<bool> seen(static_cast<std::size_t>(m.num_states), false);
    std::deque<int> queue{m.initial};
    seen[static_cast<std::size_t>(m.initial)] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        if (m.accepting[static_cast<std::size_t>(s)]) return true;
        for (Letter x = 0; x < m.alphabet_size; ++x) {
            int t = m.next(s, x);
            if (t >= 0 && !seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                queue.push_back(t);
            }
        }
    }
    return false;
}

} // namespace

void check_combing_invariants(const Combing& c) {
    if (c.acceptor.alphabet_size != c.alphabet.size())
        throw InvariantError("acceptor alphabet size differs from the alphabet");
    if (static_cast<int>(c.multipliers.size()) != c.alphabet.size())
        throw InvariantError("expected one multiplier per letter");
    for (const auto& m : c.multipliers)
        if (m.alphabet_size != c.alphabet.size())
            throw InvariantError("multiplier alphabet size differs from the alphabet");
    if (c.lambda < Rational{1, 1})
        throw InvariantError("lambda must be at least 1");
    if (c.epsilon < Rational{0, 1})
        throw InvariantError("epsilon must be nonnegative");
    const std::int64_t eps_floor = Rational{0, 1}.floor_scale_add(0, c.epsilon);
    for (const auto& w : c.identity_words) {
        if (w.size() > eps_floor)
            throw InvariantError("identity word longer than epsilon");
        if (!accepts(c.acceptor, w))
            throw InvariantError("identity word not accepted by the acceptor");
    }
    if (c.identity_words.empty())
        throw InvariantError("identity word set is empty");
    if (c.uniqueness && c.identity_words.size() != 1)
        throw InvariantError("uniqueness requires a single identity word");
    for (std::size_t i = 1; i < c.departure.size(); ++i)
        if (c.departure[i] < c.departure[i - 1])
            throw InvariantError("departure table must be nondecreasing");
    for (int d : c.departure)
        if (d <= 0) throw InvariantError("departure entries must be positive");
    if (!language_nonempty(c.acceptor))
        throw InvariantError("acceptor accepts no word; not a normal form");
}

} // namespace combword
