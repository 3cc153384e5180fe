#include "combword/fsa.hpp"

#include <cstdlib>
#include <deque>

#include "combword/errors.hpp"

namespace combword {

bool accepts(const Fsa& m, const Word& w) {
    int s = m.initial;
    for (Letter x : w) {
        s = m.next(s, x);
        if (s < 0) return false;
    }
    return m.accepting[static_cast<std::size_t>(s)];
}

bool accepts_pair(const TwoTapeAutomaton& m, const Word& u, const Word& v) {
    if (std::abs(u.size() - v.size()) > m.max_lag) return false;
    int s = m.initial;
    const int len = u.size() > v.size() ? u.size() : v.size();
    for (int i = 0; i < len; ++i) {
        Letter l = i < u.size() ? u[i] : kPad;
        Letter r = i < v.size() ? v[i] : kPad;
        s = m.next(s, l, r);
        if (s < 0) return false;
    }
    return m.accepting[static_cast<std::size_t>(s)];
}

namespace {

void enumerate_rec(const Fsa& m, int state, int target_len, Word& prefix,
                   std::vector<Word>& out) {
    if (prefix.size() == target_len) {
        if (m.accepting[static_cast<std::size_t>(state)]) out.push_back(prefix);
        return;
    }
    for (Letter x = 0; x < m.alphabet_size; ++x) {
        int t = m.next(state, x);
        if (t < 0) continue;
        prefix.push_back(x);
        enumerate_rec(m, t, target_len, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_accepted(const Fsa& m, int max_len) {
    std::vector<Word> out;
    Word prefix;
    for (int len = 0; len <= max_len; ++len)
        enumerate_rec(m, m.initial, len, prefix, out);
    return out;
}

void check_padding_discipline(const TwoTapeAutomaton& m) {
    // states entered with the left (resp. right) tape already padded
    std::vector<bool> pad_left(static_cast<std::size_t>(m.num_states), false);
    std::vector<bool> pad_right(static_cast<std::size_t>(m.num_states), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < m.num_states; ++s)
            for (Letter l = kPad; l < m.alphabet_size; ++l)
                for (Letter r = kPad; r < m.alphabet_size; ++r) {
                    if (l == kPad && r == kPad) continue;
                    int t = m.next(s, l, r);
                    if (t < 0) continue;
                    bool tl = pad_left[static_cast<std::size_t>(s)] || l == kPad;
                    bool tr = pad_right[static_cast<std::size_t>(s)] || r == kPad;
                    if (tl && !pad_left[static_cast<std::size_t>(t)]) {
                        pad_left[static_cast<std::size_t>(t)] = true;
                        changed = true;
                    }
                    if (tr && !pad_right[static_cast<std::size_t>(t)]) {
                        pad_right[static_cast<std::size_t>(t)] = true;
                        changed = true;
                    }
                }
    }
    for (int s = 0; s < m.num_states; ++s)
        for (Letter l = kPad; l < m.alphabet_size; ++l)
            for (Letter r = kPad; r < m.alphabet_size; ++r) {
                if (l == kPad && r == kPad) continue;
                if (m.next(s, l, r) < 0) continue;
                if (pad_left[static_cast<std::size_t>(s)] && l != kPad)
                    throw InvariantError("two-tape automaton resumes the left tape after padding");
                if (pad_right[static_cast<std::size_t>(s)] && r != kPad)
                    throw InvariantError("two-tape automaton resumes the right tape after padding");
            }
}

} // namespace combword
