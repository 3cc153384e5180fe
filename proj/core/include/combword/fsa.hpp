#pragma once

#include <cstdint>
#include <vector>

#include "combword/words.hpp"

namespace combword {

// Padding marker on one tape of a two-tape automaton.
inline constexpr Letter kPad = -1;

// Deterministic one-tape acceptor. Transitions are partial; an undefined
// transition rejects.
struct Fsa {
    int alphabet_size = 0;
    int num_states = 0;
    int initial = 0;
    std::vector<bool> accepting;
    std::vector<std::int32_t> transitions; // num_states * alphabet_size, -1 = undefined

    Fsa() = default;
    Fsa(int alphabet_size, int num_states, int initial)
        : alphabet_size(alphabet_size), num_states(num_states), initial(initial),
          accepting(static_cast<std::size_t>(num_states), false),
          transitions(static_cast<std::size_t>(num_states) * static_cast<std::size_t>(alphabet_size), -1) {}

    int next(int s, Letter x) const {
        return transitions[static_cast<std::size_t>(s) * static_cast<std::size_t>(alphabet_size) +
                           static_cast<std::size_t>(x)];
    }
    void set_transition(int s, Letter x, int t) {
        transitions[static_cast<std::size_t>(s) * static_cast<std::size_t>(alphabet_size) +
                    static_cast<std::size_t>(x)] = t;
    }

    bool operator==(const Fsa&) const = default;
};

// One step of a two-tape automaton. (pad, pad) is never a valid pair letter.
struct PairLetter {
    Letter left = kPad;
    Letter right = kPad;
    bool operator==(const PairLetter&) const = default;
};

// Deterministic two-tape automaton over padded pair letters. Asynchrony is
// realized by padding with the tape-position offset bounded by max_lag.
struct TwoTapeAutomaton {
    int alphabet_size = 0;
    int num_states = 0;
    int initial = 0;
    int max_lag = 0;
    std::vector<bool> accepting;
    std::vector<std::int32_t> transitions; // num_states * (alphabet_size+1)^2, -1 = undefined

    TwoTapeAutomaton() = default;
    TwoTapeAutomaton(int alphabet_size, int num_states, int initial, int max_lag)
        : alphabet_size(alphabet_size), num_states(num_states), initial(initial), max_lag(max_lag),
          accepting(static_cast<std::size_t>(num_states), false),
          transitions(static_cast<std::size_t>(num_states) * pair_codes(), -1) {}

    std::size_t pair_codes() const {
        auto n = static_cast<std::size_t>(alphabet_size) + 1;
        return n * n;
    }
    std::size_t pair_code(Letter l, Letter r) const {
        return static_cast<std::size_t>(l + 1) * (static_cast<std::size_t>(alphabet_size) + 1) +
               static_cast<std::size_t>(r + 1);
    }
    int next(int s, Letter l, Letter r) const {
        return transitions[static_cast<std::size_t>(s) * pair_codes() + pair_code(l, r)];
    }
    void set_transition(int s, Letter l, Letter r, int t) {
        transitions[static_cast<std::size_t>(s) * pair_codes() + pair_code(l, r)] = t;
    }

    bool operator==(const TwoTapeAutomaton&) const = default;
};

// Run w from the initial state; true iff everywhere defined and final
// state accepting.
bool accepts(const Fsa& m, const Word& w);

// Accept the padded pairing of (u, v), right-padding the shorter word.
// Rejects outright when the length difference exceeds max_lag.
bool accepts_pair(const TwoTapeAutomaton& m, const Word& u, const Word& v);

// Exactly the accepted words of length <= max_len, in shortlex order.
std::vector<Word> enumerate_accepted(const Fsa& m, int max_len);

// Throws InvariantError if some run can resume a tape after padding it:
// a state entered by a pad-left edge must have no outgoing non-pad-left
// edge, and symmetrically for the right tape.
void check_padding_discipline(const TwoTapeAutomaton& m);

} // namespace combword
