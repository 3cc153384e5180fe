#include "combword/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "combword/errors.hpp"

namespace combword {

namespace {

// Fixed charge for the constant-size automaton run state of one search.
constexpr std::int64_t kRunStateCells = 4;

bool contains(const std::vector<Word>& set, const Word& w) {
    return std::find(set.begin(), set.end(), w) != set.end();
}

// Tail table for a fixed left tape u: tail[k][s] is true iff running
// (u[k], pad), ..., (u[|u|-1], pad) from s stays defined and ends accepting.
std::vector<std::vector<bool>> pad_tail_table(const TwoTapeAutomaton& m, const Word& u) {
    std::vector<std::vector<bool>> tail(static_cast<std::size_t>(u.size()) + 1,
                                        std::vector<bool>(static_cast<std::size_t>(m.num_states), false));
    for (int s = 0; s < m.num_states; ++s)
        tail[static_cast<std::size_t>(u.size())][static_cast<std::size_t>(s)] =
            m.accepting[static_cast<std::size_t>(s)];
    for (int k = u.size() - 1; k >= 0; --k)
        for (int s = 0; s < m.num_states; ++s) {
            int t = m.next(s, u[k], kPad);
            tail[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] =
                t >= 0 && tail[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(t)];
        }
    return tail;
}

struct EnumSearch {
    const Combing& c;
    const TwoTapeAutomaton& m;
    const Word& u;
    SpaceMeter& meter;
    std::int64_t bound;
    const std::vector<std::vector<bool>>& tail;
    Word candidate;
    bool found = false;

    // DFS over candidates of exactly target_len letters, in lex order.
    // Prefixes with a dead acceptor or pair-machine state cannot extend to
    // an accepted candidate and are skipped; surviving full-length
    // candidates are tested in shortlex order.
    bool dfs(int acc_state, int pair_state, int target_len) {
        const int k = candidate.size();
        if (k == target_len) {
            if (candidate.size() > bound)
                throw InvariantError("candidate exceeded the search length bound");
            if (!c.acceptor.accepting[static_cast<std::size_t>(acc_state)]) return false;
            if (k >= u.size())
                return m.accepting[static_cast<std::size_t>(pair_state)];
            return u.size() - k <= m.max_lag &&
                   tail[static_cast<std::size_t>(k)][static_cast<std::size_t>(pair_state)];
        }
        if (k >= u.size() && k - u.size() >= m.max_lag) return false; // lag bound
        const Letter p = k < u.size() ? u[k] : kPad;
        for (Letter q = 0; q < c.alphabet.size(); ++q) {
            int acc_next = c.acceptor.next(acc_state, q);
            if (acc_next < 0) continue;
            int pair_next = m.next(pair_state, p, q);
            if (pair_next < 0) continue;
            candidate.push_back(q);
            meter.charge(1);
            if (dfs(acc_next, pair_next, target_len)) return true;
            meter.release(1);
            candidate.pop_back();
        }
        return false;
    }
};

} // namespace

SubgroupEmbedding SubgroupEmbedding::from_generators(const Alphabet& ambient,
                                                     const std::vector<std::string>& names,
                                                     const std::vector<Word>& words) {
    if (names.size() != words.size())
        throw std::invalid_argument("one word per subgroup generator expected");
    SubgroupEmbedding emb;
    emb.sub_alphabet = Alphabet::with_inverses(names);
    emb.generator_words.resize(names.size() * 2);
    for (std::size_t i = 0; i < words.size(); ++i) {
        emb.generator_words[2 * i] = words[i];
        emb.generator_words[2 * i + 1] = invert_word(ambient, words[i]);
    }
    check_embedding(emb, ambient);
    return emb;
}

void check_embedding(const SubgroupEmbedding& emb, const Alphabet& ambient) {
    if (static_cast<int>(emb.generator_words.size()) != emb.sub_alphabet.size())
        throw InvariantError("embedding: one word per sub-alphabet letter expected");
    for (Letter b = 0; b < emb.sub_alphabet.size(); ++b) {
        const Word& w = emb.generator_words[static_cast<std::size_t>(b)];
        if (w.empty()) throw InvariantError("embedding: empty generator word");
        for (Letter v : w)
            if (v < 0 || v >= ambient.size())
                throw InvariantError("embedding: generator word letter outside the alphabet");
        const Word& wi = emb.generator_words[static_cast<std::size_t>(emb.sub_alphabet.inverse(b))];
        if (wi != invert_word(ambient, w))
            throw InvariantError("embedding: inverse letter word is not the inverted word");
    }
}

Word substitute(const Word& w_prime, const SubgroupEmbedding& emb) {
    Word out;
    for (Letter b : w_prime)
        for (Letter v : emb.generator_words[static_cast<std::size_t>(b)]) out.push_back(v);
    return out;
}

Word next_normal_form_enumerative(const Combing& c, const Word& u, Letter x, SpaceMeter& meter) {
    const TwoTapeAutomaton& m = c.multipliers[static_cast<std::size_t>(x)];
    const std::int64_t bound = c.shortness_bound(u.size() + 1);
    const auto tail = pad_tail_table(m, u);

    meter.charge(u.size() + kRunStateCells);
    EnumSearch search{c, m, u, meter, bound, tail};
    for (int target_len = 0; target_len <= bound; ++target_len) {
        if (search.dfs(c.acceptor.initial, m.initial, target_len)) {
            Word result = search.candidate;
            meter.release(result.size());
            meter.release(u.size() + kRunStateCells);
            return result;
        }
    }
    meter.release(u.size() + kRunStateCells);
    throw SearchExhaustedError("no accepted candidate within the shortness bound; "
                               "the structure violates the combing hypotheses");
}

bool solve_enumerative(const Combing& c, const Word& w, SpaceMeter& meter) {
    if (w.empty()) return true; // the empty word is trivially in the word problem
    const std::int64_t prefix_bound = c.shortness_bound(w.size());
    Word u;
    for (Letter x : w) {
        u = next_normal_form_enumerative(c, u, x, meter);
        if (u.size() > prefix_bound)
            throw InvariantError("intermediate normal form exceeded lambda*|w|+epsilon");
    }
    return contains(c.identity_words, u);
}

namespace {

constexpr int kChoiceNone = -3;
constexpr int kChoiceEnd = -2;

struct FastSearch {
    const TwoTapeAutomaton& m;
    const Word& u;
    FastStats* stats;
    std::vector<std::vector<bool>> tail;
    int max_pos;                    // |u| + max_lag
    std::vector<std::int8_t> count; // accepting completions, capped at 2
    std::vector<int> choice;        // first viable letter, or end marker
    std::vector<bool> done;

    std::size_t idx(int k, int s) const {
        return static_cast<std::size_t>(k) * static_cast<std::size_t>(m.num_states) +
               static_cast<std::size_t>(s);
    }

    int completions(int k, int s) {
        const std::size_t i = idx(k, s);
        if (done[i]) return count[i];
        done[i] = true;
        if (stats) ++stats->expansions;
        int total = 0;
        int pick = kChoiceNone;
        // option: v ends here
        if (k >= u.size()) {
            if (m.accepting[static_cast<std::size_t>(s)]) {
                total = 1;
                pick = kChoiceEnd;
            }
        } else if (u.size() - k <= m.max_lag &&
                   tail[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]) {
            total = 1;
            pick = kChoiceEnd;
        }
        // option: v continues with q
        if (k < max_pos) {
            const Letter p = k < u.size() ? u[k] : kPad;
            for (Letter q = 0; q < m.alphabet_size; ++q) {
                int t = m.next(s, p, q);
                if (t < 0) continue;
                int sub = completions(k + 1, t);
                if (sub > 0) {
                    total += sub;
                    if (pick == kChoiceNone) pick = q;
                    if (total >= 2) {
                        total = 2;
                        break;
                    }
                }
            }
        }
        count[i] = static_cast<std::int8_t>(total);
        choice[i] = pick;
        return total;
    }
};

} // namespace

Word next_normal_form_fast(const Combing& c, const Word& u, Letter x, FastStats* stats) {
    if (!c.uniqueness)
        throw std::invalid_argument("next_normal_form_fast requires a uniqueness structure");
    const TwoTapeAutomaton& m = c.multipliers[static_cast<std::size_t>(x)];

    FastSearch search{m, u, stats, pad_tail_table(m, u), u.size() + m.max_lag, {}, {}, {}};
    const std::size_t cells = static_cast<std::size_t>(search.max_pos + 1) *
                              static_cast<std::size_t>(m.num_states);
    search.count.assign(cells, 0);
    search.choice.assign(cells, kChoiceNone);
    search.done.assign(cells, false);

    const int n = search.completions(0, m.initial);
    if (n == 0)
        throw NoSolutionError("no accepted continuation; the structure is invalid");
    if (n >= 2)
        throw AmbiguityError("two distinct continuations; uniqueness is violated");

    Word v;
    int k = 0;
    int s = m.initial;
    while (true) {
        int pick = search.choice[search.idx(k, s)];
        if (pick == kChoiceEnd) break;
        const Letter p = k < u.size() ? u[k] : kPad;
        v.push_back(static_cast<Letter>(pick));
        s = m.next(s, p, static_cast<Letter>(pick));
        ++k;
    }
    if (!accepts(c.acceptor, v))
        throw NoSolutionError("continuation not accepted by the word acceptor");
    return v;
}

bool solve_fast(const Combing& c, const Word& w, FastStats* stats) {
    if (!c.uniqueness)
        throw std::invalid_argument("solve_fast requires a uniqueness structure");
    if (w.empty()) return true;
    Word u;
    for (Letter x : w) u = next_normal_form_fast(c, u, x, stats);
    return contains(c.identity_words, u);
}

bool solve_subgroup(const Combing& c, const SubgroupEmbedding& emb, const Word& w_prime,
                    SpaceMeter& meter) {
    return solve_enumerative(c, substitute(w_prime, emb), meter);
}

} // namespace combword
