#include "combword/builders.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "combword/errors.hpp"
#include "combword/validators.hpp"

namespace combword {

namespace {

// Interned set of canonical difference words.
struct DiffTable {
    std::vector<Word> words;
    std::unordered_map<Word, int, WordHash> index;

    int intern(const Word& w) {
        auto [it, inserted] = index.try_emplace(w, static_cast<int>(words.size()));
        if (inserted) words.push_back(w);
        return it->second;
    }
    int find(const Word& w) const {
        auto it = index.find(w);
        return it == index.end() ? -1 : it->second;
    }
};

std::string describe_diff(const Alphabet& a, const Word& g) {
    if (g.empty()) return "e";
    std::string s;
    for (Letter x : g) {
        if (!s.empty()) s += ' ';
        s += a.name(x);
    }
    return s;
}

} // namespace

TwoTapeAutomaton build_multiplier_from_differences(const Fsa& acceptor,
                                                   const GroupOracle& oracle,
                                                   Letter x,
                                                   int max_diff_len,
                                                   int probe_len) {
    const Alphabet& a = oracle.alphabet();
    const int asz = a.size();
    if (acceptor.alphabet_size != asz)
        throw std::invalid_argument("acceptor and oracle alphabets differ in size");
    if (max_diff_len < 0) throw std::invalid_argument("max_diff_len must be nonnegative");

    Word xw;
    if (x != kIdentityLetter) xw.push_back(x);
    const Word target = oracle.eval(xw);
    if (target.size() > max_diff_len)
        throw DifferenceExplosionError("multiplier target " + describe_diff(a, target) +
                                       " exceeds max_diff_len " + std::to_string(max_diff_len));

    // Probe phase: walk every accepted pair (u, v) with eval(u) * x = eval(v)
    // at small scale and collect the prefix differences.
    const auto pool = enumerate_accepted(acceptor, probe_len);
    std::unordered_map<Word, std::vector<int>, WordHash> by_value;
    std::vector<Word> values(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        values[i] = oracle.eval(pool[i]);
        by_value[values[i]].push_back(static_cast<int>(i));
    }

    DiffTable diffs;
    const int e_idx = diffs.intern(Word{});
    const int target_idx = diffs.intern(target);
    int max_lag_seen = x == kIdentityLetter ? 0 : 1;

    for (std::size_t i = 0; i < pool.size(); ++i) {
        const Word& u = pool[i];
        const Word rhs = oracle.eval(u + xw);
        auto it = by_value.find(rhs);
        if (it == by_value.end()) continue;
        for (int j : it->second) {
            const Word& v = pool[static_cast<std::size_t>(j)];
            Word g;
            const int len = u.size() > v.size() ? u.size() : v.size();
            for (int k = 0; k < len; ++k) {
                Word step;
                if (k < u.size()) step.push_back(a.inverse(u[k]));
                for (Letter l : g) step.push_back(l);
                if (k < v.size()) step.push_back(v[k]);
                g = oracle.eval(step);
                if (g.size() > max_diff_len)
                    throw DifferenceExplosionError(
                        "word difference " + describe_diff(a, g) + " exceeds max_diff_len " +
                        std::to_string(max_diff_len) + "; not a combing at this bound");
                diffs.intern(g);
            }
            int lag = std::abs(u.size() - v.size());
            if (lag > max_lag_seen) max_lag_seen = lag;
        }
    }

    // Difference transition g -> p^-1 g q, closed over the collected
    // vocabulary; transitions leaving it are undefined.
    const int ndiff = static_cast<int>(diffs.words.size());
    const int pcodes = (asz + 1) * (asz + 1);
    std::vector<int> dmemo(static_cast<std::size_t>(ndiff) * static_cast<std::size_t>(pcodes), -2);
    auto diff_step = [&](int d, Letter p, Letter q) {
        std::size_t key = static_cast<std::size_t>(d) * static_cast<std::size_t>(pcodes) +
                          static_cast<std::size_t>((p + 1) * (asz + 1) + (q + 1));
        int& slot = dmemo[key];
        if (slot != -2) return slot;
        Word step;
        if (p != kPad) step.push_back(a.inverse(p));
        for (Letter l : diffs.words[static_cast<std::size_t>(d)]) step.push_back(l);
        if (q != kPad) step.push_back(q);
        Word g = oracle.eval(step);
        slot = g.size() > max_diff_len ? -1 : diffs.find(g);
        return slot;
    };

    // Reachable product construction over (u-state, v-state, diff, pad flags).
    struct StateInfo {
        int su, sv, d;
        bool pad_u, pad_v;
    };
    auto encode = [&](int su, int sv, int d, bool pu, bool pv) {
        return (((static_cast<std::int64_t>(su) * acceptor.num_states + sv) * ndiff + d) << 2) |
               (static_cast<std::int64_t>(pu) << 1) | static_cast<std::int64_t>(pv);
    };
    std::unordered_map<std::int64_t, int> ids;
    std::vector<StateInfo> states;
    struct Edge {
        int from;
        Letter p, q;
        int to;
    };
    std::vector<Edge> edges;
    std::deque<int> queue;

    auto intern_state = [&](int su, int sv, int d, bool pu, bool pv) {
        auto [it, inserted] = ids.try_emplace(encode(su, sv, d, pu, pv),
                                              static_cast<int>(states.size()));
        if (inserted) {
            states.push_back({su, sv, d, pu, pv});
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern_state(acceptor.initial, acceptor.initial, e_idx, false, false);
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        StateInfo st = states[static_cast<std::size_t>(id)];
        for (Letter p = kPad; p < asz; ++p) {
            if (st.pad_u && p != kPad) continue;
            int su = st.su;
            if (p != kPad) {
                su = acceptor.next(st.su, p);
                if (su < 0) continue;
            }
            for (Letter q = kPad; q < asz; ++q) {
                if (p == kPad && q == kPad) continue;
                if (st.pad_v && q != kPad) continue;
                int sv = st.sv;
                if (q != kPad) {
                    sv = acceptor.next(st.sv, q);
                    if (sv < 0) continue;
                }
                int d = diff_step(st.d, p, q);
                if (d < 0) continue;
                int to = intern_state(su, sv, d, st.pad_u || p == kPad, st.pad_v || q == kPad);
                edges.push_back({id, p, q, to});
            }
        }
    }

    TwoTapeAutomaton m(asz, static_cast<int>(states.size()), 0, max_lag_seen);
    for (std::size_t id = 0; id < states.size(); ++id) {
        const StateInfo& st = states[id];
        m.accepting[id] = acceptor.accepting[static_cast<std::size_t>(st.su)] &&
                          acceptor.accepting[static_cast<std::size_t>(st.sv)] &&
                          st.d == target_idx;
    }
    for (const Edge& e : edges) m.set_transition(e.from, e.p, e.q, e.to);
    return m;
}

Combing build_free_group_structure(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    GroupOracle oracle = GroupOracle::free_group(rank);
    const int n = oracle.alphabet().size();

    // state 0: start; state x+1: last letter was x; no adjacent cancellation
    Fsa acceptor(n, n + 1, 0);
    for (int s = 0; s <= n; ++s) acceptor.accepting[static_cast<std::size_t>(s)] = true;
    for (Letter x = 0; x < n; ++x) acceptor.set_transition(0, x, x + 1);
    for (Letter last = 0; last < n; ++last)
        for (Letter x = 0; x < n; ++x)
            if (x != oracle.alphabet().inverse(last))
                acceptor.set_transition(last + 1, x, x + 1);

    Combing c;
    c.alphabet = oracle.alphabet();
    c.acceptor = acceptor;
    c.fellow_traveler_k = 2;
    const int max_diff_len = 2 * c.fellow_traveler_k;
    for (Letter x = 0; x < n; ++x)
        c.multipliers.push_back(build_multiplier_from_differences(acceptor, oracle, x, max_diff_len));
    c.lambda = Rational{1, 1};
    c.epsilon = Rational{0, 1};
    for (int i = 1; i <= kDepartureTableLen; ++i) c.departure.push_back(i);
    c.uniqueness = true;
    c.identity_words = {Word{}};
    check_combing_invariants(c);
    return c;
}

Combing build_direct_product(const Combing& c1, const Combing& c2,
                             const GroupOracle& o1, const GroupOracle& o2) {
    if (!c1.uniqueness || !c2.uniqueness)
        throw InvariantError("direct product requires uniqueness in both factors");
    if (!validate_multipliers(c1, o1, 2) || !validate_multipliers(c2, o2, 2))
        throw InvariantError("oracle does not match the combing it was paired with");

    const int n1 = c1.alphabet.size();
    const int n2 = c2.alphabet.size();
    std::vector<std::string> names;
    std::vector<Letter> inv;
    for (Letter v = 0; v < n1; ++v) {
        names.push_back(c1.alphabet.name(v));
        inv.push_back(c1.alphabet.inverse(v));
    }
    for (Letter v = 0; v < n2; ++v) {
        names.push_back(c2.alphabet.name(v));
        inv.push_back(n1 + c2.alphabet.inverse(v));
    }
    Alphabet alphabet(std::move(names), std::move(inv));

    // L = L1 L2 in fixed factor order: factor-1 states first, switching to a
    // copy of the factor-2 acceptor from any accepting factor-1 state.
    const Fsa& a1 = c1.acceptor;
    const Fsa& a2 = c2.acceptor;
    Fsa acceptor(n1 + n2, a1.num_states + a2.num_states, a1.initial);
    for (int s = 0; s < a1.num_states; ++s) {
        for (Letter v = 0; v < n1; ++v) {
            int t = a1.next(s, v);
            if (t >= 0) acceptor.set_transition(s, v, t);
        }
        if (a1.accepting[static_cast<std::size_t>(s)]) {
            for (Letter v = 0; v < n2; ++v) {
                int t = a2.next(a2.initial, v);
                if (t >= 0) acceptor.set_transition(s, n1 + v, a1.num_states + t);
            }
            acceptor.accepting[static_cast<std::size_t>(s)] =
                a2.accepting[static_cast<std::size_t>(a2.initial)];
        }
    }
    for (int s = 0; s < a2.num_states; ++s) {
        for (Letter v = 0; v < n2; ++v) {
            int t = a2.next(s, v);
            if (t >= 0) acceptor.set_transition(a1.num_states + s, n1 + v, a1.num_states + t);
        }
        acceptor.accepting[static_cast<std::size_t>(a1.num_states + s)] =
            a2.accepting[static_cast<std::size_t>(s)];
    }

    GroupOracle oracle = GroupOracle::direct_product(o1, o2);

    Combing c;
    c.alphabet = std::move(alphabet);
    c.acceptor = std::move(acceptor);
    c.fellow_traveler_k = c1.fellow_traveler_k + c2.fellow_traveler_k;
    const int max_diff_len = 2 * c.fellow_traveler_k;
    for (Letter x = 0; x < n1 + n2; ++x)
        c.multipliers.push_back(
            build_multiplier_from_differences(c.acceptor, oracle, x, max_diff_len));
    c.lambda = c1.lambda < c2.lambda ? c2.lambda : c1.lambda;
    c.epsilon = c1.epsilon + c2.epsilon;
    const std::size_t dep_len = c1.departure.size() < c2.departure.size()
                                    ? c1.departure.size()
                                    : c2.departure.size();
    for (std::size_t i = 0; i < dep_len; ++i)
        c.departure.push_back(c1.departure[i] > c2.departure[i] ? c1.departure[i]
                                                                : c2.departure[i]);
    c.uniqueness = true;
    for (const Word& w1 : c1.identity_words)
        for (const Word& w2 : c2.identity_words) {
            Word w = w1;
            for (Letter v : w2) w.push_back(n1 + v);
            c.identity_words.push_back(w);
        }
    check_combing_invariants(c);
    return c;
}

std::vector<Word> identity_set(const Fsa& acceptor, const GroupOracle& oracle,
                               const Rational& epsilon) {
    const std::int64_t bound = epsilon.floor();
    std::vector<Word> out;
    for (const Word& w : enumerate_accepted(acceptor, static_cast<int>(bound < 0 ? 0 : bound)))
        if (oracle.is_identity(w)) out.push_back(w);
    return out;
}

} // namespace combword
