#include "combword/validators.hpp"

#include <stdexcept>
#include <unordered_map>

namespace combword {

bool validate_shortness(const Combing& c, const GroupOracle& o, int max_len) {
    for (const Word& w : enumerate_accepted(c.acceptor, max_len))
        if (w.size() > c.shortness_bound(o.geodesic_length(w))) return false;
    return true;
}

bool validate_departure(const Combing& c, const GroupOracle& o, int max_len) {
    if (static_cast<int>(c.departure.size()) < max_len)
        throw std::invalid_argument("departure table does not cover max_len");
    for (const Word& w : enumerate_accepted(c.acceptor, max_len)) {
        for (int i = 0; i < w.size(); ++i) {
            Word y;
            for (int j = i; j < w.size(); ++j) {
                y.push_back(w[j]);
                // violated iff some n has |y| >= D(n) but geodesic length < n;
                // with D nondecreasing it suffices to test n = geo + 1
                std::int64_t geo = o.geodesic_length(y);
                if (geo + 1 <= static_cast<std::int64_t>(c.departure.size()) &&
                    y.size() >= c.departure[static_cast<std::size_t>(geo)])
                    return false;
            }
        }
    }
    return true;
}

bool validate_multipliers(const Combing& c, const GroupOracle& o, int max_len) {
    const auto words = enumerate_accepted(c.acceptor, max_len);
    std::vector<Word> values(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) values[i] = o.eval(words[i]);

    for (Letter x = 0; x < c.alphabet.size(); ++x) {
        const TwoTapeAutomaton& m = c.multipliers[static_cast<std::size_t>(x)];
        for (std::size_t i = 0; i < words.size(); ++i) {
            Word ux = words[i];
            ux.push_back(x);
            const Word lhs = o.eval(ux);
            for (std::size_t j = 0; j < words.size(); ++j) {
                const bool expected = lhs == values[j];
                if (accepts_pair(m, words[i], words[j]) != expected) return false;
            }
        }
    }
    return true;
}

} // namespace combword
