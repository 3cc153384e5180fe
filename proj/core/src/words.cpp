#include "combword/words.hpp"

#include <stdexcept>

namespace combword {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<Letter> involution)
    : names_(std::move(names)), involution_(std::move(involution)) {
    if (names_.size() != involution_.size())
        throw std::invalid_argument("alphabet: names and involution sizes differ");
    const int n = size();
    for (Letter x = 0; x < n; ++x) {
        Letter y = involution_[static_cast<std::size_t>(x)];
        if (y < 0 || y >= n || involution_[static_cast<std::size_t>(y)] != x)
            throw std::invalid_argument("alphabet: involution is not self-inverse");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (names_[static_cast<std::size_t>(i)] == names_[static_cast<std::size_t>(j)])
                throw std::invalid_argument("alphabet: duplicate letter name " +
                                            names_[static_cast<std::size_t>(i)]);
}

Alphabet Alphabet::with_inverses(const std::vector<std::string>& generators) {
    std::vector<std::string> names;
    std::vector<Letter> inv;
    names.reserve(generators.size() * 2);
    for (const auto& g : generators) {
        Letter i = static_cast<Letter>(names.size());
        names.push_back(g);
        names.push_back(g + "^-1");
        inv.push_back(i + 1);
        inv.push_back(i);
    }
    return Alphabet(std::move(names), std::move(inv));
}

int Alphabet::find(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.letters_.size() + b.letters_.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

Word invert_word(const Alphabet& alphabet, const Word& w) {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (int i = w.size() - 1; i >= 0; --i) out.push_back(alphabet.inverse(w[i]));
    return Word(std::move(out));
}

std::strong_ordering shortlex_compare(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() <=> v.size();
    for (int i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return u[i] <=> v[i];
    return std::strong_ordering::equal;
}

Word shortlex_successor(const Word& u, int alphabet_size) {
    if (alphabet_size <= 0) throw std::invalid_argument("shortlex_successor: empty alphabet");
    std::vector<Letter> out(u.begin(), u.end());
    const Letter last = static_cast<Letter>(alphabet_size - 1);
    int i = static_cast<int>(out.size()) - 1;
    while (i >= 0 && out[static_cast<std::size_t>(i)] == last) {
        out[static_cast<std::size_t>(i)] = 0;
        --i;
    }
    if (i >= 0) {
        ++out[static_cast<std::size_t>(i)];
    } else {
        // rolled over every position: first word of the next length
        out.assign(out.size() + 1, 0);
    }
    return Word(std::move(out));
}

} // namespace combword
