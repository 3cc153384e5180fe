#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "combword/words.hpp"

namespace combword::testutil {

// Rank-2 interleaved layout: a=0, A=1, b=2, B=3.
inline Word w2(std::string_view s) {
    Word w;
    for (char ch : s) {
        switch (ch) {
        case 'a': w.push_back(0); break;
        case 'A': w.push_back(1); break;
        case 'b': w.push_back(2); break;
        case 'B': w.push_back(3); break;
        default: break;
        }
    }
    return w;
}

inline std::vector<Word> all_words(int alphabet_size, int max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Letter x = 0; x < alphabet_size; ++x) {
                Word w = out[i];
                w.push_back(x);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

inline Word random_word(int len, int alphabet_size, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, alphabet_size - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(dist(rng)));
    return w;
}

inline Word random_reduced(int len, const Alphabet& a, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, a.size() - 1);
    Word w;
    while (w.size() < len) {
        Letter x = static_cast<Letter>(dist(rng));
        if (!w.empty() && a.inverse(w.back()) == x) continue;
        w.push_back(x);
    }
    return w;
}

} // namespace combword::testutil
