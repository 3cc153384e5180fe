#include <algorithm>
#include <random>

#include <doctest.h>

#include "combword/words.hpp"

#include "helpers.hpp"

using namespace combword;
using namespace combword::testutil;

TEST_CASE("alphabet with inverses uses the interleaved layout") {
    Alphabet a = Alphabet::with_inverses({"a", "b"});
    CHECK(a.size() == 4);
    CHECK(a.name(0) == "a");
    CHECK(a.name(1) == "a^-1");
    CHECK(a.name(2) == "b");
    CHECK(a.name(3) == "b^-1");
    for (Letter x = 0; x < a.size(); ++x) {
        CHECK(a.inverse(a.inverse(x)) == x);
        CHECK(a.inverse(x) != x);
    }
    CHECK(a.find("b^-1") == 3);
    CHECK(a.find("c") == -1);
}

TEST_CASE("invert_word reverses and inverts letterwise") {
    Alphabet a = Alphabet::with_inverses({"a", "b"});
    CHECK(invert_word(a, Word{}) == Word{});
    CHECK(invert_word(a, w2("a")) == w2("A"));
    CHECK(invert_word(a, w2("ab")) == w2("BA"));
    CHECK(invert_word(a, w2("aBa")) == w2("AbA"));
}

TEST_CASE("invert_word is an involution on random words") {
    std::mt19937 rng(101);
    for (int rank = 1; rank <= 3; ++rank) {
        std::vector<std::string> names;
        for (int i = 0; i < rank; ++i) names.push_back("g" + std::to_string(i));
        Alphabet a = Alphabet::with_inverses(names);
        for (int trial = 0; trial < 200; ++trial) {
            Word w = random_word(trial % 9, a.size(), rng);
            CHECK(invert_word(a, invert_word(a, w)) == w);
        }
    }
}

TEST_CASE("shortlex_compare orders by length then letter index") {
    CHECK(shortlex_compare(Word{}, w2("a")) == std::strong_ordering::less);
    CHECK(shortlex_compare(w2("B"), w2("aa")) == std::strong_ordering::less);
    CHECK(shortlex_compare(w2("ab"), w2("aB")) == std::strong_ordering::less);
    CHECK(shortlex_compare(w2("ab"), w2("ab")) == std::strong_ordering::equal);
    CHECK(shortlex_compare(w2("ba"), w2("aB")) == std::strong_ordering::greater);
}

TEST_CASE("shortlex_compare is a total order") {
    std::mt19937 rng(202);
    auto as_less = [](const Word& u, const Word& v) {
        return shortlex_compare(u, v) == std::strong_ordering::less;
    };
    for (int trial = 0; trial < 300; ++trial) {
        Word u = random_word(trial % 6, 4, rng);
        Word v = random_word((trial + 1) % 6, 4, rng);
        Word w = random_word((trial + 2) % 6, 4, rng);
        // antisymmetry
        CHECK((shortlex_compare(u, v) == std::strong_ordering::equal) == (u == v));
        if (!(u == v)) CHECK(as_less(u, v) != as_less(v, u));
        // transitivity
        if (as_less(u, v) && as_less(v, w)) CHECK(as_less(u, w));
    }
}

TEST_CASE("shortlex_successor walks the order") {
    CHECK(shortlex_successor(Word{}, 4) == w2("a"));
    CHECK(shortlex_successor(w2("a"), 4) == w2("A"));
    CHECK(shortlex_successor(w2("B"), 4) == w2("aa"));
    CHECK(shortlex_successor(w2("aB"), 4) == w2("Aa"));
    CHECK(shortlex_successor(w2("BB"), 4) == w2("aaa"));
}

TEST_CASE("successor iteration enumerates A* soundly and completely") {
    for (int size = 1; size <= 6; ++size) {
        std::vector<Word> expected = all_words(size, 3);
        std::sort(expected.begin(), expected.end(), [](const Word& u, const Word& v) {
            return shortlex_compare(u, v) == std::strong_ordering::less;
        });
        std::vector<Word> got;
        Word w;
        while (w.size() <= 3) {
            got.push_back(w);
            w = shortlex_successor(w, size);
        }
        REQUIRE(got.size() == expected.size());
        CHECK(got == expected);
    }
}
