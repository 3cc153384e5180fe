#include <algorithm>

#include <doctest.h>

#include "combword/builders.hpp"
#include "combword/errors.hpp"
#include "combword/fsa.hpp"

#include "helpers.hpp"

using namespace combword;
using namespace combword::testutil;

namespace {

bool is_reduced(const Alphabet& a, const Word& w) {
    for (int i = 0; i + 1 < w.size(); ++i)
        if (a.inverse(w[i]) == w[i + 1]) return false;
    return true;
}

} // namespace

TEST_CASE("rank-2 acceptor matches the naive reducedness check up to length 6") {
    Combing c = build_free_group_structure(2);
    CHECK(c.acceptor.num_states == 5);
    CHECK(accepts(c.acceptor, Word{}));
    CHECK(accepts(c.acceptor, w2("ab")));
    CHECK(accepts(c.acceptor, w2("aBab")));
    CHECK_FALSE(accepts(c.acceptor, w2("aA")));
    CHECK_FALSE(accepts(c.acceptor, w2("abBa")));
    for (const Word& w : all_words(4, 6))
        CHECK(accepts(c.acceptor, w) == is_reduced(c.alphabet, w));
}

TEST_CASE("undefined transitions reject") {
    Fsa m(2, 2, 0);
    m.accepting[1] = true;
    m.set_transition(0, 0, 1);
    CHECK(accepts(m, Word{0}));
    CHECK_FALSE(accepts(m, Word{1}));
    CHECK_FALSE(accepts(m, Word{0, 0}));
    CHECK_FALSE(accepts(m, Word{}));
}

TEST_CASE("enumerate_accepted returns shortlex order, sound and complete") {
    Combing c = build_free_group_structure(2);
    CHECK(enumerate_accepted(c.acceptor, 0) == std::vector<Word>{Word{}});
    CHECK(enumerate_accepted(c.acceptor, 1).size() == 5);
    CHECK(enumerate_accepted(c.acceptor, 2).size() == 17);

    auto words = enumerate_accepted(c.acceptor, 5);
    for (std::size_t i = 0; i + 1 < words.size(); ++i)
        CHECK(shortlex_compare(words[i], words[i + 1]) == std::strong_ordering::less);
    std::size_t reduced_count = 0;
    for (const Word& w : all_words(4, 5))
        if (is_reduced(c.alphabet, w)) ++reduced_count;
    CHECK(words.size() == reduced_count);
    for (const Word& w : words) CHECK(is_reduced(c.alphabet, w));
}

TEST_CASE("accepts_pair on free multipliers") {
    Combing c = build_free_group_structure(2);
    const TwoTapeAutomaton& ma = c.multipliers[0];
    CHECK(accepts_pair(ma, Word{}, w2("a")));
    CHECK(accepts_pair(ma, w2("A"), Word{}));
    CHECK(accepts_pair(ma, w2("b"), w2("ba")));
    CHECK(accepts_pair(ma, w2("aA"), w2("a")) == false); // left word not accepted
    CHECK_FALSE(accepts_pair(ma, w2("b"), w2("a")));
    CHECK_FALSE(accepts_pair(ma, w2("a"), w2("a")));
    CHECK_FALSE(accepts_pair(ma, Word{}, w2("aaa"))); // lag exceeds the bound
}

TEST_CASE("padding discipline holds for built multipliers and catches violations") {
    Combing c = build_free_group_structure(2);
    for (const auto& m : c.multipliers) CHECK_NOTHROW(check_padding_discipline(m));

    TwoTapeAutomaton bad(1, 2, 0, 2);
    bad.accepting[1] = true;
    bad.set_transition(0, kPad, 0, 1); // left tape padded...
    bad.set_transition(1, 0, 0, 1);    // ...then resumed
    CHECK_THROWS_AS(check_padding_discipline(bad), InvariantError);
}
