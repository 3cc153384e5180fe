#include <random>

#include <doctest.h>

#include "combword/oracle.hpp"

#include "helpers.hpp"

using namespace combword;
using namespace combword::testutil;

namespace {

// Independent reducer: cancel one random adjacent pair at a time.
Word random_order_reduce(const Alphabet& a, Word w, std::mt19937& rng) {
    while (true) {
        std::vector<int> cancellable;
        for (int i = 0; i + 1 < w.size(); ++i)
            if (a.inverse(w[i]) == w[i + 1]) cancellable.push_back(i);
        if (cancellable.empty()) return w;
        int pick = cancellable[std::uniform_int_distribution<std::size_t>(
            0, cancellable.size() - 1)(rng)];
        std::vector<Letter> rest;
        for (int i = 0; i < w.size(); ++i)
            if (i != pick && i != pick + 1) rest.push_back(w[i]);
        w = Word(std::move(rest));
    }
}

} // namespace

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
    Alphabet a = Alphabet::with_inverses({"a", "b"});
    CHECK(free_reduce(a, Word{}) == Word{});
    CHECK(free_reduce(a, w2("aA")) == Word{});
    CHECK(free_reduce(a, w2("abBA")) == Word{});
    CHECK(free_reduce(a, w2("abBa")) == w2("aa"));
    CHECK(free_reduce(a, w2("BaAb")) == Word{});
    CHECK(free_reduce(a, w2("ab")) == w2("ab"));
    CHECK(free_reduce(a, free_reduce(a, w2("aBbAab"))) == free_reduce(a, w2("aBbAab")));
}

TEST_CASE("free reduction is confluent: any cancellation order agrees") {
    Alphabet a = Alphabet::with_inverses({"a", "b"});
    std::mt19937 rng(303);
    for (int trial = 0; trial < 300; ++trial) {
        Word w = random_word(trial % 11, a.size(), rng);
        CHECK(random_order_reduce(a, w, rng) == free_reduce(a, w));
    }
}

TEST_CASE("abelian_eval sums exponents per generator") {
    CHECK(abelian_eval(Word{}, 2) == std::vector<std::int64_t>{0, 0});
    CHECK(abelian_eval(w2("ab"), 2) == std::vector<std::int64_t>{1, 1});
    CHECK(abelian_eval(w2("aBBa"), 2) == std::vector<std::int64_t>{2, -2});
    CHECK(abelian_eval(w2("bAab"), 2) == std::vector<std::int64_t>{0, 2});
}

TEST_CASE("free oracle: canonical form, identity, geodesic length") {
    GroupOracle o = GroupOracle::free_group(2);
    CHECK(o.is_identity(w2("aA")));
    CHECK(o.is_identity(Word{}));
    CHECK_FALSE(o.is_identity(w2("abAB")));
    CHECK(o.eval(w2("abBa")) == w2("aa"));
    CHECK(o.geodesic_length(w2("abBa")) == 2);
    CHECK(o.geodesic_length(w2("aAaA")) == 0);
}

TEST_CASE("abelian oracle: commutators die, exponents survive") {
    GroupOracle o = GroupOracle::free_abelian(2);
    CHECK(o.is_identity(w2("abAB")));
    CHECK_FALSE(o.is_identity(w2("abA")));
    CHECK(o.geodesic_length(w2("abA")) == 1);
    CHECK(o.eval(w2("ba")) == o.eval(w2("ab")));
    CHECK(o.geodesic_length(w2("aabB")) == 2);
}

TEST_CASE("product oracle splits letters by factor") {
    GroupOracle o = GroupOracle::direct_product(GroupOracle::free_group(1),
                                                GroupOracle::free_group(1));
    // letters: 0 = x, 1 = x^-1 (left), 2 = y, 3 = y^-1 (right)
    CHECK(o.is_identity(Word{0, 2, 1, 3}));
    CHECK_FALSE(o.is_identity(Word{0, 2}));
    CHECK(o.geodesic_length(Word{0, 2, 3, 0}) == 2);

    auto parts = product_eval(Word{0, 2, 1, 2}, o.factors());
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == Word{});
    CHECK(parts[1] == Word{0, 0}); // factor-local letters
}

TEST_CASE("eval is a monoid homomorphism and geodesic length a norm") {
    std::mt19937 rng(404);
    std::vector<GroupOracle> oracles;
    oracles.push_back(GroupOracle::free_group(2));
    oracles.push_back(GroupOracle::free_abelian(2));
    oracles.push_back(GroupOracle::direct_product(GroupOracle::free_group(2),
                                                  GroupOracle::free_abelian(1)));
    for (const GroupOracle& o : oracles) {
        for (int trial = 0; trial < 200; ++trial) {
            Word u = random_word(trial % 8, o.alphabet().size(), rng);
            Word v = random_word((trial + 3) % 8, o.alphabet().size(), rng);
            CHECK(o.eval(u + v) == o.eval(o.eval(u) + o.eval(v)));
            CHECK(o.geodesic_length(u + v) <= o.geodesic_length(u) + o.geodesic_length(v));
            CHECK(o.eval(o.eval(u)) == o.eval(u));
            CHECK((o.geodesic_length(u) == 0) == o.is_identity(u));
            Word inv = invert_word(o.alphabet(), u);
            CHECK(o.is_identity(u + inv));
        }
    }
}
