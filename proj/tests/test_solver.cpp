#include <random>

#include <doctest.h>

#include "combword/builders.hpp"
#include "combword/errors.hpp"
#include "combword/solver.hpp"

#include "helpers.hpp"

using namespace combword;
using namespace combword::testutil;

namespace {

const Combing& f2() {
    static Combing c = build_free_group_structure(2);
    return c;
}

const GroupOracle& f2_oracle() {
    static GroupOracle o = GroupOracle::free_group(2);
    return o;
}

Word nf(const Word& u, Letter x) {
    SpaceMeter meter;
    return next_normal_form_enumerative(f2(), u, x, meter);
}

} // namespace

TEST_CASE("next_normal_form_enumerative extends and cancels") {
    CHECK(nf(Word{}, 0) == w2("a"));
    CHECK(nf(w2("a"), 1) == Word{});
    CHECK(nf(w2("ab"), 3) == w2("a"));
    CHECK(nf(w2("ab"), 0) == w2("aba"));
}

TEST_CASE("solve_enumerative on the classic examples") {
    SpaceMeter meter;
    CHECK(solve_enumerative(f2(), Word{}, meter));
    CHECK(solve_enumerative(f2(), w2("aAbB"), meter));
    CHECK_FALSE(solve_enumerative(f2(), w2("abAB"), meter));
    CHECK_FALSE(solve_enumerative(f2(), w2("a"), meter));
    CHECK(solve_enumerative(f2(), w2("BaAb"), meter));
}

TEST_CASE("solve_enumerative agrees with the oracle exhaustively to length 5") {
    for (const Word& w : all_words(4, 5)) {
        SpaceMeter meter;
        CHECK(solve_enumerative(f2(), w, meter) == f2_oracle().is_identity(w));
    }
}

TEST_CASE("meter releases everything it charges") {
    SpaceMeter meter;
    solve_enumerative(f2(), w2("abBAba"), meter);
    CHECK(meter.current_cells() == 0);
    CHECK(meter.peak_cells() > 0);
}

TEST_CASE("next_normal_form_fast matches the enumerative step") {
    CHECK(next_normal_form_fast(f2(), Word{}, 2) == w2("b"));
    CHECK(next_normal_form_fast(f2(), w2("B"), 2) == Word{});
    CHECK(next_normal_form_fast(f2(), w2("ab"), 0) == w2("aba"));
    std::mt19937 rng(505);
    for (int trial = 0; trial < 200; ++trial) {
        Word u = random_reduced(trial % 7, f2().alphabet, rng);
        Letter x = static_cast<Letter>(trial % 4);
        SpaceMeter meter;
        CHECK(next_normal_form_fast(f2(), u, x) ==
              next_normal_form_enumerative(f2(), u, x, meter));
    }
}

TEST_CASE("solve_fast agrees with solve_enumerative on random words") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 500; ++trial) {
        Word w = random_word(trial % 10, 4, rng);
        SpaceMeter meter;
        CHECK(solve_fast(f2(), w) == solve_enumerative(f2(), w, meter));
    }
}

TEST_CASE("solvers respect inverse closure and concatenation with inverse") {
    std::mt19937 rng(707);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(trial % 8, 4, rng);
        Word inv = invert_word(f2().alphabet, w);
        SpaceMeter m1, m2, m3;
        CHECK(solve_enumerative(f2(), w, m1) == solve_enumerative(f2(), inv, m2));
        CHECK(solve_enumerative(f2(), w + inv, m3));
    }
}

TEST_CASE("exhaustion raises instead of answering") {
    Combing broken = f2();
    // a multiplier that accepts nothing leaves no next normal form
    broken.multipliers[0] = TwoTapeAutomaton(4, 1, 0, 1);
    SpaceMeter meter;
    CHECK_THROWS_AS(next_normal_form_enumerative(broken, Word{}, 0, meter),
                    SearchExhaustedError);
    CHECK_THROWS_AS(solve_enumerative(broken, w2("aA"), meter), SearchExhaustedError);
    CHECK_THROWS_AS(next_normal_form_fast(broken, Word{}, 0), NoSolutionError);
}

TEST_CASE("the fast step detects ambiguity") {
    // acceptor with two words for the identity: e and a a^-1
    Combing toy;
    toy.alphabet = Alphabet::with_inverses({"a"});
    toy.acceptor = Fsa(2, 3, 0);
    toy.acceptor.accepting[0] = toy.acceptor.accepting[2] = true;
    toy.acceptor.set_transition(0, 0, 1);
    toy.acceptor.set_transition(1, 1, 2);
    GroupOracle o = GroupOracle::free_group(1);
    toy.multipliers.push_back(build_multiplier_from_differences(toy.acceptor, o, kIdentityLetter, 2));
    toy.multipliers.push_back(build_multiplier_from_differences(toy.acceptor, o, kIdentityLetter, 2));
    toy.uniqueness = true; // a lie the solver must expose
    CHECK_THROWS_AS(next_normal_form_fast(toy, Word{}, 0), AmbiguityError);
}

TEST_CASE("subgroup embeddings substitute and solve") {
    Combing fa = build_free_group_structure(2);
    fa.alphabet = Alphabet::with_inverses({"a1", "b1"});
    GroupOracle oa = GroupOracle::free_group(2);
    Combing fb = build_free_group_structure(2);
    fb.alphabet = Alphabet::with_inverses({"a2", "b2"});
    Combing p = build_direct_product(fa, fb, oa, oa);
    GroupOracle po = GroupOracle::direct_product(oa, oa);
    // ambient letters: a1=0 A1=1 b1=2 B1=3 a2=4 A2=5 b2=6 B2=7
    SubgroupEmbedding diag = SubgroupEmbedding::from_generators(
        p.alphabet, {"da", "db"}, {Word{0, 4}, Word{2, 6}});
    CHECK_NOTHROW(check_embedding(diag, p.alphabet));
    CHECK(diag.blowup() == 2);
    CHECK(substitute(Word{0, 2}, diag) == Word{0, 4, 2, 6});
    CHECK(substitute(Word{0, 1}, diag) == Word{0, 4, 5, 1});

    SpaceMeter meter;
    CHECK(solve_subgroup(p, diag, Word{0, 1}, meter));           // da da^-1
    CHECK_FALSE(solve_subgroup(p, diag, Word{0, 2, 1, 3}, meter)); // diagonal commutator
    CHECK_FALSE(solve_subgroup(p, diag, Word{0}, meter));

    // x = a1 a2^-1, y = b1 a2^-1, z = b2 a2^-1 satisfy x y^-1 z y x^-1 z^-1 = 1
    SubgroupEmbedding mixed = SubgroupEmbedding::from_generators(
        p.alphabet, {"x", "y", "z"}, {Word{0, 5}, Word{2, 5}, Word{6, 5}});
    Word relator{0, 3, 4, 2, 1, 5}; // x y^-1 z y x^-1 z^-1 in sub-letters
    CHECK(po.is_identity(substitute(relator, mixed)));
    CHECK(solve_subgroup(p, mixed, relator, meter));
    CHECK_FALSE(solve_subgroup(p, mixed, Word{0, 2}, meter));
}

TEST_CASE("embedding invariants are enforced") {
    Alphabet a = Alphabet::with_inverses({"a", "b"});
    SubgroupEmbedding emb;
    emb.sub_alphabet = Alphabet::with_inverses({"h"});
    emb.generator_words = {Word{0, 2}, Word{0, 3}}; // wrong inverse word
    CHECK_THROWS_AS(check_embedding(emb, a), InvariantError);
    emb.generator_words = {Word{}, Word{}};
    CHECK_THROWS_AS(check_embedding(emb, a), InvariantError);
}
