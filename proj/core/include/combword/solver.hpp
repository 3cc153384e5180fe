#pragma once

#include <cstdint>
#include <vector>

#include "combword/combing.hpp"
#include "combword/words.hpp"

namespace combword {

// Cell-count accounting for the linear-space contract: one cell per stored
// letter of each live word plus a fixed constant for automaton run state.
class SpaceMeter {
public:
    void charge(std::int64_t cells) {
        current_ += cells;
        if (current_ > peak_) peak_ = current_;
    }
    void release(std::int64_t cells) { current_ -= cells; }

    std::int64_t current_cells() const { return current_; }
    std::int64_t peak_cells() const { return peak_; }

private:
    std::int64_t current_ = 0;
    std::int64_t peak_ = 0;
};

// Finitely generated subgroup given by words over the ambient alphabet.
// The sub-alphabet B carries its own involution; the word for an inverse
// letter is the inverted word of its partner.
struct SubgroupEmbedding {
    Alphabet sub_alphabet;
    std::vector<Word> generator_words; // indexed by B-letter

    int blowup() const {
        int m = 0;
        for (const Word& w : generator_words)
            if (w.size() > m) m = w.size();
        return m;
    }

    // One ambient word per plain generator; inverse letters filled in.
    static SubgroupEmbedding from_generators(const Alphabet& ambient,
                                             const std::vector<std::string>& names,
                                             const std::vector<Word>& words);
};

// Throws InvariantError if a generator word is empty or the inverse-closure
// invariant fails.
void check_embedding(const SubgroupEmbedding& emb, const Alphabet& ambient);

// Concatenation of generator words; |result| <= blowup * |w_prime|.
Word substitute(const Word& w_prime, const SubgroupEmbedding& emb);

// Shortlex-least accepted v with accepts_pair(M_x, u, v), found by testing
// candidates in shortlex order, never past length lambda*(|u|+1)+epsilon.
// Space is metered: u's cells + the live candidate + constant run state.
// Throws SearchExhaustedError when the bound is exhausted.
Word next_normal_form_enumerative(const Combing& c, const Word& u, Letter x, SpaceMeter& meter);

// True iff eval(w) = 1, by the prefix induction u_0 = e,
// u_{i+1} = next normal form of u_i * w[i], final test against the identity
// word set. Uses only the acceptor and the multipliers; no oracle.
bool solve_enumerative(const Combing& c, const Word& w, SpaceMeter& meter);

struct FastStats {
    std::int64_t expansions = 0; // memoized configurations computed
};

// The unique accepted v with accepts_pair(M_x, u, v), found by a memoized
// forward search over (position, multiplier state) configurations.
// Requires uniqueness. Work per call is O(|u| * states * lag window).
Word next_normal_form_fast(const Combing& c, const Word& u, Letter x, FastStats* stats = nullptr);

// Same verdict as solve_enumerative; configuration expansions are bounded
// quadratically in |w|. Requires uniqueness.
bool solve_fast(const Combing& c, const Word& w, FastStats* stats = nullptr);

// solve_enumerative on the substituted word; peak cells stay linear in
// blowup * |w_prime|.
bool solve_subgroup(const Combing& c, const SubgroupEmbedding& emb, const Word& w_prime,
                    SpaceMeter& meter);

} // namespace combword
