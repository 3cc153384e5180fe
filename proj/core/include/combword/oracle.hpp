#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "combword/words.hpp"

namespace combword {

// Stack sweep: delete adjacent cancelling pairs until none remain.
// Idempotent; the result is the unique freely reduced word.
Word free_reduce(const Alphabet& alphabet, const Word& w);

// Exponent-sum vector of w in Z^rank. Letters follow the interleaved
// layout g0, g0^-1, g1, g1^-1, ...
std::vector<std::int64_t> abelian_eval(const Word& w, int rank);

// Brute-force ground truth for free groups, free abelian groups, and their
// direct products. Canonical elements are words in a fixed normal form over
// the oracle's own alphabet, so equality, inversion and length are exact.
//
// Used only by tests, validators and builders; the solvers never see it.
class GroupOracle {
public:
    enum class Kind { free, abelian, product };

    static GroupOracle free_group(int rank);
    static GroupOracle free_abelian(int rank);
    static GroupOracle direct_product(GroupOracle left, GroupOracle right);

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<GroupOracle>& factors() const { return factors_; }

    // Canonical word of the element w evaluates to. A monoid homomorphism:
    // eval(uv) = eval(eval(u) + eval(v)).
    Word eval(const Word& w) const;

    // Geodesic length of the element: the canonical word is geodesic for
    // every supported kind.
    std::int64_t geodesic_length(const Word& w) const { return eval(w).size(); }

    bool is_identity(const Word& w) const { return eval(w).empty(); }

private:
    GroupOracle() = default;
    Kind kind_ = Kind::free;
    int rank_ = 0;
    Alphabet alphabet_;
    std::vector<GroupOracle> factors_;
    std::vector<int> factor_offsets_; // letter offset of each product factor
};

// Per-factor canonical evaluation of the subsequence of each factor's
// letters. Letters are numbered consecutively across the factor alphabets.
std::vector<Word> product_eval(const Word& w, const std::vector<GroupOracle>& factors);

// Geodesic length of eval(w); convenience over GroupOracle::geodesic_length.
std::int64_t geodesic_length(const GroupOracle& o, const Word& w);

} // namespace combword
