#include "combword/oracle.hpp"

#include <stdexcept>

#include "combword/errors.hpp"

namespace combword {

Word free_reduce(const Alphabet& alphabet, const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(static_cast<std::size_t>(w.size()));
    for (Letter x : w) {
        if (!stack.empty() && stack.back() == alphabet.inverse(x))
            stack.pop_back();
        else
            stack.push_back(x);
    }
    return Word(std::move(stack));
}

std::vector<std::int64_t> abelian_eval(const Word& w, int rank) {
    std::vector<std::int64_t> exps(static_cast<std::size_t>(rank), 0);
    for (Letter x : w) {
        int g = x / 2;
        if (g < 0 || g >= rank) throw UnknownLetterError("abelian_eval: letter out of range");
        exps[static_cast<std::size_t>(g)] += (x % 2 == 0) ? 1 : -1;
    }
    return exps;
}

namespace {

std::vector<std::string> numbered_generators(const std::string& stem, int rank) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

} // namespace

GroupOracle GroupOracle::free_group(int rank) {
    if (rank < 1) throw std::invalid_argument("free_group: rank must be positive");
    GroupOracle o;
    o.kind_ = Kind::free;
    o.rank_ = rank;
    o.alphabet_ = Alphabet::with_inverses(numbered_generators("x", rank));
    return o;
}

GroupOracle GroupOracle::free_abelian(int rank) {
    if (rank < 1) throw std::invalid_argument("free_abelian: rank must be positive");
    GroupOracle o;
    o.kind_ = Kind::abelian;
    o.rank_ = rank;
    o.alphabet_ = Alphabet::with_inverses(numbered_generators("t", rank));
    return o;
}

GroupOracle GroupOracle::direct_product(GroupOracle left, GroupOracle right) {
    GroupOracle o;
    o.kind_ = Kind::product;
    // flatten nested products so factor lookup stays a single scan
    auto append = [&o](GroupOracle& f, int idx) {
        if (f.kind_ == Kind::product) {
            for (auto& sub : f.factors_) {
                o.factor_offsets_.push_back(o.factor_offsets_.empty()
                                                ? 0
                                                : o.factor_offsets_.back() +
                                                      o.factors_.back().alphabet().size());
                o.factors_.push_back(std::move(sub));
            }
            (void)idx;
        } else {
            o.factor_offsets_.push_back(o.factor_offsets_.empty()
                                            ? 0
                                            : o.factor_offsets_.back() +
                                                  o.factors_.back().alphabet().size());
            o.factors_.push_back(std::move(f));
        }
    };
    append(left, 0);
    append(right, 1);

    std::vector<std::string> names;
    std::vector<Letter> inv;
    for (std::size_t fi = 0; fi < o.factors_.size(); ++fi) {
        const Alphabet& fa = o.factors_[fi].alphabet();
        Letter base = static_cast<Letter>(names.size());
        for (Letter x = 0; x < fa.size(); ++x) {
            names.push_back("f" + std::to_string(fi) + "." + fa.name(x));
            inv.push_back(base + fa.inverse(x));
        }
    }
    o.alphabet_ = Alphabet(std::move(names), std::move(inv));
    return o;
}

Word GroupOracle::eval(const Word& w) const {
    switch (kind_) {
    case Kind::free:
        return free_reduce(alphabet_, w);
    case Kind::abelian: {
        auto exps = abelian_eval(w, rank_);
        std::vector<Letter> out;
        for (int g = 0; g < rank_; ++g) {
            std::int64_t e = exps[static_cast<std::size_t>(g)];
            Letter x = e >= 0 ? static_cast<Letter>(2 * g) : static_cast<Letter>(2 * g + 1);
            for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) out.push_back(x);
        }
        return Word(std::move(out));
    }
    case Kind::product: {
        auto parts = product_eval(w, factors_);
        std::vector<Letter> out;
        for (std::size_t fi = 0; fi < parts.size(); ++fi) {
            Letter off = static_cast<Letter>(factor_offsets_[fi]);
            for (Letter x : parts[fi]) out.push_back(off + x);
        }
        return Word(std::move(out));
    }
    }
    throw std::logic_error("unreachable");
}

std::vector<Word> product_eval(const Word& w, const std::vector<GroupOracle>& factors) {
    std::vector<Word> parts(factors.size());
    std::vector<int> offsets;
    int total = 0;
    for (const auto& f : factors) {
        offsets.push_back(total);
        total += f.alphabet().size();
    }
    for (Letter x : w) {
        if (x < 0 || x >= total) throw UnknownLetterError("product_eval: letter out of range");
        std::size_t fi = 0;
        while (fi + 1 < factors.size() && x >= offsets[fi + 1]) ++fi;
        parts[fi].push_back(x - static_cast<Letter>(offsets[fi]));
    }
    for (std::size_t fi = 0; fi < factors.size(); ++fi) parts[fi] = factors[fi].eval(parts[fi]);
    return parts;
}

std::int64_t geodesic_length(const GroupOracle& o, const Word& w) {
    return o.geodesic_length(w);
}

} // namespace combword
