#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace combword {

using Letter = std::int32_t;

// Finite monoid generating set closed under formal inversion.
// Letters are dense indices; the involution maps each letter to its inverse.
// Surface syntax (aliases, ^-1 notation) is resolved at the file/CLI layer.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::vector<std::string> names, std::vector<Letter> involution);

    // Interleaved layout: g0, g0^-1, g1, g1^-1, ...
    static Alphabet with_inverses(const std::vector<std::string>& generators);

    int size() const { return static_cast<int>(names_.size()); }
    Letter inverse(Letter x) const { return involution_[static_cast<std::size_t>(x)]; }
    const std::string& name(Letter x) const { return names_[static_cast<std::size_t>(x)]; }
    int find(std::string_view name) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<Letter> involution_;
};

// Element of the free monoid A*: a finite sequence of letter indices.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter x) { letters_.push_back(x); }
    void pop_back() { letters_.pop_back(); }
    void clear() { letters_.clear(); }
    Letter back() const { return letters_.back(); }

    const std::vector<Letter>& letters() const { return letters_; }

    friend Word operator+(const Word& a, const Word& b);
    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (Letter x : w) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Reversed sequence of inverted letters; an involutive anti-homomorphism.
Word invert_word(const Alphabet& alphabet, const Word& w);

// Shorter first, then lexicographic by letter index.
std::strong_ordering shortlex_compare(const Word& u, const Word& v);

// Immediate successor in shortlex order over an alphabet of the given size.
// Iterating from the empty word enumerates all of A*.
Word shortlex_successor(const Word& u, int alphabet_size);

} // namespace combword
