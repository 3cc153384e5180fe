#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combword/combing.hpp"
#include "combword/oracle.hpp"
#include "combword/solver.hpp"

namespace combword {

// Surface syntax for words over a structure's alphabet. Tokens default to
// the letter names; an inverse alias (e.g. "A" for a^-1) may replace the
// canonical "a^-1" token.
struct Notation {
    enum class Mode { spaced, juxtaposed };

    Mode mode = Mode::spaced;
    std::vector<std::string> tokens; // one per letter

    Word parse(const Alphabet& alphabet, std::string_view text) const;
    std::string format(const Word& w) const; // empty word formats as ""

    bool operator==(const Notation&) const = default;
};

// A parsed structure file: the combing, its brute-force oracle when one is
// declared or implied by the builder, named subgroup embeddings, and the
// word syntax.
struct LoadedStructure {
    std::string name;
    Combing combing;
    std::optional<GroupOracle> oracle;
    std::map<std::string, SubgroupEmbedding> embeddings;
    Notation notation;
};

// Parse a structure file and construct the (invariant-checked) combing of
// its last `structure` block. Throws ParseError with line diagnostics or
// InvariantError naming the failed check.
LoadedStructure load_structure(const std::filesystem::path& path);
LoadedStructure load_structure_text(std::string_view text, const std::string& origin);

// Serialize in fully materialized (explicit-builder) form; loading the
// result reproduces the structure state-for-state.
std::string write_structure(const LoadedStructure& s);

} // namespace combword
