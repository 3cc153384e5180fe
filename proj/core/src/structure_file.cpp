#include "combword/structure_file.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "combword/builders.hpp"
#include "combword/errors.hpp"

namespace combword {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

struct Cursor {
    std::string origin;
    std::vector<std::vector<std::string>> lines; // tokenized, comments stripped
    std::vector<int> line_numbers;
    std::size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    const std::vector<std::string>& peek() const { return lines[pos]; }
    int line() const {
        return pos < line_numbers.size() ? line_numbers[pos]
                                         : (line_numbers.empty() ? 0 : line_numbers.back());
    }
    void advance() { ++pos; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(origin, line(), msg); }
};

Cursor make_cursor(std::string_view text, const std::string& origin) {
    Cursor c;
    c.origin = origin;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        c.lines.push_back(std::move(tokens));
        c.line_numbers.push_back(lineno);
    }
    return c;
}

int parse_int(Cursor& cur, const std::string& token) {
    try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        cur.fail("expected an integer, got '" + token + "'");
    }
}

Rational parse_rational(Cursor& cur, const std::string& token) {
    auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(parse_int(cur, token));
    return Rational(parse_int(cur, token.substr(0, slash)),
                    parse_int(cur, token.substr(slash + 1)));
}

// Letter lookup: canonical names plus notation tokens (aliases).
struct LetterTable {
    std::map<std::string, Letter, std::less<>> map;

    static LetterTable build(const Alphabet& a, const Notation& n) {
        LetterTable t;
        for (Letter x = 0; x < a.size(); ++x) {
            t.map[a.name(x)] = x;
            t.map[n.tokens[static_cast<std::size_t>(x)]] = x;
        }
        return t;
    }
    int find(std::string_view tok) const {
        auto it = map.find(tok);
        return it == map.end() ? -1 : it->second;
    }
};

GroupOracle parse_oracle_spec(Cursor& cur, const std::vector<std::string>& tokens,
                              std::size_t& i) {
    if (i >= tokens.size()) cur.fail("truncated oracle specification");
    const std::string& kind = tokens[i++];
    if (kind == "free" || kind == "abelian") {
        if (i >= tokens.size()) cur.fail("oracle " + kind + " needs a rank");
        int rank = parse_int(cur, tokens[i++]);
        return kind == "free" ? GroupOracle::free_group(rank) : GroupOracle::free_abelian(rank);
    }
    if (kind == "product") {
        if (i >= tokens.size()) cur.fail("oracle product needs a factor count");
        int n = parse_int(cur, tokens[i++]);
        if (n < 2) cur.fail("oracle product needs at least two factors");
        GroupOracle acc = parse_oracle_spec(cur, tokens, i);
        for (int k = 1; k < n; ++k)
            acc = GroupOracle::direct_product(std::move(acc), parse_oracle_spec(cur, tokens, i));
        return acc;
    }
    cur.fail("unknown oracle kind '" + kind + "'");
}

struct FsaSection {
    int states = -1;
    int initial = -1;
    std::vector<int> accepting;
    std::vector<std::array<int, 3>> edges; // from, letter, to
};

struct MultSection {
    Letter letter = -1;
    int states = -1;
    int initial = -1;
    int max_lag = 0;
    std::vector<int> accepting;
    std::vector<std::array<int, 4>> edges; // from, p, q, to (kPad for '-')
};

void check_state(Cursor& cur, int s, int n, const char* what) {
    if (s < 0 || s >= n) cur.fail(std::string(what) + " state " + std::to_string(s) +
                                  " out of range (states " + std::to_string(n) + ")");
}

Fsa finish_acceptor(Cursor& cur, const FsaSection& sec, int alphabet_size) {
    if (sec.states < 1) cur.fail("acceptor needs a positive 'states' count");
    if (sec.initial < 0) cur.fail("acceptor needs an 'initial' state");
    check_state(cur, sec.initial, sec.states, "initial");
    Fsa m(alphabet_size, sec.states, sec.initial);
    for (int s : sec.accepting) {
        check_state(cur, s, sec.states, "accepting");
        m.accepting[static_cast<std::size_t>(s)] = true;
    }
    for (const auto& e : sec.edges) {
        check_state(cur, e[0], sec.states, "edge source");
        check_state(cur, e[2], sec.states, "edge target");
        if (m.next(e[0], e[1]) >= 0)
            cur.fail("duplicate transition from state " + std::to_string(e[0]) +
                     " (nondeterministic acceptor)");
        m.set_transition(e[0], e[1], e[2]);
    }
    return m;
}

TwoTapeAutomaton finish_multiplier(Cursor& cur, const MultSection& sec, int alphabet_size) {
    if (sec.states < 1) cur.fail("multiplier needs a positive 'states' count");
    if (sec.initial < 0) cur.fail("multiplier needs an 'initial' state");
    check_state(cur, sec.initial, sec.states, "initial");
    TwoTapeAutomaton m(alphabet_size, sec.states, sec.initial, sec.max_lag);
    for (int s : sec.accepting) {
        check_state(cur, s, sec.states, "accepting");
        m.accepting[static_cast<std::size_t>(s)] = true;
    }
    for (const auto& e : sec.edges) {
        check_state(cur, e[0], sec.states, "edge source");
        check_state(cur, e[3], sec.states, "edge target");
        if (e[1] == kPad && e[2] == kPad) cur.fail("pair letter (-,-) is not allowed");
        if (m.next(e[0], e[1], e[2]) >= 0)
            cur.fail("duplicate transition from state " + std::to_string(e[0]) +
                     " (nondeterministic multiplier)");
        m.set_transition(e[0], e[1], e[2], e[3]);
    }
    return m;
}

struct StructureBlock {
    std::string name;
    std::vector<std::string> generators;
    std::map<std::string, std::string> aliases; // generator -> inverse alias
    Notation::Mode mode = Notation::Mode::spaced;
    bool mode_set = false;
    std::string builder;
    std::vector<std::string> builder_args;
    std::optional<Rational> lambda, epsilon;
    std::optional<int> fellow_traveler;
    std::vector<int> departure;
    std::optional<bool> uniqueness;
    std::optional<GroupOracle> oracle;
    std::optional<FsaSection> acceptor;
    std::vector<MultSection> multipliers;
    std::vector<Word> identity_words;
    bool identity_words_set = false;
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>>
        subgroups; // name -> (generator name, word text)
};

} // namespace

Word Notation::parse(const Alphabet& alphabet, std::string_view text) const {
    LetterTable table = LetterTable::build(alphabet, *this);
    Word out;
    if (mode == Mode::spaced) {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            int x = table.find(tok);
            if (x < 0) throw UnknownLetterError("unknown letter '" + tok + "'");
            out.push_back(static_cast<Letter>(x));
        }
    } else {
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            int x = table.find(std::string_view(&ch, 1));
            if (x < 0)
                throw UnknownLetterError(std::string("unknown letter '") + ch + "'");
            out.push_back(static_cast<Letter>(x));
        }
    }
    return out;
}

std::string Notation::format(const Word& w) const {
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (mode == Mode::spaced && i > 0) out += ' ';
        out += tokens[static_cast<std::size_t>(w[i])];
    }
    return out;
}

namespace {

StructureBlock parse_structure_block(Cursor& cur) {
    StructureBlock b;
    if (cur.peek().size() != 2) cur.fail("expected: structure <name>");
    b.name = cur.peek()[1];
    cur.advance();

    // letters known once 'generators' has been seen (explicit builder) or the
    // block ends (free/product builders resolve letters differently)
    std::optional<Alphabet> alphabet;
    std::optional<Notation> notation;
    auto require_letters = [&]() -> LetterTable {
        if (!alphabet) cur.fail("'generators' must come before sections that use letters");
        return LetterTable::build(*alphabet, *notation);
    };
    auto resolve_letter = [&](const LetterTable& t, const std::string& tok) {
        int x = t.find(tok);
        if (x < 0) cur.fail("unknown letter '" + tok + "'");
        return static_cast<Letter>(x);
    };
    auto build_notation = [&]() {
        try {
            alphabet = Alphabet::with_inverses(b.generators);
        } catch (const std::invalid_argument& e) {
            cur.fail(e.what());
        }
        Notation n;
        n.mode = b.mode;
        for (Letter x = 0; x < alphabet->size(); ++x) n.tokens.push_back(alphabet->name(x));
        for (const auto& [gen, alias] : b.aliases) {
            int g = alphabet->find(gen);
            if (g < 0) cur.fail("inverse-alias for unknown generator '" + gen + "'");
            n.tokens[static_cast<std::size_t>(alphabet->inverse(static_cast<Letter>(g)))] = alias;
        }
        notation = std::move(n);
    };

    while (true) {
        if (cur.done()) cur.fail("unterminated structure block (missing 'end')");
        const auto tokens = cur.peek();
        const std::string& key = tokens[0];
        if (key == "end") {
            cur.advance();
            break;
        } else if (key == "generators") {
            if (tokens.size() < 2) cur.fail("'generators' needs at least one name");
            if (!b.generators.empty()) cur.fail("duplicate 'generators' line");
            b.generators.assign(tokens.begin() + 1, tokens.end());
            cur.advance();
            build_notation();
        } else if (key == "inverse-alias") {
            if (tokens.size() != 3) cur.fail("expected: inverse-alias <generator> <alias>");
            b.aliases[tokens[1]] = tokens[2];
            cur.advance();
            if (alphabet) build_notation();
        } else if (key == "word-syntax") {
            if (tokens.size() != 2 || (tokens[1] != "spaced" && tokens[1] != "juxtaposed"))
                cur.fail("expected: word-syntax spaced|juxtaposed");
            b.mode = tokens[1] == "spaced" ? Notation::Mode::spaced : Notation::Mode::juxtaposed;
            b.mode_set = true;
            cur.advance();
            if (alphabet) build_notation();
        } else if (key == "builder") {
            if (tokens.size() < 2) cur.fail("expected: builder free|product|explicit ...");
            b.builder = tokens[1];
            b.builder_args.assign(tokens.begin() + 2, tokens.end());
            if (b.builder == "free" && !b.builder_args.empty())
                cur.fail("builder free takes no arguments; rank is the generator count");
            if (b.builder == "product" && b.builder_args.size() != 2)
                cur.fail("expected: builder product <structure> <structure>");
            if (b.builder != "free" && b.builder != "product" && b.builder != "explicit")
                cur.fail("unknown builder '" + b.builder + "'");
            cur.advance();
        } else if (key == "lambda" || key == "epsilon") {
            if (tokens.size() != 2) cur.fail("expected: " + key + " <rational>");
            (key == "lambda" ? b.lambda : b.epsilon) = parse_rational(cur, tokens[1]);
            cur.advance();
        } else if (key == "fellow-traveler") {
            if (tokens.size() != 2) cur.fail("expected: fellow-traveler <integer>");
            b.fellow_traveler = parse_int(cur, tokens[1]);
            cur.advance();
        } else if (key == "departure") {
            if (tokens.size() >= 2 && tokens[1] == "identity") {
                if (tokens.size() != 3) cur.fail("expected: departure identity <length>");
                int n = parse_int(cur, tokens[2]);
                for (int i = 1; i <= n; ++i) b.departure.push_back(i);
            } else {
                for (std::size_t i = 1; i < tokens.size(); ++i)
                    b.departure.push_back(parse_int(cur, tokens[i]));
            }
            cur.advance();
        } else if (key == "uniqueness") {
            if (tokens.size() != 2 || (tokens[1] != "true" && tokens[1] != "false"))
                cur.fail("expected: uniqueness true|false");
            b.uniqueness = tokens[1] == "true";
            cur.advance();
        } else if (key == "oracle") {
            std::size_t i = 1;
            b.oracle = parse_oracle_spec(cur, tokens, i);
            if (i != tokens.size()) cur.fail("trailing tokens after oracle specification");
            cur.advance();
        } else if (key == "acceptor") {
            if (b.acceptor) cur.fail("duplicate acceptor section");
            LetterTable table = require_letters();
            FsaSection sec;
            cur.advance();
            while (true) {
                if (cur.done()) cur.fail("unterminated acceptor section");
                const auto t = cur.peek();
                if (t[0] == "end") {
                    cur.advance();
                    break;
                } else if (t[0] == "states" && t.size() == 2) {
                    sec.states = parse_int(cur, t[1]);
                } else if (t[0] == "initial" && t.size() == 2) {
                    sec.initial = parse_int(cur, t[1]);
                } else if (t[0] == "accepting") {
                    for (std::size_t i = 1; i < t.size(); ++i)
                        sec.accepting.push_back(parse_int(cur, t[i]));
                } else if (t[0] == "edge" && t.size() == 4) {
                    sec.edges.push_back({parse_int(cur, t[1]), resolve_letter(table, t[2]),
                                         parse_int(cur, t[3])});
                } else {
                    cur.fail("unexpected line in acceptor section");
                }
                cur.advance();
            }
            b.acceptor = std::move(sec);
        } else if (key == "multiplier") {
            if (tokens.size() != 2) cur.fail("expected: multiplier <letter>");
            LetterTable table = require_letters();
            MultSection sec;
            sec.letter = resolve_letter(table, tokens[1]);
            cur.advance();
            while (true) {
                if (cur.done()) cur.fail("unterminated multiplier section");
                const auto t = cur.peek();
                if (t[0] == "end") {
                    cur.advance();
                    break;
                } else if (t[0] == "states" && t.size() == 2) {
                    sec.states = parse_int(cur, t[1]);
                } else if (t[0] == "initial" && t.size() == 2) {
                    sec.initial = parse_int(cur, t[1]);
                } else if (t[0] == "max-lag" && t.size() == 2) {
                    sec.max_lag = parse_int(cur, t[1]);
                } else if (t[0] == "accepting") {
                    for (std::size_t i = 1; i < t.size(); ++i)
                        sec.accepting.push_back(parse_int(cur, t[i]));
                } else if (t[0] == "edge" && t.size() == 5) {
                    int p = t[2] == "-" ? kPad : resolve_letter(table, t[2]);
                    int q = t[3] == "-" ? kPad : resolve_letter(table, t[3]);
                    sec.edges.push_back({parse_int(cur, t[1]), p, q, parse_int(cur, t[4])});
                } else {
                    cur.fail("unexpected line in multiplier section");
                }
                cur.advance();
            }
            b.multipliers.push_back(std::move(sec));
        } else if (key == "identity-words") {
            LetterTable table = require_letters();
            cur.advance();
            b.identity_words_set = true;
            while (true) {
                if (cur.done()) cur.fail("unterminated identity-words section");
                const auto t = cur.peek();
                if (t[0] == "end") {
                    cur.advance();
                    break;
                } else if (t[0] == "word") {
                    Word w;
                    for (std::size_t i = 1; i < t.size(); ++i)
                        w.push_back(resolve_letter(table, t[i]));
                    b.identity_words.push_back(std::move(w));
                } else {
                    cur.fail("unexpected line in identity-words section");
                }
                cur.advance();
            }
        } else if (key == "subgroup") {
            if (tokens.size() != 2) cur.fail("expected: subgroup <name>");
            std::vector<std::pair<std::string, std::string>> gens;
            cur.advance();
            while (true) {
                if (cur.done()) cur.fail("unterminated subgroup section");
                const auto t = cur.peek();
                if (t[0] == "end") {
                    cur.advance();
                    break;
                } else if (t[0] == "generator" && t.size() >= 3) {
                    std::string text;
                    for (std::size_t i = 2; i < t.size(); ++i) {
                        if (!text.empty()) text += ' ';
                        text += t[i];
                    }
                    gens.emplace_back(t[1], std::move(text));
                } else {
                    cur.fail("expected: generator <name> <word>");
                }
                cur.advance();
            }
            b.subgroups.emplace_back(tokens[1], std::move(gens));
        } else {
            cur.fail("unknown keyword '" + key + "'");
        }
    }
    if (b.builder.empty()) cur.fail("structure '" + b.name + "' declares no builder");
    return b;
}

LoadedStructure assemble(Cursor& cur, const StructureBlock& b,
                         const std::map<std::string, LoadedStructure>& registry) {
    LoadedStructure out;
    out.name = b.name;

    auto forbid_explicit_fields = [&](const char* builder) {
        if (b.lambda || b.epsilon || b.fellow_traveler || !b.departure.empty() ||
            b.uniqueness || b.oracle || b.acceptor || !b.multipliers.empty() ||
            b.identity_words_set)
            cur.fail(std::string("field only allowed with builder explicit (builder ") +
                     builder + " derives it)");
    };

    if (b.builder == "free") {
        forbid_explicit_fields("free");
        if (b.generators.empty()) cur.fail("builder free needs a 'generators' line");
        out.combing = build_free_group_structure(static_cast<int>(b.generators.size()));
        out.combing.alphabet = Alphabet::with_inverses(b.generators);
        out.oracle = GroupOracle::free_group(static_cast<int>(b.generators.size()));
    } else if (b.builder == "product") {
        forbid_explicit_fields("product");
        if (!b.generators.empty())
            cur.fail("builder product takes its alphabet from the factors");
        std::array<const LoadedStructure*, 2> refs{};
        for (int i = 0; i < 2; ++i) {
            auto it = registry.find(b.builder_args[static_cast<std::size_t>(i)]);
            if (it == registry.end())
                cur.fail("unknown structure '" + b.builder_args[static_cast<std::size_t>(i)] +
                         "' (factors must be declared earlier in the file)");
            if (!it->second.oracle)
                cur.fail("factor '" + it->first + "' has no oracle; cannot build a product");
            refs[static_cast<std::size_t>(i)] = &it->second;
        }
        out.combing = build_direct_product(refs[0]->combing, refs[1]->combing,
                                           *refs[0]->oracle, *refs[1]->oracle);
        out.oracle = GroupOracle::direct_product(*refs[0]->oracle, *refs[1]->oracle);
    } else { // explicit
        if (b.generators.empty()) cur.fail("builder explicit needs a 'generators' line");
        Alphabet alphabet = Alphabet::with_inverses(b.generators);
        if (!b.acceptor) cur.fail("builder explicit needs an acceptor section");
        Combing c;
        c.alphabet = alphabet;
        c.acceptor = finish_acceptor(cur, *b.acceptor, alphabet.size());
        std::vector<bool> have(static_cast<std::size_t>(alphabet.size()), false);
        c.multipliers.resize(static_cast<std::size_t>(alphabet.size()));
        for (const auto& sec : b.multipliers) {
            if (have[static_cast<std::size_t>(sec.letter)])
                cur.fail("duplicate multiplier for letter " + alphabet.name(sec.letter));
            have[static_cast<std::size_t>(sec.letter)] = true;
            c.multipliers[static_cast<std::size_t>(sec.letter)] =
                finish_multiplier(cur, sec, alphabet.size());
        }
        for (Letter x = 0; x < alphabet.size(); ++x)
            if (!have[static_cast<std::size_t>(x)])
                cur.fail("missing multiplier for letter " + alphabet.name(x));
        c.lambda = b.lambda.value_or(Rational{1, 1});
        c.epsilon = b.epsilon.value_or(Rational{0, 1});
        c.fellow_traveler_k = b.fellow_traveler.value_or(1);
        c.departure = b.departure;
        if (c.departure.empty())
            for (int i = 1; i <= kDepartureTableLen; ++i) c.departure.push_back(i);
        c.uniqueness = b.uniqueness.value_or(false);
        c.identity_words = b.identity_words_set ? b.identity_words
                                                : std::vector<Word>{Word{}};
        for (const auto& m : c.multipliers) check_padding_discipline(m);
        check_combing_invariants(c);
        out.combing = std::move(c);
        out.oracle = b.oracle;
    }

    Notation n;
    n.mode = b.mode;
    for (Letter x = 0; x < out.combing.alphabet.size(); ++x)
        n.tokens.push_back(out.combing.alphabet.name(x));
    if (b.builder == "product") {
        // factor notations carry over; aliases were declared on the factors
        std::size_t off = 0;
        for (const auto& arg : b.builder_args) {
            const Notation& fn = registry.at(arg).notation;
            for (const auto& tok : fn.tokens) n.tokens[off++] = tok;
        }
    } else {
        for (const auto& [gen, alias] : b.aliases) {
            int g = out.combing.alphabet.find(gen);
            if (g < 0) cur.fail("inverse-alias for unknown generator '" + gen + "'");
            n.tokens[static_cast<std::size_t>(
                out.combing.alphabet.inverse(static_cast<Letter>(g)))] = alias;
        }
    }
    if (n.mode == Notation::Mode::juxtaposed)
        for (const auto& tok : n.tokens)
            if (tok.size() != 1)
                cur.fail("word-syntax juxtaposed needs single-character tokens; '" + tok +
                         "' is not (declare an inverse-alias)");
    out.notation = std::move(n);

    for (const auto& [sub_name, gens] : b.subgroups) {
        std::vector<std::string> names;
        std::vector<Word> words;
        for (const auto& [gname, text] : gens) {
            names.push_back(gname);
            try {
                words.push_back(out.notation.parse(out.combing.alphabet, text));
            } catch (const UnknownLetterError& e) {
                cur.fail(std::string("subgroup ") + sub_name + ": " + e.what());
            }
        }
        out.embeddings.emplace(
            sub_name,
            SubgroupEmbedding::from_generators(out.combing.alphabet, names, words));
    }
    return out;
}

} // namespace

LoadedStructure load_structure_text(std::string_view text, const std::string& origin) {
    Cursor cur = make_cursor(text, origin);
    std::map<std::string, LoadedStructure> registry;
    std::string last;
    while (!cur.done()) {
        if (cur.peek()[0] != "structure") cur.fail("expected a 'structure' block");
        StructureBlock b = parse_structure_block(cur);
        if (registry.count(b.name)) cur.fail("duplicate structure name '" + b.name + "'");
        LoadedStructure s = assemble(cur, b, registry);
        last = b.name;
        registry.emplace(b.name, std::move(s));
    }
    if (last.empty()) throw ParseError(origin, 0, "no structure block found");
    return std::move(registry.at(last));
}

LoadedStructure load_structure(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_structure_text(buf.str(), path.string());
}

namespace {

void write_fsa(std::ostream& os, const Fsa& m, const Notation& n) {
    os << "  acceptor\n";
    os << "    states " << m.num_states << "\n";
    os << "    initial " << m.initial << "\n";
    os << "    accepting";
    for (int s = 0; s < m.num_states; ++s)
        if (m.accepting[static_cast<std::size_t>(s)]) os << ' ' << s;
    os << "\n";
    for (int s = 0; s < m.num_states; ++s)
        for (Letter x = 0; x < m.alphabet_size; ++x) {
            int t = m.next(s, x);
            if (t >= 0)
                os << "    edge " << s << ' ' << n.tokens[static_cast<std::size_t>(x)] << ' '
                   << t << "\n";
        }
    os << "  end\n";
}

void write_multiplier(std::ostream& os, const TwoTapeAutomaton& m, Letter x,
                      const Notation& n) {
    auto tok = [&](Letter l) {
        return l == kPad ? std::string("-") : n.tokens[static_cast<std::size_t>(l)];
    };
    os << "  multiplier " << n.tokens[static_cast<std::size_t>(x)] << "\n";
    os << "    states " << m.num_states << "\n";
    os << "    initial " << m.initial << "\n";
    os << "    max-lag " << m.max_lag << "\n";
    os << "    accepting";
    for (int s = 0; s < m.num_states; ++s)
        if (m.accepting[static_cast<std::size_t>(s)]) os << ' ' << s;
    os << "\n";
    for (int s = 0; s < m.num_states; ++s)
        for (Letter l = kPad; l < m.alphabet_size; ++l)
            for (Letter r = kPad; r < m.alphabet_size; ++r) {
                if (l == kPad && r == kPad) continue;
                int t = m.next(s, l, r);
                if (t >= 0)
                    os << "    edge " << s << ' ' << tok(l) << ' ' << tok(r) << ' ' << t << "\n";
            }
    os << "  end\n";
}

void write_oracle(std::ostream& os, const GroupOracle& o) {
    switch (o.kind()) {
    case GroupOracle::Kind::free:
        os << "free " << o.rank();
        break;
    case GroupOracle::Kind::abelian:
        os << "abelian " << o.rank();
        break;
    case GroupOracle::Kind::product:
        os << "product " << o.factors().size();
        for (const auto& f : o.factors()) {
            os << ' ';
            write_oracle(os, f);
        }
        break;
    }
}

} // namespace

std::string write_structure(const LoadedStructure& s) {
    const Combing& c = s.combing;
    const Alphabet& a = c.alphabet;
    std::ostringstream os;
    os << "structure " << s.name << "\n";
    os << "  generators";
    for (Letter x = 0; x < a.size(); x += 2) {
        if (a.inverse(x) != x + 1)
            throw InvariantError("cannot serialize a non-interleaved alphabet");
        os << ' ' << a.name(x);
    }
    os << "\n";
    for (Letter x = 0; x < a.size(); x += 2) {
        const std::string& tok = s.notation.tokens[static_cast<std::size_t>(x + 1)];
        if (tok != a.name(x + 1)) os << "  inverse-alias " << a.name(x) << ' ' << tok << "\n";
    }
    os << "  word-syntax "
       << (s.notation.mode == Notation::Mode::spaced ? "spaced" : "juxtaposed") << "\n";
    os << "  builder explicit\n";
    os << "  lambda " << c.lambda.str() << "\n";
    os << "  epsilon " << c.epsilon.str() << "\n";
    os << "  fellow-traveler " << c.fellow_traveler_k << "\n";
    bool identity_table = true;
    for (std::size_t i = 0; i < c.departure.size(); ++i)
        if (c.departure[i] != static_cast<int>(i) + 1) identity_table = false;
    if (identity_table) {
        os << "  departure identity " << c.departure.size() << "\n";
    } else {
        os << "  departure";
        for (int d : c.departure) os << ' ' << d;
        os << "\n";
    }
    os << "  uniqueness " << (c.uniqueness ? "true" : "false") << "\n";
    if (s.oracle) {
        os << "  oracle ";
        write_oracle(os, *s.oracle);
        os << "\n";
    }
    write_fsa(os, c.acceptor, s.notation);
    for (Letter x = 0; x < a.size(); ++x)
        write_multiplier(os, c.multipliers[static_cast<std::size_t>(x)], x, s.notation);
    os << "  identity-words\n";
    for (const Word& w : c.identity_words) {
        os << "    word";
        for (Letter x : w) os << ' ' << s.notation.tokens[static_cast<std::size_t>(x)];
        os << "\n";
    }
    os << "  end\n";
    for (const auto& [name, emb] : s.embeddings) {
        os << "  subgroup " << name << "\n";
        for (Letter bl = 0; bl < emb.sub_alphabet.size(); bl += 2) {
            os << "    generator " << emb.sub_alphabet.name(bl);
            for (Letter x : emb.generator_words[static_cast<std::size_t>(bl)])
                os << ' ' << s.notation.tokens[static_cast<std::size_t>(x)];
            os << "\n";
        }
        os << "  end\n";
    }
    os << "end\n";
    return os.str();
}

} // namespace combword
