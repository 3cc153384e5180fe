// combword: decide the word problem over a structure file.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "combword/builders.hpp"
#include "combword/errors.hpp"
#include "combword/solver.hpp"
#include "combword/structure_file.hpp"
#include "combword/validators.hpp"

namespace {

using namespace combword;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStructure = 2;
constexpr int kExitExhaustion = 3;

struct WordSource {
    std::string inline_word;
    std::string words_file;

    // raw text lines; a blank line is the empty word
    std::vector<std::string> collect() const {
        std::vector<std::string> out;
        if (!words_file.empty()) {
            std::ifstream in(words_file);
            if (!in) throw Error("cannot open word list '" + words_file + "'");
            std::string line;
            while (std::getline(in, line)) out.push_back(line);
        } else {
            out.push_back(inline_word);
        }
        return out;
    }
};

Notation embedding_notation(const SubgroupEmbedding& emb) {
    Notation n;
    n.mode = Notation::Mode::spaced;
    for (Letter b = 0; b < emb.sub_alphabet.size(); ++b)
        n.tokens.push_back(emb.sub_alphabet.name(b));
    return n;
}

int run_solve(const LoadedStructure& s, const WordSource& src, bool fast, bool meter_on,
              const std::string& embedding) {
    const SubgroupEmbedding* emb = nullptr;
    if (!embedding.empty()) {
        auto it = s.embeddings.find(embedding);
        if (it == s.embeddings.end())
            throw InvariantError("no subgroup '" + embedding + "' in structure " + s.name);
        emb = &it->second;
    }
    int exit_code = kExitOk;
    for (const auto& line : src.collect()) {
        try {
            Word w = emb ? embedding_notation(*emb).parse(emb->sub_alphabet, line)
                         : s.notation.parse(s.combing.alphabet, line);
            if (emb) w = substitute(w, *emb);
            bool trivial;
            SpaceMeter meter;
            if (fast) {
                trivial = solve_fast(s.combing, w);
            } else {
                trivial = solve_enumerative(s.combing, w, meter);
            }
            std::cout << (trivial ? "TRIVIAL" : "NONTRIVIAL");
            if (meter_on && !fast) std::cout << "\tpeak_cells=" << meter.peak_cells();
            std::cout << "\n";
        } catch (const UnknownLetterError& e) {
            std::cout << "ERROR " << e.what() << "\n";
            exit_code = kExitUsage;
        } catch (const Error& e) {
            std::cout << "ERROR " << e.what() << "\n";
            exit_code = kExitExhaustion;
        }
    }
    return exit_code;
}

int run_normal_form(const LoadedStructure& s, const WordSource& src, bool meter_on) {
    int exit_code = kExitOk;
    for (const auto& line : src.collect()) {
        try {
            Word w = s.notation.parse(s.combing.alphabet, line);
            SpaceMeter meter;
            Word u;
            for (Letter x : w) u = next_normal_form_enumerative(s.combing, u, x, meter);
            std::cout << s.notation.format(u);
            if (meter_on) std::cout << "\tpeak_cells=" << meter.peak_cells();
            std::cout << "\n";
        } catch (const UnknownLetterError& e) {
            std::cout << "ERROR " << e.what() << "\n";
            exit_code = kExitUsage;
        } catch (const Error& e) {
            std::cout << "ERROR " << e.what() << "\n";
            exit_code = kExitExhaustion;
        }
    }
    return exit_code;
}

int run_validate(const LoadedStructure& s, int max_len) {
    if (!s.oracle) {
        std::cerr << "structure " << s.name
                  << " declares no oracle; hypothesis validation needs one\n";
        return kExitStructure;
    }
    const GroupOracle& o = *s.oracle;
    bool all = true;
    auto report = [&](const char* what, bool ok) {
        std::cout << what << ": " << (ok ? "PASS" : "FAIL") << "\n";
        all = all && ok;
    };
    report("shortness", validate_shortness(s.combing, o, max_len));
    report("departure", validate_departure(s.combing, o, max_len));
    report("multipliers", validate_multipliers(s.combing, o, max_len));
    auto ids = identity_set(s.combing.acceptor, o, s.combing.epsilon);
    report("identity-set", ids == s.combing.identity_words);
    return all ? kExitOk : kExitStructure;
}

Word random_word(int len, int alphabet_size, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, alphabet_size - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(dist(rng)));
    return w;
}

int run_bench(const LoadedStructure& s, const std::vector<int>& lengths, int samples,
              unsigned seed, bool time_mode) {
    std::cout << (time_mode ? "length\texpansions\n" : "length\tpeak_cells\n");
    for (int n : lengths) {
        std::mt19937 rng(seed + static_cast<unsigned>(n));
        for (int i = 0; i < samples; ++i) {
            Word w = random_word(n, s.combing.alphabet.size(), rng);
            if (time_mode) {
                FastStats stats;
                solve_fast(s.combing, w, &stats);
                std::cout << n << '\t' << stats.expansions << "\n";
            } else {
                SpaceMeter meter;
                solve_enumerative(s.combing, w, meter);
                std::cout << n << '\t' << meter.peak_cells() << "\n";
            }
        }
    }
    return kExitOk;
}

int run_export(const LoadedStructure& s, const std::string& out) {
    std::string text = write_structure(s);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out);
        if (!os) throw Error("cannot open '" + out + "' for writing");
        os << text;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"word problem solver for groups given by short combings"};
    app.require_subcommand(1);

    std::string structure_path;
    WordSource src;
    bool meter_on = false;
    std::string embedding;
    int max_len = 4;
    std::vector<int> lengths = {4, 8, 16, 32, 64};
    int samples = 5;
    unsigned seed = 12345;
    std::string out_path;

    auto add_structure = [&](CLI::App* cmd) {
        cmd->add_option("structure", structure_path, "structure file")->required();
    };
    auto add_words = [&](CLI::App* cmd) {
        cmd->add_option("word", src.inline_word, "word to test");
        cmd->add_option("--words", src.words_file, "file with one word per line");
    };

    auto* solve = app.add_subcommand("solve", "decide triviality with the enumerative solver");
    add_structure(solve);
    add_words(solve);
    solve->add_flag("--meter", meter_on, "report peak cells per word");
    solve->add_option("--embedding", embedding, "solve over a named subgroup embedding");

    auto* solve_fast_cmd = app.add_subcommand("solve-fast", "decide triviality in quadratic time");
    add_structure(solve_fast_cmd);
    add_words(solve_fast_cmd);
    solve_fast_cmd->add_option("--embedding", embedding, "solve over a named subgroup embedding");

    auto* normal_form = app.add_subcommand("normal-form", "print the accepted representative");
    add_structure(normal_form);
    add_words(normal_form);
    normal_form->add_flag("--meter", meter_on, "report peak cells per word");

    auto* validate = app.add_subcommand("validate", "check the combing hypotheses at a bound");
    add_structure(validate);
    validate->add_option("--max-len", max_len, "exhaustive check bound")->check(CLI::NonNegativeNumber);

    auto* bench_space = app.add_subcommand("bench-space", "peak cells over random words");
    add_structure(bench_space);
    bench_space->add_option("--lengths", lengths, "word lengths")->delimiter(',');
    bench_space->add_option("--samples", samples, "words per length");
    bench_space->add_option("--seed", seed, "random seed");

    auto* bench_time = app.add_subcommand("bench-time", "fast-solver expansions over random words");
    add_structure(bench_time);
    bench_time->add_option("--lengths", lengths, "word lengths")->delimiter(',');
    bench_time->add_option("--samples", samples, "words per length");
    bench_time->add_option("--seed", seed, "random seed");

    auto* export_cmd = app.add_subcommand("export", "write the structure in explicit form");
    add_structure(export_cmd);
    export_cmd->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        combword::LoadedStructure s = combword::load_structure(structure_path);
        if (solve->parsed()) return run_solve(s, src, false, meter_on, embedding);
        if (solve_fast_cmd->parsed()) return run_solve(s, src, true, false, embedding);
        if (normal_form->parsed()) return run_normal_form(s, src, meter_on);
        if (validate->parsed()) return run_validate(s, max_len);
        if (bench_space->parsed()) return run_bench(s, lengths, samples, seed, false);
        if (bench_time->parsed()) return run_bench(s, lengths, samples, seed, true);
        if (export_cmd->parsed()) return run_export(s, out_path);
    } catch (const combword::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructure;
    } catch (const combword::InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructure;
    } catch (const combword::DifferenceExplosionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructure;
    } catch (const combword::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExhaustion;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
