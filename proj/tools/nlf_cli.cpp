// nlf: command-line front end for monodromy factorizations over N_g.
//
//   nlf validate FILE...                  parse and check curve/word files
//   nlf lift --word W                     lift to the orientation double cover
//   nlf invariants --word W               key=value summary
//   nlf normalize --word W [--reduce]     theta-flip negative letters
//   nlf apply --word W --script S         run a move script
//   nlf search --word A --word B          equivalence search, prints a certificate
//   nlf replay --word W --cert C          replay a certificate
//   nlf gen --seed N --genus G --length N random positive word bundle
//   nlf chain --word W --kind K --index I lift-level certificate for a proof move
//
// Exit codes: 0 ok, 2 parse, 3 invariant, 4 unsupported, 5 inconclusive.

#include <nlf/nlf.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace nlf;

struct Session {
    std::optional<CurveDictionary> dict;
    std::vector<io::WordSpec> specs;
    std::vector<std::string> paths;

    CurveDictionary& dictionary() {
        if (!dict) throw ParseError("no 'surface N <g>' line in the inputs");
        return *dict;
    }

    Word word(std::size_t i) { return io::to_word(specs.at(i), dictionary()); }
};

Session load(const std::string& dict_path, const std::vector<std::string>& word_paths) {
    Session s;
    if (!dict_path.empty()) {
        io::WordSpec ignored;
        io::read_file(dict_path, s.dict, ignored);
        if (ignored.has_word()) throw ParseError(dict_path + ": curve file contains word directives");
    }
    for (const auto& p : word_paths) {
        io::WordSpec spec;
        io::read_file(p, s.dict, spec);
        s.specs.push_back(std::move(spec));
        s.paths.push_back(p);
    }
    return s;
}

void require_words(const Session& s, std::size_t n, const char* cmd) {
    if (s.specs.size() != n)
        throw ParseError(std::string(cmd) + " needs exactly " + std::to_string(n) + " --word file" + (n == 1 ? "" : "s"));
}

std::string read_all(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::set<MoveKind> parse_move_kinds(const std::string& csv) {
    std::set<MoveKind> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "insert") {
            out.insert(MoveKind::insert_pair_left_inv);
            out.insert(MoveKind::insert_pair_right_inv);
        } else if (item == "insert-left") {
            out.insert(MoveKind::insert_pair_left_inv);
        } else if (item == "insert-right") {
            out.insert(MoveKind::insert_pair_right_inv);
        } else if (item == "delete") {
            out.insert(MoveKind::delete_pair);
        } else if (item == "commute") {
            out.insert(MoveKind::commute);
        } else if (item == "conj") {
            out.insert(MoveKind::conjugate_all);
        } else {
            throw ParseError("unknown move kind '" + item + "' in --moves");
        }
    }
    return out;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monodromy factorizations of non-orientable Lefschetz fibrations"};
    app.require_subcommand(1);

    std::string dict_path;
    std::vector<std::string> word_paths;
    auto add_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--dict", dict_path, "Curve file");
        cmd->add_option("--word", word_paths, "Word file (repeatable)");
    };

    auto* validate = app.add_subcommand("validate", "Parse and check curve and word files");
    std::vector<std::string> validate_paths;
    add_inputs(validate);
    validate->add_option("files", validate_paths, "Files to check");

    auto* lift = app.add_subcommand("lift", "Lift a word to the orientation double cover");
    add_inputs(lift);

    auto* invariants = app.add_subcommand("invariants", "Print numerical invariants");
    add_inputs(invariants);

    auto* normalize = app.add_subcommand("normalize", "Theta-flip every negative letter");
    add_inputs(normalize);
    bool reduce = false;
    normalize->add_flag("--reduce", reduce, "Freely cancel before normalizing");

    auto* apply = app.add_subcommand("apply", "Apply a move script to a word");
    add_inputs(apply);
    std::string script_path;
    apply->add_option("--script", script_path, "Move script")->required();

    auto* search = app.add_subcommand("search", "Search for an equivalence certificate");
    add_inputs(search);
    SearchConfig cfg;
    std::string moves_csv;
    std::string pool_path;
    std::size_t pool_letters = 0;
    search->add_option("--depth", cfg.max_depth, "Combined search depth")->check(CLI::PositiveNumber);
    search->add_option("--budget", cfg.node_budget, "Stored node budget")->check(CLI::PositiveNumber);
    search->add_option("--max-inserts", cfg.max_insert_letters, "Pair insertions per branch");
    search->add_option("--moves", moves_csv, "Allowed moves: insert,insert-left,insert-right,delete,commute,conj");
    search->add_flag("--strict-positions", cfg.strict_positions, "Only the fixed (i-1)/(i-2) insertion shapes");
    search->add_option("--pool", pool_path, "Conjugator matrices, separated by blank lines or ---");
    search->add_option("--pool-letters", pool_letters, "Add lifted twist matrices of the first dictionary curves");

    auto* replay_cmd = app.add_subcommand("replay", "Replay a certificate from a start word");
    add_inputs(replay_cmd);
    std::string cert_path;
    replay_cmd->add_option("--cert", cert_path, "Certificate")->required();

    auto* gen = app.add_subcommand("gen", "Random positive word with a random dictionary");
    std::uint64_t seed = 0;
    int gen_genus = 4;
    std::size_t gen_length = 4;
    std::size_t gen_curves = 6;
    std::string gen_base = "D2";
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--genus", gen_genus, "Non-orientable genus g")->check(CLI::Range(1, 64));
    gen->add_option("--length", gen_length, "Number of letters");
    gen->add_option("--curves", gen_curves, "Dictionary size");
    gen->add_option("--base", gen_base, "D2 or S2")->check(CLI::IsMember({"D2", "S2"}));

    auto* chain = app.add_subcommand("chain", "Lift-level certificate realizing a proof move");
    add_inputs(chain);
    std::string chain_kind = "i-1";
    std::size_t chain_index = 0;
    std::string chain_matrix;
    chain->add_option("--kind", chain_kind, "i-1, i-2 or ii")->check(CLI::IsMember({"i-1", "i-2", "ii"}));
    chain->add_option("--index", chain_index, "Letter index i (0-based)");
    chain->add_option("--matrix", chain_matrix, "Conjugator for kind ii");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::parse);
    }

    if (validate->parsed()) {
        return guarded([&] {
            std::vector<std::string> all = word_paths;
            all.insert(all.end(), validate_paths.begin(), validate_paths.end());
            Session s = load(dict_path, all);
            for (std::size_t i = 0; i < s.specs.size(); ++i) {
                const auto& spec = s.specs[i];
                if (spec.is_lifted()) {
                    const AchiralWord w = io::to_lifted(spec, s.dict);
                    const CoverContext ctx = s.dict ? CoverContext(*s.dict) : CoverContext(w.genus);
                    CoverLetters::check(ctx, w);
                    std::cout << "ok " << s.paths[i] << ": Sigma_" << w.genus << ", " << w.size() << " letters\n";
                } else if (spec.has_word()) {
                    const Word w = s.word(i);
                    NonOrientableLetters::check(s.dictionary(), w);
                    std::cout << "ok " << s.paths[i] << ": N_" << w.genus << ", " << w.size() << " letters"
                              << (is_positive(w) ? ", positive" : "") << '\n';
                } else {
                    std::cout << "ok " << s.paths[i] << ": " << (s.dict ? s.dict->size() : 0) << " curves\n";
                }
            }
            if (s.dict)
                for (const auto& w : s.dict->warnings()) std::cout << "warning: " << w << '\n';
            return 0;
        });
    }

    if (lift->parsed()) {
        return guarded([&] {
            Session s = load(dict_path, word_paths);
            require_words(s, 1, "lift");
            io::write_word(std::cout, lift_word(s.dictionary(), s.word(0)));
            return 0;
        });
    }

    if (invariants->parsed()) {
        return guarded([&] {
            Session s = load(dict_path, word_paths);
            require_words(s, 1, "invariants");
            std::cout << summarize(s.word(0), s.dictionary()).to_text();
            return 0;
        });
    }

    if (normalize->parsed()) {
        return guarded([&] {
            Session s = load(dict_path, word_paths);
            require_words(s, 1, "normalize");
            Word w = s.word(0);
            NonOrientableLetters::check(s.dictionary(), w);
            if (reduce) w = free_reduce(w);
            io::write_bundle(std::cout, normalize_positive(w), s.dictionary());
            return 0;
        });
    }

    if (apply->parsed()) {
        return guarded([&] {
            Session s = load(dict_path, word_paths);
            require_words(s, 1, "apply");
            std::ifstream in(script_path);
            if (!in) throw ParseError("cannot open '" + script_path + "'");
            const auto dir = std::filesystem::path(script_path).parent_path();
            if (s.specs[0].is_lifted()) {
                AchiralWord w = io::to_lifted(s.specs[0], s.dict);
                CoverContext ctx = s.dict ? CoverContext(*s.dict) : CoverContext(w.genus);
                const auto script = io::read_moves<AchiralLetter>(in, io::LiftedLetterSyntax{ctx.rank()}, dir);
                for (std::size_t i = 0; i < script.moves.size(); ++i) {
                    try {
                        w = apply_move(w, script.moves[i], ctx);
                    } catch (const Error& e) {
                        throw ReplayError(i, e.what());
                    }
                }
                io::write_word(std::cout, w);
                return 0;
            }
            CurveDictionary& dict = s.dictionary();
            Word w = s.word(0);
            const auto script = io::read_moves<Letter>(in, io::WordLetterSyntax{&dict}, dir);
            for (std::size_t i = 0; i < script.moves.size(); ++i) {
                try {
                    w = apply_move(w, script.moves[i], dict);
                } catch (const Error& e) {
                    throw ReplayError(i, e.what());
                }
            }
            io::write_bundle(std::cout, w, dict);
            return 0;
        });
    }

    if (search->parsed()) {
        return guarded([&] {
            Session s = load(dict_path, word_paths);
            require_words(s, 2, "search");
            CurveDictionary& dict = s.dictionary();
            const Word w1 = s.word(0);
            const Word w2 = s.word(1);
            if (!moves_csv.empty()) cfg.allowed_moves = parse_move_kinds(moves_csv);
            if (!pool_path.empty()) {
                std::ifstream in(pool_path);
                if (!in) throw ParseError("cannot open '" + pool_path + "'");
                cfg.conjugator_pool = io::read_matrix_list(in);
            }
            for (auto& m : letter_conjugators(dict, pool_letters)) cfg.conjugator_pool.push_back(std::move(m));
            const CurveDictionary original = dict;
            const SearchOutcome out = bfs_equivalent(w1, w2, cfg, dict);
            std::cout << "# verdict " << to_string(out.verdict) << '\n';
            std::cout << "# nodes_expanded " << out.stats.nodes_expanded << '\n';
            std::cout << "# nodes_stored " << out.stats.nodes_stored << '\n';
            std::cout << "# depth " << out.stats.forward_depth << '+' << out.stats.backward_depth << '\n';
            std::cout << "# stop " << out.stats.stop_reason << '\n';
            if (out.distinction) {
                std::cout << "# invariant " << out.distinction->invariant << '\n';
                std::cout << "# left " << out.distinction->left << '\n';
                std::cout << "# right " << out.distinction->right << '\n';
            }
            if (out.certificate) io::write_certificate(std::cout, *out.certificate, io::WordLetterSyntax{&original});
            return out.verdict == Verdict::inconclusive ? static_cast<int>(ExitCode::inconclusive) : 0;
        });
    }

    if (replay_cmd->parsed()) {
        return guarded([&] {
            Session s = load(dict_path, word_paths);
            require_words(s, 1, "replay");
            std::ifstream in(cert_path);
            if (!in) throw ParseError("cannot open '" + cert_path + "'");
            const auto dir = std::filesystem::path(cert_path).parent_path();
            bool header = false;
            if (s.specs[0].is_lifted()) {
                const AchiralWord w = io::to_lifted(s.specs[0], s.dict);
                CoverContext ctx = s.dict ? CoverContext(*s.dict) : CoverContext(w.genus);
                const auto cert = io::read_moves<AchiralLetter>(in, io::LiftedLetterSyntax{ctx.rank()}, dir, &header);
                if (!header) throw ParseError("certificate has no 'start'/'end' lines");
                io::write_word(std::cout, replay(cert, w, ctx));
                return 0;
            }
            CurveDictionary& dict = s.dictionary();
            const Word w = s.word(0);
            const auto cert = io::read_moves<Letter>(in, io::WordLetterSyntax{&dict}, dir, &header);
            if (!header) throw ParseError("certificate has no 'start'/'end' lines");
            const Word end = replay(cert, w, dict);
            io::write_bundle(std::cout, end, dict);
            return 0;
        });
    }

    if (gen->parsed()) {
        return guarded([&] {
            Rng rng(seed);
            const CurveDictionary dict = random_dictionary(gen_genus, gen_curves, rng);
            const Word w = random_word(dict, gen_length, gen_base == "S2" ? Base::sphere : Base::disk, rng);
            std::cout << "# seed " << seed << '\n';
            io::write_dictionary(std::cout, dict);
            std::cout << "base " << to_string(w.base) << '\n';
            std::cout << "positive\n";
            for (const auto& l : w.letters) std::cout << "letter " << io::letter_text(dict, l) << '\n';
            return 0;
        });
    }

    if (chain->parsed()) {
        return guarded([&] {
            Session s = load(dict_path, word_paths);
            require_words(s, 1, "chain");
            const CurveDictionary& dict = s.dictionary();
            const Word w = s.word(0);
            if (!is_positive(w)) throw InvariantError("proof chains start from a positive word");
            const AchiralWord lifted = lift_word(dict, w);
            CoverContext ctx(dict);
            AchiralCertificate cert;
            if (chain_kind == "i-1") {
                cert = chain_insert_after_successor(lifted, chain_index, ctx);
            } else if (chain_kind == "i-2") {
                cert = chain_insert_successor_before(lifted, chain_index, ctx);
            } else {
                if (chain_matrix.empty()) throw ParseError("kind ii needs --matrix");
                cert = chain_conjugation(lifted, io::read_matrix_file(chain_matrix), ctx);
            }
            io::write_certificate(std::cout, cert, io::LiftedLetterSyntax{ctx.rank()});
            return 0;
        });
    }
    return 0;
}
