#ifndef NLF_IO_HPP
#define NLF_IO_HPP

// Line-oriented text formats. '#' starts a comment anywhere on a line.
//
//   surface N <g>                      fiber N_g (cover genus g-1)
//   surface O <k>                      lifted word over Sigma_k
//   curve <id> lift <2k integers>      coefficients a_1 b_1 ... a_k b_k
//   curve <id> null <tag>              null-homologous two-sided curve
//   disjoint <id> <id>
//   base D2 | S2
//   positive                           asserts every letter has exponent +1
//   letter <id> <+|-> <+1|-1>          word over N_g
//   letter lift <2k integers> <+1|-1>  lifted word
//   letter null <tag> <+1|-1>          lifted word, symbolic null lift
//
// Move scripts, one move per line:
//   insert <pos> <letter> <left|right>   letter: <id> <+|-> [<+1|-1>]
//                                        or lift <2k ints> <+1|-1> / null <tag> <+1|-1>
//   delete <pos> | commute <pos> | flip <pos>
//   conj <matrix-file> | conj matrix <n*n integers>
// Certificates are move scripts preceded by `start <hash>` and `end <hash>`.

#include <nlf/cover.hpp>
#include <nlf/error.hpp>
#include <nlf/homology.hpp>
#include <nlf/lifting.hpp>
#include <nlf/words.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace nlf::io {

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline Integer parse_integer(const std::string& s, std::size_t line) {
    if (!is_integer_token(s)) throw ParseError("expected an integer, got '" + s + "'", line);
    return Integer(s.front() == '+' ? s.substr(1) : s);
}

inline long long parse_small(const std::string& s, std::size_t line, long long lo, long long hi) {
    const Integer v = parse_integer(s, line);
    if (v < lo || v > hi) throw ParseError("value " + s + " out of range", line);
    return v.convert_to<long long>();
}

inline int parse_exponent(const std::string& s, std::size_t line) {
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    throw ParseError("exponent must be +1 or -1, got '" + s + "'", line);
}

inline Theta parse_theta(const std::string& s, std::size_t line) {
    if (s == "+") return Theta::plus;
    if (s == "-") return Theta::minus;
    throw ParseError("orientation tag must be + or -, got '" + s + "'", line);
}

inline std::string exponent_text(int e) { return e > 0 ? "+1" : "-1"; }

inline HClass parse_class(const std::vector<std::string>& tok, std::size_t from, std::size_t count, std::size_t line) {
    if (tok.size() < from + count)
        throw ParseError("expected " + std::to_string(count) + " coefficients", line);
    std::vector<Integer> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back(parse_integer(tok[from + i], line));
    return HClass(std::move(v));
}

// Re-throws invariant errors with the offending line attached.
template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const UnsupportedError& e) {
        throw UnsupportedError("line " + std::to_string(line) + ": " + e.what());
    } catch (const InvariantError& e) {
        throw InvariantError("line " + std::to_string(line) + ": " + e.what());
    }
}

} // namespace detail

/// Word content of one input text, before it is bound to a word type.
struct WordSpec {
    std::optional<Base> base;
    bool positive_claim = false;
    std::optional<int> lifted_genus;
    std::vector<Letter> letters;
    std::vector<AchiralLetter> lifted_letters;
    std::vector<std::size_t> lines; // source line of each letter

    bool is_lifted() const noexcept { return lifted_genus.has_value() || !lifted_letters.empty(); }
    bool has_word() const noexcept { return base || is_lifted() || !letters.empty() || positive_claim; }
};

/// Reads curve-file and word-file directives. Curve directives add to `dict`
/// (created by `surface N <g>` if absent); word directives fill `spec`.
inline void read_text(std::istream& in, std::optional<CurveDictionary>& dict, WordSpec& spec) {
    using namespace detail;
    std::string raw;
    std::size_t line = 0;
    auto lifted_rank = [&]() -> std::size_t {
        if (spec.lifted_genus) return 2 * static_cast<std::size_t>(*spec.lifted_genus);
        if (dict) return dict->rank();
        throw ParseError("lifted letter before any 'surface' line", line);
    };
    while (std::getline(in, raw)) {
        ++line;
        const auto tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "surface") {
            if (tok.size() != 3) throw ParseError("expected 'surface N <g>' or 'surface O <k>'", line);
            const int genus = static_cast<int>(parse_small(tok[2], line, 0, 1'000'000));
            if (tok[1] == "N") {
                if (genus < 1) throw ParseError("non-orientable genus must be at least 1", line);
                if (dict && dict->genus() != genus)
                    throw ParseError("surface N_" + std::to_string(genus) + " conflicts with N_" +
                                         std::to_string(dict->genus()),
                                     line);
                if (!dict) dict.emplace(genus);
            } else if (tok[1] == "O") {
                if (dict && dict->cover_genus() != genus)
                    throw ParseError("lifted surface of genus " + std::to_string(genus) + " does not cover N_" +
                                         std::to_string(dict->genus()),
                                     line);
                spec.lifted_genus = genus;
            } else {
                throw ParseError("unknown surface kind '" + tok[1] + "'", line);
            }
        } else if (kw == "curve") {
            if (!dict) throw ParseError("'curve' before 'surface N <g>'", line);
            if (tok.size() < 3) throw ParseError("expected 'curve <id> lift ...' or 'curve <id> null <tag>'", line);
            if (tok[2] == "lift") {
                if (tok.size() != 3 + dict->rank())
                    throw ParseError("curve '" + tok[1] + "' needs " + std::to_string(dict->rank()) + " coefficients",
                                     line);
                const HClass gamma = parse_class(tok, 3, dict->rank(), line);
                at_line(line, [&] { return dict->register_curve(tok[1], gamma); });
            } else if (tok[2] == "null") {
                if (tok.size() != 4) throw ParseError("expected 'curve <id> null <tag>'", line);
                at_line(line, [&] { return dict->register_null_curve(tok[1], tok[3]); });
            } else {
                throw ParseError("expected 'lift' or 'null' after curve id", line);
            }
        } else if (kw == "disjoint") {
            if (!dict) throw ParseError("'disjoint' before 'surface N <g>'", line);
            if (tok.size() != 3) throw ParseError("expected 'disjoint <id> <id>'", line);
            at_line(line, [&] { dict->declare_disjoint(tok[1], tok[2]); });
        } else if (kw == "base") {
            if (tok.size() != 2) throw ParseError("expected 'base D2' or 'base S2'", line);
            if (tok[1] == "D2")
                spec.base = Base::disk;
            else if (tok[1] == "S2")
                spec.base = Base::sphere;
            else
                throw ParseError("unknown base '" + tok[1] + "'", line);
        } else if (kw == "positive") {
            spec.positive_claim = true;
        } else if (kw == "letter") {
            if (tok.size() >= 2 && tok[1] == "lift") {
                const std::size_t rank = lifted_rank();
                if (tok.size() != 3 + rank) throw ParseError("lifted letter needs " + std::to_string(rank) + " coefficients and an exponent", line);
                AchiralLetter l{parse_class(tok, 2, rank, line), {}, parse_exponent(tok.back(), line)};
                if (l.lift.is_zero()) throw ParseError("lifted letter with zero class", line);
                l.lift = l.lift.canonical();
                spec.lifted_letters.push_back(std::move(l));
            } else if (tok.size() >= 2 && tok[1] == "null") {
                if (tok.size() != 4) throw ParseError("expected 'letter null <tag> <+1|-1>'", line);
                lifted_rank();
                spec.lifted_letters.push_back(AchiralLetter{HClass(lifted_rank()), tok[2], parse_exponent(tok[3], line)});
            } else {
                if (!dict) throw ParseError("'letter' before 'surface N <g>'", line);
                if (tok.size() != 4) throw ParseError("expected 'letter <curve-id> <+|-> <+1|-1>'", line);
                const Theta theta = parse_theta(tok[2], line);
                const int e = parse_exponent(tok[3], line);
                const OrientedCurve oc = at_line(line, [&] { return dict->oriented(tok[1], theta); });
                spec.letters.push_back(Letter{oc, e});
            }
            spec.lines.push_back(line);
        } else {
            throw ParseError("unknown directive '" + kw + "'", line);
        }
    }
    if (!spec.letters.empty() && !spec.lifted_letters.empty())
        throw ParseError("a file cannot mix lifted and non-orientable letters");
}

inline void read_file(const std::string& path, std::optional<CurveDictionary>& dict, WordSpec& spec) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        read_text(in, dict, spec);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const UnsupportedError& e) {
        throw UnsupportedError(path + ": " + e.what());
    } catch (const InvariantError& e) {
        throw InvariantError(path + ": " + e.what());
    }
}

inline Word to_word(const WordSpec& spec, const CurveDictionary& dict) {
    if (spec.is_lifted()) throw ParseError("expected a word over N_g, found a lifted word");
    Word w{dict.genus(), spec.base.value_or(Base::disk), spec.letters};
    if (spec.positive_claim) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i].exponent != 1)
                throw InvariantError("line " + std::to_string(spec.lines[i]) +
                                     ": word is marked positive but has exponent -1");
    }
    return w;
}

inline AchiralWord to_lifted(const WordSpec& spec, const std::optional<CurveDictionary>& dict) {
    int k = 0;
    if (spec.lifted_genus)
        k = *spec.lifted_genus;
    else if (dict)
        k = dict->cover_genus();
    else
        throw ParseError("lifted word without a 'surface O <k>' line");
    AchiralWord w{k, spec.base.value_or(Base::disk), spec.lifted_letters};
    if (spec.positive_claim)
        throw InvariantError("lifted words are achiral and cannot be marked positive");
    return w;
}

inline Word parse_word(std::string_view text, CurveDictionary& dict) {
    std::optional<CurveDictionary> d(dict);
    WordSpec spec;
    std::istringstream in{std::string(text)};
    read_text(in, d, spec);
    dict = *d;
    return to_word(spec, dict);
}

// ---------------------------------------------------------------------------
// Writers

inline std::string letter_text(const CurveDictionary& dict, const Letter& l) {
    return dict.curve(l.curve.curve).id + " " + to_char(dict.written_theta(l.curve)) + " " +
           detail::exponent_text(l.exponent);
}

inline std::string letter_text(const AchiralLetter& l) {
    if (l.is_null()) return "null " + l.null_tag + " " + detail::exponent_text(l.exponent);
    return "lift " + l.lift.to_string() + " " + detail::exponent_text(l.exponent);
}

inline void write_dictionary(std::ostream& os, const CurveDictionary& dict) {
    os << "surface N " << dict.genus() << '\n';
    for (const auto& n : dict.names()) {
        const auto& c = dict.curve(n.curve);
        if (c.is_null())
            os << "curve " << n.id << " null " << c.null_tag << '\n';
        else
            os << "curve " << n.id << " lift " << n.declared.to_string() << '\n';
    }
    for (const auto& [a, b] : dict.disjoint_pairs()) os << "disjoint " << dict.curve(a).id << ' ' << dict.curve(b).id << '\n';
}

/// Word body: surface, base and letters, without curve definitions.
inline void write_word(std::ostream& os, const Word& w, const CurveDictionary& dict) {
    os << "surface N " << w.genus << '\n';
    os << "base " << to_string(w.base) << '\n';
    for (const auto& l : w.letters) os << "letter " << letter_text(dict, l) << '\n';
}

/// Self-contained file: dictionary followed by the word.
inline void write_bundle(std::ostream& os, const Word& w, const CurveDictionary& dict) {
    write_dictionary(os, dict);
    os << "base " << to_string(w.base) << '\n';
    for (const auto& l : w.letters) os << "letter " << letter_text(dict, l) << '\n';
}

inline void write_word(std::ostream& os, const AchiralWord& w) {
    os << "surface O " << w.genus << '\n';
    os << "base " << to_string(w.base) << '\n';
    for (const auto& l : w.letters) os << "letter " << letter_text(l) << '\n';
}

inline std::string word_text(const Word& w, const CurveDictionary& dict) {
    std::ostringstream os;
    write_word(os, w, dict);
    return os.str();
}

inline std::string word_text(const AchiralWord& w) {
    std::ostringstream os;
    write_word(os, w);
    return os.str();
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline std::uint64_t word_hash(const Word& w, const CurveDictionary& dict) { return fnv1a(word_text(w, dict)); }
inline std::uint64_t word_hash(const AchiralWord& w) { return fnv1a(word_text(w)); }

// ---------------------------------------------------------------------------
// Matrices

inline Matrix read_matrix(std::istream& in) {
    std::vector<Integer> entries;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        for (const auto& t : detail::tokenize(raw)) entries.push_back(detail::parse_integer(t, line));
    }
    try {
        return Matrix::from_rows(entries);
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

inline Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    return read_matrix(in);
}

/// Reads a list of matrices separated by blank lines or lines reading `---`.
inline std::vector<Matrix> read_matrix_list(std::istream& in) {
    std::vector<Matrix> out;
    std::vector<Integer> entries;
    std::string raw;
    std::size_t line = 0;
    auto flush = [&] {
        if (entries.empty()) return;
        try {
            out.push_back(Matrix::from_rows(entries));
        } catch (const DimensionError& e) {
            throw ParseError(e.what(), line);
        }
        entries.clear();
    };
    while (std::getline(in, raw)) {
        ++line;
        const auto tok = detail::tokenize(raw);
        if (tok.empty() || tok[0] == "---") {
            if (raw.find_first_not_of(" \t\r") == std::string::npos || (!tok.empty() && tok[0] == "---")) flush();
            continue;
        }
        for (const auto& t : tok) entries.push_back(detail::parse_integer(t, line));
    }
    flush();
    return out;
}

inline std::string matrix_inline(const Matrix& m) {
    std::string s = "matrix";
    for (const auto& e : m.entries()) s += " " + e.str();
    return s;
}

// ---------------------------------------------------------------------------
// Move scripts and certificates

/// Parses letters inside move scripts for one alphabet.
struct WordLetterSyntax {
    const CurveDictionary* dict;

    // Returns the letter and the number of tokens consumed.
    std::pair<Letter, std::size_t> parse(const std::vector<std::string>& tok, std::size_t from, std::size_t line) const {
        if (tok.size() < from + 2) throw ParseError("expected '<curve-id> <+|->'", line);
        const Theta theta = detail::parse_theta(tok[from + 1], line);
        int e = 1;
        std::size_t used = 2;
        if (tok.size() > from + 2 && (tok[from + 2] == "+1" || tok[from + 2] == "-1")) {
            e = detail::parse_exponent(tok[from + 2], line);
            used = 3;
        }
        const OrientedCurve oc = detail::at_line(line, [&] { return dict->oriented(tok[from], theta); });
        return {Letter{oc, e}, used};
    }

    std::string format(const Letter& l) const {
        std::string s = dict->curve(l.curve.curve).id + " " + to_char(dict->written_theta(l.curve));
        if (l.exponent != 1) s += " -1";
        return s;
    }
};

struct LiftedLetterSyntax {
    std::size_t rank;

    std::pair<AchiralLetter, std::size_t> parse(const std::vector<std::string>& tok, std::size_t from,
                                                std::size_t line) const {
        if (tok.size() > from && tok[from] == "null") {
            if (tok.size() < from + 3) throw ParseError("expected 'null <tag> <+1|-1>'", line);
            return {AchiralLetter{HClass(rank), tok[from + 1], detail::parse_exponent(tok[from + 2], line)}, 3};
        }
        if (tok.size() < from + 2 + rank || tok[from] != "lift")
            throw ParseError("expected 'lift <" + std::to_string(rank) + " integers> <+1|-1>'", line);
        HClass v = detail::parse_class(tok, from + 1, rank, line);
        if (v.is_zero()) throw ParseError("lifted letter with zero class", line);
        return {AchiralLetter{v.canonical(), {}, detail::parse_exponent(tok[from + 1 + rank], line)}, 2 + rank};
    }

    std::string format(const AchiralLetter& l) const { return letter_text(l); }
};

template <class L, class Syntax>
std::string move_text(const BasicMove<L>& m, const Syntax& syntax) {
    const std::string pos = std::to_string(m.position);
    switch (m.kind) {
    case MoveKind::insert_pair_left_inv: return "insert " + pos + " " + syntax.format(*m.letter) + " left";
    case MoveKind::insert_pair_right_inv: return "insert " + pos + " " + syntax.format(*m.letter) + " right";
    case MoveKind::delete_pair: return "delete " + pos;
    case MoveKind::commute: return "commute " + pos;
    case MoveKind::theta_flip: return "flip " + pos;
    case MoveKind::conjugate_all: return "conj " + matrix_inline(*m.matrix);
    }
    return {};
}

/// Parses a move script or certificate. `base_dir` resolves relative matrix files.
template <class L, class Syntax>
BasicCertificate<L> read_moves(std::istream& in, const Syntax& syntax, const std::filesystem::path& base_dir = {},
                               bool* has_header = nullptr) {
    using namespace detail;
    BasicCertificate<L> cert;
    bool saw_start = false;
    bool saw_end = false;
    std::string raw;
    std::size_t line = 0;
    auto position = [&](const std::vector<std::string>& tok) {
        if (tok.size() < 2) throw ParseError("missing position", line);
        return static_cast<std::size_t>(parse_small(tok[1], line, 0, 1'000'000'000));
    };
    auto parse_hash = [&](const std::vector<std::string>& tok) {
        if (tok.size() != 2 || tok[1].size() != 16 || tok[1].find_first_not_of("0123456789abcdef") != std::string::npos)
            throw ParseError("expected a 16-digit lowercase hex hash", line);
        return std::stoull(tok[1], nullptr, 16);
    };
    while (std::getline(in, raw)) {
        ++line;
        const auto tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "start") {
            cert.start_hash = parse_hash(tok);
            saw_start = true;
        } else if (kw == "end") {
            cert.end_hash = parse_hash(tok);
            saw_end = true;
        } else if (kw == "insert") {
            const std::size_t pos = position(tok);
            auto [letter, used] = syntax.parse(tok, 2, line);
            if (tok.size() != 3 + used) throw ParseError("expected 'left' or 'right' at the end of insert", line);
            const std::string& side = tok.back();
            if (side != "left" && side != "right") throw ParseError("expected 'left' or 'right', got '" + side + "'", line);
            cert.moves.push_back(BasicMove<L>::insert(pos, std::move(letter),
                                                      side == "left" ? PairOrder::inverse_first : PairOrder::inverse_last));
        } else if (kw == "delete" || kw == "commute" || kw == "flip") {
            if (tok.size() != 2) throw ParseError("expected '" + kw + " <pos>'", line);
            const std::size_t pos = position(tok);
            cert.moves.push_back(kw == "delete"    ? BasicMove<L>::remove(pos)
                                 : kw == "commute" ? BasicMove<L>::commute(pos)
                                                   : BasicMove<L>::flip(pos));
        } else if (kw == "conj") {
            if (tok.size() < 2) throw ParseError("expected 'conj <matrix-file>' or 'conj matrix <entries>'", line);
            if (tok[1] == "matrix") {
                std::vector<Integer> entries;
                for (std::size_t i = 2; i < tok.size(); ++i) entries.push_back(parse_integer(tok[i], line));
                try {
                    cert.moves.push_back(BasicMove<L>::conjugate(Matrix::from_rows(entries)));
                } catch (const DimensionError& e) {
                    throw ParseError(e.what(), line);
                }
            } else {
                if (tok.size() != 2) throw ParseError("expected 'conj <matrix-file>'", line);
                std::filesystem::path p(tok[1]);
                if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
                cert.moves.push_back(BasicMove<L>::conjugate(read_matrix_file(p.string())));
            }
        } else {
            throw ParseError("unknown move '" + kw + "'", line);
        }
    }
    if (saw_start != saw_end) throw ParseError("certificate needs both 'start' and 'end' lines");
    if (has_header) *has_header = saw_start;
    return cert;
}

template <class L, class Syntax>
void write_certificate(std::ostream& os, const BasicCertificate<L>& cert, const Syntax& syntax) {
    os << "start " << hex(cert.start_hash) << '\n';
    os << "end " << hex(cert.end_hash) << '\n';
    for (const auto& m : cert.moves) os << move_text(m, syntax) << '\n';
}

} // namespace nlf::io

#endif // NLF_IO_HPP
