#ifndef NLF_WORDS_HPP
#define NLF_WORDS_HPP

// Monodromy factorizations as words of Dehn twists, and the elementary moves
// between them. The word machinery is generic over an alphabet policy so the
// same moves run on words over N_g (letters t_{c;theta}^{+-1}) and on lifted
// words over the orientable cover (letters t_gamma^{+-1}).
//
// An alphabet policy `A` provides:
//   letter_type, context_type
//   A::inverse(l)                 formal inverse letter
//   A::cancels(x, y)              x y acts trivially and may be deleted
//   A::same_letter(x, y)          x and y denote the same twist
//   A::commutes(ctx, x, y)        x y may be swapped (same or disjoint curves)
//   A::matrix(ctx, l)             homology action of the letter
//   A::rank(ctx)                  rank of the homology lattice
//   A::check(ctx, word)           throws if the word does not fit the context
//   A::conjugate(ctx, word, M)    simultaneous conjugation by M

#include <nlf/cover.hpp>
#include <nlf/error.hpp>
#include <nlf/homology.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace nlf {

enum class Base : std::uint8_t { disk, sphere };

constexpr int euler_characteristic(Base b) noexcept { return b == Base::disk ? 1 : 2; }
constexpr const char* to_string(Base b) noexcept { return b == Base::disk ? "D2" : "S2"; }

template <class A>
struct BasicWord {
    using alphabet = A;
    using letter_type = typename A::letter_type;

    int genus = 1; // g of N_g, or k of Sigma_k for lifted words
    Base base = Base::disk;
    std::vector<letter_type> letters;

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }
    const letter_type& operator[](std::size_t i) const { return letters[i]; }

    friend bool operator==(const BasicWord&, const BasicWord&) = default;
};

enum class PairOrder : std::uint8_t {
    inverse_first, // (l^-1 l)
    inverse_last,  // (l l^-1)
};

enum class MoveKind : std::uint8_t {
    insert_pair_left_inv,
    insert_pair_right_inv,
    delete_pair,
    commute,
    conjugate_all,
    theta_flip,
};

constexpr const char* to_string(MoveKind k) noexcept {
    switch (k) {
    case MoveKind::insert_pair_left_inv: return "insert-left";
    case MoveKind::insert_pair_right_inv: return "insert-right";
    case MoveKind::delete_pair: return "delete";
    case MoveKind::commute: return "commute";
    case MoveKind::conjugate_all: return "conj";
    case MoveKind::theta_flip: return "flip";
    }
    return "?";
}

template <class L>
struct BasicMove {
    MoveKind kind = MoveKind::delete_pair;
    std::size_t position = 0;
    std::optional<L> letter;      // insertions
    std::optional<Matrix> matrix; // conjugation

    static BasicMove insert(std::size_t pos, L l, PairOrder order) {
        return {order == PairOrder::inverse_first ? MoveKind::insert_pair_left_inv : MoveKind::insert_pair_right_inv,
                pos, std::move(l), std::nullopt};
    }
    static BasicMove remove(std::size_t pos) { return {MoveKind::delete_pair, pos, std::nullopt, std::nullopt}; }
    static BasicMove commute(std::size_t pos) { return {MoveKind::commute, pos, std::nullopt, std::nullopt}; }
    static BasicMove flip(std::size_t pos) { return {MoveKind::theta_flip, pos, std::nullopt, std::nullopt}; }
    static BasicMove conjugate(Matrix m) { return {MoveKind::conjugate_all, 0, std::nullopt, std::move(m)}; }

    friend bool operator==(const BasicMove&, const BasicMove&) = default;
};

/// Replayable sequence of moves between two words identified by hash.
template <class L>
struct BasicCertificate {
    std::uint64_t start_hash = 0;
    std::uint64_t end_hash = 0;
    std::vector<BasicMove<L>> moves;

    friend bool operator==(const BasicCertificate&, const BasicCertificate&) = default;
};

// ---------------------------------------------------------------------------
// Generic moves

template <class A>
BasicWord<A> insert_cancelling_pair(const BasicWord<A>& w, std::size_t pos, const typename A::letter_type& l,
                                    PairOrder order) {
    if (pos > w.size())
        throw InvariantError("insert position " + std::to_string(pos) + " outside [0, " + std::to_string(w.size()) +
                             "]");
    BasicWord<A> out = w;
    auto inv = A::inverse(l);
    auto it = out.letters.begin() + static_cast<std::ptrdiff_t>(pos);
    if (order == PairOrder::inverse_first) {
        it = out.letters.insert(it, l);
        out.letters.insert(it, std::move(inv));
    } else {
        it = out.letters.insert(it, std::move(inv));
        out.letters.insert(it, l);
    }
    return out;
}

template <class A>
BasicWord<A> insert_cancelling_pair(const BasicWord<A>& w, std::size_t pos, const typename A::letter_type& l,
                                    PairOrder order, const typename A::context_type& ctx) {
    BasicWord<A> single{w.genus, w.base, {l}};
    A::check(ctx, single);
    return insert_cancelling_pair(w, pos, l, order);
}

template <class A>
bool cancels_at(const BasicWord<A>& w, std::size_t pos) {
    return pos + 1 < w.size() && A::cancels(w[pos], w[pos + 1]);
}

template <class A>
BasicWord<A> delete_cancelling_pair(const BasicWord<A>& w, std::size_t pos) {
    if (pos + 1 >= w.size())
        throw InvariantError("no letter pair at position " + std::to_string(pos) + " in a word of length " +
                             std::to_string(w.size()));
    if (!A::cancels(w[pos], w[pos + 1]))
        throw InvariantError("letters at " + std::to_string(pos) + " and " + std::to_string(pos + 1) +
                             " are not mutually inverse");
    BasicWord<A> out = w;
    const auto it = out.letters.begin() + static_cast<std::ptrdiff_t>(pos);
    out.letters.erase(it, it + 2);
    return out;
}

template <class A>
BasicWord<A> commute_adjacent(const BasicWord<A>& w, std::size_t pos, const typename A::context_type& ctx) {
    if (pos + 1 >= w.size())
        throw InvariantError("no letter pair at position " + std::to_string(pos) + " in a word of length " +
                             std::to_string(w.size()));
    if (!A::commutes(ctx, w[pos], w[pos + 1]))
        throw InvariantError("letters at " + std::to_string(pos) + " and " + std::to_string(pos + 1) +
                             " are not declared disjoint");
    BasicWord<A> out = w;
    std::swap(out.letters[pos], out.letters[pos + 1]);
    return out;
}

template <class A>
BasicWord<A> conjugate_all(const BasicWord<A>& w, const Matrix& m, typename A::context_type& ctx) {
    return A::conjugate(ctx, w, m);
}

/// Total homology monodromy: M(l_n) ... M(l_1).
template <class A>
Matrix word_monodromy(const BasicWord<A>& w, const typename A::context_type& ctx) {
    A::check(ctx, w);
    Matrix acc = Matrix::identity(A::rank(ctx));
    for (const auto& l : w.letters) acc = A::matrix(ctx, l) * acc;
    return acc;
}

/// Free cancellation: repeatedly deletes the leftmost cancelling adjacent pair.
template <class A>
BasicWord<A> free_reduce(const BasicWord<A>& w) {
    BasicWord<A> out{w.genus, w.base, {}};
    out.letters.reserve(w.size());
    // A left-to-right stack performs exactly the leftmost-first deletions.
    for (const auto& l : w.letters) {
        if (!out.letters.empty() && A::cancels(out.letters.back(), l))
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

/// Letterwise equality up to A::same_letter.
template <class A>
bool same_letters(const BasicWord<A>& x, const BasicWord<A>& y) {
    if (x.genus != y.genus || x.base != y.base || x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!A::same_letter(x[i], y[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Words over N_g

struct Letter {
    OrientedCurve curve;
    int exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// t_{c;theta}^e  ->  t_{c;-theta}^{-e}: the same mapping class.
inline Letter theta_flipped(Letter l) {
    l.curve.theta = -l.curve.theta;
    l.exponent = -l.exponent;
    return l;
}

/// Representative with exponent +1.
inline Letter positive_form(const Letter& l) { return l.exponent > 0 ? l : theta_flipped(l); }

struct NonOrientableLetters {
    using letter_type = Letter;
    using context_type = CurveDictionary;

    static Letter inverse(Letter l) {
        l.exponent = -l.exponent;
        return l;
    }

    static bool same_letter(const Letter& x, const Letter& y) { return positive_form(x) == positive_form(y); }

    static bool cancels(const Letter& x, const Letter& y) {
        return x.curve.curve == y.curve.curve && same_letter(inverse(x), y);
    }

    static bool commutes(const CurveDictionary& dict, const Letter& x, const Letter& y) {
        return x.curve.curve == y.curve.curve || dict.disjoint(x.curve.curve, y.curve.curve);
    }

    static std::size_t rank(const CurveDictionary& dict) { return dict.rank(); }

    /// Homology action of the image of t_{c;theta}^e under the lift to the cover,
    /// i.e. of t_gamma^e t_{J gamma}^{-e}: x -> x + e(<x,gamma> gamma - <x,J gamma> J gamma).
    /// The closed form relies on <gamma, J gamma> = 0.
    static Matrix matrix(const CurveDictionary& dict, const Letter& l) {
        const auto& c = dict.curve(l.curve.curve);
        const std::size_t n = dict.rank();
        Matrix m = Matrix::identity(n);
        if (c.is_null()) return m;
        const auto [g, gbar] = lift_pair(dict, l.curve);
        for (std::size_t j = 0; j < n; ++j) {
            const HClass e = HClass::unit(dict.cover_genus(), j);
            const Integer p = pairing(e, g) * l.exponent;
            const Integer q = pairing(e, gbar) * l.exponent;
            for (std::size_t i = 0; i < n; ++i) m(i, j) += p * g[i] - q * gbar[i];
        }
        return m;
    }

    static void check(const CurveDictionary& dict, const BasicWord<NonOrientableLetters>& w) {
        if (w.genus != dict.genus())
            throw InvariantError("word over N_" + std::to_string(w.genus) + " used with a dictionary for N_" +
                                 std::to_string(dict.genus()));
        for (const auto& l : w.letters) {
            if (l.curve.curve >= dict.size())
                throw InvariantError("letter refers to unregistered curve index " + std::to_string(l.curve.curve));
            if (l.exponent != 1 && l.exponent != -1) throw InvariantError("letter exponent must be +1 or -1");
        }
    }

    static BasicWord<NonOrientableLetters> conjugate(CurveDictionary& dict, const BasicWord<NonOrientableLetters>& w,
                                                     const Matrix& m) {
        check(dict, w);
        require_lift_shadow(dict, m);
        BasicWord<NonOrientableLetters> out{w.genus, w.base, {}};
        out.letters.reserve(w.size());
        std::vector<std::pair<CurveIndex, CurveIndex>> image; // curve -> pushed curve
        for (const auto& l : w.letters) {
            const OrientedCurve pushed = push_forward_curve(dict, m, l.curve);
            out.letters.push_back(Letter{pushed, l.exponent});
            image.emplace_back(l.curve.curve, pushed.curve);
        }
        // A mapping class carries disjoint curves to disjoint curves.
        for (std::size_t i = 0; i < image.size(); ++i) {
            for (std::size_t j = i + 1; j < image.size(); ++j) {
                if (image[i].second != image[j].second && dict.disjoint(image[i].first, image[j].first) &&
                    !dict.disjoint(image[i].second, image[j].second))
                    dict.declare_disjoint(image[i].second, image[j].second);
            }
        }
        return out;
    }
};

using Word = BasicWord<NonOrientableLetters>;
using Move = BasicMove<Letter>;
using MoveCertificate = BasicCertificate<Letter>;

/// Replaces letter i by the same curve with flipped theta and negated exponent.
inline Word theta_flip(const Word& w, std::size_t i) {
    if (i >= w.size())
        throw InvariantError("flip position " + std::to_string(i) + " outside a word of length " +
                             std::to_string(w.size()));
    Word out = w;
    out.letters[i] = theta_flipped(out.letters[i]);
    return out;
}

/// Theta-flips every negative letter; the result is positive with the same monodromy.
inline Word normalize_positive(const Word& w) {
    Word out = w;
    for (auto& l : out.letters) l = positive_form(l);
    return out;
}

inline bool is_positive(const Word& w) {
    return std::all_of(w.letters.begin(), w.letters.end(), [](const Letter& l) { return l.exponent == 1; });
}

/// Inserts (w_i^-1 w_i) immediately after w_{i+1}.
inline Word insert_pair_after_successor(const Word& w, std::size_t i) {
    if (i + 1 >= w.size())
        throw InvariantError("index " + std::to_string(i) + " needs a successor letter in a word of length " +
                             std::to_string(w.size()));
    return insert_cancelling_pair(w, i + 2, w[i], PairOrder::inverse_first);
}

/// Inserts (w_{i+1} w_{i+1}^-1) immediately before w_i.
inline Word insert_successor_pair_before(const Word& w, std::size_t i) {
    if (i + 1 >= w.size())
        throw InvariantError("index " + std::to_string(i) + " needs a successor letter in a word of length " +
                             std::to_string(w.size()));
    return insert_cancelling_pair(w, i, w[i + 1], PairOrder::inverse_last);
}

/// Whether inserting `pair_letter` at `pos` has one of the two fixed insertion
/// shapes above: (l^-1 l) with l the letter two places to the left, or (l l^-1)
/// with l the letter right after the insertion point.
inline bool is_strict_insertion(const Word& w, std::size_t pos, const Letter& pair_letter, PairOrder order) {
    if (order == PairOrder::inverse_first)
        return pos >= 2 && pos <= w.size() && NonOrientableLetters::same_letter(w[pos - 2], pair_letter);
    return pos + 1 < w.size() && NonOrientableLetters::same_letter(w[pos + 1], pair_letter);
}

/// Whether deleting the pair at `pos` undoes a strict insertion.
inline bool is_strict_deletion(const Word& w, std::size_t pos) {
    if (!cancels_at(w, pos)) return false;
    const Word rest = delete_cancelling_pair(w, pos);
    return is_strict_insertion(rest, pos, w[pos + 1], PairOrder::inverse_first) ||
           is_strict_insertion(rest, pos, w[pos], PairOrder::inverse_last);
}

template <class A>
BasicWord<A> apply_move(const BasicWord<A>& w, const BasicMove<typename A::letter_type>& m,
                        typename A::context_type& ctx) {
    switch (m.kind) {
    case MoveKind::insert_pair_left_inv:
    case MoveKind::insert_pair_right_inv:
        if (!m.letter) throw InvariantError("insert move without a letter");
        return insert_cancelling_pair(w, m.position, *m.letter,
                                      m.kind == MoveKind::insert_pair_left_inv ? PairOrder::inverse_first
                                                                               : PairOrder::inverse_last,
                                      ctx);
    case MoveKind::delete_pair: return delete_cancelling_pair(w, m.position);
    case MoveKind::commute: return commute_adjacent(w, m.position, ctx);
    case MoveKind::conjugate_all:
        if (!m.matrix) throw InvariantError("conjugation move without a matrix");
        return conjugate_all(w, *m.matrix, ctx);
    case MoveKind::theta_flip:
        if constexpr (std::is_same_v<A, NonOrientableLetters>) {
            return theta_flip(w, m.position);
        } else {
            throw UnsupportedError("theta flip needs a non-orientable fiber");
        }
    }
    throw InvariantError("unknown move kind");
}

/// Moves that undo `m`, given the word `before` that `m` was applied to.
template <class A>
std::vector<BasicMove<typename A::letter_type>> inverse_moves(const BasicWord<A>& before,
                                                              const BasicMove<typename A::letter_type>& m) {
    using M = BasicMove<typename A::letter_type>;
    switch (m.kind) {
    case MoveKind::insert_pair_left_inv:
    case MoveKind::insert_pair_right_inv: return {M::remove(m.position)};
    case MoveKind::commute: return {M::commute(m.position)};
    case MoveKind::theta_flip: return {M::flip(m.position)};
    case MoveKind::conjugate_all: return {M::conjugate(inverse(*m.matrix))};
    case MoveKind::delete_pair: {
        const auto& x = before[m.position];
        const auto& y = before[m.position + 1];
        std::vector<M> out{M::insert(m.position, y, PairOrder::inverse_first)};
        if (!(A::inverse(y) == x)) out.push_back(M::flip(m.position));
        return out;
    }
    }
    return {};
}

/// Deduplication key: letterwise positive form encoded as (curve, theta) codes,
/// four big-endian bytes each, so byte order matches lexicographic code order.
inline std::string canonical_key(const Word& w) {
    std::string key;
    key.reserve(4 * w.size());
    for (const auto& l : w.letters) {
        const Letter p = positive_form(l);
        const std::uint32_t code = (p.curve.curve << 1) | (p.curve.theta == Theta::minus ? 1u : 0u);
        for (int shift = 24; shift >= 0; shift -= 8) key.push_back(static_cast<char>((code >> shift) & 0xffu));
    }
    return key;
}

} // namespace nlf

#endif // NLF_WORDS_HPP
