#ifndef NLF_LIFTING_HPP
#define NLF_LIFTING_HPP

// Lifting factorizations on N_g to achiral factorizations on the orientation
// double cover Sigma_{g-1}: the twist t_{c;theta} goes to t_gamma t_{J gamma}^{-1},
// where gamma is the lift selected by theta.

#include <nlf/cover.hpp>
#include <nlf/error.hpp>
#include <nlf/homology.hpp>
#include <nlf/words.hpp>

#include <array>
#include <string>
#include <utility>

namespace nlf {

/// Twist letter on the cover: t_lift^exponent. Lifts of null-homologous curves
/// carry a symbolic tag instead of a class (the class is then zero).
struct AchiralLetter {
    HClass lift; // sign-canonical
    std::string null_tag;
    int exponent = 1;

    bool is_null() const noexcept { return !null_tag.empty(); }

    friend bool operator==(const AchiralLetter&, const AchiralLetter&) = default;
};

namespace detail {
// Null lift tags are "<tag>+" and "<tag>-"; both lifts share the base tag.
inline std::string null_base(const std::string& lift_tag) { return lift_tag.substr(0, lift_tag.size() - 1); }
} // namespace detail

/// Context for moves on lifted words: the deck involution, and optionally the
/// curve dictionary downstairs, whose disjoint pairs lift to disjoint pairs.
/// The dictionary, when given, must outlive the context.
class CoverContext {
public:
    explicit CoverContext(int k) : deck_(deck_involution(k)) {}
    explicit CoverContext(const CurveDictionary& dict) : deck_(dict.deck()), dict_(&dict) {}

    int genus() const { return deck_.genus(); }
    std::size_t rank() const { return deck_.matrix().size(); }
    const DeckInvolution& deck() const noexcept { return deck_; }
    const CurveDictionary* dictionary() const noexcept { return dict_; }

    /// Two cover twists commute when they are lifts of one curve downstairs, or of
    /// curves declared disjoint.
    bool commutes(const AchiralLetter& x, const AchiralLetter& y) const {
        if (x.is_null() != y.is_null()) return dict_ && disjoint_downstairs(x, y);
        if (x.is_null()) {
            if (detail::null_base(x.null_tag) == detail::null_base(y.null_tag)) return true;
        } else if (x.lift == y.lift || x.lift == deck_(y.lift).canonical()) {
            return true;
        }
        return dict_ && disjoint_downstairs(x, y);
    }

private:
    std::optional<CurveIndex> downstairs(const AchiralLetter& l) const {
        if (l.is_null()) return dict_->find_null(detail::null_base(l.null_tag));
        if (auto oc = dict_->find_lift(l.lift)) return oc->curve;
        return std::nullopt;
    }

    bool disjoint_downstairs(const AchiralLetter& x, const AchiralLetter& y) const {
        const auto cx = downstairs(x);
        const auto cy = downstairs(y);
        return cx && cy && (*cx == *cy || dict_->disjoint(*cx, *cy));
    }

    DeckInvolution deck_;
    const CurveDictionary* dict_ = nullptr;
};

struct CoverLetters {
    using letter_type = AchiralLetter;
    using context_type = CoverContext;

    static AchiralLetter inverse(AchiralLetter l) {
        l.exponent = -l.exponent;
        return l;
    }
    static bool same_letter(const AchiralLetter& x, const AchiralLetter& y) { return x == y; }
    static bool cancels(const AchiralLetter& x, const AchiralLetter& y) { return inverse(x) == y; }
    static bool commutes(const CoverContext& ctx, const AchiralLetter& x, const AchiralLetter& y) {
        return ctx.commutes(x, y);
    }
    static std::size_t rank(const CoverContext& ctx) { return ctx.rank(); }

    static Matrix matrix(const CoverContext& ctx, const AchiralLetter& l) {
        if (l.is_null()) return Matrix::identity(ctx.rank());
        return l.exponent > 0 ? transvection(l.lift) : inverse_transvection(l.lift);
    }

    static void check(const CoverContext& ctx, const BasicWord<CoverLetters>& w) {
        if (w.genus != ctx.genus())
            throw InvariantError("lifted word over Sigma_" + std::to_string(w.genus) + " used on Sigma_" +
                                 std::to_string(ctx.genus()));
        for (const auto& l : w.letters) {
            if (l.exponent != 1 && l.exponent != -1) throw InvariantError("letter exponent must be +1 or -1");
            if (l.is_null()) continue;
            if (l.lift.size() != ctx.rank())
                throw DimensionError("lifted letter of rank " + std::to_string(l.lift.size()) + " on a lattice of rank " +
                                     std::to_string(ctx.rank()));
            if (l.lift.is_zero()) throw InvariantError("lifted letter with zero class and no null tag");
        }
    }

    /// Simultaneous conjugation by an orientation-preserving mapping class with
    /// homology action M: every class gamma becomes M gamma.
    static BasicWord<CoverLetters> conjugate(CoverContext& ctx, const BasicWord<CoverLetters>& w, const Matrix& m) {
        check(ctx, w);
        if (m.size() != ctx.rank()) throw DimensionError("conjugator has the wrong size");
        if (!is_symplectic(m)) throw InvariantError("conjugator is not symplectic");
        BasicWord<CoverLetters> out = w;
        for (auto& l : out.letters)
            if (!l.is_null()) l.lift = (m * l.lift).canonical();
        return out;
    }
};

using AchiralWord = BasicWord<CoverLetters>;
using AchiralMove = BasicMove<AchiralLetter>;
using AchiralCertificate = BasicCertificate<AchiralLetter>;

inline void require_liftable(const CurveDictionary& dict) {
    if (dict.genus() < 3)
        throw UnsupportedError("lifting requires g >= 3 (got N_" + std::to_string(dict.genus()) + ")");
}

/// t_{c;theta}^{+1} -> (t_gamma, t_{J gamma}^{-1}); t_{c;theta}^{-1} -> (t_{J gamma}, t_gamma^{-1}).
inline std::array<AchiralLetter, 2> lift_letter(const CurveDictionary& dict, const Letter& l) {
    require_liftable(dict);
    if (l.curve.curve >= dict.size()) throw InvariantError("unknown curve index " + std::to_string(l.curve.curve));
    if (l.exponent != 1 && l.exponent != -1) throw InvariantError("letter exponent must be +1 or -1");
    const auto& c = dict.curve(l.curve.curve);
    AchiralLetter first;
    AchiralLetter second;
    if (c.is_null()) {
        const bool plus = l.curve.theta == Theta::plus;
        first.lift = second.lift = HClass(dict.rank());
        first.null_tag = c.null_tag + (plus ? "+" : "-");
        second.null_tag = c.null_tag + (plus ? "-" : "+");
    } else {
        auto [g, gbar] = lift_pair(dict, l.curve);
        first.lift = g.canonical();
        second.lift = gbar.canonical();
    }
    first.exponent = +1;
    second.exponent = -1;
    if (l.exponent > 0) return {first, second};
    // (t_g t_gbar^-1)^-1 = t_gbar t_g^-1
    return {CoverLetters::inverse(second), CoverLetters::inverse(first)};
}

/// Letterwise lift of a factorization; length doubles, positive and negative
/// letter counts agree.
inline AchiralWord lift_word(const CurveDictionary& dict, const Word& w) {
    require_liftable(dict);
    NonOrientableLetters::check(dict, w);
    AchiralWord out{dict.cover_genus(), w.base, {}};
    out.letters.reserve(2 * w.size());
    for (const auto& l : w.letters) {
        const auto pair = lift_letter(dict, l);
        out.letters.insert(out.letters.end(), pair.begin(), pair.end());
    }
    return out;
}

template <class W>
W concatenate(const W& x, const W& y) {
    W out = x;
    out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
    return out;
}

/// Homomorphism check of the lift: matrix(lift(w1 w2)) = matrix(lift w2) matrix(lift w1).
inline bool check_homomorphism(const CurveDictionary& dict, const Word& w1, const Word& w2) {
    const CoverContext ctx(dict);
    const Matrix joint = word_monodromy(lift_word(dict, concatenate(w1, w2)), ctx);
    const Matrix m1 = word_monodromy(lift_word(dict, w1), ctx);
    const Matrix m2 = word_monodromy(lift_word(dict, w2), ctx);
    return joint == m2 * m1;
}

/// Whether `w` has the shape of the lift of a positive word: consecutive pairs
/// (t_p, t_q^{-1}) with q the other lift of the same curve.
inline bool is_lifted_positive(const AchiralWord& w, const CoverContext& ctx) {
    if (w.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < w.size(); i += 2) {
        const auto& p = w[i];
        const auto& q = w[i + 1];
        if (p.exponent != 1 || q.exponent != -1 || p.is_null() != q.is_null()) return false;
        if (p.is_null()) {
            if (detail::null_base(p.null_tag) != detail::null_base(q.null_tag)) return false;
        } else if (ctx.deck()(p.lift).canonical() != q.lift) {
            return false;
        }
    }
    return true;
}

} // namespace nlf

#endif // NLF_LIFTING_HPP
