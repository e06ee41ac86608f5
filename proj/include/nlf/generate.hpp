#ifndef NLF_GENERATE_HPP
#define NLF_GENERATE_HPP

// Seeded random dictionaries, words and moves for property tests. Draws use
// plain modulo reduction of mt19937_64 output so results do not depend on the
// standard library's distribution implementations.

#include <nlf/cover.hpp>
#include <nlf/error.hpp>
#include <nlf/homology.hpp>
#include <nlf/words.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace nlf {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
    long long between(long long lo, long long hi) { return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Dictionary for N_g with up to `count` curves c1, c2, ... whose lifts have
/// coefficients in {-1, 0, 1}, are non-degenerate and pairwise distinct. Pairs
/// whose lifts are all orthogonal are declared disjoint.
inline CurveDictionary random_dictionary(int g, std::size_t count, Rng& rng, bool declare_orthogonal = true) {
    CurveDictionary dict(g);
    const std::size_t rank = dict.rank();
    if (rank == 0) return dict;
    std::set<std::string> seen;
    for (std::size_t attempt = 0; dict.size() < count && attempt < 200 * count; ++attempt) {
        HClass v(rank);
        for (std::size_t i = 0; i < rank; ++i) v[i] = rng.between(-1, 1);
        if (v.is_zero() || pairing(v, dict.deck()(v)) != 0) continue;
        const HClass jv = dict.deck()(v);
        if (jv == v || jv == -v) continue;
        if (!seen.insert(dict.class_key(v)).second) continue;
        dict.register_curve("c" + std::to_string(dict.size() + 1), v);
    }
    if (declare_orthogonal) {
        for (CurveIndex a = 0; a < dict.size(); ++a) {
            for (CurveIndex b = a + 1; b < dict.size(); ++b) {
                const auto& ca = dict.curve(a);
                const auto& cb = dict.curve(b);
                if (pairing(ca.lift, cb.lift) == 0 && pairing(ca.lift, cb.partner) == 0 &&
                    pairing(ca.partner, cb.lift) == 0 && pairing(ca.partner, cb.partner) == 0)
                    dict.declare_disjoint(a, b);
            }
        }
    }
    return dict;
}

/// Word of length n over the registered curves with random theta; exponents are
/// +1, or random signs when `positive` is false.
inline Word random_word(const CurveDictionary& dict, std::size_t n, Base base, Rng& rng, bool positive = true) {
    if (dict.size() == 0 && n > 0) throw InvariantError("cannot draw letters from an empty dictionary");
    Word w{dict.genus(), base, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<CurveIndex>(rng.below(dict.size()));
        const Theta t = rng.coin() ? Theta::plus : Theta::minus;
        const int e = positive || rng.coin() ? 1 : -1;
        w.letters.push_back(Letter{{c, t}, e});
    }
    return w;
}

/// Word of length n with `pairs` cancelling pairs planted at random positions.
inline Word random_word_with_pairs(const CurveDictionary& dict, std::size_t n, std::size_t pairs, Base base, Rng& rng) {
    Word w = random_word(dict, n, base, rng, false);
    for (std::size_t k = 0; k < pairs; ++k) {
        const auto pos = static_cast<std::size_t>(rng.below(w.size() + 1));
        const Letter l = random_word(dict, 1, base, rng, false)[0];
        w = insert_cancelling_pair(w, pos, l, rng.coin() ? PairOrder::inverse_first : PairOrder::inverse_last);
    }
    return w;
}

/// Homology actions of the lifted twists t_{c;+}^{+-1} of the first `count`
/// dictionary curves: admissible conjugators that commute with J.
inline std::vector<Matrix> letter_conjugators(const CurveDictionary& dict, std::size_t count) {
    std::vector<Matrix> out;
    for (CurveIndex c = 0; c < dict.size() && out.size() < count; ++c) {
        if (dict.curve(c).is_null() || dict.curve(c).degenerate()) continue;
        out.push_back(NonOrientableLetters::matrix(dict, Letter{{c, Theta::plus}, 1}));
        if (out.size() < count) out.push_back(NonOrientableLetters::matrix(dict, Letter{{c, Theta::plus}, -1}));
    }
    return out;
}

/// A random applicable move on `w`: insertion of a letter already in `w`,
/// deletion, commutation, or conjugation from `pool`.
inline Move random_move(const Word& w, const CurveDictionary& dict, const std::vector<Matrix>& pool, Rng& rng) {
    std::vector<std::size_t> deletable;
    std::vector<std::size_t> commutable;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (cancels_at(w, p)) deletable.push_back(p);
        if (!NonOrientableLetters::same_letter(w[p], w[p + 1]) && NonOrientableLetters::commutes(dict, w[p], w[p + 1]))
            commutable.push_back(p);
    }
    for (;;) {
        switch (rng.below(4)) {
        case 0:
            if (w.empty()) break;
            return Move::insert(static_cast<std::size_t>(rng.below(w.size() + 1)), w[rng.below(w.size())],
                                rng.coin() ? PairOrder::inverse_first : PairOrder::inverse_last);
        case 1:
            if (deletable.empty()) break;
            return Move::remove(deletable[rng.below(deletable.size())]);
        case 2:
            if (commutable.empty()) break;
            return Move::commute(commutable[rng.below(commutable.size())]);
        default:
            if (pool.empty()) break;
            return Move::conjugate(pool[rng.below(pool.size())]);
        }
        if (w.empty() && pool.empty()) throw InvariantError("no move applies to the empty word without conjugators");
    }
}

} // namespace nlf

#endif // NLF_GENERATE_HPP
