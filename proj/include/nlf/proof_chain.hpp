#ifndef NLF_PROOF_CHAIN_HPP
#define NLF_PROOF_CHAIN_HPP

// Scripted lift-level move chains realizing the moves (i-1), (i-2) and (ii) of
// a factorization over N_g as Hurwitz moves of its lift to the cover.
//
// With pair i of the lift written P Q (P = t_gamma, Q = t_{J gamma}^{-1}) and
// a = 2i, the chain for (i-1) is
//   commute a; insert (P^-1 P) at a+3 and a+6; delete a+3; commute a;
//   insert (Q^-1 Q) at a+3 and a+7; delete a+3; commute a+4; commute a+6
// which turns  P Q P' Q'  into  P Q P' Q' Q^-1 P^-1 P Q,  the lift of
// w_i w_{i+1} w_i^-1 w_i.

#include <nlf/certificate.hpp>
#include <nlf/error.hpp>
#include <nlf/lifting.hpp>
#include <nlf/words.hpp>

#include <string>
#include <vector>

namespace nlf {

namespace detail {

inline void require_chain_input(const AchiralWord& lifted, std::size_t i, const CoverContext& ctx) {
    if (!is_lifted_positive(lifted, ctx))
        throw InvariantError("proof chain needs the lift of a positive word (pairs t_p t_q^-1, q = J p)");
    const std::size_t n = lifted.size() / 2;
    if (n < 2) throw InvariantError("proof chain needs a word of length at least 2, got " + std::to_string(n));
    if (i + 1 >= n)
        throw InvariantError("index " + std::to_string(i) + " out of range for a word of length " + std::to_string(n));
}

inline std::vector<AchiralMove> successor_after_moves(const AchiralWord& lifted, std::size_t i) {
    const std::size_t a = 2 * i;
    const AchiralLetter& p = lifted[a];
    const AchiralLetter& q = lifted[a + 1];
    const auto left = PairOrder::inverse_first;
    return {
        AchiralMove::commute(a),
        AchiralMove::insert(a + 3, p, left),
        AchiralMove::insert(a + 6, p, left),
        AchiralMove::remove(a + 3),
        AchiralMove::commute(a),
        AchiralMove::insert(a + 3, q, left),
        AchiralMove::insert(a + 7, q, left),
        AchiralMove::remove(a + 3),
        AchiralMove::commute(a + 4),
        AchiralMove::commute(a + 6),
    };
}

inline AchiralWord reverse_inverse(const AchiralWord& w) {
    AchiralWord out{w.genus, w.base, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(CoverLetters::inverse(*it));
    return out;
}

/// Moves acting on reverse_inverse(w) exactly as `moves` act on w.
inline std::vector<AchiralMove> mirror_moves(const std::vector<AchiralMove>& moves, std::size_t start_length) {
    std::vector<AchiralMove> out;
    std::size_t m = start_length;
    for (const auto& mv : moves) {
        AchiralMove r = mv;
        switch (mv.kind) {
        case MoveKind::insert_pair_left_inv:
        case MoveKind::insert_pair_right_inv:
            r.position = m - mv.position;
            m += 2;
            break;
        case MoveKind::delete_pair:
            r.position = m - mv.position - 2;
            m -= 2;
            break;
        case MoveKind::commute: r.position = m - mv.position - 2; break;
        case MoveKind::conjugate_all:
        case MoveKind::theta_flip: break;
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

/// Lift-level certificate from lift(w) to lift(insert_pair_after_successor(w, i)).
inline AchiralCertificate chain_insert_after_successor(const AchiralWord& lifted, std::size_t i, CoverContext& ctx) {
    detail::require_chain_input(lifted, i, ctx);
    return make_certificate(lifted, detail::successor_after_moves(lifted, i), ctx);
}

/// Lift-level certificate from lift(w) to lift(insert_successor_pair_before(w, i)):
/// the (i-1) chain on the reversed inverse word, mirrored back.
inline AchiralCertificate chain_insert_successor_before(const AchiralWord& lifted, std::size_t i, CoverContext& ctx) {
    detail::require_chain_input(lifted, i, ctx);
    const std::size_t n = lifted.size() / 2;
    const AchiralWord mirrored = detail::reverse_inverse(lifted);
    const auto moves = detail::successor_after_moves(mirrored, n - 2 - i);
    return make_certificate(lifted, detail::mirror_moves(moves, lifted.size()), ctx);
}

/// Lift-level certificate for (ii): one simultaneous conjugation by M.
inline AchiralCertificate chain_conjugation(const AchiralWord& lifted, const Matrix& m, CoverContext& ctx) {
    if (!ctx.deck().commutes_with(m)) throw InvariantError("conjugator does not commute with J");
    return make_certificate(lifted, {AchiralMove::conjugate(m)}, ctx);
}

} // namespace nlf

#endif // NLF_PROOF_CHAIN_HPP
