#ifndef NLF_CERTIFICATE_HPP
#define NLF_CERTIFICATE_HPP

#include <nlf/error.hpp>
#include <nlf/io.hpp>
#include <nlf/lifting.hpp>
#include <nlf/words.hpp>

#include <string>

namespace nlf {

inline std::uint64_t word_hash(const Word& w, const CurveDictionary& dict) { return io::word_hash(w, dict); }
inline std::uint64_t word_hash(const AchiralWord& w, const CoverContext&) { return io::word_hash(w); }

/// Applies every move of `cert` to `start`, validating each step.
template <class A>
BasicWord<A> replay(const BasicCertificate<typename A::letter_type>& cert, const BasicWord<A>& start,
                    typename A::context_type& ctx) {
    if (word_hash(start, ctx) != cert.start_hash)
        throw ReplayError(ReplayError::npos, "start word hash " + io::hex(word_hash(start, ctx)) +
                                                 " does not match certificate start " + io::hex(cert.start_hash));
    BasicWord<A> w = start;
    for (std::size_t i = 0; i < cert.moves.size(); ++i) {
        try {
            w = apply_move(w, cert.moves[i], ctx);
        } catch (const Error& e) {
            throw ReplayError(i, std::string(to_string(cert.moves[i].kind)) + ": " + e.what());
        }
    }
    if (word_hash(w, ctx) != cert.end_hash)
        throw ReplayError(ReplayError::npos, "replayed word hash " + io::hex(word_hash(w, ctx)) +
                                                 " does not match certificate end " + io::hex(cert.end_hash));
    return w;
}

template <class A>
BasicCertificate<typename A::letter_type> make_certificate(const BasicWord<A>& start,
                                                           std::vector<BasicMove<typename A::letter_type>> moves,
                                                           typename A::context_type& ctx) {
    BasicCertificate<typename A::letter_type> cert;
    cert.start_hash = word_hash(start, ctx);
    BasicWord<A> w = start;
    for (const auto& m : moves) w = apply_move(w, m, ctx);
    cert.end_hash = word_hash(w, ctx);
    cert.moves = std::move(moves);
    return cert;
}

/// Certificate running `cert` backwards; `start` is the word `cert` starts from.
template <class A>
BasicCertificate<typename A::letter_type> reverse_certificate(const BasicCertificate<typename A::letter_type>& cert,
                                                              const BasicWord<A>& start,
                                                              typename A::context_type& ctx) {
    std::vector<BasicWord<A>> trail{start};
    for (const auto& m : cert.moves) trail.push_back(apply_move(trail.back(), m, ctx));
    std::vector<BasicMove<typename A::letter_type>> back;
    for (std::size_t i = cert.moves.size(); i-- > 0;) {
        auto inv = inverse_moves(trail[i], cert.moves[i]);
        back.insert(back.end(), inv.begin(), inv.end());
    }
    return {cert.end_hash, cert.start_hash, std::move(back)};
}

} // namespace nlf

#endif // NLF_CERTIFICATE_HPP
