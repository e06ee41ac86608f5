#ifndef NLF_INVARIANTS_HPP
#define NLF_INVARIANTS_HPP

#include <nlf/cover.hpp>
#include <nlf/error.hpp>
#include <nlf/homology.hpp>
#include <nlf/words.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace nlf {

/// chi(X) = chi(N_g) chi(base) + n with chi(N_g) = 2 - g.
inline long long euler_characteristic(int g, Base base, long long n) {
    if (g < 1) throw InvariantError("non-orientable genus must be at least 1");
    if (n < 0) throw InvariantError("number of critical points must be non-negative");
    return (2LL - g) * euler_characteristic(base) + n;
}

/// Genus k of the cover fibration, solved from chi(X~) = 2 chi(X) and
/// chi(X~) = chi(Sigma_k) chi(base) + 2n.
inline int cover_genus_from_euler(int g, Base base, long long n) {
    const long long chi_base = euler_characteristic(base);
    const long long chi_cover = 2 * euler_characteristic(g, base, n);
    const long long rest = chi_cover - 2 * n;
    if (rest % chi_base != 0) throw InvariantError("Euler characteristics are inconsistent with an integral genus");
    const long long chi_fiber = rest / chi_base;
    if ((2 - chi_fiber) % 2 != 0) throw InvariantError("odd Euler characteristic for an orientable fiber");
    return static_cast<int>((2 - chi_fiber) / 2);
}

/// Necessary homology condition for a factorization over S^2: trivial total monodromy.
inline bool s2_closure_check(const Word& w, const CurveDictionary& dict) {
    if (w.base != Base::sphere) throw InvariantError("closure check applies to factorizations over S2 only");
    return word_monodromy(w, dict).is_identity();
}

struct FibrationSummary {
    int genus = 1;
    bool orientable = false;
    Base base = Base::disk;
    std::size_t letters_raw = 0;
    std::size_t letters_reduced = 0; // n
    long long chi_total = 0;
    long long chi_cover = 0;
    int cover_genus = 0;
    Matrix total_monodromy;
    std::vector<Integer> char_poly;
    Integer trace = 0;
    bool monodromy_trivial = false;

    /// Stable `key=value` lines.
    std::string to_text() const {
        std::ostringstream os;
        os << "fiber=N" << genus << '\n';
        os << "orientable=" << (orientable ? "true" : "false") << '\n';
        os << "base=" << to_string(base) << '\n';
        os << "genus=" << genus << '\n';
        os << "cover_genus=" << cover_genus << '\n';
        os << "letters_raw=" << letters_raw << '\n';
        os << "letters_reduced=" << letters_reduced << '\n';
        os << "chi_total=" << chi_total << '\n';
        os << "chi_cover=" << chi_cover << '\n';
        os << "cover_positive_critical_points=" << letters_reduced << '\n';
        os << "cover_negative_critical_points=" << letters_reduced << '\n';
        os << "trace=" << trace << '\n';
        os << "char_poly=";
        for (std::size_t i = 0; i < char_poly.size(); ++i) os << (i ? "," : "") << char_poly[i];
        os << '\n';
        os << "s2_closure=" << (base == Base::sphere ? (monodromy_trivial ? "true" : "false") : "n/a") << '\n';
        os << "total_monodromy=";
        for (std::size_t r = 0; r < total_monodromy.size(); ++r) {
            if (r) os << ';';
            for (std::size_t c = 0; c < total_monodromy.size(); ++c) os << (c ? "," : "") << total_monodromy(r, c);
        }
        os << '\n';
        os << "relatively_minimal=assumed\n";
        return os.str();
    }
};

/// Aggregate invariants. n is the length of the freely cancelled word.
inline FibrationSummary summarize(const Word& w, const CurveDictionary& dict) {
    FibrationSummary s;
    s.genus = w.genus;
    s.base = w.base;
    s.letters_raw = w.size();
    s.letters_reduced = free_reduce(w).size();
    const auto n = static_cast<long long>(s.letters_reduced);
    s.chi_total = euler_characteristic(w.genus, w.base, n);
    s.cover_genus = cover_genus_from_euler(w.genus, w.base, n);
    s.chi_cover = (2LL - 2LL * s.cover_genus) * euler_characteristic(w.base) + 2 * n;
    s.total_monodromy = word_monodromy(w, dict);
    s.char_poly = characteristic_polynomial(s.total_monodromy);
    s.trace = s.total_monodromy.trace();
    s.monodromy_trivial = s.total_monodromy.is_identity();
    return s;
}

} // namespace nlf

#endif // NLF_INVARIANTS_HPP
