#include <nlf/generate.hpp>
#include <nlf/invariants.hpp>

#include <gtest/gtest.h>

using namespace nlf;

namespace {

constexpr Theta P = Theta::plus;
constexpr Theta M = Theta::minus;

CurveDictionary n3() {
    CurveDictionary d(3);
    d.register_curve("c", HClass{1, 0, 0, 0});
    d.register_curve("e", HClass{0, 1, 0, 0});
    return d;
}

Letter L(const CurveDictionary& d, const std::string& id, Theta t, int e = 1) { return Letter{d.oriented(id, t), e}; }

} // namespace

TEST(Euler, Examples) {
    EXPECT_EQ(euler_characteristic(3, Base::sphere, 4), 2);
    EXPECT_EQ(euler_characteristic(2, Base::disk, 0), 0);
    EXPECT_EQ(euler_characteristic(1, Base::sphere, 0), 2);
    EXPECT_THROW(euler_characteristic(0, Base::disk, 0), InvariantError);
    EXPECT_THROW(euler_characteristic(3, Base::disk, -1), InvariantError);
}

TEST(CoverGenus, Examples) {
    EXPECT_EQ(cover_genus_from_euler(3, Base::sphere, 4), 2);
    EXPECT_EQ(cover_genus_from_euler(5, Base::disk, 0), 4);
}

TEST(CoverGenus, AlwaysOneLess) {
    for (int g = 1; g <= 50; ++g)
        for (long long n = 0; n <= 100; ++n)
            for (Base b : {Base::disk, Base::sphere}) ASSERT_EQ(cover_genus_from_euler(g, b, n), g - 1);
}

TEST(S2Closure, Examples) {
    const auto d = n3();
    EXPECT_TRUE(s2_closure_check(Word{3, Base::sphere, {}}, d));
    EXPECT_TRUE(s2_closure_check(Word{3, Base::sphere, {L(d, "c", P), L(d, "c", M)}}, d));
    EXPECT_FALSE(s2_closure_check(Word{3, Base::sphere, {L(d, "c", P)}}, d));
    EXPECT_THROW(s2_closure_check(Word{3, Base::disk, {}}, d), InvariantError);
}

TEST(Summarize, EmptyOverSphere) {
    const auto d = n3();
    const auto s = summarize(Word{3, Base::sphere, {}}, d);
    EXPECT_EQ(s.chi_total, -2);
    EXPECT_EQ(s.chi_cover, -4);
    EXPECT_TRUE(s.monodromy_trivial);
    EXPECT_NE(s.to_text().find("s2_closure=true\n"), std::string::npos);
}

TEST(Summarize, FourLetterWord) {
    const auto d = n3();
    const Word w{3, Base::sphere, {L(d, "c", P), L(d, "e", P), L(d, "c", M), L(d, "e", M)}};
    const auto s = summarize(w, d);
    EXPECT_EQ(s.letters_reduced, 4u);
    EXPECT_EQ(s.chi_total, 2);
    EXPECT_EQ(s.chi_cover, 4);
    EXPECT_EQ(s.cover_genus, 2);
    EXPECT_EQ(s.trace, s.total_monodromy.trace());
    const std::string text = s.to_text();
    EXPECT_EQ(text.rfind("fiber=N3\norientable=false\nbase=S2\n", 0), 0u);
    EXPECT_NE(text.find("chi_total=2\n"), std::string::npos);
    EXPECT_NE(text.find("cover_positive_critical_points=4\n"), std::string::npos);
}

TEST(Summarize, ReducedCountUsedForEuler) {
    const auto d = n3();
    const Word w{3, Base::disk, {L(d, "e", P), L(d, "c", P, -1), L(d, "c", P)}};
    const auto s = summarize(w, d);
    EXPECT_EQ(s.letters_raw, 3u);
    EXPECT_EQ(s.letters_reduced, 1u);
    EXPECT_EQ(s.chi_total, 0);
}

TEST(Summarize, ChiCoverDoublesAndMovesPreserveInvariants) {
    Rng rng(11);
    const auto d0 = random_dictionary(4, 5, rng);
    const auto pool = letter_conjugators(d0, 4);
    for (int s = 0; s < 30; ++s) {
        auto d = d0;
        Word w = random_word(d, rng.below(6), Base::sphere, rng, false);
        const auto before = summarize(w, d);
        EXPECT_EQ(before.chi_cover, 2 * before.chi_total);
        for (int step = 0; step < 4; ++step) w = apply_move(w, random_move(w, d, pool, rng), d);
        const auto after = summarize(w, d);
        EXPECT_EQ(after.char_poly, before.char_poly);
        EXPECT_EQ(after.monodromy_trivial, before.monodromy_trivial);
        EXPECT_EQ(after.trace, before.trace);
    }
}
