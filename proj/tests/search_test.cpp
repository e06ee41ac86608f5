#include <nlf/certificate.hpp>
#include <nlf/generate.hpp>
#include <nlf/search.hpp>

#include <gtest/gtest.h>

using namespace nlf;

namespace {

constexpr Theta P = Theta::plus;
constexpr Theta M = Theta::minus;

struct Fixture {
    CurveDictionary dict{4};
    CurveIndex c;
    CurveIndex d;
    CurveIndex e;
    CurveIndex f;

    Fixture() {
        c = dict.register_curve("c", HClass{1, 0, 0, 0, 0, 0});
        d = dict.register_curve("d", HClass{1, 1, 0, 0, 0, 0});
        e = dict.register_curve("e", HClass{0, 1, 0, 0, 0, 0});
        f = dict.register_curve("f", HClass{1, 0, 1, 0, 0, 0});
    }

    Letter L(CurveIndex i, Theta t, int x = 1) const { return Letter{{i, t}, x}; }
    Word word(std::vector<Letter> ls, Base b = Base::disk) const { return Word{4, b, std::move(ls)}; }
};

std::size_t real_moves(const MoveCertificate& cert) {
    return static_cast<std::size_t>(std::count_if(cert.moves.begin(), cert.moves.end(),
                                                  [](const Move& m) { return m.kind != MoveKind::theta_flip; }));
}

} // namespace

TEST(QuickDistinguish, SameWord) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P), fx.L(fx.e, M)});
    EXPECT_FALSE(quick_distinguish(w, w, fx.dict));
}

TEST(QuickDistinguish, SingleTwistAgainstEmpty) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P)});
    const auto diff = quick_distinguish(w, fx.word({}), fx.dict);
    ASSERT_TRUE(diff);
    // The lifted pair is unipotent, so trace and char_poly agree with the identity.
    EXPECT_EQ(diff->invariant, "s2_closure");
    EXPECT_EQ(word_monodromy(w, fx.dict).trace(), 6);
}

TEST(QuickDistinguish, FiberAndBase) {
    Fixture fx;
    EXPECT_EQ(quick_distinguish(fx.word({}), fx.word({}, Base::sphere), fx.dict)->invariant, "base");
    EXPECT_EQ(quick_distinguish(fx.word({}), Word{5, Base::disk, {}}, fx.dict)->invariant, "fiber");
}

TEST(QuickDistinguish, ConjugateAgrees) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P), fx.L(fx.e, M), fx.L(fx.d, P)});
    const Matrix m = NonOrientableLetters::matrix(fx.dict, fx.L(fx.d, M));
    const Word x = conjugate_all(w, m, fx.dict);
    EXPECT_FALSE(quick_distinguish(w, x, fx.dict));
}

TEST(QuickDistinguish, CharPoly) {
    Fixture fx;
    const Word w1 = fx.word({fx.L(fx.c, P), fx.L(fx.e, P)});
    const Word w2 = fx.word({fx.L(fx.c, P)});
    ASSERT_NE(characteristic_polynomial(word_monodromy(w1, fx.dict)),
              characteristic_polynomial(word_monodromy(w2, fx.dict)));
    SearchConfig cfg;
    const auto out = bfs_equivalent(w1, w2, cfg, fx.dict);
    EXPECT_EQ(out.verdict, Verdict::distinguished);
    EXPECT_EQ(out.distinction->invariant, "char_poly");
    EXPECT_NE(out.distinction->left, out.distinction->right);
    EXPECT_EQ(out.stats.nodes_expanded, 0u);
}

TEST(Bfs, InsertionFoundInOneMove) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P), fx.L(fx.e, P)});
    const Word x = insert_cancelling_pair(w, 1, fx.L(fx.d, P), PairOrder::inverse_first);
    SearchConfig cfg;
    const auto out = bfs_equivalent(w, x, cfg, fx.dict);
    ASSERT_EQ(out.verdict, Verdict::equivalent);
    EXPECT_EQ(real_moves(*out.certificate), 1u);
    EXPECT_EQ(replay(*out.certificate, w, fx.dict), x);
}

TEST(Bfs, CommuteFoundInOneMove) {
    Fixture fx;
    fx.dict.declare_disjoint("c", "f");
    const Word w = fx.word({fx.L(fx.c, P), fx.L(fx.f, P)});
    const Word x = fx.word({fx.L(fx.f, P), fx.L(fx.c, P)});
    const auto out = bfs_equivalent(w, x, SearchConfig{}, fx.dict);
    ASSERT_EQ(out.verdict, Verdict::equivalent);
    ASSERT_EQ(out.certificate->moves.size(), 1u);
    EXPECT_EQ(out.certificate->moves[0].kind, MoveKind::commute);
    EXPECT_EQ(replay(*out.certificate, w, fx.dict), x);
}

TEST(Bfs, IdenticalWordsNeedNoMoves) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P, -1)});
    const auto out = bfs_equivalent(w, w, SearchConfig{}, fx.dict);
    ASSERT_EQ(out.verdict, Verdict::equivalent);
    EXPECT_EQ(real_moves(*out.certificate), 0u);
}

TEST(Bfs, FlipOnlyDifference) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P, -1), fx.L(fx.e, P)});
    const auto out = bfs_equivalent(w, normalize_positive(w), SearchConfig{}, fx.dict);
    ASSERT_EQ(out.verdict, Verdict::equivalent);
    EXPECT_EQ(replay(*out.certificate, w, fx.dict), normalize_positive(w));
}

TEST(Bfs, BudgetGivesInconclusive) {
    Fixture fx;
    // Same monodromy, different words: only a long chain links them, if any.
    const Word w1 = fx.word({fx.L(fx.c, P), fx.L(fx.c, M), fx.L(fx.e, P), fx.L(fx.d, P)});
    const Word w2 = fx.word({fx.L(fx.e, P), fx.L(fx.d, P), fx.L(fx.e, P), fx.L(fx.e, M)});
    ASSERT_FALSE(quick_distinguish(w1, w2, fx.dict));
    SearchConfig cfg;
    cfg.node_budget = 5;
    const auto out = bfs_equivalent(w1, w2, cfg, fx.dict);
    EXPECT_EQ(out.verdict, Verdict::inconclusive);
    EXPECT_EQ(out.stats.stop_reason, "budget");
    EXPECT_FALSE(out.certificate);
}

TEST(Bfs, DepthLimitGivesInconclusive) {
    Fixture fx;
    const Word w1 = fx.word({fx.L(fx.e, P), fx.L(fx.c, P), fx.L(fx.c, M)});
    const Word w2 = fx.word({fx.L(fx.d, P), fx.L(fx.d, M), fx.L(fx.e, P)});
    SearchConfig cfg;
    cfg.max_depth = 1;
    const auto out = bfs_equivalent(w1, w2, cfg, fx.dict);
    EXPECT_EQ(out.verdict, Verdict::inconclusive);
    cfg.max_depth = 2;
    const auto deeper = bfs_equivalent(w1, w2, cfg, fx.dict);
    ASSERT_EQ(deeper.verdict, Verdict::equivalent);
    EXPECT_EQ(replay(*deeper.certificate, w1, fx.dict), w2);
}

TEST(Bfs, Deterministic) {
    Rng rng(77);
    const auto d0 = random_dictionary(4, 4, rng);
    const Word w = random_word(d0, 3, Base::disk, rng);
    auto d = d0;
    Word x = w;
    for (int i = 0; i < 2; ++i) x = apply_move(x, random_move(x, d, {}, rng), d);
    auto da = d;
    auto db = d;
    const auto a = bfs_equivalent(w, x, SearchConfig{}, da);
    const auto b = bfs_equivalent(w, x, SearchConfig{}, db);
    ASSERT_EQ(a.verdict, Verdict::equivalent);
    EXPECT_EQ(a.certificate, b.certificate);
    EXPECT_EQ(a.stats.nodes_stored, b.stats.nodes_stored);
}

TEST(Bfs, StrictPositionsRestrictInsertions) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P), fx.L(fx.e, P), fx.L(fx.d, P)});
    const Word strict = insert_pair_after_successor(w, 0);
    const Word loose = insert_cancelling_pair(w, 0, fx.L(fx.d, P), PairOrder::inverse_first);
    SearchConfig cfg;
    cfg.strict_positions = true;
    cfg.max_depth = 1;
    EXPECT_EQ(bfs_equivalent(w, strict, cfg, fx.dict).verdict, Verdict::equivalent);
    EXPECT_EQ(bfs_equivalent(w, loose, cfg, fx.dict).verdict, Verdict::inconclusive);
    cfg.strict_positions = false;
    EXPECT_EQ(bfs_equivalent(w, loose, cfg, fx.dict).verdict, Verdict::equivalent);
}

TEST(Bfs, ConjugationFromPool) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P), fx.L(fx.e, P)});
    const Matrix m = NonOrientableLetters::matrix(fx.dict, fx.L(fx.d, P));
    auto d = fx.dict;
    const Word x = conjugate_all(w, m, d);
    SearchConfig cfg;
    cfg.conjugator_pool = {m};
    const auto out = bfs_equivalent(w, x, cfg, d);
    ASSERT_EQ(out.verdict, Verdict::equivalent);
    EXPECT_EQ(real_moves(*out.certificate), 1u);
    cfg.allowed_moves.erase(MoveKind::conjugate_all);
    cfg.max_depth = 2;
    EXPECT_NE(bfs_equivalent(w, x, cfg, d).verdict, Verdict::equivalent);
}

TEST(Config, Validation) {
    Fixture fx;
    SearchConfig cfg;
    cfg.node_budget = 0;
    EXPECT_THROW(cfg.validate(fx.dict), InvariantError);
    cfg.node_budget = 10;
    cfg.conjugator_pool = {transvection(HClass{0, 1, 0, 0, 0, 0})};
    EXPECT_THROW(cfg.validate(fx.dict), InvariantError);
}

TEST(Replay, TamperedStepReportsIndex) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P), fx.L(fx.e, P)});
    auto cert = make_certificate(w, {Move::insert(0, fx.L(fx.d, P), PairOrder::inverse_first), Move::remove(0)}, fx.dict);
    EXPECT_EQ(replay(cert, w, fx.dict), w);
    cert.moves[1] = Move::remove(1);
    try {
        replay(cert, w, fx.dict);
        FAIL();
    } catch (const ReplayError& e) {
        EXPECT_EQ(e.step(), 1u);
    }
}

TEST(Replay, HashMismatch) {
    Fixture fx;
    const Word w = fx.word({fx.L(fx.c, P)});
    const auto cert = make_certificate(w, {}, fx.dict);
    try {
        replay(cert, fx.word({fx.L(fx.e, P)}), fx.dict);
        FAIL();
    } catch (const ReplayError& e) {
        EXPECT_EQ(e.step(), ReplayError::npos);
    }
}

TEST(Replay, ReverseCertificate) {
    Fixture fx;
    fx.dict.declare_disjoint("c", "f");
    const Word w = fx.word({fx.L(fx.c, P), fx.L(fx.f, M, -1), fx.L(fx.e, P)});
    const std::vector<Move> moves{Move::commute(0), Move::flip(0), Move::insert(3, fx.L(fx.e, M), PairOrder::inverse_last),
                                  Move::remove(3)};
    const auto cert = make_certificate(w, moves, fx.dict);
    const Word end = replay(cert, w, fx.dict);
    EXPECT_EQ(replay(reverse_certificate(cert, w, fx.dict), end, fx.dict), w);
}
