#include <nlf/cover.hpp>
#include <nlf/words.hpp>

#include <gtest/gtest.h>

using namespace nlf;

namespace {

// N_3, cover genus 2: J a1 = a2, J b1 = -b2.
const HClass a1{1, 0, 0, 0};
const HClass b1{0, 1, 0, 0};
const HClass a2{0, 0, 1, 0};
const HClass b2{0, 0, 0, 1};

} // namespace

TEST(LiftPair, ThetaSelectsLift) {
    CurveDictionary d(3);
    d.register_curve("c", a1);
    EXPECT_EQ(lift_pair(d, d.oriented("c", Theta::plus)), std::make_pair(a1, a2));
    EXPECT_EQ(lift_pair(d, d.oriented("c", Theta::minus)), std::make_pair(a2, a1));
}

TEST(LiftPair, DoubleFlipIsIdentity) {
    CurveDictionary d(3);
    const OrientedCurve oc = d.oriented(d.curve(d.register_curve("c", HClass{1, 1, 0, 0})).id, Theta::plus);
    const OrientedCurve twice{oc.curve, -(-oc.theta)};
    EXPECT_EQ(lift_pair(d, twice), lift_pair(d, oc));
}

TEST(LiftPair, ComponentsExchangedByJ) {
    CurveDictionary d(4);
    d.register_curve("c", HClass{1, 0, 1, 0, 0, 0});
    for (Theta t : {Theta::plus, Theta::minus}) {
        const auto [x, y] = lift_pair(d, d.oriented("c", t));
        EXPECT_EQ(d.deck()(x), y);
        EXPECT_EQ(d.deck()(y), x);
    }
}

TEST(LiftPair, UnknownCurve) {
    CurveDictionary d(3);
    EXPECT_THROW(lift_pair(d, OrientedCurve{5, Theta::plus}), InvariantError);
    EXPECT_THROW(d.oriented("nope", Theta::plus), InvariantError);
}

TEST(Register, NonPrimitiveRejected) {
    CurveDictionary d(3);
    try {
        d.register_curve("c", HClass{2, 0, 0, 0});
        FAIL();
    } catch (const InvariantError& e) {
        EXPECT_NE(std::string(e.what()).find("non-primitive"), std::string::npos);
    }
}

TEST(Register, SignCanonicalized) {
    CurveDictionary d(3);
    d.register_curve("c", -a1);
    EXPECT_EQ(d.name("c").declared, a1);
    EXPECT_EQ(lift_pair(d, d.oriented("c", Theta::plus)).first, a1);
}

TEST(Register, AcceptsIsotropicPair) {
    EXPECT_EQ(pairing(a1, a2), 0);
    CurveDictionary d(3);
    EXPECT_NO_THROW(d.register_curve("c", a1));
    EXPECT_TRUE(d.warnings().empty());
}

TEST(Register, RejectsNonzeroSelfPairing) {
    CurveDictionary d(3);
    // J(a1 + b2) = a2 - b1, pairing -2.
    EXPECT_THROW(d.register_curve("c", a1 + b2), InvariantError);
}

TEST(Register, DistinctErrors) {
    CurveDictionary d(3);
    d.register_curve("c", a1);
    EXPECT_THROW(d.register_curve("c", b1 + b2), InvariantError);
    EXPECT_NO_THROW(d.register_curve("c", a1)); // identical re-declaration
    EXPECT_THROW(d.register_curve("x", HClass{1, 0, 0}), DimensionError);
    EXPECT_THROW(d.register_curve("z", HClass(4)), InvariantError);
}

TEST(Register, AliasSharesCurve) {
    CurveDictionary d(3);
    const auto c = d.register_curve("c", a1);
    const auto e = d.register_curve("e", a2);
    EXPECT_EQ(c, e);
    EXPECT_EQ(d.size(), 1u);
    EXPECT_EQ(lift_pair(d, d.oriented("e", Theta::plus)).first, a2);
    EXPECT_EQ(d.oriented("e", Theta::plus), d.oriented("c", Theta::minus));
}

TEST(Register, KeyIndependentOfDeclaredLift) {
    const HClass g{1, 1, 0, 0};
    CurveDictionary d1(3);
    CurveDictionary d2(3);
    d1.register_curve("c", g);
    d2.register_curve("c", -d2.deck()(g));
    // The letter whose selected lift is g, in both dictionaries.
    const Word w1{3, Base::disk, {Letter{d1.oriented("c", Theta::plus), 1}}};
    const Word w2{3, Base::disk, {Letter{d2.oriented("c", Theta::minus), 1}}};
    EXPECT_EQ(lift_pair(d1, w1[0].curve), lift_pair(d2, w2[0].curve));
    EXPECT_EQ(canonical_key(w1), canonical_key(w2));
}

TEST(Register, DegenerateWarns) {
    CurveDictionary d(2); // k = 1: J a1 = a1
    d.register_curve("c", HClass{1, 0});
    EXPECT_EQ(d.warnings().size(), 1u);
    EXPECT_TRUE(d.curve(0).degenerate());
}

TEST(Register, NullCurve) {
    CurveDictionary d(3);
    const auto n = d.register_null_curve("s", "sep");
    EXPECT_TRUE(d.curve(n).is_null());
    EXPECT_EQ(d.find_null("sep"), n);
    EXPECT_THROW(d.register_null_curve("t", ""), InvariantError);
}

TEST(Disjoint, PairingChecked) {
    CurveDictionary d(3);
    d.register_curve("c", a1);
    d.register_curve("d", b1 + b2); // J(b1 + b2) = -(b1 + b2): pairs with a1
    d.register_curve("e", a2); // alias of c
    EXPECT_THROW(d.declare_disjoint("c", "d"), InvariantError);
    EXPECT_THROW(d.declare_disjoint("c", "c"), InvariantError);
    EXPECT_THROW(d.declare_disjoint("c", "e"), InvariantError);
}

TEST(Disjoint, SymmetricDeclaration) {
    CurveDictionary d(4);
    const auto c = d.register_curve("c", HClass{1, 0, 0, 0, 0, 0});
    const auto e = d.register_curve("e", HClass{0, 0, 1, 0, 0, 0});
    d.declare_disjoint("e", "c");
    EXPECT_TRUE(d.disjoint(c, e));
    EXPECT_TRUE(d.disjoint(e, c));
}

TEST(Dictionary, LiftTwistsCommute) {
    CurveDictionary d(4);
    d.register_curve("c", HClass{1, 1, 1, 0, -1, 1});
    const auto& c = d.curve(0);
    EXPECT_EQ(transvection(c.lift) * transvection(c.partner), transvection(c.partner) * transvection(c.lift));
}

TEST(PushForward, IdentityKeepsCurve) {
    CurveDictionary d(3);
    d.register_curve("c", a1);
    const OrientedCurve oc = d.oriented("c", Theta::plus);
    EXPECT_EQ(push_forward_curve(d, Matrix::identity(4), oc), oc);
}

TEST(PushForward, RejectsMatrixNotCommutingWithJ) {
    CurveDictionary d(3);
    d.register_curve("c", a1);
    const Matrix m = transvection(b1);
    ASSERT_TRUE(is_symplectic(m));
    ASSERT_FALSE(d.deck().commutes_with(m));
    EXPECT_THROW(push_forward_curve(d, m, d.oriented("c", Theta::plus)), InvariantError);
}

TEST(PushForward, LiftedTwistPairRegistersImage) {
    CurveDictionary d(3);
    d.register_curve("c", a1);
    const HClass g{0, 1, 0, 0};
    const Matrix m = transvection(g) * inverse_transvection(d.deck()(g));
    ASSERT_TRUE(d.deck().commutes_with(m));
    ASSERT_TRUE(is_symplectic(m));
    const OrientedCurve out = push_forward_curve(d, m, d.oriented("c", Theta::plus));
    EXPECT_EQ(lift_pair(d, out).first, m * a1);
    EXPECT_EQ(d.size(), 2u);
    EXPECT_EQ(d.curve(out.curve).id.rfind("auto", 0), 0u);
    // Pushing the other lift lands on the same curve with the other theta.
    const OrientedCurve other = push_forward_curve(d, m, d.oriented("c", Theta::minus));
    EXPECT_EQ(other.curve, out.curve);
    EXPECT_EQ(other.theta, -out.theta);
}
