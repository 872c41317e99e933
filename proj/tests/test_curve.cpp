#include <gtest/gtest.h>

#include "sqsum/curve.hpp"

using namespace sqsum;

namespace {
Rational q(const char* s) { return Rational::parse(s); }
const CurveParam E24{Integer(24)};
const CurveParam E5{Integer(5)};
}  // namespace

TEST(Curve, ParamMustBePositive) {
    EXPECT_THROW(CurveParam{Integer(0)}, std::invalid_argument);
    EXPECT_THROW(CurveParam{Integer(-3)}, std::invalid_argument);
}

TEST(Curve, OnCurve) {
    EXPECT_TRUE(on_curve({-12, 72}, E24));  // 72^2 = -1728 + 6912
    EXPECT_TRUE(on_curve({0, 0}, E24));
    EXPECT_FALSE(on_curve({1, 1}, E24));
    EXPECT_THROW(checked_point(E24, 1, 1), std::invalid_argument);
    EXPECT_NO_THROW(checked_point(E5, -4, 6));
}

TEST(Curve, PointToAp) {
    EXPECT_EQ(point_to_ap({-12, 72}, E24), (ApTriple{1, 5, 7, Integer(24)}));
    EXPECT_EQ(point_to_ap({-4, 6}, E5), (ApTriple{q("31/12"), q("41/12"), q("49/12"), Integer(5)}));
    EXPECT_EQ(point_to_ap({25, -35}, E24), (ApTriple{q("1151/70"), q("-1201/70"), q("1249/70"), Integer(24)}));
    EXPECT_THROW(point_to_ap({0, 0}, E24), std::domain_error);
    EXPECT_THROW(point_to_ap({24, 0}, E24), std::domain_error);
    EXPECT_THROW(point_to_ap({1, 1}, E24), std::invalid_argument);
}

TEST(Curve, ApToPoint) {
    EXPECT_EQ(ap_to_point({1, 5, 7, Integer(24)}), (CurvePoint{-12, 72}));
    EXPECT_EQ(ap_to_point({q("31/12"), q("41/12"), q("49/12"), Integer(5)}), (CurvePoint{-4, 6}));
    EXPECT_THROW(ap_to_point({5, 5, 7, Integer(24)}), std::domain_error);
    EXPECT_THROW(ap_to_point({1, 5, 8, Integer(24)}), std::invalid_argument);
}

TEST(Curve, Doubling) {
    EXPECT_EQ(double_point({-12, 72}, E24), (CurvePoint{25, -35}));
    EXPECT_EQ(double_point({-4, 6}, E5), (CurvePoint{q("1681/144"), q("-62279/1728")}));
    EXPECT_THROW(double_point({-24, 0}, E24), std::domain_error);
}

// Doubling chains on several curves: closure, the x = b^2 identity, and
// the progression identity, all exact.
TEST(Curve, DoublingChainInvariants) {
    struct Seed {
        long d;
        CurvePoint p;
    };
    // (-4, 6) on E_5, (-12, 72) on E_24, (-3, 9) on E_6: 81 = -27 + 108
    for (const auto& s : {Seed{5, {-4, 6}}, Seed{24, {-12, 72}}, Seed{6, {-3, 9}}}) {
        const CurveParam e{Integer(s.d)};
        CurvePoint p = s.p;
        for (int i = 0; i < 5; ++i) {
            ASSERT_TRUE(on_curve(p, e));
            const ApTriple t = point_to_ap(p, e);
            ASSERT_TRUE(is_square_progression(t));
            ASSERT_EQ(square(t.b) - square(t.a), Rational(s.d));
            const CurvePoint back = ap_to_point(t);
            const ApTriple t2 = point_to_ap(back, e);
            ASSERT_EQ(square(t2.a), square(t.a));
            ASSERT_EQ(square(t2.b), square(t.b));
            ASSERT_EQ(square(t2.c), square(t.c));
            const CurvePoint next = double_point(p, e);
            ASSERT_EQ(next.x, square(t.b));
            p = next;
        }
    }
}
