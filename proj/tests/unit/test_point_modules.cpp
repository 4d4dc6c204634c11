#include <gtest/gtest.h>

#include "skl/point_modules.hpp"

using namespace skl;

namespace {

const FieldCtx& K() { return FieldCtx::get(3); }
CycNum C(long v) { return CycNum(K(), v); }
ProjPoint pt(long a, long b, long c) { return ProjPoint({C(a), C(b), C(c)}); }

}  // namespace

TEST(PointModules, NextPointExamples) {
    const CycNum t = C(2);
    EXPECT_EQ(std::get<ProjPoint>(next_point(pt(0, 1, 1), pt(1, 0, 0), t)), pt(0, 1, -2));
    EXPECT_EQ(std::get<ProjPoint>(next_point(pt(1, 0, 0), pt(0, 1, 1), t)), pt(1, 0, 0));
    EXPECT_EQ(std::get<ProjPoint>(next_point(pt(1, 0, 0), pt(0, 1, 0), t)), pt(1, 0, 0));
    EXPECT_EQ(std::get<FreeChoice>(next_point(pt(0, 1, 1), pt(1, 0, 0), std::nullopt)), FreeChoice{0});
    EXPECT_THROW(next_point(pt(1, 1, 0), pt(1, 0, 0), t), InputError);
    EXPECT_THROW(pt(1, 1, 1), InputError);
    EXPECT_THROW(next_point(pt(0, 1, 1), pt(1, 0, 0), C(0)), InputError);
}

TEST(PointModules, PhiSquared) {
    EXPECT_EQ(phi_squared(pt(0, 1, 1), C(2)), pt(0, 1, -2));
    EXPECT_EQ(phi_squared(pt(1, 0, 0), C(2)), pt(1, 0, 0));
    EXPECT_EQ(phi_squared(pt(0, 1, 5), C(-1)), pt(0, 1, 5));
    // Inverse twist by 1/t.
    for (const auto& p : {pt(0, 1, 3), pt(2, 0, 1), pt(1, 7, 0), pt(0, 0, 1)})
        EXPECT_EQ(phi_squared(phi_squared(p, C(3)), C(3).inverse()), p);
}

TEST(PointModules, PhiOrder) {
    const CycNum w = root_of_unity(K(), 1);
    EXPECT_EQ(phi_order(-w, 50), 3u);
    EXPECT_EQ(phi_order(C(-1), 50), 1u);
    EXPECT_EQ(phi_order(C(2), 50), std::nullopt);
    // -t a primitive 6th root of unity in Q(w): -t = -w^2.
    EXPECT_EQ(phi_order(w * w, 50), 6u);
}

TEST(PointModules, OrbitAlternatesAndMatchesPhiSquared) {
    const CycNum t = C(3);
    const auto o = orbit(pt(0, 1, 1), pt(1, 0, 0), t, 12);
    ASSERT_EQ(o.points.size(), 14u);
    for (std::size_t i = 0; i < o.points.size(); ++i) {
        if (i % 2 == 1)
            EXPECT_EQ(o.points[i], pt(1, 0, 0));
        else
            EXPECT_TRUE(o.points[i].on_line(0) && !o.points[i].is_vertex());
    }
    for (std::size_t i = 0; i + 2 < o.points.size(); i += 2) EXPECT_EQ(o.points[i + 2], phi_squared(o.points[i], t));
    const auto s = orbit(pt(0, 1, 1), pt(1, 0, 0), std::nullopt, 5);
    EXPECT_EQ(s.points.size(), 2u);
    ASSERT_TRUE(s.stopped_at.has_value());
}

TEST(PointModules, RotationEquivariance) {
    const CycNum t = root_of_unity(K(), 1) + C(2);
    for (const auto& p : {pt(0, 1, 4), pt(0, 3, 1), pt(5, 0, 1), pt(1, 2, 0), pt(0, 1, 0)})
        EXPECT_EQ(rotate(phi_squared(p, t)), phi_squared(rotate(p), t));
    EXPECT_TRUE(rotate(pt(0, 1, 4)).on_line(1));
}
