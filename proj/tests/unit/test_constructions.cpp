#include <gtest/gtest.h>

#include "skl/constructions.hpp"

using namespace skl;

namespace {

const FieldCtx& K() { return FieldCtx::get(3); }
const GenNames names;
NcPoly P(const std::string& s) { return parse_poly(K(), s, names); }
CycNum C(long v) { return CycNum(K(), v); }
CycNum W(long k) { return root_of_unity(K(), k); }
ParamPoint pt(CycNum a, CycNum b, CycNum c) { return ParamPoint({a, b, c}); }

std::vector<NcPoly> rels(const Presentation& p) { return p.relations(); }

}  // namespace

TEST(Constructions, PresetsAsPrinted) {
    EXPECT_EQ(rels(preset("sklyanin", {C(1), C(2), C(3)}, K())),
              (std::vector<NcPoly>{P("yz + 2*zy + 3*xx"), P("zx + 2*xz + 3*yy"), P("xy + 2*yx + 3*zz")}));
    EXPECT_EQ(rels(preset("M", {C(1), C(1)}, K())),
              (std::vector<NcPoly>{P("xx"), P("yy"), P("zz"), P("zxy + yxz"), P("xyz + zyx"), P("yzx + xzy")}));
    EXPECT_EQ(rels(preset("badA", std::vector<CycNum>{}, K())),
              (std::vector<NcPoly>{P("xx"), P("yy"), P("zz"), P("xyz"), P("yzx"), P("zxy")}));
    EXPECT_EQ(rels(preset("degenerate", {C(1), C(0), C(0)}, K())),
              (std::vector<NcPoly>{P("yz"), P("zx"), P("xy")}));
    EXPECT_EQ(rels(preset("badC", std::vector<CycNum>{}, K())), rels(preset("T", {C(1), C(0)}, K())));
    EXPECT_EQ(preset("T", std::vector<std::string>{"1", "2"}, K()), preset("T", {C(1), C(2)}, K()));
}

TEST(Constructions, PresetErrors) {
    EXPECT_THROW(preset("nope", std::vector<CycNum>{}, K()), ConfigError);
    EXPECT_THROW(preset("sklyanin", {C(1), C(2)}, K()), ConfigError);
    EXPECT_THROW(preset("sklyanin", {C(0), C(0), C(0)}, K()), ConfigError);
    EXPECT_THROW(preset("degenerate", {C(1), C(1), C(0)}, K()), ConfigError);
    EXPECT_THROW(preset("T", {C(1), C(2)}, FieldCtx::get(4)), ConfigError);
    EXPECT_THROW(preset("T", {C(0), C(0)}, K()), ConfigError);
}

TEST(Constructions, PresetsRoundTripThroughFiles) {
    for (const auto& [name, params] : std::vector<std::pair<std::string, std::vector<CycNum>>>{
             {"poly", {}}, {"sklyanin", {C(1), C(2), C(3)}}, {"degenerate", {C(0), C(1), C(0)}},
             {"T", {C(1), W(1)}}, {"Tpair", {C(1), C(1), C(1), C(2)}}, {"M", {C(2), C(-1)}},
             {"clifford", {}}, {"badC", {}}, {"badA", {}}, {"zhang", {C(2)}}}) {
        const Presentation p = preset(name, params, K());
        for (const auto& r : p.relations()) EXPECT_GE(r.degree(), 2u);
        const std::string text = presentation_to_text(p);
        EXPECT_EQ(presentation_to_text(presentation_from_text(text)), text) << name;
        EXPECT_EQ(presentation_from_text(text), p) << name;
    }
}

TEST(Constructions, Superpotential) {
    EXPECT_EQ(superpotential(pt(C(1), C(0), C(0))), P("zxy + xyz + yzx"));
    EXPECT_EQ(superpotential(pt(C(0), C(0), C(1))), P("xxx + yyy + zzz"));
    const auto p = pt(C(1), C(2), C(3));
    const auto r = preset("sklyanin", p.coords(), K()).relations();
    for (Letter g = 0; g < 3; ++g) EXPECT_EQ(cyclic_derivative(superpotential(p), g), r[g] * C(3));
}

TEST(Constructions, CentralElements) {
    EXPECT_EQ(central_g(CentralKind::T, C(0)), P("zxy + xyz + yzx"));
    EXPECT_EQ(central_g(CentralKind::T, C(-1)), P("zxy + xyz + yzx - yxz - zyx - xzy"));
    EXPECT_EQ(central_g(CentralKind::Zhang, C(1)), P("zyx + xzy + yxz + yyy + zzz + xxx"));
    for (const CycNum& t : {C(2), C(-1), W(1)}) {
        Engine e(preset("T", {C(1), t}, K()));
        EXPECT_TRUE(in_span(e.normal_form(central_g(CentralKind::T, t)), e.center_basis(3)));
    }
    for (const CycNum& t : {C(1), C(2)}) {
        Engine e(preset("zhang", {t}, K()));
        EXPECT_TRUE(in_span(e.normal_form(central_g(CentralKind::Zhang, t)), e.center_basis(3)));
    }
}

TEST(Constructions, NonregularPoints) {
    const auto pts = nonregular_points(K());
    EXPECT_EQ(pts.size(), 12u);
    EXPECT_TRUE(is_nonregular(pt(C(0), C(0), C(1))));
    EXPECT_TRUE(is_nonregular(pt(C(1), W(1), W(2))));
    EXPECT_TRUE(is_nonregular(pt(C(2), W(1) * C(2), C(2))));
    EXPECT_FALSE(is_nonregular(pt(C(1), C(2), C(3))));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(pts[i] == pts[j]);
    EXPECT_THROW(nonregular_points(FieldCtx::get(5)), ConfigError);
}

TEST(Constructions, BlowupExamples) {
    const auto p = pt(C(1), C(1), C(1));
    const auto good = blowup_condition(p, PluckerLine{C(1), C(1), -W(1) - W(2)});
    EXPECT_EQ(good.rank, 2u);
    EXPECT_TRUE(good.eqs_hold);
    EXPECT_TRUE(good.plucker_relation);
    const auto bad = blowup_condition(p, PluckerLine{C(1), C(0), C(0)});
    EXPECT_FALSE(bad.eqs_hold);
    EXPECT_GT(bad.rank, 2u);
    // At [0:0:1] both equations force p12 = 0 and the relation reads 0 = 0.
    const auto v = blowup_condition(pt(C(0), C(0), C(1)), PluckerLine{C(3), C(5), C(0)});
    EXPECT_TRUE(v.eqs_hold);
    EXPECT_TRUE(v.plucker_relation);
    EXPECT_THROW(blowup_condition(pt(C(1), C(0), C(0)), PluckerLine{C(1), C(0), C(0)}), DomainError);
    EXPECT_THROW(blowup_condition(p, PluckerLine{C(0), C(0), C(0)}), InputError);
}

TEST(Constructions, Overlap) {
    const auto o = relation_overlap(preset("sklyanin", {C(1), C(2), C(3)}, K()));
    EXPECT_EQ(o.dims, (SubspaceDims{9, 9, 17, 1}));
    const auto v = relation_overlap(preset("sklyanin", {C(0), C(0), C(1)}, K()));
    EXPECT_EQ(v.dims.dim_intersection, 3u);
    EXPECT_EQ(subspace_dims(v.basis, {P("xxx"), P("yyy"), P("zzz")}).dim_sum, 3u);
}

TEST(Constructions, PreimageLine) {
    const auto p = pt(C(1), C(2), C(3));
    const auto r = central_preimage_line(p);
    EXPECT_EQ(r.preimage_dim, 2u);
    ASSERT_TRUE(r.line.has_value());
    EXPECT_TRUE(r.line->contains(p.coords()));
    EXPECT_FALSE(r.line->is_zero());
    EXPECT_THROW(central_preimage_line(pt(C(0), C(0), C(1))), DomainError);
}
