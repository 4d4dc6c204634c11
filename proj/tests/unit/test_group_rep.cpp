#include <gtest/gtest.h>

#include "skl/constructions.hpp"
#include "skl/group_rep.hpp"

using namespace skl;

namespace {

const FieldCtx& K() { return FieldCtx::get(3); }
const GenNames names;
NcPoly P(const std::string& s) { return parse_poly(K(), s, names); }
CycNum W(long k) { return root_of_unity(K(), k); }

}  // namespace

TEST(GroupRep, Closure) {
    EXPECT_EQ(builtin_group("H3", K()).order(), 27u);
    EXPECT_EQ(builtin_group("H3-e2", K()).order(), 3u);
    EXPECT_EQ(builtin_group("H3-e1", K()).order(), 3u);
    EXPECT_EQ(builtin_group("H3-center", K()).order(), 3u);
    EXPECT_EQ(close_group(K(), {{"one", identity_matrix(K(), 3)}}).order(), 1u);
    // diag(2, 1, 1) has infinite order.
    Matrix m = identity_matrix(K(), 3);
    m[0][0] = CycNum(K(), 2L);
    EXPECT_THROW(close_group(K(), {{"g", m}}, 50), LimitError);
    EXPECT_THROW(builtin_group("H3", FieldCtx::get(4)), ConfigError);
}

TEST(GroupRep, ElementWordsRealizeElements) {
    const auto g = builtin_group("H3", K());
    for (std::size_t i = 0; i < g.order(); ++i) {
        Matrix m = identity_matrix(K(), 3);
        for (int k : g.element_words()[i]) m = mat_mul(m, g.generators()[k]);
        EXPECT_EQ(m, g.elements()[i]) << g.element_name(i);
        EXPECT_EQ(g.index_of(m), long(i));
    }
}

TEST(GroupRep, HeisenbergRelations) {
    const Matrix e1 = h3_e1(K()), e2 = h3_e2(K()), c = h3_c(K());
    const Matrix one = identity_matrix(K(), 3);
    EXPECT_EQ(mat_mul(e1, mat_mul(e1, e1)), one);
    EXPECT_EQ(mat_mul(e2, mat_mul(e2, e2)), one);
    // c = e1 e2 e1^-1 e2^-1 with e^-1 = e^2.
    const Matrix e1i = mat_mul(e1, e1), e2i = mat_mul(e2, e2);
    EXPECT_EQ(mat_mul(mat_mul(e1, e2), mat_mul(e1i, e2i)), c);
    // e1 . x = z, e1 . y = x, e1 . z = y
    EXPECT_EQ(act(e1, P("x")), P("z"));
    EXPECT_EQ(act(e1, P("y")), P("x"));
    EXPECT_EQ(act(e2, P("xyz")), P("xyz"));
    EXPECT_EQ(act(e2, P("yy")), W(2) * P("yy"));
}

TEST(GroupRep, CharacterTable) {
    const auto g = builtin_group("H3", K());
    const auto t = CharacterTable::h3(g);  // the constructor checks orthogonality
    EXPECT_EQ(t.class_reps().size(), 11u);
    std::size_t total = 0, size3 = 0;
    for (auto s : t.class_sizes()) {
        total += s;
        size3 += s == 3;
    }
    EXPECT_EQ(total, 27u);
    EXPECT_EQ(size3, 8u);
    int sq = 0;
    for (const auto& ir : t.irreps()) sq += ir.degree * ir.degree;
    EXPECT_EQ(sq, 27);
    // V1 is the defining representation: its values are the matrix traces.
    const auto& v1 = t.irrep("V1");
    for (std::size_t k = 0; k < t.class_reps().size(); ++k) EXPECT_EQ(v1.values[k], trace(t.class_reps()[k]));
    // chi_{a,b}(e1) = w^a, chi_{a,b}(e2) = w^b
    const auto ce1 = t.class_of(h3_e1(K())), ce2 = t.class_of(h3_e2(K()));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const auto& ir = t.irrep("chi_{" + std::to_string(a) + "," + std::to_string(b) + "}");
            EXPECT_EQ(ir.values[ce1], W(a));
            EXPECT_EQ(ir.values[ce2], W(b));
        }
    // A bad table is rejected.
    auto irreps = t.irreps();
    irreps[1].values[3] = W(1) + W(1);
    std::vector<std::pair<std::string, Matrix>> classes;
    for (std::size_t k = 0; k < t.class_reps().size(); ++k) classes.emplace_back(t.class_names()[k], t.class_reps()[k]);
    EXPECT_THROW(CharacterTable(g, classes, irreps), ConsistencyError);
}

TEST(GroupRep, CharOnSlice) {
    Engine poly(preset("poly", std::vector<CycNum>{}, K()));
    const Matrix e1 = h3_e1(K()), c = h3_c(K());
    EXPECT_EQ(char_on_slice(identity_matrix(K(), 3), poly, 4), CycNum(K(), 15L));
    // e1 permutes the 6 commutative monomials of degree 2 without fixed points.
    EXPECT_TRUE(char_on_slice(e1, poly, 2).is_zero());
    Engine t(preset("T", {CycNum(K(), 1L), CycNum(K(), 2L)}, K()));
    const auto h = t.hilbert(6);
    for (int d = 0; d <= 6; ++d) {
        EXPECT_EQ(char_on_slice(c, t, d), W(d) * CycNum(K(), long(h[d])));
        const auto g = builtin_group("H3", K());
        for (const auto& m : g.elements()) ASSERT_EQ(char_on_slice(m, t, d), char_on_quotient(m, t, d));
    }
}

TEST(GroupRep, Instability) {
    // x^2 alone is not e1-stable.
    Engine e(Presentation(K(), names, {P("xx")}));
    EXPECT_THROW(char_on_slice(h3_e1(K()), e, 2), SymmetryError);
    EXPECT_NO_THROW(char_on_slice(h3_e2(K()), e, 2));
}

TEST(GroupRep, Isotypic) {
    const auto g = builtin_group("H3", K());
    const auto table = CharacterTable::h3(g);
    Engine s(preset("degenerate", {CycNum(K()), CycNum(K()), CycNum(K(), 1L)}, K()));
    const auto m = isotypic_multiplicities(table, s, 3);
    for (const auto& [name, mult] : m) {
        if (name == "chi_{0,0}" || name == "chi_{1,0}" || name == "chi_{2,0}")
            EXPECT_EQ(mult, 2) << name;
        else if (name[0] == 'V')
            EXPECT_EQ(mult, 0) << name;
        else
            EXPECT_EQ(mult, 1) << name;
    }
    Engine poly(preset("poly", std::vector<CycNum>{}, K()));
    const auto m1 = isotypic_multiplicities(table, poly, 1);
    for (const auto& [name, mult] : m1) EXPECT_EQ(mult, name == "V1" ? 1 : 0) << name;

    const auto triv = close_group(K(), {{"1", identity_matrix(K(), 3)}});
    const auto m3 = isotypic_multiplicities(CharacterTable::trivial(triv), s, 3);
    EXPECT_EQ(m3.at("trivial"), 12);

    // Degree bookkeeping: sum of mult * degree equals dim A_d.
    for (int d = 0; d <= 5; ++d) {
        const auto md = isotypic_multiplicities(table, poly, d);
        Int sum = 0;
        for (const auto& ir : table.irreps()) sum += md.at(ir.name) * ir.degree;
        EXPECT_EQ(sum, poly.hilbert(d)[d]);
    }
}

TEST(GroupRep, InvariantDims) {
    const auto g = builtin_group("H3", K());
    EXPECT_EQ(invariant_dim(g, {P("x"), P("y"), P("z")}), 0u);
    EXPECT_EQ(invariant_dim(g, {P("xxx"), P("yyy"), P("zzz")}), 1u);
    EXPECT_THROW(invariant_dim(g, {P("xxx")}), SymmetryError);
}

TEST(GroupRep, FixedSubalgebra) {
    Engine poly(preset("poly", std::vector<CycNum>{}, K()));
    EXPECT_EQ(fixed_subalgebra_dims({h3_e2(K())}, poly, 1)[1], 1u);
    EXPECT_EQ(fixed_subalgebra_dims({identity_matrix(K(), 3)}, poly, 4),
              (std::vector<std::size_t>{1, 3, 6, 10, 15}));
}

TEST(GroupRep, GroupFileRoundTrip) {
    const auto g = builtin_group("H3", K());
    const auto h = group_from_text(group_to_text(g));
    EXPECT_EQ(h.order(), 27u);
    EXPECT_EQ(group_to_text(h), group_to_text(g));
    EXPECT_THROW(group_from_text("[]"), ParseError);
}
