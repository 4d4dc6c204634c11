#include <gtest/gtest.h>

#include <random>

#include "skl/cyclotomic.hpp"

using namespace skl;

namespace {

// Remainder of x^e modulo a monic integer polynomial, by schoolbook division.
std::vector<long> power_mod(long e, const std::vector<long>& monic) {
    std::vector<long> r(e + 1, 0);
    r[e] = 1;
    const long deg = static_cast<long>(monic.size()) - 1;
    for (long top = e; top >= deg; --top) {
        const long lead = r[top];
        if (lead == 0) continue;
        for (long i = 0; i <= deg; ++i) r[top - deg + i] -= lead * monic[i];
    }
    r.resize(deg);
    return r;
}

CycNum from_ints(const FieldCtx& k, std::vector<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return CycNum(k, std::move(c));
}

CycNum random_cyc(const FieldCtx& k, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<Rat> c;
    for (int i = 0; i < k.degree(); ++i) {
        Rat r(num(rng), den(rng));
        r.canonicalize();
        c.push_back(r);
    }
    return CycNum(k, std::move(c));
}

}  // namespace

TEST(Cyclotomic, PolynomialsAndDegrees) {
    EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<long>{1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
    EXPECT_EQ(FieldCtx::get(1).degree(), 1);
    EXPECT_EQ(FieldCtx::get(9).degree(), 6);
    EXPECT_EQ(FieldCtx::get(15).degree(), 8);
    EXPECT_EQ(&FieldCtx::get(3), &FieldCtx::get(3));
}

TEST(Cyclotomic, SpecExamples) {
    const auto& k3 = FieldCtx::get(3);
    const CycNum w = root_of_unity(k3, 1);
    EXPECT_TRUE((w * w.pow(2)).is_one());
    EXPECT_TRUE((CycNum(k3, 1L) + w + w * w).is_zero());

    const auto& k12 = FieldCtx::get(12);
    EXPECT_TRUE((root_of_unity(k12, 6) + CycNum(k12, 1L)).is_zero());

    EXPECT_TRUE(root_of_unity(k3, 0).is_one());
    EXPECT_EQ(root_of_unity(k3, 4), w);
    EXPECT_EQ(root_of_unity(FieldCtx::get(4), 2), CycNum(FieldCtx::get(4), -1L));
    EXPECT_EQ(root_of_unity(k3, -1), w * w);
}

TEST(Cyclotomic, ReductionMatchesLongDivision) {
    for (int m : {3, 4, 5, 7, 8, 9, 12, 15}) {
        const auto& k = FieldCtx::get(m);
        const auto phi = cyclotomic_polynomial(m);
        for (long e = 0; e < 3 * m; ++e) {
            auto oracle = power_mod(e, phi);
            EXPECT_EQ(root_of_unity(k, e), from_ints(k, oracle)) << "m=" << m << " e=" << e;
        }
    }
}

TEST(Cyclotomic, Inverse) {
    const auto& k3 = FieldCtx::get(3);
    const CycNum w = root_of_unity(k3, 1);
    const CycNum one(k3, 1L);
    // (1-w)(2+w) = 2 - w - w^2 = 3 by hand, so the inverse is (2+w)/3.
    CycNum expect = (CycNum(k3, 2L) + w);
    expect *= Rat(1, 3);
    EXPECT_EQ((one - w).inverse(), expect);
    EXPECT_TRUE(one.inverse().is_one());
    EXPECT_EQ(w.inverse(), w * w);
    EXPECT_THROW(CycNum(k3).inverse(), DivisionByZero);
}

TEST(Cyclotomic, ContextMismatch) {
    EXPECT_THROW(CycNum(FieldCtx::get(3), 1L) + CycNum(FieldCtx::get(4), 1L), ConfigError);
}

TEST(Cyclotomic, RootOrders) {
    for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
        const auto& k = FieldCtx::get(m);
        const CycNum z = root_of_unity(k, 1);
        EXPECT_TRUE(z.pow(m).is_one());
        for (int j = 1; j < m; ++j) EXPECT_FALSE(z.pow(j).is_one()) << m << " " << j;
    }
}

TEST(Cyclotomic, FieldAxiomsRandomized) {
    std::mt19937_64 rng(20240611);
    for (int m : {3, 5, 12}) {
        const auto& k = FieldCtx::get(m);
        for (int i = 0; i < 40; ++i) {
            const CycNum a = random_cyc(k, rng), b = random_cyc(k, rng), c = random_cyc(k, rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            if (!a.is_zero()) EXPECT_TRUE((a.inverse() * a).is_one());
            CycNum d = c;
            d.sub_mul(a, b);
            EXPECT_EQ(d, c - a * b);
            EXPECT_EQ(a.conj().conj(), a);
            EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        }
    }
}

TEST(Cyclotomic, TextRoundTrip) {
    const auto& k3 = FieldCtx::get(3);
    const CycNum x = parse_cyc(k3, "-1/3*w^2 + 2");
    // w^2 = -1 - w
    EXPECT_EQ(x, from_ints(k3, {2, 0}) + CycNum(k3, Rat(1, 3)) + root_of_unity(k3, 1) * CycNum(k3, Rat(1, 3)));
    EXPECT_EQ(parse_cyc(k3, to_string(x)), x);
    EXPECT_EQ(to_string(CycNum(k3)), "0");
    EXPECT_EQ(to_string(parse_cyc(k3, "w")), "1*w^1");
    EXPECT_EQ(parse_cyc(k3, "w^3"), CycNum(k3, 1L));
    EXPECT_THROW(parse_cyc(k3, "2*"), ParseError);
    EXPECT_THROW(parse_cyc(k3, "1/0"), ParseError);
    EXPECT_THROW(parse_cyc(k3, ""), ParseError);

    std::mt19937_64 rng(7);
    for (int m : {3, 7, 12}) {
        const auto& k = FieldCtx::get(m);
        for (int i = 0; i < 50; ++i) {
            const CycNum a = random_cyc(k, rng);
            const std::string s = to_string(a);
            EXPECT_EQ(parse_cyc(k, s), a) << s;
            EXPECT_EQ(to_string(parse_cyc(k, s)), s);
        }
    }
}
