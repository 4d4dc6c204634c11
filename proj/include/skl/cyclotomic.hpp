#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m), represented as
// Q[x]/Phi_m(x) in the power basis 1, zeta, ..., zeta^(phi(m)-1).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "skl/errors.hpp"

namespace skl {

using Rat = mpq_class;
using Int = mpz_class;

// The m-th cyclotomic polynomial together with precomputed reduction data.
// Contexts are interned: FieldCtx::get(m) always returns the same object, so
// contexts compare by address and live for the whole program.
class FieldCtx {
   public:
    static const FieldCtx& get(int m);

    int order() const noexcept { return m_; }
    int degree() const noexcept { return degree_; }
    // Integer coefficients of Phi_m, lowest degree first; monic.
    const std::vector<long>& phi() const noexcept { return phi_; }
    // x^(degree+j) mod Phi_m for j in [0, degree-1), as integer vectors.
    const std::vector<std::vector<long>>& high_powers() const noexcept { return high_; }
    // Power basis coordinates of zeta^k for k in [0, m).
    const std::vector<std::vector<long>>& roots() const noexcept { return roots_; }

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

   private:
    explicit FieldCtx(int m);

    int m_;
    int degree_;
    std::vector<long> phi_;
    std::vector<std::vector<long>> high_;
    std::vector<std::vector<long>> roots_;
};

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int m);

class CycNum {
   public:
    // Zero of the given field.
    explicit CycNum(const FieldCtx& ctx);
    CycNum(const FieldCtx& ctx, const Rat& r);
    CycNum(const FieldCtx& ctx, long r);
    // Coordinates in the power basis; must have length ctx.degree().
    CycNum(const FieldCtx& ctx, std::vector<Rat> coords);

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    const std::vector<Rat>& coords() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    // True when only the constant coordinate may be nonzero.
    bool is_rational() const noexcept;
    // Constant coordinate; meaningful as "the value" when is_rational().
    const Rat& rational_part() const noexcept { return c_[0]; }

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const Rat& r);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }
    CycNum operator-() const;

    // Fused this -= a * b, the inner step of every elimination.
    void sub_mul(const CycNum& a, const CycNum& b);

    // Multiplicative inverse via extended Euclid against Phi_m.
    CycNum inverse() const;
    // Complex conjugation zeta -> zeta^-1.
    CycNum conj() const;
    CycNum pow(long e) const;

    friend bool operator==(const CycNum& a, const CycNum& b);

   private:
    const FieldCtx* ctx_;
    std::vector<Rat> c_;

    void check_same(const CycNum& o) const;
};

inline CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
inline CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
inline CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
inline CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

// zeta_m^k reduced to the power basis; k may be negative.
CycNum root_of_unity(const FieldCtx& ctx, long k);

// Canonical text: terms from the highest power of w down, each `R*w^K` or
// `R` for the constant, joined by " + " / " - "; zero prints as "0".
std::string to_string(const CycNum& x);
// Accepts signed sums of `R`, `R*w^K`, `w^K`, `R*w`, `w` with R an integer or
// fraction; whitespace is ignored. Exponents are reduced modulo Phi_m.
CycNum parse_cyc(const FieldCtx& ctx, std::string_view text);
std::ostream& operator<<(std::ostream& os, const CycNum& x);

}  // namespace skl
