#pragma once

// Words over a finite alphabet of generators and homogeneous
// noncommutative polynomials with cyclotomic coefficients.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skl/cyclotomic.hpp"

namespace skl {

using Letter = std::uint8_t;

class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    std::size_t degree() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

   private:
    std::vector<Letter> letters_;
};

Word operator*(const Word& a, const Word& b);

// Bijective base-n encoding of words of a fixed degree onto [0, n^d):
// the first letter is the most significant digit.
std::uint64_t slice_index(const Word& w, int n);
Word slice_word(std::uint64_t index, int degree, int n);
std::uint64_t ipow(std::uint64_t base, int e);

// Generator names used for text forms. Single-character names are required
// for the word text form.
class GenNames {
   public:
    GenNames() : GenNames(std::vector<std::string>{"x", "y", "z"}) {}
    explicit GenNames(std::vector<std::string> names);
    static GenNames defaults(int n);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Letter g) const { return names_.at(g); }
    Letter letter(char c) const;

    bool operator==(const GenNames&) const = default;

   private:
    std::vector<std::string> names_;
};

std::string to_string(const Word& w, const GenNames& names);
Word parse_word(std::string_view text, const GenNames& names);

// Homogeneous element of the free algebra k<x_0..x_{n-1}>. Zero coefficients
// are never stored; every stored word has length degree().
class NcPoly {
   public:
    using Terms = std::map<Word, CycNum>;

    NcPoly(const FieldCtx& ctx, int ngens, std::size_t degree);
    // Single monomial c*w.
    NcPoly(const FieldCtx& ctx, int ngens, const Word& w, const CycNum& c);
    static NcPoly monomial(const FieldCtx& ctx, int ngens, const Word& w);
    static NcPoly generator(const FieldCtx& ctx, int ngens, Letter g);
    static NcPoly one(const FieldCtx& ctx, int ngens);

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    int ngens() const noexcept { return ngens_; }
    std::size_t degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    // Coefficient of w (zero if absent).
    CycNum coeff(const Word& w) const;

    // Adds c*w; w must have length degree().
    void add_term(const Word& w, const CycNum& c);

    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& operator*=(const CycNum& c);
    NcPoly operator-() const;

    bool operator==(const NcPoly& o) const;

   private:
    const FieldCtx* ctx_;
    int ngens_;
    std::size_t degree_;
    Terms terms_;

    void check_compatible(const NcPoly& o, bool same_degree) const;
};

inline NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
inline NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
inline NcPoly operator*(NcPoly a, const CycNum& c) { return a *= c; }
inline NcPoly operator*(const CycNum& c, NcPoly a) { return a *= c; }

// Free-algebra product: concatenation of words, convolution of coefficients.
NcPoly poly_mul(const NcPoly& p, const NcPoly& q);
inline NcPoly operator*(const NcPoly& p, const NcPoly& q) { return poly_mul(p, q); }
NcPoly poly_pow(const NcPoly& p, unsigned e);

// Cyclic derivative: each occurrence u*g*v of g in a word contributes v*u.
NcPoly cyclic_derivative(const NcPoly& s, Letter g);

// Rotates every word one place to the left (w_1 w_2..w_d -> w_2..w_d w_1).
NcPoly cyclic_shift(const NcPoly& s);

// Text form: terms `coeff*word` joined by " + " / " - ". Rational
// coefficients print bare (`3*xx`), others in parentheses
// (`(1*w^1 + 2)*xyz`); a unit coefficient is omitted. The empty word prints
// as `1`. Zero prints as `0`.
std::string to_string(const NcPoly& p, const GenNames& names);
// Parses the text form. `degree` is required to type the zero polynomial;
// pass -1 to infer it from the first term.
NcPoly parse_poly(const FieldCtx& ctx, std::string_view text, const GenNames& names, long degree = -1);

}  // namespace skl
