#pragma once

// Degree-by-degree linear algebra for graded quotients T(V)/I of the free
// algebra: ideal slices I_d in reduced row-echelon form, Hilbert functions,
// monomial bases, normal forms and degree-bounded center searches.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skl/freealg.hpp"
#include "skl/linalg.hpp"

namespace skl {

// Total order on the generators, largest first. Words of equal degree are
// compared lexicographically under it; the largest word of a relation is
// its pivot. Column keys encode the rank digits, so a smaller key is a
// larger word.
class WordOrder {
   public:
    WordOrder() = default;
    explicit WordOrder(std::vector<Letter> largest_first);
    static WordOrder natural(int n);

    int ngens() const noexcept { return static_cast<int>(by_rank_.size()); }
    const std::vector<Letter>& largest_first() const noexcept { return by_rank_; }
    unsigned rank(Letter g) const { return rank_[g]; }
    Letter letter_of_rank(unsigned r) const { return by_rank_[r]; }

    Key key(const Word& w) const;
    Word word(Key key, std::size_t degree) const;

    bool operator==(const WordOrder&) const = default;

   private:
    std::vector<Letter> by_rank_;
    std::vector<unsigned> rank_;
};

class Presentation {
   public:
    Presentation(const FieldCtx& ctx, GenNames names, std::vector<NcPoly> relations, WordOrder order = {});

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    int ngens() const noexcept { return names_.size(); }
    const GenNames& names() const noexcept { return names_; }
    const WordOrder& order() const noexcept { return order_; }
    const std::vector<NcPoly>& relations() const noexcept { return relations_; }

    bool operator==(const Presentation& o) const;

   private:
    const FieldCtx* ctx_;
    GenNames names_;
    std::vector<NcPoly> relations_;
    WordOrder order_;
};

// Presentation file (JSON): field order, generator names, word order and
// relations as lists of [word, coefficient] pairs. Serialization is
// canonical, so write(read(write(p))) == write(p).
std::string presentation_to_text(const Presentation& p);
Presentation presentation_from_text(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);
void save_presentation(const Presentation& p, const std::filesystem::path& path);
// Stable 64-bit content hash of the canonical serialization, as 16 hex digits.
std::string presentation_hash(const Presentation& p);

// The degree-d part I_d of the ideal in reduced row-echelon form. Rows with
// a single word (monomials of the ideal) are kept as a bitmap; the remaining
// rows are stored sparsely with their pivot coefficient 1 in front.
class DegreeSlice {
   public:
    DegreeSlice(std::size_t degree, int ngens);

    std::size_t degree() const noexcept { return degree_; }
    std::size_t ideal_dim() const noexcept { return mono_count_ + rows_.size(); }
    std::size_t quotient_dim() const noexcept { return basis_.size(); }
    std::uint64_t column_count() const noexcept { return mono_.size(); }

    bool is_monomial(Key k) const { return mono_[k]; }
    bool is_pivot(Key k) const { return mono_[k] || pivot_row_.count(k) != 0; }
    // Non-monomial rows sorted by pivot key.
    const std::vector<SparseVec>& rows() const noexcept { return rows_; }
    const SparseVec* row_for_pivot(Key k) const;
    // Non-pivot keys in increasing order (largest word first).
    const std::vector<Key>& basis_keys() const noexcept { return basis_; }
    std::size_t monomial_count() const noexcept { return mono_count_; }

    // Every row including the single-word ones, sorted by pivot key.
    std::vector<SparseVec> all_rows(const FieldCtx& ctx) const;

   private:
    friend class Engine;
    std::size_t degree_;
    std::vector<bool> mono_;
    std::size_t mono_count_ = 0;
    std::vector<SparseVec> rows_;
    std::unordered_map<Key, std::uint32_t> pivot_row_;
    std::vector<Key> basis_;

    void finish(std::vector<SparseVec> rows);
};

struct EngineOptions {
    // Highest degree extend_to_degree accepts; <0 selects the default, the
    // largest d with n^d <= 3^10 (10 for three generators).
    int degree_cap = -1;
};

int default_degree_cap(int ngens);

class Engine {
   public:
    explicit Engine(Presentation p, EngineOptions opts = {});

    const Presentation& presentation() const noexcept { return pres_; }
    const FieldCtx& ctx() const noexcept { return pres_.ctx(); }
    int ngens() const noexcept { return pres_.ngens(); }
    const WordOrder& order() const noexcept { return pres_.order(); }
    int degree_cap() const noexcept { return cap_; }
    // Highest degree with a computed slice.
    int computed_degree() const noexcept { return static_cast<int>(slices_.size()) - 1; }

    // Builds slices up to degree D from V*I_{d-1} + I_{d-1}*V + R_d.
    void extend_to_degree(int D);
    const DegreeSlice& slice(std::size_t d) const;

    // dim A_d for d = 0..N.
    std::vector<std::size_t> hilbert(int N);
    // Non-pivot words of degree d, largest first.
    std::vector<Word> quotient_basis(int d);

    // Representative of p modulo I supported on basis words.
    NcPoly normal_form(const NcPoly& p);
    // Same on key vectors of a computed degree.
    SparseVec normal_form(const SparseVec& v, std::size_t degree) const;

    // Degree-k elements (as normal forms) commuting with every generator.
    std::vector<NcPoly> center_basis(int k);
    // True iff c*x_i and x_i*c vanish in the quotient for every generator.
    bool annihilator_check(const NcPoly& c);

    SparseVec to_keys(const NcPoly& p) const;
    NcPoly from_keys(const SparseVec& v, std::size_t degree) const;

    // Slice cache: a versioned JSON file tagged with the presentation hash.
    void save_cache(const std::filesystem::path& path) const;
    // Loads slices when the file matches this presentation; returns false
    // (leaving the state untouched) on a hash or version mismatch.
    bool load_cache(const std::filesystem::path& path);

   private:
    Presentation pres_;
    int cap_;
    std::vector<DegreeSlice> slices_;
    // Relations grouped by degree, as key vectors.
    std::vector<std::vector<SparseVec>> rel_by_degree_;

    void build_next();
};

// Ranks of two families of homogeneous polynomials of one common degree,
// of their sum and of the intersection of their spans.
struct SubspaceDims {
    std::size_t dim1, dim2, dim_sum, dim_intersection;
    bool operator==(const SubspaceDims&) const = default;
};
SubspaceDims subspace_dims(const std::vector<NcPoly>& v1, const std::vector<NcPoly>& v2);
// A basis of span(v1) ∩ span(v2).
std::vector<NcPoly> subspace_intersection(const std::vector<NcPoly>& v1, const std::vector<NcPoly>& v2);
std::size_t span_rank(const std::vector<NcPoly>& v);
// True when p lies in the span of v (all of one degree).
bool in_span(const NcPoly& p, const std::vector<NcPoly>& v);

}  // namespace skl
