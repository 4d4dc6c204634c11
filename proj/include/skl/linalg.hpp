#pragma once

// Sparse exact linear algebra over Q(zeta_m): vectors indexed by 64-bit
// column keys and an incrementally maintained reduced row-echelon basis.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skl/cyclotomic.hpp"

namespace skl {

using Key = std::uint64_t;

// Sorted by key, strictly increasing, no zero entries.
using SparseVec = std::vector<std::pair<Key, CycNum>>;

// Sorts by key, sums duplicates and drops zeros.
void canonicalize(SparseVec& v);
// a + s*b for canonical a, b.
SparseVec axpy(const SparseVec& a, const CycNum& s, const SparseVec& b);
// Coefficient at key k, or nullptr.
const CycNum* find_entry(const SparseVec& v, Key k);

// Fully reduced row-echelon basis of a subspace. The pivot of a row is its
// smallest key and carries coefficient 1; no row has a nonzero entry in
// another row's pivot column.
class Echelon {
   public:
    explicit Echelon(const FieldCtx& ctx) : ctx_(&ctx) {}

    // Adds v to the span. Returns true when the rank grew.
    bool insert(const SparseVec& v);
    // v minus its projection onto the span along pivot columns; the result
    // has no entries in pivot columns and is zero iff v is in the span.
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    // Rows in insertion order.
    const std::vector<SparseVec>& rows() const noexcept { return rows_; }
    std::vector<SparseVec> take_rows() && { return std::move(rows_); }
    std::optional<std::size_t> row_of_pivot(Key k) const;
    bool is_pivot(Key k) const { return pivot_.count(k) != 0; }

   private:
    const FieldCtx* ctx_;
    std::vector<SparseVec> rows_;
    std::unordered_map<Key, std::uint32_t> pivot_;
    // Non-pivot column -> rows that may hold an entry there (may be stale).
    std::unordered_map<Key, std::vector<std::uint32_t>> users_;
};

// Kernel of the linear map whose matrix rows have been inserted into `e`,
// over the column keys [0, ncols). One basis vector per free column, with
// coefficient 1 there.
std::vector<SparseVec> kernel_basis(const Echelon& e, std::size_t ncols);

}  // namespace skl
