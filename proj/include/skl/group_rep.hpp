#pragma once

// Finite matrix groups acting on the generator space V, their extension to
// tensor and quotient slices, and character computations. The Heisenberg
// group of order 27 is built in together with its character table.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skl/graded_engine.hpp"

namespace skl {

// Square matrix, row-major. Column j is the image of generator x_j.
using Matrix = std::vector<std::vector<CycNum>>;

Matrix identity_matrix(const FieldCtx& ctx, int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
CycNum trace(const Matrix& m);
std::string to_string(const Matrix& m);

// Image of a homogeneous polynomial under the algebra automorphism
// extending x_j -> sum_i m[i][j] x_i.
NcPoly act(const Matrix& g, const NcPoly& p);
// Same on a key vector of the given degree, keys in `order`.
SparseVec act(const Matrix& g, const SparseVec& v, std::size_t degree, const WordOrder& order);

class MatAction {
   public:
    const FieldCtx& ctx() const noexcept { return *ctx_; }
    int dim() const noexcept { return n_; }
    const std::vector<std::string>& generator_names() const noexcept { return gen_names_; }
    const std::vector<Matrix>& generators() const noexcept { return gens_; }
    // All elements, identity first, in breadth-first order.
    const std::vector<Matrix>& elements() const noexcept { return elements_; }
    // Generator indices whose product (left to right) gives each element.
    const std::vector<std::vector<int>>& element_words() const noexcept { return words_; }
    std::size_t order() const noexcept { return elements_.size(); }
    // Index of an element, or -1 if the matrix is not in the group.
    long index_of(const Matrix& m) const;
    // "e1*e2" style name of an element ("1" for the identity).
    std::string element_name(std::size_t i) const;

   private:
    friend MatAction close_group(const FieldCtx&, std::vector<std::pair<std::string, Matrix>>, std::size_t);
    const FieldCtx* ctx_ = nullptr;
    int n_ = 0;
    std::vector<std::string> gen_names_;
    std::vector<Matrix> gens_;
    std::vector<Matrix> elements_;
    std::vector<std::vector<int>> words_;
    std::map<std::string, std::size_t> index_;
};

// Breadth-first closure under multiplication by the generators. Throws
// LimitError once more than `order_cap` elements appear.
MatAction close_group(const FieldCtx& ctx, std::vector<std::pair<std::string, Matrix>> gens,
                      std::size_t order_cap = 10000);

// Standard generators on V = <x, y, z>: e1 sends x->z, y->x, z->y and
// e2 = diag(1, w, w^2). Needs 3 | m.
Matrix h3_e1(const FieldCtx& ctx);
Matrix h3_e2(const FieldCtx& ctx);
// The commutator e1 e2 e1^-1 e2^-1, the scalar w on V.
Matrix h3_c(const FieldCtx& ctx);
// Built-ins: H3, H3-e1, H3-e2, H3-center.
MatAction builtin_group(std::string_view name, const FieldCtx& ctx);

// Group file (JSON): field order plus named generator matrices whose
// entries are coefficient strings.
MatAction group_from_text(std::string_view text);
MatAction load_group(const std::filesystem::path& path);
std::string group_to_text(const MatAction& g);

struct Irrep {
    std::string name;
    int degree;
    std::vector<CycNum> values;  // one per class
};

class CharacterTable {
   public:
    // Validates the table against the group: classes partition it, degrees
    // match the identity column, sum of squared degrees is |G| and rows are
    // orthonormal. Throws ConsistencyError otherwise.
    CharacterTable(const MatAction& group, std::vector<std::pair<std::string, Matrix>> classes,
                   std::vector<Irrep> irreps);

    static CharacterTable h3(const MatAction& h3_group);
    // One class and the trivial character; for the trivial group.
    static CharacterTable trivial(const MatAction& group);

    const std::vector<Matrix>& class_reps() const noexcept { return reps_; }
    const std::vector<std::string>& class_names() const noexcept { return names_; }
    const std::vector<std::size_t>& class_sizes() const noexcept { return sizes_; }
    const std::vector<Irrep>& irreps() const noexcept { return irreps_; }
    std::size_t group_order() const noexcept { return order_; }
    // Class index of a group element.
    std::size_t class_of(const Matrix& g) const;
    const Irrep& irrep(std::string_view name) const;

   private:
    std::vector<Matrix> reps_;
    std::vector<std::string> names_;
    std::vector<std::size_t> sizes_;
    std::vector<Irrep> irreps_;
    std::size_t order_;
    // Element key -> class.
    std::map<std::string, std::size_t> class_of_;
};

// Trace of g on A_d = V^{⊗d}/I_d. Verifies g(I_d) ⊆ I_d first and throws
// SymmetryError naming the offending row otherwise.
CycNum char_on_slice(const Matrix& g, Engine& engine, int d);
// The same trace computed on the quotient basis, assuming stability; used
// as a cross-check.
CycNum char_on_quotient(const Matrix& g, Engine& engine, int d);

// Multiplicity of each irrep in A_d.
std::map<std::string, Int> isotypic_multiplicities(const CharacterTable& table, Engine& engine, int d);

// dim of the group-fixed part of span(vectors). Throws SymmetryError if a
// generator moves the span.
std::size_t invariant_dim(const MatAction& group, const std::vector<NcPoly>& vectors);

// dim (A_d)^H for d = 0..N where H is the group generated by `elements`.
std::vector<std::size_t> fixed_subalgebra_dims(const std::vector<Matrix>& elements, Engine& engine, int N);

}  // namespace skl
