#include "skl/graded_engine.hpp"

#include <algorithm>
#include <map>

namespace skl {

WordOrder::WordOrder(std::vector<Letter> largest_first) : by_rank_(std::move(largest_first)) {
    rank_.assign(by_rank_.size(), 0);
    std::vector<bool> seen(by_rank_.size(), false);
    for (std::size_t r = 0; r < by_rank_.size(); ++r) {
        const Letter g = by_rank_[r];
        if (g >= by_rank_.size() || seen[g]) throw ConfigError("word order is not a permutation of the generators");
        seen[g] = true;
        rank_[g] = static_cast<unsigned>(r);
    }
}

WordOrder WordOrder::natural(int n) {
    std::vector<Letter> l(n);
    for (int i = 0; i < n; ++i) l[i] = static_cast<Letter>(i);
    return WordOrder(std::move(l));
}

Key WordOrder::key(const Word& w) const {
    const Key n = by_rank_.size();
    Key k = 0;
    for (Letter l : w.letters()) {
        if (l >= n) throw InputError("letter out of range for word order");
        k = k * n + rank_[l];
    }
    return k;
}

Word WordOrder::word(Key key, std::size_t degree) const {
    const Key n = by_rank_.size();
    std::vector<Letter> l(degree);
    for (std::size_t i = degree; i-- > 0;) {
        l[i] = by_rank_[key % n];
        key /= n;
    }
    return Word(std::move(l));
}

Presentation::Presentation(const FieldCtx& ctx, GenNames names, std::vector<NcPoly> relations, WordOrder order)
    : ctx_(&ctx), names_(std::move(names)), relations_(std::move(relations)), order_(std::move(order)) {
    if (order_.ngens() == 0) order_ = WordOrder::natural(names_.size());
    if (order_.ngens() != names_.size()) throw ConfigError("word order size differs from generator count");
    for (const auto& r : relations_) {
        if (&r.ctx() != ctx_) throw ConfigError("relation over a different field");
        if (r.ngens() != names_.size()) throw ConfigError("relation over a different generator count");
        if (r.is_zero()) throw InputError("zero relation");
        if (r.degree() == 0) throw InputError("relations must have degree >= 1");
    }
}

bool Presentation::operator==(const Presentation& o) const {
    return ctx_ == o.ctx_ && names_ == o.names_ && order_ == o.order_ && relations_ == o.relations_;
}

DegreeSlice::DegreeSlice(std::size_t degree, int ngens) : degree_(degree), mono_(ipow(ngens, int(degree)), false) {}

const SparseVec* DegreeSlice::row_for_pivot(Key k) const {
    auto it = pivot_row_.find(k);
    return it == pivot_row_.end() ? nullptr : &rows_[it->second];
}

std::vector<SparseVec> DegreeSlice::all_rows(const FieldCtx& ctx) const {
    std::vector<SparseVec> out;
    std::size_t next = 0;
    for (Key k = 0; k < mono_.size(); ++k) {
        if (mono_[k]) {
            out.push_back(SparseVec{{k, CycNum(ctx, 1L)}});
        } else if (next < rows_.size() && rows_[next].front().first == k) {
            out.push_back(rows_[next++]);
        }
    }
    return out;
}

void DegreeSlice::finish(std::vector<SparseVec> rows) {
    rows_.clear();
    for (auto& r : rows) {
        if (r.size() == 1)
            mono_[r.front().first] = true;
        else
            rows_.push_back(std::move(r));
    }
    std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    pivot_row_.clear();
    for (std::uint32_t i = 0; i < rows_.size(); ++i) pivot_row_.emplace(rows_[i].front().first, i);
    mono_count_ = static_cast<std::size_t>(std::count(mono_.begin(), mono_.end(), true));
    basis_.clear();
    for (Key k = 0; k < mono_.size(); ++k)
        if (!mono_[k] && pivot_row_.count(k) == 0) basis_.push_back(k);
}

int default_degree_cap(int ngens) {
    const std::uint64_t budget = ipow(3, 10);
    if (ngens <= 1) return 64;
    int d = 0;
    while (ipow(ngens, d + 1) <= budget) ++d;
    return d;
}

Engine::Engine(Presentation p, EngineOptions opts)
    : pres_(std::move(p)), cap_(opts.degree_cap < 0 ? default_degree_cap(pres_.ngens()) : opts.degree_cap) {
    for (const auto& r : pres_.relations()) {
        const std::size_t d = r.degree();
        if (rel_by_degree_.size() <= d) rel_by_degree_.resize(d + 1);
        rel_by_degree_[d].push_back(to_keys(r));
    }
}

const DegreeSlice& Engine::slice(std::size_t d) const {
    if (d >= slices_.size())
        throw InputError("slice of degree " + std::to_string(d) + " not computed (have up to " +
                         std::to_string(computed_degree()) + ")");
    return slices_[d];
}

void Engine::extend_to_degree(int D) {
    if (D < 0) throw InputError("negative degree");
    if (D > cap_)
        throw LimitError("degree " + std::to_string(D) + " exceeds the degree cap " + std::to_string(cap_));
    while (computed_degree() < D) build_next();
}

void Engine::build_next() {
    const std::size_t d = slices_.size();
    const int n = ngens();
    DegreeSlice s(d, n);
    if (d == 0) {
        s.finish({});
        slices_.push_back(std::move(s));
        return;
    }
    const DegreeSlice& prev = slices_[d - 1];
    const Key top = ipow(n, int(d) - 1);

    for (Key k = 0; k < prev.mono_.size(); ++k) {
        if (!prev.mono_[k]) continue;
        for (Key r = 0; r < Key(n); ++r) {
            s.mono_[r * top + k] = true;
            s.mono_[k * n + r] = true;
        }
    }
    const std::vector<SparseVec> no_relations;
    const auto& rels = d < rel_by_degree_.size() ? rel_by_degree_[d] : no_relations;
    for (const auto& rel : rels)
        if (rel.size() == 1) s.mono_[rel.front().first] = true;

    auto drop_monomials = [&](SparseVec& v) {
        std::erase_if(v, [&](const auto& e) { return s.mono_[e.first]; });
    };

    Echelon e(ctx());
    // Left multiples keep the pivot order of the previous degree, so they go in first.
    for (Key r = 0; r < Key(n); ++r) {
        for (const auto& row : prev.rows_) {
            SparseVec v;
            v.reserve(row.size());
            for (const auto& [k, c] : row) v.emplace_back(r * top + k, c);
            drop_monomials(v);
            e.insert(v);
        }
    }
    for (Key r = 0; r < Key(n); ++r) {
        for (const auto& row : prev.rows_) {
            SparseVec v;
            v.reserve(row.size());
            for (const auto& [k, c] : row) v.emplace_back(k * n + r, c);
            drop_monomials(v);
            e.insert(v);
        }
    }
    for (const auto& rel : rels) {
        if (rel.size() == 1) continue;
        SparseVec v = rel;
        drop_monomials(v);
        e.insert(v);
    }
    s.finish(std::move(e).take_rows());
    slices_.push_back(std::move(s));
}

std::vector<std::size_t> Engine::hilbert(int N) {
    extend_to_degree(N);
    std::vector<std::size_t> h;
    for (int d = 0; d <= N; ++d) h.push_back(slices_[d].quotient_dim());
    return h;
}

std::vector<Word> Engine::quotient_basis(int d) {
    extend_to_degree(d);
    std::vector<Word> out;
    for (Key k : slices_[d].basis_keys()) out.push_back(order().word(k, d));
    return out;
}

SparseVec Engine::to_keys(const NcPoly& p) const {
    if (&p.ctx() != &ctx()) throw ConfigError("polynomial over a different field than the presentation");
    if (p.ngens() != ngens()) throw ConfigError("polynomial over a different generator count");
    SparseVec v;
    v.reserve(p.size());
    for (const auto& [w, c] : p.terms()) v.emplace_back(order().key(w), c);
    canonicalize(v);
    return v;
}

NcPoly Engine::from_keys(const SparseVec& v, std::size_t degree) const {
    NcPoly p(ctx(), ngens(), degree);
    for (const auto& [k, c] : v) p.add_term(order().word(k, degree), c);
    return p;
}

SparseVec Engine::normal_form(const SparseVec& v, std::size_t degree) const {
    const DegreeSlice& s = slice(degree);
    SparseVec acc;
    bool touched = false;
    for (const auto& [k, c] : v) {
        if (s.is_monomial(k)) {
            touched = true;
            continue;
        }
        const SparseVec* row = s.row_for_pivot(k);
        if (row == nullptr) {
            acc.emplace_back(k, c);
            continue;
        }
        touched = true;
        for (std::size_t t = 1; t < row->size(); ++t) acc.emplace_back((*row)[t].first, -(c * (*row)[t].second));
    }
    if (touched) canonicalize(acc);
    return acc;
}

NcPoly Engine::normal_form(const NcPoly& p) {
    extend_to_degree(static_cast<int>(p.degree()));
    return from_keys(normal_form(to_keys(p), p.degree()), p.degree());
}

std::vector<NcPoly> Engine::center_basis(int k) {
    if (k < 0) throw InputError("negative degree");
    extend_to_degree(k + 1);
    const int n = ngens();
    const auto& basis = slices_[k].basis_keys();
    const Key top = ipow(n, k);
    // Equation (generator rank, word of degree k+1) -> coefficients over unknowns.
    std::map<std::pair<Key, Key>, SparseVec> equations;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const Key b = basis[j];
        for (Key r = 0; r < Key(n); ++r) {
            SparseVec comm{{b * n + r, CycNum(ctx(), 1L)}, {r * top + b, CycNum(ctx(), -1L)}};
            canonicalize(comm);
            for (auto& [key, c] : normal_form(comm, k + 1)) equations[{r, key}].emplace_back(j, c);
        }
    }
    Echelon e(ctx());
    for (const auto& [id, row] : equations) e.insert(row);
    std::vector<NcPoly> out;
    for (const auto& kv : kernel_basis(e, basis.size())) {
        SparseVec v;
        for (const auto& [j, c] : kv) v.emplace_back(basis[j], c);
        out.push_back(from_keys(v, k));
    }
    return out;
}

bool Engine::annihilator_check(const NcPoly& c) {
    extend_to_degree(static_cast<int>(c.degree()) + 1);
    for (int g = 0; g < ngens(); ++g) {
        const NcPoly x = NcPoly::generator(ctx(), ngens(), static_cast<Letter>(g));
        if (!normal_form(poly_mul(c, x)).is_zero()) return false;
        if (!normal_form(poly_mul(x, c)).is_zero()) return false;
    }
    return true;
}

namespace {

std::size_t common_degree(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
    std::size_t d = 0;
    bool have = false;
    for (const auto* family : {&a, &b}) {
        for (const auto& p : *family) {
            if (!have) {
                d = p.degree();
                have = true;
            } else if (p.degree() != d) {
                throw InputError("subspace inputs of mixed degrees " + std::to_string(d) + " and " +
                                 std::to_string(p.degree()));
            }
        }
    }
    return d;
}

SparseVec natural_keys(const NcPoly& p) {
    SparseVec v;
    for (const auto& [w, c] : p.terms()) v.emplace_back(slice_index(w, p.ngens()), c);
    canonicalize(v);
    return v;
}

const FieldCtx* first_ctx(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
    if (!a.empty()) return &a.front().ctx();
    if (!b.empty()) return &b.front().ctx();
    return nullptr;
}

}  // namespace

std::size_t span_rank(const std::vector<NcPoly>& v) {
    if (v.empty()) return 0;
    common_degree(v, {});
    Echelon e(v.front().ctx());
    for (const auto& p : v) e.insert(natural_keys(p));
    return e.rank();
}

bool in_span(const NcPoly& p, const std::vector<NcPoly>& v) {
    if (p.is_zero()) return true;
    common_degree(v, {p});
    Echelon e(p.ctx());
    for (const auto& q : v) e.insert(natural_keys(q));
    return e.contains(natural_keys(p));
}

SubspaceDims subspace_dims(const std::vector<NcPoly>& v1, const std::vector<NcPoly>& v2) {
    common_degree(v1, v2);
    const FieldCtx* ctx = first_ctx(v1, v2);
    if (ctx == nullptr) return {0, 0, 0, 0};
    Echelon e1(*ctx), e2(*ctx), sum(*ctx);
    for (const auto& p : v1) {
        e1.insert(natural_keys(p));
        sum.insert(natural_keys(p));
    }
    for (const auto& p : v2) {
        e2.insert(natural_keys(p));
        sum.insert(natural_keys(p));
    }
    return {e1.rank(), e2.rank(), sum.rank(), e1.rank() + e2.rank() - sum.rank()};
}

std::vector<NcPoly> subspace_intersection(const std::vector<NcPoly>& v1, const std::vector<NcPoly>& v2) {
    const std::size_t d = common_degree(v1, v2);
    const FieldCtx* ctx = first_ctx(v1, v2);
    if (ctx == nullptr || v1.empty() || v2.empty()) return {};
    const int n = (v1.empty() ? v2 : v1).front().ngens();
    // Solve sum a_i v1_i - sum b_j v2_j = 0; unknowns a_i then b_j.
    const std::size_t m1 = v1.size(), m2 = v2.size();
    std::map<Key, SparseVec> equations;
    for (std::size_t i = 0; i < m1; ++i)
        for (const auto& [k, c] : natural_keys(v1[i])) equations[k].emplace_back(i, c);
    for (std::size_t j = 0; j < m2; ++j)
        for (const auto& [k, c] : natural_keys(v2[j])) equations[k].emplace_back(m1 + j, -c);
    Echelon e(*ctx);
    for (auto& [k, row] : equations) {
        canonicalize(row);
        e.insert(row);
    }
    Echelon image(*ctx);
    std::vector<NcPoly> out;
    for (const auto& kv : kernel_basis(e, m1 + m2)) {
        NcPoly p(*ctx, n, d);
        for (const auto& [idx, c] : kv)
            if (idx < m1) p += v1[idx] * c;
        if (p.is_zero()) continue;
        if (image.insert(natural_keys(p))) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace skl
