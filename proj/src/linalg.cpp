#include "skl/linalg.hpp"

#include <algorithm>

namespace skl {

void canonicalize(SparseVec& v) {
    if (v.empty()) return;
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        if (out != i) v[out] = std::move(v[i]);
        while (j < v.size() && v[j].first == v[out].first) {
            v[out].second += v[j].second;
            ++j;
        }
        if (!v[out].second.is_zero()) ++out;
        i = j;
    }
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(out), v.end());
}

SparseVec axpy(const SparseVec& a, const CycNum& s, const SparseVec& b) {
    SparseVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            CycNum c = a[i].second;
            c += s * b[j].second;
            if (!c.is_zero()) r.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

const CycNum* find_entry(const SparseVec& v, Key k) {
    auto it = std::lower_bound(v.begin(), v.end(), k, [](const auto& e, Key key) { return e.first < key; });
    return (it != v.end() && it->first == k) ? &it->second : nullptr;
}

std::optional<std::size_t> Echelon::row_of_pivot(Key k) const {
    auto it = pivot_.find(k);
    if (it == pivot_.end()) return std::nullopt;
    return it->second;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
    SparseVec acc;
    bool touched = false;
    for (const auto& [k, c] : v) {
        auto it = pivot_.find(k);
        if (it == pivot_.end()) {
            acc.emplace_back(k, c);
            continue;
        }
        touched = true;
        const SparseVec& row = rows_[it->second];
        for (std::size_t t = 1; t < row.size(); ++t) acc.emplace_back(row[t].first, -(c * row[t].second));
    }
    if (touched) canonicalize(acc);
    return acc;
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    const CycNum lead = r.front().second;
    if (!lead.is_one()) {
        const CycNum inv = lead.inverse();
        for (auto& [k, c] : r) c *= inv;
    }
    const Key p = r.front().first;
    const auto id = static_cast<std::uint32_t>(rows_.size());

    // Clear the new pivot column from existing rows.
    if (auto u = users_.find(p); u != users_.end()) {
        std::vector<std::uint32_t> holders = std::move(u->second);
        users_.erase(u);
        for (std::uint32_t h : holders) {
            SparseVec& row = rows_[h];
            const CycNum* e = find_entry(row, p);
            if (e == nullptr) continue;
            const CycNum factor = -*e;
            SparseVec updated = axpy(row, factor, r);
            // Register columns that newly appeared in this row.
            std::size_t a = 0;
            for (const auto& [k, c] : updated) {
                while (a < row.size() && row[a].first < k) ++a;
                if (a < row.size() && row[a].first == k) continue;
                users_[k].push_back(h);
            }
            row = std::move(updated);
        }
    }
    for (std::size_t t = 1; t < r.size(); ++t) users_[r[t].first].push_back(id);
    pivot_.emplace(p, id);
    rows_.push_back(std::move(r));
    return true;
}

std::vector<SparseVec> kernel_basis(const Echelon& e, std::size_t ncols) {
    std::vector<SparseVec> basis;
    for (Key f = 0; f < ncols; ++f) {
        if (e.is_pivot(f)) continue;
        SparseVec v;
        for (const auto& row : e.rows()) {
            const CycNum* c = find_entry(row, f);
            if (c != nullptr) v.emplace_back(row.front().first, -*c);
        }
        v.emplace_back(f, CycNum(e.ctx(), 1L));
        canonicalize(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace skl
