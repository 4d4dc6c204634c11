#include "skl/series.hpp"

#include "skl/linalg.hpp"

namespace skl {

namespace {

std::string poly_text(const std::vector<Int>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        const bool neg = sgn(p[i]) < 0;
        const Int a = abs(p[i]);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (i == 0 || a != 1) s += a.get_str();
        if (i >= 1) s += "t";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

bool is_integral(const Rat& r) { return r.get_den() == 1; }

}  // namespace

std::optional<RationalSeries> guess_rational_series(const std::vector<Int>& a) {
    const std::size_t N = a.size();
    if (N < 6) throw InputError("guess_rational_series needs at least 6 terms, got " + std::to_string(N));
    const FieldCtx& Q = FieldCtx::get(1);
    for (std::size_t total = 0; total + 2 <= N; ++total) {
        for (std::size_t r = 0; r <= total; ++r) {
            const std::size_t s = total - r;
            // Equations n = s+1 .. N-1: a_n + sum_{i=1}^r q_i a_{n-i} = 0.
            if (N - 1 <= s || N - 1 - s <= r) continue;
            Echelon e(Q);
            bool consistent = true;
            for (std::size_t n = s + 1; n < N && consistent; ++n) {
                // Columns 0..r-1 for q_1..q_r, column r for the constant.
                SparseVec row;
                for (std::size_t i = 1; i <= r; ++i)
                    if (n >= i && a[n - i] != 0) row.emplace_back(i - 1, CycNum(Q, Rat(a[n - i])));
                if (a[n] != 0) row.emplace_back(r, CycNum(Q, Rat(a[n])));
                e.insert(row);
                consistent = !e.is_pivot(r);
            }
            if (!consistent || e.rank() != r) continue;
            RationalSeries out;
            out.denominator.assign(r + 1, Int(0));
            out.denominator[0] = 1;
            bool integral = true;
            for (std::size_t i = 1; i <= r; ++i) {
                // Reduced rows: q_i + c * 1 = 0 at pivot i-1.
                const SparseVec* row = nullptr;
                if (auto idx = e.row_of_pivot(i - 1)) row = &e.rows()[*idx];
                const CycNum* c = row ? find_entry(*row, r) : nullptr;
                const Rat q = c ? Rat(-c->rational_part()) : Rat(0);
                integral = integral && is_integral(q);
                out.denominator[i] = q.get_num();
            }
            if (!integral) continue;
            out.numerator.assign(s + 1, Int(0));
            for (std::size_t n = 0; n <= s; ++n) {
                Int v = a[n];
                for (std::size_t i = 1; i <= r && i <= n; ++i) v += out.denominator[i] * a[n - i];
                out.numerator[n] = v;
            }
            if (expand_series(out, N) != a) continue;
            return out;
        }
    }
    return std::nullopt;
}

std::vector<Int> expand_series(const RationalSeries& s, std::size_t n) {
    if (s.denominator.empty() || s.denominator[0] != 1) throw InputError("denominator must have constant term 1");
    std::vector<Int> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Int v = k < s.numerator.size() ? s.numerator[k] : Int(0);
        for (std::size_t i = 1; i < s.denominator.size() && i <= k; ++i) v -= s.denominator[i] * out[k - i];
        out[k] = v;
    }
    return out;
}

std::string to_string(const RationalSeries& s) {
    const std::string num = poly_text(s.numerator);
    if (s.denominator.size() == 1) return num;
    const bool bare = num.find_first_of("+-", 1) == std::string::npos;
    return (bare ? num : "(" + num + ")") + "/(" + poly_text(s.denominator) + ")";
}

}  // namespace skl
