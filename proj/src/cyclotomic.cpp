#include "skl/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace skl {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const long c = num[k];
        q[k - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dn; ++j)
        if (num[j] != 0) throw ConsistencyError("cyclotomic division left a remainder");
    return q;
}

using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (q, r) with a = q*b + r; b nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    RatPoly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat lead_inv = 1 / b.back();
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rat c = a.back() * lead_inv;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int m) {
    if (m < 1) throw ConfigError("cyclotomic order must be positive, got " + std::to_string(m));
    std::vector<long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    return p;
}

FieldCtx::FieldCtx(int m) : m_(m), phi_(cyclotomic_polynomial(m)) {
    degree_ = static_cast<int>(phi_.size()) - 1;
    const int n = degree_;
    // x^n = -(phi_0 + ... + phi_{n-1} x^{n-1})
    std::vector<long> cur(n);
    for (int j = 0; j < n; ++j) cur[j] = -phi_[j];
    for (int k = n; k <= 2 * n - 2; ++k) {
        high_.push_back(cur);
        const long top = cur[n - 1];
        for (int j = n - 1; j > 0; --j) cur[j] = cur[j - 1] - top * phi_[j];
        cur[0] = -top * phi_[0];
    }
    std::vector<long> pw(n, 0);
    pw[0] = 1;
    for (int k = 0; k < m; ++k) {
        roots_.push_back(pw);
        const long top = pw[n - 1];
        for (int j = n - 1; j > 0; --j) pw[j] = pw[j - 1] - top * phi_[j];
        pw[0] = -top * phi_[0];
    }
}

const FieldCtx& FieldCtx::get(int m) {
    if (m < 1) throw ConfigError("cyclotomic order must be positive, got " + std::to_string(m));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FieldCtx>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[m];
    if (!slot) slot.reset(new FieldCtx(m));
    return *slot;
}

CycNum::CycNum(const FieldCtx& ctx) : ctx_(&ctx), c_(ctx.degree()) {}

CycNum::CycNum(const FieldCtx& ctx, const Rat& r) : ctx_(&ctx), c_(ctx.degree()) {
    c_[0] = r;
}

CycNum::CycNum(const FieldCtx& ctx, long r) : ctx_(&ctx), c_(ctx.degree()) { c_[0] = r; }

CycNum::CycNum(const FieldCtx& ctx, std::vector<Rat> coords) : ctx_(&ctx), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != ctx.degree())
        throw ConfigError("coordinate vector has length " + std::to_string(c_.size()) +
                          ", field degree is " + std::to_string(ctx.degree()));
    for (auto& r : c_) r.canonicalize();
}

void CycNum::check_same(const CycNum& o) const {
    if (ctx_ != o.ctx_)
        throw ConfigError("field context mismatch: Q(zeta_" + std::to_string(ctx_->order()) +
                          ") vs Q(zeta_" + std::to_string(o.ctx_->order()) + ")");
}

bool CycNum::is_zero() const noexcept {
    for (const auto& r : c_)
        if (r != 0) return false;
    return true;
}

bool CycNum::is_rational() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_one() const noexcept { return is_rational() && c_[0] == 1; }

CycNum& CycNum::operator+=(const CycNum& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const Rat& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

CycNum CycNum::operator-() const {
    CycNum r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

namespace {

// prod[0 .. 2n-2] -> reduced coordinates, in place into out[0..n).
void reduce_product(const FieldCtx& ctx, std::vector<Rat>& prod, std::vector<Rat>& out) {
    const int n = ctx.degree();
    const auto& high = ctx.high_powers();
    for (int k = 2 * n - 2; k >= n; --k) {
        const Rat& c = prod[k];
        if (c == 0) continue;
        const auto& h = high[k - n];
        for (int j = 0; j < n; ++j)
            if (h[j] != 0) prod[j] += c * h[j];
    }
    for (int j = 0; j < n; ++j) out[j] = std::move(prod[j]);
}

bool is_rational_coords(const std::vector<Rat>& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

}  // namespace

CycNum& CycNum::operator*=(const CycNum& o) {
    check_same(o);
    const int n = ctx_->degree();
    if (is_rational_coords(o.c_)) {
        const Rat s = o.c_[0];
        for (auto& c : c_) c *= s;
        return *this;
    }
    if (is_rational_coords(c_)) {
        const Rat s = c_[0];
        c_ = o.c_;
        for (auto& c : c_) c *= s;
        return *this;
    }
    std::vector<Rat> prod(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    reduce_product(*ctx_, prod, c_);
    return *this;
}

void CycNum::sub_mul(const CycNum& a, const CycNum& b) {
    check_same(a);
    check_same(b);
    const int n = ctx_->degree();
    if (is_rational_coords(b.c_)) {
        const Rat& s = b.c_[0];
        for (int i = 0; i < n; ++i)
            if (a.c_[i] != 0) c_[i] -= a.c_[i] * s;
        return;
    }
    if (is_rational_coords(a.c_)) {
        const Rat& s = a.c_[0];
        for (int i = 0; i < n; ++i)
            if (b.c_[i] != 0) c_[i] -= b.c_[i] * s;
        return;
    }
    CycNum t(a);
    t *= b;
    *this -= t;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(ctx_->order()) + ")");
    const int n = ctx_->degree();
    if (is_rational_coords(c_)) return CycNum(*ctx_, Rat(1 / c_[0]));
    // Extended Euclid: track s with s*a == r (mod Phi).
    RatPoly phi(ctx_->phi().begin(), ctx_->phi().end());
    RatPoly r0 = phi, r1(c_.begin(), c_.end());
    trim(r1);
    RatPoly s0, s1{Rat(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi is irreducible.
    const Rat inv_c = 1 / r1[0];
    for (auto& c : s1) c *= inv_c;
    auto [q, s] = divmod(s1, phi);
    (void)q;
    std::vector<Rat> coords(n);
    for (std::size_t i = 0; i < s.size(); ++i) coords[i] = s[i];
    return CycNum(*ctx_, std::move(coords));
}

CycNum CycNum::conj() const {
    const int m = ctx_->order();
    const int n = ctx_->degree();
    std::vector<Rat> out(n);
    for (int k = 0; k < n; ++k) {
        if (c_[k] == 0) continue;
        const auto& root = ctx_->roots()[(m - k) % m];
        for (int j = 0; j < n; ++j)
            if (root[j] != 0) out[j] += c_[k] * root[j];
    }
    return CycNum(*ctx_, std::move(out));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result(*ctx_, 1L), base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
}

CycNum root_of_unity(const FieldCtx& ctx, long k) {
    const long m = ctx.order();
    const long r = ((k % m) + m) % m;
    const auto& root = ctx.roots()[r];
    std::vector<Rat> coords(root.begin(), root.end());
    return CycNum(ctx, std::move(coords));
}

std::string to_string(const CycNum& x) {
    std::string out;
    const auto& c = x.coords();
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        if (c[k] == 0) continue;
        const bool neg = sgn(c[k]) < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += Rat(abs(c[k])).get_str();
        if (k > 0) out += "*w^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << to_string(x); }

namespace {

class CycParser {
   public:
    CycParser(const FieldCtx& ctx, std::string_view text) : ctx_(ctx) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    CycNum parse() {
        if (s_.empty()) fail("empty coefficient");
        CycNum total(ctx_);
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            CycNum t = term();
            if (sign < 0) t = -t;
            total += t;
            first = false;
        }
        return total;
    }

   private:
    const FieldCtx& ctx_;
    std::string s_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("coefficient '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
    }

    Int integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Int(s_.substr(start, pos_ - start));
    }

    long exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        Int e = integer();
        if (!e.fits_slong_p()) fail("exponent too large");
        return e.get_si();
    }

    CycNum term() {
        if (peek() == 'w') {
            ++pos_;
            return root_of_unity(ctx_, exponent());
        }
        Int num = integer();
        Int den = 1;
        if (peek() == '/') {
            ++pos_;
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        Rat r(num, den);
        r.canonicalize();
        if (peek() == '*') {
            ++pos_;
            if (peek() != 'w') fail("expected 'w' after '*'");
            ++pos_;
            CycNum t = root_of_unity(ctx_, exponent());
            t *= r;
            return t;
        }
        return CycNum(ctx_, r);
    }
};

}  // namespace

CycNum parse_cyc(const FieldCtx& ctx, std::string_view text) { return CycParser(ctx, text).parse(); }

}  // namespace skl
