#include "skl/freealg.hpp"

#include <cctype>

namespace skl {

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> l;
    l.reserve(a.degree() + b.degree());
    l.insert(l.end(), a.letters().begin(), a.letters().end());
    l.insert(l.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(l));
}

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

std::uint64_t slice_index(const Word& w, int n) {
    std::uint64_t idx = 0;
    for (Letter l : w.letters()) {
        if (l >= n)
            throw InputError("letter " + std::to_string(int(l)) + " out of range for " + std::to_string(n) +
                             " generators");
        idx = idx * n + l;
    }
    return idx;
}

Word slice_word(std::uint64_t index, int degree, int n) {
    std::vector<Letter> l(degree);
    for (int i = degree - 1; i >= 0; --i) {
        l[i] = static_cast<Letter>(index % n);
        index /= n;
    }
    if (index != 0) throw InputError("slice index out of range for degree " + std::to_string(degree));
    return Word(std::move(l));
}

GenNames::GenNames(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_.size() > 255) throw ConfigError("generator count must be in [1, 255]");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw ConfigError("empty generator name");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j]) throw ConfigError("duplicate generator name '" + names_[i] + "'");
    }
}

GenNames GenNames::defaults(int n) {
    if (n == 3) return GenNames();
    std::vector<std::string> names;
    static const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
    if (n <= 26) {
        for (int i = 0; i < n; ++i) names.emplace_back(1, alphabet[i]);
    } else {
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    }
    return GenNames(std::move(names));
}

Letter GenNames::letter(char c) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i].size() == 1 && names_[i][0] == c) return static_cast<Letter>(i);
    throw ParseError(std::string("unknown generator '") + c + "'");
}

std::string to_string(const Word& w, const GenNames& names) {
    std::string s;
    for (Letter l : w.letters()) s += names.name(l);
    return s;
}

Word parse_word(std::string_view text, const GenNames& names) {
    std::vector<Letter> l;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        l.push_back(names.letter(c));
    }
    return Word(std::move(l));
}

NcPoly::NcPoly(const FieldCtx& ctx, int ngens, std::size_t degree) : ctx_(&ctx), ngens_(ngens), degree_(degree) {}

NcPoly::NcPoly(const FieldCtx& ctx, int ngens, const Word& w, const CycNum& c)
    : ctx_(&ctx), ngens_(ngens), degree_(w.degree()) {
    add_term(w, c);
}

NcPoly NcPoly::monomial(const FieldCtx& ctx, int ngens, const Word& w) {
    return NcPoly(ctx, ngens, w, CycNum(ctx, 1L));
}

NcPoly NcPoly::generator(const FieldCtx& ctx, int ngens, Letter g) {
    return monomial(ctx, ngens, Word{g});
}

NcPoly NcPoly::one(const FieldCtx& ctx, int ngens) { return monomial(ctx, ngens, Word{}); }

CycNum NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CycNum(*ctx_) : it->second;
}

void NcPoly::add_term(const Word& w, const CycNum& c) {
    if (w.degree() != degree_)
        throw InputError("inhomogeneous term of degree " + std::to_string(w.degree()) + " in polynomial of degree " +
                         std::to_string(degree_));
    for (Letter l : w.letters())
        if (l >= ngens_) throw InputError("letter out of range in polynomial term");
    if (&c.ctx() != ctx_) throw ConfigError("field context mismatch in polynomial term");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NcPoly::check_compatible(const NcPoly& o, bool same_degree) const {
    if (ctx_ != o.ctx_) throw ConfigError("field context mismatch between polynomials");
    if (ngens_ != o.ngens_) throw ConfigError("generator count mismatch between polynomials");
    if (same_degree && degree_ != o.degree_)
        throw InputError("adding polynomials of degrees " + std::to_string(degree_) + " and " +
                         std::to_string(o.degree_));
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    check_compatible(o, true);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    check_compatible(o, true);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly& NcPoly::operator*=(const CycNum& c) {
    if (&c.ctx() != ctx_) throw ConfigError("field context mismatch in scalar multiple");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NcPoly NcPoly::operator-() const {
    NcPoly r(*this);
    for (auto& [w, v] : r.terms_) v = -v;
    return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
    return ctx_ == o.ctx_ && ngens_ == o.ngens_ && degree_ == o.degree_ && terms_ == o.terms_;
}

NcPoly poly_mul(const NcPoly& p, const NcPoly& q) {
    if (&p.ctx() != &q.ctx()) throw ConfigError("field context mismatch in product");
    if (p.ngens() != q.ngens()) throw ConfigError("generator count mismatch in product");
    NcPoly r(p.ctx(), p.ngens(), p.degree() + q.degree());
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms()) r.add_term(u * v, a * b);
    return r;
}

NcPoly poly_pow(const NcPoly& p, unsigned e) {
    NcPoly r = NcPoly::one(p.ctx(), p.ngens());
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, p);
    return r;
}

NcPoly cyclic_derivative(const NcPoly& s, Letter g) {
    if (s.degree() == 0) throw InputError("cyclic derivative of a degree-0 polynomial");
    NcPoly r(s.ctx(), s.ngens(), s.degree() - 1);
    for (const auto& [w, c] : s.terms()) {
        const auto& l = w.letters();
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i] != g) continue;
            std::vector<Letter> vu(l.begin() + i + 1, l.end());
            vu.insert(vu.end(), l.begin(), l.begin() + i);
            r.add_term(Word(std::move(vu)), c);
        }
    }
    return r;
}

NcPoly cyclic_shift(const NcPoly& s) {
    NcPoly r(s.ctx(), s.ngens(), s.degree());
    for (const auto& [w, c] : s.terms()) {
        if (w.empty()) {
            r.add_term(w, c);
            continue;
        }
        std::vector<Letter> l(w.letters().begin() + 1, w.letters().end());
        l.push_back(w[0]);
        r.add_term(Word(std::move(l)), c);
    }
    return r;
}

std::string to_string(const NcPoly& p, const GenNames& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        const std::string word = w.empty() ? "" : to_string(w, names);
        std::string coef;
        bool neg = false;
        if (c.is_rational()) {
            neg = sgn(c.rational_part()) < 0;
            const Rat a = abs(c.rational_part());
            if (a != 1 || w.empty()) coef = a.get_str();
        } else {
            coef = "(" + to_string(c) + ")";
        }
        std::string term = coef;
        if (!coef.empty() && !word.empty()) term += "*";
        term += word;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

namespace {

class PolyParser {
   public:
    PolyParser(const FieldCtx& ctx, std::string_view text, const GenNames& names)
        : ctx_(ctx), names_(names) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    NcPoly parse(long degree) {
        if (s_.empty()) fail("empty polynomial");
        if (s_ == "0") {
            if (degree < 0) fail("cannot infer the degree of 0");
            return NcPoly(ctx_, names_.size(), static_cast<std::size_t>(degree));
        }
        std::vector<std::pair<Word, CycNum>> terms;
        bool first = true;
        while (pos_ < s_.size()) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto t = term();
            if (neg) t.second = -t.second;
            terms.push_back(std::move(t));
            first = false;
        }
        const std::size_t d = degree >= 0 ? static_cast<std::size_t>(degree) : terms.front().first.degree();
        NcPoly p(ctx_, names_.size(), d);
        for (const auto& [w, c] : terms) p.add_term(w, c);
        return p;
    }

   private:
    const FieldCtx& ctx_;
    const GenNames& names_;
    std::string s_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
    }

    std::pair<Word, CycNum> term() {
        CycNum coef(ctx_, 1L);
        bool have_coef = false;
        if (peek() == '(') {
            const std::size_t close = s_.find(')', pos_);
            if (close == std::string::npos) fail("unbalanced '('");
            coef = parse_cyc(ctx_, std::string_view(s_).substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
            const std::string lit = s_.substr(start, pos_ - start);
            const auto slash = lit.find('/');
            if (slash != std::string::npos &&
                (slash + 1 == lit.size() || lit.find('/', slash + 1) != std::string::npos ||
                 lit.find_first_not_of('0', slash + 1) == std::string::npos))
                fail("bad rational literal '" + lit + "'");
            Rat r(lit);
            r.canonicalize();
            coef = CycNum(ctx_, r);
            have_coef = true;
        }
        if (have_coef) {
            if (peek() == '*') {
                ++pos_;
            } else {
                // Bare coefficient: the degree-0 word.
                if (peek() != '\0' && peek() != '+' && peek() != '-') fail("expected '*' after coefficient");
                return {Word{}, coef};
            }
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && peek() != '+' && peek() != '-') ++pos_;
        if (start == pos_) fail("expected a word");
        const std::string_view w = std::string_view(s_).substr(start, pos_ - start);
        if (w == "1") return {Word{}, coef};
        return {parse_word(w, names_), coef};
    }
};

}  // namespace

NcPoly parse_poly(const FieldCtx& ctx, std::string_view text, const GenNames& names, long degree) {
    return PolyParser(ctx, text, names).parse(degree);
}

}  // namespace skl
