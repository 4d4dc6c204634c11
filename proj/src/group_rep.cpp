#include "skl/group_rep.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace skl {

using nlohmann::json;

Matrix identity_matrix(const FieldCtx& ctx, int n) {
    Matrix m(n, std::vector<CycNum>(n, CycNum(ctx)));
    for (int i = 0; i < n; ++i) m[i][i] = CycNum(ctx, 1L);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n || (n > 0 && (a[0].size() != n || b[0].size() != n)))
        throw InputError("matrix product of mismatched sizes");
    if (n == 0) return {};
    Matrix r(n, std::vector<CycNum>(n, CycNum(a[0][0].ctx())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

CycNum trace(const Matrix& m) {
    if (m.empty()) throw InputError("trace of an empty matrix");
    CycNum t(m[0][0].ctx());
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

std::string to_string(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + to_string(m[i][j]);
    }
    return s + "]";
}

namespace {

// Nonzero entries of each column: the image of generator j.
std::vector<std::vector<std::pair<Letter, CycNum>>> columns(const Matrix& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::pair<Letter, CycNum>>> cols(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!g[i][j].is_zero()) cols[j].emplace_back(static_cast<Letter>(i), g[i][j]);
    return cols;
}

// Image of c*w as (word, coefficient) pairs.
void image_of_word(const std::vector<std::vector<std::pair<Letter, CycNum>>>& cols, const Word& w, const CycNum& c,
                   std::vector<std::pair<Word, CycNum>>& out) {
    std::vector<std::pair<std::vector<Letter>, CycNum>> partial{{{}, c}};
    for (Letter l : w.letters()) {
        std::vector<std::pair<std::vector<Letter>, CycNum>> next;
        next.reserve(partial.size() * cols[l].size());
        for (const auto& [prefix, coef] : partial)
            for (const auto& [img, e] : cols[l]) {
                auto word = prefix;
                word.push_back(img);
                next.emplace_back(std::move(word), coef * e);
            }
        partial = std::move(next);
    }
    for (auto& [l, coef] : partial) out.emplace_back(Word(std::move(l)), std::move(coef));
}

std::string matrix_key(const Matrix& m) { return to_string(m); }

void check_square(const Matrix& g, int n, const FieldCtx& ctx) {
    if (static_cast<int>(g.size()) != n) throw InputError("matrix size differs from the generator count");
    for (const auto& row : g) {
        if (static_cast<int>(row.size()) != n) throw InputError("matrix is not square");
        for (const auto& e : row)
            if (&e.ctx() != &ctx) throw ConfigError("matrix entry over a different field");
    }
}

void check_action(const Matrix& g, const FieldCtx& ctx, int ngens) { check_square(g, ngens, ctx); }

}  // namespace

NcPoly act(const Matrix& g, const NcPoly& p) {
    check_action(g, p.ctx(), p.ngens());
    const auto cols = columns(g);
    std::vector<std::pair<Word, CycNum>> img;
    for (const auto& [w, c] : p.terms()) image_of_word(cols, w, c, img);
    NcPoly r(p.ctx(), p.ngens(), p.degree());
    for (const auto& [w, c] : img) r.add_term(w, c);
    return r;
}

SparseVec act(const Matrix& g, const SparseVec& v, std::size_t degree, const WordOrder& order) {
    if (v.empty()) return {};
    check_action(g, v.front().second.ctx(), order.ngens());
    const auto cols = columns(g);
    std::vector<std::pair<Word, CycNum>> img;
    for (const auto& [k, c] : v) image_of_word(cols, order.word(k, degree), c, img);
    SparseVec r;
    r.reserve(img.size());
    for (auto& [w, c] : img) r.emplace_back(order.key(w), std::move(c));
    canonicalize(r);
    return r;
}

long MatAction::index_of(const Matrix& m) const {
    auto it = index_.find(matrix_key(m));
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::string MatAction::element_name(std::size_t i) const {
    const auto& w = words_.at(i);
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "*" : "") + gen_names_[w[k]];
    return s;
}

MatAction close_group(const FieldCtx& ctx, std::vector<std::pair<std::string, Matrix>> gens, std::size_t order_cap) {
    MatAction g;
    g.ctx_ = &ctx;
    g.n_ = gens.empty() ? 0 : static_cast<int>(gens.front().second.size());
    if (gens.empty()) throw InputError("a group needs at least one generator matrix");
    for (auto& [name, m] : gens) {
        check_square(m, g.n_, ctx);
        g.gen_names_.push_back(name);
        g.gens_.push_back(std::move(m));
    }
    g.elements_.push_back(identity_matrix(ctx, g.n_));
    g.words_.push_back({});
    g.index_.emplace(matrix_key(g.elements_.back()), 0);
    // Elements are found as g * (known element); the word records the
    // product left to right.
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (std::size_t k = 0; k < g.gens_.size(); ++k) {
            Matrix m = mat_mul(g.gens_[k], g.elements_[head]);
            std::string key = matrix_key(m);
            if (g.index_.count(key)) continue;
            if (g.elements_.size() >= order_cap)
                throw LimitError("group closure exceeded " + std::to_string(order_cap) +
                                 " elements; the generators do not generate a small finite group");
            std::vector<int> w{static_cast<int>(k)};
            w.insert(w.end(), g.words_[head].begin(), g.words_[head].end());
            g.index_.emplace(std::move(key), g.elements_.size());
            g.elements_.push_back(std::move(m));
            g.words_.push_back(std::move(w));
        }
    }
    return g;
}

namespace {

CycNum omega(const FieldCtx& ctx) {
    if (ctx.order() % 3 != 0)
        throw ConfigError("the Heisenberg action needs a cube root of unity; field order " +
                          std::to_string(ctx.order()) + " is not a multiple of 3");
    return root_of_unity(ctx, ctx.order() / 3);
}

}  // namespace

Matrix h3_e1(const FieldCtx& ctx) {
    omega(ctx);
    Matrix m(3, std::vector<CycNum>(3, CycNum(ctx)));
    // e1 x_j = x_{j-1}
    for (int j = 0; j < 3; ++j) m[(j + 2) % 3][j] = CycNum(ctx, 1L);
    return m;
}

Matrix h3_e2(const FieldCtx& ctx) {
    const CycNum w = omega(ctx);
    Matrix m = identity_matrix(ctx, 3);
    m[1][1] = w;
    m[2][2] = w * w;
    return m;
}

Matrix h3_c(const FieldCtx& ctx) {
    Matrix m = identity_matrix(ctx, 3);
    const CycNum w = omega(ctx);
    for (int i = 0; i < 3; ++i) m[i][i] = w;
    return m;
}

MatAction builtin_group(std::string_view name, const FieldCtx& ctx) {
    if (name == "H3") return close_group(ctx, {{"e1", h3_e1(ctx)}, {"e2", h3_e2(ctx)}});
    if (name == "H3-e1") return close_group(ctx, {{"e1", h3_e1(ctx)}});
    if (name == "H3-e2") return close_group(ctx, {{"e2", h3_e2(ctx)}});
    if (name == "H3-center") return close_group(ctx, {{"c", h3_c(ctx)}});
    throw InputError("unknown built-in group '" + std::string(name) + "' (known: H3, H3-e1, H3-e2, H3-center)");
}

MatAction group_from_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("group file: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != "skl-group") throw ParseError("not a group file");
        const FieldCtx& ctx = FieldCtx::get(doc.at("field").get<int>());
        std::vector<std::pair<std::string, Matrix>> gens;
        for (const auto& jg : doc.at("generators")) {
            Matrix m;
            for (const auto& jr : jg.at("matrix")) {
                std::vector<CycNum> row;
                for (const auto& e : jr) row.push_back(parse_cyc(ctx, e.get<std::string>()));
                m.push_back(std::move(row));
            }
            gens.emplace_back(jg.at("name").get<std::string>(), std::move(m));
        }
        return close_group(ctx, std::move(gens));
    } catch (const json::exception& e) {
        throw ParseError(std::string("group file: ") + e.what());
    }
}

MatAction load_group(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return group_from_text(ss.str());
}

std::string group_to_text(const MatAction& g) {
    json gens = json::array();
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
        json m = json::array();
        for (const auto& row : g.generators()[k]) {
            json r = json::array();
            for (const auto& e : row) r.push_back(to_string(e));
            m.push_back(std::move(r));
        }
        gens.push_back({{"name", g.generator_names()[k]}, {"matrix", std::move(m)}});
    }
    const json doc = {{"format", "skl-group"}, {"field", g.ctx().order()}, {"generators", std::move(gens)}};
    return doc.dump(1) + "\n";
}

CharacterTable::CharacterTable(const MatAction& group, std::vector<std::pair<std::string, Matrix>> classes,
                               std::vector<Irrep> irreps)
    : irreps_(std::move(irreps)), order_(group.order()) {
    const auto& elems = group.elements();
    const FieldCtx& ctx = group.ctx();
    std::vector<std::size_t> inverse(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const Matrix one = identity_matrix(ctx, group.dim());
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (mat_mul(elems[i], elems[j]) == one) inverse[i] = j;
    }
    std::size_t covered = 0;
    for (auto& [name, rep] : classes) {
        if (group.index_of(rep) < 0) throw ConsistencyError("class representative " + name + " is not in the group");
        const std::size_t id = reps_.size();
        std::size_t size = 0;
        for (std::size_t h = 0; h < elems.size(); ++h) {
            const Matrix conj = mat_mul(mat_mul(elems[h], rep), elems[inverse[h]]);
            auto [it, inserted] = class_of_.emplace(matrix_key(conj), id);
            if (inserted)
                ++size;
            else if (it->second != id)
                throw ConsistencyError("class representatives " + names_.at(it->second) + " and " + name +
                                       " are conjugate");
        }
        covered += size;
        names_.push_back(name);
        reps_.push_back(std::move(rep));
        sizes_.push_back(size);
    }
    if (covered != order_) throw ConsistencyError("conjugacy classes do not cover the group");

    const auto one_class = class_of(identity_matrix(ctx, group.dim()));
    long sum_sq = 0;
    for (const auto& ir : irreps_) {
        if (ir.values.size() != reps_.size()) throw ConsistencyError("irrep " + ir.name + " has the wrong length");
        if (ir.values[one_class] != CycNum(ctx, static_cast<long>(ir.degree)))
            throw ConsistencyError("irrep " + ir.name + " degree differs from its value at 1");
        sum_sq += static_cast<long>(ir.degree) * ir.degree;
    }
    if (sum_sq != static_cast<long>(order_))
        throw ConsistencyError("squared irrep degrees sum to " + std::to_string(sum_sq) + ", group order is " +
                               std::to_string(order_));
    for (std::size_t a = 0; a < irreps_.size(); ++a)
        for (std::size_t b = 0; b < irreps_.size(); ++b) {
            CycNum s(ctx);
            for (std::size_t k = 0; k < reps_.size(); ++k)
                s += CycNum(ctx, static_cast<long>(sizes_[k])) * irreps_[a].values[k] * irreps_[b].values[k].conj();
            if (s != CycNum(ctx, a == b ? static_cast<long>(order_) : 0L))
                throw ConsistencyError("irreps " + irreps_[a].name + " and " + irreps_[b].name +
                                       " violate orthogonality");
        }
}

CharacterTable CharacterTable::h3(const MatAction& g) {
    const FieldCtx& ctx = g.ctx();
    const CycNum w = omega(ctx);
    const Matrix e1 = h3_e1(ctx), e2 = h3_e2(ctx), c = h3_c(ctx);
    auto power = [&](const Matrix& m, int k) {
        Matrix r = identity_matrix(ctx, 3);
        for (int i = 0; i < k; ++i) r = mat_mul(r, m);
        return r;
    };
    auto name = [](const char* base, int k) {
        return k == 0 ? std::string() : k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
    };
    // Element e1^i e2^j c^k has (i, j, k) coordinates; classes are the three
    // central singletons and the cosets {e1^i e2^j c^k : k} for (i,j) != 0.
    std::vector<std::pair<std::string, Matrix>> classes;
    std::vector<std::array<int, 3>> coords;
    for (int k = 0; k < 3; ++k) {
        classes.emplace_back(k == 0 ? "1" : name("c", k), power(c, k));
        coords.push_back({0, 0, k});
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == 0 && j == 0) continue;
            std::string n = name("e1", i);
            const std::string n2 = name("e2", j);
            if (!n.empty() && !n2.empty()) n += "*";
            n += n2;
            classes.emplace_back(n, mat_mul(power(e1, i), power(e2, j)));
            coords.push_back({i, j, 0});
        }
    std::vector<Irrep> irreps;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Irrep ir{"chi_{" + std::to_string(a) + "," + std::to_string(b) + "}", 1, {}};
            for (const auto& [i, j, k] : coords) ir.values.push_back(w.pow(a * i + b * j));
            irreps.push_back(std::move(ir));
        }
    for (int v = 1; v <= 2; ++v) {
        Irrep ir{"V" + std::to_string(v), 3, {}};
        for (const auto& [i, j, k] : coords)
            ir.values.push_back(i == 0 && j == 0 ? CycNum(ctx, 3L) * w.pow(v * k) : CycNum(ctx));
        irreps.push_back(std::move(ir));
    }
    return CharacterTable(g, std::move(classes), std::move(irreps));
}

CharacterTable CharacterTable::trivial(const MatAction& g) {
    const FieldCtx& ctx = g.ctx();
    return CharacterTable(g, {{"1", identity_matrix(ctx, g.dim())}}, {Irrep{"trivial", 1, {CycNum(ctx, 1L)}}});
}

std::size_t CharacterTable::class_of(const Matrix& g) const {
    auto it = class_of_.find(matrix_key(g));
    if (it == class_of_.end()) throw InputError("matrix is not an element of the group");
    return it->second;
}

const Irrep& CharacterTable::irrep(std::string_view name) const {
    for (const auto& ir : irreps_)
        if (ir.name == name) return ir;
    throw InputError("unknown irrep '" + std::string(name) + "'");
}

CycNum char_on_slice(const Matrix& g, Engine& engine, int d) {
    engine.extend_to_degree(d);
    check_action(g, engine.ctx(), engine.ngens());
    const DegreeSlice& s = engine.slice(d);
    CycNum on_ideal(engine.ctx());
    for (const auto& row : s.all_rows(engine.ctx())) {
        const SparseVec img = act(g, row, d, engine.order());
        // Rows are fully reduced, so the coordinate of img along row j is its
        // entry at pivot j; the diagonal coordinate is the entry at our pivot.
        if (const CycNum* c = find_entry(img, row.front().first)) on_ideal += *c;
        if (!engine.normal_form(img, d).empty())
            throw SymmetryError("the ideal is not stable in degree " + std::to_string(d) + ": image of " +
                                to_string(engine.from_keys(row, d), engine.presentation().names()) +
                                " leaves I_" + std::to_string(d));
    }
    return trace(g).pow(d) - on_ideal;
}

CycNum char_on_quotient(const Matrix& g, Engine& engine, int d) {
    engine.extend_to_degree(d);
    check_action(g, engine.ctx(), engine.ngens());
    CycNum t(engine.ctx());
    for (Key b : engine.slice(d).basis_keys()) {
        const SparseVec nf = engine.normal_form(act(g, SparseVec{{b, CycNum(engine.ctx(), 1L)}}, d, engine.order()), d);
        if (const CycNum* c = find_entry(nf, b)) t += *c;
    }
    return t;
}

namespace {

Int as_natural(const CycNum& x, const std::string& what) {
    if (!x.is_rational() || x.rational_part().get_den() != 1 || sgn(x.rational_part()) < 0)
        throw ConsistencyError(what + " is " + to_string(x) + ", not a non-negative integer");
    return x.rational_part().get_num();
}

}  // namespace

std::map<std::string, Int> isotypic_multiplicities(const CharacterTable& table, Engine& engine, int d) {
    const FieldCtx& ctx = engine.ctx();
    std::vector<CycNum> chi;
    for (const auto& rep : table.class_reps()) chi.push_back(char_on_slice(rep, engine, d));
    std::map<std::string, Int> out;
    for (const auto& ir : table.irreps()) {
        CycNum s(ctx);
        for (std::size_t k = 0; k < chi.size(); ++k)
            s += CycNum(ctx, static_cast<long>(table.class_sizes()[k])) * ir.values[k].conj() * chi[k];
        s *= Rat(1, static_cast<long>(table.group_order()));
        out[ir.name] = as_natural(s, "multiplicity of " + ir.name + " in degree " + std::to_string(d));
    }
    return out;
}

std::size_t invariant_dim(const MatAction& group, const std::vector<NcPoly>& vectors) {
    if (vectors.empty()) return 0;
    const FieldCtx& ctx = group.ctx();
    const std::size_t d = vectors.front().degree();
    const int n = vectors.front().ngens();
    const WordOrder order = WordOrder::natural(n);
    Echelon e(ctx);
    for (const auto& v : vectors) {
        if (v.degree() != d) throw InputError("invariant_dim inputs of mixed degrees");
        SparseVec k;
        for (const auto& [w, c] : v.terms()) k.emplace_back(order.key(w), c);
        canonicalize(k);
        e.insert(k);
    }
    for (std::size_t gi = 0; gi < group.generators().size(); ++gi)
        for (const auto& row : e.rows())
            if (!e.contains(act(group.generators()[gi], row, d, order)))
                throw SymmetryError("span is not stable under " + group.generator_names()[gi]);
    CycNum total(ctx);
    for (const auto& g : group.elements())
        for (const auto& row : e.rows()) {
            const SparseVec img = act(g, row, d, order);
            if (const CycNum* c = find_entry(img, row.front().first)) total += *c;
        }
    total *= Rat(1, static_cast<long>(group.order()));
    return as_natural(total, "invariant dimension").get_ui();
}

std::vector<std::size_t> fixed_subalgebra_dims(const std::vector<Matrix>& elements, Engine& engine, int N) {
    if (elements.empty()) throw InputError("fixed_subalgebra_dims needs at least one element");
    std::vector<std::pair<std::string, Matrix>> gens;
    for (std::size_t i = 0; i < elements.size(); ++i) gens.emplace_back("g" + std::to_string(i), elements[i]);
    const MatAction h = close_group(engine.ctx(), std::move(gens));
    std::vector<std::size_t> out;
    for (int d = 0; d <= N; ++d) {
        CycNum s(engine.ctx());
        for (const auto& g : h.elements()) s += char_on_slice(g, engine, d);
        s *= Rat(1, static_cast<long>(h.order()));
        out.push_back(as_natural(s, "fixed dimension in degree " + std::to_string(d)).get_ui());
    }
    return out;
}

}  // namespace skl
