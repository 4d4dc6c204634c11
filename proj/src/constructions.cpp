#include "skl/constructions.hpp"

#include <array>

namespace skl {

namespace {

const GenNames kXYZ;

using Terms = std::vector<std::pair<CycNum, const char*>>;

NcPoly lin(const FieldCtx& ctx, const Terms& terms) {
    NcPoly p(ctx, 3, std::string_view(terms.front().second).size());
    for (const auto& [c, w] : terms) p.add_term(parse_word(w, kXYZ), c);
    return p;
}

CycNum omega(const FieldCtx& ctx, std::string_view who) {
    if (ctx.order() % 3 != 0)
        throw ConfigError(std::string(who) + " needs a primitive cube root of unity; field order " +
                          std::to_string(ctx.order()) + " is not a multiple of 3");
    return root_of_unity(ctx, ctx.order() / 3);
}

void expect_params(std::string_view name, const std::vector<CycNum>& params, std::size_t n) {
    if (params.size() != n)
        throw ConfigError("preset " + std::string(name) + " takes " + std::to_string(n) + " parameter(s), got " +
                          std::to_string(params.size()));
}

bool all_zero(const std::vector<CycNum>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<NcPoly> sklyanin_relations(const CycNum& a, const CycNum& b, const CycNum& c) {
    const FieldCtx& k = a.ctx();
    std::vector<NcPoly> out;
    for (const auto& [u, v, s] : {std::array<const char*, 3>{"yz", "zy", "xx"}, {"zx", "xz", "yy"}, {"xy", "yx", "zz"}}) {
        NcPoly r(k, 3, 2);
        r.add_term(parse_word(u, kXYZ), a);
        r.add_term(parse_word(v, kXYZ), b);
        r.add_term(parse_word(s, kXYZ), c);
        if (r.is_zero()) throw ConfigError("sklyanin relation vanishes identically");
        out.push_back(std::move(r));
    }
    return out;
}

// A(zxy + w^e xyz + w^2e yzx) + B(yxz + w^e zyx + w^2e xzy)
NcPoly twisted_cubic(const CycNum& A, const CycNum& B, int e) {
    const FieldCtx& k = A.ctx();
    const CycNum w = omega(k, "T");
    const CycNum w1 = w.pow(e), w2 = w.pow(2 * e);
    return lin(k, {{A, "zxy"}, {A * w1, "xyz"}, {A * w2, "yzx"}, {B, "yxz"}, {B * w1, "zyx"}, {B * w2, "xzy"}});
}

std::vector<NcPoly> squares(const FieldCtx& k) {
    const CycNum one(k, 1L);
    return {lin(k, {{one, "xx"}}), lin(k, {{one, "yy"}}), lin(k, {{one, "zz"}})};
}

Presentation make(const FieldCtx& k, std::vector<NcPoly> rels) { return Presentation(k, kXYZ, std::move(rels)); }

}  // namespace

ParamPoint::ParamPoint(std::vector<CycNum> coords) : c_(std::move(coords)) {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) throw InputError("projective point with all coordinates zero");
    const CycNum inv = c_[lead].inverse();
    for (auto& x : c_) x *= inv;
}

std::string to_string(const ParamPoint& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + to_string(p[i]);
    return s + "]";
}

PluckerLine PluckerLine::through(const std::vector<CycNum>& u, const std::vector<CycNum>& v) {
    if (u.size() != 3 || v.size() != 3) throw InputError("Plücker line needs two 3-vectors");
    return PluckerLine{u[0] * v[1] - u[1] * v[0], u[2] * v[0] - u[0] * v[2], u[1] * v[2] - u[2] * v[1]};
}

bool PluckerLine::contains(const std::vector<CycNum>& x) const {
    if (x.size() != 3) throw InputError("point must have 3 coordinates");
    return (x[0] * p12 + x[1] * p20 + x[2] * p01).is_zero();
}

std::vector<std::string> preset_names() {
    return {"poly", "sklyanin", "degenerate", "T", "Tpair", "M", "clifford", "badC", "badA", "zhang"};
}

Presentation preset(std::string_view name, const std::vector<std::string>& params, const FieldCtx& ctx) {
    std::vector<CycNum> p;
    for (const auto& s : params) p.push_back(parse_cyc(ctx, s));
    return preset(name, p, ctx);
}

Presentation preset(std::string_view name, const std::vector<CycNum>& params, const FieldCtx& k) {
    const CycNum one(k, 1L), zero(k);
    if (name == "poly") {
        expect_params(name, params, 0);
        return make(k, {lin(k, {{one, "xy"}, {-one, "yx"}}), lin(k, {{one, "yz"}, {-one, "zy"}}),
                        lin(k, {{one, "zx"}, {-one, "xz"}})});
    }
    if (name == "sklyanin" || name == "degenerate") {
        expect_params(name, params, 3);
        if (all_zero(params)) throw ConfigError("sklyanin parameters [0:0:0] do not define a point");
        if (name == "degenerate") {
            int nonzero = 0;
            for (const auto& c : params) nonzero += c.is_zero() ? 0 : 1;
            if (nonzero != 1)
                throw ConfigError("degenerate takes a coordinate vertex [0:0:1], [1:0:0] or [0:1:0]");
        }
        return make(k, sklyanin_relations(params[0], params[1], params[2]));
    }
    if (name == "T" || name == "badC") {
        std::vector<CycNum> ab = params;
        if (name == "badC") {
            expect_params(name, params, 0);
            ab = {one, zero};
        }
        expect_params(name, ab, 2);
        if (all_zero(ab)) throw ConfigError("T parameters [0:0] do not define a point");
        auto rels = squares(k);
        rels.push_back(twisted_cubic(ab[0], ab[1], 1));
        rels.push_back(twisted_cubic(ab[0], ab[1], 2));
        return make(k, std::move(rels));
    }
    if (name == "Tpair") {
        expect_params(name, params, 4);
        if (all_zero({params[0], params[1]}) || all_zero({params[2], params[3]}))
            throw ConfigError("Tpair needs [A1:B1] and [A2:B2] each nonzero");
        auto rels = squares(k);
        rels.push_back(twisted_cubic(params[0], params[1], 1));
        rels.push_back(twisted_cubic(params[2], params[3], 2));
        return make(k, std::move(rels));
    }
    if (name == "M") {
        expect_params(name, params, 2);
        if (all_zero(params)) throw ConfigError("M parameters [0:0] do not define a point");
        const CycNum& A = params[0];
        const CycNum& B = params[1];
        auto rels = squares(k);
        rels.push_back(lin(k, {{A, "zxy"}, {B, "yxz"}}));
        rels.push_back(lin(k, {{A, "xyz"}, {B, "zyx"}}));
        rels.push_back(lin(k, {{A, "yzx"}, {B, "xzy"}}));
        return make(k, std::move(rels));
    }
    if (name == "clifford") {
        expect_params(name, params, 0);
        auto rels = squares(k);
        // [{a,b},c] = abc + bac - cab - cba
        rels.push_back(lin(k, {{one, "xyz"}, {one, "yxz"}, {-one, "zxy"}, {-one, "zyx"}}));
        rels.push_back(lin(k, {{one, "yzx"}, {one, "zyx"}, {-one, "xyz"}, {-one, "xzy"}}));
        rels.push_back(lin(k, {{one, "zxy"}, {one, "xzy"}, {-one, "yzx"}, {-one, "yxz"}}));
        return make(k, std::move(rels));
    }
    if (name == "badA") {
        expect_params(name, params, 0);
        auto rels = squares(k);
        for (const char* w : {"xyz", "yzx", "zxy"}) rels.push_back(lin(k, {{one, w}}));
        return make(k, std::move(rels));
    }
    if (name == "zhang") {
        expect_params(name, params, 1);
        const CycNum& t = params[0];
        const CycNum w = omega(k, "zhang");
        auto rels = sklyanin_relations(one, zero, zero);
        for (int e : {1, 2}) {
            const CycNum w1 = w.pow(e), w2 = w.pow(2 * e);
            rels.push_back(lin(k, {{one, "zyx"}, {w1, "xzy"}, {w2, "yxz"}, {t, "yyy"}, {t * w1, "zzz"}, {t * w2, "xxx"}}));
        }
        return make(k, std::move(rels));
    }
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

NcPoly superpotential(const ParamPoint& p) {
    if (p.size() != 3) throw InputError("superpotential needs a point [a:b:c]");
    const FieldCtx& k = p[0].ctx();
    return lin(k, {{p[0], "zxy"}, {p[0], "xyz"}, {p[0], "yzx"}, {p[1], "yxz"}, {p[1], "zyx"}, {p[1], "xzy"},
                   {p[2], "xxx"}, {p[2], "yyy"}, {p[2], "zzz"}});
}

NcPoly central_g(CentralKind kind, const CycNum& t) {
    const FieldCtx& k = t.ctx();
    const CycNum one(k, 1L);
    if (kind == CentralKind::T)
        return lin(k, {{one, "zxy"}, {one, "xyz"}, {one, "yzx"}, {t, "yxz"}, {t, "zyx"}, {t, "xzy"}});
    return lin(k, {{one, "zyx"}, {one, "xzy"}, {one, "yxz"}, {t, "yyy"}, {t, "zzz"}, {t, "xxx"}});
}

std::vector<ParamPoint> nonregular_points(const FieldCtx& k) {
    const CycNum w = omega(k, "nonregular_points");
    const CycNum one(k, 1L), zero(k);
    std::vector<ParamPoint> out{ParamPoint({zero, zero, one}), ParamPoint({zero, one, zero}),
                                ParamPoint({one, zero, zero})};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.emplace_back(std::vector<CycNum>{one, w.pow(i), w.pow(j)});
    return out;
}

bool is_nonregular(const ParamPoint& p) {
    if (p.size() != 3) throw InputError("expected a point [a:b:c]");
    for (const auto& q : nonregular_points(p[0].ctx()))
        if (q == p) return true;
    return false;
}

namespace {

std::size_t dense_rank(std::vector<std::vector<CycNum>> rows) {
    Echelon e(rows.front().front().ctx());
    for (const auto& r : rows) {
        SparseVec v;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (!r[j].is_zero()) v.emplace_back(j, r[j]);
        e.insert(v);
    }
    return e.rank();
}

}  // namespace

BlowupResult blowup_condition(const ParamPoint& p, const PluckerLine& line) {
    if (p.size() != 3) throw InputError("blowup_condition needs a point [a:b:c]");
    if (p[2].is_zero()) throw DomainError("blowup_condition works in the chart c != 0");
    if (line.is_zero()) throw InputError("degenerate Plücker line (all coordinates zero)");
    const FieldCtx& k = p[0].ctx();
    const CycNum w = omega(k, "blowup_condition");
    const CycNum a = p[0] / p[2], b = p[1] / p[2], c(k, 1L);
    const std::vector<CycNum> r1{c, a * w * w, b * w}, r2{c, a * w, b * w * w};
    // The plane is the orthogonal complement of n = (p12, p20, p01); n x e_i
    // span it.
    const std::vector<CycNum> n{line.p12, line.p20, line.p01};
    std::vector<std::vector<CycNum>> plane;
    for (int i = 0; i < 3; ++i) {
        std::vector<CycNum> e(3, CycNum(k));
        e[i] = CycNum(k, 1L);
        std::vector<CycNum> v{n[1] * e[2] - n[2] * e[1], n[2] * e[0] - n[0] * e[2], n[0] * e[1] - n[1] * e[0]};
        plane.push_back(std::move(v));
    }
    std::vector<std::vector<CycNum>> spanning;
    for (auto& v : plane) {
        auto trial = spanning;
        trial.push_back(v);
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || !x.is_zero();
        if (nonzero && dense_rank(trial) == trial.size()) spanning = std::move(trial);
        if (spanning.size() == 2) break;
    }
    auto dot = [](const std::vector<CycNum>& u, const std::vector<CycNum>& v) {
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    };
    BlowupResult r;
    r.rank = dense_rank({r1, r2, spanning.at(0), spanning.at(1)});
    // The printed pair: p12 + a w p20 + b w^2 p01 = 0 and p12 + a w^2 p20 + b w p01 = 0.
    r.eqs_hold = dot(r2, n).is_zero() && dot(r1, n).is_zero();
    r.plucker_relation = (a * line.p20) == (b * line.p01);
    return r;
}

Overlap relation_overlap(const Presentation& p) {
    std::vector<NcPoly> left, right;
    for (const auto& r : p.relations()) {
        if (r.degree() != 2) continue;
        for (int g = 0; g < p.ngens(); ++g) {
            const NcPoly x = NcPoly::generator(p.ctx(), p.ngens(), static_cast<Letter>(g));
            left.push_back(r * x);
            right.push_back(x * r);
        }
    }
    if (left.empty()) throw InputError("presentation has no quadratic relations");
    return Overlap{subspace_dims(left, right), subspace_intersection(left, right)};
}

PreimageLine central_preimage_line(const ParamPoint& p) {
    if (p.size() != 3) throw InputError("central_preimage_line needs a point [a:b:c]");
    if (is_nonregular(p)) throw DomainError("point " + to_string(p) + " is one of the 12 non-regular points");
    const FieldCtx& k = p[0].ctx();
    Engine e(preset("sklyanin", p.coords(), k));
    const auto center = e.center_basis(3);
    if (center.empty()) throw ConsistencyError("sklyanin " + to_string(p) + " has no central cubic");

    // H3-invariant part of the central cubics by averaging.
    const MatAction h3 = builtin_group("H3", k);
    std::vector<NcPoly> invariant;
    for (const auto& c : center) {
        NcPoly avg(k, 3, 3);
        for (const auto& g : h3.elements()) avg += e.normal_form(act(g, c));
        if (!avg.is_zero() && !in_span(avg, invariant)) invariant.push_back(avg);
    }
    if (invariant.empty()) throw ConsistencyError("no H3-invariant central cubic for " + to_string(p));
    if (invariant.size() > 1)
        throw ConsistencyError("H3-invariant central cubics of " + to_string(p) + " are not unique");
    const NcPoly c3 = invariant.front();

    // Unknowns (α, β, γ, λ): NF(α w1 + β w2 + γ w3) - λ c3 = 0.
    const NcPoly w3 = superpotential(ParamPoint({CycNum(k), CycNum(k), CycNum(k, 1L)}));
    const NcPoly w2 = superpotential(ParamPoint({CycNum(k), CycNum(k, 1L), CycNum(k)}));
    const NcPoly w1 = superpotential(ParamPoint({CycNum(k, 1L), CycNum(k), CycNum(k)}));
    std::vector<NcPoly> columns{e.normal_form(w1), e.normal_form(w2), e.normal_form(w3), -c3};
    std::map<Word, SparseVec> eqs;
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [w, c] : columns[j].terms()) eqs[w].emplace_back(j, c);
    Echelon sys(k);
    for (auto& [w, row] : eqs) sys.insert(row);
    // Project the kernel onto (α, β, γ).
    Echelon proj(k);
    std::vector<std::vector<CycNum>> span;
    for (const auto& v : kernel_basis(sys, 4)) {
        SparseVec head;
        std::vector<CycNum> coords(3, CycNum(k));
        for (const auto& [j, c] : v)
            if (j < 3) {
                head.emplace_back(j, c);
                coords[j] = c;
            }
        if (proj.insert(head)) span.push_back(std::move(coords));
    }
    PreimageLine out{c3, proj.rank(), std::nullopt};
    if (span.size() == 2) out.line = PluckerLine::through(span[0], span[1]);
    return out;
}

AlphaResult derive_center_scalar(Engine& t1) {
    const FieldCtx& k = t1.ctx();
    const CycNum one(k, 1L);
    AlphaResult r{};
    const auto c3 = t1.center_basis(3);
    const auto c4 = t1.center_basis(4);
    r.center3_dim = c3.size();
    r.center4_dim = c4.size();
    auto fourth = [&](const char* a, const char* b) { return poly_pow(lin(k, {{one, a}, {one, b}}), 4); };
    const NcPoly u = t1.normal_form(fourth("y", "z"));
    const NcPoly v = t1.normal_form(fourth("x", "z"));
    const NcPoly w = t1.normal_form(fourth("x", "y"));
    r.uvw_central = in_span(u, c4) && in_span(v, c4) && in_span(w, c4);
    const NcPoly g = t1.normal_form(central_g(CentralKind::T, one));

    t1.extend_to_degree(12);
    const NcPoly lhs = t1.normal_form(u * v * w);
    const NcPoly rhs = t1.normal_form(poly_pow(g, 4));
    if (rhs.is_zero()) {
        if (lhs.is_zero()) r.alpha = CycNum(k);  // any α works; report 0 so the caller sees α ≠ 0 fails
        return r;
    }
    const auto& [word, coef] = *rhs.terms().begin();
    const CycNum alpha = lhs.coeff(word) / coef;
    if ((lhs - rhs * alpha).is_zero()) r.alpha = alpha;
    return r;
}

}  // namespace skl
