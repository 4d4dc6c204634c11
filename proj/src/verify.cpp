#include "skl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "skl/constructions.hpp"
#include "skl/errors.hpp"
#include "skl/group_rep.hpp"
#include "skl/linalg.hpp"
#include "skl/point_modules.hpp"
#include "skl/series.hpp"

#ifndef SKL_DATA_DIR
#define SKL_DATA_DIR "data"
#endif

namespace skl {

namespace {

const FieldCtx& K() { return FieldCtx::get(3); }
const GenNames& names() {
    static const GenNames n;
    return n;
}
CycNum num(long v) { return CycNum(K(), v); }
CycNum cyc(const json& j) { return parse_cyc(K(), j.get<std::string>()); }
NcPoly P(const std::string& s) { return parse_poly(K(), s, names()); }

std::vector<CycNum> cycs(const json& j) {
    std::vector<CycNum> out;
    for (const auto& x : j) out.push_back(cyc(x));
    return out;
}

Presentation pres(const std::string& name, const json& params) {
    return preset(name, params.get<std::vector<std::string>>(), K());
}

json point_json(const ProjPoint& p) { return to_string(p); }

json next_json(const NextPoint& n) {
    if (const auto* p = std::get_if<ProjPoint>(&n)) return point_json(*p);
    return "free choice on line " + std::to_string(std::get<FreeChoice>(n).line);
}

ProjPoint proj(const json& j) { return ProjPoint(cycs(j)); }

std::size_t class_index(const CharacterTable& t, const std::string& name) {
    const auto& n = t.class_names();
    const auto it = std::find(n.begin(), n.end(), name);
    if (it == n.end()) throw ConfigError("no conjugacy class named " + name);
    return static_cast<std::size_t>(it - n.begin());
}

// Character values of `a` and `b` agree on the named classes for d <= N.
bool same_characters(Engine& a, Engine& b, const CharacterTable& t, const json& classes, int N) {
    for (const auto& c : classes) {
        const Matrix& g = t.class_reps()[class_index(t, c.get<std::string>())];
        for (int d = 0; d <= N; ++d)
            if (char_on_slice(g, a, d) != char_on_slice(g, b, d)) return false;
    }
    return true;
}

bool no_letter_on_both_parities(const Word& w) {
    for (Letter g = 0; g < 3; ++g) {
        bool even = false, odd = false;
        for (std::size_t i = 0; i < w.degree(); ++i)
            if (w[i] == g) (i % 2 ? odd : even) = true;
        if (even && odd) return false;
    }
    return true;
}

using Results = json;
using CheckFn = std::function<Results(const json& inputs)>;
using OracleFn = std::function<json(const json& inputs)>;

// ---- checks ----

Results check_hilbert(const json& in) {
    Engine e(pres(in["preset"], in["params"]));
    return {{"hilbert", e.hilbert(in["max_deg"])}};
}

Results check_intersections(const json& in) {
    Results r;
    const auto h3 = builtin_group("H3", K());
    const auto generic = relation_overlap(pres("sklyanin", in["generic"]));
    r["intersection_generic"] = generic.dims.dim_intersection;
    r["invariant_generic"] = invariant_dim(h3, generic.basis);
    json vert = json::array();
    for (const auto& p : in["vertices"]) vert.push_back(relation_overlap(pres("sklyanin", p)).dims.dim_intersection);
    r["intersection_vertices"] = vert;
    json inv = json::array();
    for (const auto& p : nonregular_points(K())) {
        const auto o = relation_overlap(preset("sklyanin", p.coords(), K()));
        inv.push_back(invariant_dim(h3, o.basis));
    }
    r["invariant_nonregular"] = inv;
    return r;
}

Results check_isotypic(const json& in) {
    Engine e(pres(in["preset"], in["params"]));
    const auto table = CharacterTable::h3(builtin_group("H3", K()));
    json m = json::object();
    for (const auto& [name, mult] : isotypic_multiplicities(table, e, in["degree"])) m[name] = mult.get_si();
    return {{"multiplicities", m}};
}

Results check_diagonal(const json& in) {
    Results r;
    auto dim4 = [](const std::string& name, const json& params) {
        Engine e(pres(name, params));
        return e.hilbert(4)[4];
    };
    json diag = json::array();
    for (const auto& s : in["diagonal"]) diag.push_back(dim4("Tpair", s));
    r["diagonal_dim4"] = diag;
    json off = json::array();
    std::size_t least = SIZE_MAX;
    for (const auto& s : in["off_diagonal"]) {
        const auto d = dim4("Tpair", s);
        off.push_back(d);
        least = std::min(least, d);
    }
    r["off_diagonal_dim4"] = off;
    r["off_diagonal_min_dim4"] = least;
    r["baseline_dim4"] = dim4("degenerate", in["baseline"]);
    return r;
}

Results check_t_family(const json& in) {
    Results r;
    for (const auto& t : in["t"]) {
        Engine e(preset("T", {num(1), cyc(t)}, K()));
        r["hilbert t=" + t.get<std::string>()] = e.hilbert(in["max_deg"]);
    }
    return r;
}

Results check_characters(const json& in) {
    const int N = in["max_deg"];
    const auto table = CharacterTable::h3(builtin_group("H3", K()));
    Engine t(pres("T", in["T_params"]));
    Engine poly(pres("poly", json::array()));
    Results r;
    r["T_equals_poly"] = same_characters(t, poly, table, in["classes"], N);
    const Matrix c = h3_c(K());
    const auto h = t.hilbert(N);
    bool central = true;
    for (int d = 0; d <= N; ++d)
        central = central && char_on_slice(c, t, d) == root_of_unity(K(), d) * num(static_cast<long>(h[d]));
    r["central_character"] = central;
    return r;
}

Results check_clifford(const json& in) {
    const int N = in["max_deg"];
    const auto table = CharacterTable::h3(builtin_group("H3", K()));
    Engine cl(pres("clifford", json::array()));
    Engine poly(pres("poly", json::array()));
    json all = json::array();
    for (const auto& name : table.class_names()) all.push_back(name);
    Results r;
    r["clifford_equals_poly"] = same_characters(cl, poly, table, all, N);

    // Degree-3 relations of T_{-1} together with I_2 V + V I_2.
    std::vector<NcPoly> span;
    std::vector<NcPoly> quad;
    const Presentation t = pres("T", in["T_params"]);
    for (const auto& rel : t.relations())
        (rel.degree() == 2 ? quad : span).push_back(rel);
    for (const auto& q : quad)
        for (Letter g = 0; g < 3; ++g) {
            const NcPoly x = NcPoly::generator(K(), 3, g);
            span.push_back(q * x);
            span.push_back(x * q);
        }
    r["anticommutator_in_relations"] = in_span(P(in["element"]), span);
    return r;
}

Results check_central_g(const json& in) {
    Results r;
    for (const auto& t : in["T_t"]) {
        Engine e(preset("T", {num(1), cyc(t)}, K()));
        const auto c3 = e.center_basis(3);
        r["T contains g, t=" + t.get<std::string>()] = in_span(e.normal_form(central_g(CentralKind::T, cyc(t))), c3);
        if (t == in["dim_at"]) r["T center3 dim"] = c3.size();
    }
    for (const auto& t : in["zhang_t"]) {
        Engine e(preset("zhang", {cyc(t)}, K()));
        r["zhang contains g, t=" + t.get<std::string>()] =
            in_span(e.normal_form(central_g(CentralKind::Zhang, cyc(t))), e.center_basis(3));
    }
    return r;
}

Results check_m_family(const json& in) {
    Engine e(pres("M", in["M_params"]));
    Results r;
    r["hilbert"] = e.hilbert(in["max_deg"]);
    std::vector<NcPoly> nf;
    bool nonzero = true;
    for (const auto& w : in["words"]) {
        nf.push_back(e.normal_form(P(w)));
        nonzero = nonzero && !nf.back().is_zero();
    }
    r["printed words nonzero"] = nonzero;
    r["printed words rank"] = span_rank(nf);
    bool basis_ok = true;
    for (const auto& w : e.quotient_basis(4)) basis_ok = basis_ok && no_letter_on_both_parities(w);
    r["basis words pass parity test"] = basis_ok;
    bool lemma = true;
    for (int d = 1; d <= 5; ++d)
        for (std::uint64_t i = 0; i < ipow(3, d); ++i) {
            const Word w = slice_word(i, d, 3);
            const bool zero = e.normal_form(NcPoly::monomial(K(), 3, w)).is_zero();
            lemma = lemma && (zero == !no_letter_on_both_parities(w));
        }
    r["word is zero iff mixed parity, d<=5"] = lemma;
    return r;
}

Results check_regularity(const json& in) {
    Engine t(pres("T", in["T_params"]));
    Engine m(pres("M", in["M_params"]));
    const auto ht = t.hilbert(7), hm = m.hilbert(7);
    json diff = json::array();
    bool shifted = true;
    for (int d = 3; d <= 7; ++d) {
        const long v = long(ht[d]) - long(hm[d]);
        diff.push_back(v);
        shifted = shifted && v == long(ht[d - 3]);
    }
    return {{"dim T_d - dim M_d, d=3..7", diff}, {"equals dim T_(d-3)", shifted}};
}

Results check_m1_center(const json& in) {
    Engine e(pres("M", in["M_params"]), EngineOptions{12});
    Results r;
    json odd = json::array();
    for (int k : {1, 3, 5}) odd.push_back(e.center_basis(k).size());
    r["odd center dims k=1,3,5"] = odd;
    const auto c4 = e.center_basis(4);
    r["center4 dim"] = c4.size();
    bool has = true;
    for (const auto& s : in["fourth_powers"]) has = has && in_span(e.normal_form(poly_pow(P(s), 4)), c4);
    r["center4 contains fourth powers"] = has;
    NcPoly prod = NcPoly::one(K(), 3);
    for (const auto& f : in["product_factors"]) prod = prod * poly_pow(P(f), 2);
    r["product of squares vanishes"] = e.normal_form(prod).is_zero();
    return r;
}

Results check_t1_center(const json& in) {
    Engine e(pres("T", in["T_params"]), EngineOptions{12});
    const auto a = derive_center_scalar(e);
    Results r;
    r["center3 dim"] = a.center3_dim;
    r["center4 dim"] = a.center4_dim;
    r["u, v, w central"] = a.uvw_central;
    r["alpha nonzero"] = a.alpha.has_value() && !a.alpha->is_zero();
    r["alpha"] = a.alpha ? json(to_string(*a.alpha)) : json(nullptr);
    return r;
}

Results check_bad_case(const json& in) {
    Engine c(pres("badC", json::array()));
    Engine a(pres("badA", json::array()));
    const int N = in["max_deg"];
    Results r;
    r["annihilator"] = c.annihilator_check(P(in["g0"]));
    const auto h = a.hilbert(N);
    r["A hilbert"] = h;
    bool rec1 = true, rec2 = true;
    for (int n = 4; n <= N; ++n) rec1 = rec1 && long(h[n]) == 2 * long(h[n - 1]) - long(h[n - 3]);
    for (int n = 4; n <= N; ++n) rec2 = rec2 && h[n] == h[n - 1] + h[n - 2];
    r["a_n = 2a_(n-1) - a_(n-3), n>=4"] = rec1;
    r["a_n = a_(n-1) + a_(n-2), n>=4"] = rec2;
    std::vector<Int> coeffs(h.begin(), h.end());
    const auto g = guess_rational_series(coeffs);
    r["series"] = g ? json(to_string(*g)) : json(nullptr);
    r["C hilbert"] = c.hilbert(N);
    return r;
}

Results check_fibonacci(const json& in) {
    Engine a(pres("badA", json::array()));
    return {{"fixed dims", fixed_subalgebra_dims({h3_e1(K())}, a, in["max_deg"])}};
}

Results check_points(const json& in) {
    Results r;
    const CycNum t = cyc(in["t"]);
    for (const auto& ex : in["next_point"])
        r["next " + ex[0].get<std::string>() + " " + ex[1].get<std::string>()] =
            next_json(next_point(proj(ex[2]), proj(ex[3]), t));
    r["phi^2 [0:1:1]"] = point_json(phi_squared(proj(in["phi_point"]), t));
    r["phi^2 q0"] = point_json(phi_squared(ProjPoint::vertex(K(), 0), t));
    r["phi^2 [0:1:5], t=-1"] = point_json(phi_squared(proj(in["phi_point_trivial"]), num(-1)));
    const unsigned bound = in["bound"];
    for (const auto& s : in["orders"]) {
        const auto o = phi_order(cyc(s), bound);
        r["phi order t=" + s.get<std::string>()] = o ? json(*o) : json(nullptr);
    }
    return r;
}

struct BlowupSample {
    ParamPoint p;
    PluckerLine line;
};

// Half the samples take the plane spanned by the two fixed rows (so the
// equations hold), half a random plane.
std::vector<BlowupSample> blowup_samples(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(-4, 4);
    auto rand_cyc = [&] { return num(small(rng)) + num(small(rng)) * root_of_unity(K(), 1); };
    const CycNum w = root_of_unity(K(), 1), w2 = root_of_unity(K(), 2);
    std::vector<BlowupSample> out;
    while (int(out.size()) < count) {
        const CycNum a = rand_cyc(), b = rand_cyc();
        const ParamPoint p({a, b, num(1)});
        PluckerLine line = PluckerLine::through({num(1), a * w2, b * w}, {num(1), a * w, b * w2});
        if (out.size() % 2 == 0) {
            const CycNum s = rand_cyc();
            if (s.is_zero()) continue;
            line = {line.p01 * s, line.p20 * s, line.p12 * s};
        } else {
            line = PluckerLine::through({rand_cyc(), rand_cyc(), rand_cyc()}, {rand_cyc(), rand_cyc(), rand_cyc()});
        }
        if (line.is_zero()) continue;
        out.push_back({p, line});
    }
    return out;
}

json blowup_json(const BlowupResult& b) {
    return {{"rank", b.rank}, {"eqs_hold", b.eqs_hold}, {"plucker_relation", b.plucker_relation}};
}

PluckerLine line_from(const json& j) { return {cyc(j["p01"]), cyc(j["p20"]), cyc(j["p12"])}; }

Results check_blowup(const json& in) {
    Results r;
    bool contract = true, implied = true;
    long holding = 0;
    for (const auto& s : blowup_samples(in["seed"], in["samples"])) {
        const auto b = blowup_condition(s.p, s.line);
        contract = contract && ((b.rank <= 2) == b.eqs_hold);
        implied = implied && (!b.eqs_hold || b.plucker_relation);
        holding += b.eqs_hold;
    }
    r["rank <= 2 iff equations"] = contract;
    r["equations imply a*p20 = b*p01"] = implied;
    r["samples satisfying equations"] = holding;
    for (const auto& ex : in["examples"])
        r["example " + ex["name"].get<std::string>()] =
            blowup_json(blowup_condition(ParamPoint(cycs(ex["point"])), line_from(ex["line"])));
    return r;
}

Results check_preimage(const json& in) {
    const ParamPoint p(cycs(in["point"]));
    const auto res = central_preimage_line(p);
    Results r;
    r["preimage dim"] = res.preimage_dim;
    r["line contains p"] = res.line.has_value() && res.line->contains(p.coords());
    // Coordinates of the superpotential in the w1, w2, w3 basis.
    const NcPoly s = superpotential(p);
    const std::vector<CycNum> kernel{s.coeff(parse_word("xyz", names())), s.coeff(parse_word("xzy", names())),
                                     s.coeff(parse_word("xxx", names()))};
    r["line contains kernel direction"] = res.line.has_value() && res.line->contains(kernel);
    return r;
}

const std::map<int, CheckFn>& checks() {
    static const std::map<int, CheckFn> m{
        {1, check_hilbert},       {2, check_hilbert},       {3, check_intersections}, {4, check_isotypic},
        {5, check_diagonal},      {6, check_t_family},      {7, check_characters},    {8, check_clifford},
        {9, check_central_g},     {10, check_m_family},     {11, check_regularity},   {12, check_m1_center},
        {13, check_t1_center},    {14, check_bad_case},     {15, check_fibonacci},    {16, check_points},
        {17, check_blowup},       {18, check_preimage},
    };
    return m;
}

// ---- oracles for DERIVED values ----

// dim Z_3 as |B_3| minus the rank of the rows ([b, x], [b, y], [b, z]),
// b in B_3, built from polynomial normal forms.
json oracle_commutator_rank(const json& in) {
    Engine e(preset("T", {num(1), cyc(in["dim_at"])}, K()));
    const auto basis = e.quotient_basis(3);
    Echelon ech(K());
    const std::uint64_t width = ipow(3, 4);
    for (const auto& b : basis) {
        SparseVec row;
        const NcPoly bp = NcPoly::monomial(K(), 3, b);
        for (Letter g = 0; g < 3; ++g) {
            const NcPoly x = NcPoly::generator(K(), 3, g);
            const NcPoly c = e.normal_form(bp * x - x * bp);
            for (const auto& [w, coef] : c.terms()) row.emplace_back(g * width + slice_index(w, 3), coef);
        }
        canonicalize(row);
        ech.insert(row);
    }
    return basis.size() - ech.rank();
}

// α from the coefficient of the last word of NF(g^4), with u v w expanded
// before reduction.
json oracle_alpha(const json& in) {
    Engine e(pres("T", in["T_params"]), EngineOptions{12});
    auto sum = [](const char* a, const char* b) { return P(std::string(a) + " + " + b); };
    const NcPoly uvw = poly_pow(sum("y", "z"), 4) * poly_pow(sum("x", "z"), 4) * poly_pow(sum("x", "y"), 4);
    const NcPoly lhs = e.normal_form(uvw);
    const NcPoly rhs = e.normal_form(poly_pow(central_g(CentralKind::T, num(1)), 4));
    if (rhs.is_zero()) return nullptr;
    const auto& [word, coef] = *rhs.terms().rbegin();
    const CycNum alpha = lhs.coeff(word) / coef;
    if (!(lhs - rhs * alpha).is_zero()) return nullptr;
    return to_string(alpha);
}

// dim T_(d-3) of a ring with the polynomial Hilbert series: C(d-1, 2).
json oracle_binomial_shift(const json&) {
    json out = json::array();
    for (long d = 3; d <= 7; ++d) out.push_back((d - 1) * (d - 2) / 2);
    return out;
}

json oracle_a_plus_cubic(const json& in) {
    Engine a(pres("badA", json::array()));
    auto h = a.hilbert(in["max_deg"]);
    h[3] += 1;
    return h;
}

// [0:α:β] -> (through q0) -> [0:α:-tβ] written out in coordinates.
json oracle_twist(const json& in) {
    const auto c = cycs(in["phi_point"]);
    const CycNum t = cyc(in["t"]);
    return point_json(ProjPoint({c[0], c[1], -(t * c[2])}));
}

json oracle_no_power_one(const json& in) {
    const CycNum minus_t = -cyc(in["derived_order_t"]);
    const long bound = in["bound"];
    for (long k = 1; k <= bound; ++k)
        if (minus_t.pow(k).is_one()) return k;
    return nullptr;
}

// Rank of the 4x3 matrix assembled directly: the two fixed rows plus a
// basis of the plane {v : v . (p12, p20, p01) = 0}.
json oracle_direct_rank(const json& in, const std::string& example) {
    for (const auto& ex : in["examples"]) {
        if (ex["name"] != example) continue;
        const auto p = cycs(ex["point"]);
        const PluckerLine l = line_from(ex["line"]);
        const CycNum a = p[0] / p[2], b = p[1] / p[2];
        const CycNum w = root_of_unity(K(), 1), w2 = root_of_unity(K(), 2);
        const std::vector<CycNum> n{l.p12, l.p20, l.p01};
        std::vector<std::vector<CycNum>> rows{{num(1), a * w2, b * w}, {num(1), a * w, b * w2}};
        // Plane basis: e_i n_j - e_j n_i for pairs (i, j).
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::vector<CycNum> v(3, num(0));
                v[i] = n[j];
                v[j] = -n[i];
                rows.push_back(v);
            }
        Echelon ech(K());
        for (const auto& row : rows) {
            SparseVec s;
            for (int i = 0; i < 3; ++i)
                if (!row[i].is_zero()) s.emplace_back(Key(i), row[i]);
            ech.insert(s);
        }
        const CycNum e1 = l.p12 + a * w * l.p20 + b * w2 * l.p01;
        const CycNum e2 = l.p12 + a * w2 * l.p20 + b * w * l.p01;
        const bool eqs = e1.is_zero() && e2.is_zero();
        return {{"rank", ech.rank()}, {"eqs_hold", eqs}, {"plucker_relation", (a * l.p20 - b * l.p01).is_zero()}};
    }
    throw ConfigError("no blow-up example named " + example);
}

// dim A_4 = 81 minus the rank of every degree-4 multiple of a relation,
// taken in the free algebra without the engine.
json oracle_free_rank_dim4(const json& in) {
    json out = json::array();
    for (const auto& params : in["off_diagonal"]) {
        const Presentation p = pres("Tpair", params);
        std::vector<NcPoly> gens;
        std::vector<NcPoly> words1, words2;
        for (Letter g = 0; g < 3; ++g) words1.push_back(NcPoly::generator(K(), 3, g));
        for (const auto& a : words1)
            for (const auto& b : words1) words2.push_back(a * b);
        for (const auto& r : p.relations()) {
            if (r.degree() == 2) {
                for (const auto& w : words2) {
                    gens.push_back(r * w);
                    gens.push_back(w * r);
                }
                for (const auto& a : words1)
                    for (const auto& b : words1) gens.push_back(a * r * b);
            } else {
                for (const auto& a : words1) {
                    gens.push_back(r * a);
                    gens.push_back(a * r);
                }
            }
        }
        out.push_back(81 - span_rank(gens));
    }
    return out;
}

json run_oracle(const std::string& name, const json& in) {
    if (name == "free_rank_dim4") return oracle_free_rank_dim4(in);
    if (name == "commutator_rank") return oracle_commutator_rank(in);
    if (name == "alpha_last_term") return oracle_alpha(in);
    if (name == "binomial_shift") return oracle_binomial_shift(in);
    if (name == "a_plus_cubic") return oracle_a_plus_cubic(in);
    if (name == "twist_formula") return oracle_twist(in);
    if (name == "no_power_one") return oracle_no_power_one(in);
    if (name.rfind("direct_rank:", 0) == 0) return oracle_direct_rank(in, name.substr(12));
    throw ConfigError("unknown oracle " + name);
}

bool matches(const json& expected, const json& computed) {
    if (expected.is_object() && expected.contains("greater_than"))
        return computed.is_number() && computed.get<double>() > expected["greater_than"].get<double>();
    return expected == computed;
}

CheckReport run_one(const json& entry) {
    CheckReport r;
    r.id = entry.at("id");
    r.title = entry.at("title");
    r.suite = entry.at("suite");
    r.budget_seconds = entry.at("budget_seconds");
    const auto start = std::chrono::steady_clock::now();
    try {
        const json& in = entry.at("inputs");
        const Results computed = checks().at(r.id)(in);
        for (const auto& it : entry.at("items")) {
            VerifyItem v;
            v.name = it.at("name");
            v.tag = it.at("tag");
            v.source = it.value("source", "");
            v.expected = it.at("expected");
            if (!computed.contains(v.name)) throw ConsistencyError("check did not compute item '" + v.name + "'");
            v.computed = computed.at(v.name);
            v.pass = matches(v.expected, v.computed);
            if (v.tag == "DERIVED") {
                if (!it.contains("oracle")) throw ConfigError("DERIVED item '" + v.name + "' names no oracle");
                v.oracle = run_oracle(it["oracle"], in);
                v.pass = v.pass && matches(v.expected, v.oracle);
            }
            r.items.push_back(std::move(v));
        }
        r.pass = !r.items.empty() &&
                 std::all_of(r.items.begin(), r.items.end(), [](const VerifyItem& v) { return v.pass; });
    } catch (const std::exception& e) {
        r.error = e.what();
        r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

std::filesystem::path default_corpus_path() { return std::filesystem::path(SKL_DATA_DIR) / "verify_corpus.json"; }

json load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (doc.value("format", "") != "skl-verify-corpus" || doc.value("version", 0) != 1)
        throw ParseError(path.string() + ": not a version 1 verification corpus");
    return doc;
}

std::vector<CheckReport> run_verify(const json& corpus, std::string_view suite, const std::vector<int>& only,
                                    unsigned threads) {
    if (suite != "quick" && suite != "slow" && suite != "all") throw ConfigError("unknown suite " + std::string(suite));
    std::vector<const json*> todo;
    for (const auto& entry : corpus.at("checks")) {
        const int id = entry.at("id");
        if (!checks().count(id)) throw ConfigError("corpus names unknown check " + std::to_string(id));
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        if (only.empty() && suite != "all" && entry.at("suite") != suite) continue;
        todo.push_back(&entry);
    }
    for (int id : only)
        if (std::none_of(todo.begin(), todo.end(), [&](const json* e) { return (*e)["id"] == id; }))
            throw ConfigError("no check with id " + std::to_string(id));

    std::vector<CheckReport> out(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();) out[i] = run_one(*todo[i]);
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, todo.size()));
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return out;
}

json to_json(const CheckReport& r) {
    json items = json::array();
    for (const auto& v : r.items) {
        json j{{"name", v.name}, {"tag", v.tag}, {"source", v.source}, {"expected", v.expected},
               {"computed", v.computed}, {"pass", v.pass}};
        if (!v.oracle.is_null()) j["oracle_value"] = v.oracle;
        items.push_back(j);
    }
    json j{{"id", r.id}, {"title", r.title}, {"suite", r.suite}, {"pass", r.pass}, {"seconds", r.seconds},
           {"budget_seconds", r.budget_seconds}, {"items", items}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string to_text(const CheckReport& r) {
    std::ostringstream os;
    char head[64];
    std::snprintf(head, sizeof head, "%s %02d ", r.pass ? "PASS" : "FAIL", r.id);
    char tail[64];
    std::snprintf(tail, sizeof tail, " (%.2f s)", r.seconds);
    os << head << r.title << tail << "\n";
    if (!r.error.empty()) os << "    error: " << r.error << "\n";
    for (const auto& v : r.items) {
        os << "    " << (v.pass ? "ok   " : "FAIL ") << v.name << " [" << v.tag;
        if (!v.source.empty()) os << ", " << v.source;
        os << "] computed " << v.computed.dump();
        if (!v.pass) os << ", expected " << v.expected.dump();
        if (!v.oracle.is_null() && !v.pass) os << ", oracle " << v.oracle.dump();
        os << "\n";
    }
    return os.str();
}

}  // namespace skl
