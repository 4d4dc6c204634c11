#include "skl/point_modules.hpp"

namespace skl {

ProjPoint::ProjPoint(std::vector<CycNum> coords) : c_(std::move(coords)) {
    if (c_.size() != 3) throw InputError("triangle points have 3 coordinates");
    int lead = 0;
    while (lead < 3 && c_[lead].is_zero()) ++lead;
    if (lead == 3) throw InputError("projective point with all coordinates zero");
    const CycNum inv = c_[lead].inverse();
    for (auto& x : c_) x *= inv;
    if (!on_line(0) && !on_line(1) && !on_line(2)) throw InputError("point " + to_string(*this) + " is off V(XYZ)");
}

ProjPoint ProjPoint::vertex(const FieldCtx& ctx, int j) {
    std::vector<CycNum> c(3, CycNum(ctx));
    c.at(j) = CycNum(ctx, 1L);
    return ProjPoint(std::move(c));
}

int ProjPoint::vertex_index() const {
    int nonzero = -1, count = 0;
    for (int i = 0; i < 3; ++i)
        if (!c_[i].is_zero()) {
            nonzero = i;
            ++count;
        }
    return count == 1 ? nonzero : -1;
}

int ProjPoint::line() const {
    if (is_vertex()) throw InputError("vertex " + to_string(*this) + " lies on two lines");
    for (int j = 0; j < 3; ++j)
        if (on_line(j)) return j;
    throw InputError("point off V(XYZ)");
}

std::string to_string(const ProjPoint& p) {
    return "[" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + "]";
}

namespace {

// On line j the coordinate scaled[j] picks up -t:
// [0:α:β] -> [0:α:-tβ], [α:0:β] -> [-tα:0:β], [α:β:0] -> [α:-tβ:0].
ProjPoint twist(const ProjPoint& p, int j, const CycNum& t) {
    std::vector<CycNum> c = p.coords();
    static constexpr int scaled[3] = {2, 0, 1};
    c[scaled[j]] = -(t * c[scaled[j]]);
    return ProjPoint(std::move(c));
}

void check_t(const CycNum& t) {
    if (t.is_zero()) throw InputError("t must be nonzero");
}

}  // namespace

NextPoint next_point(const ProjPoint& prev, const ProjPoint& cur, const std::optional<CycNum>& t) {
    if (t) check_t(*t);
    const int v = cur.vertex_index();
    const FieldCtx& ctx = cur[0].ctx();
    if (v < 0) return ProjPoint::vertex(ctx, cur.line());
    if (!t) return FreeChoice{v};
    if (!prev.on_line(v) || prev == cur)
        throw InputError("(" + to_string(prev) + ", " + to_string(cur) + ") is not a legal consecutive pair");
    return twist(prev, v, *t);
}

ProjPoint phi_squared(const ProjPoint& p, const CycNum& t) {
    check_t(t);
    if (p.is_vertex()) return p;
    return twist(p, p.line(), t);
}

std::optional<unsigned> phi_order(const CycNum& t, unsigned bound) {
    check_t(t);
    const FieldCtx& ctx = t.ctx();
    const CycNum zero(ctx), one(ctx, 1L), two(ctx, 2L);
    std::vector<ProjPoint> samples;
    for (const auto& [u, v] : {std::pair{one, one}, std::pair{one, two}, std::pair{two, one}}) {
        samples.emplace_back(std::vector<CycNum>{zero, u, v});
        samples.emplace_back(std::vector<CycNum>{u, zero, v});
        samples.emplace_back(std::vector<CycNum>{u, v, zero});
    }
    std::vector<ProjPoint> cur = samples;
    for (unsigned k = 1; k <= bound; ++k) {
        for (auto& p : cur) p = phi_squared(p, t);
        if (cur == samples) return k;
    }
    return std::nullopt;
}

ProjPoint rotate(const ProjPoint& p) { return ProjPoint({p[2], p[0], p[1]}); }

Orbit orbit(const ProjPoint& prev, const ProjPoint& cur, const std::optional<CycNum>& t, unsigned steps) {
    Orbit o{{prev, cur}, std::nullopt};
    for (unsigned i = 0; i < steps; ++i) {
        const auto n = next_point(o.points[o.points.size() - 2], o.points.back(), t);
        if (const auto* f = std::get_if<FreeChoice>(&n)) {
            o.stopped_at = *f;
            break;
        }
        o.points.push_back(std::get<ProjPoint>(n));
    }
    return o;
}

}  // namespace skl
