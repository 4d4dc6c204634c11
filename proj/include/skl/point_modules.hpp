#pragma once

// Point sequences on the coordinate triangle V(XYZ) ⊂ P² and the shift map.
// Line j is {coordinate j = 0}; vertex q_j has only coordinate j nonzero,
// so q_j is the vertex off line j.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skl/cyclotomic.hpp"

namespace skl {

class ProjPoint {
   public:
    // Normalizes so the first nonzero coordinate is 1. Throws InputError for
    // the zero vector or a point off the triangle.
    explicit ProjPoint(std::vector<CycNum> coords);
    static ProjPoint vertex(const FieldCtx& ctx, int j);

    const std::vector<CycNum>& coords() const noexcept { return c_; }
    const CycNum& operator[](int i) const { return c_.at(i); }
    bool on_line(int j) const { return c_.at(j).is_zero(); }
    // j when this is q_j, otherwise -1.
    int vertex_index() const;
    bool is_vertex() const { return vertex_index() >= 0; }
    // The unique line through a non-vertex point.
    int line() const;
    bool operator==(const ProjPoint&) const = default;

   private:
    std::vector<CycNum> c_;
};
std::string to_string(const ProjPoint& p);

// Returned instead of a point when the successor may be any point of a line.
struct FreeChoice {
    int line;
    bool operator==(const FreeChoice&) const = default;
};
using NextPoint = std::variant<ProjPoint, FreeChoice>;

// Successor of (prev, cur) in a point sequence. With t (T_t, t != 0) the
// choice after a vertex is forced; without t (the degenerate algebra) it is
// a free choice on the line opposite the vertex.
NextPoint next_point(const ProjPoint& prev, const ProjPoint& cur, const std::optional<CycNum>& t);

// φ² on the triangle: [0:α:β] -> [0:α:-tβ] on line 0 and the rotated
// formulas on lines 1, 2; vertices are fixed.
ProjPoint phi_squared(const ProjPoint& p, const CycNum& t);

// Least k <= bound with (φ²)^k = id on sample points of every line.
std::optional<unsigned> phi_order(const CycNum& t, unsigned bound);

// (a, b, c) -> (c, a, b): carries line 0 to line 1 and line 1 to line 2.
ProjPoint rotate(const ProjPoint& p);

// Points p_0 = prev, p_1 = cur, p_2, ... up to `steps` successors; stops
// early at a free choice, which is then reported.
struct Orbit {
    std::vector<ProjPoint> points;
    std::optional<FreeChoice> stopped_at;
};
Orbit orbit(const ProjPoint& prev, const ProjPoint& cur, const std::optional<CycNum>& t, unsigned steps);

}  // namespace skl
