#pragma once

// Named presentations of the Sklyanin family and its degenerate quotients,
// superpotentials, central elements, and the linear-algebra side of the
// parameter-space statements (non-regular points, blow-up condition,
// central preimage line).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skl/graded_engine.hpp"
#include "skl/group_rep.hpp"

namespace skl {

// Projective point; the first nonzero coordinate is 1.
class ParamPoint {
   public:
    explicit ParamPoint(std::vector<CycNum> coords);
    const std::vector<CycNum>& coords() const noexcept { return c_; }
    const CycNum& operator[](std::size_t i) const { return c_.at(i); }
    std::size_t size() const noexcept { return c_.size(); }
    bool operator==(const ParamPoint&) const = default;

   private:
    std::vector<CycNum> c_;
};
std::string to_string(const ParamPoint& p);

// Plücker coordinates of a 2-plane spanned by (A,B,C), (D,E,F):
// p01 = AE-BD, p20 = CD-AF, p12 = BF-CE. A vector (a,b,c) lies in the
// plane iff a*p12 + b*p20 + c*p01 = 0.
struct PluckerLine {
    CycNum p01, p20, p12;
    static PluckerLine through(const std::vector<CycNum>& u, const std::vector<CycNum>& v);
    bool contains(const std::vector<CycNum>& point) const;
    bool is_zero() const { return p01.is_zero() && p20.is_zero() && p12.is_zero(); }
};

// Preset names with their parameter counts; params are coefficients.
//   poly                    commutative polynomial ring
//   sklyanin a,b,c          eq. (1) relations
//   degenerate a,b,c        sklyanin at a coordinate vertex only
//   T A,B                   S_[0:0:1] plus (v1)_t, (v2)_t, t = B/A
//   Tpair A1,B1,A2,B2       S_[0:0:1] plus v1(A1,B1), v2(A2,B2)
//   M A,B                   x^2, y^2, z^2, A zxy + B yxz and rotations
//   clifford                x^2, y^2, z^2 and [{x_i,x_i+1},x_i+2]
//   badC                    T at [1:0]
//   badA                    x^2, y^2, z^2, xyz, yzx, zxy
//   zhang t                 S_[1:0:0] plus the twisted cubics
Presentation preset(std::string_view name, const std::vector<CycNum>& params, const FieldCtx& ctx);
Presentation preset(std::string_view name, const std::vector<std::string>& params, const FieldCtx& ctx);
std::vector<std::string> preset_names();

// a(zxy+xyz+yzx) + b(yxz+zyx+xzy) + c(x^3+y^3+z^3).
NcPoly superpotential(const ParamPoint& p);

enum class CentralKind { T, Zhang };
// T:     (zxy+xyz+yzx) + t(yxz+zyx+xzy)
// Zhang: (zyx+xzy+yxz) + t(y^3+z^3+x^3)
NcPoly central_g(CentralKind kind, const CycNum& t);

// [0:0:1], [0:1:0], [1:0:0] and the nine [1:w^i:w^j].
std::vector<ParamPoint> nonregular_points(const FieldCtx& ctx);
bool is_nonregular(const ParamPoint& p);

struct BlowupResult {
    std::size_t rank;
    bool eqs_hold;
    bool plucker_relation;
};
// Rank of the 4x3 matrix with rows (c, a w^2, b w), (c, a w, b w^2) and two
// rows spanning the plane of `line`; p must have c != 0 (scaled to c = 1).
BlowupResult blowup_condition(const ParamPoint& p, const PluckerLine& line);

// W⊗V, V⊗W and their intersection for the degree-2 relations W of a
// presentation.
struct Overlap {
    SubspaceDims dims;
    std::vector<NcPoly> basis;
};
Overlap relation_overlap(const Presentation& p);

// Invariant cubics w1 = zxy+xyz+yzx, w2 = yxz+zyx+xzy, w3 = x^3+y^3+z^3
// mapping into the span of the H3-invariant central cubic c3 of sklyanin(p).
struct PreimageLine {
    NcPoly central;               // c3, as a normal form
    std::size_t preimage_dim;     // dim of {(α,β,γ) : α w1 + β w2 + γ w3 ∈ ℂ c3}
    std::optional<PluckerLine> line;  // present when preimage_dim == 2
};
PreimageLine central_preimage_line(const ParamPoint& p);

// uvw = α g^4 in degree 12 of T_1 with u = (y+z)^4, v = (x+z)^4, w = (x+y)^4.
struct AlphaResult {
    std::size_t center3_dim;
    std::size_t center4_dim;
    bool uvw_central;                 // u, v, w lie in center_basis(4)
    std::optional<CycNum> alpha;      // present iff NF(uvw - α g^4) = 0 has a solution
};
AlphaResult derive_center_scalar(Engine& t1);

}  // namespace skl
