#ifndef OMF_POLYGONS_HPP
#define OMF_POLYGONS_HPP

#include <string>
#include <vector>

#include "omf/rational.hpp"

namespace omf {

struct PolyPoint {
    long long x = 0;
    ValInf y;
};

/// One side of negative slope. A finite side of slope -h/e (h, e > 0 coprime)
/// has length d*e and height d*h; degree-0 sides are single vertices. A side
/// of slope -infinity stores its length and its finite end point, with the
/// conventions H = infinity, e = length, d = 1.
class PolySide {
public:
    static PolySide finite(const Rat& slope, long long s, const Rat& u, long long d);
    static PolySide vertex(long long s, const Rat& u) { return finite(Rat(-1), s, u, 0); }
    static PolySide infinite(long long len, long long s, const Rat& u);

    bool is_infinite() const { return inf_; }
    Rat slope() const;
    const Int& h() const { return h_; }
    const Int& e() const { return e_; }
    long long degree() const { return d_; }
    long long length() const { return inf_ ? len_ : d_ * to_ll(e_); }
    ValInf height() const { return inf_ ? ValInf::infinity() : ValInf(Rat(to_int(d_) * h_)); }
    /// Initial (leftmost finite) point.
    long long start_x() const { return s_; }
    Rat start_y() const { return u_; }
    long long end_x() const { return inf_ ? s_ : s_ + length(); }
    Rat end_y() const;

    bool operator==(const PolySide& o) const;

private:
    bool inf_ = false;
    Int h_{1}, e_{1};
    long long d_ = 0;
    long long len_ = 0;
    long long s_ = 0;
    Rat u_;
};

/// A principal polygon: an optional side of slope -infinity of length
/// inf_length, then finite sides of strictly increasing negative slope
/// starting at the finite start point. A single point is the degenerate
/// polygon with no sides.
class PrincipalPolygon {
public:
    PrincipalPolygon() = default;
    static PrincipalPolygon point(long long x, const Rat& y);

    long long inf_length() const { return inf_len_; }
    long long start_x() const { return sx_; } // start of the finite part
    const Rat& start_y() const { return sy_; }
    long long begin_x() const { return sx_ - inf_len_; } // i_0
    long long end_x() const;
    Rat end_y() const;

    /// Finite sides, strictly increasing slope. Empty for a point polygon.
    const std::vector<PolySide>& sides() const { return sides_; }
    bool is_point() const { return inf_len_ == 0 && sides_.empty(); }

    /// Total length including the infinite side.
    long long length() const;
    /// Total height of the finite part.
    Rat finite_height() const { return sy_ - end_y(); }
    /// Ordinate at an integer abscissa; infinity left of the finite start.
    ValInf y_at(long long x) const;
    std::vector<std::pair<long long, Rat>> vertices() const;

    bool operator==(const PrincipalPolygon& o) const;

    // construction helpers used by envelope/add
    void set_start(long long x, const Rat& y) { sx_ = x; sy_ = y; }
    void set_inf_length(long long l) { inf_len_ = l; }
    void append_side(const Rat& slope, long long d);

private:
    long long inf_len_ = 0;
    long long sx_ = 0;
    Rat sy_;
    std::vector<PolySide> sides_; // geometric positions kept consistent
};

/// Principal part of the lower convex envelope of the given points: the sides
/// of negative slope only, preceded by a side of slope -infinity of length
/// equal to the smallest abscissa carrying a finite ordinate. Exact rational
/// geometry. Abscissas must be distinct and at least one ordinate finite.
PrincipalPolygon principal_envelope(const std::vector<PolyPoint>& points);

/// Semigroup sum: multiset union of sides merged by slope, start point the
/// vector sum of the finite start points, infinite lengths added.
PrincipalPolygon polygon_add(const PrincipalPolygon& N, const PrincipalPolygon& M);

/// Intersection of N with its supporting line of slope lambda: a full side
/// when lambda matches, otherwise a single vertex.
PolySide lambda_component(const PrincipalPolygon& N, const Rat& lambda);

/// ind(N) = sum of per-side (EH - E - H + d)/2 plus the cross terms
/// sum_{i<j} E_i H_j; a side of slope -infinity contributes its length times
/// the height of the finite part. Requires integer vertex ordinates; the
/// closed formula is cross-checked against the lattice-point count.
Int polygon_index(const PrincipalPolygon& N);

/// Lattice points strictly below the finite part, above the horizontal line
/// through the last vertex, strictly right of the first finite vertex --
/// plus the infinite-side rectangle. Test oracle for polygon_index.
Int polygon_index_lattice_count(const PrincipalPolygon& N);

std::string polygon_to_json(const PrincipalPolygon& N);
std::string polygon_to_svg(const PrincipalPolygon& N, const std::vector<PolyPoint>& marked);
std::string polygon_to_ascii(const PrincipalPolygon& N, const std::vector<PolyPoint>& marked);

} // namespace omf

#endif
