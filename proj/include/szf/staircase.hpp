#pragma once

#include <variant>
#include <vector>

#include "szf/rational_series.hpp"
#include "szf/zeta.hpp"

namespace szf {

/// Exponent vector of a monomial x^a y^b.
struct ExponentVector {
    long a = 0;
    long b = 0;

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

/// Monomial ideal in two variables, held by its minimal generators.
/// Construction deduplicates, rejects the unit ideal, and drops generators
/// dominated componentwise by another (they are integral over it).
class MonomialIdeal2D {
public:
    explicit MonomialIdeal2D(std::vector<ExponentVector> generators);

    /// Minimal generators, sorted by decreasing first coordinate.
    const std::vector<ExponentVector>& generators() const { return generators_; }
    /// Generators dropped during normalization.
    const std::vector<ExponentVector>& dominated() const { return dominated_; }

private:
    std::vector<ExponentVector> generators_;
    std::vector<ExponentVector> dominated_;
};

/// Lower-left boundary of the convex hull of the union of translated positive
/// quadrants v + R^2_{>=0}. Vertices have strictly decreasing first and
/// strictly increasing second coordinates. The Newton region (the complement
/// of the hull in the positive quadrant) is unbounded in the x direction iff
/// no vertex meets the x-axis (open_x), and likewise for open_y.
struct NewtonBoundary2D {
    std::vector<ExponentVector> vertices;
    bool open_x = false;
    bool open_y = false;
};

struct FiniteTriangle {
    ExponentVector v, w;  // third vertex at the origin
};
struct InfiniteXTriangle {
    ExponentVector v;  // origin, v, and the x direction
};
struct InfiniteYTriangle {
    ExponentVector v;  // origin, v, and the y direction
};
using Triangle = std::variant<FiniteTriangle, InfiniteXTriangle, InfiniteYTriangle>;

struct IntegralClosureReduction {
    NewtonBoundary2D boundary;
    /// Generators inside the hull region or on a hull edge: integral over the
    /// vertex generators, so they do not affect the zeta.
    std::vector<ExponentVector> discarded;
};

/// Hull scan over the minimal generators; the zeta of the vertex set equals
/// the zeta of the full ideal.
IntegralClosureReduction integral_closure_reduce(const MonomialIdeal2D& ideal);

/// Fan from the origin: one finite triangle per consecutive vertex pair, plus
/// an infinite triangle per open axis direction. The triangles tile the
/// Newton region.
std::vector<Triangle> triangulate(const NewtonBoundary2D& boundary);

/// Per-triangle summand:
///   finite (0,0),(a1,a2),(b1,b2):  |a1 b2 - a2 b1| t^2 / ((1+(a1+a2)t)(1+(b1+b2)t))
///   infinite toward y through (a1,a2):  a1 t / (1+(a1+a2)t)
///   infinite toward x through (a1,a2):  a2 t / (1+(a1+a2)t)
/// A degenerate finite triangle contributes zero.
RationalSeries triangle_contribution(const Triangle& tri);

/// Zeta of the monomial ideal: reduce to the Newton boundary, triangulate,
/// sum the contributions over a common denominator, reduce.
SegreZeta monomial2d_zeta(const MonomialIdeal2D& ideal);

}  // namespace szf
