#include "szf/staircase.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace szf {

namespace {

constexpr long kMaxExponent = 1'000'000'000L;  // keeps cross products inside __int128

__int128 cross(ExponentVector u, ExponentVector v) {
    return static_cast<__int128>(u.a) * v.b - static_cast<__int128>(u.b) * v.a;
}

}  // namespace

MonomialIdeal2D::MonomialIdeal2D(std::vector<ExponentVector> generators) {
    if (generators.empty()) throw std::invalid_argument("empty generating set");
    for (auto g : generators) {
        if (g.a < 0 || g.b < 0) throw std::invalid_argument("exponents must be nonnegative");
        if (g.a > kMaxExponent || g.b > kMaxExponent)
            throw std::invalid_argument("exponent out of range");
        if (g.a == 0 && g.b == 0) throw std::invalid_argument("unit ideal: generator (0,0)");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    for (auto g : generators) {
        bool dominated = false;
        for (auto h : generators)
            if (h != g && h.a <= g.a && h.b <= g.b) {
                dominated = true;
                break;
            }
        (dominated ? dominated_ : generators_).push_back(g);
    }
    // decreasing a; minimality makes b strictly increasing along the list
    std::sort(generators_.begin(), generators_.end(),
              [](ExponentVector x, ExponentVector y) { return x.a > y.a; });
}

IntegralClosureReduction integral_closure_reduce(const MonomialIdeal2D& ideal) {
    const auto& gens = ideal.generators();
    std::vector<ExponentVector> chain;
    for (auto g : gens) {
        // Monotone chain: drop the middle point unless the boundary turns
        // strictly clockwise there. Edge-interior points (cross = 0) are
        // redundant for the triangulation and land in `discarded`.
        while (chain.size() >= 2) {
            ExponentVector u = chain[chain.size() - 2], v = chain.back();
            if (cross({v.a - u.a, v.b - u.b}, {g.a - v.a, g.b - v.b}) < 0) break;
            chain.pop_back();
        }
        chain.push_back(g);
    }

    std::vector<ExponentVector> discarded = ideal.dominated();
    for (auto g : gens)
        if (std::find(chain.begin(), chain.end(), g) == chain.end()) discarded.push_back(g);
    std::sort(discarded.begin(), discarded.end());

    NewtonBoundary2D boundary;
    boundary.open_x = chain.front().b > 0;
    boundary.open_y = chain.back().a > 0;
    boundary.vertices = std::move(chain);
    return {std::move(boundary), std::move(discarded)};
}

std::vector<Triangle> triangulate(const NewtonBoundary2D& boundary) {
    std::vector<Triangle> tris;
    if (boundary.open_x) tris.push_back(InfiniteXTriangle{boundary.vertices.front()});
    for (std::size_t i = 0; i + 1 < boundary.vertices.size(); ++i)
        tris.push_back(FiniteTriangle{boundary.vertices[i], boundary.vertices[i + 1]});
    if (boundary.open_y) tris.push_back(InfiniteYTriangle{boundary.vertices.back()});
    return tris;
}

RationalSeries triangle_contribution(const Triangle& tri) {
    if (const auto* f = std::get_if<FiniteTriangle>(&tri)) {
        __int128 vol = cross(f->v, f->w);
        if (vol < 0) vol = -vol;
        if (vol == 0) return {IntPoly{}, LinearFactorProduct{}};
        // |cross| <= 2 * kMaxExponent^2 < 2^63, so the narrowing is exact
        return {IntPoly::monomial(BigInt(static_cast<long>(vol)), 2),
                LinearFactorProduct({f->v.a + f->v.b, f->w.a + f->w.b})};
    }
    if (const auto* x = std::get_if<InfiniteXTriangle>(&tri))
        return {IntPoly::monomial(x->v.b, 1), LinearFactorProduct({x->v.a + x->v.b})};
    const auto& y = std::get<InfiniteYTriangle>(tri);
    return {IntPoly::monomial(y.v.a, 1), LinearFactorProduct({y.v.a + y.v.b})};
}

SegreZeta monomial2d_zeta(const MonomialIdeal2D& ideal) {
    auto reduction = integral_closure_reduce(ideal);
    RationalSeries total{IntPoly{}, LinearFactorProduct{}};
    for (const Triangle& tri : triangulate(reduction.boundary))
        total = rat_add(total, triangle_contribution(tri));
    return SegreZeta::from_series(std::move(total));
}

}  // namespace szf
