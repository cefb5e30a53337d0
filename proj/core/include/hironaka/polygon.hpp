#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hironaka/surface.hpp"

namespace hironaka {

/// A point of the first quadrant with exact rational coordinates.
struct PolygonPoint {
    Rational x;
    Rational y;

    friend bool operator==(const PolygonPoint& a, const PolygonPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const PolygonPoint& a, const PolygonPoint& b) { return !(a == b); }

    /// Lexicographic (x, then y); deterministic container order.
    friend bool operator<(const PolygonPoint& a, const PolygonPoint& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return a.y < b.y;
    }
};

/// Staircase convex region spanned by a finite point set P:
///
///   region = convex hull of the union of p + (first quadrant), p in P.
///
/// Stored as the vertex list of its boundary, x strictly increasing, y
/// strictly decreasing, convex; points interior to an edge are not
/// vertices. The empty list is the empty region (all coefficients zero).
class NewtonPolygon {
public:
    NewtonPolygon() = default;

    /// Computes the vertex list of the region spanned by pts: duplicates
    /// and dominated points are discarded, then the lower-left convex
    /// chain is extracted.
    static NewtonPolygon hull(std::vector<PolygonPoint> pts);

    bool empty() const { return vertices_.empty(); }
    const std::vector<PolygonPoint>& vertices() const { return vertices_; }

    /// Is p inside the region (boundary included)? Empty region: never.
    bool contains(const PolygonPoint& p) const;

    /// Region inclusion. The empty region is a subset of everything.
    bool subset_of(const NewtonPolygon& other) const;

    /// Identical vertex lists.
    friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const NewtonPolygon& a, const NewtonPolygon& b) { return !(a == b); }

private:
    std::vector<PolygonPoint> vertices_;
};

/// The projected support of the surface: a term c X^i Y^j Z^k of the
/// equation with k < n contributes (i/(n-k), j/(n-k)). Sorted, deduplicated.
std::vector<PolygonPoint> projected_points(const WeierstrassSurface& s);

/// hull(projected_points(s)).
NewtonPolygon newton_polygon(const WeierstrassSurface& s);

/// The terms of the equation projecting exactly onto the vertex v.
/// v must be a vertex of newton_polygon(s).
std::vector<std::pair<Exponent, Scalar>> vertex_fiber(const WeierstrassSurface& s,
                                                      const PolygonPoint& v);

/// If the vertex v = (a, b) can be removed by the coordinate change
/// Z |-> Z + alpha X^a Y^b, returns that alpha (the candidate list comes
/// from the vertex fiber equations; every candidate is verified by
/// recomputing the polygon). Otherwise nullopt. Vertices with non-integer
/// coordinates are never removable.
std::optional<Scalar> contractible(const WeierstrassSurface& s, const PolygonPoint& v);

bool has_contractible_vertex(const WeierstrassSurface& s);

/// Contracts vertices until none is removable, reaching the translation-
/// minimal polygon of the germ. Errors if step_cap contractions do not
/// suffice.
WeierstrassSurface minimize(const WeierstrassSurface& s, unsigned step_cap = 64);

} // namespace hironaka
