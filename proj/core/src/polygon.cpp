#include "hironaka/polygon.hpp"

#include <algorithm>

namespace hironaka {

namespace {

Rational cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

} // namespace

NewtonPolygon NewtonPolygon::hull(std::vector<PolygonPoint> pts) {
    NewtonPolygon out;
    if (pts.empty()) return out;

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // p dominates q when p <= q componentwise; dominated points add nothing.
    std::vector<PolygonPoint> kept;
    for (const PolygonPoint& p : pts) {
        bool dominated = false;
        for (const PolygonPoint& q : pts) {
            if (q == p) continue;
            if (q.x <= p.x && q.y <= p.y) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(p);
    }

    // kept is sorted by x ascending; with dominated points gone, y is
    // strictly decreasing. Keep only lower-left turns.
    std::vector<PolygonPoint>& chain = out.vertices_;
    for (const PolygonPoint& p : kept) {
        while (chain.size() >= 2 &&
               cmp(cross(chain[chain.size() - 2], chain[chain.size() - 1], p), 0) <= 0) {
            chain.pop_back();
        }
        chain.push_back(p);
    }
    return out;
}

bool NewtonPolygon::contains(const PolygonPoint& p) const {
    if (vertices_.empty()) return false;
    if (cmp(p.x, vertices_.front().x) < 0) return false;
    if (cmp(p.y, vertices_.back().y) < 0) return false;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        if (cmp(cross(vertices_[i], vertices_[i + 1], p), 0) < 0) return false;
    }
    return true;
}

bool NewtonPolygon::subset_of(const NewtonPolygon& other) const {
    for (const PolygonPoint& v : vertices_) {
        if (!other.contains(v)) return false;
    }
    return true;
}

std::vector<PolygonPoint> projected_points(const WeierstrassSurface& s) {
    unsigned n = s.multiplicity();
    std::vector<PolygonPoint> pts;
    for (const auto& [e, c] : s.equation().terms()) {
        if (e.z >= n) continue;
        unsigned d = n - e.z;
        Rational px(e.x, d);
        Rational py(e.y, d);
        px.canonicalize();
        py.canonicalize();
        pts.push_back(PolygonPoint{px, py});
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

NewtonPolygon newton_polygon(const WeierstrassSurface& s) {
    return NewtonPolygon::hull(projected_points(s));
}

std::vector<std::pair<Exponent, Scalar>> vertex_fiber(const WeierstrassSurface& s,
                                                      const PolygonPoint& v) {
    NewtonPolygon poly = newton_polygon(s);
    const auto& verts = poly.vertices();
    if (std::find(verts.begin(), verts.end(), v) == verts.end()) {
        throw precondition_error("vertex_fiber: the point is not a vertex of the polygon");
    }
    unsigned n = s.multiplicity();
    std::vector<std::pair<Exponent, Scalar>> out;
    for (const auto& [e, c] : s.equation().terms()) {
        if (e.z >= n) continue;
        unsigned d = n - e.z;
        Rational px(e.x, d);
        Rational py(e.y, d);
        px.canonicalize();
        py.canonicalize();
        if (px == v.x && py == v.y) out.emplace_back(e, c);
    }
    return out;
}

std::optional<Scalar> contractible(const WeierstrassSurface& s, const PolygonPoint& v) {
    if (v.x.get_den() != 1 || v.y.get_den() != 1) return std::nullopt;

    auto fiber = vertex_fiber(s, v);
    unsigned n = s.multiplicity();
    const FieldSpec& f = s.field();

    // Removing v with Z |-> Z + alpha X^a Y^b requires the fiber to be the
    // expansion of (Z - alpha X^a Y^b)^n, so each fiber term
    // c X^{a(n-k)} Y^{b(n-k)} Z^k pins alpha through
    // c = binom(n, k) (-alpha)^{n-k}. Both signs of every root are kept as
    // candidates; verification below discards anything that does not
    // actually remove the vertex.
    std::vector<Scalar> candidates;
    for (const auto& [e, c] : fiber) {
        unsigned d = n - e.z;
        Scalar bin = binomial_in_field(n, e.z, f);
        if (bin.is_zero()) continue;
        for (const Scalar& root : nth_roots(c / bin, d)) {
            candidates.push_back(root);
            candidates.push_back(-root);
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    NewtonPolygon before = newton_polygon(s);
    Exponent mono{static_cast<unsigned>(v.x.get_num().get_ui()),
                  static_cast<unsigned>(v.y.get_num().get_ui()), 0};
    for (const Scalar& alpha : candidates) {
        if (alpha.is_zero()) continue;
        WeierstrassSurface t = z_translate(s, Poly::monomial(alpha, mono));
        NewtonPolygon after = newton_polygon(t);
        if (after.subset_of(before) && !after.contains(v)) return alpha;
    }
    return std::nullopt;
}

bool has_contractible_vertex(const WeierstrassSurface& s) {
    NewtonPolygon poly = newton_polygon(s);
    for (const PolygonPoint& v : poly.vertices()) {
        if (contractible(s, v)) return true;
    }
    return false;
}

WeierstrassSurface minimize(const WeierstrassSurface& s, unsigned step_cap) {
    WeierstrassSurface cur = s;
    for (unsigned step = 0; step < step_cap; ++step) {
        bool contracted = false;
        NewtonPolygon poly = newton_polygon(cur);
        for (const PolygonPoint& v : poly.vertices()) {
            if (auto alpha = contractible(cur, v)) {
                Exponent mono{static_cast<unsigned>(v.x.get_num().get_ui()),
                              static_cast<unsigned>(v.y.get_num().get_ui()), 0};
                cur = z_translate(cur, Poly::monomial(*alpha, mono));
                contracted = true;
                break;
            }
        }
        if (!contracted) return cur;
    }
    throw step_cap_error("minimize: no stable polygon after " + std::to_string(step_cap) +
                         " contractions");
}

} // namespace hironaka
