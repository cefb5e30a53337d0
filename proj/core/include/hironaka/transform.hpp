#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hironaka/polygon.hpp"

namespace hironaka {

/// A point of the exceptional line {Z = 0} of the blow-up of the origin,
/// in homogeneous coordinates: (1 : c : 0) lives in the X-chart, the point
/// at infinity (0 : 1 : 0) in the Y-chart.
struct Direction {
    enum class Chart { x_chart, y_chart };

    Chart chart;
    Scalar c; // X-chart only; ignored for (0 : 1 : 0)

    static Direction x_chart(Scalar value) {
        return Direction{Chart::x_chart, std::move(value)};
    }
    static Direction y_chart(const FieldSpec& f) {
        return Direction{Chart::y_chart, Scalar::zero(f)};
    }

    std::string to_string() const; // "1:c:0" or "0:1:0"

    friend bool operator==(const Direction& a, const Direction& b) {
        if (a.chart != b.chart) return false;
        return a.chart == Chart::y_chart || a.c == b.c;
    }
};

/// A curve center (Z, G) with G = G(X, Y) of order 1, i.e. a smooth curve
/// through the origin inside the plane of maximal contact. The generator is
/// normalized so its leading coefficient is 1 (scalar multiples present the
/// same curve).
class CurveCenter {
public:
    explicit CurveCenter(Poly generator);

    const Poly& generator() const { return generator_; }

    friend bool operator==(const CurveCenter& a, const CurveCenter& b) {
        return a.generator_ == b.generator_;
    }

private:
    Poly generator_;
};

/// Outcome of one blow-up. surface is present exactly when the multiplicity
/// survived, i.e. when the result is again a Weierstrass germ of the same
/// order.
struct TransformResult {
    Poly result;
    unsigned new_order;
    bool dropped;
    std::optional<WeierstrassSurface> surface;
};

/// Quadratic transform: blow up the origin and follow the direction d.
/// X-chart: X |-> X, Y |-> X(Y + c), Z |-> XZ; Y-chart: X |-> XY, Y |-> Y,
/// Z |-> YZ; in both charts the total transform is divided by the n-th
/// power of the exceptional coordinate.
TransformResult quadratic(const WeierstrassSurface& s, const Direction& d);

/// Is the curve (Z, G) permitted for s, i.e. does G^{n-k} divide a_k for
/// every k < n? (Equimultiplicity of s along the curve.)
bool is_permitted(const WeierstrassSurface& s, const CurveCenter& c);

/// Monoidal transform: blow up the permitted curve (Z, G), replacing each
/// a_k by a_k / G^{n-k}. Errors when the center is not permitted.
TransformResult monoidal(const WeierstrassSurface& s, const CurveCenter& c);

/// The points of the exceptional line of the blow-up of the origin at which
/// the multiplicity survives. Finite under the maximal-contact hypothesis,
/// so s must be WT or have a contraction-minimal polygon. X-chart points
/// first, c ascending, then (0 : 1 : 0) when it qualifies. Raises
/// degenerate_line_error when the whole line is equimultiple. Over Q only
/// rational points are found (the field is not closed); over F_p the scan
/// is exhaustive.
std::vector<Direction> near_points(const WeierstrassSurface& s);

/// All permitted curves (Z, G) with G linear in X, Y, found from the linear
/// factors of a lowest-order nonzero coefficient and verified exactly.
/// Sorted by printed form. Curves with non-linear smooth generators can be
/// tested directly through is_permitted.
std::vector<CurveCenter> find_permitted_curves(const WeierstrassSurface& s);

} // namespace hironaka
