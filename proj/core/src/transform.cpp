#include "hironaka/transform.hpp"

#include <algorithm>
#include <map>

#include "hironaka/expr.hpp"

namespace hironaka {

std::string Direction::to_string() const {
    if (chart == Chart::y_chart) return "0:1:0";
    return "1:" + c.to_string() + ":0";
}

CurveCenter::CurveCenter(Poly generator) : generator_(std::move(generator)) {
    if (generator_.is_zero() || generator_.involves(Var::Z)) {
        throw precondition_error("curve center: generator must be a nonzero polynomial in X, Y");
    }
    if (generator_.order() != 1) {
        throw precondition_error("curve center: generator must define a smooth curve "
                                 "through the origin (order 1)");
    }
    const Scalar& lead = generator_.terms().rbegin()->second;
    if (!lead.is_one()) {
        generator_ = lead.inverse() * generator_;
    }
}

namespace {

TransformResult package(Poly result, unsigned n) {
    unsigned new_order = result.order();
    bool dropped = new_order < n;
    TransformResult out{std::move(result), new_order, dropped, std::nullopt};
    if (!dropped) out.surface = WeierstrassSurface::from_poly(out.result);
    return out;
}

} // namespace

TransformResult quadratic(const WeierstrassSurface& s, const Direction& d) {
    const FieldSpec& f = s.field();
    unsigned n = s.multiplicity();
    Poly x = Poly::variable(f, Var::X);
    Poly y = Poly::variable(f, Var::Y);
    Poly z = Poly::variable(f, Var::Z);

    Poly total(f);
    Var exceptional = Var::X;
    if (d.chart == Direction::Chart::x_chart) {
        if (d.c.field() != f) {
            throw precondition_error("quadratic: direction over a different field");
        }
        total = substitute(s.equation(),
                           {{Var::Y, x * (y + Poly::constant(d.c))}, {Var::Z, x * z}});
    } else {
        total = substitute(s.equation(), {{Var::X, x * y}, {Var::Z, y * z}});
        exceptional = Var::Y;
    }

    Poly reduced(f);
    try {
        reduced = divide_exact_power(total, exceptional, n);
    } catch (const precondition_error&) {
        throw invariant_error("quadratic: total transform not divisible by the n-th power "
                              "of the exceptional coordinate");
    }
    return package(std::move(reduced), n);
}

bool is_permitted(const WeierstrassSurface& s, const CurveCenter& c) {
    if (c.generator().field() != s.field()) {
        throw precondition_error("is_permitted: curve over a different field");
    }
    unsigned n = s.multiplicity();
    for (unsigned k = 0; k < n; ++k) {
        if (!divides_power(c.generator(), n - k, s.z_coefficient(k))) return false;
    }
    return true;
}

TransformResult monoidal(const WeierstrassSurface& s, const CurveCenter& c) {
    if (!is_permitted(s, c)) {
        throw precondition_error("center (Z," + print_canonical(c.generator()) +
                                 ") is not permitted");
    }
    unsigned n = s.multiplicity();
    const FieldSpec& f = s.field();

    Exponent zn;
    zn.set(Var::Z, n);
    Poly result = Poly::monomial(Scalar::one(f), zn);
    for (unsigned k = 0; k < n; ++k) {
        Poly ak = s.z_coefficient(k);
        for (unsigned i = 0; i < n - k; ++i) {
            if (ak.is_zero()) break;
            ak = *divide_exact(ak, c.generator());
        }
        Exponent zk;
        zk.set(Var::Z, k);
        result = result + ak * Poly::monomial(Scalar::one(f), zk);
    }
    return package(std::move(result), n);
}

std::vector<Direction> near_points(const WeierstrassSurface& s) {
    if (!is_wt(s) && has_contractible_vertex(s)) {
        throw precondition_error("near_points: surface must be WT or have a "
                                 "contraction-minimal polygon");
    }

    const FieldSpec& f = s.field();
    unsigned n = s.multiplicity();
    Poly x = Poly::variable(f, Var::X);
    Poly y = Poly::variable(f, Var::Y);
    Poly z = Poly::variable(f, Var::Z);

    Poly strict = divide_exact_power(
        substitute(s.equation(), {{Var::Y, x * y}, {Var::Z, x * z}}), Var::X, n);

    // Group the strict transform as sum over (i, k) of X^i Z^k g_{ik}(Y);
    // the point (1 : c : 0) keeps multiplicity n exactly when every nonzero
    // g_{ik} with i + k < n vanishes at c to order at least n - i - k.
    std::map<std::pair<unsigned, unsigned>, std::vector<Scalar>> groups;
    for (const auto& [e, coef] : strict.terms()) {
        if (e.x + e.z >= n) continue;
        auto& g = groups[{e.x, e.z}];
        if (g.size() <= e.y) g.resize(e.y + 1, Scalar::zero(f));
        g[e.y] = coef;
    }

    if (groups.empty()) {
        throw degenerate_line_error("near_points: every point of the exceptional line "
                                    "keeps the multiplicity");
    }

    const std::vector<Scalar>* seed = nullptr;
    for (const auto& [ik, g] : groups) {
        if (!seed || g.size() < seed->size()) seed = &g;
    }

    std::vector<Direction> out;
    for (const Scalar& c : rational_roots(*seed)) {
        bool near = true;
        for (const auto& [ik, g] : groups) {
            unsigned required = n - ik.first - ik.second;
            if (root_multiplicity(g, c) < required) {
                near = false;
                break;
            }
        }
        if (near) out.push_back(Direction::x_chart(c));
    }

    for (const Direction& d : out) {
        if (quadratic(s, d).dropped) {
            throw invariant_error("near_points: direction " + d.to_string() +
                                  " fails to preserve the multiplicity");
        }
    }

    if (!quadratic(s, Direction::y_chart(f)).dropped) {
        out.push_back(Direction::y_chart(f));
    }
    return out;
}

namespace {

// Candidates c for a linear factor X - cY of a (kept = Y), or Y - cX
// (kept = X): substitute the other variable by c * kept, strip the content
// in kept, and take the rational roots of the lowest surviving row. Any
// actual linear factor makes the whole specialization vanish, so its c is
// among these roots; false candidates are weeded out by is_permitted.
std::vector<Scalar> specialization_roots(const Poly& a, Var kept) {
    const FieldSpec& f = a.field();
    Var other = kept == Var::Y ? Var::X : Var::Y;
    std::map<unsigned, std::vector<Scalar>> rows;
    for (const auto& [e, coef] : a.terms()) {
        unsigned kp = e.get(kept) + e.get(other);
        unsigned cp = e.get(other);
        auto& row = rows[kp];
        if (row.size() <= cp) row.resize(cp + 1, Scalar::zero(f));
        row[cp] = row[cp] + coef;
    }
    for (const auto& [kp, row] : rows) {
        for (const Scalar& v : row) {
            if (!v.is_zero()) return rational_roots(row);
        }
    }
    return {};
}

} // namespace

std::vector<CurveCenter> find_permitted_curves(const WeierstrassSurface& s) {
    const FieldSpec& f = s.field();
    unsigned n = s.multiplicity();

    std::optional<Poly> source;
    for (unsigned k = 0; k < n; ++k) {
        Poly ak = s.z_coefficient(k);
        if (ak.is_zero()) continue;
        if (!source || ak.order() < source->order()) source = std::move(ak);
    }

    std::vector<Poly> candidates;
    candidates.push_back(Poly::variable(f, Var::X));
    candidates.push_back(Poly::variable(f, Var::Y));
    if (source) {
        Poly x = Poly::variable(f, Var::X);
        Poly y = Poly::variable(f, Var::Y);
        for (const Scalar& c : specialization_roots(*source, Var::Y)) {
            candidates.push_back(x - Poly::constant(c) * y);
        }
        for (const Scalar& c : specialization_roots(*source, Var::X)) {
            candidates.push_back(y - Poly::constant(c) * x);
        }
    }

    std::vector<CurveCenter> out;
    for (const Poly& g : candidates) {
        CurveCenter center(g);
        if (std::find(out.begin(), out.end(), center) != out.end()) continue;
        if (is_permitted(s, center)) out.push_back(center);
    }
    std::sort(out.begin(), out.end(), [](const CurveCenter& a, const CurveCenter& b) {
        return print_canonical(a.generator()) < print_canonical(b.generator());
    });
    return out;
}

} // namespace hironaka
