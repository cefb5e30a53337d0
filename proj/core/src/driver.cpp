#include "hironaka/driver.hpp"

#include <algorithm>

namespace hironaka {

std::pair<StepCenter, TransformResult> lz_step(const WeierstrassSurface& s) {
    auto curves = find_permitted_curves(s);
    if (!curves.empty()) {
        return {curves.front(), monoidal(s, curves.front())};
    }

    Direction origin = Direction::x_chart(Scalar::zero(s.field()));
    try {
        auto near = near_points(s);
        if (!near.empty()) {
            return {near.front(), quadratic(s, near.front())};
        }
    } catch (const degenerate_line_error&) {
        // Every direction keeps the multiplicity; take the canonical one.
        return {origin, quadratic(s, origin)};
    }

    TransformResult r = quadratic(s, origin);
    if (!r.dropped) {
        throw invariant_error("lz_step: terminal blow-up failed to drop the multiplicity");
    }
    return {TerminalPoint{}, std::move(r)};
}

namespace {

Step make_step(unsigned index, StepCenter center, const TransformResult& r) {
    Step step{index, std::move(center), r.result, r.new_order, std::nullopt};
    if (!r.dropped) step.polygon_after = newton_polygon(*r.surface);
    return step;
}

} // namespace

ResolutionTrace run(const WeierstrassSurface& s, const Strategy& strategy,
                    unsigned max_steps) {
    if (max_steps == 0) {
        throw precondition_error("run: max_steps must be positive");
    }
    ResolutionTrace trace{s, {}, std::nullopt};
    WeierstrassSurface cur = s;

    if (strategy.kind == Strategy::Kind::scripted) {
        if (strategy.script.size() > max_steps) {
            throw step_cap_error("run: script length " + std::to_string(strategy.script.size()) +
                                 " exceeds the step cap " + std::to_string(max_steps));
        }
        unsigned index = 0;
        for (const auto& center : strategy.script) {
            ++index;
            TransformResult r = std::holds_alternative<Direction>(center)
                                    ? quadratic(cur, std::get<Direction>(center))
                                    : monoidal(cur, std::get<CurveCenter>(center));
            if (std::holds_alternative<Direction>(center) && r.dropped) {
                throw precondition_error("run: scripted direction " +
                                         std::get<Direction>(center).to_string() +
                                         " is not a near point");
            }
            StepCenter sc = std::holds_alternative<Direction>(center)
                                ? StepCenter(std::get<Direction>(center))
                                : StepCenter(std::get<CurveCenter>(center));
            trace.steps.push_back(make_step(index, sc, r));
            if (r.dropped) {
                trace.drop_step = index;
                break;
            }
            cur = *r.surface;
        }
        return trace;
    }

    for (unsigned index = 1;; ++index) {
        if (index > max_steps) {
            throw step_cap_error("run: no multiplicity drop within " +
                                 std::to_string(max_steps) + " steps");
        }
        auto [center, r] = lz_step(cur);
        trace.steps.push_back(make_step(index, center, r));
        if (r.dropped) {
            trace.drop_step = index;
            return trace;
        }
        cur = *r.surface;
    }
}

WeierstrassSurface counterexample_surface(unsigned m, const FieldSpec& f) {
    if (m < 19) {
        throw precondition_error("counterexample_surface: m must be at least 19");
    }
    if (f.characteristic() == 3) {
        throw precondition_error("counterexample_surface: characteristic 3 is excluded");
    }
    Poly x = Poly::variable(f, Var::X);
    Poly y = Poly::variable(f, Var::Y);
    Poly z = Poly::variable(f, Var::Z);
    Poly eq = pow(z, 3) + pow(x, m) * z + pow(x - y, 4);
    return WeierstrassSurface::from_poly(eq);
}

namespace {

Poly family_form(const FieldSpec& f, unsigned x_exp_of_a1, unsigned x_exp_of_a0) {
    Poly x = Poly::variable(f, Var::X);
    Poly y = Poly::variable(f, Var::Y);
    Poly z = Poly::variable(f, Var::Z);
    return pow(z, 3) + pow(x, x_exp_of_a1) * z + pow(x, x_exp_of_a0) * pow(y, 4);
}

} // namespace

bool verify_reference_sequence(unsigned m) {
    const FieldSpec f = FieldSpec::rationals();
    WeierstrassSurface start = counterexample_surface(m, f);

    std::vector<std::variant<Direction, CurveCenter>> script;
    script.emplace_back(Direction::x_chart(Scalar::one(f)));
    script.emplace_back(Direction::x_chart(Scalar::zero(f)));
    script.emplace_back(Direction::x_chart(Scalar::zero(f)));
    script.emplace_back(CurveCenter(Poly::variable(f, Var::X)));
    script.emplace_back(Direction::x_chart(Scalar::zero(f)));
    script.emplace_back(Direction::x_chart(Scalar::zero(f)));
    script.emplace_back(Direction::x_chart(Scalar::zero(f)));
    script.emplace_back(CurveCenter(Poly::variable(f, Var::X)));

    ResolutionTrace trace = run(start, Strategy::scripted(script), 16);
    if (trace.steps.size() != 8 || trace.drop_step) return false;

    // Closed forms of the equations after steps 1, 3, 4, and 8: each
    // four-step pass lowers the X-exponent of the Z-coefficient by eight
    // and recreates the same shape.
    auto expect = [&](unsigned idx, const Poly& form) {
        return trace.steps[idx - 1].equation_after == form;
    };
    Poly xy4_shape = family_form(f, m - 2, 1);
    Poly x3y4_shape = family_form(f, m - 6, 3);
    Poly bare_shape4 = family_form(f, m - 8, 0);
    Poly bare_shape8 = family_form(f, m - 16, 0);
    return expect(1, xy4_shape) && expect(3, x3y4_shape) && expect(4, bare_shape4) &&
           expect(8, bare_shape8);
}

CounterexampleReport counterexample_report(const std::vector<unsigned>& m_values) {
    const FieldSpec f = FieldSpec::rationals();
    CounterexampleReport report{{}, true, true, true};

    for (unsigned m : m_values) {
        WeierstrassSurface s = counterexample_surface(m, f);
        NewtonPolygon polygon = newton_polygon(minimize(s));
        ResolutionTrace trace = run(s, Strategy::automatic());
        if (!trace.drop_step) {
            throw invariant_error("counterexample_report: trace ended without a drop");
        }
        report.rows.push_back(CounterexampleRow{m, polygon, *trace.drop_step});
    }

    std::vector<PolygonPoint> expected_pts{PolygonPoint{Rational(0), Rational(4, 3)},
                                           PolygonPoint{Rational(4, 3), Rational(0)}};
    NewtonPolygon expected = NewtonPolygon::hull(expected_pts);
    for (const CounterexampleRow& row : report.rows) {
        if (row.polygon != expected) report.polygons_match_expected = false;
    }

    std::vector<CounterexampleRow> by_m = report.rows;
    std::sort(by_m.begin(), by_m.end(),
              [](const CounterexampleRow& a, const CounterexampleRow& b) { return a.m < b.m; });
    by_m.erase(std::unique(by_m.begin(), by_m.end(),
                           [](const CounterexampleRow& a, const CounterexampleRow& b) {
                               return a.m == b.m;
                           }),
               by_m.end());
    for (std::size_t i = 0; i + 1 < by_m.size(); ++i) {
        if (by_m[i].drop_step >= by_m[i + 1].drop_step) {
            report.counts_strictly_increasing = false;
        }
        if (by_m[i + 1].m - by_m[i].m == 8 &&
            by_m[i + 1].drop_step - by_m[i].drop_step != 4) {
            report.cycle_periodicity = false;
        }
    }
    return report;
}

} // namespace hironaka
