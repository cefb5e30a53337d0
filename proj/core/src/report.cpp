#include "hironaka/report.hpp"

#include <json.hpp>

#include "hironaka/expr.hpp"

namespace hironaka {

namespace {

using json = nlohmann::ordered_json;

std::string rational_str(const Rational& r) {
    return r.get_str();
}

json polygon_json_value(const NewtonPolygon& p) {
    json vertices = json::array();
    for (const PolygonPoint& v : p.vertices()) {
        vertices.push_back(json::array({rational_str(v.x), rational_str(v.y)}));
    }
    return json{{"vertices", std::move(vertices)}};
}

json center_json_value(const StepCenter& center) {
    json out{{"type", nullptr}, {"direction", nullptr}, {"generator", nullptr}};
    if (std::holds_alternative<Direction>(center)) {
        out["type"] = "point";
        out["direction"] = std::get<Direction>(center).to_string();
    } else if (std::holds_alternative<CurveCenter>(center)) {
        out["type"] = "curve";
        out["generator"] = print_canonical(std::get<CurveCenter>(center).generator());
    } else {
        out["type"] = "terminal";
    }
    return out;
}

std::string center_text(const StepCenter& center) {
    if (std::holds_alternative<Direction>(center)) {
        return "quadratic at (" + std::get<Direction>(center).to_string() + ")";
    }
    if (std::holds_alternative<CurveCenter>(center)) {
        return "monoidal at (Z," +
               print_canonical(std::get<CurveCenter>(center).generator()) + ")";
    }
    return "terminal quadratic at (1:0:0)";
}

// Fixed-point pixel coordinate with two decimals, rounded half up; exact
// arithmetic end to end keeps the rendering byte-stable.
std::string px(const Rational& value) {
    Rational scaled = value * 100 + Rational(1, 2);
    Integer floor;
    mpz_fdiv_q(floor.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    Integer whole = floor / 100;
    Integer cents = floor % 100;
    if (cents < 0) {
        cents += 100;
        whole -= 1;
    }
    std::string c = cents.get_str();
    if (c.size() < 2) c = "0" + c;
    return whole.get_str() + "." + c;
}

} // namespace

std::string polygon_to_json(const NewtonPolygon& p) {
    return polygon_json_value(p).dump();
}

std::string polygon_to_svg(const NewtonPolygon& p) {
    const int canvas = 480;
    const int margin = 40;
    const int plot = canvas - 2 * margin;

    // Domain [0, d]^2 with one unit of slack past the furthest vertex.
    Integer d = 2;
    for (const PolygonPoint& v : p.vertices()) {
        for (const Rational* r : {&v.x, &v.y}) {
            Integer ceil;
            mpz_cdiv_q(ceil.get_mpz_t(), r->get_num().get_mpz_t(), r->get_den().get_mpz_t());
            if (ceil + 1 > d) d = ceil + 1;
        }
    }

    auto sx = [&](const Rational& x) { return px(margin + x * plot / Rational(d)); };
    auto sy = [&](const Rational& y) { return px(canvas - margin - y * plot / Rational(d)); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
           "viewBox=\"0 0 480 480\">\n";
    out += "<rect width=\"480\" height=\"480\" fill=\"#ffffff\"/>\n";

    for (Integer g = 0; g <= d; ++g) {
        Rational gr(g);
        std::string color = g == 0 ? "#555555" : "#dddddd";
        out += "<line x1=\"" + sx(gr) + "\" y1=\"" + sy(Rational(0)) + "\" x2=\"" + sx(gr) +
               "\" y2=\"" + sy(Rational(d)) + "\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n";
        out += "<line x1=\"" + sx(Rational(0)) + "\" y1=\"" + sy(gr) + "\" x2=\"" +
               sx(Rational(d)) + "\" y2=\"" + sy(gr) + "\" stroke=\"" + color +
               "\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + sx(gr) + "\" y=\"" + px(Rational(canvas - margin + 16)) +
               "\" font-family=\"monospace\" font-size=\"11\" fill=\"#555555\" "
               "text-anchor=\"middle\">" + g.get_str() + "</text>\n";
        if (g > 0) {
            out += "<text x=\"" + px(Rational(margin - 8)) + "\" y=\"" + sy(gr) +
                   "\" font-family=\"monospace\" font-size=\"11\" fill=\"#555555\" "
                   "text-anchor=\"end\" dominant-baseline=\"middle\">" + g.get_str() +
                   "</text>\n";
        }
    }

    if (p.empty()) {
        out += "<text x=\"240.00\" y=\"240.00\" font-family=\"monospace\" font-size=\"14\" "
               "fill=\"#111111\" text-anchor=\"middle\">empty polygon</text>\n";
        out += "</svg>\n";
        return out;
    }

    const auto& verts = p.vertices();
    std::string points;
    points += sx(verts.front().x) + "," + sy(Rational(d));
    for (const PolygonPoint& v : verts) {
        points += " " + sx(v.x) + "," + sy(v.y);
    }
    points += " " + sx(Rational(d)) + "," + sy(verts.back().y);
    out += "<polyline points=\"" + points +
           "\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n";

    for (const PolygonPoint& v : verts) {
        out += "<circle cx=\"" + sx(v.x) + "\" cy=\"" + sy(v.y) +
               "\" r=\"4\" fill=\"#1f6feb\"/>\n";
        out += "<text x=\"" + px(margin + v.x * plot / Rational(d) + 8) + "\" y=\"" +
               px(canvas - margin - v.y * plot / Rational(d) - 8) +
               "\" font-family=\"monospace\" font-size=\"12\" fill=\"#111111\">(" +
               rational_str(v.x) + "," + rational_str(v.y) + ")</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string trace_to_json(const ResolutionTrace& t) {
    json steps = json::array();
    for (const Step& s : t.steps) {
        json step{{"index", s.index},
                  {"center", center_json_value(s.center)},
                  {"equation", print_canonical(s.equation_after)},
                  {"order", s.order_after},
                  {"polygon", nullptr}};
        if (s.polygon_after) step["polygon"] = polygon_json_value(*s.polygon_after);
        steps.push_back(std::move(step));
    }
    json out{{"initial", print_canonical(t.initial.equation())},
             {"multiplicity", t.initial.multiplicity()},
             {"steps", std::move(steps)},
             {"drop_step", nullptr}};
    if (t.drop_step) out["drop_step"] = *t.drop_step;
    return out.dump();
}

std::string trace_to_text(const ResolutionTrace& t) {
    std::string out;
    out += "initial: " + print_canonical(t.initial.equation()) + " (order " +
           std::to_string(t.initial.multiplicity()) + ")\n";
    for (const Step& s : t.steps) {
        out += "step " + std::to_string(s.index) + ": " + center_text(s.center) + " -> " +
               print_canonical(s.equation_after) + " (order " + std::to_string(s.order_after) +
               ")\n";
    }
    if (t.drop_step) {
        out += "multiplicity dropped at step " + std::to_string(*t.drop_step) + "\n";
    } else {
        out += "no multiplicity drop\n";
    }
    return out;
}

std::string counterexample_to_json(const CounterexampleReport& r) {
    json rows = json::array();
    for (const CounterexampleRow& row : r.rows) {
        rows.push_back(json{{"m", row.m},
                            {"polygon", polygon_json_value(row.polygon)},
                            {"drop_step", row.drop_step}});
    }
    json out{{"rows", std::move(rows)},
             {"polygons_match_expected", r.polygons_match_expected},
             {"counts_strictly_increasing", r.counts_strictly_increasing},
             {"cycle_periodicity", r.cycle_periodicity},
             {"all_ok", r.all_ok()}};
    return out.dump();
}

std::string counterexample_to_text(const CounterexampleReport& r) {
    std::string out;
    for (const CounterexampleRow& row : r.rows) {
        out += "m=" + std::to_string(row.m) + " drop_step=" + std::to_string(row.drop_step) +
               " vertices:";
        for (const PolygonPoint& v : row.polygon.vertices()) {
            out += " (" + rational_str(v.x) + "," + rational_str(v.y) + ")";
        }
        out += "\n";
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out += std::string("polygons match expected: ") + yn(r.polygons_match_expected) + "\n";
    out += std::string("counts strictly increasing: ") + yn(r.counts_strictly_increasing) + "\n";
    out += std::string("cycle periodicity (+8 in m -> +4 steps): ") + yn(r.cycle_periodicity) +
           "\n";
    return out;
}

} // namespace hironaka
