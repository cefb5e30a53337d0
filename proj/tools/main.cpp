#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hironaka/driver.hpp"
#include "hironaka/expr.hpp"
#include "hironaka/report.hpp"

namespace hk = hironaka;

namespace {

hk::FieldSpec parse_field_flag(const std::string& text) {
    if (text == "q" || text == "Q") return hk::FieldSpec::rationals();
    if (text.rfind("fp:", 0) == 0) {
        try {
            hk::Integer p(text.substr(3), 10);
            return hk::FieldSpec::prime_field(p);
        } catch (const std::exception&) {
            // fall through to the usage error below
        }
    }
    throw hk::parse_error("--field must be 'q' or 'fp:P' with P prime", 1);
}

std::string load_argument(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) {
        throw hk::parse_error("cannot read file '" + arg.substr(1) + "'", 1);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

hk::WeierstrassSurface surface_from(const std::string& expr_arg, const std::string& field_arg) {
    hk::FieldSpec f = parse_field_flag(field_arg);
    hk::Poly p = hk::parse_poly(load_argument(expr_arg), f);
    return hk::WeierstrassSurface::from_poly(p);
}

std::string polygon_text(const hk::NewtonPolygon& polygon) {
    std::string out = "vertices:";
    if (polygon.empty()) return out + " (none)";
    for (const hk::PolygonPoint& v : polygon.vertices()) {
        out += " (" + v.x.get_str() + "," + v.y.get_str() + ")";
    }
    return out;
}

int run_info(const std::string& expr, const std::string& field) {
    hk::WeierstrassSurface s = surface_from(expr, field);
    std::cout << "equation: " << hk::print_canonical(s.equation()) << "\n";
    std::cout << "multiplicity: " << s.multiplicity() << "\n";
    std::cout << "wt: " << (hk::is_wt(s) ? "yes" : "no") << "\n";
    for (unsigned k = 0; k < s.multiplicity(); ++k) {
        std::cout << "a_" << k << ": " << hk::print_canonical(s.z_coefficient(k)) << "\n";
    }
    return 0;
}

int run_polygon(const std::string& expr, const std::string& field, const std::string& svg_path,
                bool json) {
    hk::WeierstrassSurface s = surface_from(expr, field);
    hk::NewtonPolygon polygon = hk::newton_polygon(s);
    if (!svg_path.empty()) {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out) {
            throw hk::parse_error("cannot write file '" + svg_path + "'", 1);
        }
        out << hk::polygon_to_svg(polygon);
    }
    if (json) {
        std::cout << hk::polygon_to_json(polygon) << "\n";
    } else {
        std::cout << polygon_text(polygon) << "\n";
    }
    return 0;
}

int run_minimize(const std::string& expr, const std::string& field) {
    hk::WeierstrassSurface s = surface_from(expr, field);
    std::cout << hk::print_canonical(hk::minimize(s).equation()) << "\n";
    return 0;
}

int run_blowup(const std::string& expr, const std::string& field, const std::string& direction,
               const std::string& curve) {
    hk::WeierstrassSurface s = surface_from(expr, field);
    hk::FieldSpec f = parse_field_flag(field);
    hk::TransformResult r = [&] {
        if (!direction.empty()) {
            auto center = hk::parse_center("Q " + direction, f);
            return hk::quadratic(s, std::get<hk::Direction>(center));
        }
        auto center = hk::parse_center("M " + load_argument(curve), f);
        return hk::monoidal(s, std::get<hk::CurveCenter>(center));
    }();
    std::cout << hk::print_canonical(r.result) << "\n";
    std::cout << "order: " << r.new_order << "\n";
    return 0;
}

int run_permitted(const std::string& expr, const std::string& field) {
    hk::WeierstrassSurface s = surface_from(expr, field);
    auto curves = hk::find_permitted_curves(s);
    if (curves.empty()) {
        std::cout << "(none)\n";
        return 0;
    }
    for (const hk::CurveCenter& c : curves) {
        std::cout << "(Z," << hk::print_canonical(c.generator()) << ")\n";
    }
    return 0;
}

int run_nearpoints(const std::string& expr, const std::string& field) {
    hk::WeierstrassSurface s = surface_from(expr, field);
    auto points = hk::near_points(s);
    if (points.empty()) {
        std::cout << "(none)\n";
        return 0;
    }
    for (const hk::Direction& d : points) {
        std::cout << "(" << d.to_string() << ")\n";
    }
    return 0;
}

int run_resolve(const std::string& expr, const std::string& field, bool auto_mode,
                const std::string& script_path, unsigned max_steps, bool json) {
    hk::WeierstrassSurface s = surface_from(expr, field);
    hk::FieldSpec f = parse_field_flag(field);
    hk::Strategy strategy = hk::Strategy::automatic();
    if (!auto_mode) {
        std::ifstream in(script_path, std::ios::binary);
        if (!in) {
            throw hk::parse_error("cannot read file '" + script_path + "'", 1);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        strategy = hk::Strategy::scripted(hk::parse_script(buf.str(), f));
    }
    hk::ResolutionTrace trace = hk::run(s, strategy, max_steps);
    std::cout << (json ? hk::trace_to_json(trace) + "\n" : hk::trace_to_text(trace));
    return 0;
}

int run_counterexample(const std::vector<unsigned>& m_values, bool json) {
    hk::CounterexampleReport report = hk::counterexample_report(m_values);
    std::cout << (json ? hk::counterexample_to_json(report) + "\n"
                       : hk::counterexample_to_text(report));
    if (!report.all_ok()) {
        std::cerr << "error: counterexample family failed its invariants\n";
        return 4;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for embedded algebroid surface singularities: "
                 "Newton-Hironaka polygons, vertex contraction, quadratic and monoidal "
                 "blow-ups, and resolution traces.\n"
                 "Expressions use the grammar 'Z^3 + X^19*Z + (X-Y)^4'; implicit products "
                 "only between a variable or ')' and a variable. Pass @FILE to read an "
                 "expression from FILE.\n"
                 "Monoidal transforms compute only the Z = G*Z' chart; near points over "
                 "non-origin points of a blown-up curve are out of scope."};
    app.require_subcommand(1);

    std::string expr;
    std::string field = "q";
    std::string svg_path;
    std::string direction;
    std::string curve;
    std::string script_path;
    bool json = false;
    bool auto_mode = false;
    unsigned max_steps = 500;
    std::vector<unsigned> m_values;

    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", field, "Coefficient field: q (rationals) or fp:P (prime P)")
            ->capture_default_str();
    };
    auto add_expr = [&](CLI::App* sub) {
        sub->add_option("expr", expr, "Surface equation (or @FILE)")->required();
    };

    CLI::App* info = app.add_subcommand("info", "Multiplicity, WT flag, and Z-coefficients");
    add_expr(info);
    add_field(info);

    CLI::App* polygon =
        app.add_subcommand("polygon", "Newton-Hironaka polygon vertices of the equation");
    add_expr(polygon);
    add_field(polygon);
    polygon->add_option("--svg", svg_path, "Write an SVG rendering to this path");
    polygon->add_flag("--json", json, "Emit JSON instead of text");

    CLI::App* minimize_cmd =
        app.add_subcommand("minimize", "Contract vertices to the characteristic-polygon form");
    add_expr(minimize_cmd);
    add_field(minimize_cmd);

    CLI::App* blowup = app.add_subcommand(
        "blowup", "Apply one transform (quadratic at a direction, or monoidal along a curve)");
    add_expr(blowup);
    add_field(blowup);
    auto* dir_opt =
        blowup->add_option("--direction", direction, "Exceptional direction, e.g. 1:1:0 or 0:1:0");
    auto* curve_opt =
        blowup->add_option("--curve", curve, "Curve generator G for the center (Z,G), e.g. X");
    dir_opt->excludes(curve_opt);
    curve_opt->excludes(dir_opt);

    CLI::App* permitted =
        app.add_subcommand("permitted", "Permitted curves (Z,G) with linear G");
    add_expr(permitted);
    add_field(permitted);

    CLI::App* nearpoints = app.add_subcommand(
        "nearpoints", "Points of the exceptional line where the multiplicity survives");
    add_expr(nearpoints);
    add_field(nearpoints);

    CLI::App* resolve = app.add_subcommand(
        "resolve", "Blow up until the multiplicity drops (greedy or scripted centers)");
    add_expr(resolve);
    add_field(resolve);
    auto* auto_opt = resolve->add_flag("--auto", auto_mode, "Follow the greedy procedure");
    auto* script_opt =
        resolve->add_option("--script", script_path, "Replay centers from this file, one per line");
    auto_opt->excludes(script_opt);
    script_opt->excludes(auto_opt);
    resolve->add_option("--max-steps", max_steps, "Step cap before giving up")
        ->capture_default_str()
        ->check(CLI::Range(1u, 1000000u));
    resolve->add_flag("--json", json, "Emit the JSON trace instead of text");

    CLI::App* counterexample = app.add_subcommand(
        "counterexample",
        "Fixed-polygon family Z^3 + X^m*Z + (X-Y)^4: polygons and blow-up counts");
    counterexample->add_option("--m", m_values, "Values of m (each >= 19), comma separated")
        ->required()
        ->delimiter(',');
    counterexample->add_flag("--json", json, "Emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (info->parsed()) return run_info(expr, field);
        if (polygon->parsed()) return run_polygon(expr, field, svg_path, json);
        if (minimize_cmd->parsed()) return run_minimize(expr, field);
        if (blowup->parsed()) {
            if (direction.empty() == curve.empty()) {
                std::cerr << "error: blowup needs exactly one of --direction or --curve\n";
                return 1;
            }
            return run_blowup(expr, field, direction, curve);
        }
        if (permitted->parsed()) return run_permitted(expr, field);
        if (nearpoints->parsed()) return run_nearpoints(expr, field);
        if (resolve->parsed()) {
            if (auto_mode == !script_path.empty()) {
                std::cerr << "error: resolve needs exactly one of --auto or --script\n";
                return 1;
            }
            return run_resolve(expr, field, auto_mode, script_path, max_steps, json);
        }
        if (counterexample->parsed()) return run_counterexample(m_values, json);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const hk::parse_error& e) {
        std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
        return 1;
    } catch (const hk::step_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hk::invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const hk::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
