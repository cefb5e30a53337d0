#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hironaka/transform.hpp"

namespace hironaka {

/// Marker for the final blow-up of a resolution run: no equimultiple point
/// is left on the exceptional line, so the procedure blows up the origin
/// once more (X-chart, c = 0) and the multiplicity necessarily drops.
struct TerminalPoint {
    friend bool operator==(TerminalPoint, TerminalPoint) { return true; }
};

using StepCenter = std::variant<Direction, CurveCenter, TerminalPoint>;

struct Step {
    unsigned index; // 1-based, consecutive
    StepCenter center;
    Poly equation_after;
    unsigned order_after;
    std::optional<NewtonPolygon> polygon_after; // present iff the order survived
};

struct ResolutionTrace {
    WeierstrassSurface initial;
    std::vector<Step> steps;
    std::optional<unsigned> drop_step;
};

/// How to choose centers: follow the greedy procedure (curves first, then
/// the canonically first near point), or replay a fixed list of centers.
struct Strategy {
    enum class Kind { automatic, scripted };

    Kind kind;
    std::vector<std::variant<Direction, CurveCenter>> script;

    static Strategy automatic() { return Strategy{Kind::automatic, {}}; }
    static Strategy scripted(std::vector<std::variant<Direction, CurveCenter>> centers) {
        return Strategy{Kind::scripted, std::move(centers)};
    }
};

/// One step of the greedy procedure: a permitted curve when one exists
/// (centers of maximal dimension first), otherwise the canonically first
/// near point, otherwise the terminal blow-up. When the whole exceptional
/// line is equimultiple the canonical direction (1 : 0 : 0) is taken.
std::pair<StepCenter, TransformResult> lz_step(const WeierstrassSurface& s);

/// Iterates lz_step, or replays a script (validating that directions are
/// near points and curves permitted), recording every step. Halts at the
/// first multiplicity drop or at the end of the script; errors when
/// max_steps transforms did not finish the job.
ResolutionTrace run(const WeierstrassSurface& s, const Strategy& strategy,
                    unsigned max_steps = 500);

/// The family F(m) = Z^3 + X^m Z + (X - Y)^4, m >= 19. Its polygon does not
/// depend on m, yet the number of blow-ups needed to drop the multiplicity
/// grows with m. Needs characteristic != 3.
WeierstrassSurface counterexample_surface(unsigned m,
                                          const FieldSpec& f = FieldSpec::rationals());

/// Replays the reference 8-step script on F(m)
/// (quadratic 1:1:0, then 1:0:0 twice, monoidal X, then 1:0:0 three times,
/// monoidal X) and checks the intermediate equations against their closed
/// forms after steps 1, 3, 4, 8.
bool verify_reference_sequence(unsigned m);

struct CounterexampleRow {
    unsigned m;
    NewtonPolygon polygon;
    unsigned drop_step;
};

struct CounterexampleReport {
    std::vector<CounterexampleRow> rows; // input order
    bool polygons_match_expected;        // every polygon equals [(0,4/3), (4/3,0)]
    bool counts_strictly_increasing;     // drop counts grow strictly with m
    bool cycle_periodicity;              // m2 - m1 = 8  =>  count2 - count1 = 4

    bool all_ok() const {
        return polygons_match_expected && counts_strictly_increasing && cycle_periodicity;
    }
};

/// Runs the automatic procedure on F(m) for every requested m (each >= 19)
/// over Q and assembles the invariance checks above.
CounterexampleReport counterexample_report(const std::vector<unsigned>& m_values);

} // namespace hironaka
