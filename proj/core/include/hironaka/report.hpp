#pragma once

#include <string>

#include "hironaka/driver.hpp"

namespace hironaka {

// Machine- and human-readable renderings of the main result objects.
// All output is built from exact arithmetic and fixed formatting, so a
// given value always serializes to the same bytes.

/// {"vertices":[["0","4/3"],["4/3","0"]]} -- coordinates as exact decimal
/// integer or "a/b" strings.
std::string polygon_to_json(const NewtonPolygon& p);

/// Standalone 480x480 drawing of the region boundary: axes with unit
/// gridlines, the staircase polyline extended by its two axis-parallel
/// rays, vertices as labeled dots with exact fraction coordinates.
std::string polygon_to_svg(const NewtonPolygon& p);

std::string trace_to_json(const ResolutionTrace& t);
std::string trace_to_text(const ResolutionTrace& t);

std::string counterexample_to_json(const CounterexampleReport& r);
std::string counterexample_to_text(const CounterexampleReport& r);

} // namespace hironaka
