#pragma once

#include <string>

#include "springer/homology.hpp"
#include "springer/matching.hpp"

namespace springer {

// Arcs above a numbered baseline, rays as vertical bars, dots as '*' at the
// top of an arc.
std::string render_ascii(const DottedMatching& m);
std::string render_ascii(const HomClass& x);

// Deterministic SVG: semicircular arcs, vertical rays, filled dots.
std::string render_svg(const DottedMatching& m);
std::string render_svg(const HomClass& x);

}  // namespace springer
