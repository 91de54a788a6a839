#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mtile/planar.hpp"
#include "mtile/subgroup.hpp"

namespace mtile::cli {

/// Closed rectangle [xmin, xmax] x [ymin, ymax] in plane coordinates.
struct Window {
  Rational xmin, ymin, xmax, ymax;
};

/// "xmin,ymin,xmax,ymax"; each entry is an integer, "p/q" or a decimal
/// such as "-2.5". Throws ParseError.
Window parse_window(std::string_view text);

/// Same center as the polygon's bounding box, three times as wide and tall
/// (corners rounded to 1e-6).
Window default_window(const Polygon& polygon);

/// Fixed-point with exactly six decimals, rounding half up.
std::string fixed6(const Rational& q);

/// SVG 1.1 document. With a lattice: every translate P + l whose half-open
/// bounding box [min, max) meets the window, the base copy highlighted.
/// Without one: the outline of P with its e_j and tau_j arrows. Vertices
/// are rounded through approx(., 1e-7) and printed with six decimals, so
/// the output is a pure function of the input.
std::string render_svg(const Polygon& polygon, const std::optional<LatticeBasis>& lattice,
                       const Window& window);

}  // namespace mtile::cli
