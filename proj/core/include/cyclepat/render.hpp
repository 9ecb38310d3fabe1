#pragma once

#include <string>

#include "cyclepat/permutation.hpp"

namespace cyclepat {

/// Arc diagram as SVG: points on a line, semicircular arcs; fixed points,
/// 2-cycle arcs and 3-cycle arcs carry distinct classes/colors.
std::string render_svg(const Permutation& p);

/// Plain-text arc diagram plus the arc list.
std::string render_ascii(const Permutation& p);

}  // namespace cyclepat
