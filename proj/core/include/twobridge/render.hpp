#ifndef TWOBRIDGE_RENDER_HPP
#define TWOBRIDGE_RENDER_HPP

#include <string>

#include "twobridge/param.hpp"
#include "twobridge/walk.hpp"

namespace twobridge {

enum class RenderFormat { Svg, Ascii };

/// Deterministic rendering of the 1-D walk: lattice dots, the walk as a
/// polyline lifted a little higher on each revisit of an integer, signed
/// coefficient labels, start vertex circled. Byte-identical output for
/// identical inputs.
std::string render_walk_1d(const WalkTrace1D& trace, RenderFormat format);

/// Deterministic rendering of the 2-D walk with coefficient labels at
/// visited lattice points and the start vertex circled.
std::string render_walk_2d(const WalkTrace2D& trace, RenderFormat format);

} // namespace twobridge

#endif
