#pragma once

#include <string>

#include "origami/origami.hpp"

namespace origami {

struct SvgLayout {
  int cell = 64;    ///< square side in pixels
  int margin = 24;
};

/// Squares on an integer grid, one row per horizontal cylinder. Both sides
/// of a glued pair carry the same glyph; arrows of a half-turn pair point
/// against each other (class "flip"). Throws Disconnected.
std::string render_svg(const Origami& o, const SvgLayout& layout = {});

/// Tripartite drawing of the dessin: columns V_h, V_c, V_v.
std::string render_dessin_svg(const Origami& o, const SvgLayout& layout = {});

/// Glyph of the k-th glued pair: a..z, then a1..z1, ...
std::string pair_glyph(std::size_t k);

}  // namespace origami
