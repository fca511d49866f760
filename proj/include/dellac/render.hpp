#pragma once

#include <string>

#include "dellac/tableau.hpp"

namespace dellac {

enum class Overlay { none, paths, labels };
Overlay parse_overlay(const std::string& s);  // "none" | "paths" | "labels"

struct RenderSpec {
  Tableau tableau;
  Kind kind = Kind::dellac;
  Overlay overlay = Overlay::none;
  int cell = 24;  // pixels per box
};

// Deterministic SVG: grid, the diagonal(s), dots, stars on free points, and
// the optional overlay (B blue, R red, G green, V purple, B' turquoise,
// R' peach; labels print the beta/rho/gamma or nu/gamma letters).
std::string render_svg(const RenderSpec& spec);

}  // namespace dellac
