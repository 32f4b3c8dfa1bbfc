#pragma once

#include <optional>
#include <string>

#include "oshape/path.hpp"
#include "oshape/shape.hpp"

namespace oshape {

// Deterministic ASCII rendering: shape cells '.', hole cells blank, path
// cells numbered by visit order in base 36 (paths longer than 1296 fall back
// to direction arrows), endpoints marked S and T.
std::string ascii_render(const ShapeSpec& spec, const std::optional<PathSeq>& path);

// Minimal static SVG; byte-identical output for identical inputs.
std::string svg_render(const ShapeSpec& spec, const std::optional<PathSeq>& path);

}  // namespace oshape
