#pragma once

#include <array>
#include <string>

#include "qtc/coloring.hpp"
#include "qtc/quadtree.hpp"

namespace qtc {

// Fill palette for color ids 0..5 (see README).
inline constexpr std::array<const char*, 6> kSvgPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948"};

// One rect per leaf in a 1024x1024 viewBox, y flipped to screen coordinates.
// Without a coloring, outlines only. Byte-deterministic output.
// Throws MissingAssignment if `coloring` is not total on the leaves.
std::string render_svg(const Quadtree& tree, const Coloring* coloring = nullptr);

}  // namespace qtc
