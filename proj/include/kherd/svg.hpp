#pragma once

#include <span>
#include <string>

#include "kherd/dataset.hpp"

namespace kherd {

struct SvgOptions {
  int width = 800;
  int height = 800;
};

// Deterministic SVG 1.1 scatter of a 2-D dataset: unselected points as small
// circles (grey, or class-coloured from a fixed 10-colour palette when labels
// exist), selected points drawn on top as larger circles carrying
// class="selected". Axes auto-scale with a 5% margin. Throws on d != 2 or an
// empty selection.
std::string render_scatter_svg(const Dataset& dataset,
                               std::span<const Index> selected,
                               const SvgOptions& options = {});

}  // namespace kherd
