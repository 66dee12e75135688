#pragma once

#include "recfac/conic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recfac {

struct SvgOptions {
  /// Box used for unbounded conics and as the view window when given.
  std::optional<Int> box;
  /// Draw the whole family n in [first, second] faintly behind the highlighted curve.
  std::optional<std::pair<Int, Int>> overlay;
  int width = 640;
  int height = 640;
};

/// Static plot: axes, the conic sampled as polylines, lattice points as
/// circles labelled (X,Y). Floating point is used for drawing only.
std::string render_conic_svg(const ConicInstance& inst, const std::vector<LatticePoint>& points,
                             const SvgOptions& options = {});

}  // namespace recfac
