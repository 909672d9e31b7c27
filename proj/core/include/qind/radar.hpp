#pragma once

#include <string>
#include <vector>

#include "qind/rubric.hpp"
#include "qind/scoring.hpp"

namespace qind {

struct RadarConfig {
  int size = 640;    // square canvas, px
  int margin = 80;   // distance of the outer ring to the canvas edge, px
  // Draw the dashed per-axis minimum polygon when any minimum is positive.
  bool show_minimums = true;
};

struct RenderResult {
  std::string svg;
  std::vector<std::string> warnings;
};

// One axis per rubric dimension (rubric order), concentric rings at the
// integer maturity levels, one closed polygon per assessment with vertex
// radius score/max_level of the outer ring. Fewer than three dimensions
// cannot span a polygon; those render as a bar chart with a warning.
// Output is deterministic: fixed 2-decimal coordinates, no timestamps.
RenderResult render_radar(const Rubric& rubric, const std::vector<Assessment>& assessments,
                          const WeightScheme& weights, const RadarConfig& config = {});

}  // namespace qind
