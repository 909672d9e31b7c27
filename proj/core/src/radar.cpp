#include "qind/radar.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qind/errors.hpp"

namespace qind {

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double dx;  // unit direction
  double dy;
};

// Axis 0 points straight up; the rest follow clockwise.
Axis axis_direction(size_t index, size_t count) {
  const double angle = -kPi / 2 + 2 * kPi * static_cast<double>(index) /
                                      static_cast<double>(count);
  return {std::cos(angle), std::sin(angle)};
}

void check_shared_rubric(const Rubric& rubric, const std::vector<Assessment>& assessments) {
  if (assessments.empty()) {
    throw InputError("radar: need at least one assessment");
  }
  for (const auto& a : assessments) {
    if (a.target.rubric_id != rubric.id) {
      throw InputError("radar: mixed rubrics ('" + rubric.id + "' vs '" +
                       a.target.rubric_id + "'); overlays need one shared rubric");
    }
  }
}

std::string render_bars(const Rubric& rubric, const std::vector<Assessment>& assessments,
                        const RadarConfig& config) {
  const int size = config.size;
  const double margin = config.margin;
  const double plot_h = size - 2 * margin;
  const size_t dims = rubric.dimensions.size();
  const size_t series = assessments.size();
  const double group_w = (size - 2 * margin) / static_cast<double>(dims);
  const double bar_w = group_w / static_cast<double>(series + 1);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
      << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  svg << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
  for (size_t d = 0; d < dims; ++d) {
    const double x0 = margin + group_w * static_cast<double>(d);
    for (size_t s = 0; s < series; ++s) {
      const DimensionScore* score =
          assessments[s].find_score(rubric.dimensions[d].id);
      const double value = score ? score->score.to_double() : 0.0;
      const double h = plot_h * value / rubric.max_level;
      svg << "  <rect class=\"bar\" x=\"" << fmt(x0 + bar_w * (static_cast<double>(s) + 0.5))
          << "\" y=\"" << fmt(size - margin - h) << "\" width=\"" << fmt(bar_w * 0.8)
          << "\" height=\"" << fmt(h) << "\" fill=\"" << kPalette[s % 8] << "\"/>\n";
    }
    svg << "  <text class=\"axis-label\" x=\"" << fmt(x0 + group_w / 2) << "\" y=\""
        << fmt(size - margin + 16) << "\" font-size=\"12\" text-anchor=\"middle\">"
        << escape_xml(rubric.dimensions[d].title) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

RenderResult render_radar(const Rubric& rubric, const std::vector<Assessment>& assessments,
                          const WeightScheme& weights, const RadarConfig& config) {
  check_shared_rubric(rubric, assessments);

  RenderResult result;
  const size_t dims = rubric.dimensions.size();
  if (dims < 3) {
    result.warnings.push_back("fewer than 3 dimensions; rendering bars instead of a radar");
    result.svg = render_bars(rubric, assessments, config);
    return result;
  }

  const int size = config.size;
  const double cx = size / 2.0;
  const double cy = size / 2.0;
  const double radius = size / 2.0 - config.margin;
  const int max_level = rubric.max_level;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
      << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  svg << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

  // Concentric rings, one per integer level from the center (0) outwards.
  svg << "  <g class=\"rings\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int level = 0; level <= max_level; ++level) {
    const double r = radius * level / max_level;
    svg << "    <circle class=\"ring\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
        << "\" r=\"" << fmt(r) << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g class=\"axes\" stroke=\"#999999\" stroke-width=\"1\">\n";
  for (size_t d = 0; d < dims; ++d) {
    const Axis dir = axis_direction(d, dims);
    svg << "    <line class=\"axis\" x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy)
        << "\" x2=\"" << fmt(cx + radius * dir.dx) << "\" y2=\"" << fmt(cy + radius * dir.dy)
        << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g class=\"axis-labels\" font-size=\"13\" fill=\"#333333\">\n";
  for (size_t d = 0; d < dims; ++d) {
    const Axis dir = axis_direction(d, dims);
    const double lx = cx + (radius + 18) * dir.dx;
    const double ly = cy + (radius + 18) * dir.dy;
    const char* anchor = dir.dx > 0.3 ? "start" : (dir.dx < -0.3 ? "end" : "middle");
    svg << "    <text class=\"axis-label\" x=\"" << fmt(lx) << "\" y=\"" << fmt(ly + 4)
        << "\" text-anchor=\"" << anchor << "\">" << escape_xml(rubric.dimensions[d].title)
        << "</text>\n";
  }
  svg << "  </g>\n";

  // Ring value labels along the first axis.
  svg << "  <g class=\"ring-labels\" font-size=\"10\" fill=\"#888888\">\n";
  for (int level = 1; level <= max_level; ++level) {
    const double r = radius * level / max_level;
    svg << "    <text class=\"ring-label\" x=\"" << fmt(cx + 4) << "\" y=\"" << fmt(cy - r - 2)
        << "\">" << level << "</text>\n";
  }
  svg << "  </g>\n";

  // Dashed per-axis minimum overlay.
  bool any_minimum = false;
  for (const auto& dim : rubric.dimensions) {
    if (!weights.minimum_for(dim.id).is_zero()) any_minimum = true;
  }
  if (config.show_minimums && any_minimum) {
    svg << "  <g class=\"minimums\">\n    <polygon class=\"minimum\" fill=\"none\" "
           "stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" points=\"";
    for (size_t d = 0; d < dims; ++d) {
      const Axis dir = axis_direction(d, dims);
      const double r = radius * weights.minimum_for(rubric.dimensions[d].id).to_double() /
                       max_level;
      if (d > 0) svg << " ";
      svg << fmt(cx + r * dir.dx) << "," << fmt(cy + r * dir.dy);
    }
    svg << "\"/>\n  </g>\n";
  }

  svg << "  <g class=\"series-group\">\n";
  for (size_t s = 0; s < assessments.size(); ++s) {
    const Assessment& a = assessments[s];
    const char* color = kPalette[s % 8];
    std::ostringstream points;
    for (size_t d = 0; d < dims; ++d) {
      const Axis dir = axis_direction(d, dims);
      const DimensionScore* score = a.find_score(rubric.dimensions[d].id);
      if (!score) {
        throw ContractViolation("assessment lacks a score for dimension '" +
                                rubric.dimensions[d].id + "'");
      }
      const double r = radius * score->score.to_double() / max_level;
      if (d > 0) points << " ";
      points << fmt(cx + r * dir.dx) << "," << fmt(cy + r * dir.dy);
    }
    const std::string label = a.target.label.empty() ? a.target.identifier : a.target.label;
    svg << "    <polygon class=\"series\" data-label=\"" << escape_xml(label)
        << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"" << points.str() << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g class=\"legend\" font-size=\"12\">\n";
  for (size_t s = 0; s < assessments.size(); ++s) {
    const Assessment& a = assessments[s];
    const std::string label = a.target.label.empty() ? a.target.identifier : a.target.label;
    const double y = 18 + 18 * static_cast<double>(s);
    svg << "    <rect x=\"12\" y=\"" << fmt(y - 10) << "\" width=\"12\" height=\"12\" fill=\""
        << kPalette[s % 8] << "\"/>\n";
    svg << "    <text class=\"legend-label\" x=\"30\" y=\"" << fmt(y) << "\">"
        << escape_xml(label) << "</text>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";

  result.svg = svg.str();
  return result;
}

}  // namespace qind
