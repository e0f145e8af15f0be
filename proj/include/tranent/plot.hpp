#pragma once

#include <string>

#include "tranent/dynamics.hpp"

namespace tranent {

struct PlotOptions {
  /// Around an accumulation point a the window is cut at distance
  /// 2^-(tile_cutoff+1), i.e. dyadic tiles |k| <= tile_cutoff are drawn.
  int tile_cutoff = 12;
  int size = 600;
};

/// SVG 1.1 graph of f^iterate on the window: a polyline through every exact
/// breakpoint, the diagonal, axes, and the fixed points of f^iterate. Near
/// accumulation points the graph is clipped and a marker is drawn.
std::string render_plot(const Dynamics& f, const Interval& window, int iterate, const PlotOptions& opts = {});

}  // namespace tranent
