#include "tranent/plot.hpp"

#include <cstdio>

#include "tranent/error.hpp"

namespace tranent {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double x0, x1, y0, y1;
  int size;
  int margin = 40;

  double px(double x) const { return margin + (x - x0) / (x1 - x0) * (size - 2 * margin); }
  double py(double y) const { return size - margin - (y - y0) / (y1 - y0) * (size - 2 * margin); }
};

}  // namespace

std::string render_plot(const Dynamics& f, const Interval& window, int iterate, const PlotOptions& opts) {
  if (iterate < 1) throw Error(ErrorCode::InvalidArgument, "iterate must be positive");
  if (window.is_point()) throw Error(ErrorCode::InvalidArgument, "plot window must have positive length");
  const auto clipped = f.domain().clip(window);
  if (!clipped || clipped->is_point()) throw Error(ErrorCode::OutOfDomain, "window misses the domain");
  const Interval w = *clipped;

  // Sub-windows that stay clear of accumulation points.
  const Rational cut = pow2(-(opts.tile_cutoff + 1));
  std::vector<Rational> marks;
  IntervalUnion parts{w};
  for (const auto& a : f.accumulation_points()) {
    if (!w.contains(a)) continue;
    marks.push_back(a);
    IntervalUnion next;
    for (const auto& p : parts) {
      if (p.hi <= a - cut || p.lo >= a + cut) {
        next.push_back(p);
        continue;
      }
      if (p.lo < a - cut) next.push_back(Interval(p.lo, a - cut));
      if (p.hi > a + cut) next.push_back(Interval(a + cut, p.hi));
    }
    parts = std::move(next);
  }

  std::vector<PLMap> graphs;
  for (const auto& p : parts) {
    for (auto& g : partial_iterate(f, p, iterate)) graphs.push_back(std::move(g));
  }
  std::vector<Interval> fixed;
  for (const auto& g : graphs) {
    for (const auto& c : fixed_points(g)) fixed.push_back(c);
  }
  std::vector<std::pair<Rational, Rational>> accum;
  for (const auto& a : marks) {
    const Rational v = f.eval_n(a, iterate);
    accum.push_back({a, v});
  }

  Interval ys = w;
  for (const auto& g : graphs) ys = hull(ys, range(g));
  for (const auto& [a, v] : accum) ys = hull(ys, Interval(v, v));
  const Frame fr{to_double(w.lo), to_double(w.hi), to_double(ys.lo), to_double(ys.hi), opts.size};

  std::string out;
  const std::string n = std::to_string(opts.size);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + n + "\" height=\"" + n +
         "\" viewBox=\"0 0 " + n + " " + n + "\">\n";
  out += "<title>" + f.id() + (iterate > 1 ? "^" + std::to_string(iterate) : "") + " on " + to_string(w) +
         "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + n + "\" height=\"" + n + "\" fill=\"white\"/>\n";

  auto line = [&](double xa, double ya, double xb, double yb, const std::string& style) {
    out += "<line x1=\"" + fmt(xa) + "\" y1=\"" + fmt(ya) + "\" x2=\"" + fmt(xb) + "\" y2=\"" + fmt(yb) + "\" " +
           style + "/>\n";
  };
  // Axes through the origin when it is in view, else along the frame.
  const double ax = (fr.x0 <= 0 && 0 <= fr.x1) ? fr.px(0) : fr.px(fr.x0);
  const double ay = (fr.y0 <= 0 && 0 <= fr.y1) ? fr.py(0) : fr.py(fr.y0);
  line(fr.px(fr.x0), ay, fr.px(fr.x1), ay, "stroke=\"gray\" stroke-width=\"1\"");
  line(ax, fr.py(fr.y0), ax, fr.py(fr.y1), "stroke=\"gray\" stroke-width=\"1\"");
  const double d0 = std::max(fr.x0, fr.y0), d1 = std::min(fr.x1, fr.y1);
  if (d0 < d1) line(fr.px(d0), fr.py(d0), fr.px(d1), fr.py(d1), "stroke=\"gray\" stroke-dasharray=\"4 4\"");

  for (const auto& g : graphs) {
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& node : g.nodes()) {
      if (!first) out += " ";
      first = false;
      out += fmt(fr.px(to_double(node.x))) + "," + fmt(fr.py(to_double(node.y)));
    }
    out += "\"/>\n";
  }
  for (const auto& c : fixed) {
    if (!c.is_point()) {
      line(fr.px(to_double(c.lo)), fr.py(to_double(c.lo)), fr.px(to_double(c.hi)), fr.py(to_double(c.hi)),
           "stroke=\"red\" stroke-width=\"3\"");
    }
    out += "<circle cx=\"" + fmt(fr.px(to_double(c.lo))) + "\" cy=\"" + fmt(fr.py(to_double(c.lo))) +
           "\" r=\"3\" fill=\"red\"/>\n";
  }
  for (const auto& [a, v] : accum) {
    const double x = fr.px(to_double(a)), y = fr.py(to_double(v));
    out += "<rect x=\"" + fmt(x - 4) + "\" y=\"" + fmt(y - 4) +
           "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + fmt(x + 6) + "\" y=\"" + fmt(y - 6) +
           "\" font-size=\"11\" fill=\"blue\">accumulation point, tiles |k| &lt;= " +
           std::to_string(opts.tile_cutoff) + " drawn</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tranent
