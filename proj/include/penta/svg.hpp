#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <unordered_set>

#include "penta/model_set.hpp"

namespace penta {

struct RenderOptions {
  int canvas = 1000;
  double dot_radius = 3.0;
  double highlight_radius = 10.0;
  /// Ring 0 and the fifth roots of unity.
  bool highlight_roots = false;
  /// Colour dots by nearest-neighbour class instead of plain black.
  bool color_classes = false;
};

namespace detail {

inline std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string_view class_colour(DistClass c) {
  switch (c) {
    case DistClass::Short: return "#1f77b4";
    case DistClass::Long: return "#2ca02c";
    case DistClass::Other: return "#d62728";
    case DistClass::Unknown: break;
  }
  return "#9a9a9a";
}

}  // namespace detail

/// Canvas position of a physical-plane point: the disc of radius R fills
/// the canvas, y points up.
struct CanvasMap {
  double centre;
  double scale;

  explicit CanvasMap(const Snapshot& snap, int canvas) : centre(canvas / 2.0) {
    const double r = std::sqrt(snap.radius_sq.to_double());
    scale = r > 0.0 ? centre / r : centre;
  }
  double cx(double x) const { return centre + scale * x; }
  double cy(double y) const { return centre - scale * y; }
};

/// SVG 1.1 document with one dot per point, in snapshot order, followed by
/// the highlight rings. Output is a pure function of the inputs.
inline std::string render_svg(const Snapshot& snap, const RenderOptions& opts = {}) {
  using detail::fixed;
  const CanvasMap map(snap, opts.canvas);
  const std::string size = std::to_string(opts.canvas);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + ' ' + size + "\">\n";
  out += "<desc>radius_sq=" + snap.radius_sq.str() + " window_sq=" + snap.window.w().str() + "</desc>\n";
  out += "<rect width=\"" + size + "\" height=\"" + size + "\" fill=\"white\"/>\n";
  out += "<g id=\"points\">\n";
  for (const auto& p : snap.points) {
    const std::string_view colour = opts.color_classes ? detail::class_colour(p.dist_class) : "black";
    out += "<circle class=\"point " + std::string(to_string(p.dist_class)) + "\" cx=\"" + fixed(map.cx(p.x)) +
           "\" cy=\"" + fixed(map.cy(p.y)) + "\" r=\"" + fixed(opts.dot_radius) + "\" fill=\"" +
           std::string(colour) + "\"/>\n";
  }
  out += "</g>\n";
  if (opts.highlight_roots) {
    std::unordered_set<CycInt> present;
    for (const auto& p : snap.points) present.insert(p.z);
    out += "<g id=\"highlights\">\n";
    std::vector<CycInt> targets{CycInt()};
    for (int k = 0; k < 5; ++k) targets.push_back(CycInt::zeta_pow(k));
    for (const auto& z : targets) {
      if (!present.contains(z)) continue;
      const auto xy = embed_approx(z, Embedding::physical);
      out += "<circle class=\"highlight\" cx=\"" + fixed(map.cx(xy.real())) + "\" cy=\"" +
             fixed(map.cy(xy.imag())) + "\" r=\"" + fixed(opts.highlight_radius) +
             "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace penta
