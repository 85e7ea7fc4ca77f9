#include <algorithm>
#include <cstdio>
#include <string>

#include "braidwp/error.hpp"
#include "braidwp/path_codec.hpp"

namespace braidwp {

namespace {

constexpr double kSpacing = 60.0;
constexpr double kMargin = 40.0;
constexpr double kAxisY = 120.0;
constexpr double kOffset = 18.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string render_svg(std::span<const PathList> paths) {
  if (paths.empty()) throw ValidationError("nothing to render");
  const int n = paths.front().punctures();
  const double width = 2 * kMargin + (n + 1) * kSpacing;
  const double height = kAxisY + 2 * kOffset + 80.0;
  const double ux = width / 2;
  const double uy = height - 20.0;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <line x1=\"" + num(kMargin) + "\" y1=\"" + num(kAxisY) + "\" x2=\"" +
         num(width - kMargin) + "\" y2=\"" + num(kAxisY) +
         "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";

  auto x_of = [&](int point) { return kMargin + point * kSpacing; };

  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& path = paths[k];
    if (auto v = validate_path(path); !v.empty()) {
      throw ValidationError("path " + std::to_string(k + 1) + ", link " +
                            std::to_string(v.front().index) + ": " + v.front().what);
    }
    // nested offsets keep the paths of one g-base apart
    const double spread = kOffset * (1.0 + 0.15 * static_cast<double>(k));
    std::string pts;
    for (const Link l : path.links()) {
      double x = ux;
      double y = uy;
      if (!l.is_base()) {
        x = x_of(l.point);
        y = kAxisY - l.position * spread;
      }
      if (!pts.empty()) pts += ' ';
      pts += num(x) + "," + num(y);
    }
    const char* colour = kPalette[k % std::size(kPalette)];
    svg += "  <polyline class=\"path\" fill=\"none\" stroke=\"" + std::string(colour) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    const int t = path.terminal_point();
    if (t >= 1) {
      svg += "  <circle class=\"terminal\" cx=\"" + num(x_of(t)) + "\" cy=\"" + num(kAxisY) +
             "\" r=\"9\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"1.5\"/>\n";
    }
  }

  for (int i = 1; i <= n; ++i) {
    svg += "  <circle class=\"puncture\" cx=\"" + num(x_of(i)) + "\" cy=\"" + num(kAxisY) +
           "\" r=\"4\" fill=\"black\"/>\n";
    svg += "  <text x=\"" + num(x_of(i)) + "\" y=\"" + num(kAxisY - 2.5 * kOffset) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(i) + "</text>\n";
  }
  svg += "  <circle class=\"base\" cx=\"" + num(ux) + "\" cy=\"" + num(uy) +
         "\" r=\"4\" fill=\"black\"/>\n";
  svg += "  <text x=\"" + num(ux + 8) + "\" y=\"" + num(uy + 4) +
         "\" font-size=\"12\">u</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace braidwp
