#include "kherd/svg.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace kherd {

namespace {

// Okabe-Ito-ish 10-colour palette, stable across releases.
constexpr const char* kPalette[10] = {
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee",
    "#aa3377", "#bbbbbb", "#e69f00", "#009e73", "#cc79a7"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_scatter_svg(const Dataset& dataset,
                               std::span<const Index> selected,
                               const SvgOptions& options) {
  if (dataset.d() != 2) {
    throw std::invalid_argument("viz requires 2-D data");
  }
  if (selected.empty()) {
    throw std::invalid_argument("selection is empty");
  }
  for (const Index i : selected) {
    if (i < 0 || i >= dataset.n()) {
      throw std::invalid_argument("selected index out of range");
    }
  }
  if (options.width < 10 || options.height < 10) {
    throw std::invalid_argument("viewport too small");
  }

  const auto& f = dataset.features;
  double xmin = f.col(0).minCoeff(), xmax = f.col(0).maxCoeff();
  double ymin = f.col(1).minCoeff(), ymax = f.col(1).maxCoeff();
  const double xpad = (xmax > xmin) ? 0.05 * (xmax - xmin) : 1.0;
  const double ypad = (ymax > ymin) ? 0.05 * (ymax - ymin) : 1.0;
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;

  const double w = static_cast<double>(options.width);
  const double h = static_cast<double>(options.height);
  const auto px = [&](double x) { return (x - xmin) / (xmax - xmin) * w; };
  const auto py = [&](double y) {
    return h - (y - ymin) / (ymax - ymin) * h;  // SVG y grows downward
  };

  const auto fill_for = [&](Index i) -> std::string {
    if (!dataset.labels) return "#9e9e9e";
    const auto label = (*dataset.labels)[static_cast<std::size_t>(i)];
    return kPalette[static_cast<std::size_t>(
        ((label % 10) + 10) % 10)];
  };

  std::vector<char> is_selected(static_cast<std::size_t>(dataset.n()), 0);
  for (const Index i : selected) is_selected[static_cast<std::size_t>(i)] = 1;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" viewBox=\"0 0 " +
         std::to_string(options.width) + " " + std::to_string(options.height) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (Index i = 0; i < dataset.n(); ++i) {
    if (is_selected[static_cast<std::size_t>(i)]) continue;
    svg += "<circle cx=\"" + fmt(px(f(i, 0))) + "\" cy=\"" + fmt(py(f(i, 1))) +
           "\" r=\"2\" fill=\"" + fill_for(i) + "\" fill-opacity=\"0.5\"/>\n";
  }
  for (Index i = 0; i < dataset.n(); ++i) {
    if (!is_selected[static_cast<std::size_t>(i)]) continue;
    svg += "<circle class=\"selected\" cx=\"" + fmt(px(f(i, 0))) + "\" cy=\"" +
           fmt(py(f(i, 1))) + "\" r=\"5\" fill=\"" + fill_for(i) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace kherd
