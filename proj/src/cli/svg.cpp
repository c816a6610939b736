#include "gibbs/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace gibbs::cli {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 60.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

void open_svg(std::ostream& out, double width, double height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string series_label(const SweepRow& row) {
  std::ostringstream s;
  s << row.model << " kappa0=" << row.kappa0;
  if (!std::isnan(row.gamma) && (row.model == "strauss" || row.model == "strauss-hard-core")) {
    s << " gamma=" << row.gamma;
  }
  return s.str();
}

}  // namespace

void write_sample_svg(std::ostream& out, const SampleTable& table, double r) {
  const double plot = kCanvas - 2.0 * kMargin;
  open_svg(out, kCanvas, kCanvas);
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << plot
      << "\" height=\"" << plot << "\" fill=\"none\" stroke=\"black\"/>\n";
  auto sx = [&](double x) { return kMargin + x * plot; };
  auto sy = [&](double y) { return kMargin + (1.0 - y) * plot; };

  out << "<g stroke-width=\"1\">\n";
  for (const auto& p : table.points) {
    const double y = table.dim >= 2 ? p.x[1] : 0.5;
    const bool type2 = p.mark == 2;
    const char* fill = type2 ? "#d62728" : "none";
    const char* stroke = type2 ? "#d62728" : "#1f77b4";
    out << "<circle class=\"" << (type2 ? "type2" : "type1") << "\" cx=\"" << sx(p.x[0])
        << "\" cy=\"" << sy(y) << "\" r=\"" << r * plot << "\" fill=\"" << fill
        << "\" fill-opacity=\"0.3\" stroke=\"" << stroke << "\"/>\n";
    out << "<circle cx=\"" << sx(p.x[0]) << "\" cy=\"" << sy(y) << "\" r=\"2\" fill=\"" << stroke
        << "\"/>\n";
  }
  out << "</g>\n";
  out << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 20 << "\" font-size=\"14\">"
      << table.points.size() << " points, r = " << r << "</text>\n";
  out << "</svg>\n";
}

void write_sweep_svg(std::ostream& out, const SweepResult& result) {
  const double width = kCanvas + 200.0;
  const double plot_w = kCanvas - 2.0 * kMargin;
  const double plot_h = kCanvas - 2.0 * kMargin;
  open_svg(out, width, kCanvas);

  double k_min = 1.0, k_max = 2.0, y_max = 1.0;
  if (!result.rows.empty()) {
    k_min = k_max = result.rows.front().cells_per_axis;
    for (const auto& row : result.rows) {
      k_min = std::min<double>(k_min, row.cells_per_axis);
      k_max = std::max<double>(k_max, row.cells_per_axis);
      y_max = std::max(y_max, row.mean_iterations + row.standard_error);
    }
  }
  if (k_max <= k_min) k_max = k_min * 2.0;
  y_max *= 1.1;
  const double lx0 = std::log(k_min), lx1 = std::log(k_max);
  auto sx = [&](double k) { return kMargin + (std::log(k) - lx0) / (lx1 - lx0) * plot_w; };
  auto sy = [&](double y) { return kMargin + (1.0 - y / y_max) * plot_h; };

  out << "<g stroke=\"black\" fill=\"none\">\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << sy(0) << "\" x2=\"" << kMargin + plot_w
      << "\" y2=\"" << sy(0) << "\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << sy(0) << "\" x2=\"" << kMargin << "\" y2=\""
      << kMargin << "\"/>\n</g>\n";
  out << "<g font-size=\"12\" text-anchor=\"middle\">\n";
  std::map<int, bool> ticks;
  for (const auto& row : result.rows) ticks[row.cells_per_axis] = true;
  for (const auto& [k, unused] : ticks) {
    out << "<text x=\"" << sx(k) << "\" y=\"" << sy(0) + 18 << "\">" << k << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double y = y_max * i / 4.0;
    out << "<text x=\"" << kMargin - 25 << "\" y=\"" << sy(y) + 4 << "\">"
        << std::round(y * 10.0) / 10.0 << "</text>\n";
  }
  out << "<text x=\"" << kMargin + plot_w / 2 << "\" y=\"" << kCanvas - 15
      << "\">K (log scale)</text>\n"
      << "<text x=\"15\" y=\"" << kMargin + plot_h / 2 << "\" transform=\"rotate(-90 15 "
      << kMargin + plot_h / 2 << ")\">mean iterations</text>\n</g>\n";

  std::map<std::string, std::vector<const SweepRow*>> series;
  std::vector<std::string> order;
  for (const auto& row : result.rows) {
    const auto label = series_label(row);
    if (!series.count(label)) order.push_back(label);
    series[label].push_back(&row);
  }
  for (std::size_t s = 0; s < order.size(); ++s) {
    const char* colour = kPalette[s % std::size(kPalette)];
    auto rows = series[order[s]];
    std::sort(rows.begin(), rows.end(),
              [](const auto* a, const auto* b) { return a->cells_per_axis < b->cells_per_axis; });
    out << "<g stroke=\"" << colour << "\" fill=\"" << colour << "\">\n<polyline fill=\"none\" points=\"";
    for (const auto* row : rows) out << sx(row->cells_per_axis) << ',' << sy(row->mean_iterations) << ' ';
    out << "\"/>\n";
    for (const auto* row : rows) {
      const double x = sx(row->cells_per_axis);
      out << "<line x1=\"" << x << "\" y1=\"" << sy(row->mean_iterations - row->standard_error)
          << "\" x2=\"" << x << "\" y2=\"" << sy(row->mean_iterations + row->standard_error)
          << "\"/>\n<circle cx=\"" << x << "\" cy=\"" << sy(row->mean_iterations)
          << "\" r=\"3\"/>\n";
    }
    out << "<text stroke=\"none\" font-size=\"12\" x=\"" << kCanvas - 20 << "\" y=\""
        << kMargin + 18.0 * s << "\">" << order[s] << "</text>\n</g>\n";
  }
  out << "</svg>\n";
}

}  // namespace gibbs::cli
