#include "opinion/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "opinion/error.hpp"

namespace opinion::svg {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;

const char* label_color(PolarityLabel l) {
  switch (l) {
    case PolarityLabel::negative: return "#c0392b";
    case PolarityLabel::neutral: return "#95a5a6";
    case PolarityLabel::positive: return "#27ae60";
  }
  return "#95a5a6";
}

std::string header(double w, double h, std::string_view title) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
      "viewBox=\"0 0 {0:.0f} {1:.0f}\" font-family=\"sans-serif\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0:.0f}\" height=\"{1:.0f}\" fill=\"#ffffff\"/>\n"
      "<text x=\"{2:.3f}\" y=\"24\" font-size=\"16\" text-anchor=\"middle\">{3}</text>\n",
      w, h, w / 2.0, xml_escape(title));
}

// Count-like values print without decimals.
std::string value_text(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) return fmt::format("{:.0f}", v);
  return fmt::format("{:.3f}", v);
}

std::pair<double, double> point_at(double cx, double cy, double r, double deg) {
  double rad = (deg - 90.0) * kPi / 180.0;
  return {cx + r * std::cos(rad), cy + r * std::sin(rad)};
}

std::string distribution_name(Engine e, std::string_view kind) {
  return fmt::format("distribution_{}_{}.svg", to_string(e), kind);
}

std::vector<Bar> distribution_bars(const DistributionReport& d, bool proportions) {
  std::vector<Bar> bars;
  for (auto l : {PolarityLabel::positive, PolarityLabel::neutral, PolarityLabel::negative}) {
    bars.push_back({std::string(to_string(l)),
                    proportions ? d.proportion(l) : static_cast<double>(d.count(l)),
                    label_color(l)});
  }
  return bars;
}

}  // namespace

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::vector<Wedge> pie_wedges(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) total += std::max(v, 0.0);
  std::vector<Wedge> out;
  if (!(total > 0.0)) return out;
  double start = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) continue;
    double sweep = 360.0 * values[i] / total;
    out.push_back({i, start, sweep});
    start += sweep;
  }
  return out;
}

std::string bar_chart(std::string_view title, const std::vector<Bar>& bars,
                      std::string_view y_label) {
  const double left = 70.0, right = 20.0, top = 50.0, bottom = 60.0;
  const double plot_w = kWidth - left - right;
  const double plot_h = kHeight - top - bottom;
  const double base_y = top + plot_h;
  double max_v = 0.0;
  for (const auto& b : bars) max_v = std::max(max_v, b.value);
  const double scale = max_v > 0.0 ? plot_h / max_v : 0.0;

  std::string s = header(kWidth, kHeight, title);
  s += fmt::format(
      "<line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{0:.3f}\" y2=\"{2:.3f}\" stroke=\"#333333\"/>\n",
      left, top, base_y);
  s += fmt::format(
      "<line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\" stroke=\"#333333\"/>\n",
      left, base_y, left + plot_w);
  s += fmt::format(
      "<text x=\"18\" y=\"{0:.3f}\" font-size=\"12\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 18 {0:.3f})\">{1}</text>\n",
      top + plot_h / 2.0, xml_escape(y_label));
  s += fmt::format(
      "<text x=\"{0:.3f}\" y=\"{1:.3f}\" font-size=\"10\" text-anchor=\"end\">{2}</text>\n",
      left - 6.0, top + 4.0, value_text(max_v));
  s += fmt::format(
      "<text x=\"{0:.3f}\" y=\"{1:.3f}\" font-size=\"10\" text-anchor=\"end\">0</text>\n",
      left - 6.0, base_y + 4.0);

  if (!bars.empty()) {
    const double slot = plot_w / static_cast<double>(bars.size());
    const double bw = slot * 0.7;
    for (std::size_t i = 0; i < bars.size(); ++i) {
      const auto& b = bars[i];
      double h = b.value * scale;
      double x = left + slot * static_cast<double>(i) + (slot - bw) / 2.0;
      s += fmt::format(
          "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n", x,
          base_y - h, bw, h, b.color);
      s += fmt::format(
          "<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"10\" text-anchor=\"middle\">{}</text>\n",
          x + bw / 2.0, base_y - h - 4.0, value_text(b.value));
      s += fmt::format(
          "<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
          x + bw / 2.0, base_y + 16.0, xml_escape(b.label));
    }
  }
  s += "</svg>\n";
  return s;
}

std::string hbar_chart(std::string_view title, const std::vector<Bar>& bars) {
  const double left = 130.0, right = 50.0, top = 44.0, row = 18.0;
  const double height = std::max(120.0, top + row * static_cast<double>(bars.size()) + 20.0);
  const double plot_w = kWidth - left - right;
  double max_v = 0.0;
  for (const auto& b : bars) max_v = std::max(max_v, b.value);
  const double scale = max_v > 0.0 ? plot_w / max_v : 0.0;

  std::string s = header(kWidth, height, title);
  if (bars.empty()) {
    s += fmt::format(
        "<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"14\" text-anchor=\"middle\" "
        "fill=\"#888888\">no words</text>\n",
        kWidth / 2.0, height / 2.0 + 10.0);
  }
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& b = bars[i];
    double y = top + row * static_cast<double>(i);
    double w = b.value * scale;
    s += fmt::format(
        "<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
        left - 6.0, y + row * 0.7, xml_escape(b.label));
    s += fmt::format(
        "<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n", left,
        y + 2.0, w, row - 4.0, b.color);
    s += fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"10\">{}</text>\n",
                     left + w + 4.0, y + row * 0.7, value_text(b.value));
  }
  s += "</svg>\n";
  return s;
}

std::string pie_chart(std::string_view title, const std::vector<Bar>& slices) {
  const double cx = 240.0, cy = 215.0, r = 150.0;
  std::vector<double> values;
  for (const auto& b : slices) values.push_back(b.value);
  auto wedges = pie_wedges(values);

  std::string s = header(kWidth, kHeight, title);
  if (wedges.empty()) {
    s += fmt::format(
        "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"none\" stroke=\"#bbbbbb\" "
        "stroke-dasharray=\"6 4\"/>\n",
        cx, cy, r);
    s += fmt::format(
        "<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"16\" text-anchor=\"middle\" "
        "fill=\"#888888\">empty</text>\n",
        cx, cy + 6.0);
  } else if (wedges.size() == 1) {
    s += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"{}\"/>\n", cx, cy, r,
                     slices[wedges[0].index].color);
  } else {
    for (const auto& w : wedges) {
      auto [x0, y0] = point_at(cx, cy, r, w.start_deg);
      auto [x1, y1] = point_at(cx, cy, r, w.start_deg + w.sweep_deg);
      s += fmt::format(
          "<path d=\"M {:.3f} {:.3f} L {:.3f} {:.3f} A {:.3f} {:.3f} 0 {} 1 {:.3f} {:.3f} Z\" "
          "fill=\"{}\" stroke=\"#ffffff\"/>\n",
          cx, cy, x0, y0, r, r, w.sweep_deg > 180.0 ? 1 : 0, x1, y1, slices[w.index].color);
    }
  }
  // Legend lists every slice, including empty ones.
  for (std::size_t i = 0; i < slices.size(); ++i) {
    double y = 120.0 + 24.0 * static_cast<double>(i);
    s += fmt::format(
        "<rect x=\"440\" y=\"{:.3f}\" width=\"14\" height=\"14\" fill=\"{}\"/>\n", y,
        slices[i].color);
    s += fmt::format("<text x=\"462\" y=\"{:.3f}\" font-size=\"12\">{} {:.1f}%</text>\n",
                     y + 11.0, xml_escape(slices[i].label),
                     wedges.empty() ? 0.0 : 100.0 * slices[i].value);
  }
  s += "</svg>\n";
  return s;
}

std::map<std::string, std::string> render_plots(const AnalysisReport& report) {
  std::map<std::string, std::string> out;
  for (Engine e : kEngines) {
    const auto& d = report.distribution(e);
    out[distribution_name(e, "bar")] =
        bar_chart(fmt::format("Sentiment distribution ({})", to_string(e)),
                  distribution_bars(d, false), "comments");
    out[distribution_name(e, "pie")] =
        pie_chart(fmt::format("Sentiment distribution ({})", to_string(e)),
                  distribution_bars(d, true));
    for (Side side : kSides) {
      std::vector<Bar> bars;
      const char* color =
          side == Side::positive ? label_color(PolarityLabel::positive)
                                 : label_color(PolarityLabel::negative);
      for (const auto& [word, count] : report.ranking(e, side).entries) {
        bars.push_back({word, static_cast<double>(count), color});
      }
      out[fmt::format("top_{}_{}.svg", to_string(e), to_string(side))] = hbar_chart(
          fmt::format("Top {} words in {} comments ({})", to_string(side), to_string(side),
                      to_string(e)),
          bars);
    }
  }
  const auto& h = report.subjectivity;
  std::vector<Bar> bars;
  for (std::size_t k = 0; k < h.counts.size(); ++k) {
    bars.push_back({fmt::format("{:g}-{:g}", h.bin_edges[k], h.bin_edges[k + 1]),
                    static_cast<double>(h.counts[k]), "#2e86c1"});
  }
  out["subjectivity_histogram.svg"] = bar_chart("Subjectivity (pattern_avg)", bars, "comments");
  return out;
}

std::vector<std::filesystem::path> write_plots(const AnalysisReport& report,
                                               const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::OutputNotWritable, "cannot create '" + dir.string() + "'",
                std::nullopt, dir.string());
  }
  std::vector<std::filesystem::path> written;
  for (const auto& [name, content] : render_plots(report)) {
    auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f) {
      throw Error(ErrorCode::OutputNotWritable, "cannot write '" + path.string() + "'",
                  std::nullopt, path.string());
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace opinion::svg
