#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opinion/report.hpp"

namespace opinion::svg {

struct Bar {
  std::string label;
  double value = 0.0;
  std::string color;
};

struct Wedge {
  std::size_t index = 0;  // position in the input
  double start_deg = 0.0;  // clockwise from 12 o'clock
  double sweep_deg = 0.0;
};

// Wedge angles proportional to the values. Zero values get no wedge; an
// all-zero input gives no wedges at all.
std::vector<Wedge> pie_wedges(const std::vector<double>& values);

std::string bar_chart(std::string_view title, const std::vector<Bar>& bars,
                      std::string_view y_label);
// Horizontal bars, used for word rankings.
std::string hbar_chart(std::string_view title, const std::vector<Bar>& bars);
std::string pie_chart(std::string_view title, const std::vector<Bar>& slices);

// File name -> SVG text for every plot of a report (13 files).
std::map<std::string, std::string> render_plots(const AnalysisReport& report);
// Writes render_plots() into dir; throws OutputNotWritable.
std::vector<std::filesystem::path> write_plots(const AnalysisReport& report,
                                               const std::filesystem::path& dir);

std::string xml_escape(std::string_view s);

}  // namespace opinion::svg
