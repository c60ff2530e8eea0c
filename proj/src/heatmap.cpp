#include "nbnc/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <vector>

#include "nbnc/error.hpp"

namespace nbnc {

namespace {

constexpr int kLabelWidth = 190;
constexpr int kHeaderHeight = 44;
constexpr int kCellWidth = 84;
constexpr int kCellHeight = 22;

std::uint8_t lerp(std::uint8_t a, std::uint8_t b, double t) {
  return static_cast<std::uint8_t>(std::lround(a + (static_cast<double>(b) - a) * t));
}

Rgb blend(Rgb a, Rgb b, double t) { return {lerp(a.r, b.r, t), lerp(a.g, b.g, t), lerp(a.b, b.b, t)}; }

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
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

std::string format(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

struct Column {
  std::string network;
  Strategy strategy;
  bool operator==(const Column&) const = default;
};

template <typename T>
std::size_t index_of(std::vector<T>& items, const T& item) {
  auto it = std::find(items.begin(), items.end(), item);
  if (it != items.end()) return static_cast<std::size_t>(it - items.begin());
  items.push_back(item);
  return items.size() - 1;
}

}  // namespace

std::string Rgb::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02X%02X%02X", r, g, b);
  return buf;
}

Rgb heat_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  if (t <= 0.5) return blend(kHeatLow, kHeatMid, t * 2.0);
  return blend(kHeatMid, kHeatHigh, (t - 0.5) * 2.0);
}

void write_heatmap_svg(std::ostream& out, std::span<const SweepRecord> records) {
  if (records.empty()) throw ArgumentError("heat map needs at least one record");

  std::vector<ConditionKey> rows;
  std::vector<Column> columns;
  std::vector<std::vector<std::optional<double>>> grid;
  double lo = records.front().avg_infected_fraction;
  double hi = lo;
  for (const auto& r : records) {
    std::size_t row = index_of(rows, ConditionKey{r.beta, r.mu, r.lambda});
    std::size_t col = index_of(columns, Column{r.network, r.strategy});
    if (grid.size() <= row) grid.resize(row + 1);
    if (grid[row].size() <= col) grid[row].resize(col + 1);
    grid[row][col] = r.avg_infected_fraction;
    lo = std::min(lo, r.avg_infected_fraction);
    hi = std::max(hi, r.avg_infected_fraction);
  }

  const int width = kLabelWidth + kCellWidth * static_cast<int>(columns.size());
  const int height = kHeaderHeight + kCellHeight * static_cast<int>(rows.size());
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<style>text { font-family: sans-serif; font-size: 11px; }"
         " .cell { stroke: #FFFFFF; stroke-width: 1; }</style>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#FFFFFF\"/>\n";

  out << "<text x=\"6\" y=\"" << kHeaderHeight - 8 << "\">beta / mu / lambda</text>\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    int cx = kLabelWidth + static_cast<int>(c) * kCellWidth + kCellWidth / 2;
    out << "<text x=\"" << cx << "\" y=\"" << kHeaderHeight - 22
        << "\" text-anchor=\"middle\">" << escape_xml(columns[c].network) << "</text>\n"
        << "<text x=\"" << cx << "\" y=\"" << kHeaderHeight - 8
        << "\" text-anchor=\"middle\">" << to_string(columns[c].strategy) << "</text>\n";
  }

  for (std::size_t r = 0; r < rows.size(); ++r) {
    int y = kHeaderHeight + static_cast<int>(r) * kCellHeight;
    out << "<text x=\"6\" y=\"" << y + kCellHeight - 7 << "\">" << format("%.2f", rows[r].beta)
        << " / " << format("%.2f", rows[r].mu) << " / " << format("%.2f", rows[r].lambda)
        << "</text>\n";
    for (std::size_t c = 0; c < columns.size(); ++c) {
      int x = kLabelWidth + static_cast<int>(c) * kCellWidth;
      std::string fill = "#DDDDDD";
      std::string label = "NA";
      if (c < grid[r].size() && grid[r][c].has_value()) {
        double value = grid[r][c].value();
        double t = hi > lo ? (value - lo) / (hi - lo) : 0.0;
        fill = heat_color(t).hex();
        label = format("%.3f", value);
      }
      out << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCellWidth
          << "\" height=\"" << kCellHeight << "\" fill=\"" << fill << "\"/>\n"
          << "<text x=\"" << x + kCellWidth / 2 << "\" y=\"" << y + kCellHeight - 7
          << "\" text-anchor=\"middle\">" << label << "</text>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace nbnc
