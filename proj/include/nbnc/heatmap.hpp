#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "nbnc/experiment.hpp"

namespace nbnc {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
  std::string hex() const;  // "#RRGGBB"
};

inline constexpr Rgb kHeatLow{0x63, 0xBE, 0x7B};   // green, smallest fraction
inline constexpr Rgb kHeatMid{0xFF, 0xEB, 0x84};   // yellow
inline constexpr Rgb kHeatHigh{0xF8, 0x69, 0x6B};  // red, largest fraction

/// Green at t = 0, yellow at 0.5, red at 1; t is clamped to [0, 1].
Rgb heat_color(double t);

/// Standalone SVG table of avg_infected_fraction. Rows are (beta, mu, lambda)
/// conditions, columns are network x strategy, both in first-seen order.
/// Colors are scaled over the whole input; when every value is equal all
/// cells are green. Throws ArgumentError on empty input.
void write_heatmap_svg(std::ostream& out, std::span<const SweepRecord> records);

}  // namespace nbnc
