#ifndef MATCHPOINT_PRESENTATION_HPP
#define MATCHPOINT_PRESENTATION_HPP

#include <cmath>

namespace matchpoint {

/// Half-up rounding to `decimals` places; internal values stay unrounded,
/// this is presentation only.
inline double round_half_up(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::floor(value * scale + 0.5) / scale;
}

/// A probability as a percentage rounded to two decimals.
inline double as_pct(double probability) { return round_half_up(100.0 * probability, 2); }

}  // namespace matchpoint

#endif
