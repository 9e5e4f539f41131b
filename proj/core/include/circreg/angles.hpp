#ifndef CIRCREG_ANGLES_HPP
#define CIRCREG_ANGLES_HPP

#include <cstddef>
#include <span>

namespace circreg {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Resultant lengths below this are treated as a vanished mean direction.
inline constexpr double kResultantTol = 1e-12;

/// Wrap an angle to (-pi, pi]. Values already inside are returned unchanged.
double wrap_pi(double theta);

/// Wrap an angle to [0, 2*pi). Values already inside are returned unchanged.
double wrap_2pi(double theta);

/// Signed circular difference a - b, wrapped to (-pi, pi].
double signed_diff(double a, double b);

/// Cosine loss 1 - cos(a - b), in [0, 2]. Invariant to 2*pi shifts of either argument.
double cos_loss(double a, double b);

/// Mean direction and mean resultant length of a sample of angles.
struct CircSummary {
  double mean_direction = 0.0; ///< meaningful only when direction_defined
  double resultant_length = 0.0;
  std::size_t n = 0;
  bool direction_defined = false;
};

/// atan2 of averaged sines/cosines. Throws std::invalid_argument on an empty list.
/// An (anti-)symmetric sample cancels to resultant 0; that is flagged, not an error.
CircSummary circ_mean(std::span<const double> angles);

} // namespace circreg

#endif
