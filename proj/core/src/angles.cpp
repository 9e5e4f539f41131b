#include "circreg/angles.hpp"

#include <cmath>
#include <stdexcept>

namespace circreg {

double wrap_pi(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("wrap_pi: non-finite angle");
  }
  if (theta > -kPi && theta <= kPi) {
    return theta;
  }
  double r = std::fmod(theta + kPi, kTwoPi);
  if (r <= 0.0) {
    r += kTwoPi;
  }
  return r - kPi;
}

double wrap_2pi(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("wrap_2pi: non-finite angle");
  }
  if (theta >= 0.0 && theta < kTwoPi) {
    return theta;
  }
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  if (r >= kTwoPi) { // r = -eps can round up to 2*pi
    r = 0.0;
  }
  return r;
}

double signed_diff(double a, double b) {
  return wrap_pi(a - b);
}

double cos_loss(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("cos_loss: non-finite angle");
  }
  // Difference taken through wrap_pi so the loss is insensitive to the
  // wrapping convention of either argument.
  double l = 1.0 - std::cos(wrap_pi(a - b));
  if (l < 0.0) l = 0.0;
  if (l > 2.0) l = 2.0;
  return l;
}

CircSummary circ_mean(std::span<const double> angles) {
  if (angles.empty()) {
    throw std::invalid_argument("circ_mean: empty sample");
  }
  double s = 0.0;
  double c = 0.0;
  for (double a : angles) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("circ_mean: non-finite angle");
    }
    s += std::sin(a);
    c += std::cos(a);
  }
  const double n = static_cast<double>(angles.size());
  s /= n;
  c /= n;

  CircSummary out;
  out.n = angles.size();
  out.resultant_length = std::hypot(s, c);
  if (out.resultant_length > 1.0) out.resultant_length = 1.0;
  out.direction_defined = out.resultant_length > kResultantTol;
  if (out.direction_defined) {
    out.mean_direction = std::atan2(s, c);
    if (out.mean_direction <= -kPi) { // atan2(-0.0, c<0) returns -pi
      out.mean_direction = kPi;
    }
  }
  return out;
}

} // namespace circreg
