#include "circreg/special.hpp"

#include <cmath>
#include <stdexcept>

namespace circreg {

namespace {

// Direct power series for I_nu, nu a small nonneg integer. Fine up to
// kappa ~ 700 before overflow; we only use it below 50.
double bessel_i_series(int nu, double kappa) {
  const double half = kappa / 2.0;
  double term = 1.0;
  for (int j = 1; j <= nu; ++j) {
    term *= half / static_cast<double>(j);
  }
  double sum = term;
  const double half_sq = half * half;
  for (int m = 1; m < 512; ++m) {
    term *= half_sq / (static_cast<double>(m) * static_cast<double>(m + nu));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

// Truncated asymptotic series for e^{-kappa} sqrt(2 pi kappa) I_nu(kappa).
double bessel_asym_factor(int nu, double kappa) {
  const double mu = 4.0 * static_cast<double>(nu) * static_cast<double>(nu);
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j <= 8; ++j) {
    term *= -(mu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * kappa * j);
    sum += term;
  }
  return sum;
}

} // namespace

double bessel_i_ratio(int nu, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("bessel_i_ratio: kappa must be positive and finite");
  }
  if (nu != 1 && nu != 2) {
    throw std::invalid_argument("bessel_i_ratio: nu must be 1 or 2");
  }
  if (kappa <= 50.0) {
    return bessel_i_series(nu, kappa) / bessel_i_series(0, kappa);
  }
  return bessel_asym_factor(nu, kappa) / bessel_asym_factor(0, kappa);
}

double log_bessel_i0(double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("log_bessel_i0: kappa must be nonnegative and finite");
  }
  if (kappa <= 50.0) {
    return std::log(bessel_i_series(0, kappa));
  }
  // I0(k) ~ e^k / sqrt(2 pi k) * factor
  return kappa - 0.5 * std::log(2.0 * 3.14159265358979323846 * kappa) +
         std::log(bessel_asym_factor(0, kappa));
}

} // namespace circreg
