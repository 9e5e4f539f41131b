#include "circreg/rng.hpp"

#include "circreg/angles.hpp"

#include <cmath>
#include <stdexcept>

namespace circreg {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

double sample_von_mises(Rng& rng, double mu, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("sample_von_mises: kappa must be positive and finite");
  }
  if (kappa < 1e-8) { // indistinguishable from uniform at double precision
    return wrap_pi(mu + rng.uniform(-kPi, kPi));
  }

  // Best & Fisher (1979). rho written in a cancellation-free form.
  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double rho =
      2.0 * kappa * tau /
      ((std::sqrt(1.0 + 4.0 * kappa * kappa) + 1.0) * (tau + std::sqrt(2.0 * tau)));
  const double r = (1.0 + rho * rho) / (2.0 * rho);

  double f = 0.0;
  for (;;) {
    const double z = std::cos(kPi * rng.uniform());
    f = (1.0 + r * z) / (r + z);
    const double c = kappa * (r - f);
    const double u2 = rng.uniform();
    if (c * (2.0 - c) - u2 > 0.0) break;
    if (u2 > 0.0 && std::log(c / u2) + 1.0 - c >= 0.0) break;
  }
  const double mag = std::acos(std::fmin(1.0, std::fmax(-1.0, f)));
  const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
  return wrap_pi(mu + sign * mag);
}

std::vector<std::uint32_t> resample_indices(std::size_t n, std::size_t B,
                                            std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("resample_indices: empty sample");
  }
  Rng rng(seed);
  std::vector<std::uint32_t> idx(n * B);
  for (std::size_t b = 0; b < B; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      idx[b * n + i] = static_cast<std::uint32_t>(rng.index(n));
    }
  }
  return idx;
}

} // namespace circreg
