#ifndef CIRCREG_RNG_HPP
#define CIRCREG_RNG_HPP

#include <cstdint>
#include <cstddef>
#include <random>
#include <vector>

namespace circreg {

/// splitmix64 step; used to derive independent child seeds from a master seed.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// mt19937_64 wrapper with fixed uniform/index mappings so that streams are
/// reproducible across standard-library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform index in {0, ..., n-1} (Lemire multiply-shift).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(eng_()) * n) >> 64);
  }

  /// Standard normal via Box-Muller (pair cached).
  double normal();

  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// von Mises(mu, kappa) draw via the Best-Fisher wrapped-Cauchy rejection
/// algorithm; result wrapped to (-pi, pi] around 0 then shifted by mu.
double sample_von_mises(Rng& rng, double mu, double kappa);

/// B rows of n with-replacement resampling indices, flattened row-major.
/// A pure function of (n, B, seed).
std::vector<std::uint32_t> resample_indices(std::size_t n, std::size_t B,
                                            std::uint64_t seed);

} // namespace circreg

#endif
