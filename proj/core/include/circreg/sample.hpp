#ifndef CIRCREG_SAMPLE_HPP
#define CIRCREG_SAMPLE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace circreg {

/// n observations of (continuous covariates, categorical covariates, angular
/// response). X is n x k row-major, Z is n x p row-major level indices with
/// per-column level counts.
struct MixedSample {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
  std::vector<double> X;          ///< n * k
  std::vector<int> Z;             ///< n * p
  std::vector<int> level_counts;  ///< p entries, each >= 1
  std::vector<double> theta;      ///< n angles, radians

  std::span<const double> x_row(std::size_t i) const {
    return {X.data() + i * k, k};
  }
  std::span<const int> z_row(std::size_t i) const {
    return {Z.data() + i * p, p};
  }

  /// Throws std::invalid_argument on inconsistent dimensions, non-finite
  /// entries, or level indices outside their column's range.
  void validate() const;

  /// Copy without row i (order of the remaining rows preserved).
  MixedSample without_row(std::size_t i) const;

  /// Copy with a replaced response vector.
  MixedSample with_theta(std::vector<double> new_theta) const;
};

} // namespace circreg

#endif
