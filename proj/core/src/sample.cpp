#include "circreg/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace circreg {

void MixedSample::validate() const {
  if (n == 0) {
    throw std::invalid_argument("MixedSample: n must be >= 1");
  }
  if (X.size() != n * k || Z.size() != n * p || theta.size() != n ||
      level_counts.size() != p) {
    throw std::invalid_argument("MixedSample: inconsistent dimensions");
  }
  for (double v : X) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("MixedSample: non-finite continuous covariate");
    }
  }
  for (double v : theta) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("MixedSample: non-finite response angle");
    }
  }
  for (std::size_t l = 0; l < p; ++l) {
    if (level_counts[l] < 1) {
      throw std::invalid_argument("MixedSample: level count must be >= 1 in column " +
                                  std::to_string(l));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < p; ++l) {
      const int z = Z[i * p + l];
      if (z < 0 || z >= level_counts[l]) {
        throw std::invalid_argument("MixedSample: level index out of range at row " +
                                    std::to_string(i));
      }
    }
  }
}

MixedSample MixedSample::without_row(std::size_t drop) const {
  MixedSample out;
  out.n = n - 1;
  out.k = k;
  out.p = p;
  out.level_counts = level_counts;
  out.X.reserve(out.n * k);
  out.Z.reserve(out.n * p);
  out.theta.reserve(out.n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == drop) continue;
    for (std::size_t j = 0; j < k; ++j) out.X.push_back(X[i * k + j]);
    for (std::size_t l = 0; l < p; ++l) out.Z.push_back(Z[i * p + l]);
    out.theta.push_back(theta[i]);
  }
  return out;
}

MixedSample MixedSample::with_theta(std::vector<double> new_theta) const {
  MixedSample out = *this;
  out.theta = std::move(new_theta);
  return out;
}

} // namespace circreg
