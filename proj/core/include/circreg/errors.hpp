#ifndef CIRCREG_ERRORS_HPP
#define CIRCREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace circreg {

/// No kernel mass near an evaluation point: the fit there is meaningless.
class DegenerateNeighborhoodError : public std::runtime_error {
public:
  DegenerateNeighborhoodError(std::string where, std::string point)
      : std::runtime_error(where + ": no effective data near " + point),
        point_(std::move(point)) {}
  const std::string& point() const noexcept { return point_; }

private:
  std::string point_;
};

/// Resultant (m1, m2) vanished; the fitted direction is undefined.
class UndefinedDirectionError : public std::runtime_error {
public:
  explicit UndefinedDirectionError(const std::string& where)
      : std::runtime_error(where + ": resultant length is numerically zero, direction undefined") {}
};

/// Local weighted design matrix is numerically singular (local-linear fits).
class SingularFitError : public std::runtime_error {
public:
  explicit SingularFitError(const std::string& where)
      : std::runtime_error(where + ": local design matrix is numerically singular") {}
};

/// A bandwidth selection criterion could not be evaluated anywhere.
class SelectionInfeasibleError : public std::runtime_error {
public:
  explicit SelectionInfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

} // namespace circreg

#endif
