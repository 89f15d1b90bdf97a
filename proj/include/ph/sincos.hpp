#ifndef PH_SINCOS_HPP
#define PH_SINCOS_HPP

#include <cmath>

namespace ph {

// sin(k*x) and cos(k*x) with the product's rounding residual compensated via
// fma.  Without this the absolute error grows like eps*|k*x|, which is what
// limits evaluator agreement at frequencies in the hundreds.

inline double sin_of_multiple(double k, double x) {
  const double p = k * x;
  const double e = std::fma(k, x, -p);
  return std::sin(p) + e * std::cos(p);
}

inline double cos_of_multiple(double k, double x) {
  const double p = k * x;
  const double e = std::fma(k, x, -p);
  return std::cos(p) - e * std::sin(p);
}

}  // namespace ph

#endif  // PH_SINCOS_HPP
