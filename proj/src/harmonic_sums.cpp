#include "ph/harmonic_sums.hpp"

#include "ph/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ph {

double ordinary_sine_sum(int s, int kappa, double x, double y) {
  double sum = 0.0;
  for (int n = 0; n <= s; ++n) sum += std::sin(2.0 * n * kappa * x + y);
  return sum;
}

double ordinary_cosine_sum(int s, int kappa, double x, double y) {
  double sum = 0.0;
  for (int n = 0; n <= s; ++n) sum += std::cos(2.0 * n * kappa * x + y);
  return sum;
}

double sine_sum_closed_form(int s, int kappa, double x, double y) {
  return std::sin((s + 1.0) * kappa * x) / std::sin(kappa * x) * std::sin(s * kappa * x + y);
}

double cosine_sum_closed_form(int s, int kappa, double x, double y) {
  return std::sin((s + 1.0) * kappa * x) / std::sin(kappa * x) * std::cos(s * kappa * x + y);
}

double fractional_sine_sum(int s, int kappa, double x, double y) {
  return std::sin((s + kappa) * x) / std::sin(kappa * x) * std::sin(s * x + y);
}

double fractional_cosine_sum(int s, int kappa, double x, double y) {
  return std::sin((s + kappa) * x) / std::sin(kappa * x) * std::cos(s * x + y);
}

VerificationReport verify_harmonic_sum_identity(int s, int kappa, double y,
                                                std::span<const double> samples,
                                                double pass_tolerance,
                                                double singular_tolerance) {
  if (kappa < 1 || kappa > s)
    throw std::invalid_argument("verify_harmonic_sum_identity: need 1 <= kappa <= s");

  VerificationReport report;
  report.identity = "harmonic sum closed form, s=" + std::to_string(s) +
                    " kappa=" + std::to_string(kappa);
  for (const double x : samples) {
    if (std::abs(std::sin(kappa * x)) < singular_tolerance)
      throw SingularSampleError("verify_harmonic_sum_identity: sample x=" + std::to_string(x) +
                                " lies on a zero of sin(" + std::to_string(kappa) + "x)");
    const double dev_sin = std::abs(ordinary_sine_sum(s, kappa, x, y) -
                                    sine_sum_closed_form(s, kappa, x, y));
    const double dev_cos = std::abs(ordinary_cosine_sum(s, kappa, x, y) -
                                    cosine_sum_closed_form(s, kappa, x, y));
    const double dev = dev_sin > dev_cos ? dev_sin : dev_cos;
    if (dev > report.max_deviation) report.max_deviation = dev;
    if (dev > pass_tolerance)
      report.fail("x=" + std::to_string(x), "deviation <= " + std::to_string(pass_tolerance),
                  std::to_string(dev));
  }
  return report;
}

}  // namespace ph
