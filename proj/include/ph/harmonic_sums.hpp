#ifndef PH_HARMONIC_SUMS_HPP
#define PH_HARMONIC_SUMS_HPP

#include "ph/report.hpp"

#include <span>

namespace ph {

// Ordinary harmonic sums and their closed forms:
//   sum_{n=0..s} sin(2n kappa x + y) = sin[(s+1) kappa x]/sin(kappa x) * sin(s kappa x + y)
//   sum_{n=0..s} cos(2n kappa x + y) = sin[(s+1) kappa x]/sin(kappa x) * cos(s kappa x + y)
double ordinary_sine_sum(int s, int kappa, double x, double y);
double ordinary_cosine_sum(int s, int kappa, double x, double y);
double sine_sum_closed_form(int s, int kappa, double x, double y);
double cosine_sum_closed_form(int s, int kappa, double x, double y);

// Fractional sums are formal definitions with a non-integer upper limit
// s/kappa; these evaluators return the defining right-hand sides
//   sin[(s+kappa)x]/sin(kappa x) * sin(sx + y)   (resp. cos(sx + y))
// and carry no independent summation semantics.  At kappa = 1 they coincide
// with the ordinary closed forms.
double fractional_sine_sum(int s, int kappa, double x, double y);
double fractional_cosine_sum(int s, int kappa, double x, double y);

// Compares the literal sums against the closed forms at each sample and
// reports the maximum absolute deviation over both the sine and cosine
// identities.  Throws SingularSampleError when |sin(kappa x)| < tolerance.
// Preconditions: 1 <= kappa <= s.
VerificationReport verify_harmonic_sum_identity(int s, int kappa, double y,
                                                std::span<const double> samples,
                                                double pass_tolerance = 1e-12,
                                                double singular_tolerance = 1e-9);

}  // namespace ph

#endif  // PH_HARMONIC_SUMS_HPP
