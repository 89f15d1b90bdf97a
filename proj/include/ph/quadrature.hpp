#ifndef PH_QUADRATURE_HPP
#define PH_QUADRATURE_HPP

#include "ph/kernel.hpp"
#include "ph/trig_poly.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace ph {

enum class Rule { kUniformTrapezoid, kGaussLegendre };
enum class Evaluator { kDirect, kSeries };

// Every integrand here is a trig polynomial whose frequencies are all even,
// hence pi-periodic with f(pi - x) = f(x).  The default rule samples the
// full period [0, pi] uniformly, where the trapezoid sum enjoys discrete
// orthogonality (exact once nodes > max_frequency / 2), and halves the
// result.  Gauss-Legendre on [0, pi/2] is offered for cross-validation.
struct QuadratureSpec {
  Rule rule = Rule::kUniformTrapezoid;
  int nodes = 0;  // 0 = auto-size to ceil(F/2) + 8 from the integrand's max frequency F
  Evaluator evaluator = Evaluator::kSeries;
  double singularity_tolerance = 1e-9;
  int threads = 1;  // node evaluations are independent; the reduction is ordered
};

struct QuadratureResult {
  double raw = 0.0;
  std::int64_t rounded = 0;  // nearest integer
  double residual = 0.0;     // |raw - rounded|, < 0.5 by construction
  bool trusted = true;       // residual < 0.25, else flagged untrusted
  int nodes_used = 0;
  QuadratureSpec spec;
};

// Kernel orders whose quadrature path is certified in double precision.
// The kernel amplitude is C(2s,s) while the integral is a small integer;
// beyond order 13 callers are directed to the exact series path.
inline constexpr int kQuadratureOrderEnvelope = 13;

// p_s = (2/pi) Int_0^{pi/2} D_s(x) cos[(s^2-2s)x] dx   (the reduced form)
QuadratureResult integrate_reduced(int s, const QuadratureSpec& spec = {});

// p_s = (4/pi) Int_0^{pi/2} D_s(x) sin(2sx) sin(s^2 x) dx
QuadratureResult integrate_sin_form(int s, const QuadratureSpec& spec = {});

// p_s = (4/pi) Int_0^{pi/2} D_s(x) cos(2sx) cos(s^2 x) dx
QuadratureResult integrate_cos_form(int s, const QuadratureSpec& spec = {});

// p_s = (2/pi) Int_0^{pi/2} prod_k sin[k(s+1)x]/sin(kx) cos{[s^2(s+1)/2 - 2s]x} dx.
// This kernel has no exact series here; it is evaluated by direct product only.
QuadratureResult integrate_full(int s, const QuadratureSpec& spec = {});

// p_s = (2/pi) Int_0^{pi/2} D_{s+m}(x) cos{[(s+m)^2 - 2s]x} dx for every m >= 0.
QuadratureResult integrate_general(int s, int m, const QuadratureSpec& spec = {});

// Int_0^{pi/2} D_s(x) cos[(s^2+offset)x] dx for even offset >= 2; the result
// vanishes because s^2+offset exceeds the kernel's maximum frequency at
// matching parity.  Odd offsets are rejected (OddOffsetError): their parity
// breaks cosine orthogonality on the half period and the integral is
// genuinely nonzero.  Use moment_value() to inspect those.
double vanishing_moment(int s, int offset, const QuadratureSpec& spec = {});

// Exact inspection path for Int_0^{pi/2} D_s(x) cos[(s^2+offset)x] dx with
// any offset >= 1, via coefficient extraction (no quadrature, no envelope).
double moment_value(int s, int offset);

// Numerically recovers a stored kernel coefficient through orthogonality:
//   even s: (4/pi) Int_0^{pi/2} D_s(x) cos(2mx) dx,  0 <= m <= s^2/2
//   odd  s: (4/pi) Int_0^{pi/2} D_s(x) cos[(2m-1)x] dx,  1 <= m <= (s^2+1)/2
// At m = 0 the orthogonality weight is 1 instead of 1/2, so the returned
// value is halved to match the stored constant coefficient.
double coefficient_by_orthogonality(const KernelSeries& k, int m,
                                    const QuadratureSpec& spec = {});

// Direct evaluation of D_s(x) = prod sin[(s+kappa)x]/sin(kappa x).
// Near a zero of any sin(kappa x) the singularity is removable: vanishing
// numerator and denominator factors are paired and replaced by their
// derivative-ratio limits; if the counts cannot be matched the whole product
// falls back to a symmetric two-sided sample at x +- 1e-6, averaged.
double evaluate_kernel_direct(int s, double x, double tol = 1e-9);

// Series route: floating evaluation of the exact expansion.
double evaluate_kernel_series(const KernelSeries& k, double x);

// The module's internal brute-force oracle: the exact integral of a trig
// polynomial over [0, pi/2] by coefficient extraction.  Only the constant
// cosine term contributes pi/2; every other harmonic integrates to an exact
// rational (0 for even frequencies).
double exact_half_period_integral(const TrigPoly& integrand);

// Core engine: Int_0^{pi/2} f, where f restricted to [0, pi] is a trig
// polynomial of maximum frequency max_freq with only even frequencies.
// Exposed so tests can drive arbitrary integrands through the same path.
double integrate_half_period(const std::function<double(double)>& f, Frequency max_freq,
                             const QuadratureSpec& spec, int* nodes_used = nullptr);

// Ordered pairwise reduction; bit-stable regardless of how the values were
// produced.
double pairwise_sum(std::span<const double> values);

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
void gauss_legendre_rule(int n, std::span<double> nodes, std::span<double> weights);

}  // namespace ph

#endif  // PH_QUADRATURE_HPP
