#ifndef PH_KERNEL_HPP
#define PH_KERNEL_HPP

#include "ph/trig_poly.hpp"

#include <vector>

namespace ph {

// The exact cosine expansion of the kernel
//   D_s(x) = prod_{kappa=1..s} sin[(s+kappa)x] / sin(kappa x),
// built by the recursion
//   D_{s+1}(x) sin[(s+1)x] = D_s(x) { sin[(3s+2)x] + sin(sx) }.
//
// Invariants, asserted on construction:
//   - max frequency is s^2,
//   - every frequency has the parity of s^2,
//   - every coefficient is a positive even integer.
struct KernelSeries {
  int order = 0;            // s
  TrigPoly series;          // cosine-only
  Frequency max_frequency = 0;  // == order^2
};

// Builds D_s from D_1 = 2 cos x; s >= 1.
KernelSeries build_kernel(int s);

// All orders 1..max_s in one sweep (each order reuses the previous one).
std::vector<KernelSeries> build_kernel_ladder(int max_s);

// D_s(0) = C(2s, s): the exact sum of all coefficients.
BigInt kernel_at_zero(const KernelSeries& k);

// D_s(pi/2): alternating coefficient sum C(s, s/2) for even s, 0 for odd s
// (odd-frequency cosines vanish at pi/2).  Exact.
BigInt kernel_at_half_pi(const KernelSeries& k);

// Number of nonzero cosine terms: (s^2+2)/2 for even s, (s^2+1)/2 for odd.
std::int64_t term_count(const KernelSeries& k);

// The s+1 highest-frequency coefficients of D_s, halved:
// coeffs[j] is the coefficient of cos[(s^2-2j)x] divided by 2.
// The claim under test elsewhere: coeffs[j] == p_j.
struct Tail {
  int order = 0;
  std::vector<BigInt> coeffs;  // size order+1
};

// Requires s >= 3 (throws OrderTooSmallError below that: at s <= 2 the tail
// would reach frequency 0, where the constant-term convention differs by a
// factor 2 and the reduced integral covers the claim instead).
Tail extract_tail(const KernelSeries& k);

// Factorial-free multiplicative binomial C(n, k); exact.
BigInt binomial(int n, int k);

}  // namespace ph

#endif  // PH_KERNEL_HPP
