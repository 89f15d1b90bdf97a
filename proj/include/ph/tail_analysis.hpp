#ifndef PH_TAIL_ANALYSIS_HPP
#define PH_TAIL_ANALYSIS_HPP

#include "ph/kernel.hpp"
#include "ph/partitions.hpp"
#include "ph/report.hpp"
#include "ph/trig_poly.hpp"

#include <array>
#include <vector>

namespace ph {

// The kernel rewrites as a_s(x) / d_s(x) where the numerator a_s is a signed
// power-of-two times an explicit sine/cosine factor list and the denominator
// d_s is sign * 2^floor(s/2) * sin^2(x) sin(2x) ... sin(floor(s/2) x).
// The factor lists depend on s mod 4.

enum class ResidueClass { k4kMinus1, k4k, k4kPlus1, k4kPlus2 };

ResidueClass residue_class_of(int s);  // s >= 3

struct TrigFactor {
  bool is_sine = true;
  Frequency frequency = 0;
};

struct LeadingTerm {
  Frequency frequency = 0;
  int sign = 0;  // +1 / -1
};

struct NumeratorForm {
  int order = 0;
  ResidueClass residue_class = ResidueClass::k4kMinus1;
  int sign = 1;          // (-1)^kappa per class
  int power_of_two = 0;  // s
  std::vector<TrigFactor> factors;
  bool leading_is_cosine = false;  // cos for classes 4k-1 and 4k+2, sin otherwise
  std::array<LeadingTerm, 3> predicted_leading;  // (+1, -1, +1) at the class frequencies
};

struct DenominatorForm {
  int order = 0;
  int sign = 1;
  int power_of_two = 0;  // floor(s/2)
  std::vector<TrigFactor> factors;  // sin x, sin x, sin 2x, ..., sin(floor(s/2) x)
};

NumeratorForm numerator_form(int s);      // s >= 3
DenominatorForm denominator_form(int s);  // s >= 3

// Exact expansions of the factor products (sign and power of two included).
TrigPoly expand(const NumeratorForm& form);
TrigPoly expand(const DenominatorForm& form);

TrigPoly build_numerator(int s);
TrigPoly build_denominator(int s);

// tau_s(x) = 2 { p_0 cos(s^2 x) + p_1 cos[(s^2-2)x] + ... + p_s cos[(s^2-2s)x] }
// from a partition table (the table must cover index s).
TrigPoly tail_poly(int s, const PartitionTable& table);

inline constexpr int kSection4Envelope = 20;

// Asserts kernel * denominator == numerator as exact TrigPolys; 3 <= s <= 20.
VerificationReport verify_decomposition(int s);

// Multiplies tau_s (from the Euler oracle) by the exact denominator and
// checks that the three highest-frequency terms are exactly +1, -1, +1 at
// the class-predicted frequencies, that every other slot down to the third
// predicted frequency is zero, and that the third coefficient reproduces the
// pentagonal combination of third_term_coefficient(floor(s/2)+1).
VerificationReport verify_leading_product(int s);
VerificationReport verify_leading_product(int s, const PartitionTable& table);

}  // namespace ph

#endif  // PH_TAIL_ANALYSIS_HPP
