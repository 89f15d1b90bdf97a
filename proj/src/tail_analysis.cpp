#include "ph/tail_analysis.hpp"

#include "ph/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ph {

ResidueClass residue_class_of(int s) {
  if (s < 3) throw std::invalid_argument("residue_class_of: s must be >= 3");
  switch (s % 4) {
    case 3: return ResidueClass::k4kMinus1;
    case 0: return ResidueClass::k4k;
    case 1: return ResidueClass::k4kPlus1;
    default: return ResidueClass::k4kPlus2;
  }
}

NumeratorForm numerator_form(int s) {
  NumeratorForm form;
  form.order = s;
  form.residue_class = residue_class_of(s);
  form.power_of_two = s;

  // Sign exponents per class: (s+1)/4, s/4, (s-1)/4, (s+2)/4.
  int exponent = 0;
  switch (form.residue_class) {
    case ResidueClass::k4kMinus1: exponent = (s + 1) / 4; form.leading_is_cosine = true; break;
    case ResidueClass::k4k:       exponent = s / 4;       form.leading_is_cosine = false; break;
    case ResidueClass::k4kPlus1:  exponent = (s - 1) / 4; form.leading_is_cosine = false; break;
    case ResidueClass::k4kPlus2:  exponent = (s + 2) / 4; form.leading_is_cosine = true; break;
  }
  form.sign = (exponent % 2 == 0) ? 1 : -1;

  form.factors.push_back({true, 1});
  const bool odd = s % 2 != 0;
  const Frequency first_sin = odd ? s + 2 : s + 1;
  for (Frequency a = first_sin; a <= 2 * static_cast<Frequency>(s) - 1; a += 2)
    form.factors.push_back({true, a});
  const Frequency first_cos = odd ? (s + 1) / 2 : (s + 2) / 2;
  for (Frequency a = first_cos; a <= s; ++a) form.factors.push_back({false, a});

  const auto s2 = static_cast<Frequency>(s) * s;
  if (odd) {
    form.predicted_leading = {LeadingTerm{(9 * s2 + 7) / 8, +1},
                              LeadingTerm{(9 * s2 - 9) / 8, -1},
                              LeadingTerm{(9 * s2 - 8 * s - 1) / 8, +1}};
  } else {
    form.predicted_leading = {LeadingTerm{(9 * s2 + 2 * s + 8) / 8, +1},
                              LeadingTerm{(9 * s2 + 2 * s - 8) / 8, -1},
                              LeadingTerm{(9 * s2 - 6 * s - 8) / 8, +1}};
  }

  // The first predicted frequency is the factor-argument sum; both routes
  // must agree or the class formulas are being misapplied.
  Frequency arg_sum = 0;
  for (const auto& f : form.factors) arg_sum += f.frequency;
  if (arg_sum != form.predicted_leading[0].frequency)
    throw std::logic_error("numerator_form: factor arguments sum to " + std::to_string(arg_sum) +
                           " but the class formula predicts " +
                           std::to_string(form.predicted_leading[0].frequency) +
                           " at s=" + std::to_string(s));
  return form;
}

DenominatorForm denominator_form(int s) {
  if (s < 3) throw std::invalid_argument("denominator_form: s must be >= 3");
  DenominatorForm form;
  form.order = s;
  form.power_of_two = s / 2;
  int exponent = 0;
  switch (residue_class_of(s)) {
    case ResidueClass::k4kMinus1: exponent = (s + 1) / 4; break;
    case ResidueClass::k4k:       exponent = s / 4; break;
    case ResidueClass::k4kPlus1:  exponent = (s - 1) / 4; break;
    case ResidueClass::k4kPlus2:  exponent = (s + 2) / 4; break;
  }
  form.sign = (exponent % 2 == 0) ? 1 : -1;
  form.factors.push_back({true, 1});
  form.factors.push_back({true, 1});  // sin^2 x
  for (Frequency a = 2; a <= s / 2; ++a) form.factors.push_back({true, a});
  return form;
}

namespace {

TrigPoly expand_factors(int sign, int power_of_two, const std::vector<TrigFactor>& factors) {
  BigInt scale = BigInt(1) << power_of_two;
  if (sign < 0) scale = -scale;
  TrigPoly acc = TrigPoly::constant(Dyadic(scale));
  for (const auto& f : factors) {
    acc = acc * (f.is_sine ? TrigPoly::harmonic_sin(f.frequency)
                           : TrigPoly::harmonic_cos(f.frequency));
  }
  return acc;
}

}  // namespace

TrigPoly expand(const NumeratorForm& form) {
  return expand_factors(form.sign, form.power_of_two, form.factors);
}

TrigPoly expand(const DenominatorForm& form) {
  return expand_factors(form.sign, form.power_of_two, form.factors);
}

TrigPoly build_numerator(int s) { return expand(numerator_form(s)); }

TrigPoly build_denominator(int s) { return expand(denominator_form(s)); }

TrigPoly tail_poly(int s, const PartitionTable& table) {
  if (table.max_n() < s) throw std::invalid_argument("tail_poly: table does not cover s");
  TrigPoly tau;
  const auto s2 = static_cast<Frequency>(s) * s;
  for (int j = 0; j <= s; ++j)
    tau.add_cos_term(s2 - 2 * j, Dyadic(2 * table.at(j)));
  return tau;
}

namespace {

void check_section4_range(int s, const char* where) {
  if (s < 3) throw std::invalid_argument(std::string(where) + ": s must be >= 3");
  if (s > kSection4Envelope)
    throw TooLargeError(std::string(where) + ": s = " + std::to_string(s) +
                        " exceeds the section-4 envelope " + std::to_string(kSection4Envelope));
}

}  // namespace

VerificationReport verify_decomposition(int s) {
  check_section4_range(s, "verify_decomposition");
  VerificationReport report;
  report.identity = "kernel * denominator == numerator, s=" + std::to_string(s);
  const KernelSeries kernel = build_kernel(s);
  const TrigPoly lhs = kernel.series * build_denominator(s);
  const TrigPoly rhs = build_numerator(s);
  if (lhs == rhs) {
    report.note("terms", std::to_string(rhs.term_count()), std::to_string(lhs.term_count()));
    return report;
  }
  const TrigPoly diff = lhs - rhs;
  report.fail("first mismatch at frequency", "0 difference",
              std::to_string(diff.max_frequency()) + " (" + std::to_string(diff.term_count()) +
                  " differing terms)");
  return report;
}

VerificationReport verify_leading_product(int s, const PartitionTable& table) {
  check_section4_range(s, "verify_leading_product");
  VerificationReport report;
  report.identity = "tail * denominator leading terms +1,-1,+1, s=" + std::to_string(s);

  const NumeratorForm form = numerator_form(s);
  const TrigPoly product = tail_poly(s, table) * build_denominator(s);

  // The product must live entirely on the predicted side (pure cosine for
  // classes 4k-1 / 4k+2, pure sine otherwise).
  const bool side_ok = form.leading_is_cosine ? product.pure_cos() : product.pure_sin();
  if (!side_ok)
    report.fail("series type", form.leading_is_cosine ? "pure cosine" : "pure sine", "mixed");

  const auto& terms = form.leading_is_cosine ? product.cos_terms() : product.sin_terms();
  auto coeff_at = [&](Frequency n) {
    auto it = terms.find(n);
    return it == terms.end() ? Dyadic() : it->second;
  };

  if (product.max_frequency() != form.predicted_leading[0].frequency)
    report.fail("max frequency", std::to_string(form.predicted_leading[0].frequency),
                std::to_string(product.max_frequency()));

  for (const auto& lead : form.predicted_leading) {
    const Dyadic actual = coeff_at(lead.frequency);
    if (actual != Dyadic(lead.sign))
      report.fail("coefficient at frequency " + std::to_string(lead.frequency),
                  std::to_string(lead.sign), actual.str());
  }

  // Every slot strictly between the predicted terms is a predicted zero.
  const Frequency low = form.predicted_leading[2].frequency;
  const Frequency high = form.predicted_leading[0].frequency;
  for (Frequency n = low; n <= high; ++n) {
    if (n == form.predicted_leading[0].frequency || n == form.predicted_leading[1].frequency ||
        n == form.predicted_leading[2].frequency)
      continue;
    const Dyadic actual = coeff_at(n);
    if (!actual.is_zero())
      report.fail("coefficient at frequency " + std::to_string(n), "0", actual.str());
  }

  // Cross-wire to the pentagonal combination: the third leading coefficient
  // is the table row for kappa = floor(s/2)+1 and must equal 1.
  const int kappa = s / 2 + 1;
  const BigInt via_oracle = third_term_coefficient(kappa, table);
  if (via_oracle != 1)
    report.fail("third_term_coefficient(" + std::to_string(kappa) + ")", "1", via_oracle.str());
  else
    report.note("third_term_coefficient(" + std::to_string(kappa) + ")", "1", via_oracle.str());
  return report;
}

VerificationReport verify_leading_product(int s) {
  const PartitionTable table = partitions_euler(std::max(s, s / 2 + 1));
  return verify_leading_product(s, table);
}

}  // namespace ph
