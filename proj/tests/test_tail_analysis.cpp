#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ph/errors.hpp"
#include "ph/kernel.hpp"
#include "ph/partitions.hpp"
#include "ph/tail_analysis.hpp"

#include <array>
#include <vector>

using namespace ph;

namespace {

struct FormRow {
  int s;
  int sign;
  std::vector<Frequency> sin_args;   // numerator sines (includes the leading sin x)
  std::vector<Frequency> cos_args;   // numerator cosines
  int den_sign;
  int den_power;
  std::vector<Frequency> den_sins;   // sin^2 x as two entries
  bool leading_is_cosine;
  std::array<Frequency, 3> leading;  // predicted frequencies, descending
};

// The rewritten kernels for s = 3..10, exactly as printed.
const std::vector<FormRow>& form_rows() {
  static const std::vector<FormRow> rows = {
      {3, -1, {1, 5}, {2, 3}, -1, 1, {1, 1}, true, {11, 9, 7}},
      {4, -1, {1, 5, 7}, {3, 4}, -1, 2, {1, 1, 2}, false, {20, 18, 14}},
      {5, -1, {1, 7, 9}, {3, 4, 5}, -1, 2, {1, 1, 2}, false, {29, 27, 23}},
      {6, 1, {1, 7, 9, 11}, {4, 5, 6}, 1, 3, {1, 1, 2, 3}, true, {43, 41, 35}},
      {7, 1, {1, 9, 11, 13}, {4, 5, 6, 7}, 1, 3, {1, 1, 2, 3}, true, {56, 54, 48}},
      {8, 1, {1, 9, 11, 13, 15}, {5, 6, 7, 8}, 1, 4, {1, 1, 2, 3, 4}, false, {75, 73, 65}},
      {9, 1, {1, 11, 13, 15, 17}, {5, 6, 7, 8, 9}, 1, 4, {1, 1, 2, 3, 4}, false, {92, 90, 82}},
      {10, -1, {1, 11, 13, 15, 17, 19}, {6, 7, 8, 9, 10}, -1, 5, {1, 1, 2, 3, 4, 5}, true,
       {116, 114, 104}},
  };
  return rows;
}

}  // namespace

TEST_CASE("numerator factor lists match the printed rewrites, s=3..10") {
  for (const auto& row : form_rows()) {
    const NumeratorForm form = numerator_form(row.s);
    CHECK(form.sign == row.sign);
    CHECK(form.power_of_two == row.s);
    CHECK(form.leading_is_cosine == row.leading_is_cosine);

    std::vector<Frequency> sins, coss;
    for (const auto& f : form.factors)
      (f.is_sine ? sins : coss).push_back(f.frequency);
    CHECK(sins == row.sin_args);
    CHECK(coss == row.cos_args);

    for (int i = 0; i < 3; ++i) {
      CHECK(form.predicted_leading[static_cast<std::size_t>(i)].frequency ==
            row.leading[static_cast<std::size_t>(i)]);
      CHECK(form.predicted_leading[static_cast<std::size_t>(i)].sign == (i == 1 ? -1 : 1));
    }
  }
}

TEST_CASE("denominator factor lists match the printed rewrites, s=3..10") {
  for (const auto& row : form_rows()) {
    const DenominatorForm form = denominator_form(row.s);
    CHECK(form.sign == row.den_sign);
    CHECK(form.power_of_two == row.den_power);
    std::vector<Frequency> sins;
    for (const auto& f : form.factors) {
      CHECK(f.is_sine);
      sins.push_back(f.frequency);
    }
    CHECK(sins == row.den_sins);
  }
}

TEST_CASE("s=4 and s=5 share one denominator structure") {
  const TrigPoly d4 = build_denominator(4);
  const TrigPoly d5 = build_denominator(5);
  CHECK(d4 == d5);
}

TEST_CASE("denominator expansion spot value: -2 sin^2 x = cos 2x - 1") {
  TrigPoly expected;
  expected.add_cos_term(0, Dyadic(-1));
  expected.add_cos_term(2, Dyadic(1));
  CHECK(build_denominator(3) == expected);
}

TEST_CASE("numerator expansions carry exactly +1,-1,+1 on the top three slots") {
  for (const auto& row : form_rows()) {
    const TrigPoly a = build_numerator(row.s);
    const auto& terms = row.leading_is_cosine ? a.cos_terms() : a.sin_terms();
    REQUIRE(!terms.empty());
    CHECK(a.max_frequency() == row.leading[0]);
    auto coeff = [&](Frequency n) {
      auto it = terms.find(n);
      return it == terms.end() ? Dyadic() : it->second;
    };
    CHECK(coeff(row.leading[0]) == Dyadic(1));
    CHECK(coeff(row.leading[1]) == Dyadic(-1));
    CHECK(coeff(row.leading[2]) == Dyadic(1));
  }
}

TEST_CASE("class formulas for larger s, derived from the exact expansion") {
  // s = 12 (class 4k): (9*144+24+8)/8 = 166, 164, 152.
  const NumeratorForm f12 = numerator_form(12);
  CHECK(f12.predicted_leading[0].frequency == 166);
  CHECK(f12.predicted_leading[1].frequency == 164);
  CHECK(f12.predicted_leading[2].frequency == 152);

  // s = 14 (class 4k+2): (9*196+28+8)/8 = 225, 223, 209.
  const NumeratorForm f14 = numerator_form(14);
  CHECK(f14.predicted_leading[0].frequency == 225);
  CHECK(f14.predicted_leading[1].frequency == 223);
  CHECK(f14.predicted_leading[2].frequency == 209);

  for (int s : {12, 14}) {
    const NumeratorForm form = numerator_form(s);
    const TrigPoly a = build_numerator(s);
    const auto& terms = form.leading_is_cosine ? a.cos_terms() : a.sin_terms();
    auto coeff = [&](Frequency n) {
      auto it = terms.find(n);
      return it == terms.end() ? Dyadic() : it->second;
    };
    CHECK(a.max_frequency() == form.predicted_leading[0].frequency);
    CHECK(coeff(form.predicted_leading[0].frequency) == Dyadic(1));
    CHECK(coeff(form.predicted_leading[1].frequency) == Dyadic(-1));
    CHECK(coeff(form.predicted_leading[2].frequency) == Dyadic(1));
  }
}

TEST_CASE("decomposition kernel * denominator == numerator for s=3..20") {
  for (int s = 3; s <= 20; ++s) {
    const auto report = verify_decomposition(s);
    CHECK(report.passed);
  }
}

TEST_CASE("leading product +1,-1,+1 with zero slots for s=3..20") {
  const PartitionTable table = partitions_euler(20);
  for (int s = 3; s <= 20; ++s) {
    const auto report = verify_leading_product(s, table);
    CHECK(report.passed);
  }
}

TEST_CASE("tail polynomial matches the printed tau_3") {
  const PartitionTable table = partitions_euler(3);
  TrigPoly expected;
  expected.add_cos_term(9, Dyadic(2));  // 2 p_0
  expected.add_cos_term(7, Dyadic(2));  // 2 p_1
  expected.add_cos_term(5, Dyadic(4));  // 2 p_2
  expected.add_cos_term(3, Dyadic(6));  // 2 p_3
  CHECK(tail_poly(3, table) == expected);
}

TEST_CASE("third leading coefficient cross-checks the pentagonal table rows") {
  const PartitionTable table = partitions_euler(20);
  for (int s = 3; s <= 11; ++s) {
    const auto row_report = table80_check(s, table);
    CHECK(row_report.passed);
    // The product coefficient at the third predicted frequency is the same 1.
    const NumeratorForm form = numerator_form(s);
    const TrigPoly product = tail_poly(s, table) * build_denominator(s);
    const auto& terms = form.leading_is_cosine ? product.cos_terms() : product.sin_terms();
    const auto it = terms.find(form.predicted_leading[2].frequency);
    REQUIRE(it != terms.end());
    CHECK(it->second == Dyadic(1));
  }
}

TEST_CASE("range guards") {
  CHECK_THROWS_AS(numerator_form(2), std::invalid_argument);
  CHECK_THROWS_AS(verify_decomposition(2), std::invalid_argument);
  CHECK_THROWS_AS(verify_decomposition(kSection4Envelope + 1), TooLargeError);
  CHECK_THROWS_AS(verify_leading_product(kSection4Envelope + 1), TooLargeError);
}
