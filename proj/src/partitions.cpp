#include "ph/partitions.hpp"

#include "ph/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace ph {

std::vector<std::pair<std::int64_t, int>> pentagonal_offsets(std::int64_t limit) {
  std::vector<std::pair<std::int64_t, int>> offsets;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t g1 = k * (3 * k - 1) / 2;
    const std::int64_t g2 = k * (3 * k + 1) / 2;
    const int sign = (k % 2 == 1) ? 1 : -1;
    if (g1 > limit) break;
    offsets.emplace_back(g1, sign);
    if (g2 <= limit) offsets.emplace_back(g2, sign);
  }
  return offsets;
}

PartitionTable partitions_euler(int max_n) {
  if (max_n < 0) throw std::invalid_argument("partitions_euler: max_n must be >= 0");
  PartitionTable table;
  table.provenance = PartitionTable::Provenance::kEuler;
  table.values.resize(static_cast<std::size_t>(max_n) + 1);
  table.values[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    BigInt sum = 0;
    for (const auto& [g, sign] : pentagonal_offsets(n)) {
      if (sign > 0)
        sum += table.values[static_cast<std::size_t>(n - g)];
      else
        sum -= table.values[static_cast<std::size_t>(n - g)];
    }
    table.values[static_cast<std::size_t>(n)] = sum;
  }
  return table;
}

namespace {

BigInt count_partitions(int remaining, int max_part) {
  if (remaining == 0) return 1;
  BigInt total = 0;
  for (int part = std::min(max_part, remaining); part >= 1; --part)
    total += count_partitions(remaining - part, part);
  return total;
}

}  // namespace

BigInt partitions_enumerate(int n) {
  if (n < 0) throw std::invalid_argument("partitions_enumerate: n must be >= 0");
  if (n > kEnumerationGuard)
    throw TooLargeError("partitions_enumerate: n = " + std::to_string(n) +
                        " exceeds the enumeration guard " + std::to_string(kEnumerationGuard));
  return count_partitions(n, n);
}

PartitionTable partitions_enumerate_table(int max_n) {
  PartitionTable table;
  table.provenance = PartitionTable::Provenance::kEnumeration;
  table.values.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) table.values.push_back(partitions_enumerate(n));
  return table;
}

namespace {

// Euler-recurrence residual p_j - sum of pentagonal back-references,
// flattened to signed coefficients on p-indices (negative indices dropped).
std::map<int, std::int64_t> euler_residual_combination(int j) {
  std::map<int, std::int64_t> coeffs;
  coeffs[j] += 1;
  for (const auto& [g, sign] : pentagonal_offsets(j)) coeffs[static_cast<int>(j - g)] -= sign;
  return coeffs;
}

std::vector<std::pair<int, std::int64_t>> to_sorted_terms(const std::map<int, std::int64_t>& coeffs) {
  std::vector<std::pair<int, std::int64_t>> terms;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    if (it->second != 0) terms.emplace_back(it->first, it->second);
  return terms;
}

BigInt evaluate_combination(const std::vector<std::pair<int, std::int64_t>>& terms,
                            const PartitionTable& table) {
  BigInt value = 0;
  for (const auto& [index, coeff] : terms) value += coeff * table.at(index);
  return value;
}

}  // namespace

std::vector<std::pair<int, std::int64_t>> third_term_combination(int kappa) {
  if (kappa < 2) throw std::invalid_argument("third_term_combination: kappa must be >= 2");
  std::map<int, std::int64_t> coeffs;
  for (const auto& [index, c] : euler_residual_combination(kappa)) coeffs[index] += c;
  for (const auto& [index, c] : euler_residual_combination(kappa - 1)) coeffs[index] -= c;
  coeffs[0] += 1;  // the trailing p_0
  return to_sorted_terms(coeffs);
}

BigInt third_term_coefficient(int kappa, const PartitionTable& table) {
  return evaluate_combination(third_term_combination(kappa), table);
}

BigInt third_term_coefficient(int kappa) {
  const PartitionTable table = partitions_euler(kappa);
  return third_term_coefficient(kappa, table);
}

std::vector<std::pair<int, std::int64_t>> third_term_row(int s) {
  // The five printed rows, literally.
  switch (s) {
    case 3:
      return {{2, 1}, {1, -2}, {0, 1}};
    case 4:
    case 5:
      return {{3, 1}, {2, -2}, {0, 2}};
    case 6:
    case 7:
      return {{4, 1}, {3, -2}, {1, 1}, {0, 1}};
    case 8:
    case 9:
      return {{5, 1}, {4, -2}, {2, 1}, {0, 2}};
    case 10:
    case 11:
      return {{6, 1}, {5, -2}, {3, 1}, {1, 1}};
    default:
      throw std::invalid_argument("third_term_row: s must be in [3, 11]");
  }
}

namespace {

std::string combination_str(const std::vector<std::pair<int, std::int64_t>>& terms) {
  std::string out;
  for (const auto& [index, coeff] : terms) {
    if (!out.empty()) out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0) out += "-";
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag);
    out += "p" + std::to_string(index);
  }
  return out;
}

}  // namespace

VerificationReport table80_check(int s, const PartitionTable& table) {
  const auto row = third_term_row(s);
  VerificationReport report;
  report.identity = "third-term row s=" + std::to_string(s) + ": " + combination_str(row) + " = 1";
  const BigInt value = evaluate_combination(row, table);
  if (value != 1) report.fail("lhs", "1", value.str());
  else report.note("lhs", "1", value.str());

  // Same row via the difference of two consecutive Euler recurrences.
  const int kappa = row.front().first;
  const BigInt generated = third_term_coefficient(kappa, table);
  if (generated != value)
    report.fail("pentagonal decomposition kappa=" + std::to_string(kappa), value.str(),
                generated.str());
  return report;
}

VerificationReport table80_check(int s) {
  const PartitionTable table = partitions_euler(11);
  return table80_check(s, table);
}

}  // namespace ph
