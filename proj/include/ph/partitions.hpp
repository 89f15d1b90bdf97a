#ifndef PH_PARTITIONS_HPP
#define PH_PARTITIONS_HPP

#include "ph/dyadic.hpp"
#include "ph/report.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ph {

// p_0 .. p_N with provenance, the ground truth every kernel identity is
// checked against.
struct PartitionTable {
  enum class Provenance { kEuler, kEnumeration };

  std::vector<BigInt> values;  // values[n] == p_n, p_0 == 1
  Provenance provenance = Provenance::kEuler;

  int max_n() const { return static_cast<int>(values.size()) - 1; }
  const BigInt& at(int n) const { return values.at(static_cast<std::size_t>(n)); }
};

// Generalized pentagonal offsets g = k(3k-1)/2 and k(3k+1)/2 for k >= 1,
// paired with the Euler-recurrence sign (-1)^(k+1), ascending, up to `limit`.
std::vector<std::pair<std::int64_t, int>> pentagonal_offsets(std::int64_t limit);

// Pentagonal-number (Euler) recurrence:
//   p_n = sum_{k>=1} (-1)^(k+1) [p_{n-k(3k-1)/2} + p_{n-k(3k+1)/2}],
// terms with negative index dropped.  Exact integers.
PartitionTable partitions_euler(int max_n);

// Independent oracle: counts solutions of n_1 + 2 n_2 + ... + n*n_n = n by
// depth-first enumeration, largest part first, pruning on remaining weight.
// Guarded at n <= 40 (throws TooLargeError above).
BigInt partitions_enumerate(int n);

// p_0..p_max by the enumeration oracle, tagged with its provenance.
PartitionTable partitions_enumerate_table(int max_n);

inline constexpr int kEnumerationGuard = 40;

// The flattened third-leading-term combination for row kappa, obtained by
// differencing two consecutive Euler recurrences and adding p_0:
//   p_k - 2 p_{k-1} + p_{k-3} + p_{k-5} - p_{k-6} + p_{k-7} - p_{k-8} - ...
// Offsets and signs are generated from the pentagonal numbers, never
// hard-coded.  Returns the signed index->coefficient list (index >= 0).
std::vector<std::pair<int, std::int64_t>> third_term_combination(int kappa);

// Evaluates third_term_combination(kappa) against an Euler table
// (built internally when the caller has none).  Expected value: 1.
BigInt third_term_coefficient(int kappa);
BigInt third_term_coefficient(int kappa, const PartitionTable& table);

// Checks the printed third-term row covering s (3 <= s <= 11) literally and
// reports the evaluated left-hand side against 1.
VerificationReport table80_check(int s);
VerificationReport table80_check(int s, const PartitionTable& table);

// The literal row as printed: signed coefficients on p-indices.
std::vector<std::pair<int, std::int64_t>> third_term_row(int s);

}  // namespace ph

#endif  // PH_PARTITIONS_HPP
