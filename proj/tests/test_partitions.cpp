#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ph/errors.hpp"
#include "ph/partitions.hpp"

#include <array>
#include <map>

using namespace ph;

TEST_CASE("euler recurrence reproduces the known prefix") {
  const std::array<std::int64_t, 11> expected = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  const PartitionTable table = partitions_euler(10);
  REQUIRE(table.values.size() == 11);
  for (int n = 0; n <= 10; ++n) CHECK(table.at(n) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("regression constants pinned from the enumeration oracle") {
  // Each value was first produced by partitions_enumerate and frozen here.
  const PartitionTable table = partitions_euler(40);
  CHECK(table.at(12) == 77);
  CHECK(table.at(13) == 101);
  CHECK(table.at(20) == 627);
  CHECK(table.at(30) == 5604);
  CHECK(table.at(40) == 37338);
  CHECK(partitions_enumerate(20) == 627);
  CHECK(partitions_enumerate(13) == table.at(13));
}

TEST_CASE("enumeration agrees with the recurrence on 0..30") {
  const PartitionTable table = partitions_euler(30);
  for (int n = 0; n <= 30; ++n) CHECK(partitions_enumerate(n) == table.at(n));
}

TEST_CASE("enumeration edge cases and guard") {
  CHECK(partitions_enumerate(0) == 1);
  CHECK(partitions_enumerate(5) == 7);
  CHECK(partitions_enumerate(kEnumerationGuard) == 37338);
  CHECK_THROWS_AS(partitions_enumerate(kEnumerationGuard + 1), TooLargeError);
  CHECK_THROWS_AS(partitions_enumerate(-1), std::invalid_argument);
}

TEST_CASE("pentagonal offsets carry the Euler signs") {
  const auto offsets = pentagonal_offsets(26);
  // 1, 2 (+), 5, 7 (-), 12, 15 (+), 22, 26 (-)
  REQUIRE(offsets.size() == 8);
  CHECK(offsets[0] == std::pair<std::int64_t, int>{1, 1});
  CHECK(offsets[1] == std::pair<std::int64_t, int>{2, 1});
  CHECK(offsets[2] == std::pair<std::int64_t, int>{5, -1});
  CHECK(offsets[3] == std::pair<std::int64_t, int>{7, -1});
  CHECK(offsets[4] == std::pair<std::int64_t, int>{12, 1});
  CHECK(offsets[5] == std::pair<std::int64_t, int>{15, 1});
  CHECK(offsets[6] == std::pair<std::int64_t, int>{22, -1});
  CHECK(offsets[7] == std::pair<std::int64_t, int>{26, -1});
}

TEST_CASE("third-term combination matches the printed prefix") {
  // kappa large enough that the first several offsets all appear:
  // p_k - 2p_{k-1} + p_{k-3} + p_{k-5} - p_{k-6} + p_{k-7} - p_{k-8} - p_{k-12} + ...
  const auto terms = third_term_combination(20);
  std::map<int, std::int64_t> m(terms.begin(), terms.end());
  CHECK(m[20] == 1);
  CHECK(m[19] == -2);
  CHECK(m[18] == 0);
  CHECK(m[17] == 1);   // k-3
  CHECK(m[15] == 1);   // k-5
  CHECK(m[14] == -1);  // k-6
  CHECK(m[13] == 1);   // k-7
  CHECK(m[12] == -1);  // k-8
  CHECK(m[8] == -1);   // k-12
  CHECK(m[7] == 1);    // k-13
  CHECK(m[5] == -1);   // k-15
}

TEST_CASE("third_term_coefficient equals 1 up to kappa=60") {
  const PartitionTable table = partitions_euler(60);
  for (int kappa = 2; kappa <= 60; ++kappa)
    CHECK(third_term_coefficient(kappa, table) == 1);
}

TEST_CASE("table rows as printed") {
  const PartitionTable table = partitions_euler(11);
  for (int s = 3; s <= 11; ++s) {
    const auto report = table80_check(s, table);
    CHECK(report.passed);
  }
  CHECK_THROWS_AS(third_term_row(2), std::invalid_argument);
  CHECK_THROWS_AS(third_term_row(12), std::invalid_argument);
}

TEST_CASE("row decomposition into Euler residuals evaluates equal") {
  // Each printed row equals (E_k - E_{k-1}) + p_0 where E_j is the Euler
  // recurrence residual; evaluate both forms explicitly.
  const PartitionTable table = partitions_euler(11);
  for (int s = 3; s <= 11; ++s) {
    const auto row = third_term_row(s);
    BigInt printed = 0;
    for (const auto& [index, coeff] : row) printed += coeff * table.at(index);

    const int kappa = row.front().first;
    auto residual = [&](int j) {
      BigInt e = table.at(j);
      for (const auto& [g, sign] : pentagonal_offsets(j)) {
        if (sign > 0) e -= table.at(static_cast<int>(j - g));
        else e += table.at(static_cast<int>(j - g));
      }
      return e;
    };
    const BigInt decomposed = residual(kappa) - residual(kappa - 1) + table.at(0);
    CHECK(printed == decomposed);
    CHECK(printed == 1);
  }
}

TEST_CASE("table invariants") {
  const PartitionTable table = partitions_euler(50);
  CHECK(table.at(0) == 1);
  CHECK(table.at(1) == 1);
  for (int n = 0; n <= 50; ++n) CHECK(table.at(n) > 0);
  CHECK(table.provenance == PartitionTable::Provenance::kEuler);

  const PartitionTable counted = partitions_enumerate_table(12);
  CHECK(counted.provenance == PartitionTable::Provenance::kEnumeration);
  CHECK(counted.max_n() == 12);
  for (int n = 0; n <= 12; ++n) CHECK(counted.at(n) == table.at(n));
}
