#pragma once

// Exact count of isomorphism classes of vertex-transitive tournaments of
// prime order p.
//
// Write p - 1 = 2^e * r with r odd. For each divisor m of r let c = (p-1)/m.
// Working down the divisor lattice from r,
//
//   S(r) = 0,
//   S(m) = sum of k_n * c_n over divisors n of r that are proper multiples of m,
//   k_m  = (2^(c/2) - S(m)) / c,
//
// where k_m is the number of classes of size c. The class count is the sum of
// all k_m. Every division is exact; a remainder is a bug and throws.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vtt/bigint.hpp"
#include "vtt/groups.hpp"

namespace vtt {

struct PhiEntry {
  Residue m = 1;
  /// Number of classes of size class_size.
  BigInt k;
  /// (p - 1) / m.
  Residue class_size = 0;
  /// S(m).
  BigInt s;
};

struct PhiTable {
  Residue p = 3;
  unsigned two_exponent = 0;
  Residue r = 1;
  /// One entry per divisor m of r, ascending in m.
  std::vector<PhiEntry> entries;

  const PhiEntry& at(Residue m) const;
};

/// Throws InvalidArgument unless p is an odd prime.
PhiTable phi_table(Residue p);

BigInt class_count(const PhiTable& table);
BigInt class_count(Residue p);

struct CountRow {
  Residue p;
  BigInt count;
};

/// class_count for every odd prime in [p_min, p_max], ascending.
std::vector<CountRow> count_table(Residue p_min, Residue p_max);

/// "p\tcount\n" per row.
std::string count_table_tsv(const std::vector<CountRow>& rows);
/// {"p":P,"count":C} per line; counts are bare decimal integers of any size.
std::string count_table_json(const std::vector<CountRow>& rows);

}  // namespace vtt
