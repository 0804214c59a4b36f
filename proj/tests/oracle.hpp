#pragma once

// Slow reference computations for tests. Nothing here uses the masks,
// kernels or formulas of the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using ResidueSet = std::set<long>;

inline ResidueSet scale(long a, const ResidueSet& s, long p) {
  ResidueSet out;
  for (long x : s) out.insert(a * x % p);
  return out;
}

/// All tournament sets on Z_p as residue sets: pick i or p - i for each i.
inline std::vector<ResidueSet> tournament_sets(long p) {
  const long h = (p - 1) / 2;
  std::vector<ResidueSet> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << h); ++choice) {
    ResidueSet s;
    for (long i = 1; i <= h; ++i) s.insert((choice >> (i - 1)) & 1u ? p - i : i);
    out.push_back(s);
  }
  return out;
}

/// Classes of tournament sets under S -> aS, found by sweeping unseen sets.
inline std::vector<std::set<ResidueSet>> classes(long p) {
  std::set<ResidueSet> seen;
  std::vector<std::set<ResidueSet>> out;
  for (const auto& s : tournament_sets(p)) {
    if (seen.count(s)) continue;
    std::set<ResidueSet> cls;
    for (long a = 1; a < p; ++a) cls.insert(scale(a, s, p));
    seen.insert(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

inline std::size_t fixed_sets(long p, long a) {
  std::size_t n = 0;
  for (const auto& s : tournament_sets(p)) n += scale(a, s, p) == s;
  return n;
}

}  // namespace oracle
