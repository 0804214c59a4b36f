#pragma once

// Worked examples that pin down the limits of unit-multiplier equivalence:
//
//  (a) Z25: two connection sets with isomorphic Cayley graphs (both C5 wr C5)
//      that no unit of Z25 maps onto each other.
//  (b) Z9 vs Z3^2: two order-9 Cayley tournaments told apart by directed
//      triangle counts.
//  (c) the Z3^2 tournament of (b) is nevertheless isomorphic to a Cayley
//      tournament on Z9.

#include <optional>
#include <string>
#include <vector>

#include "vtt/digraph.hpp"
#include "vtt/graphs.hpp"
#include "vtt/perm.hpp"

namespace vtt {

/// Units a of Z_n with a*S = T.
std::vector<Residue> unit_multipliers(const ConnectionSet& s, const ConnectionSet& t);

/// Every tournament connection set on an odd-order group: one element from
/// each pair {x, -x}, pairs ordered by the smaller index.
std::vector<ConnectionSet> tournament_sets(const AbelianGroup& group);

ConnectionSet z25_set();
ConnectionSet z25_set_prime();
ConnectionSet z9_set();
ConnectionSet z3sq_set();

struct Z25Check {
  /// Units of Z25 tried, and the subset that survives a = a*1 in S'.
  std::vector<Residue> units_tried;
  std::vector<Residue> candidates;
  std::vector<Residue> multipliers;
  std::optional<Permutation> s_to_wreath;
  std::optional<Permutation> s_prime_to_wreath;
  bool passed() const { return multipliers.empty() && s_to_wreath && s_prime_to_wreath; }
};

struct TriangleCheck {
  std::size_t z9_max = 0;
  Arc z9_witness{};
  std::size_t z3sq_max = 0;
  std::optional<Permutation> isomorphism;
  bool passed() const { return z9_max == 4 && z3sq_max < 4 && !isomorphism; }
};

struct CyclicPartnerCheck {
  std::size_t candidates_tried = 0;
  /// Every Z9 tournament set whose Cayley digraph is isomorphic to the Z3^2 one.
  std::vector<ConnectionSet> partners;
  std::optional<ConnectionSet> z9_partner;
  std::optional<Permutation> isomorphism;
  bool passed() const { return z9_partner.has_value() && isomorphism.has_value(); }
};

Z25Check run_z25_check();
TriangleCheck run_triangle_check();
CyclicPartnerCheck run_cyclic_partner_check();

}  // namespace vtt
