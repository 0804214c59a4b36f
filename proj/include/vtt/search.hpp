#pragma once

// Backtracking isomorphism search and what is built on it: automorphism
// groups, vertex-transitivity and regular-subgroup (Cayley) recognition.

#include <cstddef>
#include <functional>
#include <optional>

#include "vtt/digraph.hpp"
#include "vtt/perm.hpp"

namespace vtt {

struct SearchLimits {
  /// Largest vertex count for full automorphism enumeration.
  std::size_t aut_cap = 16;
  /// Largest automorphism group materialised.
  std::size_t max_group_order = std::size_t{1} << 21;
};

/// Calls `visit` for every isomorphism g -> h, candidates in ascending vertex
/// order, until it returns false. Each map is checked arc-by-arc before the
/// call. Returns the number of maps visited.
std::size_t for_each_isomorphism(const Digraph& g, const Digraph& h,
                                 const std::function<bool(const Permutation&)>& visit);

/// First isomorphism g -> h in search order, if any.
std::optional<Permutation> isomorphic(const Digraph& g, const Digraph& h);

/// Aut(g), sorted. Throws SizeLimitError naming the cap when g.order() exceeds
/// limits.aut_cap or the group outgrows limits.max_group_order.
PermGroup automorphisms(const Digraph& g, const SearchLimits& limits = {});

/// Single orbit under Aut(g).
bool is_vertex_transitive(const PermGroup& aut);

/// A regular subgroup of `aut`, if one exists.
std::optional<PermGroup> find_regular_subgroup(const PermGroup& aut);

/// A regular subgroup of Aut(g), if one exists; by Sabidussi this decides
/// whether g is a Cayley digraph.
std::optional<PermGroup> is_cayley(const Digraph& g, const SearchLimits& limits = {});

}  // namespace vtt
