#pragma once

// Graph constructors: Cayley digraphs, standard families, metacirculants,
// wreath products, plus directed-triangle statistics for tournaments.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vtt/digraph.hpp"
#include "vtt/groups.hpp"

namespace vtt {

/// Subset S of an abelian group; arcs of Cay(G, S) are g -> g + s.
///
/// Members are stored sorted by element index with duplicates removed. The
/// identity is allowed here so that validators can reject it; building a
/// Cayley digraph from such a set throws.
class ConnectionSet {
 public:
  ConnectionSet(AbelianGroup group, std::span<const GroupElement> members);

  /// Convenience for Z_n: members given as residues.
  static ConnectionSet cyclic(Residue n, std::span<const Residue> residues);
  static ConnectionSet cyclic(Residue n, std::initializer_list<Residue> residues) {
    return cyclic(n, std::span<const Residue>(residues.begin(), residues.size()));
  }

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  bool contains(const GroupElement& x) const;
  bool contains_identity() const;

  /// -S.
  ConnectionSet negated() const;

  /// For Z_p with p an odd prime and a tournament-valid set: bit i-1 set iff
  /// i is a member, for i = 1..(p-1)/2.
  std::optional<std::uint64_t> tournament_mask() const;

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> members_;
  std::vector<char> indicator_;
};

/// Cay(G, S): vertex i is group.at(i); arc g -> h iff h - g in S.
Digraph cayley_digraph(const ConnectionSet& s);

/// identity not in S, S and -S disjoint, S u -S = G \ {0}.
bool validate_tournament_set(const ConnectionSet& s);

/// Undirected when S = -S.
bool validate_graph_set(const ConnectionSet& s);

Digraph k_cube(std::size_t k);
Digraph cycle(std::size_t n);
/// Generalised Johnson graph J(v, k, i): k-subsets of a v-set, adjacent when
/// they meet in exactly i points. Vertices are the subsets in lexicographic order.
Digraph kneser(std::size_t v, std::size_t k, std::size_t i);
Digraph petersen();
Digraph complete_digraph(std::size_t n);

/// The k-subsets used as kneser(v, k, i) vertex labels, in vertex order.
std::vector<std::vector<std::size_t>> kneser_labels(std::size_t v, std::size_t k);

/// Metacirculant G(m, n, a, S_0..S_{m-1}) on Z_m x Z_n; vertex v_j^i has index i*n + j.
Digraph metacirculant(std::size_t m, Residue n, Residue a, std::span<const std::vector<Residue>> parts);

/// The permutations v_j^i -> v_{j+1}^i and v_j^i -> v_{aj}^{i+1} as image arrays.
std::vector<Vertex> metacirculant_rho(std::size_t m, Residue n);
std::vector<Vertex> metacirculant_sigma(std::size_t m, Residue n, Residue a);

/// G wr H: (v, w) -> (v', w') iff v -> v', or v = v' and w -> w'. Vertex (v, w)
/// has index v * |H| + w.
Digraph wreath_product(const Digraph& g, const Digraph& h);
/// Same construction under its other name.
inline Digraph lexicographic_product(const Digraph& g, const Digraph& h) { return wreath_product(g, h); }

/// Number of w with v -> w and w -> u, i.e. directed 3-cycles u -> v -> w -> u
/// when u -> v is an arc. Defined for every ordered pair.
std::size_t cyclic_triangles_through(const Digraph& g, Vertex u, Vertex v) noexcept;

/// n x n row-major matrix of cyclic_triangles_through for all ordered pairs.
std::vector<std::uint32_t> pair_triangle_matrix(const Digraph& g);

struct ArcTriangles {
  Vertex from;
  Vertex to;
  std::size_t count;
};

struct TriangleProfile {
  /// One entry per arc, arcs in lexicographic order.
  std::vector<ArcTriangles> arcs;
  /// Sorted counts; invariant under isomorphism.
  std::vector<std::size_t> summary;
  std::size_t max_count = 0;
};

/// Throws InvalidArgument unless g is a tournament.
TriangleProfile triangle_profile(const Digraph& g);

struct CosetConditionResult {
  bool holds = true;
  /// First member x outside the subgroup with x + H not inside S.
  std::optional<GroupElement> witness;
};

/// For every x in S \ H: x + H subset of S. H must be a subgroup of the set's group.
CosetConditionResult morris_coset_condition(const ConnectionSet& s, std::span<const GroupElement> subgroup);

}  // namespace vtt
