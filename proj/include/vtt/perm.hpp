#pragma once

// Permutations of {0..n-1} and explicitly materialised permutation groups.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vtt/digraph.hpp"

namespace vtt {

/// Bijection on {0..n-1}; v maps to images()[v].
///
/// Products act on the right, like v^(gh) = (v^g)^h: `g * h` applies g first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const noexcept { return images_[v]; }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;
  std::vector<Vertex> fixed_points() const;
  std::size_t fixed_point_count() const noexcept;

  /// Disjoint cycles, fixed points omitted; "()" for the identity.
  std::string cycle_notation() const;

  friend Permutation operator*(const Permutation& first, const Permutation& second);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// A finite permutation group held as its full, sorted element list.
class PermGroup {
 public:
  /// Verifies identity, closure under products and inverses.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);
  /// Closure of the generators; throws SizeLimitError past `max_order` elements.
  static PermGroup generate(std::size_t degree, std::span<const Permutation> generators,
                            std::size_t max_order = 1u << 22);
  /// Caller guarantees `elements` form a group (e.g. a complete automorphism
  /// enumeration); only sorts and removes duplicates.
  static PermGroup from_trusted_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& g) const;

  std::vector<Vertex> orbit(Vertex v) const;
  /// Elements fixing v, as a group.
  PermGroup stabilizer(Vertex v) const;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> sorted) : degree_(degree), elements_(std::move(sorted)) {}

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

/// Orbit partition of {0..n-1}; blocks sorted, ordered by smallest point.
std::vector<std::vector<Vertex>> orbits(const PermGroup& group, std::size_t n);

/// Number of orbits as the average number of fixed points. Throws
/// InternalInconsistency when the average is not an integer (the input was
/// not a group).
std::size_t burnside_orbit_count(std::span<const Permutation> elements, std::size_t n);
std::size_t burnside_orbit_count(const PermGroup& group, std::size_t n);

/// pi maps arcs of g exactly onto arcs of h.
bool is_isomorphism(const Digraph& g, const Digraph& h, const Permutation& pi);
inline bool is_automorphism(const Digraph& g, const Permutation& pi) { return is_isomorphism(g, g, pi); }

}  // namespace vtt
