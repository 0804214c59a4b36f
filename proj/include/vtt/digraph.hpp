#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vtt {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;

class DigraphBuilder;

/// Loop-free digraph on vertices 0..n-1 with successor and predecessor
/// bitsets per vertex. Undirected graphs are stored as symmetric digraphs.
/// Immutable once built.
class Digraph {
 public:
  Digraph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return (out_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::span<const std::uint64_t> out_row(Vertex v) const noexcept { return {out_.data() + v * words_, words_}; }
  std::span<const std::uint64_t> in_row(Vertex v) const noexcept { return {in_.data() + v * words_, words_}; }

  std::size_t out_degree(Vertex v) const noexcept;
  std::size_t in_degree(Vertex v) const noexcept;
  std::size_t arc_count() const noexcept { return arcs_; }

  std::vector<Vertex> successors(Vertex v) const;
  std::vector<Vertex> predecessors(Vertex v) const;

  /// All arcs sorted lexicographically.
  std::vector<Arc> arcs() const;

  bool is_symmetric() const noexcept;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.out_ == b.out_; }

 private:
  friend class DigraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t arcs_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n);

  /// Adds u->v; repeated arcs are ignored. Loops and out-of-range vertices throw.
  DigraphBuilder& add_arc(Vertex u, Vertex v);
  /// Adds u->v and v->u.
  DigraphBuilder& add_edge(Vertex u, Vertex v);

  Digraph build() &&;
  Digraph build() const&;

 private:
  Digraph g_;
};

/// Digraph with arcs pi(u) -> pi(v) for every arc u -> v of g.
Digraph relabel(const Digraph& g, std::span<const Vertex> images);

/// True iff exactly one arc joins every pair of distinct vertices.
bool is_tournament(const Digraph& g) noexcept;

}  // namespace vtt
