#include "vtt/digraph.hpp"

#include <bit>
#include <string>

#include "vtt/errors.hpp"

namespace vtt {

std::size_t Digraph::out_degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : out_row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Digraph::in_degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : in_row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

namespace {

std::vector<Vertex> bits_of(std::span<const std::uint64_t> row) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::uint64_t w = row[i]; w != 0; w &= w - 1) {
      out.push_back(i * 64 + static_cast<Vertex>(std::countr_zero(w)));
    }
  }
  return out;
}

}  // namespace

std::vector<Vertex> Digraph::successors(Vertex v) const { return bits_of(out_row(v)); }
std::vector<Vertex> Digraph::predecessors(Vertex v) const { return bits_of(in_row(v)); }

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arcs_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : successors(u)) out.emplace_back(u, v);
  }
  return out;
}

bool Digraph::is_symmetric() const noexcept { return out_ == in_; }

DigraphBuilder::DigraphBuilder(std::size_t n) {
  g_.n_ = n;
  g_.words_ = (n + 63) / 64;
  g_.out_.assign(n * g_.words_, 0);
  g_.in_.assign(n * g_.words_, 0);
}

DigraphBuilder& DigraphBuilder::add_arc(Vertex u, Vertex v) {
  if (u >= g_.n_ || v >= g_.n_) {
    throw InvalidArgument("arc " + std::to_string(u) + "->" + std::to_string(v) + " out of range for " +
                          std::to_string(g_.n_) + " vertices");
  }
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  std::uint64_t& word = g_.out_[u * g_.words_ + v / 64];
  const std::uint64_t bit = std::uint64_t{1} << (v % 64);
  if (word & bit) return *this;
  word |= bit;
  g_.in_[v * g_.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++g_.arcs_;
  return *this;
}

DigraphBuilder& DigraphBuilder::add_edge(Vertex u, Vertex v) {
  add_arc(u, v);
  return add_arc(v, u);
}

Digraph DigraphBuilder::build() && { return std::move(g_); }
Digraph DigraphBuilder::build() const& { return g_; }

Digraph relabel(const Digraph& g, std::span<const Vertex> images) {
  if (images.size() != g.order()) throw InvalidArgument("relabel: permutation degree mismatch");
  DigraphBuilder b(g.order());
  for (auto [u, v] : g.arcs()) b.add_arc(images[u], images[v]);
  Digraph h = std::move(b).build();
  if (h.arc_count() != g.arc_count()) throw InvalidArgument("relabel: images are not a bijection");
  return h;
}

bool is_tournament(const Digraph& g) noexcept {
  const std::size_t n = g.order();
  if (g.arc_count() != n * (n - (n > 0 ? 1 : 0)) / 2) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_arc(u, v) == g.has_arc(v, u)) return false;
    }
  }
  return true;
}

}  // namespace vtt
