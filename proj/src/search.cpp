#include "vtt/search.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

#include "vtt/errors.hpp"
#include "vtt/graphs.hpp"

namespace vtt {

namespace {

// (out-degree, in-degree, directed 3-cycles through the vertex)
using VertexInvariant = std::array<std::size_t, 3>;

struct Invariants {
  std::vector<VertexInvariant> vertex;
  std::vector<std::uint32_t> pair;
};

Invariants compute_invariants(const Digraph& g) {
  const std::size_t n = g.order();
  Invariants inv;
  inv.pair = pair_triangle_matrix(g);
  inv.vertex.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t through = 0;
    for (Vertex w : g.successors(v)) through += inv.pair[v * n + w];
    inv.vertex[v] = {g.out_degree(v), g.in_degree(v), through};
  }
  return inv;
}

template <class T>
std::vector<T> sorted_copy(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Assigns g's vertices so that each new vertex has as many arcs as possible
// to already-assigned ones; ties go to the smallest index.
std::vector<Vertex> search_order(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!placed[v] && (best == n || links[v] > links[best])) best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w = 0; w < n; ++w) {
      if (!placed[w]) links[w] += static_cast<std::size_t>(g.has_arc(best, w)) + g.has_arc(w, best);
    }
  }
  return order;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Digraph& g, const Digraph& h, const std::function<bool(const Permutation&)>& visit)
      : g_(g), h_(h), n_(g.order()), visit_(visit) {}

  std::size_t run() {
    if (g_.order() != h_.order() || g_.arc_count() != h_.arc_count()) return 0;
    ig_ = compute_invariants(g_);
    ih_ = &ig_;
    if (&g_ != &h_) {
      ih_storage_ = compute_invariants(h_);
      ih_ = &ih_storage_;
      if (sorted_copy(ig_.vertex) != sorted_copy(ih_->vertex)) return 0;
      if (sorted_copy(ig_.pair) != sorted_copy(ih_->pair)) return 0;
    }
    order_ = search_order(g_);
    map_.assign(n_, n_);
    used_.assign(n_, 0);
    extend(0);
    return found_;
  }

 private:
  bool consistent(Vertex x, Vertex y, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex u = order_[k];
      const Vertex mu = map_[u];
      if (g_.has_arc(u, x) != h_.has_arc(mu, y) || g_.has_arc(x, u) != h_.has_arc(y, mu)) return false;
      if (ig_.pair[u * n_ + x] != ih_->pair[mu * n_ + y] || ig_.pair[x * n_ + u] != ih_->pair[y * n_ + mu]) {
        return false;
      }
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool extend(std::size_t depth) {
    if (depth == n_) {
      Permutation pi(map_);
      if (!is_isomorphism(g_, h_, pi)) throw InternalInconsistency("isomorphism search produced a non-isomorphism");
      ++found_;
      return visit_(pi);
    }
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < n_; ++y) {
      if (used_[y] || ig_.vertex[x] != ih_->vertex[y] || !consistent(x, y, depth)) continue;
      map_[x] = y;
      used_[y] = 1;
      const bool go_on = extend(depth + 1);
      used_[y] = 0;
      map_[x] = n_;
      if (!go_on) return false;
    }
    return true;
  }

  const Digraph& g_;
  const Digraph& h_;
  std::size_t n_;
  const std::function<bool(const Permutation&)>& visit_;
  Invariants ig_;
  Invariants ih_storage_;
  const Invariants* ih_ = nullptr;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::size_t found_ = 0;
};

// Closure of `gens` as long as it stays semiregular: distinct elements must
// move vertex 0 to distinct places and only the identity may fix a point.
std::optional<std::vector<Permutation>> semiregular_closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::optional<Permutation>> by_image(n);
  by_image[0] = Permutation::identity(n);
  std::vector<Permutation> elements{*by_image[0]};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : gens) {
      Permutation y = elements[next] * g;
      auto& slot = by_image[y(0)];
      if (slot) {
        if (*slot != y) return std::nullopt;
        continue;
      }
      if (y.fixed_point_count() != 0) return std::nullopt;
      slot = y;
      elements.push_back(std::move(y));
    }
  }
  return elements;
}

bool regular_search(std::size_t n, const std::vector<std::vector<Permutation>>& candidates,
                    std::vector<Permutation>& gens, std::vector<Permutation>& result) {
  auto closure = semiregular_closure(n, gens);
  if (!closure) return false;
  if (closure->size() == n) {
    result = std::move(*closure);
    return true;
  }
  std::vector<char> covered(n, 0);
  for (const auto& x : *closure) covered[x(0)] = 1;
  const auto target = static_cast<Vertex>(std::find(covered.begin(), covered.end(), 0) - covered.begin());
  for (const auto& c : candidates[target]) {
    gens.push_back(c);
    const bool ok = regular_search(n, candidates, gens, result);
    gens.pop_back();
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::size_t for_each_isomorphism(const Digraph& g, const Digraph& h,
                                 const std::function<bool(const Permutation&)>& visit) {
  return IsomorphismSearch(g, h, visit).run();
}

std::optional<Permutation> isomorphic(const Digraph& g, const Digraph& h) {
  std::optional<Permutation> hit;
  for_each_isomorphism(g, h, [&](const Permutation& pi) {
    hit = pi;
    return false;
  });
  return hit;
}

PermGroup automorphisms(const Digraph& g, const SearchLimits& limits) {
  if (g.order() > limits.aut_cap) {
    throw SizeLimitError("automorphism enumeration is capped at " + std::to_string(limits.aut_cap) +
                         " vertices (aut-cap); graph has " + std::to_string(g.order()));
  }
  std::vector<Permutation> elements;
  for_each_isomorphism(g, g, [&](const Permutation& pi) {
    if (elements.size() >= limits.max_group_order) {
      throw SizeLimitError("automorphism group exceeds " + std::to_string(limits.max_group_order) + " elements");
    }
    elements.push_back(pi);
    return true;
  });
  return PermGroup::from_trusted_elements(g.order(), std::move(elements));
}

bool is_vertex_transitive(const PermGroup& aut) { return orbits(aut, aut.degree()).size() <= 1; }

std::optional<PermGroup> find_regular_subgroup(const PermGroup& aut) {
  const std::size_t n = aut.degree();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<Permutation>> candidates(n);
  for (const auto& x : aut.elements()) {
    if (!x.is_identity() && x.fixed_point_count() == 0) candidates[x(0)].push_back(x);
  }
  std::vector<Permutation> gens;
  std::vector<Permutation> result;
  if (!regular_search(n, candidates, gens, result)) return std::nullopt;
  return PermGroup::from_elements(n, std::move(result));
}

std::optional<PermGroup> is_cayley(const Digraph& g, const SearchLimits& limits) {
  return find_regular_subgroup(automorphisms(g, limits));
}

}  // namespace vtt
