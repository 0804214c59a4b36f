#include "vtt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "vtt/errors.hpp"

namespace vtt {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Vertex v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidArgument("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), Vertex{0});
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (Vertex v = 0; v < images_.size(); ++v) p.images_[images_[v]] = v;
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (Vertex v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (Vertex v = 0; v < images_.size(); ++v) {
    if (seen[v]) continue;
    std::size_t len = 0;
    for (Vertex w = v; !seen[w]; w = images_[w]) {
      seen[w] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<Vertex> Permutation::fixed_points() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < images_.size(); ++v) {
    if (images_[v] == v) out.push_back(v);
  }
  return out;
}

std::size_t Permutation::fixed_point_count() const noexcept {
  std::size_t c = 0;
  for (Vertex v = 0; v < images_.size(); ++v) c += images_[v] == v;
  return c;
}

std::string Permutation::cycle_notation() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (Vertex v = 0; v < images_.size(); ++v) {
    if (seen[v] || images_[v] == v) continue;
    any = true;
    os << '(';
    for (Vertex w = v; !seen[w]; w = images_[w]) {
      seen[w] = 1;
      if (w != v) os << ' ';
      os << w;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation operator*(const Permutation& first, const Permutation& second) {
  if (first.degree() != second.degree()) throw InvalidArgument("composing permutations of different degree");
  Permutation p;
  p.images_.resize(first.degree());
  for (Vertex v = 0; v < first.degree(); ++v) p.images_[v] = second.images_[first.images_[v]];
  return p;
}

// ---- PermGroup -------------------------------------------------------------

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  for (const auto& g : elements) {
    if (g.degree() != degree) throw InvalidArgument("group element has wrong degree");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto has = [&](const Permutation& g) { return std::binary_search(elements.begin(), elements.end(), g); };
  if (!has(Permutation::identity(degree))) throw InvalidArgument("group lacks the identity");
  for (const auto& g : elements) {
    if (!has(g.inverse())) throw InvalidArgument("group not closed under inverses");
    for (const auto& h : elements) {
      if (!has(g * h)) throw InvalidArgument("group not closed under composition");
    }
  }
  return PermGroup(degree, std::move(elements));
}

PermGroup PermGroup::generate(std::size_t degree, std::span<const Permutation> generators, std::size_t max_order) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator has wrong degree");
  }
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Permutation y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > max_order) {
            throw SizeLimitError("permutation group exceeds " + std::to_string(max_order) + " elements");
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return PermGroup(degree, std::vector<Permutation>(seen.begin(), seen.end()));
}

PermGroup PermGroup::from_trusted_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return PermGroup(degree, std::move(elements));
}

bool PermGroup::contains(const Permutation& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::vector<Vertex> PermGroup::orbit(Vertex v) const {
  if (v >= degree_) throw InvalidArgument("point out of range");
  std::vector<char> hit(degree_, 0);
  for (const auto& g : elements_) hit[g(v)] = 1;
  std::vector<Vertex> out;
  for (Vertex w = 0; w < degree_; ++w) {
    if (hit[w]) out.push_back(w);
  }
  return out;
}

PermGroup PermGroup::stabilizer(Vertex v) const {
  if (v >= degree_) throw InvalidArgument("point out of range");
  std::vector<Permutation> out;
  for (const auto& g : elements_) {
    if (g(v) == v) out.push_back(g);
  }
  return PermGroup(degree_, std::move(out));
}

// ---- Orbits and counting ---------------------------------------------------

std::vector<std::vector<Vertex>> orbits(const PermGroup& group, std::size_t n) {
  if (group.degree() != n) {
    throw InvalidArgument("group degree " + std::to_string(group.degree()) + " does not match n = " +
                          std::to_string(n));
  }
  std::vector<char> done(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) {
    if (done[v]) continue;
    auto block = group.orbit(v);
    for (Vertex w : block) done[w] = 1;
    out.push_back(std::move(block));
  }
  return out;
}

std::size_t burnside_orbit_count(std::span<const Permutation> elements, std::size_t n) {
  if (elements.empty()) throw InvalidArgument("burnside_orbit_count needs a non-empty group");
  std::size_t fixed = 0;
  for (const auto& g : elements) {
    if (g.degree() != n) throw InvalidArgument("element degree does not match n");
    fixed += g.fixed_point_count();
  }
  if (fixed % elements.size() != 0) {
    throw InternalInconsistency("average fixed-point count " + std::to_string(fixed) + "/" +
                                std::to_string(elements.size()) + " is not an integer; input is not a group");
  }
  return fixed / elements.size();
}

std::size_t burnside_orbit_count(const PermGroup& group, std::size_t n) {
  if (group.degree() != n) throw InvalidArgument("group degree does not match n");
  return burnside_orbit_count(group.elements(), n);
}

bool is_isomorphism(const Digraph& g, const Digraph& h, const Permutation& pi) {
  if (g.order() != h.order() || pi.degree() != g.order() || g.arc_count() != h.arc_count()) return false;
  for (auto [u, v] : g.arcs()) {
    if (!h.has_arc(pi(u), pi(v))) return false;
  }
  return true;
}

}  // namespace vtt
