#include "vtt/graphs.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "vtt/errors.hpp"
#include "vtt/kernels.hpp"

namespace vtt {

// ---- ConnectionSet ---------------------------------------------------------

ConnectionSet::ConnectionSet(AbelianGroup group, std::span<const GroupElement> members)
    : group_(std::move(group)), indicator_(group_.order(), 0) {
  for (const auto& x : members) {
    auto y = group_.element(x.coords);
    indicator_[group_.index_of(y)] = 1;
  }
  for (std::size_t i = 0; i < indicator_.size(); ++i) {
    if (indicator_[i]) members_.push_back(group_.at(i));
  }
}

ConnectionSet ConnectionSet::cyclic(Residue n, std::span<const Residue> residues) {
  std::vector<GroupElement> members;
  members.reserve(residues.size());
  for (Residue r : residues) members.push_back(GroupElement{{r}});
  return ConnectionSet(AbelianGroup::cyclic(n), members);
}

bool ConnectionSet::contains(const GroupElement& x) const { return indicator_[group_.index_of(x)] != 0; }

bool ConnectionSet::contains_identity() const { return indicator_[0] != 0; }

ConnectionSet ConnectionSet::negated() const {
  std::vector<GroupElement> neg;
  neg.reserve(members_.size());
  for (const auto& x : members_) neg.push_back(group_.negate(x));
  return ConnectionSet(group_, neg);
}

std::optional<std::uint64_t> ConnectionSet::tournament_mask() const {
  if (!group_.is_cyclic_factor()) return std::nullopt;
  const Residue p = group_.moduli()[0];
  if (!is_odd_prime(p) || (p - 1) / 2 > 64 || !validate_tournament_set(*this)) return std::nullopt;
  std::uint64_t mask = 0;
  for (Residue i = 1; i <= (p - 1) / 2; ++i) {
    if (indicator_[static_cast<std::size_t>(i)]) mask |= std::uint64_t{1} << (i - 1);
  }
  return mask;
}

// ---- Cayley digraphs -------------------------------------------------------

Digraph cayley_digraph(const ConnectionSet& s) {
  if (s.contains_identity()) {
    throw InvalidConnectionSet("connection set on " + s.group().name() + " contains the identity");
  }
  const auto& group = s.group();
  DigraphBuilder b(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) {
    const GroupElement g = group.at(i);
    for (const auto& x : s.members()) b.add_arc(i, group.index_of(group.add(g, x)));
  }
  return std::move(b).build();
}

bool validate_tournament_set(const ConnectionSet& s) {
  if (s.contains_identity()) return false;
  const auto& group = s.group();
  for (std::size_t i = 1; i < group.order(); ++i) {
    const GroupElement x = group.at(i);
    if (s.contains(x) == s.contains(group.negate(x))) return false;
  }
  return true;
}

bool validate_graph_set(const ConnectionSet& s) {
  if (s.contains_identity()) return false;
  for (const auto& x : s.members()) {
    if (!s.contains(s.group().negate(x))) return false;
  }
  return true;
}

// ---- Families --------------------------------------------------------------

Digraph k_cube(std::size_t k) {
  if (k < 1 || k > 20) throw InvalidArgument("k_cube needs 1 <= k <= 20, got " + std::to_string(k));
  AbelianGroup group(std::vector<Residue>(k, 2));
  std::vector<GroupElement> basis;
  for (std::size_t i = 0; i < k; ++i) {
    GroupElement e = group.identity();
    e.coords[i] = 1;
    basis.push_back(std::move(e));
  }
  return cayley_digraph(ConnectionSet(group, basis));
}

Digraph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3, got " + std::to_string(n));
  DigraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Digraph complete_digraph(std::size_t n) {
  DigraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) b.add_arc(u, v);
    }
  }
  return std::move(b).build();
}

std::vector<std::vector<std::size_t>> kneser_labels(std::size_t v, std::size_t k) {
  if (k > v) throw InvalidArgument("kneser needs v >= k");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    if (out.size() > 4096) throw InvalidArgument("kneser graph too large");
    // Advance to the next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && current[i - 1] == v - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

Digraph kneser(std::size_t v, std::size_t k, std::size_t i) {
  if (!(v >= k && k >= i)) {
    throw InvalidArgument("kneser needs v >= k >= i, got (" + std::to_string(v) + "," + std::to_string(k) + "," +
                          std::to_string(i) + ")");
  }
  const auto labels = kneser_labels(v, k);
  DigraphBuilder b(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    for (std::size_t y = x + 1; y < labels.size(); ++y) {
      std::vector<std::size_t> common;
      std::set_intersection(labels[x].begin(), labels[x].end(), labels[y].begin(), labels[y].end(),
                            std::back_inserter(common));
      if (common.size() == i) b.add_edge(x, y);
    }
  }
  return std::move(b).build();
}

Digraph petersen() { return kneser(5, 2, 0); }

// ---- Metacirculants --------------------------------------------------------

namespace {

std::vector<Residue> normalized(std::span<const Residue> xs, Residue n) {
  std::vector<Residue> out;
  out.reserve(xs.size());
  for (Residue x : xs) out.push_back(mod_floor(x, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Residue> scaled(const std::vector<Residue>& xs, Residue a, Residue n) {
  std::vector<Residue> out;
  out.reserve(xs.size());
  for (Residue x : xs) out.push_back(mul_mod(a, x, n));
  std::sort(out.begin(), out.end());
  return out;
}

Residue pow_mod(Residue a, std::size_t e, Residue n) {
  Residue result = 1 % n;
  for (std::size_t i = 0; i < e; ++i) result = mul_mod(result, a, n);
  return result;
}

}  // namespace

Digraph metacirculant(std::size_t m, Residue n, Residue a, std::span<const std::vector<Residue>> parts) {
  if (m < 1) throw InvalidArgument("metacirculant needs m >= 1");
  if (n < 2) throw InvalidArgument("metacirculant needs n >= 2");
  if (gcd(mod_floor(a, n), n) != 1) throw InvalidArgument("metacirculant multiplier a must be a unit mod n");
  if (parts.size() != m) {
    throw InvalidArgument("metacirculant needs exactly m = " + std::to_string(m) + " connection parts, got " +
                          std::to_string(parts.size()));
  }
  std::vector<std::vector<Residue>> s;
  for (const auto& part : parts) s.push_back(normalized(part, n));
  if (std::binary_search(s[0].begin(), s[0].end(), Residue{0})) {
    throw InvalidArgument("metacirculant needs 0 outside S_0");
  }
  const Residue am = pow_mod(mod_floor(a, n), m, n);
  for (std::size_t r = 0; r < m; ++r) {
    if (scaled(s[r], am, n) != s[r]) {
      throw InvalidArgument("metacirculant needs a^m S_r = S_r; fails for r = " + std::to_string(r));
    }
  }

  const auto nn = static_cast<std::size_t>(n);
  DigraphBuilder b(m * nn);
  Residue ai = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t target_block = (i + r) % m;
      for (Residue x : s[r]) {
        const Residue step = mul_mod(ai, x, n);
        for (std::size_t j = 0; j < nn; ++j) {
          const auto h = static_cast<std::size_t>(mod_floor(static_cast<Residue>(j) + step, n));
          b.add_arc(i * nn + j, target_block * nn + h);
        }
      }
    }
    ai = mul_mod(ai, a, n);
  }
  return std::move(b).build();
}

std::vector<Vertex> metacirculant_rho(std::size_t m, Residue n) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Vertex> images(m * nn);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nn; ++j) images[i * nn + j] = i * nn + (j + 1) % nn;
  }
  return images;
}

std::vector<Vertex> metacirculant_sigma(std::size_t m, Residue n, Residue a) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Vertex> images(m * nn);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      images[i * nn + j] = ((i + 1) % m) * nn + static_cast<std::size_t>(mul_mod(a, static_cast<Residue>(j), n));
    }
  }
  return images;
}

// ---- Products --------------------------------------------------------------

Digraph wreath_product(const Digraph& g, const Digraph& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  DigraphBuilder b(ng * nh);
  for (Vertex v = 0; v < ng; ++v) {
    for (Vertex w = 0; w < nh; ++w) {
      const Vertex from = v * nh + w;
      for (Vertex w2 : h.successors(w)) b.add_arc(from, v * nh + w2);
      for (Vertex v2 : g.successors(v)) {
        for (Vertex x = 0; x < nh; ++x) b.add_arc(from, v2 * nh + x);
      }
    }
  }
  return std::move(b).build();
}

// ---- Triangles -------------------------------------------------------------

std::size_t cyclic_triangles_through(const Digraph& g, Vertex u, Vertex v) noexcept {
  return kernels::and_popcount(g.out_row(v), g.in_row(u));
}

std::vector<std::uint32_t> pair_triangle_matrix(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> out(n * n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) out[u * n + v] = static_cast<std::uint32_t>(cyclic_triangles_through(g, u, v));
  }
  return out;
}

TriangleProfile triangle_profile(const Digraph& g) {
  if (!is_tournament(g)) throw InvalidArgument("triangle_profile needs a tournament");
  TriangleProfile profile;
  for (auto [u, v] : g.arcs()) {
    const std::size_t c = cyclic_triangles_through(g, u, v);
    profile.arcs.push_back({u, v, c});
    profile.summary.push_back(c);
    profile.max_count = std::max(profile.max_count, c);
  }
  std::sort(profile.summary.begin(), profile.summary.end());
  return profile;
}

// ---- Coset condition -------------------------------------------------------

CosetConditionResult morris_coset_condition(const ConnectionSet& s, std::span<const GroupElement> subgroup) {
  const auto& group = s.group();
  std::vector<char> in_h(group.order(), 0);
  for (const auto& x : subgroup) in_h[group.index_of(group.element(x.coords))] = 1;
  std::vector<GroupElement> h;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (in_h[i]) h.push_back(group.at(i));
  }
  if (!in_h[0]) throw InvalidArgument("subgroup must contain the identity");
  for (const auto& x : h) {
    for (const auto& y : h) {
      if (!in_h[group.index_of(group.add(x, y))]) throw InvalidArgument("subset is not closed under addition");
    }
  }

  CosetConditionResult result;
  for (const auto& x : s.members()) {
    if (in_h[group.index_of(x)]) continue;
    for (const auto& y : h) {
      if (!s.contains(group.add(x, y))) {
        result.holds = false;
        result.witness = x;
        return result;
      }
    }
  }
  return result;
}

}  // namespace vtt
