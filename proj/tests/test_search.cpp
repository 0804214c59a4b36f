#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "vtt/errors.hpp"
#include "vtt/graphs.hpp"
#include "vtt/search.hpp"

using namespace vtt;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

// Automorphism count by trying every permutation; only for tiny graphs.
std::size_t brute_force_aut_order(const Digraph& g) {
  std::vector<Vertex> v(g.order());
  std::iota(v.begin(), v.end(), 0);
  std::size_t n = 0;
  do {
    n += is_automorphism(g, Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return n;
}

}  // namespace

TEST_CASE("isomorphism search finds relabellings") {
  std::mt19937_64 rng(17);
  const std::vector<Digraph> graphs{petersen(), k_cube(4), cayley_digraph(ConnectionSet::cyclic(11, {1, 3, 4, 5, 9})),
                                    wreath_product(cycle(5), cycle(5))};
  for (const auto& g : graphs) {
    for (int k = 0; k < 3; ++k) {
      const auto pi = random_permutation(g.order(), rng);
      const Digraph h = relabel(g, pi.images());
      const auto found = isomorphic(g, h);
      REQUIRE(found.has_value());
      CHECK(is_isomorphism(g, h, *found));
    }
  }
}

TEST_CASE("non-isomorphic graphs are rejected") {
  CHECK_FALSE(isomorphic(cycle(6), wreath_product(cycle(3), complete_digraph(2))).has_value());
  CHECK_FALSE(isomorphic(cayley_digraph(ConnectionSet::cyclic(7, {1, 2, 4})),
                         cayley_digraph(ConnectionSet::cyclic(7, {1, 2, 3})))
                  .has_value());
  CHECK_FALSE(isomorphic(cycle(5), cycle(6)).has_value());
}

TEST_CASE("automorphism group orders match brute force") {
  const std::vector<Digraph> graphs{cycle(6), k_cube(2), cayley_digraph(ConnectionSet::cyclic(7, {1, 2, 4})),
                                    cayley_digraph(ConnectionSet::cyclic(7, {1, 2, 3})), complete_digraph(5),
                                    DigraphBuilder(4).add_arc(0, 1).add_arc(1, 2).build()};
  for (const auto& g : graphs) CHECK(automorphisms(g).order() == brute_force_aut_order(g));
}

TEST_CASE("for_each_isomorphism enumerates all automorphisms") {
  const Digraph g = k_cube(3);
  std::size_t n = 0;
  for_each_isomorphism(g, g, [&](const Permutation& pi) {
    CHECK(is_automorphism(g, pi));
    ++n;
    return true;
  });
  CHECK(n == 48);
  std::size_t stopped = 0;
  for_each_isomorphism(g, g, [&](const Permutation&) { return ++stopped < 5; });
  CHECK(stopped == 5);
}

TEST_CASE("Petersen: vertex-transitive, not Cayley") {
  const PermGroup aut = automorphisms(petersen());
  CHECK(aut.order() == 120);
  CHECK(is_vertex_transitive(aut));
  CHECK_FALSE(find_regular_subgroup(aut).has_value());
  for (const auto& x : aut.elements()) {
    if (x.order() == 2) CHECK(x.fixed_point_count() >= 1);
  }
}

TEST_CASE("Cayley graphs have a regular subgroup") {
  for (const auto& g : {cayley_digraph(ConnectionSet::cyclic(3, {1})), k_cube(3), cycle(8),
                        cayley_digraph(ConnectionSet::cyclic(7, {1, 2, 4}))}) {
    const auto reg = is_cayley(g);
    REQUIRE(reg.has_value());
    CHECK(reg->order() == g.order());
    CHECK(orbits(*reg, g.order()).size() == 1);
    for (const auto& x : reg->elements()) {
      if (!x.is_identity()) CHECK(x.fixed_point_count() == 0);
    }
  }
}

TEST_CASE("not vertex-transitive") {
  const Digraph path = DigraphBuilder(3).add_edge(0, 1).add_edge(1, 2).build();
  CHECK_FALSE(is_vertex_transitive(automorphisms(path)));
  CHECK_FALSE(is_cayley(path).has_value());
}

TEST_CASE("automorphism cap") {
  SearchLimits tight;
  tight.aut_cap = 9;
  CHECK_THROWS_AS(automorphisms(petersen(), tight), SizeLimitError);
  SearchLimits small_group;
  small_group.max_group_order = 10;
  CHECK_THROWS_AS(automorphisms(petersen(), small_group), SizeLimitError);
}
