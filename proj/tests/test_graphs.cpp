#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "vtt/errors.hpp"
#include "vtt/graphs.hpp"
#include "vtt/perm.hpp"
#include "vtt/search.hpp"

using namespace vtt;

namespace {

std::vector<std::vector<Residue>> abelian_groups_up_to(std::size_t max_order) {
  // Direct products of up to three cyclic factors, as moduli lists.
  std::vector<std::vector<Residue>> out;
  for (Residue a = 2; a <= static_cast<Residue>(max_order); ++a) {
    out.push_back({a});
    for (Residue b = 2; a * b <= static_cast<Residue>(max_order); ++b) {
      out.push_back({a, b});
      for (Residue c = 2; a * b * c <= static_cast<Residue>(max_order); ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

Permutation translation(const AbelianGroup& g, const GroupElement& t) {
  std::vector<Vertex> images(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) images[i] = g.index_of(g.add(g.at(i), t));
  return Permutation(images);
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST_CASE("Cayley digraph arcs follow h - g in S") {
  const auto s = ConnectionSet::cyclic(7, {1, 2, 4});
  const Digraph g = cayley_digraph(s);
  CHECK(g.order() == 7);
  CHECK(g.arc_count() == 21);
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = 0; v < 7; ++v) {
      const Residue d = mod_floor(static_cast<Residue>(v) - static_cast<Residue>(u), 7);
      CHECK(g.has_arc(u, v) == (d == 1 || d == 2 || d == 4));
    }
  }
  CHECK(is_tournament(g));
  CHECK_THROWS_AS(cayley_digraph(ConnectionSet::cyclic(7, {0, 1})), InvalidConnectionSet);
}

TEST_CASE("Cayley digraphs are vertex-transitive via translations, |G| <= 81") {
  std::mt19937_64 rng(81);
  for (const auto& moduli : abelian_groups_up_to(81)) {
    const AbelianGroup grp(moduli);
    std::vector<GroupElement> members;
    for (std::size_t i = 1; i < grp.order(); ++i) {
      if (rng() % 3 == 0) members.push_back(grp.at(i));
    }
    const Digraph g = cayley_digraph(ConnectionSet(grp, members));
    std::vector<bool> reached(grp.order(), false);
    for (const auto& t : grp.elements()) {
      const auto pi = translation(grp, t);
      REQUIRE(is_automorphism(g, pi));
      reached[pi(0)] = true;
    }
    CHECK(std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("tournament connection sets exist iff the order is odd, |G| <= 8") {
  for (const auto& moduli : abelian_groups_up_to(8)) {
    const AbelianGroup grp(moduli);
    const std::size_t n = grp.order();
    std::size_t valid = 0;
    for (std::uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
      std::vector<GroupElement> members;
      for (std::size_t i = 1; i < n; ++i) {
        if ((bits >> (i - 1)) & 1u) members.push_back(grp.at(i));
      }
      const ConnectionSet s(grp, members);
      const bool ok = validate_tournament_set(s);
      CHECK(ok == is_tournament(cayley_digraph(s)));
      valid += ok;
    }
    INFO(grp.name());
    if (n % 2 == 1) {
      CHECK(valid == (std::size_t{1} << ((n - 1) / 2)));
    } else {
      CHECK(valid == 0);
    }
  }
}

TEST_CASE("validate_graph_set means S = -S") {
  CHECK(validate_graph_set(ConnectionSet::cyclic(8, {1, 7, 4})));
  CHECK_FALSE(validate_graph_set(ConnectionSet::cyclic(8, {1, 4})));
  CHECK_FALSE(validate_graph_set(ConnectionSet::cyclic(8, {0, 1, 7})));
}

TEST_CASE("tournament_mask encodes members up to (p-1)/2") {
  CHECK(ConnectionSet::cyclic(11, {1, 3, 4, 5, 9}).tournament_mask() == 0b11101u);
  CHECK_FALSE(ConnectionSet::cyclic(11, {1, 10}).tournament_mask().has_value());
  CHECK_FALSE(ConnectionSet::cyclic(9, {1, 2, 3, 4}).tournament_mask().has_value());
}

TEST_CASE("standard families") {
  const Digraph q3 = k_cube(3);
  CHECK(q3.order() == 8);
  CHECK(q3.arc_count() == 24);
  CHECK(q3.is_symmetric());
  const Digraph c5 = cycle(5);
  CHECK(c5.arc_count() == 10);
  CHECK(complete_digraph(4).arc_count() == 12);
  const Digraph pet = petersen();
  CHECK(pet.order() == 10);
  CHECK(pet.arc_count() == 30);
  const auto labels = kneser_labels(5, 2);
  for (const auto& [u, v] : pet.arcs()) {
    std::vector<std::size_t> common;
    std::set_intersection(labels[u].begin(), labels[u].end(), labels[v].begin(), labels[v].end(),
                          std::back_inserter(common));
    CHECK(common.empty());
  }
  CHECK(kneser(4, 2, 1).arc_count() == 6 * 4);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
  CHECK_THROWS_AS(k_cube(0), InvalidArgument);
}

TEST_CASE("metacirculant rho and sigma are automorphisms") {
  struct Case {
    std::size_t m;
    Residue n, a;
    std::vector<std::vector<Residue>> parts;
  };
  const std::vector<Case> cases{
      {2, 5, 2, {{1, 4}, {0}}},
      {3, 7, 2, {{1, 2, 4}, {0, 3}, {}}},
      {2, 13, 5, {{1, 8, 12, 5}, {2, 11}}},
  };
  for (const auto& c : cases) {
    const Digraph g = metacirculant(c.m, c.n, c.a, c.parts);
    CHECK(g.order() == c.m * static_cast<std::size_t>(c.n));
    CHECK(is_automorphism(g, Permutation(metacirculant_rho(c.m, c.n))));
    CHECK(is_automorphism(g, Permutation(metacirculant_sigma(c.m, c.n, c.a))));
  }
}

TEST_CASE("Petersen as the metacirculant G(2,5,2; {1,4}, {0})") {
  const std::vector<std::vector<Residue>> parts{{1, 4}, {0}};
  CHECK(isomorphic(metacirculant(2, 5, 2, parts), petersen()).has_value());
}

TEST_CASE("metacirculant conditions are enforced") {
  const std::vector<std::vector<Residue>> zero_in_s0{{0, 1}, {0}};
  CHECK_THROWS_AS(metacirculant(2, 5, 2, zero_in_s0), InvalidArgument);
  const std::vector<std::vector<Residue>> not_invariant{{1}, {0}};
  CHECK_THROWS_AS(metacirculant(2, 5, 2, not_invariant), InvalidArgument);
}

TEST_CASE("wreath product arc count") {
  std::mt19937_64 rng(5);
  const std::vector<Digraph> pool{cycle(3), cycle(5), k_cube(2), petersen(),
                                  cayley_digraph(ConnectionSet::cyclic(7, {1, 2, 4}))};
  for (const auto& g : pool) {
    for (const auto& h : pool) {
      const Digraph w = wreath_product(g, h);
      CHECK(w.order() == g.order() * h.order());
      CHECK(w.arc_count() == g.arc_count() * h.order() * h.order() + g.order() * h.arc_count());
    }
  }
  const Digraph w = lexicographic_product(cycle(3), cycle(4));
  CHECK(w.has_arc(0 * 4 + 1, 1 * 4 + 3));
  CHECK(w.has_arc(2 * 4 + 0, 2 * 4 + 1));
  CHECK_FALSE(w.has_arc(2 * 4 + 0, 2 * 4 + 2));
}

TEST_CASE("cyclic triangle counts match a direct triple loop") {
  const Digraph g = cayley_digraph(ConnectionSet::cyclic(13, {1, 2, 3, 5, 6, 9}));
  const auto matrix = pair_triangle_matrix(g);
  for (Vertex u = 0; u < 13; ++u) {
    for (Vertex v = 0; v < 13; ++v) {
      std::size_t n = 0;
      for (Vertex w = 0; w < 13; ++w) n += g.has_arc(v, w) && g.has_arc(w, u);
      CHECK(cyclic_triangles_through(g, u, v) == n);
      CHECK(matrix[u * 13 + v] == n);
    }
  }
}

TEST_CASE("triangle profile is invariant under relabelling") {
  std::mt19937_64 rng(9);
  for (const auto& s : {ConnectionSet::cyclic(9, {1, 7, 3, 5}), ConnectionSet::cyclic(11, {1, 3, 4, 5, 9}),
                        ConnectionSet::cyclic(13, {1, 2, 3, 4, 5, 6})}) {
    const Digraph g = cayley_digraph(s);
    const auto base = triangle_profile(g);
    for (int k = 0; k < 5; ++k) {
      const auto pi = random_permutation(g.order(), rng);
      const auto moved = triangle_profile(relabel(g, pi.images()));
      CHECK(moved.summary == base.summary);
      CHECK(moved.max_count == base.max_count);
    }
  }
  CHECK_THROWS_AS(triangle_profile(petersen()), InvalidArgument);
}

TEST_CASE("coset condition") {
  const AbelianGroup z9 = AbelianGroup::cyclic(9);
  const std::vector<GroupElement> h{z9.element({0}), z9.element({3}), z9.element({6})};
  const auto union_of_cosets = ConnectionSet::cyclic(9, {1, 4, 7});
  CHECK(morris_coset_condition(union_of_cosets, h).holds);
  const auto broken = ConnectionSet::cyclic(9, {1, 4, 3});
  const auto res = morris_coset_condition(broken, h);
  CHECK_FALSE(res.holds);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->coords[0] == 1);
  const std::vector<GroupElement> not_closed{z9.element({0}), z9.element({3})};
  CHECK_THROWS_AS(morris_coset_condition(union_of_cosets, not_closed), InvalidArgument);
}
