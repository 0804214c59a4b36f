#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "vtt/enumeration.hpp"
#include "vtt/errors.hpp"

using namespace vtt;

namespace {

oracle::ResidueSet as_set(const SetMask& s) {
  const auto r = decode(s);
  return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("encode and decode") {
  const std::vector<Residue> r{1, 3, 4, 5, 9};
  const SetMask s = encode(11, r);
  CHECK(s.bits == 0b11101u);
  CHECK(decode(s) == r);
  CHECK(to_connection_set(s) == ConnectionSet::cyclic(11, {1, 3, 4, 5, 9}));
  CHECK(encode(ConnectionSet::cyclic(11, {2, 6, 7, 8, 10})).bits == 0b00010u);
  const std::vector<Residue> bad{1, 10, 2, 3, 4};
  CHECK_THROWS_AS(encode(11, bad), InvalidArgument);
  for (const auto& m : all_sets(13)) CHECK(encode(13, decode(m)) == m);
}

TEST_CASE("budget and primality guards") {
  CHECK(half_order(31, 30) == 15);
  CHECK_THROWS_AS(half_order(9, 30), InvalidArgument);
  CHECK_THROWS_AS(half_order(2, 30), InvalidArgument);
  CHECK_THROWS_AS(half_order(31, 10), SizeLimitError);
  CHECK_THROWS_AS(half_order(67, 64), SizeLimitError);
  CHECK(all_sets(7).size() == 8);
}

TEST_CASE("act is a group action") {
  std::mt19937_64 rng(1);
  for (Residue p : {3, 5, 7, 11, 13, 31, 61}) {
    const auto us = units(p);
    const unsigned h = static_cast<unsigned>((p - 1) / 2);
    for (int trial = 0; trial < 30; ++trial) {
      const SetMask s{p, rng() & ((std::uint64_t{1} << h) - 1)};
      CHECK(act(1, s) == s);
      const Residue a = us[rng() % us.size()], b = us[rng() % us.size()];
      CHECK(act(a, act(b, s)) == act(mul_mod(a, b, p), s));
      CHECK(as_set(act(a, s)) == oracle::scale(a, as_set(s), p));
    }
  }
}

TEST_CASE("classes match the reference sweep for p <= 23") {
  for (Residue p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const auto expected = oracle::classes(p);
    const auto report = equivalence_classes(p, {30, 1, true});
    REQUIRE(report.classes.size() == expected.size());
    std::set<std::set<oracle::ResidueSet>> got;
    std::uint64_t total = 0;
    for (const auto& cls : report.classes) {
      std::set<oracle::ResidueSet> members;
      for (const auto& m : cls.members) members.insert(as_set(m));
      CHECK(members.size() == cls.size);
      CHECK(cls.members.front() == cls.representative);
      got.insert(members);
      total += cls.size;
    }
    CHECK(got == std::set<std::set<oracle::ResidueSet>>(expected.begin(), expected.end()));
    CHECK(total == report.total_sets);
  }
}

TEST_CASE("p = 11 classes equal the published listing") {
  const std::vector<std::vector<oracle::ResidueSet>> listing{
      {{1, 2, 3, 4, 5}, {2, 4, 6, 8, 10}, {3, 6, 9, 1, 4}, {4, 8, 1, 5, 9}, {5, 10, 4, 9, 3},
       {6, 1, 7, 2, 8}, {7, 3, 10, 6, 2}, {8, 5, 2, 10, 7}, {9, 7, 5, 3, 1}, {10, 9, 8, 7, 6}},
      {{1, 2, 3, 7, 5}, {2, 4, 6, 3, 10}, {3, 6, 9, 10, 4}, {4, 8, 1, 6, 9}, {5, 10, 4, 2, 3},
       {6, 1, 7, 9, 8}, {7, 3, 10, 5, 2}, {8, 5, 2, 1, 7}, {9, 7, 5, 8, 1}, {10, 9, 8, 4, 6}},
      {{1, 2, 3, 4, 6}, {2, 4, 6, 8, 1}, {3, 6, 9, 1, 7}, {4, 8, 1, 5, 2}, {5, 10, 4, 9, 8},
       {6, 1, 7, 2, 3}, {7, 3, 10, 6, 9}, {8, 5, 2, 10, 4}, {9, 7, 5, 3, 10}, {10, 9, 8, 7, 5}},
      {{1, 9, 3, 4, 5}, {2, 7, 6, 8, 10}},
  };
  std::set<std::set<oracle::ResidueSet>> expected;
  for (const auto& cls : listing) expected.emplace(cls.begin(), cls.end());

  const auto report = equivalence_classes(11, {30, 1, true});
  std::set<std::set<oracle::ResidueSet>> got;
  std::multiset<std::size_t> sizes;
  for (const auto& cls : report.classes) {
    std::set<oracle::ResidueSet> members;
    for (const auto& m : cls.members) members.insert(as_set(m));
    got.insert(members);
    sizes.insert(cls.size);
  }
  CHECK(got == expected);
  CHECK(sizes == std::multiset<std::size_t>{2, 10, 10, 10});
}

TEST_CASE("worker count does not change the report") {
  for (Residue p : {13, 29, 31}) {
    const auto one = equivalence_classes(p, {30, 1, false});
    for (unsigned w : {2u, 3u, 8u}) {
      const auto many = equivalence_classes(p, {30, w, false});
      REQUIRE(many.classes.size() == one.classes.size());
      for (std::size_t i = 0; i < one.classes.size(); ++i) {
        CHECK(many.classes[i].representative == one.classes[i].representative);
        CHECK(many.classes[i].size == one.classes[i].size);
      }
    }
  }
}

TEST_CASE("orbit_of agrees with class sizes") {
  const auto report = equivalence_classes(13, {30, 1, true});
  for (const auto& cls : report.classes) CHECK(orbit_of(cls.representative) == cls.members);
}

TEST_CASE("invariant sets: construction, count and law") {
  for (Residue p : {3, 5, 7, 11, 13, 17, 19}) {
    for (Residue a : units(p)) {
      const auto sets = invariant_sets(p, a);
      CHECK(sets.size() == oracle::fixed_sets(p, a));
      CHECK(BigInt(sets.size()) == invariant_set_count(p, a));
      for (const auto& s : sets) CHECK(act(a, s) == s);
    }
  }
  // p = 11, a = 5: <5> = {1, 3, 4, 5, 9} and its negative.
  const auto five = invariant_sets(11, 5);
  REQUIRE(five.size() == 2);
  std::set<oracle::ResidueSet> got{as_set(five[0]), as_set(five[1])};
  CHECK(got == std::set<oracle::ResidueSet>{{1, 3, 4, 5, 9}, {2, 6, 7, 8, 10}});
  // p = 13, a = 3: four cosets, four invariant sets.
  CHECK(invariant_sets(13, 3).size() == 4);
  CHECK(invariant_sets(13, 12).empty());
}

TEST_CASE("Burnside count agrees with the reference sweep") {
  for (Residue p : {3, 5, 7, 11, 13, 17, 19, 23}) CHECK(burnside_count(p) == BigInt(oracle::classes(p).size()));
}
