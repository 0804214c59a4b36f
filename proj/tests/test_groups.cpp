#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "vtt/errors.hpp"
#include "vtt/groups.hpp"

using namespace vtt;

TEST_CASE("mixed-radix indexing round-trips") {
  AbelianGroup g({3, 5, 2});
  CHECK(g.order() == 30);
  CHECK(g.name() == "Z3xZ5xZ2");
  for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.at(i)) == i);
  CHECK(g.index_of(g.element({1, 0, 0})) == 10);
  CHECK(g.element({-1, 7, 3}) == g.element({2, 2, 1}));
}

TEST_CASE("group axioms on Z3 x Z3 and Z9") {
  for (const auto& g : {AbelianGroup({3, 3}), AbelianGroup::cyclic(9)}) {
    const auto els = g.elements();
    for (const auto& x : els) {
      CHECK(g.add(x, g.identity()) == x);
      CHECK(g.add(x, g.negate(x)) == g.identity());
      CHECK(g.scale(-1, x) == g.negate(x));
      for (const auto& y : els) CHECK(g.add(x, y) == g.add(y, x));
    }
  }
}

TEST_CASE("bad moduli and arity throw") {
  CHECK_THROWS_AS(AbelianGroup({1}), InvalidArgument);
  CHECK_THROWS_AS(AbelianGroup(std::vector<Residue>{}), InvalidArgument);
  CHECK_THROWS_AS(AbelianGroup::cyclic(5).element({1, 2}), InvalidArgument);
}

TEST_CASE("number theory helpers") {
  CHECK(mod_floor(-3, 7) == 4);
  CHECK(signed_residue(6, 7) == -1);
  CHECK(signed_residue(3, 7) == 3);
  CHECK(gcd(12, 18) == 6);
  std::vector<Residue> primes;
  for (Residue n = 0; n < 40; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  CHECK(primes == std::vector<Residue>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
  CHECK_FALSE(is_odd_prime(2));
  CHECK(is_odd_prime(331));
  CHECK(divisors(165) == std::vector<Residue>{1, 3, 5, 11, 15, 33, 55, 165});
  CHECK(units(10) == std::vector<Residue>{1, 3, 7, 9});
  for (Residue n = 2; n < 60; ++n) CHECK(euler_totient(n) == static_cast<Residue>(units(n).size()));
}

TEST_CASE("multiplicative order matches the naive power loop") {
  for (Residue p : {3, 7, 11, 13, 31}) {
    for (Residue a : units(p)) {
      Residue t = 1, x = a % p;
      while (x != 1) {
        x = x * a % p;
        ++t;
      }
      CHECK(mult_order(a, p) == t);
      CHECK(cyclic_subgroup(a, p).size() == static_cast<std::size_t>(t));
    }
  }
}

TEST_CASE("cosets of <a> partition the units") {
  for (Residue p : {7, 11, 13, 17}) {
    for (Residue a : units(p)) {
      const auto h = cyclic_subgroup(a, p);
      const auto cosets = left_cosets(h, p);
      CHECK(cosets.size() * h.size() == units(p).size());
      std::vector<Residue> all;
      for (const auto& c : cosets) {
        CHECK(c.size() == h.size());
        all.insert(all.end(), c.begin(), c.end());
      }
      std::sort(all.begin(), all.end());
      CHECK(all == units(p));
    }
  }
  const std::vector<Residue> not_subgroup{1, 2};
  CHECK_THROWS_AS(left_cosets(not_subgroup, 7), InvalidArgument);
}
