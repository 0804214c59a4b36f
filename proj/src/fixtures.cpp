#include "vtt/fixtures.hpp"

#include <algorithm>

#include "vtt/errors.hpp"
#include "vtt/search.hpp"

namespace vtt {

std::vector<Residue> unit_multipliers(const ConnectionSet& s, const ConnectionSet& t) {
  if (!s.group().is_cyclic_factor() || !(s.group() == t.group())) {
    throw InvalidArgument("unit multipliers need two sets on the same cyclic group");
  }
  const Residue n = s.group().moduli()[0];
  std::vector<Residue> out;
  for (Residue a : units(n)) {
    std::vector<GroupElement> image;
    for (const auto& x : s.members()) image.push_back(s.group().scale(a, x));
    if (ConnectionSet(s.group(), image) == t) out.push_back(a);
  }
  return out;
}

std::vector<ConnectionSet> tournament_sets(const AbelianGroup& group) {
  if (group.order() % 2 == 0) throw InvalidArgument("tournament sets need a group of odd order");
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (std::size_t i = 1; i < group.order(); ++i) {
    const GroupElement x = group.at(i);
    const GroupElement neg = group.negate(x);
    if (i < group.index_of(neg)) pairs.emplace_back(x, neg);
  }
  if (pairs.size() > 20) throw SizeLimitError("too many tournament sets to list");
  std::vector<ConnectionSet> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << pairs.size()); ++choice) {
    std::vector<GroupElement> members;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      members.push_back((choice >> k) & 1u ? pairs[k].second : pairs[k].first);
    }
    out.emplace_back(group, members);
  }
  return out;
}

ConnectionSet z25_set() { return ConnectionSet::cyclic(25, {1, 4, 5, 6, 9, 11, 14, 16, 19, 20, 21, 24}); }

ConnectionSet z25_set_prime() { return ConnectionSet::cyclic(25, {1, 4, 6, 9, 10, 11, 14, 15, 16, 19, 21, 24}); }

ConnectionSet z9_set() { return ConnectionSet::cyclic(9, {1, 7, 3, 5}); }

ConnectionSet z3sq_set() {
  AbelianGroup g({3, 3});
  std::vector<GroupElement> members{g.element({0, 1}), g.element({2, 0}), g.element({1, 1}), g.element({2, 1})};
  return ConnectionSet(g, members);
}

Z25Check run_z25_check() {
  Z25Check check;
  const auto s = z25_set();
  const auto t = z25_set_prime();
  check.units_tried = units(25);
  // 1 is in S, so a = a*1 must land in S'.
  for (Residue a : check.units_tried) {
    if (t.contains(GroupElement{{a}})) check.candidates.push_back(a);
  }
  for (Residue a : unit_multipliers(s, t)) {
    if (std::find(check.candidates.begin(), check.candidates.end(), a) == check.candidates.end()) {
      throw InternalInconsistency("unit multiplier outside S' despite 1 in S");
    }
    check.multipliers.push_back(a);
  }
  const Digraph wreath = wreath_product(cycle(5), cycle(5));
  check.s_to_wreath = isomorphic(cayley_digraph(s), wreath);
  check.s_prime_to_wreath = isomorphic(cayley_digraph(t), wreath);
  return check;
}

TriangleCheck run_triangle_check() {
  TriangleCheck check;
  const Digraph z9 = cayley_digraph(z9_set());
  const Digraph z3sq = cayley_digraph(z3sq_set());
  const auto p9 = triangle_profile(z9);
  check.z9_max = p9.max_count;
  for (const auto& a : p9.arcs) {
    if (a.count == p9.max_count) {
      check.z9_witness = {a.from, a.to};
      break;
    }
  }
  check.z3sq_max = triangle_profile(z3sq).max_count;
  check.isomorphism = isomorphic(z9, z3sq);
  return check;
}

CyclicPartnerCheck run_cyclic_partner_check() {
  CyclicPartnerCheck check;
  const Digraph target = cayley_digraph(z3sq_set());
  for (const auto& s : tournament_sets(AbelianGroup::cyclic(9))) {
    ++check.candidates_tried;
    if (auto pi = isomorphic(cayley_digraph(s), target)) {
      check.partners.push_back(s);
      if (!check.z9_partner) {
        check.z9_partner = s;
        check.isomorphism = std::move(pi);
      }
    }
  }
  return check;
}

}  // namespace vtt
