#pragma once

// Explicit enumeration of tournament connection sets on Z_p and their
// classes under S -> aS for units a.
//
// A tournament set S on Z_p contains exactly one of i, p - i for every
// i = 1..(p-1)/2, so it is a (p-1)/2-bit mask: bit i-1 set iff i is in S.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "vtt/bigint.hpp"
#include "vtt/graphs.hpp"
#include "vtt/groups.hpp"
#include "vtt/kernels.hpp"

namespace vtt {

struct SetMask {
  Residue p = 3;
  std::uint64_t bits = 0;

  friend bool operator==(const SetMask&, const SetMask&) = default;
  friend auto operator<=>(const SetMask&, const SetMask&) = default;
};

struct EnumerationOptions {
  /// Largest (p-1)/2 accepted for explicit enumeration.
  unsigned budget_bits = 30;
  /// Worker threads for class enumeration; output does not depend on it.
  unsigned workers = 1;
  /// Keep every class member, not just the representative.
  bool members = false;
};

/// Throws InvalidArgument unless p is an odd prime, SizeLimitError when
/// (p-1)/2 exceeds the budget. Returns (p-1)/2.
unsigned half_order(Residue p, unsigned budget_bits);

/// Sorted residues of the set.
std::vector<Residue> decode(const SetMask& s);
/// Throws InvalidArgument when the residues are not a tournament set on Z_p.
SetMask encode(Residue p, std::span<const Residue> residues);
SetMask encode(const ConnectionSet& s);
ConnectionSet to_connection_set(const SetMask& s);

/// Every mask for p exactly once, ascending.
class MaskRange {
 public:
  MaskRange(Residue p, unsigned budget_bits = 30);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SetMask;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(Residue p, std::uint64_t bits) : p_(p), bits_(bits) {}
    SetMask operator*() const { return {p_, bits_}; }
    iterator& operator++() {
      ++bits_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++bits_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.bits_ == b.bits_; }

   private:
    Residue p_ = 3;
    std::uint64_t bits_ = 0;
  };

  iterator begin() const { return {p_, 0}; }
  iterator end() const { return {p_, std::uint64_t{1} << half_}; }
  std::uint64_t size() const { return std::uint64_t{1} << half_; }

 private:
  Residue p_;
  unsigned half_;
};

MaskRange all_sets(Residue p, unsigned budget_bits = 30);

/// Multiplication by the unit a as a signed bit permutation on masks.
kernels::SignedPermutation unit_action(Residue p, Residue a);

/// Mask of aS.
SetMask act(Residue a, const SetMask& s);

struct EquivalenceClass {
  SetMask representative;
  std::size_t size = 0;
  /// Sorted; filled only when requested.
  std::vector<SetMask> members;
};

struct ClassReport {
  Residue p = 3;
  std::uint64_t total_sets = 0;
  /// Sorted by representative, which is the smallest mask of its class.
  std::vector<EquivalenceClass> classes;
};

ClassReport equivalence_classes(Residue p, const EnumerationOptions& options = {});

/// The distinct masks aS for all units a, sorted.
std::vector<SetMask> orbit_of(const SetMask& s);

/// All masks with aS = S, ascending, built as unions of one coset of <a>
/// from each pair {C, -C}. Empty when <a> has even order.
std::vector<SetMask> invariant_sets(Residue p, Residue a, unsigned budget_bits = 30);

/// |{S : aS = S}|: 2^((p-1)/(2 ord a)) for odd order, else 0.
BigInt invariant_set_count(Residue p, Residue a);

/// Class count as the average of invariant_set_count over all units.
BigInt burnside_count(Residue p);

}  // namespace vtt
