#pragma once

// Finite abelian groups given by cyclic factors, and unit-group arithmetic mod n.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace vtt {

using Residue = std::int64_t;

/// Residue tuple, one coordinate per cyclic factor.
struct GroupElement {
  std::vector<Residue> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Direct product Z_{m0} x Z_{m1} x ... with every modulus >= 2.
///
/// Elements are indexed by their mixed-radix rank: the first coordinate is
/// the most significant digit, so (a, b) in Z_3^2 has index 3a + b.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<Residue> moduli);

  static AbelianGroup cyclic(Residue n) { return AbelianGroup({n}); }

  const std::vector<Residue>& moduli() const noexcept { return moduli_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  bool is_cyclic_factor() const noexcept { return moduli_.size() == 1; }

  GroupElement identity() const;
  /// Reduces every coordinate into [0, modulus); throws on arity mismatch.
  GroupElement element(std::span<const Residue> coords) const;
  GroupElement element(std::initializer_list<Residue> coords) const {
    return element(std::span<const Residue>(coords.begin(), coords.size()));
  }

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;
  GroupElement scale(Residue k, const GroupElement& x) const;

  std::size_t index_of(const GroupElement& x) const;
  GroupElement at(std::size_t index) const;

  /// All elements in index order.
  std::vector<GroupElement> elements() const;

  /// "Z7" or "Z3xZ3".
  std::string name() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  void check_arity(const GroupElement& x) const;

  std::vector<Residue> moduli_;
  std::size_t order_ = 1;
};

Residue mod_floor(Residue a, Residue n) noexcept;
Residue mul_mod(Residue a, Residue b, Residue n) noexcept;
Residue gcd(Residue a, Residue b) noexcept;

/// Deterministic trial division.
bool is_prime(Residue n) noexcept;
bool is_odd_prime(Residue n) noexcept;

Residue euler_totient(Residue n);

/// Sorted list of all a in [1, n) coprime to n.
std::vector<Residue> units(Residue n);

/// Smallest t >= 1 with a^t = 1 (mod n).
Residue mult_order(Residue a, Residue n);

/// {a^0, a^1, ...} mod n, sorted.
std::vector<Residue> cyclic_subgroup(Residue a, Residue n);

/// Partition of units(n) into cosets b<H>, each sorted, ordered by minimum.
std::vector<std::vector<Residue>> left_cosets(std::span<const Residue> subgroup, Residue n);

/// All positive divisors of r, ascending.
std::vector<Residue> divisors(Residue r);

/// Representative of x in [-(n-1)/2, n/2]; display convention only.
Residue signed_residue(Residue x, Residue n) noexcept;

}  // namespace vtt
