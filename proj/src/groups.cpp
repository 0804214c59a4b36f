#include "vtt/groups.hpp"

#include <algorithm>
#include <sstream>

#include "vtt/errors.hpp"

namespace vtt {

namespace {

// Keeps products of two residues inside int64.
constexpr Residue kMaxModulus = Residue{1} << 31;

void require_modulus(Residue n) {
  if (n < 2) {
    throw InvalidArgument("modulus must be >= 2, got " + std::to_string(n));
  }
  if (n >= kMaxModulus) {
    throw InvalidArgument("modulus too large: " + std::to_string(n));
  }
}

void require_unit(Residue a, Residue n) {
  require_modulus(n);
  if (gcd(mod_floor(a, n), n) != 1) {
    std::ostringstream msg;
    msg << a << " is not a unit modulo " << n;
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

Residue mod_floor(Residue a, Residue n) noexcept {
  Residue r = a % n;
  return r < 0 ? r + n : r;
}

Residue mul_mod(Residue a, Residue b, Residue n) noexcept {
  __extension__ using wide = __int128;
  return static_cast<Residue>(static_cast<wide>(mod_floor(a, n)) * mod_floor(b, n) % n);
}

Residue gcd(Residue a, Residue b) noexcept {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Residue t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(Residue n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Residue d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_odd_prime(Residue n) noexcept { return n != 2 && is_prime(n); }

Residue euler_totient(Residue n) {
  if (n < 1) throw InvalidArgument("totient needs n >= 1");
  Residue result = n;
  Residue m = n;
  for (Residue d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    result -= result / d;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Residue> units(Residue n) {
  require_modulus(n);
  std::vector<Residue> out;
  for (Residue a = 1; a < n; ++a) {
    if (gcd(a, n) == 1) out.push_back(a);
  }
  return out;
}

Residue mult_order(Residue a, Residue n) {
  require_unit(a, n);
  Residue x = mod_floor(a, n);
  Residue t = 1;
  for (Residue power = x; power != 1; power = mul_mod(power, x, n)) ++t;
  return t;
}

std::vector<Residue> cyclic_subgroup(Residue a, Residue n) {
  require_unit(a, n);
  std::vector<Residue> out{1};
  Residue x = mod_floor(a, n);
  for (Residue power = x; power != 1; power = mul_mod(power, x, n)) out.push_back(power);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Residue>> left_cosets(std::span<const Residue> subgroup, Residue n) {
  require_modulus(n);
  std::vector<Residue> h(subgroup.begin(), subgroup.end());
  for (auto& x : h) x = mod_floor(x, n);
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());

  if (h.empty() || !std::binary_search(h.begin(), h.end(), Residue{1})) {
    throw InvalidArgument("subgroup must contain 1");
  }
  for (Residue x : h) {
    if (gcd(x, n) != 1) throw InvalidArgument("subgroup element " + std::to_string(x) + " is not a unit");
    for (Residue y : h) {
      if (!std::binary_search(h.begin(), h.end(), mul_mod(x, y, n))) {
        throw InvalidArgument("subset is not closed under multiplication mod " + std::to_string(n));
      }
    }
  }

  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Residue>> cosets;
  for (Residue b : units(n)) {
    if (taken[static_cast<std::size_t>(b)]) continue;
    std::vector<Residue> coset;
    coset.reserve(h.size());
    for (Residue x : h) {
      Residue y = mul_mod(b, x, n);
      taken[static_cast<std::size_t>(y)] = 1;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::vector<Residue> divisors(Residue r) {
  if (r < 1) throw InvalidArgument("divisors needs r >= 1, got " + std::to_string(r));
  std::vector<Residue> low, high;
  for (Residue d = 1; d * d <= r; ++d) {
    if (r % d != 0) continue;
    low.push_back(d);
    if (d != r / d) high.push_back(r / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Residue signed_residue(Residue x, Residue n) noexcept {
  Residue r = mod_floor(x, n);
  return 2 * r > n ? r - n : r;
}

// ---- AbelianGroup ----------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<Residue> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InvalidArgument("group needs at least one cyclic factor");
  for (Residue m : moduli_) {
    require_modulus(m);
    order_ *= static_cast<std::size_t>(m);
    if (order_ > (std::size_t{1} << 31)) throw InvalidArgument("group order too large");
  }
}

void AbelianGroup::check_arity(const GroupElement& x) const {
  if (x.coords.size() != moduli_.size()) {
    throw InvalidArgument("element has " + std::to_string(x.coords.size()) + " coordinates, group " +
                          name() + " needs " + std::to_string(moduli_.size()));
  }
}

GroupElement AbelianGroup::identity() const { return GroupElement{std::vector<Residue>(moduli_.size(), 0)}; }

GroupElement AbelianGroup::element(std::span<const Residue> coords) const {
  GroupElement x{std::vector<Residue>(coords.begin(), coords.end())};
  check_arity(x);
  for (std::size_t i = 0; i < moduli_.size(); ++i) x.coords[i] = mod_floor(x.coords[i], moduli_[i]);
  return x;
}

GroupElement AbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  check_arity(x);
  check_arity(y);
  GroupElement z = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) z.coords[i] = mod_floor(x.coords[i] + y.coords[i], moduli_[i]);
  return z;
}

GroupElement AbelianGroup::negate(const GroupElement& x) const {
  check_arity(x);
  GroupElement z = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) z.coords[i] = mod_floor(-x.coords[i], moduli_[i]);
  return z;
}

GroupElement AbelianGroup::scale(Residue k, const GroupElement& x) const {
  check_arity(x);
  GroupElement z = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) z.coords[i] = mul_mod(k, x.coords[i], moduli_[i]);
  return z;
}

std::size_t AbelianGroup::index_of(const GroupElement& x) const {
  check_arity(x);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(mod_floor(x.coords[i], moduli_[i]));
  }
  return idx;
}

GroupElement AbelianGroup::at(std::size_t index) const {
  if (index >= order_) throw InvalidArgument("element index out of range");
  GroupElement x = identity();
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    auto m = static_cast<std::size_t>(moduli_[i]);
    x.coords[i] = static_cast<Residue>(index % m);
    index /= m;
  }
  return x;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(at(i));
  return out;
}

std::string AbelianGroup::name() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) os << 'x';
    os << 'Z' << moduli_[i];
  }
  return os.str();
}

}  // namespace vtt
