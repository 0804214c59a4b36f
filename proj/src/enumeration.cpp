#include "vtt/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "vtt/errors.hpp"

namespace vtt {

namespace {

constexpr unsigned kMaxKernelBits = 32;
constexpr std::size_t kBlock = 4096;

void require_odd_prime(Residue p) {
  if (!is_odd_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
}

// Smallest masks of each class in [first, last), in ascending order.
std::vector<std::uint64_t> representatives_in(const std::vector<kernels::SignedPermutation>& actions,
                                              std::uint64_t first, std::uint64_t last) {
  std::vector<std::uint64_t> reps;
  std::vector<std::uint32_t> in(kBlock), out(kBlock);
  std::vector<char> is_rep(kBlock);
  for (std::uint64_t start = first; start < last; start += kBlock) {
    const auto len = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, last - start));
    for (std::size_t k = 0; k < len; ++k) {
      in[k] = static_cast<std::uint32_t>(start + k);
      is_rep[k] = 1;
    }
    for (const auto& action : actions) {
      kernels::signed_permute(action, std::span<const std::uint32_t>(in.data(), len), std::span(out.data(), len));
      for (std::size_t k = 0; k < len; ++k) {
        if (out[k] < in[k]) is_rep[k] = 0;
      }
    }
    for (std::size_t k = 0; k < len; ++k) {
      if (is_rep[k]) reps.push_back(in[k]);
    }
  }
  return reps;
}

}  // namespace

unsigned half_order(Residue p, unsigned budget_bits) {
  require_odd_prime(p);
  const auto half = static_cast<unsigned>((p - 1) / 2);
  if (half > budget_bits || half > kMaxKernelBits) {
    throw SizeLimitError("p = " + std::to_string(p) + " needs " + std::to_string(half) +
                         " mask bits, over the enumeration budget of " +
                         std::to_string(std::min(budget_bits, kMaxKernelBits)));
  }
  return half;
}

std::vector<Residue> decode(const SetMask& s) {
  std::vector<Residue> out;
  const Residue half = (s.p - 1) / 2;
  for (Residue i = 1; i <= half; ++i) out.push_back((s.bits >> (i - 1)) & 1u ? i : s.p - i);
  std::sort(out.begin(), out.end());
  return out;
}

SetMask encode(Residue p, std::span<const Residue> residues) {
  require_odd_prime(p);
  const Residue half = (p - 1) / 2;
  if (half > 64) throw InvalidArgument("p too large for a 64-bit mask");
  std::vector<char> in(static_cast<std::size_t>(p), 0);
  for (Residue x : residues) in[static_cast<std::size_t>(mod_floor(x, p))] = 1;
  if (in[0]) throw InvalidArgument("tournament set contains 0");
  std::uint64_t bits = 0;
  for (Residue i = 1; i <= half; ++i) {
    const bool pos = in[static_cast<std::size_t>(i)];
    const bool neg = in[static_cast<std::size_t>(p - i)];
    if (pos == neg) {
      throw InvalidArgument("not a tournament set on Z" + std::to_string(p) + ": need exactly one of " +
                            std::to_string(i) + ", " + std::to_string(p - i));
    }
    if (pos) bits |= std::uint64_t{1} << (i - 1);
  }
  return {p, bits};
}

SetMask encode(const ConnectionSet& s) {
  if (!s.group().is_cyclic_factor()) throw InvalidArgument("mask encoding needs a cyclic group");
  std::vector<Residue> residues;
  for (const auto& x : s.members()) residues.push_back(x.coords[0]);
  return encode(s.group().moduli()[0], residues);
}

ConnectionSet to_connection_set(const SetMask& s) { return ConnectionSet::cyclic(s.p, decode(s)); }

MaskRange::MaskRange(Residue p, unsigned budget_bits) : p_(p), half_(half_order(p, budget_bits)) {}

MaskRange all_sets(Residue p, unsigned budget_bits) { return MaskRange(p, budget_bits); }

kernels::SignedPermutation unit_action(Residue p, Residue a) {
  require_odd_prime(p);
  if (mod_floor(a, p) == 0) throw InvalidArgument("multiplier must be a unit mod " + std::to_string(p));
  const Residue half = (p - 1) / 2;
  if (half > static_cast<Residue>(kMaxKernelBits)) throw SizeLimitError("p too large for the mask kernels");
  kernels::SignedPermutation perm;
  perm.width = static_cast<std::uint32_t>(half);
  for (Residue i = 1; i <= half; ++i) {
    const Residue y = mul_mod(a, i, p);
    if (y <= half) {
      perm.target[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(y - 1);
    } else {
      const auto t = static_cast<std::uint8_t>(p - y - 1);
      perm.target[static_cast<std::size_t>(i - 1)] = t;
      perm.xor_mask |= std::uint32_t{1} << t;
    }
  }
  return perm;
}

SetMask act(Residue a, const SetMask& s) {
  require_odd_prime(s.p);
  const Residue p = s.p;
  if (mod_floor(a, p) == 0) throw InvalidArgument("multiplier must be a unit mod " + std::to_string(p));
  const Residue half = (p - 1) / 2;
  std::uint64_t bits = 0;
  for (Residue i = 1; i <= half; ++i) {
    const Residue x = (s.bits >> (i - 1)) & 1u ? i : p - i;
    const Residue y = mul_mod(a, x, p);
    if (y <= half) bits |= std::uint64_t{1} << (y - 1);
  }
  return {p, bits};
}

std::vector<SetMask> orbit_of(const SetMask& s) {
  std::vector<SetMask> out;
  for (Residue a : units(s.p)) out.push_back(act(a, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClassReport equivalence_classes(Residue p, const EnumerationOptions& options) {
  const unsigned half = half_order(p, options.budget_bits);
  std::vector<kernels::SignedPermutation> actions;
  for (Residue a : units(p)) {
    if (a != 1) actions.push_back(unit_action(p, a));
  }

  ClassReport report;
  report.p = p;
  report.total_sets = std::uint64_t{1} << half;

  const unsigned workers = std::max(1u, options.workers);
  const std::uint64_t chunk = (report.total_sets + workers - 1) / workers;
  std::vector<std::vector<std::uint64_t>> partial(workers);
  if (workers == 1) {
    partial[0] = representatives_in(actions, 0, report.total_sets);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = std::min(report.total_sets, w * chunk);
      const std::uint64_t last = std::min(report.total_sets, first + chunk);
      pool.emplace_back([&, w, first, last] { partial[w] = representatives_in(actions, first, last); });
    }
    for (auto& t : pool) t.join();
  }

  std::uint64_t covered = 0;
  for (const auto& reps : partial) {
    for (std::uint64_t bits : reps) {
      EquivalenceClass cls;
      cls.representative = {p, bits};
      auto orbit = orbit_of(cls.representative);
      cls.size = orbit.size();
      if (orbit.front() != cls.representative) throw InternalInconsistency("class representative is not minimal");
      if (options.members) cls.members = std::move(orbit);
      covered += cls.size;
      report.classes.push_back(std::move(cls));
    }
  }
  if (covered != report.total_sets) {
    throw InternalInconsistency("class sizes sum to " + std::to_string(covered) + ", expected " +
                                std::to_string(report.total_sets));
  }
  return report;
}

std::vector<SetMask> invariant_sets(Residue p, Residue a, unsigned budget_bits) {
  require_odd_prime(p);
  if (mod_floor(a, p) == 0) throw InvalidArgument("multiplier must be a unit mod " + std::to_string(p));
  const Residue order = mult_order(a, p);
  if (order % 2 == 0) return {};

  const auto cosets = left_cosets(cyclic_subgroup(a, p), p);
  std::vector<std::size_t> coset_of(static_cast<std::size_t>(p), 0);
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (Residue x : cosets[c]) coset_of[static_cast<std::size_t>(x)] = c;
  }
  // One coset from each {C, -C}; odd order keeps -1 outside <a>, so C != -C.
  std::vector<std::size_t> chosen_side;
  std::vector<std::size_t> other_side;
  std::vector<char> paired(cosets.size(), 0);
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    if (paired[c]) continue;
    const std::size_t neg = coset_of[static_cast<std::size_t>(p - cosets[c].front())];
    if (neg == c) throw InternalInconsistency("coset equals its negative for odd-order subgroup");
    paired[c] = paired[neg] = 1;
    chosen_side.push_back(c);
    other_side.push_back(neg);
  }
  const std::size_t pairs = chosen_side.size();
  if (pairs > budget_bits || pairs >= 63) {
    throw SizeLimitError(std::to_string(pairs) + " coset pairs exceed the enumeration budget of " +
                         std::to_string(budget_bits) + " bits");
  }

  std::vector<SetMask> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << pairs); ++choice) {
    std::vector<Residue> members;
    for (std::size_t k = 0; k < pairs; ++k) {
      const auto& c = cosets[(choice >> k) & 1u ? other_side[k] : chosen_side[k]];
      members.insert(members.end(), c.begin(), c.end());
    }
    out.push_back(encode(p, members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt invariant_set_count(Residue p, Residue a) {
  require_odd_prime(p);
  const Residue order = mult_order(a, p);
  if (order % 2 == 0) return 0;
  return pow2(static_cast<unsigned>((p - 1) / (2 * order)));
}

BigInt burnside_count(Residue p) {
  require_odd_prime(p);
  BigInt total = 0;
  for (Residue a : units(p)) total += invariant_set_count(p, a);
  if (total % (p - 1) != 0) {
    throw InternalInconsistency("Burnside sum " + to_decimal(total) + " is not divisible by " + std::to_string(p - 1));
  }
  return total / (p - 1);
}

}  // namespace vtt
