#include "vtt/counting.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vtt/errors.hpp"

namespace vtt {

const PhiEntry& PhiTable::at(Residue m) const {
  auto it = std::find_if(entries.begin(), entries.end(), [m](const PhiEntry& e) { return e.m == m; });
  if (it == entries.end()) throw InvalidArgument(std::to_string(m) + " does not divide r = " + std::to_string(r));
  return *it;
}

PhiTable phi_table(Residue p) {
  if (!is_odd_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
  PhiTable table;
  table.p = p;
  table.r = p - 1;
  while (table.r % 2 == 0) {
    table.r /= 2;
    ++table.two_exponent;
  }

  const auto divs = divisors(table.r);
  std::map<Residue, PhiEntry> done;
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    PhiEntry e;
    e.m = *it;
    e.class_size = (p - 1) / e.m;
    for (const auto& [n, entry] : done) {
      if (n % e.m == 0) e.s += entry.k * entry.class_size;
    }
    if (e.class_size % 2 != 0) throw InternalInconsistency("(p-1)/m is odd for m | r");
    const BigInt remaining = pow2(static_cast<unsigned>(e.class_size / 2)) - e.s;
    if (remaining < 0 || remaining % e.class_size != 0) {
      throw InternalInconsistency("2^(c/2) - S(m) = " + to_decimal(remaining) + " is not a non-negative multiple of " +
                                  std::to_string(e.class_size) + " (p = " + std::to_string(p) +
                                  ", m = " + std::to_string(e.m) + ")");
    }
    e.k = remaining / e.class_size;
    done.emplace(e.m, std::move(e));
  }
  for (auto& [m, e] : done) table.entries.push_back(std::move(e));
  return table;
}

BigInt class_count(const PhiTable& table) {
  BigInt total = 0;
  for (const auto& e : table.entries) total += e.k;
  return total;
}

BigInt class_count(Residue p) { return class_count(phi_table(p)); }

std::vector<CountRow> count_table(Residue p_min, Residue p_max) {
  if (p_min > p_max) {
    throw InvalidArgument("empty range " + std::to_string(p_min) + ".." + std::to_string(p_max));
  }
  std::vector<CountRow> rows;
  for (Residue p = std::max<Residue>(p_min, 3); p <= p_max; ++p) {
    if (is_odd_prime(p)) rows.push_back({p, class_count(p)});
  }
  return rows;
}

std::string count_table_tsv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) os << row.p << '\t' << to_decimal(row.count) << '\n';
  return os.str();
}

std::string count_table_json(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) os << "{\"p\":" << row.p << ",\"count\":" << to_decimal(row.count) << "}\n";
  return os.str();
}

}  // namespace vtt
