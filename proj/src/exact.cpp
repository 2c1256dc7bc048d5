#include "frobenius/exact.hpp"

#include <algorithm>
#include <string>

#include "frobenius/error.hpp"

namespace frob {

namespace {

// Returns false on uint64 overflow; `counts` is then garbage.
bool fill_small(std::span<const std::int64_t> coins, std::vector<std::uint64_t>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  counts[0] = 1;
  const auto size = static_cast<std::int64_t>(counts.size());
  for (std::int64_t c : coins) {
    for (std::int64_t t = c; t < size; ++t) {
      if (__builtin_add_overflow(counts[t], counts[t - c], &counts[t])) return false;
    }
  }
  return true;
}

void fill_big(std::span<const std::int64_t> coins, std::vector<mpz_class>& counts) {
  for (auto& x : counts) x = 0;
  counts[0] = 1;
  const auto size = static_cast<std::int64_t>(counts.size());
  for (std::int64_t c : coins) {
    for (std::int64_t t = c; t < size; ++t) counts[t] += counts[t - c];
  }
}

}  // namespace

mpz_class DenumerantTable::count(std::int64_t t) const {
  if (t < 0 || t > ceiling_) throw Error(ErrorKind::IndexOutOfRange, "t outside table: " + std::to_string(t));
  if (!big_.empty()) return big_[t];
  return mpz_class(static_cast<unsigned long>(small_[t]));
}

int DenumerantTable::compare(std::int64_t t, std::uint64_t s) const {
  if (t < 0 || t > ceiling_) throw Error(ErrorKind::IndexOutOfRange, "t outside table: " + std::to_string(t));
  if (!big_.empty()) return cmp(big_[t], static_cast<unsigned long>(s));
  const std::uint64_t c = small_[t];
  return c < s ? -1 : (c > s ? 1 : 0);
}

DenumerantTable denumerant_table(const FrobeniusInstance& inst, std::int64_t ceiling, TableLimits limits) {
  if (ceiling < 0) throw Error(ErrorKind::IndexOutOfRange, "negative table ceiling");
  if (static_cast<std::uint64_t>(ceiling) + 1 > limits.max_cells) {
    throw Error(ErrorKind::CeilingTooLarge,
                "table of " + std::to_string(ceiling + 1) + " cells exceeds cap " + std::to_string(limits.max_cells));
  }
  DenumerantTable table(inst, ceiling);
  table.small_.resize(static_cast<std::size_t>(ceiling) + 1);
  if (!fill_small(inst.a(), table.small_)) {
    table.small_.clear();
    table.small_.shrink_to_fit();
    table.big_.resize(static_cast<std::size_t>(ceiling) + 1);
    fill_big(inst.a(), table.big_);
  }
  return table;
}

mpz_class count_representations(std::span<const std::int64_t> coins, std::int64_t target) {
  if (target < 0) return 0;
  std::vector<mpz_class> counts(static_cast<std::size_t>(target) + 1);
  fill_big(coins, counts);
  return counts[target];
}

bool is_representable(std::span<const std::int64_t> coins, std::int64_t target) {
  if (target < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (std::int64_t c : coins) {
    for (std::int64_t t = c; t <= target; ++t) reach[t] |= reach[t - c];
  }
  return reach[target] != 0;
}

std::optional<std::int64_t> s_frobenius_exact(const DenumerantTable& table, std::uint64_t s, std::int64_t ceiling) {
  if (ceiling <= 0) throw Error(ErrorKind::UncertifiedCeiling, "ceiling must be positive");
  if (ceiling > table.ceiling()) {
    throw Error(ErrorKind::IndexOutOfRange, "ceiling " + std::to_string(ceiling) + " beyond table");
  }
  for (std::int64_t t = ceiling; t >= 1; --t) {
    if (table.compare(t, s) == 0) return t;
  }
  return std::nullopt;
}

std::optional<std::int64_t> s_frobenius_exact(const FrobeniusInstance& inst, std::uint64_t s, std::int64_t ceiling,
                                              TableLimits limits) {
  if (ceiling <= 0) throw Error(ErrorKind::UncertifiedCeiling, "ceiling must be positive");
  return s_frobenius_exact(denumerant_table(inst, ceiling, limits), s, ceiling);
}

}  // namespace frob
