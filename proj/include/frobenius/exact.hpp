#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobenius/instance.hpp"

namespace frob {

struct TableLimits {
  std::uint64_t max_cells = 100'000'000;
};

/// Exact denumerants G(t) for 0 <= t <= ceiling: the number of x >= 0 with
/// a . x = t. Counts live in machine words while they fit and switch to GMP
/// integers otherwise; the switch is invisible to callers.
class DenumerantTable {
 public:
  const FrobeniusInstance& instance() const { return inst_; }
  std::int64_t ceiling() const { return ceiling_; }
  bool uses_big_integers() const { return !big_.empty(); }

  mpz_class count(std::int64_t t) const;
  /// Sign of counts[t] - s.
  int compare(std::int64_t t, std::uint64_t s) const;

 private:
  friend DenumerantTable denumerant_table(const FrobeniusInstance&, std::int64_t, TableLimits);
  DenumerantTable(FrobeniusInstance inst, std::int64_t ceiling) : inst_(std::move(inst)), ceiling_(ceiling) {}

  FrobeniusInstance inst_;
  std::int64_t ceiling_;
  std::vector<std::uint64_t> small_;
  std::vector<mpz_class> big_;
};

/// Coin-counting DP, O(N T) time and O(T) cells.
/// Throws Error{CeilingTooLarge} when T + 1 exceeds limits.max_cells.
DenumerantTable denumerant_table(const FrobeniusInstance& inst, std::int64_t ceiling, TableLimits limits = {});

/// Number of representations of `target` by arbitrary positive coins (no
/// coprimality requirement).
mpz_class count_representations(std::span<const std::int64_t> coins, std::int64_t target);
bool is_representable(std::span<const std::int64_t> coins, std::int64_t target);

/// Largest positive t <= ceiling with exactly s representations; nullopt when
/// no such t exists below the ceiling. The caller certifies that every
/// t > ceiling has more than s representations.
std::optional<std::int64_t> s_frobenius_exact(const DenumerantTable& table, std::uint64_t s, std::int64_t ceiling);
std::optional<std::int64_t> s_frobenius_exact(const FrobeniusInstance& inst, std::uint64_t s, std::int64_t ceiling,
                                              TableLimits limits = {});

}  // namespace frob
