#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frobenius/interval.hpp"

namespace frob {

/// A validated coefficient tuple 1 < a_1 < ... < a_N with gcd 1, together
/// with the exact integers every bound formula is built from.
class FrobeniusInstance {
 public:
  const std::vector<std::int64_t>& a() const { return a_; }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }
  std::size_t size() const { return a_.size(); }

  /// prod a_i
  const mpz_class& product() const { return product_; }
  /// sum a_i^2, so |a| = sqrt(norm_sq())
  const mpz_class& norm_sq() const { return norm_sq_; }
  /// |alpha_i|^2 = norm_sq - a_i^2, the tuple with a_i deleted
  const mpz_class& deleted_norm_sq(std::size_t i) const { return deleted_norm_sq_[i]; }

  RealInterval norm(mpfr_prec_t prec = RealInterval::kDefaultPrecision) const;
  /// Enclosure of sum_i |alpha_i| a_i.
  RealInterval sum_alpha_a(mpfr_prec_t prec = RealInterval::kDefaultPrecision) const;

  std::string to_string() const;

  friend bool operator==(const FrobeniusInstance& x, const FrobeniusInstance& y) { return x.a_ == y.a_; }

 private:
  explicit FrobeniusInstance(std::vector<std::int64_t> sorted);
  friend FrobeniusInstance validate_tuple(std::span<const std::int64_t> raw);

  std::vector<std::int64_t> a_;
  mpz_class product_;
  mpz_class norm_sq_;
  std::vector<mpz_class> deleted_norm_sq_;
  RealInterval sum_alpha_a_;
};

/// Sorts and deduplicates `raw`, then checks 1 < a_1 and gcd = 1.
/// Throws Error{TooSmall} or Error{NotCoprime}.
FrobeniusInstance validate_tuple(std::span<const std::int64_t> raw);

inline FrobeniusInstance validate_tuple(std::initializer_list<std::int64_t> raw) {
  return validate_tuple(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

/// Drops every a_i representable by the remaining entries, largest first,
/// until no entry is redundant. g_0 is invariant under this reduction; g_s
/// for s >= 1 in general is not, since dropped entries still add
/// representations.
FrobeniusInstance reduce_tuple(const FrobeniusInstance& inst);

bool is_reduced(const FrobeniusInstance& inst);

}  // namespace frob
