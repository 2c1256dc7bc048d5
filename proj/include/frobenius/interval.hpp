#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace frob {

enum class Tri { Yes, No, Indeterminate };

std::string_view to_string(Tri t);

/// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
/// the lower endpoint toward -inf and the upper toward +inf, so the result
/// encloses the exact value whenever the operands enclose theirs.
///
/// Results carry the larger of the operand precisions.
class RealInterval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit RealInterval(mpfr_prec_t prec = kDefaultPrecision);
  RealInterval(const RealInterval& other);
  RealInterval(RealInterval&& other) noexcept;
  RealInterval& operator=(const RealInterval& other);
  RealInterval& operator=(RealInterval&& other) noexcept;
  ~RealInterval();

  static RealInterval integer(long value, mpfr_prec_t prec = kDefaultPrecision);
  static RealInterval integer(const mpz_class& value, mpfr_prec_t prec = kDefaultPrecision);
  static RealInterval rational(const mpq_class& value, mpfr_prec_t prec = kDefaultPrecision);
  static RealInterval pi(mpfr_prec_t prec = kDefaultPrecision);
  static RealInterval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);
  /// Smallest interval containing both arguments.
  static RealInterval hull(const RealInterval& a, const RealInterval& b);

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;
  double width_double() const;

  /// Smallest integer >= hi.
  mpz_class ceil_hi() const;
  /// Largest integer <= lo.
  mpz_class floor_lo() const;

  bool contains(const mpq_class& x) const;
  bool contains(const RealInterval& inner) const;
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

  RealInterval operator-() const;
  RealInterval& operator+=(const RealInterval& rhs);
  RealInterval& operator-=(const RealInterval& rhs);
  RealInterval& operator*=(const RealInterval& rhs);
  RealInterval& operator/=(const RealInterval& rhs);

  RealInterval sqrt() const;
  /// k-th root, k >= 1; requires a nonnegative enclosure.
  RealInterval root(unsigned long k) const;
  /// Integer power; negative exponents require an enclosure excluding 0.
  RealInterval pow(long p) const;
  /// x^(p/q) for a nonnegative enclosure, q >= 1.
  RealInterval pow(long p, unsigned long q) const;
  /// 2^x, monotone increasing.
  RealInterval exp2() const;
  /// Same interval rounded outward to a different precision.
  RealInterval with_precision(mpfr_prec_t prec) const;

  /// Decimal endpoint strings, lo rounded down and hi rounded up.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;
  std::string to_string(int digits = 20) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

RealInterval operator+(RealInterval lhs, const RealInterval& rhs);
RealInterval operator-(RealInterval lhs, const RealInterval& rhs);
RealInterval operator*(RealInterval lhs, const RealInterval& rhs);
RealInterval operator/(RealInterval lhs, const RealInterval& rhs);

RealInterval max(const RealInterval& a, const RealInterval& b);
RealInterval min(const RealInterval& a, const RealInterval& b);

/// Yes if a <= b for every pair of points, No if a > b for every pair,
/// Indeterminate when the intervals overlap.
Tri certainly_le(const RealInterval& a, const RealInterval& b);

/// Volume of the m-dimensional unit ball, pi^(m/2) / Gamma(1 + m/2).
RealInterval unit_ball_volume(unsigned m, mpfr_prec_t prec = RealInterval::kDefaultPrecision);

}  // namespace frob
