#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobenius/instance.hpp"
#include "frobenius/interval.hpp"
#include "frobenius/lattice.hpp"

namespace frob {

enum class BoundId {
  UpperMain,        // max{R(N-1) sum/|a| + 1, (s (N-1)! prod)^(1/(N-2))}
  UpperKissing,     // 3 R sum/|a| when s <= tau_{N-1} + 1
  UpperBeta,        // max{beta, (beta s (N-1)! prod)^(1/(N-1))}
  LowerSimple,      // ((s+1-N) prod)^(1/(N-1)) with the inradius eligibility condition
  LowerRho,         // (s (N-1)! prod / rho)^(1/(N-1)) with the A_N eligibility condition
  LowerWidmer,
  CountLower,            // covering-radius lower bound on G(t)
  CountUpperCorrected,   // max{t, t_*}^(N-1) / prod + (N-1)
  CountUpperLemma31,     // corrected face-sum counting bound
  CountUpperWidmer,
  CountPackingLower,     // G(t) >= tau_{N-1} + 1 past 3 R sum/|a|
  // Reported only.
  LowerRodseth,
  LowerSimpleHistorical,
  LowerRhoHistorical,
  CountUpperBlichfeldtHistorical,
  CountUpperLemma31Historical,
};

enum class Direction { UpperOnGs, LowerOnGs, LowerOnCount, UpperOnCount };

std::string_view to_string(BoundId id);
std::string_view to_string(Direction d);

struct BoundEvaluation {
  BoundId id = BoundId::UpperMain;
  Direction direction = Direction::UpperOnGs;
  std::optional<RealInterval> value;
  Tri applicable = Tri::No;
  std::string reason;
  /// Eligibility threshold on s (or on t for count bounds), when the bound has one.
  std::optional<RealInterval> threshold;
};

struct DimensionalConstants {
  unsigned n = 0;
  std::vector<RealInterval> kappa;  // kappa[m], m = 0..n
  RealInterval c_prime_n;           // (N-1)(N-1)!/2^(N-1)
  std::optional<RealInterval> c_n;  // original constant, N >= 3
  std::optional<RealInterval> a_n;  // corrected constant C_N N^N / N!, N >= 3

  /// Throw Error{DimensionTooSmall} when N < 3.
  const RealInterval& cn() const;
  const RealInterval& an() const;
};

DimensionalConstants constants(unsigned n, mpfr_prec_t prec = RealInterval::kDefaultPrecision);

// Each evaluator takes the one-sided certificate whose direction keeps the
// result valid: an upper enclosure of R for upper bounds on g_s, an upper
// enclosure of lambda_{N-1} wherever lambda only enters an eligibility
// threshold, and a lower enclosure of R where R sits in a denominator.

/// Throws Error{DimensionTooSmall} for N = 2.
BoundEvaluation upper_main(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& r_upper);
BoundEvaluation upper_kissing(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& r_upper,
                              std::uint64_t tau_lower);
BoundEvaluation upper_beta(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& r_upper);
BoundEvaluation lower_simple(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& lambda_top);
/// Throws Error{DimensionTooSmall} for N = 2.
BoundEvaluation lower_rho(const FrobeniusInstance& inst, std::uint64_t s, const mpq_class& rho,
                          const RealInterval& lambda_top);
/// Throws Error{DimensionTooSmall} for N = 2.
BoundEvaluation lower_widmer(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& r_lower,
                             const RealInterval& lambda_top);
BoundEvaluation lower_rodseth(const FrobeniusInstance& inst, std::uint64_t s, mpfr_prec_t prec);
BoundEvaluation lower_simple_historical(const FrobeniusInstance& inst, std::uint64_t s, mpfr_prec_t prec);
BoundEvaluation lower_rho_historical(const FrobeniusInstance& inst, std::uint64_t s, const mpq_class& rho,
                                     const RealInterval& lambda_top);

/// Certified one-sided inputs shared by all evaluators.
struct Certificates {
  RealInterval r_lower;
  RealInterval r_upper;
  RealInterval lambda_top;
  std::uint64_t tau_lower = 0;
  RadiusCertificate r_upper_source = RadiusCertificate::MinimaChain;
};

Certificates make_certificates(const KernelLattice& reduced, const SuccessiveMinima& sm,
                               mpfr_prec_t prec = RealInterval::kDefaultPrecision);

/// Bounds on G(t), t >= 1. An empty vector for t <= 0.
std::vector<BoundEvaluation> count_bounds(const FrobeniusInstance& inst, std::int64_t t, const Certificates& certs,
                                          const DimensionalConstants& consts, bool historical = false);

/// ceil(upper.hi) + 1 where upper is the level-(s+1) upper bound on g: the
/// main bound for N >= 3, the beta bound for N = 2. Every t above it has
/// G(t) > s. Throws Error{ResourceCapExceeded} if it does not fit in 63 bits.
std::int64_t certified_ceiling(const FrobeniusInstance& inst, std::uint64_t s, const Certificates& certs);

struct BoundOptions {
  mpq_class rho = 2;
  bool historical = false;
  mpfr_prec_t precision = RealInterval::kDefaultPrecision;
  mpfr_prec_t retry_precision = 4 * RealInterval::kDefaultPrecision;
};

/// Bundles a reduced lattice with its certificates and evaluates every bound.
/// Evaluations whose eligibility comes out Indeterminate are recomputed once
/// at retry_precision.
class BoundEvaluator {
 public:
  BoundEvaluator(const KernelLattice& reduced, const SuccessiveMinima& sm, BoundOptions options = {});

  const FrobeniusInstance& instance() const { return lattice_.inst; }
  const Certificates& certificates() const { return certs_; }
  const DimensionalConstants& dimensional_constants() const { return consts_; }
  const BoundOptions& options() const { return options_; }

  std::vector<BoundEvaluation> on_gs(std::uint64_t s) const;
  std::vector<BoundEvaluation> on_count(std::int64_t t) const;
  std::int64_t ceiling(std::uint64_t s) const { return certified_ceiling(lattice_.inst, s, certs_); }

 private:
  std::vector<BoundEvaluation> on_gs_at(std::uint64_t s, const Certificates& certs, mpfr_prec_t prec) const;

  KernelLattice lattice_;
  BoundOptions options_;
  Certificates certs_;
  DimensionalConstants consts_;
  Certificates retry_certs_;
  DimensionalConstants retry_consts_;
};

}  // namespace frob
