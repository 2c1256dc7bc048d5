#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "frobenius/instance.hpp"
#include "frobenius/interval.hpp"

namespace frob {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

/// The rank N-1 lattice {x in Z^N : a . x = 0}, stored as a row basis.
struct KernelLattice {
  FrobeniusInstance inst;
  IntMatrix basis;  // (N-1) x N
  IntMatrix gram;   // basis * basis^T
  mpz_class det_sq;

  std::size_t rank() const { return basis.size(); }
};

/// Integer kernel of the 1 x N matrix a by unimodular column operations.
/// Postcondition: det_sq == inst.norm_sq(); Error{InternalRankError} otherwise.
KernelLattice kernel_basis(const FrobeniusInstance& inst);

/// LLL with exact rational Gram-Schmidt. delta must lie in (1/4, 1].
KernelLattice reduce_basis(const KernelLattice& lattice, const mpq_class& delta = mpq_class(99, 100));

/// Exact squared Gram-Schmidt lengths |b_i*|^2 of the basis rows.
std::vector<mpq_class> gram_schmidt_norms(const IntMatrix& basis);

struct EnumerationLimits {
  std::uint64_t max_nodes = 10'000'000;
};

struct SuccessiveMinima {
  std::vector<mpz_class> lambda_sq;  // lambda_1^2 <= ... <= lambda_{N-1}^2
  IntMatrix witnesses;               // witnesses[m] has squared norm lambda_sq[m]
  std::uint64_t nodes = 0;           // enumeration tree nodes visited
};

/// Sphere enumeration on the reduced basis. Candidates are found in double
/// precision with a widened radius and then accepted on exact integer norms.
/// Throws Error{EnumerationBudgetExceeded} past limits.max_nodes.
SuccessiveMinima successive_minima(const KernelLattice& reduced, EnumerationLimits limits = {});

bool is_well_rounded(const SuccessiveMinima& sm);

enum class RadiusCertificate { HalfGenerator, GramSchmidtBox, MinimaChain };

std::string_view to_string(RadiusCertificate c);

struct CoveringRadiusBounds {
  RealInterval lower;  // lambda_{N-1} / 2
  RealInterval upper;  // best available certificate
  RadiusCertificate upper_source = RadiusCertificate::MinimaChain;
};

CoveringRadiusBounds covering_radius_bounds(const KernelLattice& reduced, const SuccessiveMinima& sm,
                                            mpfr_prec_t prec = RealInterval::kDefaultPrecision);

/// Classical enclosures of R_a and lambda_{N-1} in terms of |a| and the
/// minima. Members are listed in the order they appear in the chain
///   R <= (N-1) lambda_{N-1} / 2 <= (N-1) (lambda_{N-1}/lambda_1) (|a|/kappa)^(1/(N-1)) <= (N-1)|a|/kappa
/// and the Minkowski sandwich
///   2 (|a| / (kappa (N-1)!))^(1/(N-1)) <= lambda_{N-1} <= 2 |a| / kappa.
struct GeometryOfNumbersBounds {
  RealInterval lambda_top;
  RealInterval radius_half_top;   // (N-1) lambda_{N-1} / 2
  RealInterval radius_ratio;      // (N-1) lambda_{N-1} / lambda_1 (|a|/kappa)^(1/(N-1))
  RealInterval radius_det;        // (N-1) |a| / kappa
  RealInterval lambda_lower;      // 2 (|a| / (kappa (N-1)!))^(1/(N-1))
  RealInterval lambda_upper;      // 2 |a| / kappa
  // Well-rounded refinements.
  RealInterval wr_radius_upper;   // (N-1) (|a|/kappa)^(1/(N-1))
  RealInterval wr_lambda_upper;   // (2 |a| / kappa)^(1/(N-1)), fails on WR lattices
  RealInterval wr_lambda_minkowski;  // 2 (|a|/kappa)^(1/(N-1)), what Minkowski's theorem gives
  /// prod lambda_m and its Minkowski ceiling 2^(N-1) |a| / kappa.
  RealInterval minima_product;
  RealInterval minkowski_product_upper;
};

GeometryOfNumbersBounds geometry_of_numbers_bounds(const FrobeniusInstance& inst, const SuccessiveMinima& sm,
                                                   mpfr_prec_t prec = RealInterval::kDefaultPrecision);

mpz_class dot(const IntVector& x, const IntVector& y);
/// Rank of a set of integer vectors (exact elimination over Q).
std::size_t rank_of(const IntMatrix& rows);

}  // namespace frob
