#pragma once

#include <cstdint>
#include <optional>

#include "frobenius/instance.hpp"
#include "frobenius/interval.hpp"

namespace frob {

/// The (N-1)-simplex S(t) = {x >= 0 : a . x = t}.
struct SimplexData {
  std::int64_t t = 0;
  RealInterval volume;    // t^(N-1) |a| / ((N-1)! prod a)
  RealInterval surface;   // t^(N-2) sum |alpha_i| a_i / ((N-2)! prod a)
  RealInterval inradius;  // t |a| / sum |alpha_i| a_i
};

SimplexData simplex_data(const FrobeniusInstance& inst, std::int64_t t,
                         mpfr_prec_t prec = RealInterval::kDefaultPrecision);

/// Upper bounds on the m-face volumes of S(t): the largest single face
/// (t^m |a| / m!) and the sum over all C(N, m+1) faces. For m = 0 the pair
/// is (1, N).
struct FaceVolumeBounds {
  RealInterval largest;
  RealInterval total;
};

/// Throws Error{IndexOutOfRange} unless 0 <= m <= N-1.
FaceVolumeBounds face_volume_bounds(const FrobeniusInstance& inst, std::int64_t t, int m,
                                    mpfr_prec_t prec = RealInterval::kDefaultPrecision);

struct KissingData {
  unsigned m = 0;
  /// Kissing number of an explicit lattice packing in dimension m.
  std::uint64_t proven_lower = 0;
  std::optional<std::uint64_t> exact;
  /// Leading exponentials 2^(0.2075 m) and 2^(0.401 m); the o(1) corrections
  /// are unknown, so these are display-only.
  RealInterval asymptotic_lower;
  RealInterval asymptotic_upper;
};

KissingData kissing_data(unsigned m);

}  // namespace frob
