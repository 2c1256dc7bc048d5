#include "frobenius/geometry.hpp"

#include <array>
#include <string>

#include "frobenius/error.hpp"

namespace frob {

namespace {

RealInterval factorial(unsigned long n, mpfr_prec_t prec) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return RealInterval::integer(f, prec);
}

// Best kissing number among lattices that are orthogonal sums of root
// lattices (A_k, D_k, E_6, E_7, E_8), for m = 1..23, and the Leech lattice at
// m = 24. Regenerated by the root-lattice oracle in the test suite.
constexpr std::array<std::uint64_t, 24> kLatticeKissing = {
    2,   6,   12,  24,  40,  72,  126, 240, 242, 246, 252,  264,
    312, 364, 420, 480, 544, 612, 684, 760, 840, 924, 1012, 196560,
};

constexpr std::array<unsigned, 6> kExactDimensions = {1, 2, 3, 4, 8, 24};

}  // namespace

SimplexData simplex_data(const FrobeniusInstance& inst, std::int64_t t, mpfr_prec_t prec) {
  if (t < 0) throw Error(ErrorKind::IndexOutOfRange, "negative t");
  SimplexData d;
  d.t = t;
  d.volume = RealInterval(prec);
  d.surface = RealInterval(prec);
  d.inradius = RealInterval(prec);
  if (t == 0) return d;

  const long n = static_cast<long>(inst.size());
  const RealInterval tt = RealInterval::integer(t, prec);
  const RealInterval norm = inst.norm(prec);
  const RealInterval prod = RealInterval::integer(inst.product(), prec);
  const RealInterval sum = inst.sum_alpha_a(prec);

  d.volume = tt.pow(n - 1) * norm / (factorial(n - 1, prec) * prod);
  d.surface = tt.pow(n - 2) * sum / (factorial(n - 2, prec) * prod);
  d.inradius = tt * norm / sum;
  return d;
}

FaceVolumeBounds face_volume_bounds(const FrobeniusInstance& inst, std::int64_t t, int m, mpfr_prec_t prec) {
  const int n = static_cast<int>(inst.size());
  if (m < 0 || m > n - 1) throw Error(ErrorKind::IndexOutOfRange, "face dimension " + std::to_string(m));
  if (m == 0) return {RealInterval::integer(1, prec), RealInterval::integer(n, prec)};
  const auto um = static_cast<unsigned long>(m);
  const RealInterval largest =
      RealInterval::integer(t, prec).pow(m) * inst.norm(prec) / factorial(um, prec);
  mpz_class faces;
  mpz_bin_uiui(faces.get_mpz_t(), static_cast<unsigned long>(n), um + 1);
  return {largest, RealInterval::integer(faces, prec) * largest};
}

KissingData kissing_data(unsigned m) {
  if (m == 0) throw Error(ErrorKind::IndexOutOfRange, "kissing dimension must be positive");
  KissingData k;
  k.m = m;
  if (m <= kLatticeKissing.size()) {
    k.proven_lower = kLatticeKissing[m - 1];
  } else {
    // Leech + scaled Z^(m-24) or D_m, whichever is larger.
    const std::uint64_t leech = kLatticeKissing.back() + 2ull * (m - 24);
    const std::uint64_t dm = 2ull * m * (m - 1);
    k.proven_lower = std::max(leech, dm);
  }
  for (unsigned e : kExactDimensions) {
    if (e == m) k.exact = k.proven_lower;
  }
  const RealInterval dim = RealInterval::integer(static_cast<long>(m));
  k.asymptotic_lower = (RealInterval::rational(mpq_class(2075, 10000)) * dim).exp2();
  k.asymptotic_upper = (RealInterval::rational(mpq_class(401, 1000)) * dim).exp2();
  return k;
}

}  // namespace frob
