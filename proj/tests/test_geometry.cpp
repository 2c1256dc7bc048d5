#include <doctest.h>

#include <cmath>
#include <random>

#include "frobenius/error.hpp"
#include "frobenius/geometry.hpp"
#include "frobenius/harness.hpp"
#include "oracle.hpp"

using namespace frob;

namespace {

// Vertices of S(t): t/a_i on the i-th axis.
std::vector<std::vector<double>> vertices(const FrobeniusInstance& inst, double t) {
  std::vector<std::vector<double>> v(inst.size(), std::vector<double>(inst.size(), 0.0));
  for (std::size_t i = 0; i < inst.size(); ++i) v[i][i] = t / static_cast<double>(inst[i]);
  return v;
}

double distance(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("segment S(6) for (2,3)") {
  const SimplexData d = simplex_data(validate_tuple({2, 3}), 6);
  // From (3,0) to (0,2).
  CHECK(d.volume.contains(RealInterval::integer(13).sqrt()));
  CHECK(d.surface.contains(mpq_class(2)));  // two endpoints
}

TEST_CASE("inradius of the (3,4,5) triangle") {
  const FrobeniusInstance inst = validate_tuple({3, 4, 5});
  const SimplexData d = simplex_data(inst, 1);
  const double expect = 5 * std::sqrt(2.0) / (3 * std::sqrt(41.0) + 4 * std::sqrt(34.0) + 25);
  CHECK(d.inradius.lo_double() <= expect * (1 + 1e-15));
  CHECK(d.inradius.hi_double() >= expect * (1 - 1e-15));
  CHECK(d.inradius.mid_double() == doctest::Approx(0.1047).epsilon(1e-3));
  // Heron cross-check on the actual triangle.
  const auto v = vertices(inst, 1);
  const double x = distance(v[0], v[1]), y = distance(v[1], v[2]), z = distance(v[0], v[2]);
  const double s = (x + y + z) / 2;
  const double area = std::sqrt(s * (s - x) * (s - y) * (s - z));
  CHECK(d.volume.mid_double() == doctest::Approx(area).epsilon(1e-12));
  CHECK(d.surface.mid_double() == doctest::Approx(x + y + z).epsilon(1e-12));
  CHECK(area / s == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("degenerate simplex") {
  const SimplexData d = simplex_data(validate_tuple({6, 9, 20}), 0);
  CHECK(d.volume.contains(mpq_class(0)));
  CHECK(d.surface.contains(mpq_class(0)));
  CHECK(d.inradius.contains(mpq_class(0)));
  CHECK(d.volume.width_double() == 0.0);
}

TEST_CASE("isoperimetric identity and scaling") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> dt(1, 500);
  std::uniform_int_distribution<unsigned> dn(3, 5);
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 100; ++seed) {
    for (const auto& inst : random_tuples(dn(rng), 60, 1, seed)) {
      if (inst.size() < 3) continue;
      const std::int64_t t = dt(rng);
      const SimplexData d = simplex_data(inst, t);
      const SimplexData one = simplex_data(inst, 1);
      const long n = static_cast<long>(inst.size());
      // r A = (N-1) Vol
      const RealInterval lhs = d.inradius * d.surface;
      const RealInterval rhs = RealInterval::integer(n - 1) * d.volume;
      CHECK(certainly_le(lhs, rhs) != Tri::No);
      CHECK(certainly_le(rhs, lhs) != Tri::No);
      const RealInterval tt = RealInterval::integer(t);
      CHECK(certainly_le(d.volume, tt.pow(n - 1) * one.volume) != Tri::No);
      CHECK(certainly_le(tt.pow(n - 1) * one.volume, d.volume) != Tri::No);
      CHECK(certainly_le(tt.pow(n - 2) * one.surface, d.surface) != Tri::No);
      CHECK(certainly_le(d.surface, tt.pow(n - 2) * one.surface) != Tri::No);
      CHECK(certainly_le(tt * one.inradius, d.inradius) != Tri::No);
      CHECK(certainly_le(d.inradius, tt * one.inradius) != Tri::No);
      ++checked;
    }
  }
}

TEST_CASE("face volume bounds") {
  const FrobeniusInstance inst = validate_tuple({3, 4, 5});
  const FaceVolumeBounds top = face_volume_bounds(inst, 1, 2);
  const RealInterval expect = RealInterval::integer(50).sqrt() / RealInterval::integer(2);
  CHECK(top.largest.contains(expect));
  CHECK(top.total.contains(expect));
  const FaceVolumeBounds vertices_only = face_volume_bounds(inst, 7, 0);
  CHECK(vertices_only.largest.contains(mpq_class(1)));
  CHECK(vertices_only.total.contains(mpq_class(3)));
  CHECK_THROWS_AS(face_volume_bounds(inst, 1, 3), Error);
  CHECK_THROWS_AS(face_volume_bounds(inst, 1, -1), Error);

  // (2,3), m = 1: t |a| / 1! bounds the single edge of length t sqrt(13)/6.
  const FaceVolumeBounds edge = face_volume_bounds(validate_tuple({2, 3}), 1, 1);
  CHECK(edge.largest.contains(RealInterval::integer(13).sqrt()));
  CHECK(edge.largest.lo_double() >= std::sqrt(13.0) / 6);
}

TEST_CASE("face volume bounds dominate the true faces") {
  for (const auto& inst : random_tuples(4, 40, 30, 14)) {
    for (std::int64_t t : {1, 7, 60}) {
      const auto v = vertices(inst, static_cast<double>(t));
      double longest = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) longest = std::max(longest, distance(v[i], v[j]));
      CHECK(face_volume_bounds(inst, t, 1).largest.hi_double() >= longest);
      const long n = static_cast<long>(inst.size());
      CHECK(face_volume_bounds(inst, t, static_cast<int>(n - 1)).largest.hi_double() >=
            simplex_data(inst, t).volume.lo_double());
    }
  }
}

TEST_CASE("kissing data") {
  CHECK(kissing_data(1).exact == 2u);
  CHECK(kissing_data(3).exact == 12u);
  CHECK(kissing_data(3).proven_lower == oracle::roots_d(3));
  CHECK(kissing_data(7).proven_lower == 126u);
  CHECK(oracle::roots_e7() == 126u);
  CHECK(oracle::roots_e8() == 240u);
  CHECK(oracle::roots_e6() == 72u);
  CHECK(kissing_data(8).exact == 240u);
  CHECK(kissing_data(24).exact == 196560u);
  CHECK(!kissing_data(5).exact.has_value());
  CHECK_THROWS_AS(kissing_data(0), Error);
  CHECK(kissing_data(30).proven_lower >= kissing_data(24).proven_lower);
}

TEST_CASE("kissing table is regenerated by the root-lattice oracle") {
  const auto best = oracle::root_lattice_kissing(23);
  for (unsigned m = 1; m <= 23; ++m) CHECK_MESSAGE(kissing_data(m).proven_lower == best[m], "m=", m);
  std::uint64_t prev = 0;
  for (unsigned m = 1; m <= 40; ++m) {
    CHECK(kissing_data(m).proven_lower >= prev);
    prev = kissing_data(m).proven_lower;
  }
}

TEST_CASE("asymptotic kissing exponentials") {
  const KissingData k = kissing_data(10);
  CHECK(k.asymptotic_lower.mid_double() == doctest::Approx(std::exp2(2.075)));
  CHECK(k.asymptotic_upper.mid_double() == doctest::Approx(std::exp2(4.01)));
}
