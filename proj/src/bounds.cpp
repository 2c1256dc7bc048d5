#include "frobenius/bounds.hpp"

#include <limits>

#include "frobenius/error.hpp"
#include "frobenius/geometry.hpp"

namespace frob {

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::UpperMain: return "UpperMain";
    case BoundId::UpperKissing: return "UpperKissing";
    case BoundId::UpperBeta: return "UpperBeta";
    case BoundId::LowerSimple: return "LowerSimple";
    case BoundId::LowerRho: return "LowerRho";
    case BoundId::LowerWidmer: return "LowerWidmer";
    case BoundId::CountLower: return "CountLower";
    case BoundId::CountUpperCorrected: return "CountUpperCorrected";
    case BoundId::CountUpperLemma31: return "CountUpperLemma31";
    case BoundId::CountUpperWidmer: return "CountUpperWidmer";
    case BoundId::CountPackingLower: return "CountPackingLower";
    case BoundId::LowerRodseth: return "LowerRodseth";
    case BoundId::LowerSimpleHistorical: return "LowerSimpleHistorical";
    case BoundId::LowerRhoHistorical: return "LowerRhoHistorical";
    case BoundId::CountUpperBlichfeldtHistorical: return "CountUpperBlichfeldtHistorical";
    case BoundId::CountUpperLemma31Historical: return "CountUpperLemma31Historical";
  }
  return "?";
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::UpperOnGs: return "UpperOnGs";
    case Direction::LowerOnGs: return "LowerOnGs";
    case Direction::LowerOnCount: return "LowerOnCount";
    case Direction::UpperOnCount: return "UpperOnCount";
  }
  return "?";
}

namespace {

// Exact per-instance scalars lifted to intervals at one precision.
struct Scalars {
  Scalars(const FrobeniusInstance& inst, mpfr_prec_t p)
      : prec(p),
        n(static_cast<long>(inst.size())),
        norm(inst.norm(p)),
        prod(RealInterval::integer(inst.product(), p)),
        sum(inst.sum_alpha_a(p)) {}

  RealInterval integer(long v) const { return RealInterval::integer(v, prec); }
  RealInterval integer(const mpz_class& v) const { return RealInterval::integer(v, prec); }
  RealInterval factorial(long k) const {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return RealInterval::integer(f, prec);
  }
  RealInterval count(std::uint64_t s) const { return RealInterval::integer(mpz_class(static_cast<unsigned long>(s)), prec); }
  /// sum |alpha_i| a_i / |a| = 1 / r(1)
  RealInterval inverse_inradius() const { return sum / norm; }

  mpfr_prec_t prec;
  long n;
  RealInterval norm;
  RealInterval prod;
  RealInterval sum;
};

void require_dimension(const FrobeniusInstance& inst, const char* what) {
  if (inst.size() < 3) throw Error(ErrorKind::DimensionTooSmall, std::string(what) + " needs N >= 3");
}

BoundEvaluation make(BoundId id, Direction d) {
  BoundEvaluation e;
  e.id = id;
  e.direction = d;
  return e;
}

// s >= threshold, decided on the enclosure.
Tri s_at_least(std::uint64_t s, const RealInterval& threshold, const Scalars& k) {
  return certainly_le(threshold, k.count(s));
}

}  // namespace

const RealInterval& DimensionalConstants::cn() const {
  if (!c_n) throw Error(ErrorKind::DimensionTooSmall, "C_N needs N >= 3");
  return *c_n;
}

const RealInterval& DimensionalConstants::an() const {
  if (!a_n) throw Error(ErrorKind::DimensionTooSmall, "A_N needs N >= 3");
  return *a_n;
}

DimensionalConstants constants(unsigned n, mpfr_prec_t prec) {
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "N must be at least 2");
  DimensionalConstants c;
  c.n = n;
  for (unsigned m = 0; m <= n; ++m) c.kappa.push_back(unit_ball_volume(m, prec));

  const long N = n;
  auto integer = [&](long v) { return RealInterval::integer(v, prec); };
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n - 1);
  const RealInterval fact_n1 = RealInterval::integer(fact, prec);
  c.c_prime_n = integer(N - 1) * fact_n1 / integer(2).pow(N - 1);
  if (n < 3) return c;

  // 2^(N^2 - 7N/2 + 2) (N-1)^(N/2) ((N-1)!)^(N-1) / (pi^((N-2)/2) kappa_{N-1}^(N-2))
  const RealInterval numer =
      integer(2).pow(2 * N * N - 7 * N + 4, 2) * integer(N - 1).pow(N, 2) * fact_n1.pow(N - 1);
  const RealInterval denom = RealInterval::pi(prec).pow(N - 2, 2) * c.kappa[n - 1].pow(N - 2);
  c.c_n = numer / denom;
  mpz_fac_ui(fact.get_mpz_t(), n);
  c.a_n = *c.c_n * integer(N).pow(N) / RealInterval::integer(fact, prec);
  return c;
}

BoundEvaluation upper_main(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& r_upper) {
  require_dimension(inst, "UpperMain");
  const Scalars k(inst, r_upper.precision());
  BoundEvaluation e = make(BoundId::UpperMain, Direction::UpperOnGs);
  const RealInterval covering = r_upper * k.integer(k.n - 1) * k.inverse_inradius() + k.integer(1);
  const RealInterval counting =
      (k.count(s) * k.factorial(k.n - 1) * k.prod).root(static_cast<unsigned long>(k.n - 2));
  e.value = max(covering, counting);
  e.applicable = Tri::Yes;
  return e;
}

BoundEvaluation upper_kissing(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& r_upper,
                              std::uint64_t tau_lower) {
  const Scalars k(inst, r_upper.precision());
  BoundEvaluation e = make(BoundId::UpperKissing, Direction::UpperOnGs);
  e.value = k.integer(3) * r_upper * k.inverse_inradius();
  e.threshold = k.integer(static_cast<long>(tau_lower) + 1);
  if (s <= tau_lower + 1) {
    e.applicable = Tri::Yes;
  } else {
    e.applicable = Tri::No;
    e.reason = "s exceeds tau_{N-1} + 1 = " + std::to_string(tau_lower + 1);
  }
  return e;
}

BoundEvaluation upper_beta(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& r_upper) {
  const Scalars k(inst, r_upper.precision());
  BoundEvaluation e = make(BoundId::UpperBeta, Direction::UpperOnGs);
  const RealInterval beta = k.integer(k.n - 1) * r_upper * k.inverse_inradius() + k.integer(1);
  const RealInterval counting =
      (beta * k.count(s) * k.factorial(k.n - 1) * k.prod).root(static_cast<unsigned long>(k.n - 1));
  e.value = max(beta, counting);
  e.applicable = Tri::Yes;
  return e;
}

BoundEvaluation lower_simple(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& lambda_top) {
  const Scalars k(inst, lambda_top.precision());
  BoundEvaluation e = make(BoundId::LowerSimple, Direction::LowerOnGs);
  const auto rank = static_cast<unsigned long>(k.n - 1);
  // (lambda sum)^(N-1) / (|a|^(N-1) prod) + (N-1), i.e. t_*^(N-1)/prod + N - 1
  const RealInterval t_star = lambda_top * k.inverse_inradius();
  e.threshold = t_star.pow(k.n - 1) / k.prod + k.integer(k.n - 1);
  if (s + 1 <= static_cast<std::uint64_t>(k.n)) {
    e.applicable = Tri::No;
    e.reason = "vacuous: s + 1 - N <= 0";
    return e;
  }
  const mpz_class excess = mpz_class(static_cast<unsigned long>(s + 1)) - k.n;
  e.value = (k.integer(excess) * k.prod).root(rank);
  e.applicable = s_at_least(s, *e.threshold, k);
  if (e.applicable != Tri::Yes) e.reason = "s below the inradius eligibility threshold";
  return e;
}

namespace {

BoundEvaluation lower_rho_with(BoundId id, const FrobeniusInstance& inst, std::uint64_t s, const mpq_class& rho,
                               const RealInterval& lambda_top, const RealInterval& constant) {
  if (rho <= 1) throw Error(ErrorKind::ConfigError, "rho must exceed 1");
  const Scalars k(inst, lambda_top.precision());
  BoundEvaluation e = make(id, Direction::LowerOnGs);
  const RealInterval r = RealInterval::rational(rho, k.prec);
  const auto rank = static_cast<unsigned long>(k.n - 1);
  e.threshold = k.prod.pow(k.n - 2) / k.factorial(k.n - 1) *
                (constant * lambda_top.pow(k.n - 1) / (r - k.integer(1))).pow(k.n - 1);
  e.value = (k.count(s) * k.factorial(k.n - 1) * k.prod / r).root(rank);
  e.applicable = s_at_least(s, *e.threshold, k);
  if (e.applicable != Tri::Yes) e.reason = "s below the counting eligibility threshold";
  return e;
}

}  // namespace

BoundEvaluation lower_rho(const FrobeniusInstance& inst, std::uint64_t s, const mpq_class& rho,
                          const RealInterval& lambda_top) {
  require_dimension(inst, "LowerRho");
  const DimensionalConstants c = constants(static_cast<unsigned>(inst.size()), lambda_top.precision());
  return lower_rho_with(BoundId::LowerRho, inst, s, rho, lambda_top, c.an());
}

BoundEvaluation lower_rho_historical(const FrobeniusInstance& inst, std::uint64_t s, const mpq_class& rho,
                                     const RealInterval& lambda_top) {
  require_dimension(inst, "LowerRhoHistorical");
  const DimensionalConstants c = constants(static_cast<unsigned>(inst.size()), lambda_top.precision());
  return lower_rho_with(BoundId::LowerRhoHistorical, inst, s, rho, lambda_top, c.cn());
}

BoundEvaluation lower_widmer(const FrobeniusInstance& inst, std::uint64_t s, const RealInterval& r_lower,
                             const RealInterval& lambda_top) {
  require_dimension(inst, "LowerWidmer");
  const Scalars k(inst, std::max(r_lower.precision(), lambda_top.precision()));
  BoundEvaluation e = make(BoundId::LowerWidmer, Direction::LowerOnGs);
  const long n = k.n;
  const auto rank = static_cast<unsigned long>(n - 1);
  const RealInterval big_power = k.integer(n - 1).pow(3 * n * n - 1, 2);  // (N-1)^((3N^2-1)/2)
  e.threshold = (k.integer(4) * lambda_top * k.sum).pow(n - 1) * big_power /
                (k.factorial(n - 1) * k.norm.pow(n - 2) * r_lower * k.prod);
  const RealInterval lead =
      k.factorial(n - 2).root(rank) / (k.integer(4) * k.integer(n - 1).pow(3 * (n + 1), 2));
  e.value = lead * (k.count(s) * r_lower * k.prod / k.norm).root(rank);
  e.applicable = s_at_least(s, *e.threshold, k);
  if (e.applicable != Tri::Yes) e.reason = "s below the Widmer eligibility threshold";
  return e;
}

BoundEvaluation lower_rodseth(const FrobeniusInstance& inst, std::uint64_t s, mpfr_prec_t prec) {
  const Scalars k(inst, prec);
  BoundEvaluation e = make(BoundId::LowerRodseth, Direction::LowerOnGs);
  e.value = (k.factorial(k.n - 1) * k.prod).root(static_cast<unsigned long>(k.n - 1));
  if (s == 0) {
    e.applicable = Tri::Yes;
  } else {
    e.reason = "stated for the Frobenius number only";
  }
  return e;
}

BoundEvaluation lower_simple_historical(const FrobeniusInstance& inst, std::uint64_t s, mpfr_prec_t prec) {
  const Scalars k(inst, prec);
  BoundEvaluation e = make(BoundId::LowerSimpleHistorical, Direction::LowerOnGs);
  if (s + 1 <= static_cast<std::uint64_t>(k.n)) {
    e.reason = "vacuous: s + 1 - N <= 0";
    return e;
  }
  const mpz_class excess = mpz_class(static_cast<unsigned long>(s + 1)) - k.n;
  e.value = (k.integer(excess) * k.prod).root(static_cast<unsigned long>(k.n - 1));
  e.applicable = Tri::Yes;
  return e;
}

Certificates make_certificates(const KernelLattice& reduced, const SuccessiveMinima& sm, mpfr_prec_t prec) {
  const CoveringRadiusBounds radius = covering_radius_bounds(reduced, sm, prec);
  Certificates c;
  c.r_lower = radius.lower;
  c.r_upper = radius.upper;
  c.r_upper_source = radius.upper_source;
  c.lambda_top = RealInterval::integer(sm.lambda_sq.back(), prec).sqrt();
  c.tau_lower = kissing_data(static_cast<unsigned>(reduced.rank())).proven_lower;
  return c;
}

std::vector<BoundEvaluation> count_bounds(const FrobeniusInstance& inst, std::int64_t t, const Certificates& certs,
                                          const DimensionalConstants& consts, bool historical) {
  std::vector<BoundEvaluation> out;
  if (t <= 0) return out;
  const Scalars k(inst, certs.lambda_top.precision());
  const long n = k.n;
  const RealInterval tt = k.integer(t);
  const RealInterval t_star = certs.lambda_top * k.inverse_inradius();
  const RealInterval t_eff = max(tt, t_star);

  {
    BoundEvaluation e = make(BoundId::CountLower, Direction::LowerOnCount);
    e.value = tt.pow(n - 2) / (k.factorial(n - 2) * k.prod) *
              (tt / k.integer(n - 1) - certs.r_upper * k.inverse_inradius());
    e.applicable = Tri::Yes;
    out.push_back(std::move(e));
  }
  {
    BoundEvaluation e = make(BoundId::CountUpperCorrected, Direction::UpperOnCount);
    e.value = t_eff.pow(n - 1) / k.prod + k.integer(n - 1);
    e.threshold = t_star;
    e.applicable = Tri::Yes;
    out.push_back(std::move(e));
  }
  const RealInterval volume_term = tt.pow(n - 1) / (k.factorial(n - 1) * k.prod);
  {
    BoundEvaluation e = make(BoundId::CountUpperLemma31, Direction::UpperOnCount);
    if (n >= 3) {
      e.value = volume_term + consts.an() * certs.lambda_top.pow(n - 1) * tt.pow(n - 2);
      e.applicable = Tri::Yes;
    } else {
      e.reason = "requires N >= 3";
    }
    out.push_back(std::move(e));
  }
  {
    BoundEvaluation e = make(BoundId::CountUpperWidmer, Direction::UpperOnCount);
    if (n >= 3) {
      const RealInterval lead = k.integer(4).pow(n - 1) * k.integer(n - 1).pow(3 * n * n - 1, 2) /
                                k.factorial(n - 1);
      e.value = lead * t_eff.pow(n - 1) * k.norm / (certs.r_lower * k.prod);
      e.threshold = t_star;
      e.applicable = Tri::Yes;
    } else {
      e.reason = "requires N >= 3";
    }
    out.push_back(std::move(e));
  }
  {
    BoundEvaluation e = make(BoundId::CountPackingLower, Direction::LowerOnCount);
    e.threshold = k.integer(3) * certs.r_upper * k.inverse_inradius();
    e.value = k.integer(static_cast<long>(certs.tau_lower) + 1);
    e.applicable = certainly_le(*e.threshold, tt);
    if (e.applicable != Tri::Yes) e.reason = "t below 3 R / r(1)";
    out.push_back(std::move(e));
  }
  if (historical) {
    BoundEvaluation b = make(BoundId::CountUpperBlichfeldtHistorical, Direction::UpperOnCount);
    b.value = tt.pow(n - 1) / k.prod + k.integer(n - 1);
    b.applicable = Tri::Yes;
    out.push_back(std::move(b));
    BoundEvaluation l = make(BoundId::CountUpperLemma31Historical, Direction::UpperOnCount);
    if (n >= 3) {
      l.value = volume_term + consts.cn() * certs.lambda_top.pow(n - 1) * tt.pow(n - 2);
      l.applicable = Tri::Yes;
    } else {
      l.reason = "requires N >= 3";
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::int64_t certified_ceiling(const FrobeniusInstance& inst, std::uint64_t s, const Certificates& certs) {
  const BoundEvaluation upper =
      inst.size() >= 3 ? upper_main(inst, s + 1, certs.r_upper) : upper_beta(inst, s + 1, certs.r_upper);
  const mpz_class c = upper.value->ceil_hi() + 1;
  if (!c.fits_slong_p()) throw Error(ErrorKind::ResourceCapExceeded, "ceiling does not fit in 63 bits");
  return c.get_si();
}

BoundEvaluator::BoundEvaluator(const KernelLattice& reduced, const SuccessiveMinima& sm, BoundOptions options)
    : lattice_(reduced),
      options_(std::move(options)),
      certs_(make_certificates(reduced, sm, options_.precision)),
      consts_(constants(static_cast<unsigned>(reduced.inst.size()), options_.precision)),
      retry_certs_(make_certificates(reduced, sm, options_.retry_precision)),
      retry_consts_(constants(static_cast<unsigned>(reduced.inst.size()), options_.retry_precision)) {}

std::vector<BoundEvaluation> BoundEvaluator::on_gs_at(std::uint64_t s, const Certificates& certs,
                                                      mpfr_prec_t prec) const {
  const FrobeniusInstance& inst = lattice_.inst;
  const bool full = inst.size() >= 3;
  auto unavailable = [](BoundId id, Direction d) {
    BoundEvaluation e = make(id, d);
    e.reason = "requires N >= 3";
    return e;
  };
  std::vector<BoundEvaluation> out;
  out.push_back(full ? upper_main(inst, s, certs.r_upper) : unavailable(BoundId::UpperMain, Direction::UpperOnGs));
  out.push_back(upper_kissing(inst, s, certs.r_upper, certs.tau_lower));
  out.push_back(upper_beta(inst, s, certs.r_upper));
  out.push_back(lower_simple(inst, s, certs.lambda_top));
  out.push_back(full ? lower_rho(inst, s, options_.rho, certs.lambda_top)
                     : unavailable(BoundId::LowerRho, Direction::LowerOnGs));
  out.push_back(full ? lower_widmer(inst, s, certs.r_lower, certs.lambda_top)
                     : unavailable(BoundId::LowerWidmer, Direction::LowerOnGs));
  out.push_back(lower_rodseth(inst, s, prec));
  if (options_.historical) {
    out.push_back(lower_simple_historical(inst, s, prec));
    out.push_back(full ? lower_rho_historical(inst, s, options_.rho, certs.lambda_top)
                       : unavailable(BoundId::LowerRhoHistorical, Direction::LowerOnGs));
  }
  return out;
}

std::vector<BoundEvaluation> BoundEvaluator::on_gs(std::uint64_t s) const {
  std::vector<BoundEvaluation> out = on_gs_at(s, certs_, options_.precision);
  bool unresolved = false;
  for (const auto& e : out) unresolved |= e.applicable == Tri::Indeterminate;
  if (!unresolved) return out;
  std::vector<BoundEvaluation> finer = on_gs_at(s, retry_certs_, options_.retry_precision);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].applicable == Tri::Indeterminate) out[i] = std::move(finer[i]);
  }
  return out;
}

std::vector<BoundEvaluation> BoundEvaluator::on_count(std::int64_t t) const {
  std::vector<BoundEvaluation> out = count_bounds(lattice_.inst, t, certs_, consts_, options_.historical);
  bool unresolved = false;
  for (const auto& e : out) unresolved |= e.applicable == Tri::Indeterminate;
  if (!unresolved) return out;
  std::vector<BoundEvaluation> finer = count_bounds(lattice_.inst, t, retry_certs_, retry_consts_, options_.historical);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].applicable == Tri::Indeterminate) out[i] = std::move(finer[i]);
  }
  return out;
}

}  // namespace frob
