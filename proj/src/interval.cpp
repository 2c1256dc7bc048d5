#include "frobenius/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace frob {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Indeterminate: return "Indeterminate";
  }
  return "?";
}

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& other) {
  if (this != &other) {
    if (prec_ != other.prec_) {
      prec_ = other.prec_;
      mpfr_set_prec(lo_, prec_);
      mpfr_set_prec(hi_, prec_);
    }
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& other) noexcept {
  if (this != &other) {
    std::swap(prec_, other.prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::integer(long value, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::integer(const mpz_class& value, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::rational(const mpq_class& value, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

double RealInterval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, prec_ + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

double RealInterval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

mpz_class RealInterval::ceil_hi() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
  return z;
}

mpz_class RealInterval::floor_lo() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
  return z;
}

bool RealInterval::contains(const mpq_class& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool RealInterval::contains(const RealInterval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

RealInterval RealInterval::operator-() const {
  RealInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

namespace {

void ensure_precision(mpfr_prec_t& prec, mpfr_t lo, mpfr_t hi, mpfr_prec_t wanted) {
  if (wanted <= prec) return;
  mpfr_prec_round(lo, wanted, MPFR_RNDD);
  mpfr_prec_round(hi, wanted, MPFR_RNDU);
  prec = wanted;
}

}  // namespace

RealInterval& RealInterval::operator+=(const RealInterval& rhs) {
  ensure_precision(prec_, lo_, hi_, rhs.prec_);
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

RealInterval& RealInterval::operator-=(const RealInterval& rhs) {
  ensure_precision(prec_, lo_, hi_, rhs.prec_);
  // hi - rhs.lo must be computed before lo is overwritten when rhs aliases this.
  RealInterval r(prec_);
  mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
  *this = std::move(r);
  return *this;
}

RealInterval& RealInterval::operator*=(const RealInterval& rhs) {
  const mpfr_prec_t prec = std::max(prec_, rhs.prec_);
  RealInterval r(prec);
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  bool first = true;
  for (mpfr_srcptr x : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
    for (mpfr_srcptr y : {rhs.lo(), rhs.hi()}) {
      mpfr_mul(tmp, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(tmp, r.lo_)) mpfr_set(r.lo_, tmp, MPFR_RNDD);
      mpfr_mul(tmp, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(tmp, r.hi_)) mpfr_set(r.hi_, tmp, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(tmp);
  *this = std::move(r);
  return *this;
}

RealInterval& RealInterval::operator/=(const RealInterval& rhs) {
  if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0) {
    throw std::domain_error("interval division by an enclosure containing zero");
  }
  const mpfr_prec_t prec = std::max(prec_, rhs.prec_);
  RealInterval r(prec);
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  bool first = true;
  for (mpfr_srcptr x : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
    for (mpfr_srcptr y : {rhs.lo(), rhs.hi()}) {
      mpfr_div(tmp, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(tmp, r.lo_)) mpfr_set(r.lo_, tmp, MPFR_RNDD);
      mpfr_div(tmp, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(tmp, r.hi_)) mpfr_set(r.hi_, tmp, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(tmp);
  *this = std::move(r);
  return *this;
}

RealInterval RealInterval::sqrt() const {
  if (mpfr_sgn(hi_) < 0) throw std::domain_error("sqrt of a negative enclosure");
  RealInterval r(prec_);
  if (mpfr_sgn(lo_) < 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::root(unsigned long k) const {
  if (k == 0) throw std::domain_error("zeroth root");
  if (k == 1) return *this;
  if (mpfr_sgn(hi_) < 0) throw std::domain_error("root of a negative enclosure");
  RealInterval r(prec_);
  if (mpfr_sgn(lo_) < 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
  }
  mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::pow(long p) const {
  if (p == 0) return integer(1, prec_);
  if (p < 0) return integer(1, prec_) / pow(-p);
  if (mpfr_sgn(lo_) >= 0) {
    RealInterval r(prec_);
    mpfr_pow_si(r.lo_, lo_, p, MPFR_RNDD);
    mpfr_pow_si(r.hi_, hi_, p, MPFR_RNDU);
    return r;
  }
  // Sign-straddling or negative base: repeated multiplication stays an enclosure.
  RealInterval r = integer(1, prec_);
  for (long i = 0; i < p; ++i) r *= *this;
  return r;
}

RealInterval RealInterval::pow(long p, unsigned long q) const {
  if (q == 0) throw std::domain_error("zero denominator in exponent");
  return root(q).pow(p);
}

RealInterval RealInterval::exp2() const {
  RealInterval r(prec_);
  mpfr_exp2(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp2(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::with_precision(mpfr_prec_t prec) const {
  RealInterval r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

namespace {

std::string format(mpfr_srcptr x, int digits, bool down) {
  char* buf = nullptr;
  if (down) {
    mpfr_asprintf(&buf, "%.*RDg", digits, x);
  } else {
    mpfr_asprintf(&buf, "%.*RUg", digits, x);
  }
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

std::string RealInterval::lo_string(int digits) const { return format(lo_, digits, true); }
std::string RealInterval::hi_string(int digits) const { return format(hi_, digits, false); }

std::string RealInterval::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

RealInterval operator+(RealInterval lhs, const RealInterval& rhs) { return lhs += rhs; }
RealInterval operator-(RealInterval lhs, const RealInterval& rhs) { return lhs -= rhs; }
RealInterval operator*(RealInterval lhs, const RealInterval& rhs) { return lhs *= rhs; }
RealInterval operator/(RealInterval lhs, const RealInterval& rhs) { return lhs /= rhs; }

RealInterval RealInterval::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

RealInterval max(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  return RealInterval::from_endpoints(mpfr_greaterequal_p(a.lo(), b.lo()) ? a.lo() : b.lo(),
                                      mpfr_greaterequal_p(a.hi(), b.hi()) ? a.hi() : b.hi(), prec);
}

RealInterval min(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  return RealInterval::from_endpoints(mpfr_lessequal_p(a.lo(), b.lo()) ? a.lo() : b.lo(),
                                      mpfr_lessequal_p(a.hi(), b.hi()) ? a.hi() : b.hi(), prec);
}

Tri certainly_le(const RealInterval& a, const RealInterval& b) {
  if (mpfr_lessequal_p(a.hi(), b.lo())) return Tri::Yes;
  if (mpfr_greater_p(a.lo(), b.hi())) return Tri::No;
  return Tri::Indeterminate;
}

RealInterval unit_ball_volume(unsigned m, mpfr_prec_t prec) {
  // kappa_m = (2 pi / m) kappa_{m-2}; the rational factor is kept exact.
  mpq_class factor = (m % 2 == 0) ? mpq_class(1) : mpq_class(2);
  for (unsigned k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2) factor *= mpq_class(2, k);
  factor.canonicalize();
  return RealInterval::rational(factor, prec) * RealInterval::pi(prec).pow(static_cast<long>(m / 2));
}

}  // namespace frob
