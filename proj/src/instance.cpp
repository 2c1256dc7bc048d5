#include "frobenius/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frobenius/error.hpp"
#include "frobenius/exact.hpp"

namespace frob {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::DegenerateReduction: return "DegenerateReduction";
    case ErrorKind::CeilingTooLarge: return "CeilingTooLarge";
    case ErrorKind::UncertifiedCeiling: return "UncertifiedCeiling";
    case ErrorKind::InternalRankError: return "InternalRankError";
    case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ResourceCapExceeded: return "ResourceCapExceeded";
    case ErrorKind::ExhaustedSampling: return "ExhaustedSampling";
  }
  return "Unknown";
}

FrobeniusInstance::FrobeniusInstance(std::vector<std::int64_t> sorted) : a_(std::move(sorted)), product_(1) {
  for (std::int64_t ai : a_) {
    const mpz_class z(static_cast<long>(ai));
    product_ *= z;
    norm_sq_ += z * z;
  }
  deleted_norm_sq_.reserve(a_.size());
  for (std::int64_t ai : a_) {
    const mpz_class z(static_cast<long>(ai));
    deleted_norm_sq_.push_back(norm_sq_ - z * z);
  }
  sum_alpha_a_ = sum_alpha_a(RealInterval::kDefaultPrecision);
}

RealInterval FrobeniusInstance::norm(mpfr_prec_t prec) const {
  return RealInterval::integer(norm_sq_, prec).sqrt();
}

RealInterval FrobeniusInstance::sum_alpha_a(mpfr_prec_t prec) const {
  if (prec == sum_alpha_a_.precision() && sum_alpha_a_.is_positive()) return sum_alpha_a_;
  RealInterval sum = RealInterval::integer(0, prec);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    sum += RealInterval::integer(deleted_norm_sq_[i], prec).sqrt() *
           RealInterval::integer(static_cast<long>(a_[i]), prec);
  }
  return sum;
}

std::string FrobeniusInstance::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  os << ')';
  return os.str();
}

FrobeniusInstance validate_tuple(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw Error(ErrorKind::TooSmall, "empty tuple");
  std::vector<std::int64_t> a(raw.begin(), raw.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.front() <= 1) throw Error(ErrorKind::TooSmall, "entries must exceed 1");
  if (a.size() < 2) throw Error(ErrorKind::TooSmall, "need at least two distinct entries");
  std::int64_t g = 0;
  for (std::int64_t ai : a) g = std::gcd(g, ai);
  if (g != 1) throw Error(ErrorKind::NotCoprime, "gcd is " + std::to_string(g));
  return FrobeniusInstance(std::move(a));
}

namespace {

// Index of the largest entry representable by the others, or npos.
std::size_t largest_redundant(const std::vector<std::int64_t>& a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    std::vector<std::int64_t> rest;
    rest.reserve(a.size() - 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) rest.push_back(a[j]);
    }
    if (is_representable(rest, a[i])) return i;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

FrobeniusInstance reduce_tuple(const FrobeniusInstance& inst) {
  std::vector<std::int64_t> a = inst.a();
  for (;;) {
    const std::size_t i = largest_redundant(a);
    if (i == static_cast<std::size_t>(-1)) break;
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
    if (a.size() < 2) throw Error(ErrorKind::DegenerateReduction, "reduction left a single entry");
  }
  return validate_tuple(a);
}

bool is_reduced(const FrobeniusInstance& inst) {
  return largest_redundant(inst.a()) == static_cast<std::size_t>(-1);
}

}  // namespace frob
