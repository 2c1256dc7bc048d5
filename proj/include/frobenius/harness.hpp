#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frobenius/bounds.hpp"
#include "frobenius/exact.hpp"
#include "frobenius/instance.hpp"
#include "frobenius/lattice.hpp"

namespace frob {

enum class OutputFormat { Json, Csv };

struct ResourceCaps {
  TableLimits table;
  EnumerationLimits enumeration;
};

struct SweepConfig {
  unsigned n = 3;
  std::int64_t a_max = 40;
  std::uint64_t tuple_count = 1;
  std::uint64_t s_max = 10;
  std::uint64_t seed = 42;
  ResourceCaps caps;
  std::string output_path;
  OutputFormat format = OutputFormat::Json;

  unsigned threads = 1;
  /// Count bounds are checked for 1 <= t <= count_t_max.
  std::int64_t count_t_max = 200;
  /// Samples drawn from (ceiling, 2 ceiling] per s.
  unsigned ceiling_samples = 100;
  bool historical = false;
  bool timings = false;
};

/// Throws Error{ConfigError} on N < 2, aMax < N + 1, tupleCount < 1 or zero threads.
void validate(const SweepConfig& config);

inline constexpr const char* kPrngName = "mt19937_64";
inline constexpr const char* kReportVersion = "1.0.0";

/// Deterministic in (n, a_max, count, seed). Each draw picks n distinct values
/// in [2, a_max], rejects non-coprime tuples and tuples whose reduction leaves
/// fewer than two entries, and returns the reduced tuple.
/// Throws Error{ExhaustedSampling} after 10^4 consecutive rejections.
std::vector<FrobeniusInstance> random_tuples(unsigned n, std::int64_t a_max, std::uint64_t count,
                                             std::uint64_t seed);

/// One comma-separated tuple per line; '#' starts a comment, blank lines are
/// ignored. Throws Error{ConfigError} with the line number on bad input.
std::vector<FrobeniusInstance> parse_suite(std::istream& in);
std::vector<FrobeniusInstance> load_suite(const std::string& path);

enum class Satisfied { Yes, No, NotApplicable };
std::string_view to_string(Satisfied s);

/// Whether a violated inequality fails the run.
bool is_asserted(BoundId id, std::size_t n);

struct BoundCheck {
  BoundEvaluation eval;
  bool asserted = false;
  Satisfied satisfied = Satisfied::NotApplicable;
};

/// Checks an evaluation of a g_s bound against the exact value. A check fails
/// only when the enclosure certifies the violation. Not applicable when the
/// bound does not apply or g_s does not exist.
BoundCheck check_gs(const BoundEvaluation& e, const std::optional<std::int64_t>& g, std::size_t n);
/// Checks an evaluation of a G(t) bound against the exact count.
BoundCheck check_count(const BoundEvaluation& e, const mpz_class& count, std::size_t n);

struct LatticeSummary {
  std::vector<mpz_class> lambda_sq;
  mpz_class det_sq;
  RealInterval r_lower;
  RealInterval r_upper;
  RadiusCertificate r_source = RadiusCertificate::MinimaChain;
  bool well_rounded = false;
  std::uint64_t nodes = 0;
};

struct ReportRow {
  std::uint64_t s = 0;
  std::int64_t ceiling = 0;
  std::optional<std::int64_t> g_exact;
  std::vector<BoundCheck> bounds;
};

struct CountViolation {
  std::int64_t t = 0;
  mpz_class count;
  RealInterval value;
};

struct CountBoundSummary {
  BoundId id = BoundId::CountLower;
  bool asserted = false;
  std::uint64_t checked = 0;  // t values where the bound applied
  std::vector<CountViolation> violations;
};

struct CeilingCheck {
  std::uint64_t s = 0;
  std::int64_t ceiling = 0;
  std::uint64_t samples = 0;
  std::vector<std::int64_t> failures;  // sampled t with G(t) <= s
};

struct Timings {
  double lattice_ms = 0;
  double table_ms = 0;
  double bounds_ms = 0;
};

struct TupleReport {
  explicit TupleReport(FrobeniusInstance in) : input(std::move(in)) {}

  FrobeniusInstance input;
  bool skipped = false;
  std::string skip_reason;
  LatticeSummary lattice;
  std::vector<ReportRow> rows;
  std::int64_t count_t_max = 0;
  std::vector<CountBoundSummary> counts;
  bool ceiling_checked = false;
  std::vector<CeilingCheck> ceilings;
  Timings timings;

  std::uint64_t asserted_violations() const;
  std::uint64_t reported_violations() const;
};

/// Full pipeline on one tuple, taken as given (reduction changes g_s for
/// s >= 1). Resource-cap failures mark the report Skipped.
TupleReport analyze_tuple(const FrobeniusInstance& input, const SweepConfig& config);

struct Report {
  SweepConfig config;
  std::vector<TupleReport> tuples;

  std::uint64_t asserted_violations() const;
  std::uint64_t skipped() const;
};

/// Runs analyze_tuple over a work pool of config.threads workers; output order
/// follows input order.
Report run_report(const std::vector<FrobeniusInstance>& tuples, const SweepConfig& config);

std::string to_json(const Report& report);
std::string to_csv(const Report& report);
/// Writes the report in config.format to config.output_path, or to `out` when
/// the path is empty.
void emit(const Report& report, std::ostream& out);

/// 0 when no asserted inequality is violated, 1 otherwise.
int exit_code(const Report& report);

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitResource = 3;

/// Analysis entry points behind the `verify` and `sweep` subcommands.
Report run_verify(const std::vector<FrobeniusInstance>& suite, const SweepConfig& config);
Report run_sweep(const SweepConfig& config);

}  // namespace frob
