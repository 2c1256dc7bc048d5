#include "frobenius/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "frobenius/error.hpp"

namespace frob {

using json = nlohmann::ordered_json;

void validate(const SweepConfig& c) {
  if (c.n < 2) throw Error(ErrorKind::ConfigError, "N must be at least 2");
  if (c.a_max < static_cast<std::int64_t>(c.n) + 1)
    throw Error(ErrorKind::ConfigError, "aMax must be at least N + 1");
  if (c.tuple_count < 1) throw Error(ErrorKind::ConfigError, "tuple count must be positive");
  if (c.threads < 1) throw Error(ErrorKind::ConfigError, "thread count must be positive");
  if (c.count_t_max < 0) throw Error(ErrorKind::ConfigError, "count range must be nonnegative");
}

namespace {

// Uniform on [lo, hi] by rejection; std distributions are not portable.
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

}  // namespace

std::vector<FrobeniusInstance> random_tuples(unsigned n, std::int64_t a_max, std::uint64_t count,
                                             std::uint64_t seed) {
  SweepConfig probe;
  probe.n = n;
  probe.a_max = a_max;
  probe.tuple_count = count;
  validate(probe);

  std::mt19937_64 rng(seed);
  std::vector<FrobeniusInstance> out;
  out.reserve(count);
  constexpr int kMaxFailures = 10'000;
  int failures = 0;
  while (out.size() < count) {
    std::set<std::int64_t> draw;
    while (draw.size() < n) draw.insert(uniform(rng, 2, a_max));
    std::int64_t g = 0;
    for (std::int64_t v : draw) g = std::gcd(g, v);
    if (g == 1) {
      try {
        const std::vector<std::int64_t> values(draw.begin(), draw.end());
        out.push_back(reduce_tuple(validate_tuple(values)));
        failures = 0;
        continue;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateReduction) throw;
      }
    }
    if (++failures >= kMaxFailures) throw Error(ErrorKind::ExhaustedSampling, "too many consecutive rejections");
  }
  return out;
}

std::vector<FrobeniusInstance> parse_suite(std::istream& in) {
  std::vector<FrobeniusInstance> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::int64_t> values;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(field, &used));
        if (field.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(field);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::ConfigError, "suite line " + std::to_string(line_no) + ": bad entry '" + field + "'");
      }
    }
    try {
      out.push_back(validate_tuple(values));
    } catch (const Error& e) {
      throw Error(ErrorKind::ConfigError, "suite line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<FrobeniusInstance> load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot open suite file " + path);
  return parse_suite(in);
}

std::string_view to_string(Satisfied s) {
  switch (s) {
    case Satisfied::Yes: return "yes";
    case Satisfied::No: return "no";
    case Satisfied::NotApplicable: return "NA";
  }
  return "?";
}

bool is_asserted(BoundId id, std::size_t n) {
  switch (id) {
    case BoundId::UpperKissing: return n >= 3;
    case BoundId::LowerRodseth:
    case BoundId::LowerSimpleHistorical:
    case BoundId::LowerRhoHistorical:
    case BoundId::CountUpperBlichfeldtHistorical:
    case BoundId::CountUpperLemma31Historical: return false;
    default: return true;
  }
}

BoundCheck check_gs(const BoundEvaluation& e, const std::optional<std::int64_t>& g, std::size_t n) {
  BoundCheck c{e, is_asserted(e.id, n), Satisfied::NotApplicable};
  if (e.applicable != Tri::Yes || !e.value || !g) return c;
  const RealInterval exact = RealInterval::integer(*g, e.value->precision());
  // Violated only when the enclosure rules the inequality out.
  const Tri holds = e.direction == Direction::UpperOnGs ? certainly_le(exact, *e.value) : certainly_le(*e.value, exact);
  c.satisfied = holds == Tri::No ? Satisfied::No : Satisfied::Yes;
  return c;
}

BoundCheck check_count(const BoundEvaluation& e, const mpz_class& count, std::size_t n) {
  BoundCheck c{e, is_asserted(e.id, n), Satisfied::NotApplicable};
  if (e.applicable != Tri::Yes || !e.value) return c;
  const RealInterval exact = RealInterval::integer(count, e.value->precision());
  const Tri holds =
      e.direction == Direction::UpperOnCount ? certainly_le(exact, *e.value) : certainly_le(*e.value, exact);
  c.satisfied = holds == Tri::No ? Satisfied::No : Satisfied::Yes;
  return c;
}

std::uint64_t TupleReport::asserted_violations() const {
  std::uint64_t v = 0;
  for (const auto& row : rows)
    for (const auto& b : row.bounds) v += b.asserted && b.satisfied == Satisfied::No;
  for (const auto& c : counts)
    if (c.asserted) v += c.violations.size();
  for (const auto& c : ceilings) v += c.failures.size();
  return v;
}

std::uint64_t TupleReport::reported_violations() const {
  std::uint64_t v = 0;
  for (const auto& row : rows)
    for (const auto& b : row.bounds) v += !b.asserted && b.satisfied == Satisfied::No;
  for (const auto& c : counts)
    if (!c.asserted) v += c.violations.size();
  return v;
}

namespace {

bool is_resource_error(ErrorKind k) {
  return k == ErrorKind::CeilingTooLarge || k == ErrorKind::EnumerationBudgetExceeded ||
         k == ErrorKind::ResourceCapExceeded;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

TupleReport analyze_tuple(const FrobeniusInstance& input, const SweepConfig& config) {
  TupleReport rep(input);
  try {
    auto clock = std::chrono::steady_clock::now();
    const FrobeniusInstance& inst = input;
    const std::size_t n = inst.size();
    const KernelLattice reduced = reduce_basis(kernel_basis(inst));
    const SuccessiveMinima sm = successive_minima(reduced, config.caps.enumeration);
    BoundOptions options;
    options.historical = config.historical;
    const BoundEvaluator bev(reduced, sm, options);
    const Certificates& certs = bev.certificates();
    rep.lattice = {sm.lambda_sq, reduced.det_sq, certs.r_lower, certs.r_upper, certs.r_upper_source,
                   is_well_rounded(sm), sm.nodes};
    rep.timings.lattice_ms = elapsed_ms(clock);

    clock = std::chrono::steady_clock::now();
    const std::int64_t top = bev.ceiling(config.s_max);
    const std::int64_t wanted = std::max<std::int64_t>(2 * top, config.count_t_max);
    std::optional<DenumerantTable> table;
    if (static_cast<std::uint64_t>(wanted) + 1 <= config.caps.table.max_cells) {
      table = denumerant_table(inst, wanted, config.caps.table);
      rep.ceiling_checked = true;
    } else {
      // Exact values only; the ceiling samples are skipped.
      table = denumerant_table(inst, std::max<std::int64_t>(top, config.count_t_max), config.caps.table);
    }
    rep.timings.table_ms = elapsed_ms(clock);

    clock = std::chrono::steady_clock::now();
    for (std::uint64_t s = 0; s <= config.s_max; ++s) {
      ReportRow row;
      row.s = s;
      row.ceiling = bev.ceiling(s);
      row.g_exact = s_frobenius_exact(*table, s, row.ceiling);
      for (const auto& e : bev.on_gs(s)) row.bounds.push_back(check_gs(e, row.g_exact, n));
      rep.rows.push_back(std::move(row));

      if (rep.ceiling_checked && config.ceiling_samples > 0) {
        CeilingCheck cc;
        cc.s = s;
        cc.ceiling = rep.rows.back().ceiling;
        const std::int64_t c = cc.ceiling;
        for (std::int64_t k = 1; k <= static_cast<std::int64_t>(config.ceiling_samples); ++k) {
          // Evenly strided through (c, 2c], ending at 2c.
          const std::int64_t t = c + std::max<std::int64_t>(1, (k * c) / config.ceiling_samples);
          ++cc.samples;
          if (table->compare(t, s) <= 0) cc.failures.push_back(t);
        }
        rep.ceilings.push_back(std::move(cc));
      }
    }

    rep.count_t_max = config.count_t_max;
    for (std::int64_t t = 1; t <= config.count_t_max; ++t) {
      const mpz_class g = table->count(t);
      const auto evals = bev.on_count(t);
      if (rep.counts.empty()) {
        for (const auto& e : evals) rep.counts.push_back({e.id, is_asserted(e.id, n), 0, {}});
      }
      for (std::size_t i = 0; i < evals.size(); ++i) {
        const BoundCheck c = check_count(evals[i], g, n);
        if (c.satisfied == Satisfied::NotApplicable) continue;
        ++rep.counts[i].checked;
        if (c.satisfied == Satisfied::No) rep.counts[i].violations.push_back({t, g, *evals[i].value});
      }
    }
    rep.timings.bounds_ms = elapsed_ms(clock);
  } catch (const Error& e) {
    if (!is_resource_error(e.kind())) throw;
    rep.skipped = true;
    rep.skip_reason = e.what();
    rep.rows.clear();
    rep.counts.clear();
    rep.ceilings.clear();
  }
  return rep;
}

std::uint64_t Report::asserted_violations() const {
  std::uint64_t v = 0;
  for (const auto& t : tuples) v += t.asserted_violations();
  return v;
}

std::uint64_t Report::skipped() const {
  return static_cast<std::uint64_t>(std::count_if(tuples.begin(), tuples.end(), [](const auto& t) { return t.skipped; }));
}

Report run_report(const std::vector<FrobeniusInstance>& tuples, const SweepConfig& config) {
  validate(config);
  std::vector<std::optional<TupleReport>> slots(tuples.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      try {
        slots[i] = analyze_tuple(tuples[i], config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<std::size_t>(config.threads, std::max<std::size_t>(tuples.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  Report report{config, {}};
  report.tuples.reserve(tuples.size());
  for (auto& slot : slots) report.tuples.push_back(std::move(*slot));
  return report;
}

Report run_verify(const std::vector<FrobeniusInstance>& suite, const SweepConfig& config) {
  return run_report(suite, config);
}

Report run_sweep(const SweepConfig& config) {
  validate(config);
  return run_report(random_tuples(config.n, config.a_max, config.tuple_count, config.seed), config);
}

namespace {

constexpr int kDigits = 20;

json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json interval_json(const RealInterval& x) { return json{{"lo", x.lo_string(kDigits)}, {"hi", x.hi_string(kDigits)}}; }

json optional_interval(const std::optional<RealInterval>& x) { return x ? interval_json(*x) : json(nullptr); }

json tuple_json(const FrobeniusInstance& inst) { return json(inst.a()); }

std::string applicable_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Indeterminate: return "indeterminate";
  }
  return "?";
}

json bound_json(const BoundCheck& b) {
  json j;
  j["boundId"] = std::string(to_string(b.eval.id));
  j["direction"] = std::string(to_string(b.eval.direction));
  j["value"] = optional_interval(b.eval.value);
  j["applicable"] = applicable_name(b.eval.applicable);
  if (b.eval.threshold) j["threshold"] = interval_json(*b.eval.threshold);
  if (!b.eval.reason.empty()) j["reason"] = b.eval.reason;
  j["asserted"] = b.asserted;
  j["satisfied"] = std::string(to_string(b.satisfied));
  return j;
}

json lattice_json(const LatticeSummary& l) {
  json lambda = json::array();
  for (const auto& v : l.lambda_sq) lambda.push_back(integer_json(v));
  return json{{"lambdaSq", lambda},
              {"detSq", integer_json(l.det_sq)},
              {"R", json{{"lo", l.r_lower.lo_string(kDigits)}, {"hi", l.r_upper.hi_string(kDigits)}}},
              {"RUpperSource", std::string(to_string(l.r_source))},
              {"wellRounded", l.well_rounded},
              {"enumerationNodes", l.nodes}};
}

json header_json(const SweepConfig& c) {
  return json{{"version", kReportVersion},
              {"seed", c.seed},
              {"prng", kPrngName},
              {"caps", json{{"tableCells", c.caps.table.max_cells}, {"enumerationNodes", c.caps.enumeration.max_nodes}}},
              {"sMax", c.s_max},
              {"countTMax", c.count_t_max},
              {"ceilingSamples", c.ceiling_samples},
              {"precisionBits", RealInterval::kDefaultPrecision},
              {"intervalDigits", kDigits}};
}

}  // namespace

std::string to_json(const Report& report) {
  json rows = json::array();
  json counts = json::array();
  json ceilings = json::array();
  std::uint64_t reported = 0;
  for (const auto& t : report.tuples) {
    reported += t.reported_violations();
    const json tuple = tuple_json(t.input);
    if (t.skipped) {
      json row;
      row["tuple"] = tuple;
      row["status"] = "Skipped";
      row["reason"] = t.skip_reason;
      rows.push_back(std::move(row));
      continue;
    }
    const json lattice = lattice_json(t.lattice);
    for (const auto& r : t.rows) {
      json row;
      row["tuple"] = tuple;
      row["status"] = "Ok";
      row["s"] = r.s;
      row["gExact"] = r.g_exact ? json(*r.g_exact) : json("none");
      row["ceiling"] = r.ceiling;
      json bounds = json::array();
      for (const auto& b : r.bounds) bounds.push_back(bound_json(b));
      row["bounds"] = std::move(bounds);
      row["lattice"] = lattice;
      if (report.config.timings) {
        row["timings"] = json{{"latticeMs", t.timings.lattice_ms},
                              {"tableMs", t.timings.table_ms},
                              {"boundsMs", t.timings.bounds_ms}};
      }
      rows.push_back(std::move(row));
    }
    json per_bound = json::array();
    for (const auto& c : t.counts) {
      json violations = json::array();
      for (const auto& v : c.violations)
        violations.push_back(json{{"t", v.t}, {"G", integer_json(v.count)}, {"value", interval_json(v.value)}});
      per_bound.push_back(json{{"boundId", std::string(to_string(c.id))},
                               {"asserted", c.asserted},
                               {"checked", c.checked},
                               {"violations", std::move(violations)}});
    }
    counts.push_back(json{{"tuple", tuple}, {"tMax", t.count_t_max}, {"bounds", std::move(per_bound)}});
    if (t.ceiling_checked) {
      for (const auto& c : t.ceilings)
        ceilings.push_back(json{{"tuple", tuple},
                                {"s", c.s},
                                {"ceiling", c.ceiling},
                                {"samples", c.samples},
                                {"failures", c.failures}});
    }
  }
  json doc;
  doc["header"] = header_json(report.config);
  doc["rows"] = std::move(rows);
  doc["countChecks"] = std::move(counts);
  doc["ceilingChecks"] = std::move(ceilings);
  doc["summary"] = json{{"tuples", report.tuples.size()},
                        {"skipped", report.skipped()},
                        {"assertedViolations", report.asserted_violations()},
                        {"reportedViolations", reported}};
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_tuple(const FrobeniusInstance& inst) {
  std::string s = "\"";
  for (std::size_t i = 0; i < inst.size(); ++i) s += (i ? "," : "") + std::to_string(inst[i]);
  return s + "\"";
}

}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "tuple,status,s,gExact,ceiling,boundId,direction,lo,hi,applicable,asserted,satisfied\n";
  for (const auto& t : report.tuples) {
    const std::string tuple = csv_tuple(t.input);
    if (t.skipped) {
      out << tuple << ",Skipped,,,,,,,,,,\n";
      continue;
    }
    for (const auto& r : t.rows) {
      const std::string g = r.g_exact ? std::to_string(*r.g_exact) : "none";
      for (const auto& b : r.bounds) {
        out << tuple << ",Ok," << r.s << ',' << g << ',' << r.ceiling << ','
            << to_string(b.eval.id) << ',' << to_string(b.eval.direction) << ','
            << (b.eval.value ? b.eval.value->lo_string(kDigits) : "") << ','
            << (b.eval.value ? b.eval.value->hi_string(kDigits) : "") << ',' << applicable_name(b.eval.applicable)
            << ',' << (b.asserted ? "true" : "false") << ',' << to_string(b.satisfied) << '\n';
      }
    }
  }
  return out.str();
}

void emit(const Report& report, std::ostream& out) {
  const std::string text = report.config.format == OutputFormat::Csv ? to_csv(report) : to_json(report);
  if (report.config.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(report.config.output_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::ConfigError, "cannot write " + report.config.output_path);
  file << text;
}

int exit_code(const Report& report) { return report.asserted_violations() == 0 ? kExitOk : kExitViolation; }

}  // namespace frob
