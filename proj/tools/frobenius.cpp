// Command-line front end: exact, bounds, count, verify, sweep.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frobenius/bounds.hpp"
#include "frobenius/error.hpp"
#include "frobenius/exact.hpp"
#include "frobenius/harness.hpp"
#include "frobenius/instance.hpp"
#include "frobenius/lattice.hpp"

namespace {

using namespace frob;

struct Range {
  std::int64_t first = 0;
  std::int64_t last = 0;
};

// "K" or "K..L".
Range parse_range(const std::string& text, std::int64_t min_value) {
  Range r;
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.first = r.last = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots);
      const std::string b = text.substr(dots + 2);
      r.first = std::stoll(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.last = std::stoll(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ConfigError, "bad range '" + text + "'");
  }
  if (r.first < min_value || r.last < r.first) throw Error(ErrorKind::ConfigError, "bad range '" + text + "'");
  return r;
}

FrobeniusInstance parse_tuple(const std::string& text) {
  std::istringstream in(text);
  auto suite = parse_suite(in);
  if (suite.size() != 1) throw Error(ErrorKind::ConfigError, "expected one tuple, got '" + text + "'");
  return suite.front();
}

std::string interval_text(const RealInterval& x) { return "[" + x.lo_string(15) + ", " + x.hi_string(15) + "]"; }

void print_evaluation(const BoundEvaluation& e) {
  std::cout << to_string(e.id) << " direction=" << to_string(e.direction) << " applicable=" << to_string(e.applicable)
            << " value=" << (e.value ? interval_text(*e.value) : "none");
  if (e.threshold) std::cout << " threshold=" << interval_text(*e.threshold);
  if (!e.reason.empty()) std::cout << " reason=\"" << e.reason << '"';
  std::cout << '\n';
}

struct Pipeline {
  FrobeniusInstance inst;
  KernelLattice lattice;
  SuccessiveMinima minima;
};

Pipeline build(const FrobeniusInstance& inst) {
  KernelLattice lattice = reduce_basis(kernel_basis(inst));
  SuccessiveMinima minima = successive_minima(lattice);
  return {inst, std::move(lattice), std::move(minima)};
}

int cmd_exact(const std::string& tuple, const std::string& s_text) {
  const FrobeniusInstance input = parse_tuple(tuple);
  const Range s = parse_range(s_text, 0);
  const Pipeline p = build(input);
  const BoundEvaluator bev(p.lattice, p.minima);
  const DenumerantTable table = denumerant_table(p.inst, bev.ceiling(static_cast<std::uint64_t>(s.last)));
  for (std::int64_t k = s.first; k <= s.last; ++k) {
    const auto g = s_frobenius_exact(table, static_cast<std::uint64_t>(k), bev.ceiling(static_cast<std::uint64_t>(k)));
    std::cout << "s=" << k << " g=" << (g ? std::to_string(*g) : "none") << '\n';
  }
  return kExitOk;
}

int cmd_bounds(const std::string& tuple, const std::string& s_text, bool historical, const std::string& rho,
               long prec) {
  const FrobeniusInstance input = parse_tuple(tuple);
  const Range s = parse_range(s_text, 0);
  BoundOptions options;
  options.historical = historical;
  try {
    options.rho = mpq_class(rho);
    options.rho.canonicalize();
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ConfigError, "bad rho '" + rho + "'");
  }
  if (prec < MPFR_PREC_MIN || prec > 1 << 16) throw Error(ErrorKind::ConfigError, "precision out of range");
  options.precision = prec;
  options.retry_precision = 4 * prec;
  const Pipeline p = build(input);
  const BoundEvaluator bev(p.lattice, p.minima, options);
  const Certificates& c = bev.certificates();
  std::cout << "# tuple " << p.inst.to_string() << " lambdaSq";
  for (const auto& v : p.minima.lambda_sq) std::cout << ' ' << v.get_str();
  std::cout << " R=" << "[" << c.r_lower.lo_string(15) << ", " << c.r_upper.hi_string(15) << "]"
            << " RUpperSource=" << to_string(c.r_upper_source) << " tau=" << c.tau_lower << '\n';
  for (std::int64_t k = s.first; k <= s.last; ++k) {
    std::cout << "s=" << k << " ceiling=" << bev.ceiling(static_cast<std::uint64_t>(k)) << '\n';
    for (const auto& e : bev.on_gs(static_cast<std::uint64_t>(k))) print_evaluation(e);
  }
  return kExitOk;
}

int cmd_count(const std::string& tuple, const std::string& t_text, bool historical) {
  const FrobeniusInstance input = parse_tuple(tuple);
  const Range t = parse_range(t_text, 0);
  BoundOptions options;
  options.historical = historical;
  const Pipeline p = build(input);
  const BoundEvaluator bev(p.lattice, p.minima, options);
  const DenumerantTable table = denumerant_table(p.inst, t.last);
  for (std::int64_t k = t.first; k <= t.last; ++k) {
    std::cout << "t=" << k << " G=" << table.count(k).get_str();
    for (const auto& e : bev.on_count(k)) {
      std::cout << ' ' << to_string(e.id) << '=';
      if (e.applicable == Tri::Yes && e.value)
        std::cout << interval_text(*e.value);
      else
        std::cout << "NA";
    }
    std::cout << '\n';
  }
  return kExitOk;
}

OutputFormat parse_format(const std::string& f) {
  if (f == "json") return OutputFormat::Json;
  if (f == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::ConfigError, "unknown format '" + f + "'");
}

int finish(const Report& report) {
  emit(report, std::cout);
  const int code = exit_code(report);
  std::cerr << report.tuples.size() << " tuples, " << report.skipped() << " skipped, "
            << report.asserted_violations() << " asserted violations\n";
  return code;
}

int run(int argc, char** argv) {
  CLI::App app{"s-Frobenius numbers: exact values, lattice bounds and verification"};
  app.require_subcommand(1);

  std::string tuple, s_text = "0", t_text = "1..100", rho = "2", format = "json", suite;
  bool historical = false, timings = false;
  long prec = RealInterval::kDefaultPrecision;
  SweepConfig config;

  auto* exact = app.add_subcommand("exact", "exact s-Frobenius numbers");
  exact->add_option("--a", tuple, "coefficients, e.g. 6,9,20")->required();
  exact->add_option("--s", s_text, "s or s1..s2");

  auto* bounds = app.add_subcommand("bounds", "all bound evaluations on g_s");
  bounds->add_option("--a", tuple)->required();
  bounds->add_option("--s", s_text);
  bounds->add_flag("--historical", historical, "include the original, uncorrected forms");
  bounds->add_option("--rho", rho, "rho > 1 as a rational, e.g. 3/2");
  bounds->add_option("--prec", prec, "interval precision in bits");

  auto* count = app.add_subcommand("count", "exact denumerants with count bounds");
  count->add_option("--a", tuple)->required();
  count->add_option("--t", t_text, "t or t1..t2");
  count->add_flag("--historical", historical);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--smax", config.s_max);
    sub->add_option("--out", config.output_path, "report path (stdout when omitted)");
    sub->add_option("--format", format, "json or csv");
    sub->add_option("--threads", config.threads);
    sub->add_option("--tmax", config.count_t_max, "largest t for the count checks");
    sub->add_option("--table-cap", config.caps.table.max_cells);
    sub->add_option("--node-cap", config.caps.enumeration.max_nodes);
    sub->add_flag("--historical", historical);
    sub->add_flag("--timings", timings, "include wall-clock timings (breaks byte determinism)");
  };

  auto* verify = app.add_subcommand("verify", "verify a suite of tuples");
  verify->add_option("--suite", suite, "one comma-separated tuple per line")->required();
  common(verify);

  auto* sweep = app.add_subcommand("sweep", "verify random tuples");
  sweep->add_option("--n", config.n)->required();
  sweep->add_option("--amax", config.a_max)->required();
  sweep->add_option("--count", config.tuple_count)->required();
  sweep->add_option("--seed", config.seed);
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (exact->parsed()) return cmd_exact(tuple, s_text);
    if (bounds->parsed()) return cmd_bounds(tuple, s_text, historical, rho, prec);
    if (count->parsed()) return cmd_count(tuple, t_text, historical);
    config.format = parse_format(format);
    config.historical = historical;
    config.timings = timings;
    if (verify->parsed()) {
      config.tuple_count = 1;
      config.a_max = config.n + 1;
      return finish(run_verify(load_suite(suite), config));
    }
    return finish(run_sweep(config));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::CeilingTooLarge:
      case ErrorKind::EnumerationBudgetExceeded:
      case ErrorKind::ResourceCapExceeded:
        return kExitResource;
      default:
        return kExitConfig;
    }
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
