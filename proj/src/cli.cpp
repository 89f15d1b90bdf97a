#include "ph/cli.hpp"

#include "ph/errors.hpp"
#include "ph/harmonic_sums.hpp"
#include "ph/kernel.hpp"
#include "ph/partitions.hpp"
#include "ph/quadrature.hpp"
#include "ph/report.hpp"
#include "ph/tail_analysis.hpp"
#include "ph/version.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace ph::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct GlobalOptions {
  std::string format = "text";
  std::string out_path;
  int threads = 1;
};

std::string join_argv(const std::vector<std::string>& argv) {
  std::string joined = "partition-harmonics";
  for (const auto& a : argv) joined += " " + a;
  return joined;
}

json make_manifest(const std::vector<std::string>& argv, const std::vector<std::string>& warnings) {
  json m;
  m["schema"] = kJsonSchemaVersion;
  m["command"] = join_argv(argv);
  m["version"] = kVersion;
  m["warnings"] = warnings;
  return m;
}

void write_output(const GlobalOptions& opts, std::ostream& out, const std::string& text) {
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) throw Error("cannot open output file: " + opts.out_path);
    file << text;
    return;
  }
  out << text;
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

// ---------------------------------------------------------------------------
// partitions table

std::string render_partitions(const GlobalOptions& opts, const std::vector<std::string>& argv,
                              int max_n, const std::string& oracle) {
  const bool want_euler = oracle == "euler" || oracle == "both";
  const bool want_enum = oracle == "enumerate" || oracle == "both";
  PartitionTable euler;
  if (want_euler) euler = partitions_euler(max_n);
  PartitionTable enumerated;
  if (want_enum) enumerated = partitions_enumerate_table(max_n);

  std::ostringstream out;
  if (opts.format == "csv") {
    out << "n";
    if (want_euler) out << ",euler";
    if (want_enum) out << ",enumeration";
    out << "\n";
    for (int n = 0; n <= max_n; ++n) {
      out << n;
      if (want_euler) out << "," << euler.at(n).str();
      if (want_enum) out << "," << enumerated.at(n).str();
      out << "\n";
    }
  } else if (opts.format == "json") {
    json j;
    j["manifest"] = make_manifest(argv, {});
    j["rows"] = json::array();
    for (int n = 0; n <= max_n; ++n) {
      json row;
      row["n"] = n;
      if (want_euler) row["euler"] = euler.at(n).str();
      if (want_enum) row["enumeration"] = enumerated.at(n).str();
      j["rows"].push_back(row);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "  n  p_n\n";
    for (int n = 0; n <= max_n; ++n) {
      const std::string value =
          want_euler ? euler.at(n).str() : enumerated.at(n).str();
      out << std::setw(3) << n << "  " << value;
      if (want_euler && want_enum)
        out << (euler.at(n) == enumerated.at(n) ? "  (oracles agree)"
                                                : "  (ORACLES DISAGREE)");
      out << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// kernel expand

std::string paper_style(const KernelSeries& k) {
  // Every coefficient is even; print the shared factor 2 outside the parens
  // the way the expansions are usually written.
  std::ostringstream out;
  out << "2(";
  bool first = true;
  for (const auto& [n, c] : k.series.cos_terms()) {
    if (!first) out << " + ";
    first = false;
    const BigInt inner = c.halved().as_integer();
    if (n == 0) {
      out << inner.str();
      continue;
    }
    if (inner != 1) out << inner.str();
    if (n == 1) out << "cos x";
    else out << "cos " << n << "x";
  }
  out << ")";
  return out.str();
}

std::string render_kernel(const GlobalOptions& opts, const std::vector<std::string>& argv, int s) {
  const KernelSeries k = build_kernel(s);
  std::ostringstream out;
  if (opts.format == "csv") {
    out << "frequency,coefficient\n";
    for (const auto& [n, c] : k.series.cos_terms())
      out << n << "," << c.as_integer().str() << "\n";
  } else if (opts.format == "json") {
    json j;
    j["manifest"] = make_manifest(argv, {});
    j["s"] = s;
    j["max_frequency"] = k.max_frequency;
    j["series"] = k.series.to_json();
    out << j.dump(2) << "\n";
  } else {
    out << paper_style(k) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// quadrature

QuadratureSpec parse_spec(const std::string& rule, const std::string& evaluator, int nodes,
                          int threads) {
  QuadratureSpec spec;
  spec.rule = rule == "gauss" ? Rule::kGaussLegendre : Rule::kUniformTrapezoid;
  spec.evaluator = evaluator == "direct" ? Evaluator::kDirect : Evaluator::kSeries;
  spec.nodes = nodes;
  spec.threads = threads;
  return spec;
}

std::string render_quadrature(const GlobalOptions& opts, const std::vector<std::string>& argv,
                              int s, int m, const std::string& form, const QuadratureSpec& spec,
                              bool as_json) {
  QuadratureResult result;
  if (form == "reduced") result = integrate_reduced(s, spec);
  else if (form == "sin") result = integrate_sin_form(s, spec);
  else if (form == "cos") result = integrate_cos_form(s, spec);
  else if (form == "full") result = integrate_full(s, spec);
  else result = integrate_general(s, m, spec);

  std::vector<std::string> warnings;
  if (!result.trusted) warnings.push_back("residual >= 0.25: result untrusted");

  std::ostringstream out;
  if (as_json || opts.format == "json") {
    json j;
    j["manifest"] = make_manifest(argv, warnings);
    j["s"] = s;
    if (form == "general") j["m"] = m;
    j["form"] = form;
    j["rule"] = spec.rule == Rule::kGaussLegendre ? "gauss" : "trapezoid";
    j["evaluator"] = spec.evaluator == Evaluator::kDirect ? "direct" : "series";
    j["nodes_used"] = result.nodes_used;
    j["raw"] = result.raw;
    j["rounded"] = result.rounded;
    j["residual"] = result.residual;
    j["trusted"] = result.trusted;
    out << j.dump(2) << "\n";
  } else {
    out << form << " integral, s=" << s;
    if (form == "general") out << ", m=" << m;
    out << ": raw=" << format_double(result.raw) << " rounded=" << result.rounded
        << " residual=" << format_double(result.residual)
        << (result.trusted ? "" : " [UNTRUSTED]") << " nodes=" << result.nodes_used << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verify

struct SuiteLimits {
  int kernel_max = 30;
  int recursion_max = 20;
  int tails_max = 40;
  int section4_max = kSection4Envelope;
  int quadrature_max = 12;
  int full_max = 8;
  int general_s_max = 8;
  int general_m_max = 5;
  int moments_max = 10;
  int oracle_max = 30;
  int third_term_max = 60;

  void cap(int max_s) {
    kernel_max = std::min(kernel_max, max_s);
    recursion_max = std::min(recursion_max, max_s);
    tails_max = std::min(tails_max, max_s);
    section4_max = std::min(section4_max, max_s);
    quadrature_max = std::min(quadrature_max, max_s);
    full_max = std::min(full_max, max_s);
    general_s_max = std::min(general_s_max, max_s);
    moments_max = std::min(moments_max, max_s);
  }
};

std::vector<VerificationReport> verify_kernel_suite(const SuiteLimits& lim) {
  std::vector<VerificationReport> reports;
  const auto ladder = build_kernel_ladder(std::max(lim.kernel_max, lim.recursion_max + 1));
  for (int s = 1; s <= lim.kernel_max; ++s) {
    const KernelSeries& k = ladder[static_cast<std::size_t>(s - 1)];
    VerificationReport r;
    r.identity = "kernel endpoint/term-count invariants, s=" + std::to_string(s);
    const BigInt zero_expected = binomial(2 * s, s);
    const BigInt zero_actual = kernel_at_zero(k);
    if (zero_actual != zero_expected)
      r.fail("D_s(0)", zero_expected.str(), zero_actual.str());
    const BigInt half_pi_expected = s % 2 == 0 ? binomial(s, s / 2) : BigInt(0);
    const BigInt half_pi_actual = kernel_at_half_pi(k);
    if (half_pi_actual != half_pi_expected)
      r.fail("D_s(pi/2)", half_pi_expected.str(), half_pi_actual.str());
    const std::int64_t t_expected =
        s % 2 == 0 ? (static_cast<std::int64_t>(s) * s + 2) / 2
                   : (static_cast<std::int64_t>(s) * s + 1) / 2;
    if (term_count(k) != t_expected)
      r.fail("term count", std::to_string(t_expected), std::to_string(term_count(k)));
    reports.push_back(std::move(r));
  }
  for (int s = 1; s <= lim.recursion_max; ++s) {
    VerificationReport r;
    r.identity = "recursion identity D_{s+1} sin((s+1)x) == D_s (sin((3s+2)x)+sin(sx)), s=" +
                 std::to_string(s);
    const TrigPoly lhs = ladder[static_cast<std::size_t>(s)].series *
                         TrigPoly::harmonic_sin(s + 1);
    const TrigPoly rhs = ladder[static_cast<std::size_t>(s - 1)].series *
                         (TrigPoly::harmonic_sin(3 * s + 2) + TrigPoly::harmonic_sin(s));
    if (lhs != rhs) r.fail("series", "equal expansions", "mismatch");
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<VerificationReport> verify_tails_suite(const SuiteLimits& lim) {
  std::vector<VerificationReport> reports;
  if (lim.tails_max < 3) return reports;
  const PartitionTable table = partitions_euler(lim.tails_max);
  const auto ladder = build_kernel_ladder(lim.tails_max);
  for (int s = 3; s <= lim.tails_max; ++s) {
    VerificationReport r;
    r.identity = "tail coefficients equal p_0..p_s, s=" + std::to_string(s);
    const Tail tail = extract_tail(ladder[static_cast<std::size_t>(s - 1)]);
    for (int j = 0; j <= s; ++j) {
      if (tail.coeffs[static_cast<std::size_t>(j)] != table.at(j))
        r.fail("p_" + std::to_string(j), table.at(j).str(),
               tail.coeffs[static_cast<std::size_t>(j)].str());
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<VerificationReport> verify_section4_suite(const SuiteLimits& lim) {
  std::vector<VerificationReport> reports;
  const PartitionTable table = partitions_euler(std::max(lim.third_term_max, lim.section4_max));
  for (int s = 3; s <= lim.section4_max; ++s) {
    reports.push_back(verify_decomposition(s));
    reports.push_back(verify_leading_product(s, table));
  }
  for (int s = 3; s <= std::min(11, lim.section4_max); ++s)
    reports.push_back(table80_check(s, table));
  VerificationReport third;
  third.identity = "third_term_coefficient(kappa) == 1 for kappa=2.." +
                   std::to_string(lim.third_term_max);
  for (int kappa = 2; kappa <= lim.third_term_max; ++kappa) {
    const BigInt value = third_term_coefficient(kappa, table);
    if (value != 1) third.fail("kappa=" + std::to_string(kappa), "1", value.str());
  }
  reports.push_back(std::move(third));
  return reports;
}

std::vector<VerificationReport> verify_quadrature_suite(const SuiteLimits& lim, int threads) {
  std::vector<VerificationReport> reports;
  const PartitionTable table = partitions_euler(std::max(lim.quadrature_max, lim.general_s_max));
  QuadratureSpec spec;
  spec.threads = threads;
  for (int s = 1; s <= lim.quadrature_max; ++s) {
    VerificationReport r;
    r.identity = "integral forms round to p_s, s=" + std::to_string(s);
    const auto reduced = integrate_reduced(s, spec);
    const auto sin_form = integrate_sin_form(s, spec);
    const auto cos_form = integrate_cos_form(s, spec);
    const BigInt expected = table.at(s);
    auto check = [&](const char* name, const QuadratureResult& q) {
      if (BigInt(q.rounded) != expected || q.residual >= 1e-6)
        r.fail(name, expected.str() + " (residual < 1e-6)",
               std::to_string(q.rounded) + " (residual " + format_double(q.residual) + ")");
      r.max_deviation = std::max(r.max_deviation, q.residual);
    };
    check("reduced", reduced);
    check("sin form", sin_form);
    check("cos form", cos_form);
    const double average = 0.5 * (sin_form.raw + cos_form.raw);
    if (std::abs(average - reduced.raw) > 1e-8)
      r.fail("(sin+cos)/2 vs reduced", format_double(reduced.raw), format_double(average));
    if (s <= lim.full_max) {
      QuadratureSpec direct = spec;
      direct.evaluator = Evaluator::kDirect;
      check("full", integrate_full(s, direct));
    }
    reports.push_back(std::move(r));
  }
  for (int s = 1; s <= lim.general_s_max; ++s) {
    VerificationReport r;
    r.identity = "generalized integral m-independence, s=" + std::to_string(s);
    const BigInt expected = table.at(s);
    for (int m = 0; m <= lim.general_m_max; ++m) {
      const auto q = integrate_general(s, m, spec);
      if (BigInt(q.rounded) != expected || q.residual >= 1e-6)
        r.fail("m=" + std::to_string(m), expected.str(),
               std::to_string(q.rounded) + " (residual " + format_double(q.residual) + ")");
      r.max_deviation = std::max(r.max_deviation, q.residual);
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<VerificationReport> verify_moments_suite(const SuiteLimits& lim, int threads) {
  std::vector<VerificationReport> reports;
  QuadratureSpec spec;
  spec.threads = threads;
  for (int s = 1; s <= lim.moments_max; ++s) {
    VerificationReport r;
    r.identity = "vanishing moments (even offsets 2..20), s=" + std::to_string(s);
    for (int offset = 2; offset <= 20; offset += 2) {
      const double value = vanishing_moment(s, offset, spec);
      r.max_deviation = std::max(r.max_deviation, std::abs(value));
      if (std::abs(value) >= 1e-8)
        r.fail("offset=" + std::to_string(offset), "|integral| < 1e-8", format_double(value));
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<VerificationReport> verify_oracles_suite(const SuiteLimits& lim) {
  std::vector<VerificationReport> reports;
  const PartitionTable table = partitions_euler(lim.oracle_max);
  VerificationReport r;
  r.identity = "enumeration oracle equals Euler recurrence, n=0.." +
               std::to_string(lim.oracle_max);
  for (int n = 0; n <= lim.oracle_max; ++n) {
    const BigInt direct = partitions_enumerate(n);
    if (direct != table.at(n)) r.fail("n=" + std::to_string(n), table.at(n).str(), direct.str());
  }
  reports.push_back(std::move(r));
  return reports;
}

std::string render_reports(const GlobalOptions& opts, const std::vector<std::string>& argv,
                           const std::vector<VerificationReport>& reports, bool as_json,
                           bool* all_passed) {
  *all_passed = true;
  for (const auto& r : reports)
    if (!r.passed) *all_passed = false;

  std::ostringstream out;
  if (as_json || opts.format == "json") {
    json j;
    j["manifest"] = make_manifest(argv, {});
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(r.to_json());
    j["all_passed"] = *all_passed;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.identity;
      if (r.max_deviation > 0.0) out << " (max deviation " << format_double(r.max_deviation) << ")";
      out << "\n";
      if (!r.passed)
        for (const auto& w : r.witnesses)
          out << "       " << w.what << ": expected " << w.expected << ", got " << w.actual
              << "\n";
    }
    out << (*all_passed ? "all checks passed" : "CHECKS FAILED") << " (" << reports.size()
        << " reports)\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// bench

std::string render_bench(int max_s, int threads) {
  std::ostringstream out;
  out << "s,build_kernel_ms,reduced_series_trapezoid_ms,reduced_direct_trapezoid_ms,"
         "reduced_series_gauss_ms,reduced_direct_gauss_ms\n";
  for (int s = 1; s <= max_s; ++s) {
    const auto t0 = Clock::now();
    const KernelSeries k = build_kernel(s);
    (void)k;
    const auto t1 = Clock::now();
    const double build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out << s << "," << format_double(build_ms);
    if (s > kQuadratureOrderEnvelope) {
      out << ",skipped,skipped,skipped,skipped\n";
      continue;
    }
    for (const Rule rule : {Rule::kUniformTrapezoid, Rule::kGaussLegendre}) {
      for (const Evaluator ev : {Evaluator::kSeries, Evaluator::kDirect}) {
        QuadratureSpec spec;
        spec.rule = rule;
        spec.evaluator = ev;
        spec.threads = threads;
        const auto q0 = Clock::now();
        (void)integrate_reduced(s, spec);
        const auto q1 = Clock::now();
        out << "," << format_double(std::chrono::duration<double, std::milli>(q1 - q0).count());
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  CLI::App app{"partition function via harmonic integrals and exact kernel expansions",
               "partition-harmonics"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", opts.out_path, "write machine output to a file instead of stdout");
  app.add_option("--threads", opts.threads, "worker threads for node evaluation")
      ->check(CLI::PositiveNumber);

  // partitions table
  auto* partitions_cmd = app.add_subcommand("partitions", "partition number tables");
  partitions_cmd->fallthrough();
  auto* table_cmd = partitions_cmd->add_subcommand("table", "emit p_0..p_max");
  table_cmd->fallthrough();
  int table_max = 10;
  std::string table_oracle = "euler";
  table_cmd->add_option("--max", table_max, "largest n")->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--oracle", table_oracle, "which oracle(s) to run")
      ->check(CLI::IsMember({"euler", "enumerate", "both"}));

  // kernel expand
  auto* kernel_cmd = app.add_subcommand("kernel", "exact kernel Fourier expansions");
  kernel_cmd->fallthrough();
  auto* expand_cmd = kernel_cmd->add_subcommand("expand", "expand D_s(x)");
  expand_cmd->fallthrough();
  int kernel_s = 4;
  expand_cmd->add_option("--s", kernel_s, "kernel order")->required()->check(CLI::PositiveNumber);

  // quadrature
  auto* quad_cmd = app.add_subcommand("quadrature", "numeric integral representations");
  quad_cmd->fallthrough();
  int quad_s = 4, quad_m = 0, quad_nodes = 0;
  std::string quad_form = "reduced", quad_rule = "trapezoid", quad_eval = "series";
  bool quad_json = false;
  quad_cmd->add_option("--s", quad_s, "target s")->required()->check(CLI::PositiveNumber);
  quad_cmd->add_option("--m", quad_m, "order shift for the general form")
      ->check(CLI::NonNegativeNumber);
  quad_cmd->add_option("--form", quad_form, "integral representation")
      ->check(CLI::IsMember({"reduced", "sin", "cos", "full", "general"}));
  quad_cmd->add_option("--rule", quad_rule, "quadrature rule")
      ->check(CLI::IsMember({"trapezoid", "gauss"}));
  quad_cmd->add_option("--nodes", quad_nodes, "node count (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  quad_cmd->add_option("--evaluator", quad_eval, "kernel evaluator")
      ->check(CLI::IsMember({"direct", "series"}));
  quad_cmd->add_flag("--json", quad_json, "emit JSON");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "machine-check the identities");
  verify_cmd->fallthrough();
  int verify_max_s = 1000;
  bool verify_json = false;
  verify_cmd->add_option("--max-s", verify_max_s, "cap per-suite order envelopes")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json, "emit JSON");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "which suite to run")
      ->check(CLI::IsMember({"all", "kernel", "tails", "section4", "quadrature", "moments",
                             "oracles"}));

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "wall-time table (CSV)");
  bench_cmd->fallthrough();
  int bench_max_s = 10;
  bench_cmd->add_option("--max-s", bench_max_s, "largest order")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (const char* env_threads = std::getenv("PH_THREADS")) {
    // PH_THREADS overrides --threads.
    opts.threads = std::max(1, std::atoi(env_threads));
  }

  int exit_code = kExitOk;
  try {
    if (table_cmd->parsed()) {
      write_output(opts, out, render_partitions(opts, argv, table_max, table_oracle));
    } else if (expand_cmd->parsed()) {
      write_output(opts, out, render_kernel(opts, argv, kernel_s));
    } else if (quad_cmd->parsed()) {
      const QuadratureSpec spec = parse_spec(quad_rule, quad_eval, quad_nodes, opts.threads);
      write_output(opts, out,
                   render_quadrature(opts, argv, quad_s, quad_m, quad_form, spec, quad_json));
    } else if (verify_cmd->parsed()) {
      SuiteLimits lim;
      lim.cap(verify_max_s);
      std::vector<VerificationReport> reports;
      auto append = [&reports](std::vector<VerificationReport> more) {
        for (auto& r : more) reports.push_back(std::move(r));
      };
      if (suite == "all" || suite == "kernel") append(verify_kernel_suite(lim));
      if (suite == "all" || suite == "tails") append(verify_tails_suite(lim));
      if (suite == "all" || suite == "section4") append(verify_section4_suite(lim));
      if (suite == "all" || suite == "quadrature")
        append(verify_quadrature_suite(lim, opts.threads));
      if (suite == "all" || suite == "moments") append(verify_moments_suite(lim, opts.threads));
      if (suite == "all" || suite == "oracles") append(verify_oracles_suite(lim));
      bool all_passed = true;
      write_output(opts, out, render_reports(opts, argv, reports, verify_json, &all_passed));
      if (!all_passed) exit_code = kExitVerificationFailure;
    } else if (bench_cmd->parsed()) {
      write_output(opts, out, render_bench(bench_max_s, opts.threads));
    } else if (partitions_cmd->parsed() || kernel_cmd->parsed()) {
      err << "usage error: missing subcommand\n";
      return kExitUsage;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const double wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  err << "# wall_ms=" << format_double(wall_ms) << "\n";
  return exit_code;
}

}  // namespace ph::cli
