#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cli/json_line.hpp"
#include "zero_annulus/bounds.hpp"
#include "zero_annulus/families.hpp"
#include "zero_annulus/genfib.hpp"
#include "zero_annulus/polynomial.hpp"
#include "zero_annulus/rational.hpp"
#include "zero_annulus/roots.hpp"
#include "zero_annulus/tuner.hpp"

namespace zero_annulus::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

/// Thrown for bad values that CLI11 itself cannot validate (exit 3).
class UsageValueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Containment slack used by verify and bench.
constexpr double kContainmentSlack = 1e-8;

// ---------------------------------------------------------------------------
// Shared option parsing

struct BoundOptions {
  std::string file;
  std::string method = "general";
  std::string t = "2";
  std::string outer = "1,1,1";
  std::string inner = "1,1,1";
  std::string form = "statement";
  bool timings = false;
  bool corrupt_r2 = false;
  int max_iter = 2000;
};

struct MethodSpec {
  BoundMethod method = BoundMethod::general;
  double t = 2.0;
  FibParams outer{1.0, 1.0, 1.0};
  FibParams inner{1.0, 1.0, 1.0};
  BoundForm form = BoundForm::statement;
};

MethodSpec resolve_method(const BoundOptions& opts) {
  MethodSpec spec;
  if (opts.method == "cauchy") {
    spec.method = BoundMethod::cauchy_disk;
  } else if (opts.method == "db") {
    spec.method = BoundMethod::diaz_barrero;
  } else if (opts.method == "tfib") {
    spec.method = BoundMethod::t_fib;
    spec.t = parse_rational(opts.t).get_d();
    if (!(spec.t > 0.0)) throw InvalidParameter("t must be positive, got " + opts.t);
  } else if (opts.method == "general") {
    spec.method = BoundMethod::general;
    spec.outer = to_float(parse_fib_params(opts.outer));
    spec.inner = to_float(parse_fib_params(opts.inner));
  } else {
    throw UsageValueError("unknown method '" + opts.method + "' (cauchy, db, tfib, general)");
  }
  if (opts.form == "statement") {
    spec.form = BoundForm::statement;
  } else if (opts.form == "proof") {
    spec.form = BoundForm::proof_intermediate;
  } else {
    throw UsageValueError("unknown form '" + opts.form + "' (statement, proof)");
  }
  return spec;
}

/// Either a Fibonacci-type report or a bare Cauchy result.
struct Computed {
  Annulus annulus;
  std::optional<BoundReport> report;
  std::optional<CauchyResult> cauchy;
};

Computed compute(const Polynomial& poly, const MethodSpec& spec) {
  Computed out;
  switch (spec.method) {
    case BoundMethod::cauchy_disk: {
      out.cauchy = cauchy_radius(poly);
      out.annulus = cauchy_annulus(poly);
      return out;
    }
    case BoundMethod::diaz_barrero:
      out.report = diaz_barrero_annulus(poly);
      break;
    case BoundMethod::t_fib:
      out.report = t_fib_annulus(poly, spec.t);
      break;
    case BoundMethod::general:
      out.report = general_annulus(poly, spec.outer, spec.inner, spec.form);
      break;
  }
  out.annulus = out.report->annulus;
  return out;
}

std::string params_json(const FibParams& p) {
  const double values[] = {p.a, p.b, p.c};
  return json_array(values);
}

std::string polynomial_json(const Polynomial& poly) {
  std::string out = "[";
  bool first = true;
  for (const auto& c : poly.coeffs()) {
    if (!first) out += ',';
    first = false;
    out += "[" + format_number(c.real()) + "," + format_number(c.imag()) + "]";
  }
  return out + "]";
}

void put_bound_fields(JsonLine& line, const Polynomial& poly, const MethodSpec& spec, const Computed& computed) {
  line.raw("polynomial", polynomial_json(poly))
      .field("degree", static_cast<long long>(poly.degree()))
      .field("method", to_string(spec.method));
  if (spec.method == BoundMethod::t_fib) line.field("t", spec.t);
  if (computed.annulus.outer_params) line.raw("outer", params_json(*computed.annulus.outer_params));
  if (computed.annulus.inner_params) line.raw("inner", params_json(*computed.annulus.inner_params));
  if (spec.method == BoundMethod::general)
    line.field("form", spec.form == BoundForm::statement ? "statement" : "proof");
  line.field("r1", computed.annulus.r1).field("r2", computed.annulus.r2);
  if (computed.report) {
    const auto& r = *computed.report;
    line.field("log_r1", r.log_r1)
        .field("log_r2", r.log_r2)
        .field("k_inner", r.k_inner)
        .field("k_outer", r.k_outer)
        .field("prefactor_inner", r.prefactor_inner)
        .field("prefactor_outer", r.prefactor_outer)
        .field("inner_terms", std::span<const double>(r.inner_terms))
        .field("outer_terms", std::span<const double>(r.outer_terms));
  }
  const CauchyResult cauchy = computed.cauchy ? *computed.cauchy : cauchy_radius(poly);
  line.field("cauchy", cauchy.radius).field("cauchy_residual", cauchy.residual);
}

void add_bound_options(CLI::App* cmd, BoundOptions& opts) {
  cmd->add_option("file", opts.file, "Polynomial file (JSON array, ascending coefficients)")->required();
  cmd->add_option("--method", opts.method, "cauchy | db | tfib | general")->capture_default_str();
  cmd->add_option("--t", opts.t, "t for the tfib method (rational strings accepted)")->capture_default_str();
  cmd->add_option("--outer", opts.outer, "Outer triple a,b,c")->capture_default_str();
  cmd->add_option("--inner", opts.inner, "Inner triple u,v,w")->capture_default_str();
  cmd->add_option("--form", opts.form, "statement | proof")->capture_default_str();
  cmd->add_flag("--timings", opts.timings, "Append per-stage wall-clock milliseconds");
}

// ---------------------------------------------------------------------------
// bound / verify

int cmd_bound(const BoundOptions& opts, std::ostream& out) {
  const auto spec = resolve_method(opts);
  const auto poly = read_polynomial_file(opts.file);
  require_nonconstant(poly, "bound");
  const auto start = Clock::now();
  const auto computed = compute(poly, spec);
  const double ms = elapsed_ms(start);

  JsonLine line;
  line.field("command", "bound");
  put_bound_fields(line, poly, spec, computed);
  if (opts.timings) line.raw("timings_ms", JsonLine().field("bound", ms).str());
  out << line.str() << '\n';
  return kOk;
}

std::string violations_json(const ContainmentReport& report) {
  std::string outj = "[";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const auto& v = report.violations[i];
    if (i) outj += ',';
    outj += JsonLine()
                .field("bound", v.bound == BoundViolation::inner ? "inner" : "outer")
                .field("modulus", v.modulus)
                .field("relative_excess", v.relative_excess)
                .str();
  }
  return outj + "]";
}

int cmd_verify(const BoundOptions& opts, std::ostream& out, std::ostream& err) {
  const auto spec = resolve_method(opts);
  const auto poly = read_polynomial_file(opts.file);
  require_nonconstant(poly, "verify");

  auto start = Clock::now();
  auto computed = compute(poly, spec);
  const double bound_ms = elapsed_ms(start);
  // Harness self-test: a deliberately wrong annulus must be caught.
  if (opts.corrupt_r2) computed.annulus.r2 *= 0.5;

  start = Clock::now();
  const auto roots = find_roots(poly, 1e-14, opts.max_iter);
  const double roots_ms = elapsed_ms(start);

  std::vector<double> moduli;
  moduli.reserve(roots.roots.size());
  for (const auto& z : roots.roots) moduli.push_back(std::abs(z));

  JsonLine line;
  line.field("command", "verify");
  put_bound_fields(line, poly, spec, computed);
  if (opts.corrupt_r2) line.field("corrupted", true);
  std::string roots_json = "[";
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    if (i) roots_json += ',';
    roots_json += "[" + format_number(roots.roots[i].real()) + "," + format_number(roots.roots[i].imag()) + "]";
  }
  line.raw("roots", roots_json + "]")
      .field("root_moduli", std::span<const double>(moduli))
      .field("oracle_residuals", std::span<const double>(roots.residuals))
      .field("oracle_converged", roots.converged);

  int code = kOk;
  if (!roots.converged) {
    line.field("containment", false);
    err << "error: root oracle did not converge after " << roots.iterations << " iterations\n";
    code = kOracleFailure;
  } else {
    const auto report = verify_containment(roots, computed.annulus, kContainmentSlack);
    line.field("containment", report.all_inside).raw("violations", violations_json(report));
    if (!report.all_inside) {
      err << "error: " << report.violations.size() << " root(s) outside the annulus\n";
      code = kContainmentViolation;
    }
  }
  if (opts.timings)
    line.raw("timings_ms", JsonLine().field("bound", bound_ms).field("roots", roots_ms).str());
  out << line.str() << '\n';
  return code;
}

// ---------------------------------------------------------------------------
// identity

struct IdentityOptions {
  std::string a, b, c;
  std::string n_max;
};

unsigned parse_count(const std::string& text, std::string_view what) {
  // Plain decimal integer, nothing else.
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw UsageValueError(std::string(what) + " must be a positive integer, got '" + text + "'");
  const unsigned long value = std::stoul(text);
  if (value < 1) throw UsageValueError(std::string(what) + " must be >= 1");
  return static_cast<unsigned>(value);
}

int cmd_identity(const IdentityOptions& opts, std::ostream& out, std::ostream& err) {
  const ExactFibParams params{parse_rational(opts.a), parse_rational(opts.b), parse_rational(opts.c)};
  require_positive(params);
  const unsigned n_max = parse_count(opts.n_max, "n-max");

  bool all_zero = true;
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto sides = lemma_identity_sides(params, n);
    const ExactScalar residual = sides.lhs - sides.rhs;
    all_zero = all_zero && residual == 0;
    out << JsonLine()
               .field("command", "identity")
               .field("n", n)
               .field("lhs", to_string(sides.lhs))
               .field("rhs", to_string(sides.rhs))
               .field("residual", to_string(residual))
               .str()
        << '\n';
  }
  if (!all_zero) {
    err << "error: identity residual is nonzero\n";
    return kContainmentViolation;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeOptions {
  std::string file;
  int budget = 2000;
  std::uint64_t seed = 0;
  bool timings = false;
};

std::string trace_json(const std::vector<TracePoint>& trace) {
  std::string outj = "[";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) outj += ',';
    const double row[] = {trace[i].params.a, trace[i].params.b, trace[i].params.c, trace[i].radius};
    outj += json_array(row);
  }
  return outj + "]";
}

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out) {
  const auto poly = read_polynomial_file(opts.file);
  require_nonconstant(poly, "optimize");
  TuneConfig config;
  config.budget = opts.budget;
  config.seed = opts.seed;

  const auto start = Clock::now();
  const auto tuned = tune_annulus(poly, config);
  const double ms = elapsed_ms(start);

  JsonLine line;
  line.field("command", "optimize")
      .raw("polynomial", polynomial_json(poly))
      .field("degree", static_cast<long long>(poly.degree()))
      .field("budget", opts.budget)
      .field("seed", static_cast<long long>(opts.seed))
      .field("baseline_r1", tuned.inner.baseline_radius)
      .field("baseline_r2", tuned.outer.baseline_radius)
      .field("r1", tuned.annulus.r1)
      .field("r2", tuned.annulus.r2)
      .raw("outer", params_json(tuned.outer.best_params))
      .raw("inner", params_json(tuned.inner.best_params))
      .field("inner_degenerate", tuned.inner.degenerate)
      .field("outer_evaluations", tuned.outer.evaluations)
      .field("inner_evaluations", tuned.inner.evaluations)
      .field("cauchy", cauchy_radius(poly).radius)
      .raw("outer_trace", trace_json(tuned.outer.trace))
      .raw("inner_trace", trace_json(tuned.inner.trace));
  if (opts.timings) line.raw("timings_ms", JsonLine().field("optimize", ms).str());
  out << line.str() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string family;
  long long count = 0;
  std::string degrees;
  std::uint64_t seed = 0;
  int budget = 2000;
  std::string t = "2";
  bool timings = false;
};

std::pair<unsigned, unsigned> parse_degree_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const unsigned d = parse_count(text, "degree");
    return {d, d};
  }
  const unsigned lo = parse_count(text.substr(0, colon), "minimum degree");
  const unsigned hi = parse_count(text.substr(colon + 1), "maximum degree");
  if (lo > hi) throw UsageValueError("degree range '" + text + "' is empty");
  return {lo, hi};
}

std::string csv_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return format_number(value);
}

struct BenchCase {
  Polynomial poly;
  FibParams outer;
  FibParams inner;
};

struct BenchRows {
  std::string text;
  bool all_contained = true;
  bool converged = true;
};

BenchRows bench_one(const BenchOptions& opts, Family family, std::size_t index, const BenchCase& item, double t) {
  BenchRows result;
  const auto roots = find_roots(item.poly);
  result.converged = roots.converged;
  double min_root = INFINITY, max_root = 0.0;
  for (const auto& z : roots.roots) {
    min_root = std::min(min_root, std::abs(z));
    max_root = std::max(max_root, std::abs(z));
  }

  auto emit = [&](std::string_view method, const Annulus& annulus, const FibParams* outer, const FibParams* inner,
                  double ms) {
    std::string row;
    row += std::string(to_string(family)) + ',' + std::to_string(opts.seed) + ',' + std::to_string(index) + ',' +
           std::to_string(item.poly.degree()) + ',' + std::string(method);
    for (const FibParams* p : {outer, inner}) {
      if (p)
        row += ',' + csv_number(p->a) + ',' + csv_number(p->b) + ',' + csv_number(p->c);
      else
        row += ",,,";
    }
    row += ',' + csv_number(annulus.r1) + ',' + csv_number(annulus.r2) + ',' + csv_number(min_root) + ',' +
           csv_number(max_root);
    if (roots.converged) {
      const auto metrics = annulus_width_metrics(annulus, roots);
      const bool inside = verify_containment(roots, annulus, kContainmentSlack).all_inside;
      result.all_contained = result.all_contained && inside;
      row += ',' + csv_number(metrics.inner_ratio) + ',' + csv_number(metrics.outer_ratio) + ',' +
             (inside ? "true" : "false");
    } else {
      row += ",,,";
    }
    row += ',' + csv_number(opts.timings ? ms : 0.0) + '\n';
    result.text += row;
  };

  auto start = Clock::now();
  const auto cauchy = cauchy_annulus(item.poly);
  emit("cauchy", cauchy, nullptr, nullptr, elapsed_ms(start));

  start = Clock::now();
  const auto db = diaz_barrero_annulus(item.poly);
  emit("db", db.annulus, &*db.annulus.outer_params, &*db.annulus.inner_params, elapsed_ms(start));

  start = Clock::now();
  const auto tf = t_fib_annulus(item.poly, t);
  emit("tfib", tf.annulus, &*tf.annulus.outer_params, &*tf.annulus.inner_params, elapsed_ms(start));

  start = Clock::now();
  const auto general = general_annulus(item.poly, item.outer, item.inner);
  emit("general", general.annulus, &item.outer, &item.inner, elapsed_ms(start));

  TuneConfig config;
  config.budget = opts.budget;
  config.seed = opts.seed + index;
  start = Clock::now();
  const auto tuned = tune_annulus(item.poly, config);
  emit("tuned", tuned.annulus, &tuned.outer.best_params, &tuned.inner.best_params, elapsed_ms(start));
  return result;
}

unsigned thread_count(std::size_t jobs) {
  unsigned n = 0;
  if (const char* env = std::getenv("ZERO_ANNULUS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw UsageValueError("ZERO_ANNULUS_THREADS must be an integer >= 0");
    n = static_cast<unsigned>(v);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(opts.family);
  if (!family) throw UsageValueError("unknown family '" + opts.family + "' (uniform, unit-circle-roots, small-a0)");
  if (opts.count < 1) throw UsageValueError("count must be >= 1");
  const auto [dmin, dmax] = parse_degree_range(opts.degrees);
  const double t = parse_rational(opts.t).get_d();
  if (!(t > 0.0)) throw InvalidParameter("t must be positive, got " + opts.t);
  if (opts.budget < static_cast<int>(TuneConfig::default_starts().size()))
    throw UsageValueError("budget must be at least the number of tuner starts");

  // Draw every input up front on one stream; the work itself may run in any order.
  std::mt19937_64 rng(opts.seed);
  std::vector<BenchCase> cases;
  cases.reserve(static_cast<std::size_t>(opts.count));
  for (long long i = 0; i < opts.count; ++i) {
    const unsigned degree = dmin + static_cast<unsigned>(rng() % (dmax - dmin + 1));
    auto poly = random_polynomial(*family, degree, rng);
    const auto outer = random_params(rng);
    const auto inner = random_params(rng);
    cases.push_back({std::move(poly), outer, inner});
  }

  std::vector<BenchRows> rows(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) rows[i] = bench_one(opts, *family, i, cases[i], t);
  };
  const unsigned threads = thread_count(cases.size());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  out << "family,seed,index,degree,method,a,b,c,u,v,w,r1,r2,min_root,max_root,"
         "inner_tightness,outer_tightness,contained,ms\n";
  bool contained = true, converged = true;
  for (const auto& r : rows) {
    out << r.text;
    contained = contained && r.all_contained;
    converged = converged && r.converged;
  }
  if (!converged) {
    err << "error: root oracle did not converge on at least one polynomial\n";
    return kOracleFailure;
  }
  if (!contained) {
    err << "error: containment violation in benchmark output\n";
    return kContainmentViolation;
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-inclusion annuli for complex polynomials", "zero-annulus"};
  app.require_subcommand(1);

  BoundOptions bound_opts;
  auto* bound = app.add_subcommand("bound", "Compute an annulus for one polynomial");
  add_bound_options(bound, bound_opts);

  BoundOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Compute an annulus and check it against the root oracle");
  add_bound_options(verify, verify_opts);
  verify->add_flag("--corrupt-r2", verify_opts.corrupt_r2, "Test mode: halve r2 before checking")->group("");
  verify->add_option("--max-iter", verify_opts.max_iter, "Root oracle sweep limit")->capture_default_str();

  IdentityOptions identity_opts;
  auto* identity = app.add_subcommand("identity", "Check the generalized Fibonacci binomial identity exactly");
  identity->add_option("a", identity_opts.a)->required();
  identity->add_option("b", identity_opts.b)->required();
  identity->add_option("c", identity_opts.c)->required();
  identity->add_option("n-max", identity_opts.n_max)->required();

  OptimizeOptions optimize_opts;
  auto* optimize = app.add_subcommand("optimize", "Tune both parameter triples for one polynomial");
  optimize->add_option("file", optimize_opts.file)->required();
  optimize->add_option("--budget", optimize_opts.budget, "Objective evaluations per side")->capture_default_str();
  optimize->add_option("--seed", optimize_opts.seed)->capture_default_str();
  optimize->add_flag("--timings", optimize_opts.timings);

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "CSV tightness benchmark over a random polynomial family");
  bench->add_option("family", bench_opts.family, "uniform | unit-circle-roots | small-a0 | clustered")->required();
  bench->add_option("count", bench_opts.count)->required();
  bench->add_option("degrees", bench_opts.degrees, "DMIN:DMAX")->required();
  bench->add_option("--seed", bench_opts.seed)->capture_default_str();
  bench->add_option("--budget", bench_opts.budget, "Tuner evaluations per side")->capture_default_str();
  bench->add_option("--t", bench_opts.t)->capture_default_str();
  bench->add_flag("--timings", bench_opts.timings, "Fill the ms column (otherwise 0)");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*bound) return cmd_bound(bound_opts, out);
    if (*verify) return cmd_verify(verify_opts, out, err);
    if (*identity) return cmd_identity(identity_opts, out, err);
    if (*optimize) return cmd_optimize(optimize_opts, out);
    if (*bench) return cmd_bench(bench_opts, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidPolynomial& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    // InvalidParameter, RationalParseError, UsageValueError, tuner config.
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  }
  return kInputError;
}

}  // namespace zero_annulus::cli
