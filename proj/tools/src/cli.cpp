#include "bohr_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohr/problem.hpp"
#include "bohr/verify.hpp"

namespace bohr::cli {
namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemFlags {
  std::string cls;
  double alpha = 0.0;
  CLI::Option* alpha_option = nullptr;
  std::string poly;
  std::string variant = "majorant";
  double tol = solver::kDefaultTol;
  std::string format = "json";
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& f, bool with_alpha) {
  cmd->add_option("--class", f.cls, "mapping class")
      ->required()
      ->check(CLI::IsMember({"w0h", "stable-convex", "stable-univalent"}));
  if (with_alpha) {
    f.alpha_option =
        cmd->add_option("--alpha", f.alpha, "W0H parameter in (0, 1]");
  }
  cmd->add_option("--poly", f.poly,
                  "coefficients lambda_1,...,lambda_k; empty for P = 0");
  cmd->add_option("--variant", f.variant, "majorant | power:<m> | ratio")
      ->capture_default_str();
  cmd->add_option("--tol", f.tol, "bisection tolerance")->capture_default_str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

BohrPolynomial parse_poly(const std::string& text) {
  if (trim(text).empty()) {
    return {};
  }
  std::vector<double> lambdas;
  std::string_view rest = text;
  for (;;) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto value = parse_double(item);
    if (!value || !std::isfinite(*value)) {
      throw UsageError("--poly: '" + std::string(trim(item)) +
                       "' is not a number");
    }
    if (*value < 0.0) {
      throw UsageError("--poly: coefficients must be non-negative");
    }
    lambdas.push_back(*value);
    if (comma == std::string_view::npos) {
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  if (lambdas.back() == 0.0) {
    throw UsageError(
        "--poly: trailing zero coefficient; the last lambda must be positive");
  }
  return BohrPolynomial(std::move(lambdas));
}

ProblemVariant parse_variant(const std::string& text) {
  if (text == "majorant") {
    return MajorantOnly{};
  }
  if (text == "ratio") {
    return RatioArea{};
  }
  constexpr std::string_view kPrefix = "power:";
  if (text.starts_with(kPrefix)) {
    const std::string_view digits = std::string_view(text).substr(kPrefix.size());
    int m = -1;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && m >= 0) {
      return WithPowerTerm(m);
    }
    throw UsageError("--variant: power exponent in '" + text +
                     "' must be a non-negative integer");
  }
  throw UsageError("--variant: expected majorant, power:<m> or ratio, got '" +
                   text + "'");
}

ClassSpec make_class(const std::string& name, std::optional<double> alpha) {
  if (name == "w0h") {
    if (!alpha) {
      throw UsageError("--alpha is required for --class w0h");
    }
    if (!(*alpha > 0.0 && *alpha <= 1.0)) {
      throw UsageError("--alpha must lie in (0, 1], got " +
                       format_number(*alpha));
    }
    return W0H{Alpha(*alpha)};
  }
  if (alpha) {
    throw UsageError("--alpha applies to --class w0h only");
  }
  if (name == "stable-convex") {
    return StableConvex{};
  }
  return StableUnivalent{};
}

void check_tol(double tol) {
  if (!(tol >= solver::kMinTol) || !std::isfinite(tol)) {
    throw UsageError("--tol must be a finite value >= 1e-15");
  }
}

RadiusProblem make_problem(const std::string& cls, std::optional<double> alpha,
                           const std::string& poly, const std::string& variant) {
  RadiusProblem problem{make_class(cls, alpha), parse_poly(poly),
                        parse_variant(variant)};
  try {
    validate(problem);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--variant: ") + e.what());
  }
  return problem;
}

RadiusProblem make_problem(const ProblemFlags& f) {
  std::optional<double> alpha;
  if (f.alpha_option != nullptr && f.alpha_option->count() > 0) {
    alpha = f.alpha;
  }
  check_tol(f.tol);
  return make_problem(f.cls, alpha, f.poly, f.variant);
}

// ---- rendering ---------------------------------------------------------

// The double nearest to the 12-digit rendering, so JSON's shortest
// round-trip output prints those same digits.
ordered_json number(double x) {
  if (!std::isfinite(x)) {
    return nullptr;
  }
  return *parse_double(format_number(x));
}

std::optional<double> alpha_of(const ClassSpec& cls) {
  if (const auto* w = std::get_if<W0H>(&cls)) {
    return w->alpha.value();
  }
  return std::nullopt;
}

std::string poly_text(const BohrPolynomial& p) {
  std::string s;
  for (double c : p.coefficients()) {
    if (!s.empty()) {
      s += ',';
    }
    s += format_number(c);
  }
  return s;
}

ordered_json poly_json(const BohrPolynomial& p) {
  ordered_json arr = ordered_json::array();
  for (double c : p.coefficients()) {
    arr.push_back(number(c));
  }
  return arr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + '"';
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string alpha_text(const ClassSpec& cls) {
  const auto a = alpha_of(cls);
  return a ? format_number(*a) : std::string();
}

ordered_json problem_json(const RadiusProblem& p) {
  ordered_json j;
  j["class"] = to_string(p.cls);
  const auto a = alpha_of(p.cls);
  j["alpha"] = a ? number(*a) : ordered_json(nullptr);
  j["poly"] = poly_json(p.poly);
  j["variant"] = to_string(p.variant);
  return j;
}

std::string problem_csv(const RadiusProblem& p) {
  return csv_field(to_string(p.cls)) + ',' + alpha_text(p.cls) + ',' +
         csv_field(poly_text(p.poly)) + ',' + csv_field(to_string(p.variant));
}

// Runs body(i) for i in [0, n) on a small pool of threads.
template <class Body>
void parallel_for(int n, Body body) {
  const int workers = std::max(
      1, std::min(n, static_cast<int>(std::clamp(
                         std::thread::hardware_concurrency(), 1u, 8u))));
  std::atomic<int> next{0};
  std::vector<std::future<void>> tasks;
  for (int w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&] {
      for (int i = next++; i < n; i = next++) {
        body(i);
      }
    }));
  }
  for (auto& t : tasks) {
    t.get();
  }
}

// ---- subcommands -------------------------------------------------------

int cmd_radius(const ProblemFlags& f, std::ostream& out, std::ostream& err) {
  const RadiusProblem problem = make_problem(f);
  RadiusResult result;
  try {
    result = solve_radius(problem, f.tol);
  } catch (const NoRootError& e) {
    err << "no root: " << e.what() << '\n';
    return kExitNoRoot;
  }

  if (f.format == "csv") {
    out << "class,alpha,poly,variant,radius,residual,iterations,converged\n"
        << problem_csv(problem) << ',' << format_number(result.radius) << ','
        << format_number(result.residual) << ',' << result.iterations << ','
        << bool_text(result.converged) << '\n';
  } else {
    ordered_json j = problem_json(problem);
    j["radius"] = number(result.radius);
    j["residual"] = number(result.residual);
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    out << j.dump(2) << '\n';
  }
  if (!result.converged) {
    err << "bisection did not reach --tol within " << solver::kMaxIterations
        << " iterations\n";
    return kExitFailure;
  }
  return kExitOk;
}

struct SweepFlags {
  ProblemFlags problem;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  int steps = 0;
  std::string out_path;
};

struct SweepRow {
  double alpha = 0.0;
  RadiusResult result;
  std::int64_t terms_used = 0;
  std::string no_root;
};

int cmd_sweep(const SweepFlags& f, std::ostream& out, std::ostream& err) {
  if (f.problem.cls != "w0h") {
    throw UsageError("--class: sweeps run over alpha and need --class w0h");
  }
  if (!(f.alpha_min > 0.0 && f.alpha_min <= f.alpha_max && f.alpha_max <= 1.0)) {
    throw UsageError(
        "--alpha-min/--alpha-max: need 0 < alpha-min <= alpha-max <= 1");
  }
  if (f.steps < 1) {
    throw UsageError("--steps must be >= 1");
  }
  check_tol(f.problem.tol);
  // Validates the remaining flags once, before any work.
  const RadiusProblem first = make_problem(f.problem.cls, f.alpha_min,
                                           f.problem.poly, f.problem.variant);

  std::vector<SweepRow> rows(static_cast<std::size_t>(f.steps));
  for (int i = 0; i < f.steps; ++i) {
    rows[static_cast<std::size_t>(i)].alpha =
        (i == f.steps - 1 && f.steps > 1)
            ? f.alpha_max
            : f.alpha_min + (f.alpha_max - f.alpha_min) * i /
                                std::max(1, f.steps - 1);
  }
  parallel_for(f.steps, [&](int i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    RadiusProblem problem = first;
    problem.cls = W0H{Alpha(row.alpha)};
    const RadiusEquation equation(problem);
    try {
      row.result = solve_radius(equation, f.problem.tol);
      row.terms_used = equation.terms_used(row.result.radius);
    } catch (const NoRootError& e) {
      row.no_root = e.what();
    }
  });

  for (const SweepRow& row : rows) {
    if (!row.no_root.empty()) {
      err << "no root at alpha = " << format_number(row.alpha) << ": "
          << row.no_root << '\n';
      return kExitNoRoot;
    }
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!f.out_path.empty()) {
    file.open(f.out_path, std::ios::binary);
    if (!file) {
      throw UsageError("--out: cannot open '" + f.out_path + "' for writing");
    }
    sink = &file;
  }

  if (f.problem.format == "csv") {
    *sink << "alpha,radius,residual,terms_used,converged\n";
    for (const SweepRow& row : rows) {
      *sink << format_number(row.alpha) << ',' << format_number(row.result.radius)
            << ',' << format_number(row.result.residual) << ','
            << row.terms_used << ',' << bool_text(row.result.converged) << '\n';
    }
  } else {
    ordered_json j;
    j["class"] = "w0h";
    j["poly"] = poly_json(first.poly);
    j["variant"] = to_string(first.variant);
    j["rows"] = ordered_json::array();
    for (const SweepRow& row : rows) {
      ordered_json r;
      r["alpha"] = number(row.alpha);
      r["radius"] = number(row.result.radius);
      r["residual"] = number(row.result.residual);
      r["terms_used"] = row.terms_used;
      r["converged"] = row.result.converged;
      j["rows"].push_back(std::move(r));
    }
    *sink << j.dump(2) << '\n';
  }
  sink->flush();
  if (!*sink) {
    err << "error: failed writing sweep output\n";
    return kExitFailure;
  }

  const bool all_converged =
      std::all_of(rows.begin(), rows.end(),
                  [](const SweepRow& row) { return row.result.converged; });
  return all_converged ? kExitOk : kExitFailure;
}

int cmd_verify(const ProblemFlags& f, int grid, std::ostream& out,
               std::ostream& err) {
  if (grid < 10) {
    throw UsageError("--grid must be >= 10");
  }
  const RadiusProblem problem = make_problem(f);
  const VerificationReport report =
      verify::verify_bohr_inequality(problem.cls, problem.poly, problem.variant, grid);

  if (f.format == "csv") {
    out << "class,alpha,poly,variant,verdict,radius,r,lhs,rhs,holds\n";
    const std::string prefix =
        problem_csv(problem) + ',' + to_string(report.verdict) + ',' +
        (report.radius ? format_number(report.radius->radius) : std::string());
    for (const GridPoint& p : report.grid) {
      out << prefix << ',' << format_number(p.r) << ',' << format_number(p.lhs)
          << ',' << format_number(p.rhs) << ',' << bool_text(p.holds) << '\n';
    }
  } else {
    ordered_json j = problem_json(problem);
    j["verdict"] = to_string(report.verdict);
    if (report.radius) {
      j["radius"] = number(report.radius->radius);
      j["residual"] = number(report.radius->residual);
      j["iterations"] = report.radius->iterations;
      j["converged"] = report.radius->converged;
    } else {
      j["radius"] = nullptr;
    }
    j["max_crosscheck_dev"] = number(report.max_crosscheck_dev);
    j["note"] = report.note;
    j["grid"] = ordered_json::array();
    for (const GridPoint& p : report.grid) {
      j["grid"].push_back({{"r", number(p.r)},
                           {"lhs", number(p.lhs)},
                           {"rhs", number(p.rhs)},
                           {"holds", p.holds}});
    }
    out << j.dump(2) << '\n';
  }

  switch (report.verdict) {
    case Verdict::kConsistent:
      return kExitOk;
    case Verdict::kDomainLimited:
      err << "no root: " << report.note << '\n';
      return kExitNoRoot;
    case Verdict::kViolation:
      err << "verification failed: " << report.note << '\n';
      return kExitFailure;
  }
  return kExitFailure;
}

int cmd_reproduce(const std::string& format, std::ostream& out,
                  std::ostream& err) {
  const std::vector<ComparisonRow> rows = verify::reproduce_published_values();
  const bool ok = verify::all_as_expected(rows);

  if (format == "csv") {
    out << "claim_id,paper_value,computed_value,abs_dev,status,note\n";
    for (const ComparisonRow& r : rows) {
      out << csv_field(r.claim_id) << ',' << format_number(r.paper_value) << ','
          << format_number(r.computed_value) << ',' << format_number(r.abs_dev)
          << ',' << to_string(r.status) << ',' << csv_field(r.note) << '\n';
    }
  } else if (format == "json") {
    ordered_json j;
    j["all_as_expected"] = ok;
    j["rows"] = ordered_json::array();
    for (const ComparisonRow& r : rows) {
      ordered_json row;
      row["claim_id"] = r.claim_id;
      row["paper_value"] = number(r.paper_value);
      row["computed_value"] = number(r.computed_value);
      row["abs_dev"] = number(r.abs_dev);
      row["tolerance"] = number(r.tolerance);
      row["status"] = to_string(r.status);
      row["expected"] = to_string(r.expected);
      row["note"] = r.note;
      j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
  } else {
    out << "| claim_id | paper_value | computed_value | abs_dev | tolerance | "
           "status | expected | note |\n"
        << "|---|---|---|---|---|---|---|---|\n";
    for (const ComparisonRow& r : rows) {
      out << "| " << r.claim_id << " | " << format_number(r.paper_value)
          << " | " << format_number(r.computed_value) << " | "
          << format_number(r.abs_dev) << " | " << format_number(r.tolerance)
          << " | " << to_string(r.status) << " | " << to_string(r.expected)
          << " | " << r.note << " |\n";
    }
  }
  if (!ok) {
    err << "reproduction failed: some rows differ from their expected status\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  if (ec != std::errc()) {
    return "nan";
  }
  return std::string(buf, ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bohr radii for harmonic mapping classes", "bohr"};
  app.require_subcommand(1);

  ProblemFlags radius_flags;
  CLI::App* radius = app.add_subcommand("radius", "solve one radius equation");
  add_problem_flags(radius, radius_flags, true);
  radius->add_option("--format", radius_flags.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "radius over an alpha grid");
  add_problem_flags(sweep, sweep_flags.problem, false);
  sweep->add_option("--alpha-min", sweep_flags.alpha_min)->required();
  sweep->add_option("--alpha-max", sweep_flags.alpha_max)->required();
  sweep->add_option("--steps", sweep_flags.steps, "number of alpha values")
      ->required();
  sweep->add_option("--out", sweep_flags.out_path, "output file");
  sweep->add_option("--format", sweep_flags.problem.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  ProblemFlags verify_flags;
  int grid = 100;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check the inequality around the radius");
  add_problem_flags(verify_cmd, verify_flags, true);
  verify_cmd->add_option("--grid", grid, "grid points")->capture_default_str();
  verify_cmd->add_option("--format", verify_flags.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string reproduce_format = "markdown";
  CLI::App* reproduce =
      app.add_subcommand("reproduce", "recompute the published constants");
  reproduce->add_option("--format", reproduce_format)
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*radius) {
      return cmd_radius(radius_flags, out, err);
    }
    if (*sweep) {
      return cmd_sweep(sweep_flags, out, err);
    }
    if (*verify_cmd) {
      return cmd_verify(verify_flags, grid, out, err);
    }
    return cmd_reproduce(reproduce_format, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace bohr::cli
