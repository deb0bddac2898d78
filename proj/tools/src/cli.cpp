#include "hypermoment_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hypermoment/axioms.hpp"
#include "hypermoment/equations.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/serialization.hpp"
#include "hypermoment/synthesis.hpp"

namespace hypermoment::cli {

namespace {

struct Config {
  std::string spec;
  std::size_t box = 8;
  std::string mode = "exact";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string out;
};

struct CommandArgs {
  std::string x, y;
  std::string measure, poly;
  bool inverse = false;
  std::string kind;
  std::string lambda, mu, a, cap, alpha;
  std::string function, candidates;
  std::size_t n = 0;
  std::size_t n_max = 8;
  std::size_t trials = 16;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

MultiIndex parse_index(const std::string& text, const char* what) {
  MultiIndex x(0);
  std::vector<MultiIndex::value_type> entries;
  for (const auto& part : split(text)) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        })) {
      throw UsageError(std::string(what) + " must be comma-separated nonnegative integers");
    }
    entries.push_back(static_cast<MultiIndex::value_type>(std::stoul(part)));
  }
  if (entries.empty()) throw UsageError(std::string(what) + " is empty");
  return MultiIndex(std::move(entries));
}

Point parse_point(const std::string& text, const char* what) {
  Point p;
  for (const auto& part : split(text)) p.push_back(parse_scalar(part));
  if (p.empty()) throw UsageError(std::string(what) + " is empty");
  return p;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void require_dim(std::size_t got, const Hypergroup& h, const char* what) {
  if (got != h.dimension()) {
    throw UsageError(std::string(what) + " has " + std::to_string(got) +
                     " entries but the hypergroup has dimension " + std::to_string(h.dimension()));
  }
}

Mode parse_mode(const std::string& mode) { return mode == "float" ? Mode::floating : Mode::exact; }

void require_exact(const Config& cfg, const std::string& command) {
  if (cfg.mode != "exact") throw UsageError(command + " runs in exact mode only");
}

SweepOptions sweep_options(const Config& cfg, const CommandArgs& args) {
  SweepOptions o;
  o.box = cfg.box;
  o.mode = parse_mode(cfg.mode);
  o.tolerance = cfg.tol;
  o.jobs = cfg.jobs;
  o.seed = cfg.seed;
  o.trials = args.trials;
  return o;
}

struct Outcome {
  Json report;
  int code = ok;
  std::string summary;
};

Outcome cmd_verify(const Config& cfg, const Hypergroup& h) {
  require_exact(cfg, "verify");
  AxiomOptions options;
  options.seed = cfg.seed;
  options.jobs = cfg.jobs;
  const auto r = verify_axioms(h, cfg.box, options);
  Outcome o;
  o.report = Json{{"command", "verify"}, {"spec", hypergroup_to_json(h)}, {"passed", r.passed()},
                  {"axioms", axiom_report_to_json(r)}};
  o.code = r.passed() ? ok : check_failed;
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
  o.summary = "verify: " + std::string(r.passed() ? "PASS" : "FAIL") + " (" +
              std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) +
              " checks, box " + std::to_string(cfg.box) + ")";
  return o;
}

Outcome cmd_conv(const Config& cfg, const CommandArgs& args, const Hypergroup& h) {
  require_exact(cfg, "conv");
  const MultiIndex x = parse_index(args.x, "--x");
  const MultiIndex y = parse_index(args.y, "--y");
  require_dim(x.size(), h, "--x");
  require_dim(y.size(), h, "--y");
  const Measure mu = h.linearization(x, y);
  Outcome o;
  o.report = Json{{"command", "conv"}, {"x", index_to_json(x)}, {"y", index_to_json(y)},
                  {"measure", measure_to_json(mu)}};
  o.summary = "conv: " + to_string(mu);
  return o;
}

Outcome cmd_fourier(const Config& cfg, const CommandArgs& args, const Hypergroup& h) {
  require_exact(cfg, "fourier");
  if (args.measure.empty() == args.poly.empty()) {
    throw UsageError("fourier needs exactly one of --measure or --poly");
  }
  Outcome o;
  if (!args.measure.empty()) {
    if (args.inverse) throw UsageError("--inverse applies to --poly input");
    const Measure mu = measure_from_json(read_json(args.measure), h);
    const MultiPoly p = fourier(mu);
    o.report = Json{{"command", "fourier"}, {"inverse", false}, {"poly", poly_to_json(p)}};
    o.summary = "fourier: " + to_string(p);
  } else {
    const MultiPoly p = poly_from_json(read_json(args.poly));
    require_dim(p.dimension(), h, "the polynomial");
    const Measure mu = inverse_fourier(p, h);
    o.report = Json{{"command", "fourier"}, {"inverse", true}, {"measure", measure_to_json(mu)}};
    o.summary = "inverse fourier: " + to_string(mu);
  }
  return o;
}

HFunction seed_function(const CommandArgs& args, const Hypergroup& h, const Point& lambda) {
  if (!args.function.empty()) {
    if (!args.alpha.empty()) throw UsageError("give either --function or --alpha, not both");
    return hfunction_from_json(read_json(args.function), h);
  }
  if (args.alpha.empty()) throw UsageError("a function is needed: --function FILE or --alpha");
  const MultiIndex alpha = parse_index(args.alpha, "--alpha");
  require_dim(alpha.size(), h, "--alpha");
  return HFunction::atom(h, alpha, lambda);
}

Point exponent_point(const CommandArgs& args, const Hypergroup& h, const Point& lambda) {
  if (args.mu.empty()) return lambda;
  Point mu = parse_point(args.mu, "--mu");
  require_dim(mu.size(), h, "--mu");
  return mu;
}

Outcome cmd_check_eq(const Config& cfg, const CommandArgs& args, const Hypergroup& h) {
  if (args.lambda.empty()) throw UsageError("check-eq needs --lambda");
  const Point lambda = parse_point(args.lambda, "--lambda");
  require_dim(lambda.size(), h, "--lambda");
  const auto options = sweep_options(cfg, args);
  EquationReport r;
  if (args.kind == "exponential") {
    r = check_exponential(exponential(h, lambda), options);
  } else if (args.kind == "sine") {
    if (args.a.empty()) throw UsageError("sine needs --a");
    const Point a = parse_point(args.a, "--a");
    require_dim(a.size(), h, "--a");
    r = check_sine(sine(h, a, lambda), exponential(h, exponent_point(args, h, lambda)), options);
  } else if (args.kind == "moment") {
    if (args.cap.empty()) throw UsageError("moment needs --cap");
    const MultiIndex cap = parse_index(args.cap, "--cap");
    require_dim(cap.size(), h, "--cap");
    r = check_moment(moment_family(h, lambda, cap), options);
  } else if (args.kind == "degree") {
    r = check_degree(seed_function(args, h, lambda), exponential(h, exponent_point(args, h, lambda)),
                     args.n, options);
  } else {
    throw UsageError("--kind must be exponential, sine, moment or degree");
  }
  Outcome o;
  o.report = Json{{"command", "check-eq"}, {"report", equation_report_to_json(r)}};
  o.code = r.passed ? ok : check_failed;
  o.summary = "check-eq " + args.kind + ": " + (r.passed ? "PASS" : "FAIL") + " (" +
              std::to_string(r.checked) + " instances)";
  return o;
}

Outcome cmd_degree(const Config& cfg, const CommandArgs& args, const Hypergroup& h) {
  require_exact(cfg, "degree");
  if (args.lambda.empty()) throw UsageError("degree needs --lambda");
  const Point lambda = parse_point(args.lambda, "--lambda");
  require_dim(lambda.size(), h, "--lambda");
  const HFunction f = seed_function(args, h, lambda);
  const HFunction m = exponential(h, exponent_point(args, h, lambda));
  const auto r = monomial_degree(f, m, cfg.box, args.n_max, args.trials, cfg.seed);
  Outcome o;
  o.report = Json{{"command", "degree"}, {"result", degree_to_json(r)}};
  o.code = r.degree ? ok : check_failed;
  o.summary = r.degree ? "degree: " + std::to_string(*r.degree)
                       : "degree: no certificate up to " + std::to_string(args.n_max);
  return o;
}

Outcome cmd_synth(const Config& cfg, const CommandArgs& args, const Hypergroup& h,
                  bool box_given) {
  require_exact(cfg, "synth");
  if (args.lambda.empty()) throw UsageError("synth needs --lambda");
  if (args.function.empty()) throw UsageError("synth needs --function");
  const Point lambda = parse_point(args.lambda, "--lambda");
  require_dim(lambda.size(), h, "--lambda");
  const HFunction f = hfunction_from_json(read_json(args.function), h);
  const HFunction m = exponential(h, lambda);

  VarietyOptions vo;
  if (box_given) vo.box = cfg.box;
  const Decomposition d = moment_span_decompose(f, lambda, vo);

  std::optional<std::size_t> sine_dim;
  if (contains(d.variety, m).member) sine_dim = sine_dimension(d.variety, m);
  const auto degree =
      monomial_degree(f, m, cfg.box, f.max_order() + 1, args.trials, cfg.seed).degree;

  Outcome o;
  o.report = decomposition_to_json(d, sine_dim, degree);
  if (!args.candidates.empty()) {
    const Json list = read_json(args.candidates);
    if (!list.is_array()) throw UsageError("--candidates must hold an array of points");
    std::vector<Point> candidates;
    for (const auto& p : list) {
      candidates.push_back(point_from_json(p));
      require_dim(candidates.back().size(), h, "a candidate point");
    }
    Json found = Json::array();
    for (const auto& p : exponentials_in_variety(d.variety, candidates)) {
      found.push_back(point_to_json(p));
    }
    o.report["exponentials"] = std::move(found);
  }
  o.report = Json{{"command", "synth"}, {"decomposition", std::move(o.report)}};
  const bool exact = sgn(d.residual) == 0;
  o.code = exact ? ok : check_failed;
  o.summary = "synth: " + std::string(exact ? "exact" : "NONZERO RESIDUAL") + ", variety dim " +
              std::to_string(d.variety.dim) + (d.unique ? "" : ", not unique");
  return o;
}

void emit(const Config& cfg, const Outcome& outcome, std::ostream& out) {
  const std::string text = outcome.report.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << text;
  out << outcome.summary << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on discrete polynomial hypergroups", "hypermoment"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  CommandArgs cmd;
  app.add_option("--spec", cfg.spec, "Hypergroup spec (JSON file)");
  auto* box_opt = app.add_option("--box", cfg.box, "Sweep box {0..N}^d")
                      ->check(CLI::PositiveNumber);
  app.add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", cfg.tol, "Relative tolerance in float mode")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized trials");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Write the JSON report here");

  auto* verify = app.add_subcommand("verify", "Check the hypergroup axioms on the box");

  auto* conv = app.add_subcommand("conv", "Print δ_x * δ_y");
  conv->add_option("--x", cmd.x, "Element, e.g. 1,2")->required();
  conv->add_option("--y", cmd.y, "Element, e.g. 0,3")->required();

  auto* four = app.add_subcommand("fourier", "Fourier transform of a measure, or its inverse");
  four->add_option("--measure", cmd.measure, "Measure (JSON file)");
  four->add_option("--poly", cmd.poly, "Polynomial (JSON file)");
  four->add_flag("--inverse", cmd.inverse, "Expand --poly in the basis Q_x");

  auto* check = app.add_subcommand("check-eq", "Sweep a functional equation over the box");
  check->add_option("--kind", cmd.kind, "exponential, sine, moment or degree")->required();
  check->add_option("--lambda", cmd.lambda, "Point λ, e.g. 1/2,3/4");
  check->add_option("--mu", cmd.mu, "Point of the exponential m (defaults to λ)");
  check->add_option("--a", cmd.a, "Sine direction");
  check->add_option("--cap", cmd.cap, "Moment family order cap");
  check->add_option("--alpha", cmd.alpha, "Degree check on the moment member of this order");
  check->add_option("--function", cmd.function, "Degree check on this function (JSON file)");
  check->add_option("--n", cmd.n, "Degree bound to check");
  check->add_option("--trials", cmd.trials, "Random y-tuples for the degree check");

  auto* degree = app.add_subcommand("degree", "Smallest n with vanishing (n+1)-fold differences");
  degree->add_option("--lambda", cmd.lambda, "Point λ")->required();
  degree->add_option("--mu", cmd.mu, "Point of the exponential m (defaults to λ)");
  degree->add_option("--alpha", cmd.alpha, "Use the moment member of this order");
  degree->add_option("--function", cmd.function, "Function (JSON file)");
  degree->add_option("--n-max", cmd.n_max, "Largest degree tried");
  degree->add_option("--trials", cmd.trials, "Random tuples per degree")->check(CLI::PositiveNumber);

  auto* synth = app.add_subcommand("synth", "Decompose over moment functions in the variety");
  synth->add_option("--function", cmd.function, "Seed function (JSON file)")->required();
  synth->add_option("--lambda", cmd.lambda, "Common point of the seed's terms")->required();
  synth->add_option("--candidates", cmd.candidates, "Points to test for exponentials in τ(f)");
  synth->add_option("--trials", cmd.trials, "Random tuples for the degree")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  try {
    if (cfg.spec.empty()) throw UsageError("--spec is required");
    const Hypergroup h = hypergroup_from_json(read_json(cfg.spec), cfg.box);
    Outcome outcome;
    if (verify->parsed()) {
      outcome = cmd_verify(cfg, h);
    } else if (conv->parsed()) {
      outcome = cmd_conv(cfg, cmd, h);
    } else if (four->parsed()) {
      outcome = cmd_fourier(cfg, cmd, h);
    } else if (check->parsed()) {
      outcome = cmd_check_eq(cfg, cmd, h);
    } else if (degree->parsed()) {
      outcome = cmd_degree(cfg, cmd, h);
    } else {
      outcome = cmd_synth(cfg, cmd, h, box_opt->count() > 0);
    }
    emit(cfg, outcome, out);
    return outcome.code;
  } catch (const RejectionError& e) {
    Outcome outcome;
    const std::string name = app.get_subcommands().front()->get_name();
    outcome.report = Json{{"command", name}, {"passed", false}, {"rejection", rejection_to_json(e)}};
    outcome.code = check_failed;
    outcome.summary = name + ": REJECTED, " + e.what();
    err << e.what() << "\n";
    try {
      emit(cfg, outcome, out);
    } catch (const UsageError& write_error) {
      err << write_error.what() << "\n";
      return usage;
    }
    return outcome.code;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return inconclusive;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace hypermoment::cli
