#include "lorentz_bridge/cli.hpp"

#include "lorentz_bridge/harness.hpp"
#include "lorentz_bridge/kinematics.hpp"
#include "lorentz_bridge/minkowski.hpp"
#include "lorentz_bridge/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorentz_bridge {

namespace {

/// Bad flag value; exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Physically invalid input; exit 3.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { plain, csv, json };

const std::map<std::string, Format> format_names{
    {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag + ": cannot parse '" + text + "' as a number");
  }
}

std::vector<double> parse_list(const std::string& text, std::size_t expected,
                               const std::string& flag) {
  const auto parts = split(text, ',');
  if (parts.size() != expected) {
    throw UsageError(flag + ": expected " + std::to_string(expected) +
                     " comma-separated numbers, got '" + text + "'");
  }
  std::vector<double> values;
  for (const auto& p : parts) values.push_back(parse_double(p, flag));
  return values;
}

Interval parse_interval(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError(flag + ": expected lo:hi, got '" + text + "'");
  return {parse_double(parts[0], flag), parse_double(parts[1], flag)};
}

/// Appends `--key value` for every key=value line of the config file whose
/// flag is not already on the command line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config: missing file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw UsageError("--config: cannot read '" + *path + "'");
  auto given = [&](const std::string& flag) {
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> extra;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--config: line " + std::to_string(lineno) + " is not key=value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) != 0) key = "--" + key;
    if (!given(key)) {
      extra.push_back(key);
      extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

struct Output {
  std::ostream& out;
  Format format;
  int precision;

  std::string num(double v) const { return format_number(v, precision); }
};

void check_beta(double beta, const std::string& flag) {
  if (!(std::abs(beta) < 1.0)) {
    throw DomainError(flag + ": |beta| must be strictly less than 1, got " +
                      format_number(beta, 17));
  }
}

// ---------------------------------------------------------------- boost

struct BoostArgs {
  std::string vector;
  double beta = 0.0;
  std::string axis = "x";
};

void cmd_boost(const BoostArgs& a, const Output& o) {
  const auto v = parse_list(a.vector, 4, "--vector");
  check_beta(a.beta, "--beta");
  const Axis axis = *parse_axis(a.axis);
  const FourVectord result =
      boost_axis(FourVectord(v[0], v[1], v[2], v[3]), axis, Boostd::along(axis, a.beta));
  switch (o.format) {
    case Format::plain:
      o.out << o.num(result.t()) << ',' << o.num(result.x()) << ',' << o.num(result.y()) << ','
            << o.num(result.z()) << '\n';
      break;
    case Format::csv:
      o.out << "t,x,y,z\n"
            << o.num(result.t()) << ',' << o.num(result.x()) << ',' << o.num(result.y()) << ','
            << o.num(result.z()) << '\n';
      break;
    case Format::json:
      o.out << "{\"t\": " << format_number(result.t(), 17)
            << ", \"x\": " << format_number(result.x(), 17)
            << ", \"y\": " << format_number(result.y(), 17)
            << ", \"z\": " << format_number(result.z(), 17) << "}\n";
      break;
  }
}

// ---------------------------------------------------------------- wave

struct WaveArgs {
  double omega = 0.0;
  std::string k;
  double c = 1.0;
};

void cmd_wave(const WaveArgs& a, const Output& o) {
  const auto kv = parse_list(a.k, 3, "--k");
  if (!(a.c > 0.0)) throw DomainError("--c: must be positive");
  if (!(a.omega > 0.0)) throw DomainError("--omega: must be positive");
  const Vector3<double> k(kv[0], kv[1], kv[2]);
  const double c = a.c;
  const double t = a.omega / c;
  const double kn = k.norm();
  if ((t - kn) * (t + kn) < -radicand_clamp * t * t) {
    throw DomainError("--k: |k| > omega/c would give a phase velocity below c; "
                      "v_p >= c is required");
  }
  const WaveStated w(t, k);

  using Row = std::pair<std::string, std::optional<double>>;
  std::vector<Row> rows;
  rows.emplace_back("omega0", c * rest_frequency(w));
  rows.emplace_back("phase_velocity",
                    kn > 0.0 ? std::optional<double>(c * phase_velocity(w)) : std::nullopt);
  rows.emplace_back("group_velocity", c * group_velocity(w));
  rows.emplace_back("wavelength",
                    kn > 0.0 ? std::optional<double>(w.wavelength()) : std::nullopt);
  std::optional<Vector3<double>> rest;
  try {
    rest = c * rest_wave_velocity(w);
  } catch (const std::domain_error&) {
  }
  const char* axes[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    rows.emplace_back(std::string("rest_wave_velocity_") + axes[i],
                      rest ? std::optional<double>((*rest)[i]) : std::nullopt);
  }

  switch (o.format) {
    case Format::plain:
      for (const auto& [name, value] : rows) {
        o.out << name << ' ' << (value ? o.num(*value) : "undefined") << '\n';
      }
      break;
    case Format::csv:
      o.out << "quantity,value\n";
      for (const auto& [name, value] : rows) {
        o.out << name << ',' << (value ? o.num(*value) : "undefined") << '\n';
      }
      break;
    case Format::json: {
      o.out << '{';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& [name, value] = rows[i];
        o.out << (i ? ", " : "") << '"' << name
              << "\": " << (value ? format_number(*value, 17) : "null");
      }
      o.out << "}\n";
      break;
    }
  }
}

// ---------------------------------------------------------------- doppler

struct DopplerArgs {
  std::string range;
};

std::vector<double> expand_range(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_double(parts[0], flag)};
  if (parts.size() != 3) {
    throw UsageError(flag + ": expected a single value or start:stop:step, got '" + text + "'");
  }
  const double lo = parse_double(parts[0], flag);
  const double hi = parse_double(parts[1], flag);
  const double step = parse_double(parts[2], flag);
  if (hi < lo) throw UsageError(flag + ": stop is below start");
  if (hi > lo && !(step > 0.0)) throw UsageError(flag + ": step must be positive");
  const std::size_t count =
      hi > lo ? static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1 : 1;
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v = lo + static_cast<double>(i) * step;
    // Accumulated rounding would otherwise print a grid zero as -1e-16.
    if (std::abs(v) < 1e-9 * step) v = 0.0;
    values.push_back(v);
  }
  return values;
}

void cmd_doppler(const DopplerArgs& a, const Output& o) {
  const auto betas = expand_range(a.range, "--beta-range");
  check_beta(betas.front(), "--beta-range");
  check_beta(betas.back(), "--beta-range");
  switch (o.format) {
    case Format::plain:
    case Format::csv:
      o.out << "beta,factor\n";
      for (const double b : betas) o.out << o.num(b) << ',' << o.num(doppler_factor(b)) << '\n';
      break;
    case Format::json:
      o.out << '[';
      for (std::size_t i = 0; i < betas.size(); ++i) {
        o.out << (i ? ", " : "") << "{\"beta\": " << format_number(betas[i], 17)
              << ", \"factor\": " << format_number(doppler_factor(betas[i]), 17) << '}';
      }
      o.out << "]\n";
      break;
  }
}

// ---------------------------------------------------------------- dispersion

struct DispersionArgs {
  double omega0 = 0.0;
  double k_max = 0.0;
  int points = 0;
  double c = 1.0;
};

void cmd_dispersion(const DispersionArgs& a, const Output& o) {
  if (a.points < 2) throw UsageError("--points: at least 2 points are required");
  if (!(a.omega0 >= 0.0)) throw DomainError("--omega0: must be non-negative");
  if (!(a.k_max > 0.0)) throw DomainError("--k-max: must be positive");
  if (!(a.c > 0.0)) throw DomainError("--c: must be positive");
  const double c = a.c;

  struct Row {
    double k, omega, vp, vg;
  };
  std::vector<Row> rows;
  for (int i = 0; i < a.points; ++i) {
    const double k = a.k_max * static_cast<double>(i) / static_cast<double>(a.points - 1);
    const double omega = std::hypot(a.omega0, c * k);
    const double vp = k > 0.0 ? omega / k : INFINITY;
    // At omega = k = 0 the light-cone limit d omega/dk = c applies.
    const double vg = omega > 0.0 ? c * c * k / omega : c;
    rows.push_back({k, omega, vp, vg});
  }
  switch (o.format) {
    case Format::plain:
    case Format::csv:
      o.out << "k,omega,v_p,v_g\n";
      for (const Row& r : rows) {
        o.out << o.num(r.k) << ',' << o.num(r.omega) << ',' << o.num(r.vp) << ','
              << o.num(r.vg) << '\n';
      }
      break;
    case Format::json:
      o.out << '[';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        o.out << (i ? ", " : "") << "{\"k\": " << format_number(r.k, 17)
              << ", \"omega\": " << format_number(r.omega, 17) << ", \"v_p\": "
              << (std::isfinite(r.vp) ? format_number(r.vp, 17) : "null")
              << ", \"v_g\": " << format_number(r.vg, 17) << '}';
      }
      o.out << "]\n";
      break;
  }
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::optional<double> beta_max;
  double C = 1.0;
  std::string C_range;
  double tolerance = default_tolerance;
  double exponent = 1.0;
  double perturb = 0.0;
  std::string sampling = "uniform-beta";
  std::string profile = "standard";
  std::string mass_range;
  std::string omega0_range;
  std::string axes = "x,y,z";
};

int cmd_verify(const VerifyArgs& a, const Output& o) {
  SamplingSpec spec;
  spec.seed = a.seed;
  spec.n_samples = a.samples;
  spec.profile = a.profile == "stress" ? Profile::stress : Profile::standard;
  spec.beta_max = a.beta_max.value_or(spec.profile == Profile::stress ? stress_beta_max : 0.99);
  spec.sampling =
      a.sampling == "uniform-rapidity" ? BetaSampling::uniform_rapidity : BetaSampling::uniform_beta;
  if (!a.mass_range.empty()) spec.mass_range = parse_interval(a.mass_range, "--mass-range");
  if (!a.omega0_range.empty()) {
    spec.omega0_range = parse_interval(a.omega0_range, "--omega0-range");
  }
  if (!a.C_range.empty()) spec.invariant_range = parse_interval(a.C_range, "--C-range");
  spec.axes.clear();
  for (const auto& name : split(a.axes, ',')) {
    const auto axis = parse_axis(name);
    if (!axis) throw UsageError("--axes: unknown axis '" + name + "'");
    spec.axes.push_back(*axis);
  }
  if (!(a.C > 0.0)) throw UsageError("--C: must be positive");
  if (!(a.tolerance >= 0.0)) throw UsageError("--tolerance: must be non-negative");

  RunOptions options;
  options.C = a.C;
  options.tolerance = a.tolerance;
  options.exponent = a.exponent;
  options.perturbation = a.perturb;
  if (a.suite != "all") options.suites = {*parse_suite(a.suite)};

  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerificationReport report = run(spec, options);

  if (o.format == Format::json) {
    o.out << to_json(report);
  } else {
    for (const TheoremVerdict& v : report.verdicts) {
      o.out << (v.pass ? "PASS " : "FAIL ") << v.suite_name << " samples=" << v.samples
            << " max_rel_residual=" << format_number(v.max_rel_residual, 3)
            << " tolerance=" << format_number(v.tolerance, 3) << '\n';
    }
    o.out << (report.overall_pass ? "overall: PASS" : "overall: FAIL") << '\n';
  }
  return report.overall_pass ? exit_ok : exit_verification_failed;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    args = expand_config(std::move(args));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  CLI::App app{"Relativistic wave-particle kinematics and verification suite",
               "lorentz-bridge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(artifact_version()));

  std::string format_text;
  int precision = 6;
  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->default_str(default_format);
    sub->add_option("--precision", precision, "Significant digits in plain/csv output")
        ->check(CLI::Range(1, 17));
    // Handled before parsing; listed so it shows in --help.
    sub->add_option("--config", "key=value file mirroring the flags");
  };

  BoostArgs boost_args;
  auto* boost_cmd = app.add_subcommand("boost", "Boost a four-vector along an axis");
  boost_cmd->add_option("--vector", boost_args.vector, "t,x,y,z")->required();
  boost_cmd->add_option("--beta", boost_args.beta, "Frame velocity, |beta| < 1")->required();
  boost_cmd->add_option("--axis", boost_args.axis, "Boost axis")
      ->check(CLI::IsMember({"x", "y", "z"}))
      ->capture_default_str();
  add_common(boost_cmd, "plain");

  WaveArgs wave_args;
  auto* wave_cmd = app.add_subcommand("wave", "Derived quantities of a plane wave");
  wave_cmd->add_option("--omega", wave_args.omega, "Angular frequency")->required();
  wave_cmd->add_option("--k", wave_args.k, "Wave vector kx,ky,kz")->required();
  wave_cmd->add_option("--c", wave_args.c, "Speed of light for unit rescaling")
      ->capture_default_str();
  add_common(wave_cmd, "plain");

  DopplerArgs doppler_args;
  auto* doppler_cmd = app.add_subcommand("doppler", "Doppler factor table");
  doppler_cmd->add_option("--beta-range", doppler_args.range, "beta or start:stop:step")
      ->required();
  add_common(doppler_cmd, "csv");

  DispersionArgs disp_args;
  auto* disp_cmd = app.add_subcommand("dispersion", "omega(k), v_p and v_g table");
  disp_cmd->add_option("--omega0", disp_args.omega0, "Rest-frame frequency")->required();
  disp_cmd->add_option("--k-max", disp_args.k_max, "Largest wave number")->required();
  disp_cmd->add_option("--points", disp_args.points, "Number of rows")->required();
  disp_cmd->add_option("--c", disp_args.c, "Speed of light for unit rescaling")
      ->capture_default_str();
  add_common(disp_cmd, "csv");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  std::vector<std::string> suite_names{"all"};
  for (const Suite s : all_suites()) suite_names.emplace_back(to_string(s));
  verify_cmd->add_option("--suite", va.suite, "Suite to run")
      ->check(CLI::IsMember(suite_names))
      ->capture_default_str();
  verify_cmd->add_option("--seed", va.seed, "Sampling seed")
      ->envname("LORENTZ_BRIDGE_SEED")
      ->capture_default_str();
  verify_cmd->add_option("--samples", va.samples, "Samples per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--beta-max", va.beta_max, "Largest sampled |beta|");
  verify_cmd->add_option("--C", va.C, "Invariant C")->capture_default_str();
  verify_cmd->add_option("--C-range", va.C_range, "Sample C log-uniformly in lo:hi");
  verify_cmd->add_option("--tolerance", va.tolerance, "Relative tolerance")
      ->capture_default_str();
  verify_cmd->add_option("--exponent", va.exponent, "n in E = C omega^n (ashby-miller)")
      ->capture_default_str();
  verify_cmd->add_option("--perturb", va.perturb, "Negative-control perturbation")
      ->capture_default_str();
  verify_cmd->add_option("--sampling", va.sampling, "Boost sampling")
      ->check(CLI::IsMember({"uniform-beta", "uniform-rapidity"}))
      ->capture_default_str();
  verify_cmd->add_option("--profile", va.profile, "Sampling profile")
      ->check(CLI::IsMember({"standard", "stress"}))
      ->capture_default_str();
  verify_cmd->add_option("--mass-range", va.mass_range, "lo:hi");
  verify_cmd->add_option("--omega0-range", va.omega0_range, "lo:hi");
  verify_cmd->add_option("--axes", va.axes, "Comma-separated subset of x,y,z")
      ->capture_default_str();
  add_common(verify_cmd, "json");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  auto pick_format = [&](const std::string& fallback) {
    return format_names.at(format_text.empty() ? fallback : format_text);
  };

  try {
    if (boost_cmd->parsed()) {
      cmd_boost(boost_args, {out, pick_format("plain"), precision});
    } else if (wave_cmd->parsed()) {
      cmd_wave(wave_args, {out, pick_format("plain"), precision});
    } else if (doppler_cmd->parsed()) {
      cmd_doppler(doppler_args, {out, pick_format("csv"), precision});
    } else if (disp_cmd->parsed()) {
      cmd_dispersion(disp_args, {out, pick_format("csv"), precision});
    } else if (verify_cmd->parsed()) {
      return cmd_verify(va, {out, pick_format("json"), precision});
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace lorentz_bridge
