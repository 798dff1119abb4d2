#ifndef LORENTZ_BRIDGE_HARNESS_HPP
#define LORENTZ_BRIDGE_HARNESS_HPP

/// \file
/// Deterministic sampling of boosts, masses and wave states, and the runner
/// that turns the verifiers into a VerificationReport.

#include "lorentz_bridge/kinematics.hpp"
#include "lorentz_bridge/minkowski.hpp"
#include "lorentz_bridge/theorems.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace lorentz_bridge {

struct Interval {
  double lo;
  double hi;
};

enum class BetaSampling { uniform_beta, uniform_rapidity };
enum class Profile { standard, stress };

/// Speed cap of the stress profile, gamma ~ 707.
inline constexpr double stress_beta_max = 1.0 - 1e-6;

struct SamplingSpec {
  std::uint64_t seed = 42;
  std::size_t n_samples = 1000;
  double beta_max = 0.99;
  Interval mass_range{1e-3, 1e3};
  Interval omega0_range{1e-3, 1e3};
  /// When set, C is drawn log-uniformly from this range per sample instead
  /// of using the run-wide value.
  std::optional<Interval> invariant_range;
  std::vector<Axis> axes{Axis::x, Axis::y, Axis::z};
  BetaSampling sampling = BetaSampling::uniform_beta;
  /// The stress profile divides shell and round-trip residuals by gamma^2.
  Profile profile = Profile::standard;

  /// Throws std::invalid_argument on an unusable spec.
  void validate() const;
};

/// One reproducible random stream. (seed, stream id) fixes every value.
class SampleStream {
 public:
  SampleStream(const SamplingSpec& spec, std::uint64_t stream_id);

  /// Uniform in [0, 1) from the top 53 bits of the engine output.
  double unit();
  double uniform(double lo, double hi);
  double log_uniform(const Interval& range);
  std::size_t index(std::size_t n);

  double beta();
  Axis axis();
  Boostd boost();
  /// Random direction, speed from beta().
  Vector3<double> velocity();
  double mass();
  double omega0();
  double invariant(double fallback);

  /// (m0, omega0) drawn independently, both states viewed from a frame in
  /// which they move with one sampled velocity.
  std::pair<ParticleState<double>, WaveStated> case1_pair();

 private:
  const SamplingSpec* spec_;
  std::mt19937_64 engine_;
};

enum class Suite {
  theorem_a,
  theorem_b,
  lemma,
  ashby_miller,
  einstein,
  proportionality,
  kinematics,
};

const char* to_string(Suite suite);
std::optional<Suite> parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct RunOptions {
  double C = 1.0;
  double tolerance = default_tolerance;
  /// Exponent n of E = C omega^n in the Ashby-Miller suite.
  double exponent = 1.0;
  /// Size of the negative-control perturbation; 0 disables it.
  double perturbation = 0.0;
  std::vector<Suite> suites = all_suites();
};

struct VerificationReport {
  std::string version;
  SamplingSpec config;
  RunOptions options;
  std::vector<TheoremVerdict> verdicts;
  bool overall_pass = true;
  double wall_time = 0.0;
};

const char* artifact_version();

/// Runs one suite. Kinematics and theorem-b yield several verdicts.
/// Exceptions thrown by a verifier become a failed verdict.
std::vector<TheoremVerdict> run_suite(Suite suite, const SamplingSpec& spec,
                                      const RunOptions& options);

VerificationReport run(const SamplingSpec& spec, const RunOptions& options);

/// Every suite with the given C and tolerance.
VerificationReport run_all(const SamplingSpec& spec, double C, double tolerance);

/// overall_pass is the conjunction of the verdicts.
void refresh_overall(VerificationReport& report);

}  // namespace lorentz_bridge

#endif  // LORENTZ_BRIDGE_HARNESS_HPP
