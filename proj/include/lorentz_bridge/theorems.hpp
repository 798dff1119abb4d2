#ifndef LORENTZ_BRIDGE_THEOREMS_HPP
#define LORENTZ_BRIDGE_THEOREMS_HPP

/// \file
/// Executable checks of the wave-particle proportionality results:
/// p = C k from E = C omega in every frame, the generic four-vector
/// proportionality argument, E = m0 gamma from p = m0 u, the exclusion of
/// E = C omega^n for n != 1, the direction lemma, and the four (m0, omega0)
/// cases.
///
/// Every verifier returns a TheoremVerdict holding the worst residual seen
/// over its samples. Residuals are relative with a floor of 1:
/// |lhs - rhs| / max(1, scale).

#include "lorentz_bridge/kinematics.hpp"
#include "lorentz_bridge/minkowski.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lorentz_bridge {

inline constexpr double default_tolerance = 1e-12;

/// Worst-case input record attached to a failing verdict.
struct Witness {
  std::vector<std::pair<std::string, double>> values;
  std::string note;

  Witness& add(std::string key, double value) {
    values.emplace_back(std::move(key), value);
    return *this;
  }
  std::optional<double> get(const std::string& key) const;
};

struct TheoremVerdict {
  std::string suite_name;
  std::size_t samples = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  double tolerance = default_tolerance;
  bool pass = true;
  std::optional<Witness> witness;
  std::string detail;
};

struct Residual {
  double abs;
  double rel;
};

/// |lhs - rhs| and |lhs - rhs| / max(1, |lhs|, |rhs|, scale).
Residual residual(double lhs, double rhs, double scale = 0.0);

/// |lhs - rhs| / |rhs| for quantities known to be nonzero (ratios).
Residual ratio_residual(double lhs, double rhs);

/// Keeps the maximum residual and the witness of the worst failing sample.
/// Aggregation uses max and is independent of sample order up to ties.
class VerdictAccumulator {
 public:
  VerdictAccumulator(std::string suite_name, double tolerance);

  /// Records one residual. `make_witness` is only called when this sample
  /// becomes the worst failing one.
  template <typename MakeWitness>
  void record(const Residual& r, MakeWitness&& make_witness) {
    ++samples_;
    const double rel = std::isnan(r.rel) ? INFINITY : r.rel;
    const double abs = std::isnan(r.abs) ? INFINITY : r.abs;
    if (abs > max_abs_) max_abs_ = abs;
    if (rel > max_rel_) {
      max_rel_ = rel;
      if (!(rel <= tolerance_)) witness_ = make_witness();
    }
  }

  void record(const Residual& r) {
    record(r, [] { return Witness{}; });
  }

  /// Counts samples without a residual (e.g. pure sign checks that passed).
  void count(std::size_t n = 1) { samples_ += n; }

  /// Folds another verdict in; used when suites are evaluated per sample.
  void merge(const TheoremVerdict& other);

  void set_detail(std::string detail) { detail_ = std::move(detail); }

  TheoremVerdict finish() const;

 private:
  std::string name_;
  double tolerance_;
  std::size_t samples_ = 0;
  double max_abs_ = 0.0;
  double max_rel_ = 0.0;
  std::optional<Witness> witness_;
  std::string detail_;
};

/// Imposes E' = C omega' in every sampled frame and checks p' = C k'
/// component by component. Each boost is applied along its own axis, which
/// covers the y and z components as well as x.
TheoremVerdict verify_theorem_a(const ParticleWavePair<double>& start, double C,
                                std::span<const Boostd> boosts,
                                double tolerance = default_tolerance);

/// Start pair built from m0 and C: the particle and its stationary wave
/// omega0 = m0 / C at rest, or for m0 = 0 a unit-energy photon along +x with
/// omega = 1 / C.
TheoremVerdict verify_theorem_a(double m0, double C, std::span<const Boostd> boosts,
                                double tolerance = default_tolerance);

/// a0 = C b0 in every frame forces a_s = C b_s, and vice versa. Both the
/// temporal and spatial residuals are checked in every sampled frame.
TheoremVerdict verify_proportionality(const FourVectord& a, const FourVectord& b,
                                      double C, std::span<const Boostd> boosts,
                                      double tolerance = default_tolerance);

/// For each velocity, builds the four-velocity u = (g, g v) through the
/// rapidity route and checks that p = m0 u, taken from four_momentum, has
/// E = m0 g. The same proportionality is then checked in each of `frames`.
/// `perturbation` is added to p_x (negative control).
TheoremVerdict verify_einstein_energy(double m0,
                                      std::span<const Vector3<double>> velocities,
                                      std::span<const Boostd> frames = {},
                                      double tolerance = default_tolerance,
                                      double perturbation = 0.0);

/// |D^(n-1) - 1| with D the Doppler factor: the frame dependence of
/// E = C omega^n for a light-like pair.
double ashby_miller_residual(double n, double beta);

/// Boosts a photon pair with E = C omega^n along +x by each beta and checks
/// that E' = C omega'^n still holds. Passes only for n = 1.
TheoremVerdict verify_ashby_miller(double n, std::span<const double> betas,
                                   double C = 1.0, double omega = 1.0,
                                   double tolerance = default_tolerance);

struct DirectionLemmaOptions {
  double m0 = 1.0;
  /// Spatial wave vector added along x in the particle rest frame. Nonzero
  /// values turn the pair into a counterexample.
  double k0_offset = 0.0;
  /// k0 used for the built-in counterexample, as a fraction of omega0.
  double counterexample_fraction = 0.5;
  double tolerance = default_tolerance;
};

/// Views the rest pair from frames in which it moves with each sampled
/// velocity and checks sign(p_i) = sign(k_i) and p_i = 0 <=> k_i = 0.
/// Also confirms that a pair with k0 != 0 breaks the agreement for some
/// sampled frame (the rest frame is always included in that search).
TheoremVerdict verify_direction_lemma(double omega0, std::span<const Boostd> velocities,
                                      const DirectionLemmaOptions& options = {});

struct TheoremBOptions {
  double tolerance = default_tolerance;
  double zero_tolerance = default_zero_tolerance;
  /// Energy and frequency of the light-like pair used in case 4.
  double light_energy = 1.0;
  double light_frequency = 1.0;
  /// Added to p_x of the start pair (negative control).
  double momentum_offset = 0.0;
};

/// Classifies (m0, omega0) and runs the matching argument. Cases 1 and 4
/// check E/omega = p_i/k_i = C in every frame; cases 2 and 3 search the
/// frames for a sample satisfying the postulates and pass when none exists.
TheoremVerdict verify_theorem_b(double m0, double omega0, std::span<const Boostd> boosts,
                                const TheoremBOptions& options = {});

/// Closed-form argument recorded with the case 2 and case 3 verdicts.
/// Empty for the valid cases.
std::string exclusion_reason(CaseClass which);

}  // namespace lorentz_bridge

#endif  // LORENTZ_BRIDGE_THEOREMS_HPP
