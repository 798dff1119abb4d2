#ifndef LORENTZ_BRIDGE_KINEMATICS_HPP
#define LORENTZ_BRIDGE_KINEMATICS_HPP

/// \file
/// Particle and plane-wave states, their four-vectors, and the derived
/// kinematic quantities (energy, momentum, Doppler factor, phase and group
/// velocity, rest-frame frequency, rest-wave frame). Natural units, c = 1.

#include "lorentz_bridge/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>

namespace lorentz_bridge {

/// Default threshold below which a rest mass or rest frequency counts as zero.
inline constexpr double default_zero_tolerance = 1e-15;

/// Negative radicands in omega^2 - |k|^2 smaller than this fraction of
/// omega^2 are roundoff and clamp to zero.
inline constexpr double radicand_clamp = 1e-12;

/// A free particle of rest mass m0 >= 0. Massive particles have |v| < 1,
/// massless ones |v| = 1.
template <typename Scalar>
class ParticleState {
 public:
  ParticleState(Scalar m0, const Vector3<Scalar>& velocity)
      : m0_(m0), velocity_(velocity) {
    using std::abs;
    if (!std::isfinite(m0) || m0 < Scalar(0)) {
      throw std::domain_error("rest mass must be finite and non-negative");
    }
    if (!velocity.allFinite()) {
      throw std::domain_error("particle velocity is not finite");
    }
    const Scalar speed = velocity.norm();
    if (m0 > Scalar(0) && !(speed < Scalar(1))) {
      throw std::domain_error("a massive particle needs |v| < 1");
    }
    if (m0 == Scalar(0) && abs(speed - Scalar(1)) > Scalar(1e-12)) {
      throw std::domain_error("a massless particle needs |v| = 1");
    }
  }

  Scalar mass() const { return m0_; }
  const Vector3<Scalar>& velocity() const { return velocity_; }
  Scalar speed() const { return velocity_.norm(); }
  Scalar gamma() const { return lorentz_factor(speed()); }

 private:
  Scalar m0_;
  Vector3<Scalar> velocity_;
};

/// (gamma m0, gamma m0 v). Massless particles go through
/// massless_four_momentum, since gamma m0 is 0 * inf at v = c.
template <typename Scalar>
FourVector<Scalar> four_momentum(const ParticleState<Scalar>& p) {
  if (p.mass() == Scalar(0)) {
    throw std::domain_error(
        "massless particle: use massless_four_momentum with an explicit energy");
  }
  const Scalar e = p.gamma() * p.mass();
  return FourVector<Scalar>(e, Vector3<Scalar>(e * p.velocity()));
}

template <typename Scalar>
FourVector<Scalar> massless_four_momentum(Scalar energy,
                                          const Vector3<Scalar>& direction) {
  using std::abs;
  if (!(energy > Scalar(0)) || !std::isfinite(energy)) {
    throw std::domain_error("photon energy must be positive");
  }
  if (abs(direction.norm() - Scalar(1)) > Scalar(1e-12)) {
    throw std::invalid_argument("direction must be a unit vector");
  }
  return FourVector<Scalar>(energy, Vector3<Scalar>(energy * direction));
}

/// lambda = 2 pi C / |p|; C plays the role of hbar.
template <typename Scalar>
Scalar de_broglie_wavelength(Scalar momentum, Scalar invariant = Scalar(1)) {
  if (!(momentum > Scalar(0))) {
    throw std::domain_error("wavelength is undefined for |p| <= 0");
  }
  if (!(invariant > Scalar(0))) {
    throw std::domain_error("the invariant C must be positive");
  }
  return Scalar(2) * std::numbers::pi_v<Scalar> * invariant / momentum;
}

/// sqrt((1 - beta)/(1 + beta)), the factor multiplying both E and omega of a
/// light-like state boosted along its direction of motion.
template <typename Scalar>
Scalar doppler_factor(Scalar beta) {
  using std::abs;
  using std::sqrt;
  if (!(abs(beta) < Scalar(1))) {
    throw std::domain_error("|beta| must be strictly less than 1");
  }
  return sqrt((Scalar(1) - beta) / (Scalar(1) + beta));
}

/// A monochromatic plane wave. The amplitude is carried along and never read.
template <typename Scalar, typename Amplitude = std::monostate>
class WaveState {
 public:
  /// Rejects |k| > omega: a wave associated with a particle has v_p >= c.
  WaveState(Scalar omega, const Vector3<Scalar>& k, Amplitude amplitude = {})
      : WaveState(omega, k, std::move(amplitude), true) {}

  /// Skips the v_p >= c check. For counterexample experiments only.
  static WaveState non_physical(Scalar omega, const Vector3<Scalar>& k,
                                Amplitude amplitude = {}) {
    return WaveState(omega, k, std::move(amplitude), false);
  }

  static WaveState from_four_vector(const FourVector<Scalar>& kmu,
                                    Amplitude amplitude = {}) {
    return WaveState(kmu.t(), kmu.spatial(), std::move(amplitude));
  }

  Scalar omega() const { return omega_; }
  const Vector3<Scalar>& k() const { return k_; }
  Scalar k_norm() const { return k_.norm(); }
  const Amplitude& amplitude() const { return amplitude_; }
  bool is_physical() const { return physical_; }

  /// nu = omega / 2 pi
  Scalar frequency() const {
    return omega_ / (Scalar(2) * std::numbers::pi_v<Scalar>);
  }
  /// lambda = 2 pi / |k|
  Scalar wavelength() const {
    if (k_norm() == Scalar(0)) {
      throw std::domain_error("wavelength is infinite for a stationary wave");
    }
    return Scalar(2) * std::numbers::pi_v<Scalar> / k_norm();
  }

  FourVector<Scalar> four_vector() const { return FourVector<Scalar>(omega_, k_); }

 private:
  WaveState(Scalar omega, const Vector3<Scalar>& k, Amplitude amplitude,
            bool physical)
      : omega_(omega), k_(k), amplitude_(std::move(amplitude)), physical_(physical) {
    if (!std::isfinite(omega) || !(omega > Scalar(0))) {
      throw std::domain_error("angular frequency must be positive and finite");
    }
    if (!k.allFinite()) {
      throw std::domain_error("wave vector is not finite");
    }
    if (physical) {
      const Scalar kn = k.norm();
      const Scalar radicand = (omega - kn) * (omega + kn);
      if (radicand < -Scalar(radicand_clamp) * omega * omega) {
        throw std::domain_error("|k| > omega gives v_p < c, which is not allowed");
      }
    }
  }

  Scalar omega_;
  Vector3<Scalar> k_;
  Amplitude amplitude_;
  bool physical_;
};

using WaveStated = WaveState<double>;

/// omega0 = sqrt(omega^2 - |k|^2), the frequency in the frame where the wave
/// is stationary.
template <typename Scalar, typename A>
Scalar rest_frequency(const WaveState<Scalar, A>& w) {
  using std::sqrt;
  const Scalar kn = w.k_norm();
  const Scalar radicand = (w.omega() - kn) * (w.omega() + kn);
  if (radicand < Scalar(0)) {
    if (radicand < -Scalar(radicand_clamp) * w.omega() * w.omega()) {
      throw std::domain_error("omega^2 - |k|^2 is negative: corrupted wave state");
    }
    return Scalar(0);
  }
  return sqrt(radicand);
}

/// v_p = omega / |k|
template <typename Scalar, typename A>
Scalar phase_velocity(const WaveState<Scalar, A>& w) {
  const Scalar kn = w.k_norm();
  if (kn == Scalar(0)) {
    throw std::domain_error(
        "phase velocity is undefined for k = 0 (the wave is in its rest frame)");
  }
  return w.omega() / kn;
}

/// v_g = d omega / dk = |k| / omega for omega^2 = omega0^2 + k^2.
template <typename Scalar, typename A>
Scalar group_velocity(const WaveState<Scalar, A>& w) {
  return w.k_norm() / w.omega();
}

/// Velocity of the frame in which k' = 0, i.e. k / omega.
template <typename Scalar, typename A>
Vector3<Scalar> rest_wave_velocity(
    const WaveState<Scalar, A>& w,
    Scalar zero_tolerance = Scalar(default_zero_tolerance)) {
  if (rest_frequency(w) <= zero_tolerance) {
    throw std::domain_error("a light-like wave (omega0 = 0) has no rest frame");
  }
  return w.k() / w.omega();
}

template <typename Scalar>
struct FrequencyPair {
  Scalar inner;  ///< time-dilated internal clock, nu0 sqrt(1 - beta^2)
  Scalar wave;   ///< accompanying wave, nu0 / sqrt(1 - beta^2)
};

template <typename Scalar>
FrequencyPair<Scalar> frequency_transform(Scalar nu0, Scalar beta) {
  using std::abs;
  using std::sqrt;
  if (!(abs(beta) < Scalar(1))) {
    throw std::domain_error("|beta| must be strictly less than 1");
  }
  const Scalar root = sqrt((Scalar(1) - beta) * (Scalar(1) + beta));
  return {nu0 * root, nu0 / root};
}

/// Follows a particle at x = beta t and compares the phase of its internal
/// clock, 2 pi nu_inner t, with the phase of the wave of phase velocity
/// 1/beta, 2 pi nu_wave (t - beta x). Returns the largest mismatch over the
/// samples, relative to max(1, |phase|).
template <typename Scalar>
Scalar phase_harmony_check(Scalar nu0, Scalar beta, std::span<const Scalar> times) {
  using std::abs;
  if (beta == Scalar(0)) {
    throw std::domain_error(
        "phase velocity is infinite at beta = 0; use the rest-wave operations");
  }
  const auto nu = frequency_transform(nu0, beta);
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  Scalar worst = 0;
  for (const Scalar t : times) {
    const Scalar x = beta * t;
    const Scalar inner = two_pi * nu.inner * t;
    const Scalar wave = two_pi * nu.wave * (t - x * beta);
    const Scalar scale = std::max({Scalar(1), abs(inner), abs(wave)});
    worst = std::max(worst, abs(inner - wave) / scale);
  }
  return worst;
}

/// The four (m0, omega0) corners. Case1 and Case4 are physical.
enum class CaseClass { case1, case2, case3, case4 };

inline bool is_valid(CaseClass c) {
  return c == CaseClass::case1 || c == CaseClass::case4;
}

inline const char* to_string(CaseClass c) {
  switch (c) {
    case CaseClass::case1: return "case1";
    case CaseClass::case2: return "case2";
    case CaseClass::case3: return "case3";
    case CaseClass::case4: return "case4";
  }
  return "?";
}

template <typename Scalar>
CaseClass classify_case(Scalar m0, Scalar omega0,
                        Scalar zero_tolerance = Scalar(default_zero_tolerance)) {
  if (m0 < Scalar(0) || omega0 < Scalar(0)) {
    throw std::domain_error("m0 and omega0 must be non-negative");
  }
  const bool massive = m0 > zero_tolerance;
  const bool oscillating = omega0 > zero_tolerance;
  if (massive) return oscillating ? CaseClass::case1 : CaseClass::case2;
  return oscillating ? CaseClass::case3 : CaseClass::case4;
}

/// C = m0 / omega0 (m0 c^2 / omega0 with c = 1).
template <typename Scalar>
Scalar derive_invariant_C(Scalar m0, Scalar omega0) {
  if (!(omega0 > Scalar(0))) {
    throw std::domain_error("omega0 = 0 makes C degenerate");
  }
  if (!(m0 > Scalar(0))) {
    throw std::domain_error("C needs m0 > 0");
  }
  return m0 / omega0;
}

/// A particle four-momentum together with the four-vector of its wave.
template <typename Scalar>
struct ParticleWavePair {
  FourVector<Scalar> momentum;
  FourVector<Scalar> wave;
};

template <typename Scalar>
ParticleWavePair<Scalar> boost(const ParticleWavePair<Scalar>& pair,
                               const Boost<Scalar>& b) {
  return {boost(pair.momentum, b), boost(pair.wave, b)};
}

/// The four-vector seen from a frame in which the vector's original frame
/// moves with velocity `velocity.beta()`.
template <typename Scalar>
FourVector<Scalar> observed_from(const FourVector<Scalar>& v,
                                 const Boost<Scalar>& velocity) {
  return boost(v, velocity.inverse());
}

template <typename Scalar>
ParticleWavePair<Scalar> observed_from(const ParticleWavePair<Scalar>& pair,
                                       const Boost<Scalar>& velocity) {
  return boost(pair, velocity.inverse());
}

/// Particle at rest with energy m0 and a stationary wave of frequency omega0.
template <typename Scalar>
ParticleWavePair<Scalar> rest_pair(Scalar m0, Scalar omega0) {
  return {FourVector<Scalar>(m0, 0, 0, 0), FourVector<Scalar>(omega0, 0, 0, 0)};
}

}  // namespace lorentz_bridge

#endif  // LORENTZ_BRIDGE_KINEMATICS_HPP
