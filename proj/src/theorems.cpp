#include "lorentz_bridge/theorems.hpp"

#include "lorentz_bridge/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lorentz_bridge {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

/// Unit vector along which a boost acts; +x for the identity.
Vector3<double> boost_direction(const Boostd& b) {
  if (b.is_identity()) return Vector3<double>::UnitX();
  return b.rapidity() / b.rapidity_magnitude();
}

void add_frame(Witness& w, const Boostd& b) {
  const Vector3<double> beta = b.beta();
  w.add("beta_x", beta.x()).add("beta_y", beta.y()).add("beta_z", beta.z());
  w.add("gamma", b.gamma());
}

void require_frames(std::span<const Boostd> frames) {
  if (frames.empty()) throw std::invalid_argument("no frames to sample");
}

/// Worst per-component residual of a' = C b' in one frame.
void check_proportional(const FourVectord& a, const FourVectord& b, double C,
                        const Boostd& frame, VerdictAccumulator& acc) {
  const FourVectord ap = boost(a, frame);
  const FourVectord bp = boost(b, frame);
  const double scale = std::max(ap.max_abs(), std::abs(C) * bp.max_abs());
  Residual worst{0.0, 0.0};
  int worst_mu = 0;
  for (int mu = 0; mu < 4; ++mu) {
    const Residual r = residual(ap[mu], C * bp[mu], scale);
    if (!(r.rel <= worst.rel)) {
      worst = r;
      worst_mu = mu;
    }
  }
  acc.record(worst, [&] {
    Witness w;
    add_frame(w, frame);
    w.add("C", C).add("component", worst_mu);
    w.add("lhs", ap[worst_mu]).add("rhs", C * bp[worst_mu]);
    w.note = worst_mu == 0 ? "temporal components not proportional"
                           : "spatial components not proportional";
    return w;
  });
}

void check_ratios(const ParticleWavePair<double>& obs, double C, const Boostd& frame,
                  VerdictAccumulator& acc) {
  const FourVectord& p = obs.momentum;
  const FourVectord& k = obs.wave;
  Residual worst = ratio_residual(p.t() / k.t(), C);
  std::string what = "E/omega";
  for (int i = 1; i < 4; ++i) {
    const Residual r = k[i] != 0.0 ? ratio_residual(p[i] / k[i], C)
                                    : residual(p[i], 0.0, std::abs(p.t()));
    if (!(r.rel <= worst.rel)) {
      worst = r;
      what = std::string("p_") + "txyz"[i] + "/k_" + "txyz"[i];
    }
  }
  acc.record(worst, [&] {
    Witness w;
    add_frame(w, frame);
    w.add("C", C).add("E", p.t()).add("omega", k.t());
    w.add("p_x", p.x()).add("k_x", k.x());
    w.note = what + " differs from C";
    return w;
  });
}

}  // namespace

std::optional<double> Witness::get(const std::string& key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  return std::nullopt;
}

Residual residual(double lhs, double rhs, double scale) {
  const double diff = std::abs(lhs - rhs);
  const double denom = std::max({1.0, std::abs(lhs), std::abs(rhs), std::abs(scale)});
  return {diff, diff / denom};
}

Residual ratio_residual(double lhs, double rhs) {
  const double diff = std::abs(lhs - rhs);
  return {diff, diff / std::abs(rhs)};
}

VerdictAccumulator::VerdictAccumulator(std::string suite_name, double tolerance)
    : name_(std::move(suite_name)), tolerance_(tolerance) {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
}

void VerdictAccumulator::merge(const TheoremVerdict& other) {
  samples_ += other.samples;
  max_abs_ = std::max(max_abs_, other.max_abs_residual);
  if (other.max_rel_residual > max_rel_) {
    max_rel_ = other.max_rel_residual;
    if (!(max_rel_ <= tolerance_)) {
      witness_ = other.witness.value_or(Witness{{}, other.detail});
    }
  }
}

TheoremVerdict VerdictAccumulator::finish() const {
  TheoremVerdict v;
  v.suite_name = name_;
  v.samples = samples_;
  v.max_abs_residual = max_abs_;
  v.max_rel_residual = max_rel_;
  v.tolerance = tolerance_;
  v.pass = max_rel_ <= tolerance_;
  v.detail = detail_;
  if (!v.pass) v.witness = witness_.value_or(Witness{{}, "no witness recorded"});
  return v;
}

TheoremVerdict verify_theorem_a(const ParticleWavePair<double>& start, double C,
                                std::span<const Boostd> boosts, double tolerance) {
  if (!(C > 0.0) || !std::isfinite(C)) throw std::domain_error("C must be positive");
  require_frames(boosts);
  VerdictAccumulator acc("theorem-a", tolerance);
  for (const Boostd& b : boosts) check_proportional(start.momentum, start.wave, C, b, acc);
  acc.set_detail("E' = C omega' imposed in every frame; p' = C k' checked per component");
  return acc.finish();
}

TheoremVerdict verify_theorem_a(double m0, double C, std::span<const Boostd> boosts,
                                double tolerance) {
  if (!(m0 >= 0.0)) throw std::domain_error("m0 must be non-negative");
  if (!(C > 0.0) || !std::isfinite(C)) throw std::domain_error("C must be positive");
  const ParticleWavePair<double> start =
      m0 > 0.0 ? rest_pair(m0, m0 / C)
               : ParticleWavePair<double>{FourVectord(1, 1, 0, 0),
                                          FourVectord(1 / C, 1 / C, 0, 0)};
  return verify_theorem_a(start, C, boosts, tolerance);
}

TheoremVerdict verify_proportionality(const FourVectord& a, const FourVectord& b,
                                      double C, std::span<const Boostd> boosts,
                                      double tolerance) {
  require_frames(boosts);
  VerdictAccumulator acc("proportionality", tolerance);
  for (const Boostd& frame : boosts) check_proportional(a, b, C, frame, acc);
  acc.set_detail("a0 = C b0 <=> a_s = C b_s checked in every frame");
  return acc.finish();
}

TheoremVerdict verify_einstein_energy(double m0, std::span<const Vector3<double>> velocities,
                                      std::span<const Boostd> frames, double tolerance,
                                      double perturbation) {
  if (!(m0 > 0.0)) throw std::domain_error("m0 must be positive");
  if (velocities.empty()) throw std::invalid_argument("no velocities to sample");
  VerdictAccumulator acc("einstein", tolerance);
  const FourVectord rest(1, 0, 0, 0);
  for (const Vector3<double>& v : velocities) {
    FourVectord p = four_momentum(ParticleState<double>(m0, v));
    if (perturbation != 0.0) p = p + FourVectord(0, perturbation, 0, 0);
    const FourVectord u = observed_from(rest, Boostd::from_velocity(v));

    auto check = [&](const Boostd& frame) {
      const FourVectord pf = boost(p, frame);
      const FourVectord uf = boost(u, frame);
      const double scale = std::max(pf.max_abs(), m0 * uf.max_abs());
      Residual worst{0.0, 0.0};
      int worst_mu = 0;
      for (int mu = 0; mu < 4; ++mu) {
        const Residual r = residual(pf[mu], m0 * uf[mu], scale);
        if (!(r.rel <= worst.rel)) {
          worst = r;
          worst_mu = mu;
        }
      }
      acc.record(worst, [&] {
        Witness w;
        w.add("m0", m0).add("v_x", v.x()).add("v_y", v.y()).add("v_z", v.z());
        add_frame(w, frame);
        w.add("component", worst_mu).add("p", pf[worst_mu]).add("m0_u", m0 * uf[worst_mu]);
        w.note = worst_mu == 0 ? "E differs from m0 gamma" : "p differs from m0 u";
        return w;
      });
    };
    check(Boostd::identity());
    for (const Boostd& frame : frames) check(frame);
  }
  acc.set_detail("p = m0 u checked per component; E = m0 gamma is the temporal one");
  return acc.finish();
}

double ashby_miller_residual(double n, double beta) {
  const double d = doppler_factor(beta);
  return std::abs(std::pow(d, n - 1.0) - 1.0);
}

TheoremVerdict verify_ashby_miller(double n, std::span<const double> betas, double C,
                                   double omega, double tolerance) {
  if (!(C > 0.0) || !(omega > 0.0)) throw std::domain_error("C and omega must be positive");
  if (betas.empty()) throw std::invalid_argument("no frames to sample");
  VerdictAccumulator acc("ashby-miller", tolerance);
  const double energy = C * std::pow(omega, n);
  const FourVectord p(energy, energy, 0, 0);
  const FourVectord k(omega, omega, 0, 0);
  for (const double beta : betas) {
    const Boostd b = Boostd::along(Axis::x, beta);
    const double e_boosted = boost_x(p, b).t();
    const double w_boosted = boost_x(k, b).t();
    const double predicted = C * std::pow(w_boosted, n);
    acc.record(ratio_residual(predicted, e_boosted), [&] {
      Witness w;
      w.add("n", n).add("beta", beta).add("E_boosted", e_boosted);
      w.add("C_omega_boosted_pow_n", predicted);
      w.note = "E = C omega^n does not hold in the boosted frame";
      return w;
    });
  }
  acc.set_detail("E = C omega^n with n = " + format_number(n, 6) +
                 " checked after Doppler boosts of a photon pair");
  return acc.finish();
}

TheoremVerdict verify_direction_lemma(double omega0, std::span<const Boostd> velocities,
                                      const DirectionLemmaOptions& options) {
  if (!(omega0 > 0.0)) throw std::domain_error("omega0 must be positive");
  if (!(options.m0 > 0.0)) throw std::domain_error("m0 must be positive");
  require_frames(velocities);

  // First spatial index where the signs of p and k disagree (zero counts as
  // its own sign, so p_i = 0 <=> k_i = 0 is covered too).
  auto disagreement = [](const FourVectord& p, const FourVectord& k) -> int {
    for (int i = 1; i < 4; ++i) {
      if (sign_of(p[i]) != sign_of(k[i])) return i;
    }
    return 0;
  };

  VerdictAccumulator acc("lemma", options.tolerance);
  const FourVectord p0(options.m0, 0, 0, 0);
  const FourVectord k0(omega0, options.k0_offset, 0, 0);
  for (const Boostd& v : velocities) {
    const FourVectord p = observed_from(p0, v);
    const FourVectord k = observed_from(k0, v);
    const int bad = disagreement(p, k);
    const double indicator = bad ? 1.0 : 0.0;
    acc.record(Residual{indicator, indicator}, [&] {
      Witness w;
      add_frame(w, v);
      w.add("component", bad).add("p", p[bad]).add("k", k[bad]);
      w.note = "momentum and wave vector point in different directions";
      return w;
    });
  }

  const FourVectord counter_k(omega0, options.counterexample_fraction * omega0, 0, 0);
  std::size_t rejected = disagreement(p0, counter_k) ? 1 : 0;
  for (const Boostd& v : velocities) {
    if (disagreement(observed_from(p0, v), observed_from(counter_k, v))) ++rejected;
  }
  if (rejected == 0) {
    Witness w;
    w.add("k0_x", counter_k.x());
    w.note = "counterexample with k0 != 0 was not rejected in any frame";
    acc.record(Residual{1.0, 1.0}, [&] { return w; });
  }
  acc.set_detail("counterexample with k0_x = " + std::to_string(counter_k.x()) +
                 " rejected in " + std::to_string(rejected) + " of " +
                 std::to_string(velocities.size() + 1) + " frames (rest frame included)");
  return acc.finish();
}

TheoremVerdict verify_theorem_b(double m0, double omega0, std::span<const Boostd> boosts,
                                const TheoremBOptions& options) {
  require_frames(boosts);
  const CaseClass which = classify_case(m0, omega0, options.zero_tolerance);
  VerdictAccumulator acc(std::string("theorem-b/") + to_string(which), options.tolerance);

  switch (which) {
    case CaseClass::case1: {
      const double C = derive_invariant_C(m0, omega0);
      ParticleWavePair<double> start = rest_pair(m0, omega0);
      start.momentum = start.momentum + FourVectord(0, options.momentum_offset, 0, 0);
      for (const Boostd& v : boosts) check_ratios(observed_from(start, v), C, v, acc);
      acc.set_detail("valid: E/omega and p_i/k_i equal C = m0/omega0 in every frame");
      break;
    }
    case CaseClass::case4: {
      const double e = options.light_energy;
      const double w = options.light_frequency;
      if (!(e > 0.0) || !(w > 0.0)) {
        throw std::domain_error("light-like pair needs positive E' and omega'");
      }
      const double C = e / w;
      for (const Boostd& v : boosts) {
        const Vector3<double> n = boost_direction(v);
        ParticleWavePair<double> start{FourVectord(e, Vector3<double>(e * n)),
                                       FourVectord(w, Vector3<double>(w * n))};
        start.momentum = start.momentum + FourVectord(0, options.momentum_offset, 0, 0);
        check_ratios(observed_from(start, v), C, v, acc);
      }
      acc.set_detail(
          "valid: same-sign branch p'_x = E', k'_x = omega'; E/omega and p_i/k_i keep "
          "the value E'/omega' in every frame");
      break;
    }
    case CaseClass::case2:
    case CaseClass::case3: {
      // Case 2 needs a nonzero wave somewhere, case 3 a nonzero energy.
      const bool wave_side = which == CaseClass::case2;
      const FourVectord rest = wave_side ? FourVectord(omega0, 0, 0, 0)
                                         : FourVectord(m0, 0, 0, 0);
      std::size_t satisfying = 0;
      for (const Boostd& v : boosts) {
        const FourVectord seen = observed_from(rest, v);
        const bool ok = seen.t() > options.zero_tolerance;
        if (ok) ++satisfying;
        const double indicator = ok ? 1.0 : 0.0;
        acc.record(Residual{std::abs(seen.t()), indicator}, [&] {
          Witness w;
          add_frame(w, v);
          w.add(wave_side ? "omega" : "E", seen.t());
          w.note = "a finite-gamma frame satisfied the postulates";
          return w;
        });
      }
      acc.set_detail(exclusion_reason(which) + " Frames satisfying the postulates: " +
                     std::to_string(satisfying) + " of " + std::to_string(boosts.size()) +
                     ".");
      break;
    }
  }
  return acc.finish();
}

std::string exclusion_reason(CaseClass which) {
  switch (which) {
    case CaseClass::case2:
      return "excluded: with m0 > 0 and omega0 = 0 every finite-gamma frame has "
             "omega = k = 0, which is no wave; infinite gamma needs v = c and so m0 = 0.";
    case CaseClass::case3:
      return "excluded: with m0 = 0 and omega0 > 0 every finite-gamma frame has E = 0; "
             "finite E needs v = c, and a finite k then forces omega0 = 0.";
    case CaseClass::case1:
    case CaseClass::case4:
      break;
  }
  return {};
}

}  // namespace lorentz_bridge
