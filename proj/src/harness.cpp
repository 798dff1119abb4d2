#include "lorentz_bridge/harness.hpp"

#include "lorentz_bridge/report.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <span>
#include <stdexcept>

#ifndef LORENTZ_BRIDGE_VERSION
#define LORENTZ_BRIDGE_VERSION "0.0.0"
#endif

namespace lorentz_bridge {

namespace {

void check_interval(const Interval& range, const char* name) {
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || !(range.lo > 0.0) ||
      range.lo > range.hi) {
    throw std::invalid_argument(std::string(name) + " must be a non-empty positive interval");
  }
}

std::span<const Boostd> one(const Boostd& b) { return {&b, 1}; }

Vector3<double> unit_along(Axis a) { return Vector3<double>::Unit(index_of(a)); }

FourVectord random_four_vector(SampleStream& s, double bound) {
  Vector4<double> c;
  for (int i = 0; i < 4; ++i) c[i] = s.uniform(-bound, bound);
  return FourVectord(c);
}

/// Under the stress profile residuals are measured against gamma^2 times
/// the usual scale.
double stress_relief(const SamplingSpec& spec, double gamma) {
  return spec.profile == Profile::stress ? gamma * gamma : 1.0;
}

/// Stream ids: one block of 16 per suite.
std::uint64_t stream_id(Suite suite, int sub = 0) {
  return static_cast<std::uint64_t>(suite) * 16 + static_cast<std::uint64_t>(sub);
}

void tag_sample(TheoremVerdict& v, std::size_t i) {
  if (!v.pass && v.witness) v.witness->add("sample", static_cast<double>(i));
}

TheoremVerdict theorem_a_suite(const SamplingSpec& spec, const RunOptions& opt) {
  SampleStream s(spec, stream_id(Suite::theorem_a));
  VerdictAccumulator acc("theorem-a", opt.tolerance);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    const double C = s.invariant(opt.C);
    ParticleWavePair<double> start;
    double m0 = 0.0;
    if (s.index(8) == 0) {
      const double e = s.mass();
      const double sign = s.index(2) ? 1.0 : -1.0;
      const Vector3<double> n = sign * unit_along(s.axis());
      start = {FourVectord(e, Vector3<double>(e * n)),
               FourVectord(e / C, Vector3<double>((e / C) * n))};
    } else {
      m0 = s.mass();
      start = observed_from(rest_pair(m0, m0 / C), s.boost());
    }
    if (opt.perturbation != 0.0) {
      start.momentum = start.momentum + FourVectord(0, opt.perturbation, 0, 0);
    }
    const Boostd frame = s.boost();
    TheoremVerdict v = verify_theorem_a(start, C, one(frame), opt.tolerance);
    if (!v.pass && v.witness) v.witness->add("m0", m0);
    tag_sample(v, i);
    acc.merge(v);
  }
  acc.set_detail("E' = C omega' imposed in every frame; p' = C k' checked per component "
                 "over all three axes; one sample in eight is massless");
  return acc.finish();
}

std::vector<TheoremVerdict> theorem_b_suite(const SamplingSpec& spec, const RunOptions& opt) {
  std::vector<TheoremVerdict> out;
  TheoremBOptions bopt;
  bopt.tolerance = opt.tolerance;
  bopt.momentum_offset = opt.perturbation;

  {
    SampleStream s(spec, stream_id(Suite::theorem_b, 1));
    VerdictAccumulator acc("theorem-b/case1", opt.tolerance);
    for (std::size_t i = 0; i < spec.n_samples; ++i) {
      const double m0 = s.mass();
      const double w0 = s.omega0();
      const Boostd v = s.boost();
      TheoremVerdict r = verify_theorem_b(m0, w0, one(v), bopt);
      if (!r.pass && r.witness) r.witness->add("m0", m0).add("omega0", w0);
      tag_sample(r, i);
      acc.merge(r);
    }
    acc.set_detail("valid: E/omega and p_i/k_i equal C = m0/omega0 in every frame");
    out.push_back(acc.finish());
  }
  for (const CaseClass excluded : {CaseClass::case2, CaseClass::case3}) {
    const bool wave_side = excluded == CaseClass::case2;
    SampleStream s(spec, stream_id(Suite::theorem_b, wave_side ? 2 : 3));
    VerdictAccumulator acc(std::string("theorem-b/") + to_string(excluded), opt.tolerance);
    std::size_t satisfying = 0;
    for (std::size_t i = 0; i < spec.n_samples; ++i) {
      const double m0 = wave_side ? s.mass() : 0.0;
      const double w0 = wave_side ? 0.0 : s.omega0();
      const Boostd v = s.boost();
      TheoremVerdict r = verify_theorem_b(m0, w0, one(v), bopt);
      if (!r.pass) ++satisfying;
      tag_sample(r, i);
      acc.merge(r);
    }
    acc.set_detail(exclusion_reason(excluded) + " Frames satisfying the postulates: " +
                   std::to_string(satisfying) + " of " + std::to_string(spec.n_samples) +
                   ".");
    out.push_back(acc.finish());
  }
  {
    SampleStream s(spec, stream_id(Suite::theorem_b, 4));
    VerdictAccumulator acc("theorem-b/case4", opt.tolerance);
    for (std::size_t i = 0; i < spec.n_samples; ++i) {
      TheoremBOptions light = bopt;
      light.light_energy = s.mass();
      light.light_frequency = s.omega0();
      const Boostd v = s.boost();
      TheoremVerdict r = verify_theorem_b(0.0, 0.0, one(v), light);
      tag_sample(r, i);
      acc.merge(r);
    }
    acc.set_detail("valid: same-sign branch p'_x = E', k'_x = omega'; E/omega and "
                   "p_i/k_i keep the value E'/omega' in every frame");
    out.push_back(acc.finish());
  }
  return out;
}

TheoremVerdict lemma_suite(const SamplingSpec& spec, const RunOptions& opt) {
  SampleStream s(spec, stream_id(Suite::lemma));
  VerdictAccumulator acc("lemma", opt.tolerance);
  DirectionLemmaOptions lopt;
  lopt.tolerance = opt.tolerance;
  lopt.k0_offset = opt.perturbation;
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    lopt.m0 = s.mass();
    const double w0 = s.omega0();
    // Alternate axis-aligned and oblique velocities.
    const Boostd v = (i % 2 == 0) ? s.boost() : Boostd::from_velocity(s.velocity());
    TheoremVerdict r = verify_direction_lemma(w0, one(v), lopt);
    tag_sample(r, i);
    acc.merge(r);
  }
  acc.set_detail("sign(p_i) = sign(k_i) and p_i = 0 <=> k_i = 0 for boosted rest pairs; "
                 "a k0 != 0 counterexample is rejected for every sample");
  return acc.finish();
}

TheoremVerdict ashby_miller_suite(const SamplingSpec& spec, const RunOptions& opt) {
  SampleStream s(spec, stream_id(Suite::ashby_miller));
  VerdictAccumulator acc("ashby-miller", opt.tolerance);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    const double C = s.invariant(opt.C);
    const double w = s.omega0();
    const double beta = s.beta();
    TheoremVerdict r = verify_ashby_miller(opt.exponent, std::span<const double>(&beta, 1), C,
                                           w, opt.tolerance);
    tag_sample(r, i);
    acc.merge(r);
  }
  acc.set_detail("E = C omega^n with n = " + format_number(opt.exponent, 6) +
                 " checked after Doppler boosts of photon pairs");
  return acc.finish();
}

TheoremVerdict einstein_suite(const SamplingSpec& spec, const RunOptions& opt) {
  SampleStream s(spec, stream_id(Suite::einstein));
  VerdictAccumulator acc("einstein", opt.tolerance);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    const double m0 = s.mass();
    const Vector3<double> v = s.velocity();
    const Boostd frame = s.boost();
    TheoremVerdict r = verify_einstein_energy(m0, std::span<const Vector3<double>>(&v, 1),
                                              one(frame), opt.tolerance, opt.perturbation);
    const double relief = std::max(stress_relief(spec, Boostd::from_velocity(v).gamma()),
                                   stress_relief(spec, frame.gamma()));
    r.max_rel_residual /= relief;
    r.pass = r.max_rel_residual <= opt.tolerance;
    tag_sample(r, i);
    acc.merge(r);
  }
  acc.set_detail(std::string("p = m0 u in the start frame and a boosted frame; E = m0 gamma") +
                 (spec.profile == Profile::stress ? " (stress profile: residuals divided by gamma^2)"
                                                  : ""));
  return acc.finish();
}

TheoremVerdict proportionality_suite(const SamplingSpec& spec, const RunOptions& opt) {
  SampleStream s(spec, stream_id(Suite::proportionality));
  VerdictAccumulator acc("proportionality", opt.tolerance);
  for (std::size_t i = 0; i < spec.n_samples; ++i) {
    const double C = s.invariant(opt.C);
    const double w0 = s.omega0();
    const Boostd v = s.boost();
    const FourVectord b = observed_from(FourVectord(w0, 0, 0, 0), v);
    FourVectord a = observed_from(FourVectord(C * w0, 0, 0, 0), v);
    if (opt.perturbation != 0.0) a = a + FourVectord(0, opt.perturbation, 0, 0);
    const Boostd frame = s.boost();
    TheoremVerdict r = verify_proportionality(a, b, C, one(frame), opt.tolerance);
    tag_sample(r, i);
    acc.merge(r);
  }
  acc.set_detail("a0 = C b0 <=> a_s = C b_s checked in every frame");
  return acc.finish();
}

std::vector<TheoremVerdict> kinematics_suite(const SamplingSpec& spec, const RunOptions& opt) {
  std::vector<TheoremVerdict> out;
  const std::size_t n = spec.n_samples;
  const double tol = opt.tolerance;
  const std::string stress_note =
      spec.profile == Profile::stress ? " (stress profile: residuals divided by gamma^2)" : "";

  {
    SampleStream s(spec, stream_id(Suite::kinematics, 0));
    VerdictAccumulator acc("kinematics/mass-shell", tol);
    for (std::size_t i = 0; i < n; ++i) {
      const double m0 = s.mass();
      const FourVectord p = four_momentum(ParticleState<double>(m0, s.velocity()));
      const Boostd b = s.boost();
      const double after = minkowski_norm_sq(boost(p, b));
      Residual r = residual(after, m0 * m0, norm_tolerance_scale(p, b));
      r.rel /= stress_relief(spec, b.gamma());
      acc.record(r, [&] {
        return Witness{{{"m0", m0}, {"norm_sq", after}, {"gamma", b.gamma()},
                        {"sample", double(i)}},
                       "E'^2 - p'^2 differs from m0^2"};
      });
    }
    acc.set_detail("E'^2 - |p'|^2 = m0^2 under random boosts" + stress_note);
    out.push_back(acc.finish());
  }
  {
    SampleStream s(spec, stream_id(Suite::kinematics, 1));
    VerdictAccumulator acc("kinematics/wave-shell", tol);
    for (std::size_t i = 0; i < n; ++i) {
      const double w0 = s.omega0();
      const FourVectord k =
          observed_from(FourVectord(w0, 0, 0, 0), Boostd::from_velocity(s.velocity()));
      const Boostd b = s.boost();
      const double after = minkowski_norm_sq(boost(k, b));
      Residual r = residual(after, w0 * w0, norm_tolerance_scale(k, b));
      r.rel /= stress_relief(spec, b.gamma());
      acc.record(r, [&] {
        return Witness{{{"omega0", w0}, {"norm_sq", after}, {"gamma", b.gamma()},
                        {"sample", double(i)}},
                       "omega'^2 - k'^2 differs from omega0^2"};
      });
    }
    acc.set_detail("omega'^2 - |k'|^2 = omega0^2 under random boosts" + stress_note);
    out.push_back(acc.finish());
  }
  {
    SampleStream s(spec, stream_id(Suite::kinematics, 2));
    VerdictAccumulator acc("kinematics/boost-roundtrip", tol);
    const double span_hi = spec.mass_range.hi;
    for (std::size_t i = 0; i < n; ++i) {
      const FourVectord v = random_four_vector(s, span_hi);
      const Boostd b = s.boost();
      const FourVectord back = boost(boost(v, b), b.inverse());
      const double g = b.gamma();
      const double diff = (back.components() - v.components()).cwiseAbs().maxCoeff();
      Residual r = residual(diff, 0.0, g * g * v.max_abs());
      r.rel /= stress_relief(spec, g);
      acc.record(r, [&] {
        return Witness{{{"gamma", g}, {"max_component_error", diff}, {"sample", double(i)}},
                       "boost followed by its inverse did not return the input"};
      });
    }
    acc.set_detail("boost(-beta) after boost(beta) is the identity" + stress_note);
    out.push_back(acc.finish());
  }
  {
    SampleStream s(spec, stream_id(Suite::kinematics, 3));
    VerdictAccumulator acc("kinematics/rapidity-composition", tol);
    const double span_hi = spec.mass_range.hi;
    for (std::size_t i = 0; i < n; ++i) {
      const FourVectord v = random_four_vector(s, span_hi);
      const Axis a = s.axis();
      const Boostd b1 = Boostd::along(a, s.beta());
      const Boostd b2 = Boostd::along(a, s.beta());
      const FourVectord sequential = boost(boost(v, b1), b2);
      const FourVectord composed = boost(v, compose_rapidity(b1, b2));
      const double g = b1.gamma() * b2.gamma();
      const double diff =
          (sequential.components() - composed.components()).cwiseAbs().maxCoeff();
      Residual r = residual(diff, 0.0, g * v.max_abs());
      r.rel /= stress_relief(spec, g);
      acc.record(r, [&] {
        return Witness{{{"beta_1", b1.speed()}, {"beta_2", b2.speed()},
                        {"max_component_error", diff}, {"sample", double(i)}},
                       "composed rapidity disagrees with sequential boosts"};
      });
    }
    acc.set_detail("collinear rapidities add" + stress_note);
    out.push_back(acc.finish());
  }
  {
    SampleStream s(spec, stream_id(Suite::kinematics, 4));
    VerdictAccumulator acc("kinematics/doppler", tol);
    for (std::size_t i = 0; i < n; ++i) {
      const double e = s.mass();
      const Axis a = s.axis();
      const double beta = s.beta();
      const FourVectord light(e, Vector3<double>(e * unit_along(a)));
      const FourVectord seen = boost_axis(light, a, Boostd::along(a, beta));
      const double d = doppler_factor(beta);
      const Residual rt = residual(seen.t(), d * e);
      const Residual rs = residual(seen.spatial(a), d * e);
      Residual r = rt.rel >= rs.rel ? rt : rs;
      r.rel /= stress_relief(spec, lorentz_factor(beta));
      acc.record(r, [&] {
        return Witness{{{"beta", beta}, {"E", e}, {"E_boosted", seen.t()},
                        {"p_boosted", seen.spatial(a)}, {"sample", double(i)}},
                       "light-like components did not scale by the Doppler factor"};
      });
    }
    acc.set_detail("boosting a light-like vector along its axis scales E and p by "
                   "sqrt((1-beta)/(1+beta))" + stress_note);
    out.push_back(acc.finish());
  }
  {
    SampleStream s(spec, stream_id(Suite::kinematics, 5));
    VerdictAccumulator acc("kinematics/phase-velocity-product", tol);
    for (std::size_t i = 0; i < n; ++i) {
      auto draw = [&]() -> WaveStated {
        if (s.index(8) == 0) {
          const double omega = s.omega0();
          return WaveStated(omega, Vector3<double>(omega * unit_along(s.axis())));
        }
        const double w0 = s.omega0();
        return WaveStated::from_four_vector(
            observed_from(FourVectord(w0, 0, 0, 0), Boostd::from_velocity(s.velocity())));
      };
      const WaveStated w = draw();
      if (w.k_norm() == 0.0) {
        acc.record(Residual{0.0, 0.0});
        continue;
      }
      const double product = phase_velocity(w) * group_velocity(w);
      acc.record(residual(product, 1.0), [&] {
        return Witness{{{"omega", w.omega()}, {"k", w.k_norm()}, {"vp_vg", product},
                        {"sample", double(i)}},
                       "v_p v_g differs from 1"};
      });
    }
    acc.set_detail("v_p v_g = 1 for every wave state with |k| > 0");
    out.push_back(acc.finish());
  }
  {
    SampleStream s(spec, stream_id(Suite::kinematics, 6));
    VerdictAccumulator acc("kinematics/rest-wave-velocity", tol);
    for (std::size_t i = 0; i < n; ++i) {
      const double w0 = s.omega0();
      const Vector3<double> v = s.velocity();
      const WaveStated w = WaveStated::from_four_vector(
          observed_from(FourVectord(w0, 0, 0, 0), Boostd::from_velocity(v)));
      const Vector3<double> recovered = rest_wave_velocity(w);
      const double diff = (recovered - v).cwiseAbs().maxCoeff();
      acc.record(residual(diff, 0.0), [&] {
        return Witness{{{"v_x", v.x()}, {"v_y", v.y()}, {"v_z", v.z()},
                        {"error", diff}, {"sample", double(i)}},
                       "rest-wave velocity does not match the generating velocity"};
      });
    }
    acc.set_detail("k/omega recovers the velocity that produced the wave");
    out.push_back(acc.finish());
  }
  {
    SampleStream s(spec, stream_id(Suite::kinematics, 7));
    VerdictAccumulator acc("kinematics/phase-harmony", tol);
    std::array<double, 10> times{};
    for (std::size_t i = 0; i < n; ++i) {
      const double nu0 = (i % 2 == 0) ? 1.0 : 10.0;
      double beta = s.beta();
      if (beta == 0.0) beta = spec.beta_max > 0.0 ? spec.beta_max : 0.5;
      for (double& t : times) t = s.uniform(0.0, 100.0);
      const double mismatch = phase_harmony_check(nu0, beta, std::span<const double>(times));
      const double rel = mismatch / stress_relief(spec, lorentz_factor(beta));
      acc.record(Residual{mismatch, rel}, [&] {
        return Witness{{{"nu0", nu0}, {"beta", beta}, {"sample", double(i)}},
                       "internal clock and wave fell out of phase"};
      });
    }
    acc.set_detail("particle clock stays in phase with its wave; mismatch relative to "
                   "max(1, |phase|)" + stress_note);
    out.push_back(acc.finish());
  }
  return out;
}

TheoremVerdict error_verdict(const char* name, double tolerance, const std::exception& e) {
  TheoremVerdict v;
  v.suite_name = name;
  v.tolerance = tolerance;
  v.max_abs_residual = INFINITY;
  v.max_rel_residual = INFINITY;
  v.pass = false;
  v.detail = std::string("error: ") + e.what();
  v.witness = Witness{{}, v.detail};
  return v;
}

}  // namespace

void SamplingSpec::validate() const {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  if (!(beta_max >= 0.0) || !(beta_max < 1.0)) {
    throw std::invalid_argument("beta_max must lie in [0, 1)");
  }
  check_interval(mass_range, "mass_range");
  check_interval(omega0_range, "omega0_range");
  if (invariant_range) check_interval(*invariant_range, "invariant_range");
  if (axes.empty()) throw std::invalid_argument("at least one axis is required");
}

SampleStream::SampleStream(const SamplingSpec& spec, std::uint64_t stream_id)
    : spec_(&spec) {
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                    static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  engine_.seed(seq);
}

double SampleStream::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SampleStream::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

double SampleStream::log_uniform(const Interval& range) {
  return std::exp(uniform(std::log(range.lo), std::log(range.hi)));
}

std::size_t SampleStream::index(std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(unit() * static_cast<double>(n)));
}

double SampleStream::beta() {
  const double cap = spec_->beta_max;
  if (cap == 0.0) return 0.0;
  if (spec_->sampling == BetaSampling::uniform_rapidity) {
    const double phi_max = std::atanh(cap);
    return std::tanh(uniform(-phi_max, phi_max));
  }
  return uniform(-cap, cap);
}

Axis SampleStream::axis() { return spec_->axes[index(spec_->axes.size())]; }

Boostd SampleStream::boost() {
  const Axis a = axis();
  return Boostd::along(a, beta());
}

Vector3<double> SampleStream::velocity() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt((1.0 - z) * (1.0 + z));
  const double speed = std::abs(beta());
  return speed * Vector3<double>(r * std::cos(phi), r * std::sin(phi), z);
}

double SampleStream::mass() { return uniform(spec_->mass_range.lo, spec_->mass_range.hi); }

double SampleStream::omega0() {
  return uniform(spec_->omega0_range.lo, spec_->omega0_range.hi);
}

double SampleStream::invariant(double fallback) {
  return spec_->invariant_range ? log_uniform(*spec_->invariant_range) : fallback;
}

std::pair<ParticleState<double>, WaveStated> SampleStream::case1_pair() {
  const double m0 = mass();
  const double w0 = omega0();
  const Boostd v = boost();
  const FourVectord k = observed_from(FourVectord(w0, 0, 0, 0), v);
  return {ParticleState<double>(m0, v.beta()), WaveStated::from_four_vector(k)};
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::theorem_a: return "theorem-a";
    case Suite::theorem_b: return "theorem-b";
    case Suite::lemma: return "lemma";
    case Suite::ashby_miller: return "ashby-miller";
    case Suite::einstein: return "einstein";
    case Suite::proportionality: return "proportionality";
    case Suite::kinematics: return "kinematics";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (const Suite s : all_suites()) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  return {Suite::theorem_a, Suite::theorem_b,       Suite::lemma,     Suite::ashby_miller,
          Suite::einstein,  Suite::proportionality, Suite::kinematics};
}

const char* artifact_version() { return LORENTZ_BRIDGE_VERSION; }

std::vector<TheoremVerdict> run_suite(Suite suite, const SamplingSpec& spec,
                                      const RunOptions& options) {
  try {
    switch (suite) {
      case Suite::theorem_a: return {theorem_a_suite(spec, options)};
      case Suite::theorem_b: return theorem_b_suite(spec, options);
      case Suite::lemma: return {lemma_suite(spec, options)};
      case Suite::ashby_miller: return {ashby_miller_suite(spec, options)};
      case Suite::einstein: return {einstein_suite(spec, options)};
      case Suite::proportionality: return {proportionality_suite(spec, options)};
      case Suite::kinematics: return kinematics_suite(spec, options);
    }
  } catch (const std::exception& e) {
    return {error_verdict(to_string(suite), options.tolerance, e)};
  }
  return {};
}

void refresh_overall(VerificationReport& report) {
  report.overall_pass =
      std::all_of(report.verdicts.begin(), report.verdicts.end(),
                  [](const TheoremVerdict& v) { return v.pass; });
}

VerificationReport run(const SamplingSpec& spec, const RunOptions& options) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.version = artifact_version();
  report.config = spec;
  report.options = options;
  for (const Suite suite : options.suites) {
    auto verdicts = run_suite(suite, spec, options);
    report.verdicts.insert(report.verdicts.end(), verdicts.begin(), verdicts.end());
  }
  refresh_overall(report);
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport run_all(const SamplingSpec& spec, double C, double tolerance) {
  RunOptions options;
  options.C = C;
  options.tolerance = tolerance;
  return run(spec, options);
}

}  // namespace lorentz_bridge
