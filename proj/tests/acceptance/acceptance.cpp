// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "lorentz_bridge/cli.hpp"
#include "lorentz_bridge/harness.hpp"
#include "lorentz_bridge/kinematics.hpp"
#include "lorentz_bridge/report.hpp"
#include "lorentz_bridge/theorems.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace lorentz_bridge;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& measured) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": " << measured
            << std::endl;
  if (!ok) ++failures;
}

std::string sci(double v) { return format_number(v, 3); }

const TheoremVerdict* find(const VerificationReport& r, const std::string& name) {
  for (const auto& v : r.verdicts) {
    if (v.suite_name == name) return &v;
  }
  return nullptr;
}

/// ok and max residual of a named verdict.
bool verdict_ok(const VerificationReport& r, const std::string& name, std::string& measured) {
  const TheoremVerdict* v = find(r, name);
  if (!v) {
    measured += name + " missing; ";
    return false;
  }
  measured += name + " n=" + std::to_string(v->samples) + " max_rel=" + sci(v->max_rel_residual) +
              (v->pass ? "" : " [" + v->detail + "]") + "; ";
  return v->pass;
}

SamplingSpec base(std::size_t n) {
  SamplingSpec s;
  s.seed = 20240101;
  s.n_samples = n;
  s.beta_max = 0.99;
  s.axes = {Axis::x, Axis::y, Axis::z};
  return s;
}

VerificationReport run_one(const SamplingSpec& spec, Suite suite, RunOptions opt = {}) {
  opt.suites = {suite};
  return run(spec, opt);
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lorentz-bridge");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

std::string drop_wall_time(const std::string& json) {
  std::istringstream in(json);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find("\"wall_time\"") == std::string::npos) out += line + "\n";
  }
  return out;
}

void criterion1() {
  SamplingSpec spec = base(100000);
  spec.mass_range = {1e-3, 1e3};
  spec.invariant_range = Interval{1e-3, 1e3};
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r = run_one(spec, Suite::theorem_a);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string m;
  const bool ok = verdict_ok(r, "theorem-a", m) && secs <= 10.0;
  m += "runtime=" + sci(secs) + " s (massless every 8th sample, C in [1e-3, 1e3])";
  report(1, "p' = C k' for massive and massless pairs", ok, m);
}

void criterion2() {
  const VerificationReport r = run_one(base(100000), Suite::theorem_b);
  std::string m;
  bool ok = verdict_ok(r, "theorem-b/case1", m);
  ok = verdict_ok(r, "theorem-b/case4", m) && ok;
  ok = verdict_ok(r, "theorem-b/case2", m) && ok;
  ok = verdict_ok(r, "theorem-b/case3", m) && ok;
  report(2, "case analysis of E = C omega with p = C k", ok, m);
}

void criterion3() {
  const VerificationReport r = run_one(base(100000), Suite::lemma);
  std::string m;
  bool ok = verdict_ok(r, "lemma", m);
  // At beta = 0 both spatial parts are exactly zero together.
  const auto seen = observed_from(rest_pair(1.0, 1.0), Boostd::along(Axis::x, 0.0));
  const bool exact = seen.momentum.x() == 0.0 && seen.wave.x() == 0.0 &&
                     seen.momentum.spatial().isZero(0.0) && seen.wave.spatial().isZero(0.0);
  const std::vector<Boostd> rest{Boostd::identity()};
  const bool rest_pass = verify_direction_lemma(1.0, rest).pass;
  ok = ok && exact && rest_pass;
  m += std::string("beta=0 exact zero test ") + (exact && rest_pass ? "holds" : "broken");
  report(3, "sign(p_x) = sign(k_x) for boosted rest pairs", ok, m);
}

void criterion4() {
  bool ok = true;
  double worst_linear = 0.0;
  double smallest_other = INFINITY;
  for (const double n : {0.5, 1.0, 1.5, 2.0}) {
    for (const double beta : {-0.9, -0.6, -0.3, 0.3, 0.6, 0.9}) {
      const double r = ashby_miller_residual(n, beta);
      if (n == 1.0) {
        worst_linear = std::max(worst_linear, r);
      } else {
        smallest_other = std::min(smallest_other, r);
      }
    }
  }
  const double cell = ashby_miller_residual(2.0, 0.6);
  ok = worst_linear <= 1e-14 && smallest_other >= 1e-2 && std::abs(cell - 0.5) <= 1e-12;
  std::vector<double> betas{-0.9, -0.6, -0.3, 0.3, 0.6, 0.9};
  const bool verifier_agrees = verify_ashby_miller(1.0, betas).pass &&
                               !verify_ashby_miller(0.5, betas).pass &&
                               !verify_ashby_miller(1.5, betas).pass &&
                               !verify_ashby_miller(2.0, betas).pass;
  ok = ok && verifier_agrees;
  report(4, "E = C omega^n is frame independent only for n = 1", ok,
         "max residual at n=1 " + sci(worst_linear) + ", min residual at n!=1 " +
             sci(smallest_other) + ", cell(beta=0.6, n=2) " + format_number(cell, 17));
}

void criterion5() {
  const VerificationReport r = run_one(base(1000000), Suite::kinematics);
  std::string m;
  bool ok = verdict_ok(r, "kinematics/mass-shell", m);
  ok = verdict_ok(r, "kinematics/wave-shell", m) && ok;
  SamplingSpec stress = base(1000000);
  stress.profile = Profile::stress;
  stress.beta_max = stress_beta_max;
  const VerificationReport s = run_one(stress, Suite::kinematics);
  m += "stress: ";
  ok = verdict_ok(s, "kinematics/mass-shell", m) && ok;
  ok = verdict_ok(s, "kinematics/wave-shell", m) && ok;
  report(5, "mass and wave shells preserved", ok, m);
}

void criterion6() {
  SamplingSpec spec = base(1000);
  SampleStream stream(spec, 9001);
  std::vector<double> times(1000);
  for (double& t : times) t = stream.uniform(0.0, 100.0);
  times.front() = 0.0;
  times.back() = 100.0;
  double worst = 0.0;
  for (const double nu0 : {1.0, 10.0}) {
    for (const double beta : {0.3, 0.6, 0.9}) {
      worst = std::max(worst, phase_harmony_check(nu0, beta, std::span<const double>(times)));
    }
  }
  report(6, "internal clock stays in phase with the wave", worst <= 1e-12,
         "max mismatch " + sci(worst) + " over 6 (nu0, beta) cells x 1000 times");
}

void criterion7() {
  const VerificationReport r = run_one(base(10000), Suite::kinematics);
  std::string m;
  bool ok = verdict_ok(r, "kinematics/phase-velocity-product", m);
  ok = verdict_ok(r, "kinematics/rest-wave-velocity", m) && ok;
  report(7, "v_p v_g = 1 and the rest-wave velocity", ok, m);
}

void criterion8() {
  RunOptions opt;
  opt.perturbation = 1e-6;
  opt.suites = {Suite::theorem_a, Suite::theorem_b, Suite::lemma, Suite::einstein,
                Suite::proportionality};
  const VerificationReport r = run(base(2000), opt);
  bool ok = true;
  std::string m;
  for (const auto& v : r.verdicts) {
    // Theorem-b exclusion verdicts have no pair to perturb.
    if (v.suite_name == "theorem-b/case2" || v.suite_name == "theorem-b/case3") continue;
    const bool caught = !v.pass && v.witness.has_value();
    ok = ok && caught;
    m += v.suite_name + (caught ? " caught; " : " MISSED; ");
  }
  const int am = cli({"verify", "--suite", "ashby-miller", "--exponent", "2"}).code;
  const int ta = cli({"verify", "--suite", "theorem-a", "--perturb", "1e-6"}).code;
  ok = ok && am == 1 && ta == 1;
  m += "cli exit codes " + std::to_string(am) + "," + std::to_string(ta);
  report(8, "negative controls fail with a witness", ok, m);
}

void criterion9() {
  const std::vector<std::string> args{"verify", "--seed", "7", "--samples", "2000"};
  const CliRun a = cli(args);
  const CliRun b = cli(args);
  const bool same = drop_wall_time(a.out) == drop_wall_time(b.out);
  const bool nonempty = a.out.find("\"verdicts\"") != std::string::npos;
  report(9, "identical seeds give identical reports", same && nonempty && a.code == 0,
         std::to_string(a.out.size()) + " bytes, " + (same ? "byte-identical" : "differ") +
             " apart from wall_time");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
