#include "lorentz_bridge/harness.hpp"
#include "lorentz_bridge/report.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>

using namespace lorentz_bridge;

namespace {

SamplingSpec small_spec(std::uint64_t seed = 42) {
  SamplingSpec s;
  s.seed = seed;
  s.n_samples = 300;
  return s;
}

std::string without_wall_time(const VerificationReport& r) {
  auto j = nlohmann::json::parse(to_json(r));
  j.erase("wall_time");
  return j.dump();
}

}  // namespace

TEST(Stream, SameSeedSameValues) {
  const SamplingSpec spec = small_spec();
  SampleStream a(spec, 3), b(spec, 3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.unit(), b.unit());
}

TEST(Stream, DistinctStreamsDiffer) {
  const SamplingSpec spec = small_spec();
  SampleStream a(spec, 3), b(spec, 4);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += a.unit() == b.unit();
  EXPECT_LT(same, 2);
}

TEST(Stream, Ranges) {
  SamplingSpec spec = small_spec();
  spec.beta_max = 0.5;
  spec.axes = {Axis::y};
  SampleStream s(spec, 0);
  for (int i = 0; i < 2000; ++i) {
    const double u = s.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LE(std::abs(s.beta()), 0.5);
    EXPECT_EQ(s.axis(), Axis::y);
    const double m = s.mass();
    EXPECT_GE(m, 1e-3 * (1 - 1e-12));
    EXPECT_LE(m, 1e3 * (1 + 1e-12));
    EXPECT_LT(s.velocity().norm(), 0.5 + 1e-15);
    EXPECT_LT(s.index(7), 7u);
  }
}

TEST(Stream, RapiditySamplingStaysInside) {
  SamplingSpec spec = small_spec();
  spec.sampling = BetaSampling::uniform_rapidity;
  spec.beta_max = stress_beta_max;
  SampleStream s(spec, 0);
  for (int i = 0; i < 2000; ++i) EXPECT_LT(std::abs(s.beta()), 1.0);
}

TEST(Stream, InvariantFallback) {
  SamplingSpec spec = small_spec();
  SampleStream s(spec, 0);
  EXPECT_EQ(s.invariant(2.5), 2.5);
  spec.invariant_range = Interval{1e-3, 1e3};
  SampleStream t(spec, 0);
  const double c = t.invariant(2.5);
  EXPECT_GE(c, 1e-3 * (1 - 1e-12));
  EXPECT_LE(c, 1e3 * (1 + 1e-12));
}

TEST(Spec, Validation) {
  SamplingSpec s = small_spec();
  EXPECT_NO_THROW(s.validate());
  s.beta_max = 1.0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = small_spec();
  s.n_samples = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = small_spec();
  s.mass_range = {5, 1};
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = small_spec();
  s.axes.clear();
  EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(SuiteNames, RoundTrip) {
  for (const Suite s : all_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_FALSE(parse_suite("nope").has_value());
}

TEST(Run, AllSuitesPass) {
  const VerificationReport r = run_all(small_spec(), 1.0, default_tolerance);
  EXPECT_TRUE(r.overall_pass);
  for (const auto& v : r.verdicts) EXPECT_TRUE(v.pass) << v.suite_name << " " << v.detail;
  EXPECT_EQ(r.version, artifact_version());
}

TEST(Run, ConjunctionLaw) {
  VerificationReport r = run_all(small_spec(), 1.0, default_tolerance);
  refresh_overall(r);
  EXPECT_TRUE(r.overall_pass);
  r.verdicts[2].pass = false;
  refresh_overall(r);
  EXPECT_FALSE(r.overall_pass);
  r.verdicts.clear();
  refresh_overall(r);
  EXPECT_TRUE(r.overall_pass);
}

TEST(Run, Deterministic) {
  const VerificationReport a = run_all(small_spec(7), 1.0, default_tolerance);
  const VerificationReport b = run_all(small_spec(7), 1.0, default_tolerance);
  EXPECT_EQ(without_wall_time(a), without_wall_time(b));
  const VerificationReport c = run_all(small_spec(8), 1.0, default_tolerance);
  EXPECT_NE(without_wall_time(a), without_wall_time(c));
}

TEST(Run, PerturbationFailsEveryPairSuite) {
  RunOptions opt;
  opt.perturbation = 1e-6;
  opt.suites = {Suite::theorem_a, Suite::proportionality, Suite::einstein, Suite::lemma};
  const VerificationReport r = run(small_spec(), opt);
  EXPECT_FALSE(r.overall_pass);
  for (const auto& v : r.verdicts) {
    EXPECT_FALSE(v.pass) << v.suite_name;
    EXPECT_TRUE(v.witness.has_value()) << v.suite_name;
  }
  opt.suites = {Suite::theorem_b};
  const VerificationReport b = run(small_spec(), opt);
  EXPECT_FALSE(b.verdicts.at(0).pass);
  EXPECT_TRUE(b.verdicts.at(0).witness.has_value());
}

TEST(Run, NonLinearExponentFails) {
  RunOptions opt;
  opt.exponent = 2.0;
  opt.suites = {Suite::ashby_miller};
  const VerificationReport r = run(small_spec(), opt);
  EXPECT_FALSE(r.overall_pass);
  EXPECT_TRUE(r.verdicts.at(0).witness.has_value());
}

TEST(Run, StressProfile) {
  SamplingSpec spec = small_spec();
  spec.profile = Profile::stress;
  spec.beta_max = stress_beta_max;
  RunOptions opt;
  opt.suites = {Suite::kinematics};
  EXPECT_TRUE(run(spec, opt).overall_pass);
}

TEST(Report, JsonShape) {
  const VerificationReport r = run_all(small_spec(), 1.0, default_tolerance);
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["config"]["seed"], 42);
  EXPECT_EQ(j["config"]["n_samples"], 300);
  EXPECT_TRUE(j["overall_pass"].get<bool>());
  ASSERT_EQ(j["verdicts"].size(), r.verdicts.size());
  for (const auto& v : j["verdicts"]) {
    EXPECT_TRUE(v.contains("suite_name"));
    EXPECT_TRUE(v.contains("max_rel_residual"));
    EXPECT_TRUE(v["witness"].is_null());
  }
  EXPECT_DOUBLE_EQ(j["config"]["beta_max"].get<double>(), 0.99);
}

TEST(Report, NumberFormatting) {
  EXPECT_EQ(format_number(0.1, 17), "0.10000000000000001");
  EXPECT_EQ(format_number(1.25, 6), "1.25");
  EXPECT_EQ(format_number(-0.0, 6), "0");
  EXPECT_EQ(format_number(INFINITY, 6), "inf");
}
