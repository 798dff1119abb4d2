#include "lorentz_bridge/minkowski.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace lorentz_bridge;

namespace {

void expect_close(const FourVectord& v, const std::array<oracle::real, 4>& want,
                  double tol = 1e-15) {
  for (int i = 0; i < 4; ++i) {
    const double w = oracle::to_double(want[i]);
    EXPECT_NEAR(v[i], w, tol * std::max(1.0, std::abs(w))) << "component " << i;
  }
}

using R = oracle::real;

}  // namespace

TEST(FourVector, RejectsNonFinite) {
  EXPECT_THROW(FourVectord(NAN, 0, 0, 0), std::domain_error);
  EXPECT_THROW(FourVectord(0, INFINITY, 0, 0), std::domain_error);
}

TEST(FourVector, Arithmetic) {
  const FourVectord a(1, 2, 3, 4), b(0.5, 0.5, 0.5, 0.5);
  EXPECT_EQ(a + b, FourVectord(1.5, 2.5, 3.5, 4.5));
  EXPECT_EQ(a - b, FourVectord(0.5, 1.5, 2.5, 3.5));
  EXPECT_EQ(2.0 * a, FourVectord(2, 4, 6, 8));
  EXPECT_EQ(a.spatial(Axis::y), 3);
  EXPECT_EQ(a.max_abs(), 4);
}

TEST(Minkowski, DotAndNorm) {
  EXPECT_EQ(minkowski_norm_sq(FourVectord(1, 0, 0, 0)), 1);
  EXPECT_EQ(minkowski_norm_sq(FourVectord(1, 1, 0, 0)), 0);
  const double n = minkowski_norm_sq(FourVectord(1.25, 0.75, 0, 0));
  EXPECT_NEAR(n, oracle::to_double(oracle::norm_sq({R("1.25"), R("0.75"), 0, 0})), 1e-15);
  EXPECT_EQ(minkowski_dot(FourVectord(2, 1, 0, 0), FourVectord(3, 0, 1, 0)), 6);
}

TEST(Minkowski, LorentzFactor) {
  EXPECT_NEAR(lorentz_factor(0.6), oracle::to_double(oracle::gamma(R("0.6"))), 1e-15);
  EXPECT_NEAR(lorentz_factor(0.8), oracle::to_double(oracle::gamma(R("0.8"))), 1e-15);
  EXPECT_EQ(lorentz_factor(0.0), 1.0);
  EXPECT_THROW(lorentz_factor(1.0), std::domain_error);
  EXPECT_THROW(lorentz_factor(-1.0), std::domain_error);
  EXPECT_THROW(lorentz_factor(NAN), std::domain_error);
}

TEST(Boost, XAtZeroIsIdentity) {
  const FourVectord v(1, 0, 0, 0);
  EXPECT_EQ(boost_x(v, Boostd::along(Axis::x, 0.0)), v);
}

TEST(Boost, XAtPointSix) {
  expect_close(boost_x(FourVectord(1, 0, 0, 0), Boostd::along(Axis::x, 0.6)),
               oracle::boost({1, 0, 0, 0}, 1, R("0.6")));
  const FourVectord b = boost_x(FourVectord(1, 0, 0, 0), Boostd::along(Axis::x, 0.6));
  EXPECT_NEAR(b.t(), 1.25, 1e-15);
  EXPECT_NEAR(b.x(), -0.75, 1e-15);
}

TEST(Boost, LightLikeScalesByDoppler) {
  const FourVectord b = boost_x(FourVectord(1, 1, 0, 0), Boostd::along(Axis::x, 0.6));
  expect_close(b, oracle::boost({1, 1, 0, 0}, 1, R("0.6")));
  EXPECT_NEAR(b.t(), oracle::to_double(oracle::doppler(R("0.6"))), 1e-15);
}

TEST(Boost, AlongYAndZ) {
  expect_close(boost_axis(FourVectord(1, 0, 0, 0), Axis::y, Boostd::along(Axis::y, 0.6)),
               oracle::boost({1, 0, 0, 0}, 2, R("0.6")));
  const FourVectord z =
      boost_axis(FourVectord(2.5, 1.5, 0, 0), Axis::z, Boostd::along(Axis::z, 0.8));
  expect_close(z, {R(25) / 6, R("1.5"), 0, R(-10) / 3});
  expect_close(z, oracle::boost({R("2.5"), R("1.5"), 0, 0}, 3, R("0.8")));
}

TEST(Boost, RejectsSuperluminal) {
  EXPECT_THROW(Boostd::along(Axis::x, 1.0), std::domain_error);
  EXPECT_THROW(Boostd::along(Axis::x, -1.5), std::domain_error);
  EXPECT_THROW(Boostd::from_velocity(Vector3<double>(0.8, 0.8, 0)), std::domain_error);
}

TEST(Boost, AxisMismatchRejected) {
  EXPECT_THROW(boost_axis(FourVectord(1, 0, 0, 0), Axis::x, Boostd::along(Axis::y, 0.5)),
               std::invalid_argument);
}

TEST(Boost, GeneralMatchesAxisForm) {
  const FourVectord v(3, 1, -2, 0.5);
  for (const Axis a : {Axis::x, Axis::y, Axis::z}) {
    const Boostd b = Boostd::along(a, -0.7);
    EXPECT_EQ(lorentz_bridge::boost(v, b), boost_axis(v, a, b));
  }
}

TEST(Boost, ObliqueMatchesRotatedAxisBoost) {
  // Boost along (1,1,0)/sqrt2 equals: rotate to x, boost, rotate back.
  const double beta = 0.5;
  const Vector3<double> n = Vector3<double>(1, 1, 0).normalized();
  const Boostd b = Boostd::from_velocity(beta * n);
  const FourVectord v(2, 0.3, -0.1, 0.7);
  const FourVectord out = lorentz_bridge::boost(v, b);
  const double g = 1.0 / std::sqrt(1.0 - beta * beta);
  const double along = n.dot(v.spatial());
  const Vector3<double> perp = v.spatial() - along * n;
  const double t = g * (v.t() - beta * along);
  const double a2 = g * (along - beta * v.t());
  const Vector3<double> s = perp + a2 * n;
  EXPECT_NEAR(out.t(), t, 1e-14);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(out.spatial()[i], s[i], 1e-14);
}

TEST(Boost, ComposeCollinear) {
  const Boostd c = compose_rapidity(Boostd::along(Axis::x, 0.6), Boostd::along(Axis::x, 0.6));
  const double want = oracle::to_double(oracle::add_velocities(R("0.6"), R("0.6")));
  EXPECT_NEAR(c.beta().x(), want, 1e-15);
  EXPECT_NEAR(want, 15.0 / 17.0, 1e-16);
}

TEST(Boost, ComposeObliqueRejected) {
  EXPECT_THROW(compose_rapidity(Boostd::along(Axis::x, 0.3), Boostd::along(Axis::y, 0.3)),
               std::invalid_argument);
}

TEST(Boost, InverseAndAccessors) {
  const Boostd b = Boostd::along(Axis::z, 0.6);
  EXPECT_NEAR(b.gamma(), 1.25, 1e-15);
  EXPECT_NEAR(b.speed(), 0.6, 1e-15);
  EXPECT_NEAR(b.gamma_beta(), 0.75, 1e-15);
  EXPECT_EQ(b.axis(), Axis::z);
  EXPECT_NEAR(b.inverse().beta().z(), -0.6, 1e-15);
  EXPECT_TRUE(Boostd::identity().is_identity());
  EXPECT_FALSE(Boostd::identity().axis().has_value());
}

// Properties over random inputs.

class BoostProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240917};
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  FourVectord vec() { return {uniform(-10, 10), uniform(-10, 10), uniform(-10, 10), uniform(-10, 10)}; }
  Vector3<double> velocity(double max_speed) {
    Vector3<double> d(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    return uniform(0, max_speed) * d.normalized();
  }
};

TEST_F(BoostProperties, NormPreserved) {
  for (int i = 0; i < 2000; ++i) {
    const FourVectord v = vec();
    const Boostd b = Boostd::from_velocity(velocity(0.99));
    const double before = minkowski_norm_sq(v);
    const double after = minkowski_norm_sq(lorentz_bridge::boost(v, b));
    EXPECT_LE(std::abs(after - before) / norm_tolerance_scale(v, b), 1e-12);
  }
}

TEST_F(BoostProperties, InverseRoundTrip) {
  for (int i = 0; i < 2000; ++i) {
    const FourVectord v = vec();
    const Boostd b = Boostd::from_velocity(velocity(0.99));
    const FourVectord back = lorentz_bridge::boost(lorentz_bridge::boost(v, b), b.inverse());
    const double scale = b.gamma() * b.gamma() * std::max(1.0, v.max_abs());
    for (int mu = 0; mu < 4; ++mu) EXPECT_LE(std::abs(back[mu] - v[mu]) / scale, 1e-12);
  }
}

TEST_F(BoostProperties, TransverseComponentsBitIdentical) {
  for (int i = 0; i < 2000; ++i) {
    const FourVectord v = vec();
    const Axis a = static_cast<Axis>(i % 3);
    const FourVectord out = boost_axis(v, a, Boostd::along(a, uniform(-0.99, 0.99)));
    for (int s = 0; s < 3; ++s) {
      if (s != index_of(a)) {
        EXPECT_EQ(out[1 + s], v[1 + s]);
      }
    }
  }
}

TEST_F(BoostProperties, CompositionEqualsSequential) {
  for (int i = 0; i < 2000; ++i) {
    const Axis a = static_cast<Axis>(i % 3);
    const Boostd b1 = Boostd::along(a, uniform(-0.9, 0.9));
    const Boostd b2 = Boostd::along(a, uniform(-0.9, 0.9));
    const FourVectord v = vec();
    const FourVectord seq = lorentz_bridge::boost(lorentz_bridge::boost(v, b1), b2);
    const FourVectord once = lorentz_bridge::boost(v, compose_rapidity(b1, b2));
    const double g = b1.gamma() * b2.gamma();
    const double scale = g * g * std::max(1.0, v.max_abs());
    for (int mu = 0; mu < 4; ++mu) EXPECT_LE(std::abs(seq[mu] - once[mu]) / scale, 1e-12);
  }
}

TEST_F(BoostProperties, CompositionMatchesVelocityAddition) {
  for (int i = 0; i < 500; ++i) {
    const double u = uniform(-0.9, 0.9), w = uniform(-0.9, 0.9);
    const Boostd c = compose_rapidity(Boostd::along(Axis::x, u), Boostd::along(Axis::x, w));
    const double want = oracle::to_double(oracle::add_velocities(R(u), R(w)));
    EXPECT_NEAR(c.beta().x(), want, 1e-14);
  }
}
