#ifndef LORENTZ_BRIDGE_MINKOWSKI_HPP
#define LORENTZ_BRIDGE_MINKOWSKI_HPP

/// \file
/// Four-vectors under the (+,-,-,-) metric and pure Lorentz boosts stored as
/// rapidity. Natural units throughout (c = 1).

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace lorentz_bridge {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

enum class Axis { x = 0, y = 1, z = 2 };

inline constexpr int index_of(Axis axis) { return static_cast<int>(axis); }

inline const char* to_string(Axis axis) {
  switch (axis) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

inline std::optional<Axis> parse_axis(const std::string& name) {
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "z") return Axis::z;
  return std::nullopt;
}

/// The fixed metric signature (+,-,-,-).
struct MetricSignature {
  static constexpr std::array<int, 4> diagonal{+1, -1, -1, -1};
};

/// A (t, x, y, z) tuple. Components are always finite.
template <typename Scalar>
class FourVector {
 public:
  using scalar_type = Scalar;

  FourVector() : c_(Vector4<Scalar>::Zero()) {}
  FourVector(Scalar t, Scalar x, Scalar y, Scalar z) : c_(t, x, y, z) {
    check_finite();
  }
  FourVector(Scalar t, const Vector3<Scalar>& spatial)
      : c_(t, spatial.x(), spatial.y(), spatial.z()) {
    check_finite();
  }
  explicit FourVector(const Vector4<Scalar>& components) : c_(components) {
    check_finite();
  }

  Scalar t() const { return c_[0]; }
  Scalar x() const { return c_[1]; }
  Scalar y() const { return c_[2]; }
  Scalar z() const { return c_[3]; }
  Scalar operator[](int i) const { return c_[i]; }
  Scalar spatial(Axis axis) const { return c_[1 + index_of(axis)]; }

  Vector3<Scalar> spatial() const { return c_.template tail<3>(); }
  const Vector4<Scalar>& components() const { return c_; }

  /// Largest absolute component.
  Scalar max_abs() const { return c_.cwiseAbs().maxCoeff(); }

  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return FourVector(Vector4<Scalar>(a.c_ + b.c_));
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return FourVector(Vector4<Scalar>(a.c_ - b.c_));
  }
  friend FourVector operator*(Scalar s, const FourVector& v) {
    return FourVector(Vector4<Scalar>(s * v.c_));
  }
  friend bool operator==(const FourVector& a, const FourVector& b) {
    return a.c_ == b.c_;
  }

 private:
  void check_finite() const {
    if (!c_.allFinite()) {
      throw std::domain_error("four-vector component is not finite");
    }
  }

  Vector4<Scalar> c_;
};

using FourVectord = FourVector<double>;

/// Minkowski inner product a.b = a_t b_t - a_s . b_s.
template <typename Scalar>
Scalar minkowski_dot(const FourVector<Scalar>& a, const FourVector<Scalar>& b) {
  return a.t() * b.t() - a.x() * b.x() - a.y() * b.y() - a.z() * b.z();
}

template <typename Scalar>
Scalar minkowski_norm_sq(const FourVector<Scalar>& v) {
  return minkowski_dot(v, v);
}

/// gamma = 1/sqrt(1 - beta^2), written as a product to avoid cancellation.
template <typename Scalar>
Scalar lorentz_factor(Scalar beta) {
  using std::abs;
  using std::sqrt;
  if (!(abs(beta) < Scalar(1))) {
    throw std::domain_error("|beta| must be strictly less than 1");
  }
  return Scalar(1) / sqrt((Scalar(1) - beta) * (Scalar(1) + beta));
}

/// A pure Lorentz boost, stored as a rapidity 3-vector. The boost maps
/// coordinates of a frame S into those of a frame S' moving with velocity
/// beta() relative to S.
template <typename Scalar>
class Boost {
 public:
  using scalar_type = Scalar;

  Boost() : rapidity_(Vector3<Scalar>::Zero()) {}

  static Boost identity() { return Boost(); }

  static Boost from_rapidity(const Vector3<Scalar>& rapidity) {
    using std::cosh;
    if (!rapidity.allFinite() || !std::isfinite(cosh(rapidity.norm()))) {
      throw std::domain_error("rapidity must be finite");
    }
    Boost b;
    b.rapidity_ = rapidity;
    return b;
  }

  static Boost along(Axis axis, Scalar beta) {
    using std::abs;
    using std::atanh;
    if (!(abs(beta) < Scalar(1))) {
      throw std::domain_error("|beta| must be strictly less than 1");
    }
    Vector3<Scalar> phi = Vector3<Scalar>::Zero();
    phi[index_of(axis)] = atanh(beta);
    return from_rapidity(phi);
  }

  static Boost from_velocity(const Vector3<Scalar>& beta) {
    using std::atanh;
    if (!beta.allFinite()) {
      throw std::domain_error("frame velocity is not finite");
    }
    const Scalar speed = beta.norm();
    if (!(speed < Scalar(1))) {
      throw std::domain_error("|beta| must be strictly less than 1");
    }
    if (speed == Scalar(0)) return Boost();
    // Axis-aligned input keeps exact zeros in the other components.
    const Vector3<Scalar> phi = (atanh(speed) / speed) * beta;
    return from_rapidity(phi);
  }

  const Vector3<Scalar>& rapidity() const { return rapidity_; }
  Scalar rapidity_magnitude() const { return rapidity_.norm(); }

  Vector3<Scalar> beta() const {
    using std::tanh;
    const Scalar phi = rapidity_magnitude();
    if (phi == Scalar(0)) return Vector3<Scalar>::Zero();
    return (tanh(phi) / phi) * rapidity_;
  }
  Scalar speed() const {
    using std::tanh;
    return tanh(rapidity_magnitude());
  }
  Scalar gamma() const {
    using std::cosh;
    return cosh(rapidity_magnitude());
  }
  Scalar gamma_beta() const {
    using std::sinh;
    return sinh(rapidity_magnitude());
  }

  Boost inverse() const { return from_rapidity(-rapidity_); }

  bool is_identity() const { return rapidity_.isZero(Scalar(0)); }

  /// The single axis carrying nonzero rapidity, if the boost is axis aligned.
  /// Empty for the identity and for oblique boosts.
  std::optional<Axis> axis() const {
    std::optional<Axis> found;
    for (int i = 0; i < 3; ++i) {
      if (rapidity_[i] != Scalar(0)) {
        if (found) return std::nullopt;
        found = static_cast<Axis>(i);
      }
    }
    return found;
  }

  /// Signed rapidity along an axis.
  Scalar rapidity(Axis axis) const { return rapidity_[index_of(axis)]; }

 private:
  Vector3<Scalar> rapidity_;
};

using Boostd = Boost<double>;

/// Boost along a coordinate axis: (g(t - b s), g(s - b t)) on the (t, s)
/// pair, with the two transverse components passed through untouched.
template <typename Scalar>
FourVector<Scalar> boost_axis(const FourVector<Scalar>& v, Axis axis,
                              const Boost<Scalar>& b) {
  using std::cosh;
  using std::sinh;
  const auto aligned = b.axis();
  if (!b.is_identity() && (!aligned || *aligned != axis)) {
    throw std::invalid_argument(std::string("boost is not aligned with the ") +
                                to_string(axis) + " axis");
  }
  const Scalar phi = b.rapidity(axis);
  const Scalar ch = cosh(phi);
  const Scalar sh = sinh(phi);
  Vector4<Scalar> out = v.components();
  const int s = 1 + index_of(axis);
  out[0] = ch * v.t() - sh * v[s];
  out[s] = ch * v[s] - sh * v.t();
  return FourVector<Scalar>(out);
}

template <typename Scalar>
FourVector<Scalar> boost_x(const FourVector<Scalar>& v, const Boost<Scalar>& b) {
  return boost_axis(v, Axis::x, b);
}

/// General pure boost along the rapidity direction.
template <typename Scalar>
FourVector<Scalar> boost(const FourVector<Scalar>& v, const Boost<Scalar>& b) {
  using std::cosh;
  using std::sinh;
  if (b.is_identity()) return v;
  if (const auto aligned = b.axis()) return boost_axis(v, *aligned, b);

  const Scalar phi = b.rapidity_magnitude();
  const Vector3<Scalar> n = b.rapidity() / phi;
  const Scalar ch = cosh(phi);
  const Scalar sh = sinh(phi);
  const Vector3<Scalar> s = v.spatial();
  const Scalar along = n.dot(s);
  const Scalar t = ch * v.t() - sh * along;
  const Vector3<Scalar> sp = s + ((ch - Scalar(1)) * along - sh * v.t()) * n;
  return FourVector<Scalar>(t, sp);
}

/// Composition of collinear boosts: rapidities add. Oblique pairs would
/// need a Wigner rotation and are rejected.
template <typename Scalar>
Boost<Scalar> compose_rapidity(const Boost<Scalar>& first,
                               const Boost<Scalar>& second) {
  using std::abs;
  const Vector3<Scalar>& a = first.rapidity();
  const Vector3<Scalar>& b = second.rapidity();
  const Scalar cross = a.cross(b).norm();
  if (cross > Scalar(1e-12) * a.norm() * b.norm()) {
    throw std::invalid_argument("boosts are not collinear");
  }
  return Boost<Scalar>::from_rapidity(a + b);
}

/// Scale used by the norm-preservation tolerance: max(1, |v.v|, g^2 |v|^2)
/// where |v| is the largest absolute component.
template <typename Scalar>
Scalar norm_tolerance_scale(const FourVector<Scalar>& v, const Boost<Scalar>& b) {
  using std::abs;
  const Scalar g = b.gamma();
  const Scalar m = v.max_abs();
  return std::max({Scalar(1), abs(minkowski_norm_sq(v)), g * g * m * m});
}

}  // namespace lorentz_bridge

#endif  // LORENTZ_BRIDGE_MINKOWSKI_HPP
