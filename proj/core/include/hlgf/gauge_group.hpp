#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace hlgf {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kExactTolerance = 1e-9;
inline constexpr double kCutoffTolerance = 1e-3;

enum class Backend : std::uint8_t { kU1, kSO3, kSU2 };

std::string_view backend_name(Backend b);
// Accepts "U1", "SO3", "SU2".
Backend parse_backend(std::string_view name);

// Reduces to [0, 2pi).
double wrap_angle(double a);
// Reduces to (-pi, pi].
double wrap_signed(double a);

struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion axis_angle(const std::array<double, 3>& axis, double angle);

  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  double dot(const Quaternion& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }
  double norm() const;
  Quaternion normalized() const;
  // Representative with w > 0, ties broken on the first nonzero component.
  Quaternion canonical_sign() const;
  bool operator==(const Quaternion&) const = default;
};

// Geodesic angle on S^3, stable near 0 and pi.
double sphere_distance(const Quaternion& a, const Quaternion& b);

class GroupElement {
 public:
  static GroupElement identity(Backend b);
  static GroupElement u1(double angle);
  static GroupElement so3(const Quaternion& q);
  static GroupElement su2(const Quaternion& q);
  static GroupElement from_quaternion(Backend b, const Quaternion& q);

  Backend backend() const noexcept { return backend_; }
  // U1 only.
  double angle() const;
  // SO3/SU2 only. For SO3 this is one of the two lifts.
  const Quaternion& quaternion() const;

 private:
  GroupElement(Backend b, double angle, const Quaternion& q) : backend_(b), angle_(angle), q_(q) {}
  Backend backend_;
  double angle_;
  Quaternion q_;
};

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupElement& a);
GroupElement id(Backend b);
// Bi-invariant distance: angular for U1, geodesic on SU(2) or SU(2)/{+-1}.
double dist(const GroupElement& a, const GroupElement& b);
bool approx_equal(const GroupElement& a, const GroupElement& b, double tol = kExactTolerance);

// A path in G up to homotopy rel endpoints.
class LoopClass {
 public:
  static LoopClass u1(double base, double lift);
  // SO3: pair of lifts in SU(2), defined up to simultaneous sign. SU2: endpoints.
  static LoopClass quaternion_pair(Backend b, const Quaternion& q0, const Quaternion& q1);

  Backend backend() const noexcept { return backend_; }
  GroupElement source() const;
  GroupElement target() const;
  // U1 only.
  double base() const;
  double lift() const;
  // SO3/SU2 only.
  const Quaternion& q0() const;
  const Quaternion& q1() const;

 private:
  LoopClass(Backend b, double base, double lift, const Quaternion& q0, const Quaternion& q1)
      : backend_(b), base_(base), lift_(lift), q0_(q0), q1_(q1) {}
  Backend backend_;
  double base_;
  double lift_;
  Quaternion q0_;
  Quaternion q1_;
};

LoopClass loop_const(const GroupElement& g);
// Pointwise product.
LoopClass loop_compose0(const LoopClass& a, const LoopClass& b);
// Concatenation, b first. Requires target(b) = source(a) within tol.
LoopClass loop_compose1(const LoopClass& a, const LoopClass& b, double tol = kExactTolerance);
// Pointwise inverse.
LoopClass loop_inv0(const LoopClass& a);
// Reversed path.
LoopClass loop_inv1(const LoopClass& a);
bool loop_equal(const LoopClass& a, const LoopClass& b, double tol = kExactTolerance);

class Pi1Element {
 public:
  static Pi1Element zero(Backend b);
  static Pi1Element u1(std::int64_t winding);
  static Pi1Element so3(int sign);
  static Pi1Element su2() { return zero(Backend::kSU2); }

  Backend backend() const noexcept { return backend_; }
  // U1: winding number. SO3: +1 or -1. SU2: 0.
  std::int64_t value() const noexcept { return value_; }
  bool is_zero() const;
  std::string to_string() const;

  Pi1Element operator+(const Pi1Element& o) const;
  Pi1Element operator-() const;
  bool operator==(const Pi1Element&) const = default;

 private:
  Pi1Element(Backend b, std::int64_t v) : backend_(b), value_(v) {}
  Backend backend_;
  std::int64_t value_;
};

// Requires a based loop. U1 throws when the lift is not within winding_tol of 2pi Z (in units of 2pi).
Pi1Element pi1_class(const LoopClass& a, double endpoint_tol = kExactTolerance,
                     double winding_tol = 1e-3);
// Distance of the U1 lift from the nearest multiple of 2pi; 0 for other backends.
double winding_residual(const LoopClass& a);

}  // namespace hlgf
