#include "hlgf/gauge_group.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hlgf/errors.hpp"

namespace hlgf {

namespace {

void require_same(Backend a, Backend b) {
  if (a != b) {
    throw BackendMismatch("backend mismatch: " + std::string(backend_name(a)) + " vs " +
                          std::string(backend_name(b)));
  }
}

void require(Backend actual, Backend wanted, const char* what) {
  if (actual != wanted) {
    throw BackendMismatch(std::string(what) + " requires backend " +
                          std::string(backend_name(wanted)));
  }
}

bool is_quaternion_backend(Backend b) { return b == Backend::kSO3 || b == Backend::kSU2; }

double so3_distance(const Quaternion& a, const Quaternion& b) {
  return std::min(sphere_distance(a, b), sphere_distance(a, -b));
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kU1:
      return "U1";
    case Backend::kSO3:
      return "SO3";
    case Backend::kSU2:
      return "SU2";
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  if (name == "U1") return Backend::kU1;
  if (name == "SO3") return Backend::kSO3;
  if (name == "SU2") return Backend::kSU2;
  throw InvalidArgument("unknown gauge group '" + std::string(name) + "'");
}

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double wrap_signed(double a) {
  double r = wrap_angle(a);
  if (r > kPi) r -= kTwoPi;
  return r;
}

Quaternion Quaternion::axis_angle(const std::array<double, 3>& axis, double angle) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (n == 0.0) return {};
  const double s = std::sin(angle / 2.0) / n;
  return {std::cos(angle / 2.0), axis[0] * s, axis[1] * s, axis[2] * s};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
          w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
}

double Quaternion::norm() const { return std::sqrt(dot(*this)); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidArgument("zero quaternion cannot be normalized");
  return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::canonical_sign() const {
  for (double c : {w, x, y, z}) {
    if (c > 0.0) return *this;
    if (c < 0.0) return -*this;
  }
  return *this;
}

double sphere_distance(const Quaternion& a, const Quaternion& b) {
  const Quaternion d{a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  const Quaternion s{a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  return 2.0 * std::atan2(d.norm(), s.norm());
}

GroupElement GroupElement::identity(Backend b) { return GroupElement(b, 0.0, Quaternion{}); }

GroupElement GroupElement::u1(double angle) {
  if (!std::isfinite(angle)) throw InvalidArgument("non-finite U1 angle");
  return GroupElement(Backend::kU1, wrap_angle(angle), Quaternion{});
}

GroupElement GroupElement::so3(const Quaternion& q) {
  return GroupElement(Backend::kSO3, 0.0, q.normalized());
}

GroupElement GroupElement::su2(const Quaternion& q) {
  return GroupElement(Backend::kSU2, 0.0, q.normalized());
}

GroupElement GroupElement::from_quaternion(Backend b, const Quaternion& q) {
  if (!is_quaternion_backend(b)) throw BackendMismatch("U1 elements are not quaternions");
  return GroupElement(b, 0.0, q.normalized());
}

double GroupElement::angle() const {
  require(backend_, Backend::kU1, "angle()");
  return angle_;
}

const Quaternion& GroupElement::quaternion() const {
  if (!is_quaternion_backend(backend_)) throw BackendMismatch("U1 elements are not quaternions");
  return q_;
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  require_same(a.backend(), b.backend());
  if (a.backend() == Backend::kU1) return GroupElement::u1(a.angle() + b.angle());
  return GroupElement::from_quaternion(a.backend(), a.quaternion() * b.quaternion());
}

GroupElement inv(const GroupElement& a) {
  if (a.backend() == Backend::kU1) return GroupElement::u1(-a.angle());
  return GroupElement::from_quaternion(a.backend(), a.quaternion().conjugate());
}

GroupElement id(Backend b) { return GroupElement::identity(b); }

double dist(const GroupElement& a, const GroupElement& b) {
  require_same(a.backend(), b.backend());
  switch (a.backend()) {
    case Backend::kU1:
      return std::abs(wrap_signed(a.angle() - b.angle()));
    case Backend::kSO3:
      return so3_distance(a.quaternion(), b.quaternion());
    case Backend::kSU2:
      return sphere_distance(a.quaternion(), b.quaternion());
  }
  return 0.0;
}

bool approx_equal(const GroupElement& a, const GroupElement& b, double tol) {
  return dist(a, b) <= tol;
}

LoopClass LoopClass::u1(double base, double lift) {
  if (!std::isfinite(base) || !std::isfinite(lift)) throw InvalidArgument("non-finite U1 loop");
  return LoopClass(Backend::kU1, wrap_angle(base), lift, Quaternion{}, Quaternion{});
}

LoopClass LoopClass::quaternion_pair(Backend b, const Quaternion& q0, const Quaternion& q1) {
  if (!is_quaternion_backend(b)) throw BackendMismatch("U1 loops are not quaternion pairs");
  return LoopClass(b, 0.0, 0.0, q0.normalized(), q1.normalized());
}

GroupElement LoopClass::source() const {
  if (backend_ == Backend::kU1) return GroupElement::u1(base_);
  return GroupElement::from_quaternion(backend_, q0_);
}

GroupElement LoopClass::target() const {
  if (backend_ == Backend::kU1) return GroupElement::u1(base_ + lift_);
  return GroupElement::from_quaternion(backend_, q1_);
}

double LoopClass::base() const {
  require(backend_, Backend::kU1, "base()");
  return base_;
}

double LoopClass::lift() const {
  require(backend_, Backend::kU1, "lift()");
  return lift_;
}

const Quaternion& LoopClass::q0() const {
  if (!is_quaternion_backend(backend_)) throw BackendMismatch("U1 loops are not quaternion pairs");
  return q0_;
}

const Quaternion& LoopClass::q1() const {
  if (!is_quaternion_backend(backend_)) throw BackendMismatch("U1 loops are not quaternion pairs");
  return q1_;
}

LoopClass loop_const(const GroupElement& g) {
  if (g.backend() == Backend::kU1) return LoopClass::u1(g.angle(), 0.0);
  return LoopClass::quaternion_pair(g.backend(), g.quaternion(), g.quaternion());
}

LoopClass loop_compose0(const LoopClass& a, const LoopClass& b) {
  require_same(a.backend(), b.backend());
  if (a.backend() == Backend::kU1) {
    return LoopClass::u1(a.base() + b.base(), a.lift() + b.lift());
  }
  return LoopClass::quaternion_pair(a.backend(), a.q0() * b.q0(), a.q1() * b.q1());
}

LoopClass loop_compose1(const LoopClass& a, const LoopClass& b, double tol) {
  require_same(a.backend(), b.backend());
  const double gap = dist(b.target(), a.source());
  if (gap > tol) {
    std::ostringstream msg;
    msg << "loop endpoints do not match (gap " << gap << ")";
    throw EndpointMismatch(msg.str());
  }
  switch (a.backend()) {
    case Backend::kU1:
      return LoopClass::u1(b.base(), b.lift() + a.lift());
    case Backend::kSO3: {
      const double s = a.q0().dot(b.q1()) < 0.0 ? -1.0 : 1.0;
      const Quaternion end = s < 0.0 ? -a.q1() : a.q1();
      return LoopClass::quaternion_pair(Backend::kSO3, b.q0(), end);
    }
    case Backend::kSU2:
      return LoopClass::quaternion_pair(Backend::kSU2, b.q0(), a.q1());
  }
  return a;
}

LoopClass loop_inv0(const LoopClass& a) {
  if (a.backend() == Backend::kU1) return LoopClass::u1(-a.base(), -a.lift());
  return LoopClass::quaternion_pair(a.backend(), a.q0().conjugate(), a.q1().conjugate());
}

LoopClass loop_inv1(const LoopClass& a) {
  if (a.backend() == Backend::kU1) return LoopClass::u1(a.base() + a.lift(), -a.lift());
  return LoopClass::quaternion_pair(a.backend(), a.q1(), a.q0());
}

bool loop_equal(const LoopClass& a, const LoopClass& b, double tol) {
  if (a.backend() != b.backend()) return false;
  switch (a.backend()) {
    case Backend::kU1:
      return dist(a.source(), b.source()) <= tol && std::abs(a.lift() - b.lift()) <= tol;
    case Backend::kSO3: {
      const double same = std::max(sphere_distance(a.q0(), b.q0()), sphere_distance(a.q1(), b.q1()));
      const double flip =
          std::max(sphere_distance(a.q0(), -b.q0()), sphere_distance(a.q1(), -b.q1()));
      return std::min(same, flip) <= tol;
    }
    case Backend::kSU2:
      return sphere_distance(a.q0(), b.q0()) <= tol && sphere_distance(a.q1(), b.q1()) <= tol;
  }
  return false;
}

Pi1Element Pi1Element::zero(Backend b) {
  return Pi1Element(b, b == Backend::kSO3 ? 1 : 0);
}

Pi1Element Pi1Element::u1(std::int64_t winding) { return Pi1Element(Backend::kU1, winding); }

Pi1Element Pi1Element::so3(int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("SO3 pi1 class must be +1 or -1");
  return Pi1Element(Backend::kSO3, sign);
}

bool Pi1Element::is_zero() const { return *this == zero(backend_); }

std::string Pi1Element::to_string() const {
  if (backend_ == Backend::kSO3) return value_ > 0 ? "+1" : "-1";
  return std::to_string(value_);
}

Pi1Element Pi1Element::operator+(const Pi1Element& o) const {
  require_same(backend_, o.backend_);
  switch (backend_) {
    case Backend::kU1:
      return u1(value_ + o.value_);
    case Backend::kSO3:
      return so3(static_cast<int>(value_ * o.value_));
    case Backend::kSU2:
      return su2();
  }
  return *this;
}

Pi1Element Pi1Element::operator-() const {
  if (backend_ == Backend::kU1) return u1(-value_);
  return *this;
}

Pi1Element pi1_class(const LoopClass& a, double endpoint_tol, double winding_tol) {
  const double gap = dist(a.source(), a.target());
  if (gap > endpoint_tol) {
    std::ostringstream msg;
    msg << "not a based loop (endpoint gap " << gap << ")";
    throw EndpointMismatch(msg.str());
  }
  switch (a.backend()) {
    case Backend::kU1: {
      const double w = a.lift() / kTwoPi;
      const double n = std::round(w);
      if (std::abs(w - n) > winding_tol) {
        std::ostringstream msg;
        msg << "U1 lift " << a.lift() << " is not near a multiple of 2pi";
        throw ValidationError(msg.str());
      }
      return Pi1Element::u1(static_cast<std::int64_t>(n));
    }
    case Backend::kSO3:
      return Pi1Element::so3(a.q0().dot(a.q1()) < 0.0 ? -1 : 1);
    case Backend::kSU2:
      return Pi1Element::su2();
  }
  return Pi1Element::zero(a.backend());
}

double winding_residual(const LoopClass& a) {
  if (a.backend() != Backend::kU1) return 0.0;
  return std::abs(a.lift() - kTwoPi * std::round(a.lift() / kTwoPi));
}

}  // namespace hlgf
