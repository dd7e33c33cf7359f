#include "tiltcara/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tiltcara/errors.hpp"

namespace tiltcara {

namespace {

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw RadiusOutOfRange("radius " + std::to_string(r) + " outside [0, 1)");
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

}  // namespace

double coeff_bound(const TiltAngle& tilt) { return 2.0 * std::cos(tilt.value()); }

double deriv_bound(const TiltAngle& tilt, double r) {
  require_radius(r);
  return 2.0 * std::cos(tilt.value()) / ((1.0 - r) * (1.0 - r));
}

Disc containment_disc(const TiltAngle& tilt, double r) {
  require_radius(r);
  const double q = 1.0 - r * r;
  return {(1.0 + r * r * tilt.twist()) / q, 2.0 * r * std::cos(tilt.value()) / q};
}

double growth_A(const TiltAngle& tilt, double r) {
  require_radius(r);
  const double q = 1.0 - r * r;
  const double c = std::cos(tilt.value());
  return (std::sqrt(q * q + 4.0 * r * r * c * c) + 2.0 * r * c) / q;
}

Interval re_bounds(const TiltAngle& tilt, double r) {
  require_radius(r);
  const double l = tilt.value();
  const double q = 1.0 - r * r;
  const double base = 1.0 + r * r * std::cos(2.0 * l);
  const double spread = 2.0 * r * std::cos(l);
  return {(base - spread) / q, (base + spread) / q};
}

double logderiv_branch_radius(const TiltAngle& tilt) { return std::abs(std::tan(tilt.value() / 2.0)); }

double logderiv_M(const TiltAngle& tilt, double r) {
  require_radius(r);
  const double l = tilt.value();
  if (r < logderiv_branch_radius(tilt))
    return 2.0 * r * std::cos(l) / (1.0 + r * r - 2.0 * r * std::abs(std::sin(l)));
  return 2.0 * r / (1.0 - r * r);
}

double logderiv_N(const TiltAngle& tilt, double r) {
  require_radius(r);
  const double l = tilt.value();
  return 2.0 * r * std::cos(l) / (1.0 + r * r + 2.0 * r * std::abs(std::sin(l)));
}

std::vector<double> extremal_alpha(const TiltAngle& tilt, double r) {
  require_radius(r);
  const double l = tilt.value();
  if (r < logderiv_branch_radius(tilt)) return {wrap_angle(l < 0.0 ? kPi / 2 + l : -kPi / 2 + l)};
  if (r == 0.0) {
    // Only reachable at lambda = 0, where every point of the degenerate circle attains.
    return {0.0};
  }

  double s = -(1.0 + r * r) * std::sin(l) / (2.0 * r);
  if (std::abs(s) > 1.0 + 1e-12)
    throw NoAttainment("sine equation for the attaining angle has no solution");
  s = std::clamp(s, -1.0, 1.0);
  const double base = std::asin(s);
  const double a1 = wrap_angle(l + base);
  const double a2 = wrap_angle(l + kPi - base);
  if (std::abs(wrap_angle(a1 - a2)) < 1e-15) return {a1};
  return a1 <= a2 ? std::vector<double>{a1, a2} : std::vector<double>{a2, a1};
}

SlitDomain::SlitDomain(const TiltAngle& tilt)
    : a_lambda(std::cos(tilt.value()) / (1.0 + std::sin(tilt.value()))) {}

bool slit_membership(const TiltAngle& tilt, Complex w) {
  const double a = SlitDomain(tilt).a_lambda;
  const bool on_axis = std::abs(w.real()) <= kEpsSlit;
  const bool in_slit_range = w.imag() >= a - kEpsSlit || w.imag() <= -1.0 / a + kEpsSlit;
  return !(on_axis && in_slit_range);
}

double ruscheweyh_singh_bound(const TiltAngle& tilt, double r) {
  require_radius(r);
  const double l = tilt.value();
  const double scale = 2.0 * r / (1.0 - r * r);
  if (r < logderiv_branch_radius(tilt)) {
    const double head =
        (1.0 - r * r) * std::cos(l) / (1.0 - 2.0 * r * std::abs(std::sin(l)) + r * r);
    return head * scale;
  }
  return scale;
}

double ruscheweyh_singh_lhs(const ClassMember& q, const TiltAngle& tilt, Complex z) {
  const Complex shift{0.0, std::tan(tilt.value())};
  return std::abs(z * q.derivative(z) / (q(z) + shift));
}

Interval koebe_growth(double r) {
  require_radius(r);
  return {r / ((1.0 + r) * (1.0 + r)), r / ((1.0 - r) * (1.0 - r))};
}

}  // namespace tiltcara
