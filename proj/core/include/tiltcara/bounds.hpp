#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltcara/caratheodory.hpp"

namespace tiltcara {

inline constexpr double kEpsSlit = 1e-9;

/// Outcome of comparing a closed-form bound with a searched extremum.
///
/// For upper bounds gap = bound - achieved, for lower bounds
/// gap = achieved - bound, so a sound bound always has gap >= -tolerance.
struct BoundReport {
  enum class Sense { Upper, Lower };

  std::string name;
  Sense sense = Sense::Upper;
  double bound = 0.0;
  double achieved = 0.0;
  double gap = 0.0;
  /// Circle |z| = radius the report refers to; absent for coefficient functionals.
  std::optional<double> radius;
  /// Rotation parameter x of the extremal member and the point z where it attains.
  std::optional<Complex> witness_x;
  std::optional<Complex> witness_z;
  /// arg(x z), compared against the predicted attaining angles when known.
  std::optional<double> witness_alpha;
  std::vector<double> predicted_alpha;
  std::optional<double> alpha_error;

  static double gap_of(Sense sense, double bound, double achieved) {
    return sense == Sense::Upper ? bound - achieved : achieved - bound;
  }
};

struct Disc {
  Complex center;
  double radius = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// |p_n| <= 2 cos(lambda) for every n >= 1.
double coeff_bound(const TiltAngle& tilt);
/// |p'(z)| <= 2 cos(lambda) / (1 - r)^2.
double deriv_bound(const TiltAngle& tilt, double r);
/// The disc containing p(z) for |z| = r.
Disc containment_disc(const TiltAngle& tilt, double r);
/// A(lambda, r): 1/A <= |p(z)| <= A on |z| = r.
double growth_A(const TiltAngle& tilt, double r);
/// Range of Re p(z) on |z| = r; lo may be negative when lambda != 0.
Interval re_bounds(const TiltAngle& tilt, double r);
/// M(lambda, r), the sharp bound for |z p'(z) / p(z)| on |z| = r.
double logderiv_M(const TiltAngle& tilt, double r);
/// N(lambda, r), the minimum of |z p_lambda'/p_lambda| on |z| = r (kernel only).
double logderiv_N(const TiltAngle& tilt, double r);
/// The switch radius |tan(lambda/2)| between the two branches of M.
double logderiv_branch_radius(const TiltAngle& tilt);

/// Arguments alpha of x z at which the kernel p_lambda(x z) attains M on |z| = r.
///
/// Below the branch radius the single angle lambda -/+ pi/2 is returned.
/// Otherwise alpha solves sin(alpha - lambda) = -(1 + r^2) sin(lambda) / (2r)
/// and both roots in (-pi, pi] are returned (one root when they coincide).
/// Throws NoAttainment if the sine equation has no solution.
std::vector<double> extremal_alpha(const TiltAngle& tilt, double r);

/// The constant A_lambda = cos(lambda) / (1 + sin(lambda)) of the slit domain.
struct SlitDomain {
  explicit SlitDomain(const TiltAngle& tilt);
  double a_lambda;
};

/// False exactly when w lies (within kEpsSlit) on one of the two slits
/// {iy : y >= A_lambda} or {iy : y <= -1/A_lambda}.
bool slit_membership(const TiltAngle& tilt, Complex w);

/// Right-hand side of the Ruscheweyh-Singh estimate for
/// |z q'(z) / (q(z) + i tan(lambda))| with q untilted, including the factor
/// 2r/(1 - r^2); equal to M(lambda, r).
double ruscheweyh_singh_bound(const TiltAngle& tilt, double r);
/// |z q'(z) / (q(z) + i tan(lambda))| for an untilted member q.
double ruscheweyh_singh_lhs(const ClassMember& q, const TiltAngle& tilt, Complex z);

/// Koebe growth r/(1+r)^2 <= |k(z)| <= r/(1-r)^2 for starlike functions.
Interval koebe_growth(double r);

}  // namespace tiltcara
