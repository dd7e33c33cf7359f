#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tiltcara/bounds.hpp"
#include "tiltcara/caratheodory.hpp"
#include "tiltcara/series.hpp"

namespace tiltcara {

enum class FunctionClass { Plain, Spirallike, Robertson, CloseToConvex, DClass };

std::string to_string(FunctionClass c);

/// f(0) = 0, f'(0) = 1, with pointwise evaluators for f, f' and f''.
class NormalizedFunction {
public:
  /// Throws NotNormalized unless c_0 = 0 and c_1 = 1 (within kEpsSeries; both
  /// are then pinned exactly).
  NormalizedFunction(Series series, PointFunction value, PointFunction derivative,
                     PointFunction second_derivative, FunctionClass tag);

  /// f(z) = z.
  static NormalizedFunction identity(std::size_t order = kDefaultOrder);

  const Series& series() const noexcept { return series_; }
  FunctionClass tag() const noexcept { return tag_; }

  Complex operator()(Complex z) const { return value_(z); }
  Complex derivative(Complex z) const { return derivative_(z); }
  Complex second_derivative(Complex z) const { return second_(z); }

private:
  Series series_;
  PointFunction value_;
  PointFunction derivative_;
  PointFunction second_;
  FunctionClass tag_;
};

/// (z h'(z)) / h(z) as a series; h_0 must be nonzero.
Series euler_ratio(const Series& h);
/// z f'(z) / f(z) as a series (order drops by one).
Series starlike_ratio(const NormalizedFunction& f);
/// 1 + z f''(z) / f'(z) as a series (order drops by one).
Series convexity_ratio(const NormalizedFunction& f);

// --- spirallike ------------------------------------------------------------

/// z / (1 - z)^{1 + e^{-2i lambda}}.
NormalizedFunction spirallike_build(const TiltAngle& tilt, std::size_t order = kDefaultOrder);

/// f = z exp(int_0^z (p(t) - 1)/t dt), so that z f'/f = p. Needs a measure-backed p.
NormalizedFunction spirallike_from_member(const ClassMember& p);

struct SpirallikeReport {
  MembershipReport membership;
  /// Largest excess over each inequality on the grid (<= 0 means it holds).
  double disc_excess = 0.0;
  double re_excess = 0.0;
  double modulus_excess = 0.0;
  /// Per grid radius, the smallest disc slack radius - |w - center|.
  std::vector<double> disc_slack;
  bool pass = false;
};

/// Checks the disc, real-part and modulus estimates for z f'/f on the grid.
/// Throws NotSpirallike when z f'/f fails the membership test.
SpirallikeReport spirallike_verify(const NormalizedFunction& f, const TiltAngle& tilt,
                                   const EvaluationGrid& grid, double tol = kEpsSeries);

// --- Robertson ---------------------------------------------------------------

/// ((1 - z)^{1 - 2 e^{-i lambda} cos lambda} - 1) / (2 e^{-i lambda} cos lambda - 1).
NormalizedFunction robertson_build(const TiltAngle& tilt, std::size_t order = kDefaultOrder);

struct RobertsonOptions {
  double boundary_eps = 1e-4;
  std::size_t samples = 2048;
  double r_min = 1e-3;
  std::size_t max_iterations = 200;
};

/// |(m r z - 1 + (1 - r z)^m) / (r (1 - (1 - r z)^m))| with m = 1 + e^{-2i lambda}.
double robertson_expression(const TiltAngle& tilt, double r, Complex z);
/// Supremum of the expression over |z| = 1 - boundary_eps (sampled, then refined).
double robertson_inner_sup(const TiltAngle& tilt, double r, const RobertsonOptions& options = {});
bool robertson_predicate(const TiltAngle& tilt, double r, const RobertsonOptions& options = {});

struct RadiusResult {
  double r_star = 0.0;
  /// Certified bracket: predicate true at lo, false at hi (or hi == 1).
  double lo = 0.0;
  double hi = 1.0;
  double width = 0.0;  // hi - lo
  bool touches_one = false;
  std::size_t iterations = 0;
  std::size_t inner_samples = 0;
};

/// Bisection for the largest r with robertson_predicate true. tol >= 1e-6
/// (InvalidParameter otherwise); NonConvergence when no bracket exists or
/// it cannot shrink below tol within max_iterations.
RadiusResult robertson_radius(const TiltAngle& tilt, double tol = 1e-5,
                              const RobertsonOptions& options = {});

struct RobertsonProfile {
  std::vector<double> radii;
  std::vector<double> sups;
  std::vector<bool> predicate;
  /// Radii where the predicate holds although it failed at a smaller radius.
  std::vector<double> monotone_violations;
};

RobertsonProfile robertson_profile(const TiltAngle& tilt, const std::vector<double>& radii,
                                   const RobertsonOptions& options = {});

// --- close-to-convex ----------------------------------------------------------

/// (1 / (A (1 + r)^2), A / (1 - r)^2).
Interval ctc_distortion(const TiltAngle& tilt, double r);

/// The extremal f with f'(z) = (1 + e^{-2i lambda} x z) / ((1 - y z)^2 (1 - x z)).
/// The value of f itself is taken from its truncated series.
NormalizedFunction ctc_extremal(const TiltAngle& tilt, Complex x, Complex y,
                                std::size_t order = kDefaultOrder);

struct CtcScanReport {
  double max_modulus = 0.0;
  double min_modulus = 0.0;
  Complex max_x, max_y, min_x, min_y;
};

/// Extremes of |f'(z)| on |z| = r over the (x, y, theta) lattice of the
/// extremal family, refined coordinatewise.
CtcScanReport ctc_scan(const TiltAngle& tilt, double r, std::size_t lattice = 512,
                       std::size_t theta_size = 4);

// --- derivative class ---------------------------------------------------------

/// (1/A, A).
Interval dclass_distortion(const TiltAngle& tilt, double r);

/// f with f' = p and f(0) = 0. Needs a measure-backed p.
NormalizedFunction dclass_from_member(const ClassMember& p);
/// -(1 + e^{-2i lambda}) log(1 - z) - e^{-2i lambda} z.
NormalizedFunction dclass_extremal(const TiltAngle& tilt, std::size_t order = kDefaultOrder);

struct PreschwarzianReport {
  double norm = 0.0;
  GridPoint at;
};

/// sup of (1 - |z|^2) |f''/f'| over the given radii and `angles` equispaced
/// angles, refined in the angle around each circle's best sample.
/// Throws VanishingDerivative when |f'| <= kEpsDiv somewhere on the grid.
PreschwarzianReport preschwarzian_norm(const NormalizedFunction& f, const std::vector<double>& radii,
                                       std::size_t angles = 512);

}  // namespace tiltcara
