#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tiltcara/series.hpp"

namespace tiltcara {

inline constexpr double kEpsAngle = 1e-6;
inline constexpr double kEpsLine = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

/// The tilt lambda of the half-plane {w : Re e^{i lambda} w > 0}.
/// Construction requires |lambda| <= pi/2 - kEpsAngle.
class TiltAngle {
public:
  explicit TiltAngle(double lambda);

  double value() const noexcept { return lambda_; }
  /// e^{i lambda}
  Complex rotation() const noexcept { return std::polar(1.0, lambda_); }
  /// e^{-2 i lambda}
  Complex twist() const noexcept { return std::polar(1.0, -2.0 * lambda_); }
  /// 1 + e^{-2 i lambda}; every nonconstant coefficient of the kernel.
  Complex kernel_factor() const noexcept { return 1.0 + twist(); }

  static bool admissible(double lambda) noexcept;

  friend bool operator==(const TiltAngle&, const TiltAngle&) = default;

private:
  double lambda_;
};

struct Atom {
  Complex x;      // unimodular
  double weight;  // nonnegative
};

/// A probability measure on the unit circle with finitely many atoms.
class DiscreteMeasure {
public:
  /// Throws InvalidMeasure unless every |x| = 1, every weight >= 0 and the
  /// weights sum to 1 (all within 1e-12).
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  static DiscreteMeasure point(Complex x);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// sum_k t_k x_k^n
  Complex moment(std::size_t n) const;

  /// Product measure with atoms x_k y_j and weights t_k s_j.
  friend DiscreteMeasure product(const DiscreteMeasure& a, const DiscreteMeasure& b);

private:
  std::vector<Atom> atoms_;
};

/// Tag for members given by a closed formula instead of a measure.
struct ClosedForm {
  std::string tag;
};

using Provenance = std::variant<DiscreteMeasure, ClosedForm>;
using PointFunction = std::function<Complex(Complex)>;

/// A function of the tilted class: p(0) = 1 and Re e^{i lambda} p > 0.
///
/// Holds the truncated expansion together with exact pointwise evaluators
/// for p and p'. Positivity is not re-verified on construction; use
/// membership_test for that.
class ClassMember {
public:
  /// Throws InvalidSeries when |series_0 - 1| > kEpsSeries; the constant term
  /// is then pinned to exactly 1.
  ClassMember(TiltAngle tilt, Series series, PointFunction value, PointFunction derivative,
              Provenance provenance);

  const TiltAngle& tilt() const noexcept { return tilt_; }
  const Series& series() const noexcept { return series_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  const DiscreteMeasure* measure() const noexcept { return std::get_if<DiscreteMeasure>(&provenance_); }

  Complex operator()(Complex z) const { return value_(z); }
  Complex derivative(Complex z) const { return derivative_(z); }
  /// z p'(z) / p(z)
  Complex log_derivative(Complex z) const { return z * derivative_(z) / value_(z); }

  const PointFunction& value_function() const noexcept { return value_; }
  const PointFunction& derivative_function() const noexcept { return derivative_; }

private:
  TiltAngle tilt_;
  Series series_;
  PointFunction value_;
  PointFunction derivative_;
  Provenance provenance_;
};

/// Polar lattice inside the disc: radii in (0, kMaxEvalRadius], angles in (-pi, pi].
class EvaluationGrid {
public:
  /// Throws InvalidGrid on empty or non-increasing lists or out-of-range entries.
  EvaluationGrid(std::vector<double> radii, std::vector<double> angles);

  /// 24 radii (23 equispaced on [0.05, 0.95] plus 0.99) by 256 equispaced angles.
  static EvaluationGrid standard();
  /// `n` equispaced angles -pi + 2 pi (j + 1) / n.
  static std::vector<double> equispaced_angles(std::size_t n);

  const std::vector<double>& radii() const noexcept { return radii_; }
  const std::vector<double>& angles() const noexcept { return angles_; }
  std::size_t size() const noexcept { return radii_.size() * angles_.size(); }

  template <typename Visit>
  void for_each(Visit&& visit) const {
    for (double r : radii_)
      for (double t : angles_) visit(r, t, std::polar(r, t));
  }

private:
  std::vector<double> radii_;
  std::vector<double> angles_;
};

/// A grid location, ordered lexicographically by (radius, angle).
struct GridPoint {
  double radius = 0.0;
  double angle = 0.0;
  Complex z() const { return std::polar(radius, angle); }
};

/// (1 + e^{-2i lambda} x z) / (1 - x z). Requires |z| <= kMaxEvalRadius, |x| = 1.
Complex kernel_eval(const TiltAngle& tilt, Complex x, Complex z);
/// d/dz of kernel_eval(tilt, x, z).
Complex kernel_derivative(const TiltAngle& tilt, Complex x, Complex z);
/// Taylor expansion of the rotated kernel: 1 + (1 + e^{-2i lambda}) sum x^n z^n.
Series kernel_series(const TiltAngle& tilt, Complex x, std::size_t order);

/// The average of rotated kernels against a discrete measure.
ClassMember herglotz_build(const TiltAngle& tilt, const DiscreteMeasure& mu,
                           std::size_t order = kDefaultOrder);

/// q = (e^{i lambda} p - i sin lambda) / cos lambda, a member of the untilted class.
ClassMember tilt_to_base(const ClassMember& p);
/// Inverse of tilt_to_base: p = e^{-i lambda} (q cos lambda + i sin lambda).
ClassMember base_to_tilt(const ClassMember& q, const TiltAngle& tilt);

struct MembershipReport {
  double min_value = 0.0;  // min over the grid of Re e^{i lambda} p
  GridPoint argmin;
  bool pass = false;
};

MembershipReport membership_test(const PointFunction& p, const TiltAngle& tilt,
                                 const EvaluationGrid& grid);

/// The Schwarz function w with p = p_lambda o w, as a series: (p - 1) / (p + e^{-2i lambda}).
Series subordination_omega(const ClassMember& p);
/// Pointwise value of the same Schwarz function.
Complex omega_at(const ClassMember& p, Complex z);

/// Coefficient A(y) of the dual family element (1 + A z)/(1 - z).
Complex dual_coefficient(const TiltAngle& tilt, Complex y);
/// Expansion of (1 + A z)/(1 - z).
Series dual_element(Complex a, std::size_t order);

struct DualLineReport {
  double min_distance = 0.0;  // distance from p(z) to the sampled boundary-line points
  GridPoint argmin;
  Complex argmin_x;
  bool pass = false;
};

/// Default sample: 64 equispaced unimodular points with x = 1 removed.
std::vector<Complex> default_dual_samples();

/// Checks that p never takes the values (1 + e^{-2i lambda} x)/(1 - x) on the
/// grid, computed through the convolution h * p = (1 + A) p - A with the dual
/// family element at y = -x. Requires every sample to differ from 1.
DualLineReport dual_line_check(const ClassMember& p, const EvaluationGrid& grid,
                               const std::vector<Complex>& x_samples = default_dual_samples());

/// 1 + sum a_n b_n / 2 z^n for two untilted members. Throws TiltMismatch otherwise.
ClassMember schur_half_hadamard(const ClassMember& p1, const ClassMember& p2);

/// Pointwise (p1 * p2)(z). Exact when both members carry a measure, otherwise
/// evaluated from the truncated Hadamard product.
Complex convolution_value(const ClassMember& p1, const ClassMember& p2, Complex z);

struct ConvolutionReport {
  double min_value = 0.0;  // min over grid of Re e^{i(l1 + l2)} (p1 * p2)
  GridPoint argmin;
  double lower_bound = 0.0;  // -cos(l1 - l2)
  bool bound_holds = false;
  /// Present when membership was requested and -cos(l1 - l2) >= 0.
  std::optional<bool> membership_holds;
};

/// Throws TiltSumOutOfRange when membership is requested and |l1 + l2| >= pi/2 - kEpsAngle.
ConvolutionReport tilted_convolution_bound(const ClassMember& p1, const ClassMember& p2,
                                           const EvaluationGrid& grid,
                                           bool check_membership = false);

}  // namespace tiltcara
