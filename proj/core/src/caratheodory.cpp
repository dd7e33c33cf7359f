#include "tiltcara/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tiltcara/errors.hpp"

namespace tiltcara {

namespace {

constexpr double kMeasureTol = 1e-12;

void require_radius(Complex z) {
  if (std::abs(z) > kMaxEvalRadius)
    throw OutsideEvaluationRadius("|z| = " + std::to_string(std::abs(z)) +
                                  " exceeds the evaluation radius");
}

bool strictly_increasing(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

/// 1 + c sum_k t_k w_k/(1 - w_k) with w_k = x_k z, the shape shared by every
/// measure-backed member and by convolutions of two of them.
Complex mixture_value(Complex c, const DiscreteMeasure& mu, Complex z) {
  Complex s{};
  for (const auto& a : mu.atoms()) {
    const Complex w = a.x * z;
    s += a.weight * w / (1.0 - w);
  }
  return 1.0 + c * s;
}

Complex mixture_derivative(Complex c, const DiscreteMeasure& mu, Complex z) {
  Complex s{};
  for (const auto& a : mu.atoms()) {
    const Complex d = 1.0 - a.x * z;
    s += a.weight * a.x / (d * d);
  }
  return c * s;
}

Series mixture_series(Complex c, const DiscreteMeasure& mu, std::size_t order) {
  std::vector<Complex> v(order + 1);
  v[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n) v[n] = c * mu.moment(n);
  return Series(std::move(v));
}

ClassMember measure_member(const TiltAngle& tilt, Complex c, const DiscreteMeasure& mu,
                           std::size_t order) {
  auto value = [c, mu](Complex z) {
    require_radius(z);
    return mixture_value(c, mu, z);
  };
  auto deriv = [c, mu](Complex z) {
    require_radius(z);
    return mixture_derivative(c, mu, z);
  };
  return ClassMember(tilt, mixture_series(c, mu, order), value, deriv, mu);
}

template <typename Scalar>
struct GridMin {
  double value = std::numeric_limits<double>::infinity();
  GridPoint at;
  Scalar extra{};

  // Strict comparison keeps the lexicographically first (radius, angle) on ties
  // because the grid is visited in that order.
  void offer(double v, double r, double t, Scalar e = {}) {
    if (v < value) {
      value = v;
      at = {r, t};
      extra = e;
    }
  }
};

}  // namespace

// --- TiltAngle ------------------------------------------------------------

bool TiltAngle::admissible(double lambda) noexcept {
  return std::isfinite(lambda) && std::abs(lambda) <= kPi / 2 - kEpsAngle;
}

TiltAngle::TiltAngle(double lambda) : lambda_(lambda) {
  if (!admissible(lambda))
    throw InvalidTilt("tilt " + std::to_string(lambda) + " outside (-pi/2, pi/2)");
}

// --- DiscreteMeasure -------------------------------------------------------

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidMeasure("measure has no atoms");
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!(std::abs(std::abs(a.x) - 1.0) <= kMeasureTol))
      throw InvalidMeasure("atom is not unimodular");
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight))
      throw InvalidMeasure("negative or non-finite atom weight");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > kMeasureTol) throw InvalidMeasure("weights do not sum to 1");
}

DiscreteMeasure DiscreteMeasure::point(Complex x) { return DiscreteMeasure({{x, 1.0}}); }

Complex DiscreteMeasure::moment(std::size_t n) const {
  Complex s{};
  for (const auto& a : atoms_) s += a.weight * std::pow(a.x, static_cast<int>(n));
  return s;
}

DiscreteMeasure product(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::vector<Atom> atoms;
  atoms.reserve(a.size() * b.size());
  double total = 0.0;
  for (const auto& p : a.atoms())
    for (const auto& q : b.atoms()) {
      const Complex x = p.x * q.x;
      atoms.push_back({x / std::abs(x), p.weight * q.weight});
      total += p.weight * q.weight;
    }
  for (auto& at : atoms) at.weight /= total;
  return DiscreteMeasure(std::move(atoms));
}

// --- ClassMember -----------------------------------------------------------

ClassMember::ClassMember(TiltAngle tilt, Series series, PointFunction value,
                         PointFunction derivative, Provenance provenance)
    : tilt_(tilt),
      series_(std::move(series)),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      provenance_(std::move(provenance)) {
  if (std::abs(series_[0] - Complex{1.0, 0.0}) > kEpsSeries)
    throw InvalidSeries("class member must satisfy p(0) = 1");
  std::vector<Complex> c(series_.coeffs().begin(), series_.coeffs().end());
  c[0] = 1.0;
  series_ = Series(std::move(c));
}

// --- EvaluationGrid --------------------------------------------------------

EvaluationGrid::EvaluationGrid(std::vector<double> radii, std::vector<double> angles)
    : radii_(std::move(radii)), angles_(std::move(angles)) {
  if (radii_.empty() || angles_.empty()) throw InvalidGrid("grid must be nonempty");
  if (!strictly_increasing(radii_) || !strictly_increasing(angles_))
    throw InvalidGrid("grid lists must be strictly increasing");
  if (!(radii_.front() > 0.0) || radii_.back() > kMaxEvalRadius)
    throw InvalidGrid("grid radii must lie in (0, r_max]");
  if (!(angles_.front() > -kPi) || angles_.back() > kPi)
    throw InvalidGrid("grid angles must lie in (-pi, pi]");
}

std::vector<double> EvaluationGrid::equispaced_angles(std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t j = 0; j < n; ++j)
    a[j] = -kPi + 2.0 * kPi * static_cast<double>(j + 1) / static_cast<double>(n);
  a.back() = kPi;
  return a;
}

EvaluationGrid EvaluationGrid::standard() {
  std::vector<double> radii;
  constexpr int kInner = 23;
  for (int i = 0; i < kInner; ++i) radii.push_back(0.05 + 0.9 * i / (kInner - 1));
  radii.push_back(0.99);
  return EvaluationGrid(std::move(radii), equispaced_angles(256));
}

// --- kernel ----------------------------------------------------------------

Complex kernel_eval(const TiltAngle& tilt, Complex x, Complex z) {
  require_radius(z);
  const Complex w = x * z;
  return (1.0 + tilt.twist() * w) / (1.0 - w);
}

Complex kernel_derivative(const TiltAngle& tilt, Complex x, Complex z) {
  require_radius(z);
  const Complex d = 1.0 - x * z;
  return x * tilt.kernel_factor() / (d * d);
}

Series kernel_series(const TiltAngle& tilt, Complex x, std::size_t order) {
  std::vector<Complex> v(order + 1);
  v[0] = 1.0;
  Complex xn = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    xn *= x;
    v[n] = tilt.kernel_factor() * xn;
  }
  return Series(std::move(v));
}

ClassMember herglotz_build(const TiltAngle& tilt, const DiscreteMeasure& mu, std::size_t order) {
  return measure_member(tilt, tilt.kernel_factor(), mu, order);
}

// --- tilt transform --------------------------------------------------------

ClassMember tilt_to_base(const ClassMember& p) {
  const TiltAngle& tilt = p.tilt();
  const TiltAngle base(0.0);
  if (const auto* mu = p.measure()) return herglotz_build(base, *mu, p.series().order());

  const Complex rot = tilt.rotation();
  const double c = std::cos(tilt.value());
  const Complex shift{0.0, std::sin(tilt.value())};
  auto value = [p, rot, c, shift](Complex z) { return (rot * p(z) - shift) / c; };
  auto deriv = [p, rot, c](Complex z) { return rot * p.derivative(z) / c; };
  Series q = (1.0 / c) * ((rot * p.series()) - shift);
  return ClassMember(base, std::move(q), value, deriv, ClosedForm{"tilt_to_base"});
}

ClassMember base_to_tilt(const ClassMember& q, const TiltAngle& tilt) {
  if (q.tilt().value() != 0.0) throw TiltMismatch("base_to_tilt expects an untilted member");
  if (const auto* mu = q.measure()) return herglotz_build(tilt, *mu, q.series().order());

  const Complex back = std::conj(tilt.rotation());
  const double c = std::cos(tilt.value());
  const Complex shift{0.0, std::sin(tilt.value())};
  auto value = [q, back, c, shift](Complex z) { return back * (c * q(z) + shift); };
  auto deriv = [q, back, c](Complex z) { return back * c * q.derivative(z); };
  Series p = back * ((c * q.series()) + shift);
  return ClassMember(tilt, std::move(p), value, deriv, ClosedForm{"base_to_tilt"});
}

// --- membership ------------------------------------------------------------

MembershipReport membership_test(const PointFunction& p, const TiltAngle& tilt,
                                 const EvaluationGrid& grid) {
  const Complex rot = tilt.rotation();
  GridMin<int> m;
  grid.for_each([&](double r, double t, Complex z) { m.offer((rot * p(z)).real(), r, t); });
  return {m.value, m.at, m.value > 0.0};
}

// --- subordination ---------------------------------------------------------

Series subordination_omega(const ClassMember& p) {
  const Series& s = p.series();
  return div(s - 1.0, s + p.tilt().twist());
}

Complex omega_at(const ClassMember& p, Complex z) {
  const Complex v = p(z);
  return (v - 1.0) / (v + p.tilt().twist());
}

// --- dual family -----------------------------------------------------------

Complex dual_coefficient(const TiltAngle& tilt, Complex y) {
  return (1.0 - tilt.twist() * y) / (tilt.kernel_factor() * y);
}

Series dual_element(Complex a, std::size_t order) {
  return mul(Series::linear(1.0, a, order), Series::geometric(order));
}

std::vector<Complex> default_dual_samples() {
  std::vector<Complex> xs;
  for (int k = 1; k < 64; ++k) xs.push_back(std::polar(1.0, 2.0 * kPi * k / 64.0));
  return xs;
}

DualLineReport dual_line_check(const ClassMember& p, const EvaluationGrid& grid,
                               const std::vector<Complex>& x_samples) {
  struct Coef {
    Complex x, a;
  };
  std::vector<Coef> coefs;
  coefs.reserve(x_samples.size());
  for (Complex x : x_samples) {
    if (std::abs(x - 1.0) < kEpsDiv) throw InvalidGrid("dual samples must exclude x = 1");
    coefs.push_back({x, dual_coefficient(p.tilt(), -x)});
  }

  GridMin<Complex> m;
  grid.for_each([&](double r, double t, Complex z) {
    const Complex v = p(z);
    for (const auto& c : coefs) {
      // (p * h)(z) = (1 + A) p(z) - A vanishes exactly when p(z) hits the line point.
      const Complex conv = (1.0 + c.a) * v - c.a;
      m.offer(std::abs(conv) / std::abs(1.0 + c.a), r, t, c.x);
    }
  });
  return {m.value, m.at, m.extra, m.value > kEpsLine};
}

// --- convolution -----------------------------------------------------------

ClassMember schur_half_hadamard(const ClassMember& p1, const ClassMember& p2) {
  if (p1.tilt().value() != 0.0 || p2.tilt().value() != 0.0)
    throw TiltMismatch("Schur product is defined for untilted members");
  const TiltAngle base(0.0);
  const std::size_t order = std::min(p1.series().order(), p2.series().order());
  if (p1.measure() && p2.measure())
    return herglotz_build(base, product(*p1.measure(), *p2.measure()), order);

  Series s = 0.5 * hadamard(p1.series(), p2.series());
  std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
  c[0] = 1.0;
  Series half(std::move(c));
  Series dhalf = derivative(half);
  auto value = [half](Complex z) { return evaluate(half, z); };
  auto deriv = [dhalf](Complex z) { return evaluate(dhalf, z); };
  return ClassMember(base, std::move(half), value, deriv, ClosedForm{"schur_half_hadamard"});
}

Complex convolution_value(const ClassMember& p1, const ClassMember& p2, Complex z) {
  if (p1.measure() && p2.measure()) {
    require_radius(z);
    const Complex c = p1.tilt().kernel_factor() * p2.tilt().kernel_factor();
    return mixture_value(c, product(*p1.measure(), *p2.measure()), z);
  }
  return evaluate(hadamard(p1.series(), p2.series()), z);
}

ConvolutionReport tilted_convolution_bound(const ClassMember& p1, const ClassMember& p2,
                                           const EvaluationGrid& grid, bool check_membership) {
  const double l1 = p1.tilt().value();
  const double l2 = p2.tilt().value();
  if (check_membership && std::abs(l1 + l2) >= kPi / 2 - kEpsAngle)
    throw TiltSumOutOfRange("tilt sum outside (-pi/2, pi/2)");

  const Complex rot = std::polar(1.0, l1 + l2);
  const bool both_measures = p1.measure() && p2.measure();
  const Complex c = p1.tilt().kernel_factor() * p2.tilt().kernel_factor();
  const DiscreteMeasure mu = both_measures ? product(*p1.measure(), *p2.measure())
                                           : DiscreteMeasure::point(1.0);
  const Series conv = hadamard(p1.series(), p2.series());

  GridMin<int> m;
  grid.for_each([&](double r, double t, Complex z) {
    const Complex v = both_measures ? mixture_value(c, mu, z) : evaluate(conv, z);
    m.offer((rot * v).real(), r, t);
  });

  ConvolutionReport rep;
  rep.min_value = m.value;
  rep.argmin = m.at;
  rep.lower_bound = -std::cos(l1 - l2);
  rep.bound_holds = m.value > rep.lower_bound - kEpsSeries;
  if (check_membership && rep.lower_bound >= 0.0) rep.membership_holds = m.value > 0.0;
  return rep;
}

}  // namespace tiltcara
