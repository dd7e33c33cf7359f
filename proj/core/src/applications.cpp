#include "tiltcara/applications.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tiltcara/errors.hpp"

namespace tiltcara {

namespace {

template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw RadiusOutOfRange("radius " + std::to_string(r) + " outside [0, 1)");
}

void require_point(Complex z) {
  if (std::abs(z) > kMaxEvalRadius)
    throw OutsideEvaluationRadius("|z| exceeds the evaluation radius");
}

/// [0, g_0, g_1, ..., g_{N-1}]: multiplication by z keeping order N.
Series times_z(const Series& g) {
  std::vector<Complex> v(g.order() + 2);
  for (std::size_t n = 0; n <= g.order(); ++n) v[n + 1] = g[n];
  return Series(std::move(v));
}

Series one_minus(Complex x, std::size_t order) { return Series::linear(1.0, -x, order); }

}  // namespace

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Plain: return "plain";
    case FunctionClass::Spirallike: return "spirallike";
    case FunctionClass::Robertson: return "robertson";
    case FunctionClass::CloseToConvex: return "ctc";
    case FunctionClass::DClass: return "dclass";
  }
  return "unknown";
}

NormalizedFunction::NormalizedFunction(Series series, PointFunction value, PointFunction derivative,
                                       PointFunction second_derivative, FunctionClass tag)
    : series_(std::move(series)),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      second_(std::move(second_derivative)),
      tag_(tag) {
  if (series_.order() < 1) throw NotNormalized("normalized functions need order >= 1");
  if (std::abs(series_[0]) > kEpsSeries || std::abs(series_[1] - Complex{1.0, 0.0}) > kEpsSeries)
    throw NotNormalized("expected f(0) = 0 and f'(0) = 1");
  std::vector<Complex> c(series_.coeffs().begin(), series_.coeffs().end());
  c[0] = 0.0;
  c[1] = 1.0;
  series_ = Series(std::move(c));
}

NormalizedFunction NormalizedFunction::identity(std::size_t order) {
  return NormalizedFunction(
      Series::identity(std::max<std::size_t>(order, 1)), [](Complex z) { return z; },
      [](Complex) { return Complex{1.0, 0.0}; }, [](Complex) { return Complex{}; },
      FunctionClass::Plain);
}

Series euler_ratio(const Series& h) {
  std::vector<Complex> zh(h.order() + 1);
  for (std::size_t n = 1; n <= h.order(); ++n) zh[n] = static_cast<double>(n) * h[n];
  return div(Series(std::move(zh)), h);
}

Series starlike_ratio(const NormalizedFunction& f) {
  return euler_ratio(shift_down(f.series())) + 1.0;
}

Series convexity_ratio(const NormalizedFunction& f) {
  return euler_ratio(derivative(f.series())) + 1.0;
}

// --- spirallike ------------------------------------------------------------

NormalizedFunction spirallike_build(const TiltAngle& tilt, std::size_t order) {
  if (order < 1) throw InvalidParameter("order must be >= 1");
  const Complex m = tilt.kernel_factor();
  Series f = times_z(cpow(one_minus(1.0, order - 1), -m));
  auto value = [m](Complex z) {
    require_point(z);
    return z * std::pow(1.0 - z, -m);
  };
  auto d1 = [m](Complex z) {
    require_point(z);
    return std::pow(1.0 - z, -m - 1.0) * (1.0 + (m - 1.0) * z);
  };
  auto d2 = [m](Complex z) {
    require_point(z);
    return (m + 1.0) * std::pow(1.0 - z, -m - 2.0) * (1.0 + (m - 1.0) * z) +
           (m - 1.0) * std::pow(1.0 - z, -m - 1.0);
  };
  return NormalizedFunction(std::move(f), value, d1, d2, FunctionClass::Spirallike);
}

NormalizedFunction spirallike_from_member(const ClassMember& p) {
  const DiscreteMeasure* mu_ptr = p.measure();
  if (!mu_ptr) throw InvalidMeasure("spirallike construction needs a measure-backed member");
  const DiscreteMeasure mu = *mu_ptr;
  const Complex c = p.tilt().kernel_factor();

  // Lambda' = (p - 1)/z, f = z exp(Lambda).
  const Series lambda = integral(shift_down(p.series() - 1.0));
  Series f = times_z(exp(lambda).truncated(p.series().order() - 1));

  // f = z P with P = prod (1 - x_k z)^{-c t_k}; S = c sum t_k x_k / (1 - x_k z) = f'/f - 1/z.
  auto prod = [mu, c](Complex z) {
    Complex logp{};
    for (const auto& a : mu.atoms()) logp += -c * a.weight * std::log(1.0 - a.x * z);
    return std::exp(logp);
  };
  auto s = [mu, c](Complex z) {
    Complex v{};
    for (const auto& a : mu.atoms()) v += a.weight * a.x / (1.0 - a.x * z);
    return c * v;
  };
  auto ds = [mu, c](Complex z) {
    Complex v{};
    for (const auto& a : mu.atoms()) {
      const Complex d = 1.0 - a.x * z;
      v += a.weight * a.x * a.x / (d * d);
    }
    return c * v;
  };
  auto value = [prod](Complex z) {
    require_point(z);
    return z * prod(z);
  };
  auto d1 = [prod, s](Complex z) {
    require_point(z);
    return prod(z) * (1.0 + z * s(z));
  };
  auto d2 = [prod, s, ds](Complex z) {
    require_point(z);
    const Complex sv = s(z);
    return prod(z) * (2.0 * sv + z * (sv * sv + ds(z)));
  };
  return NormalizedFunction(std::move(f), value, d1, d2, FunctionClass::Spirallike);
}

SpirallikeReport spirallike_verify(const NormalizedFunction& f, const TiltAngle& tilt,
                                   const EvaluationGrid& grid, double tol) {
  const PointFunction ratio = [&f](Complex z) { return z * f.derivative(z) / f(z); };
  SpirallikeReport rep;
  rep.membership = membership_test(ratio, tilt, grid);
  if (!rep.membership.pass) throw NotSpirallike("z f'/f leaves the tilted half-plane");

  const double neg_inf = -std::numeric_limits<double>::infinity();
  rep.disc_excess = rep.re_excess = rep.modulus_excess = neg_inf;
  for (double r : grid.radii()) {
    const Disc disc = containment_disc(tilt, r);
    const Interval re = re_bounds(tilt, r);
    const double a = growth_A(tilt, r);
    double slack = std::numeric_limits<double>::infinity();
    for (double t : grid.angles()) {
      const Complex w = ratio(std::polar(r, t));
      const double d = std::abs(w - disc.center);
      slack = std::min(slack, disc.radius - d);
      rep.disc_excess = std::max(rep.disc_excess, d - disc.radius);
      rep.re_excess = std::max({rep.re_excess, re.lo - w.real(), w.real() - re.hi});
      rep.modulus_excess = std::max({rep.modulus_excess, 1.0 / a - std::abs(w), std::abs(w) - a});
    }
    rep.disc_slack.push_back(slack);
  }
  rep.pass = rep.disc_excess <= tol && rep.re_excess <= tol && rep.modulus_excess <= tol;
  return rep;
}

// --- Robertson -------------------------------------------------------------

NormalizedFunction robertson_build(const TiltAngle& tilt, std::size_t order) {
  if (order < 1) throw InvalidParameter("order must be >= 1");
  // Exponent 1 - 2 e^{-i l} cos l = -e^{-2 i l}; f' = (1 - z)^{beta - 1}.
  const Complex beta = -tilt.twist();
  Series f = integral(cpow(one_minus(1.0, order - 1), beta - 1.0));
  auto value = [beta](Complex z) {
    require_point(z);
    return (std::pow(1.0 - z, beta) - 1.0) / (-beta);
  };
  auto d1 = [beta](Complex z) {
    require_point(z);
    return std::pow(1.0 - z, beta - 1.0);
  };
  auto d2 = [beta](Complex z) {
    require_point(z);
    return (1.0 - beta) * std::pow(1.0 - z, beta - 2.0);
  };
  return NormalizedFunction(std::move(f), value, d1, d2, FunctionClass::Robertson);
}

double robertson_expression(const TiltAngle& tilt, double r, Complex z) {
  const Complex m = tilt.kernel_factor();
  const Complex w = r * z;
  const Complex q = std::pow(1.0 - w, m);
  return std::abs((m * w - 1.0 + q) / (r * (1.0 - q)));
}

double robertson_inner_sup(const TiltAngle& tilt, double r, const RobertsonOptions& options) {
  const double rho = 1.0 - options.boundary_eps;
  const std::size_t n = options.samples;
  auto at = [&](double theta) { return robertson_expression(tilt, r, std::polar(rho, theta)); };
  double best = -1.0;
  double best_theta = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
    const double v = at(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  const double cell = 2.0 * kPi / static_cast<double>(n);
  const auto refined = golden_max(at, best_theta - cell, best_theta + cell, 1e-10);
  return std::max(best, refined.second);
}

bool robertson_predicate(const TiltAngle& tilt, double r, const RobertsonOptions& options) {
  return robertson_inner_sup(tilt, r, options) < 1.0;
}

RadiusResult robertson_radius(const TiltAngle& tilt, double tol, const RobertsonOptions& options) {
  if (!(tol >= 1e-6)) throw InvalidParameter("bisection tolerance must be >= 1e-6");
  if (!robertson_predicate(tilt, options.r_min, options))
    throw NonConvergence("radius predicate already fails at the smallest radius");

  RadiusResult res;
  res.lo = options.r_min;
  res.hi = 1.0;
  while (res.hi - res.lo > tol) {
    if (res.iterations >= options.max_iterations)
      throw NonConvergence("bisection did not reach the requested tolerance");
    const double mid = 0.5 * (res.lo + res.hi);
    (robertson_predicate(tilt, mid, options) ? res.lo : res.hi) = mid;
    ++res.iterations;
  }
  res.width = res.hi - res.lo;
  res.touches_one = res.hi == 1.0;
  res.r_star = res.touches_one ? 1.0 : 0.5 * (res.lo + res.hi);
  res.inner_samples = options.samples;
  return res;
}

RobertsonProfile robertson_profile(const TiltAngle& tilt, const std::vector<double>& radii,
                                   const RobertsonOptions& options) {
  RobertsonProfile prof;
  prof.radii = radii;
  bool failed = false;
  for (double r : radii) {
    const double s = robertson_inner_sup(tilt, r, options);
    const bool ok = s < 1.0;
    prof.sups.push_back(s);
    prof.predicate.push_back(ok);
    if (ok && failed) prof.monotone_violations.push_back(r);
    failed = failed || !ok;
  }
  return prof;
}

// --- close-to-convex ---------------------------------------------------------

Interval ctc_distortion(const TiltAngle& tilt, double r) {
  const double a = growth_A(tilt, r);
  return {1.0 / (a * (1.0 + r) * (1.0 + r)), a / ((1.0 - r) * (1.0 - r))};
}

NormalizedFunction ctc_extremal(const TiltAngle& tilt, Complex x, Complex y, std::size_t order) {
  if (order < 1) throw InvalidParameter("order must be >= 1");
  const Series fprime =
      mul(kernel_series(tilt, x, order - 1), cpow(one_minus(y, order - 1), -2.0));
  Series f = integral(fprime);
  auto d1 = [tilt, x, y](Complex z) {
    const Complex d = 1.0 - y * z;
    return kernel_eval(tilt, x, z) / (d * d);
  };
  auto d2 = [tilt, x, y](Complex z) {
    const Complex d = 1.0 - y * z;
    return kernel_derivative(tilt, x, z) / (d * d) + 2.0 * y * kernel_eval(tilt, x, z) / (d * d * d);
  };
  auto value = [f](Complex z) { return evaluate(f, z); };
  return NormalizedFunction(std::move(f), value, d1, d2, FunctionClass::CloseToConvex);
}

CtcScanReport ctc_scan(const TiltAngle& tilt, double r, std::size_t lattice, std::size_t theta_size) {
  require_radius(r);
  auto modulus = [&](double px, double py, double theta) {
    const Complex z = std::polar(r, theta);
    const Complex d = 1.0 - std::polar(1.0, py) * z;
    return std::abs(kernel_eval(tilt, std::polar(1.0, px), z) / (d * d));
  };
  auto angle = [](std::size_t i, std::size_t n) {
    return 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
  };

  struct Best {
    double v = -std::numeric_limits<double>::infinity();
    double px = 0, py = 0, th = 0;
  } hi, lo;
  for (std::size_t k = 0; k < theta_size; ++k) {
    const double th = angle(k, theta_size);
    for (std::size_t i = 0; i < lattice; ++i)
      for (std::size_t j = 0; j < lattice; ++j) {
        const double v = modulus(angle(i, lattice), angle(j, lattice), th);
        if (v > hi.v) hi = {v, angle(i, lattice), angle(j, lattice), th};
        if (-v > lo.v) lo = {-v, angle(i, lattice), angle(j, lattice), th};
      }
  }

  const double cell = 2.0 * kPi / static_cast<double>(lattice);
  auto polish = [&](Best& b, double sign) {
    for (int round = 0; round < 3; ++round) {
      auto [px, vx] = golden_max([&](double p) { return sign * modulus(p, b.py, b.th); },
                                 b.px - cell, b.px + cell, kEpsSeries);
      if (vx > b.v) b.v = vx, b.px = px;
      auto [py, vy] = golden_max([&](double p) { return sign * modulus(b.px, p, b.th); },
                                 b.py - cell, b.py + cell, kEpsSeries);
      if (vy > b.v) b.v = vy, b.py = py;
    }
  };
  polish(hi, 1.0);
  polish(lo, -1.0);

  CtcScanReport rep;
  rep.max_modulus = hi.v;
  rep.min_modulus = -lo.v;
  rep.max_x = std::polar(1.0, hi.px);
  rep.max_y = std::polar(1.0, hi.py);
  rep.min_x = std::polar(1.0, lo.px);
  rep.min_y = std::polar(1.0, lo.py);
  return rep;
}

// --- derivative class --------------------------------------------------------

Interval dclass_distortion(const TiltAngle& tilt, double r) {
  const double a = growth_A(tilt, r);
  return {1.0 / a, a};
}

NormalizedFunction dclass_from_member(const ClassMember& p) {
  const DiscreteMeasure* mu_ptr = p.measure();
  if (!mu_ptr) throw InvalidMeasure("derivative-class construction needs a measure-backed member");
  const DiscreteMeasure mu = *mu_ptr;
  const Complex c = p.tilt().kernel_factor();
  Series f = integral(p.series()).truncated(p.series().order());
  // f = z + c sum t_k (-z - log(1 - x_k z) / x_k)
  auto value = [mu, c](Complex z) {
    require_point(z);
    Complex s{};
    for (const auto& a : mu.atoms()) s += a.weight * (-z - std::log(1.0 - a.x * z) / a.x);
    return z + c * s;
  };
  auto d1 = [p](Complex z) { return p(z); };
  auto d2 = [p](Complex z) { return p.derivative(z); };
  return NormalizedFunction(std::move(f), value, d1, d2, FunctionClass::DClass);
}

NormalizedFunction dclass_extremal(const TiltAngle& tilt, std::size_t order) {
  return dclass_from_member(herglotz_build(tilt, DiscreteMeasure::point(1.0), order));
}

PreschwarzianReport preschwarzian_norm(const NormalizedFunction& f, const std::vector<double>& radii,
                                       std::size_t angles) {
  auto weighted = [&f](double r, double theta) {
    const Complex z = std::polar(r, theta);
    const Complex d1 = f.derivative(z);
    if (std::abs(d1) <= kEpsDiv) throw VanishingDerivative("f' vanishes on the grid");
    return (1.0 - r * r) * std::abs(f.second_derivative(z) / d1);
  };
  PreschwarzianReport rep;
  rep.norm = -1.0;
  const double cell = 2.0 * kPi / static_cast<double>(angles);
  for (double r : radii) {
    double best = -1.0;
    double best_theta = 0.0;
    for (std::size_t j = 0; j < angles; ++j) {
      const double theta = -kPi + cell * static_cast<double>(j + 1);
      const double v = weighted(r, theta);
      if (v > best) {
        best = v;
        best_theta = theta;
      }
    }
    const auto [t, v] = golden_max([&](double th) { return weighted(r, th); }, best_theta - cell,
                                   best_theta + cell, 1e-9);
    if (v > best) {
      best = v;
      best_theta = t;
    }
    if (best > rep.norm) {
      rep.norm = best;
      rep.at = {r, best_theta};
    }
  }
  return rep;
}

}  // namespace tiltcara
