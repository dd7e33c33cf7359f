#include "tiltcara/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tiltcara/errors.hpp"
#include "tiltcara/random.hpp"

namespace tiltcara {

namespace {

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

/// Maximizes f on [a, b] by golden-section search; returns (argmax, max).
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

double sense_sign(BoundReport::Sense s) { return s == BoundReport::Sense::Upper ? 1.0 : -1.0; }

Sample kernel_sample(const TiltAngle& tilt, Complex x, Complex z) {
  return {z, kernel_eval(tilt, x, z), kernel_derivative(tilt, x, z)};
}

void finish_report(BoundReport& rep, const Functional& J, double r) {
  if (J.bound) {
    rep.bound = J.bound(r);
    rep.gap = BoundReport::gap_of(rep.sense, rep.bound, rep.achieved);
  } else {
    rep.bound = std::numeric_limits<double>::quiet_NaN();
    rep.gap = std::numeric_limits<double>::quiet_NaN();
  }
  if (J.predicted_alpha && rep.witness_alpha) {
    rep.predicted_alpha = J.predicted_alpha(r);
    double err = std::numeric_limits<double>::infinity();
    for (double a : rep.predicted_alpha)
      err = std::min(err, std::abs(wrap_angle(*rep.witness_alpha - a)));
    rep.alpha_error = err;
  }
}

BoundReport scan_coefficients(const ExtremalFamily& family, const Functional& J,
                              const ScanOptions& options) {
  const double sign = sense_sign(J.sense);
  const Complex factor = family.tilt.kernel_factor();
  double best = -std::numeric_limits<double>::infinity();
  Complex best_x{1.0, 0.0};
  for (std::size_t j = 0; j < family.lattice_size; ++j) {
    const Complex x = std::polar(1.0, family.phi(j));
    Complex xn = 1.0;
    for (std::size_t n = 1; n <= options.order; ++n) {
      xn *= x;
      const double v = sign * J.coefficient(factor * xn, n);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
  }
  BoundReport rep;
  rep.name = J.name;
  rep.sense = J.sense;
  rep.achieved = sign * best;
  rep.witness_x = best_x;
  finish_report(rep, J, 0.0);
  return rep;
}

}  // namespace

double ExtremalFamily::phi(std::size_t j) const {
  return phase_offset + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(lattice_size);
}

std::vector<double> WFamily::default_t_values(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return t;
}

std::vector<BoundReport> scan_extremal(const ExtremalFamily& family, const Functional& J,
                                       const std::vector<double>& radii,
                                       const ScanOptions& options) {
  if (J.coefficient) return {scan_coefficients(family, J, options)};

  const double sign = sense_sign(J.sense);
  const TiltAngle& tilt = family.tilt;
  const std::size_t K = family.lattice_size;
  auto objective = [&](double phi, double r, double theta) {
    return sign * J.pointwise(kernel_sample(tilt, std::polar(1.0, phi), std::polar(r, theta)));
  };

  std::vector<BoundReport> out;
  out.reserve(radii.size());
  for (double r : radii) {
    double best = -std::numeric_limits<double>::infinity();
    double best_phi = 0.0;
    double best_theta = 0.0;
    for (std::size_t j = 0; j < K; ++j) {
      const double phi = family.phi(j);
      for (std::size_t k = 0; k < K; ++k) {
        const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(K);
        const double v = objective(phi, r, theta);
        if (v > best) {
          best = v;
          best_phi = phi;
          best_theta = theta;
        }
      }
    }

    if (options.refine) {
      const double cell = 2.0 * kPi / static_cast<double>(K);
      for (int round = 0; round < 2; ++round) {
        auto [p, vp] = golden_max([&](double phi) { return objective(phi, r, best_theta); },
                                  best_phi - cell, best_phi + cell, options.refine_tol);
        if (vp > best) {
          best = vp;
          best_phi = p;
        }
        auto [t, vt] = golden_max([&](double theta) { return objective(best_phi, r, theta); },
                                  best_theta - cell, best_theta + cell, options.refine_tol);
        if (vt > best) {
          best = vt;
          best_theta = t;
        }
      }
    }

    BoundReport rep;
    rep.name = J.name;
    rep.sense = J.sense;
    rep.radius = r;
    rep.achieved = sign * best;
    rep.witness_x = std::polar(1.0, best_phi);
    rep.witness_z = std::polar(r, best_theta);
    rep.witness_alpha = wrap_angle(best_phi + best_theta);
    finish_report(rep, J, r);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<WScanReport> scan_w_family(const WFamily& family, const Functional& J,
                                       const std::vector<double>& radii) {
  if (!J.pointwise) throw UnknownBound("mixture scans need a pointwise functional");
  const double sign = sense_sign(J.sense);
  const TiltAngle& tilt = family.tilt;
  auto angle = [](std::size_t i, std::size_t n) {
    return 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
  };

  std::vector<WScanReport> out;
  for (double r : radii) {
    WScanReport rep;
    double best = -std::numeric_limits<double>::infinity();
    double best_conj = best;
    Complex bx, bz, cx, cz;

    auto mixture = [&](double t, Complex x, Complex y, Complex z) {
      const Sample sx = kernel_sample(tilt, x, z);
      const Sample sy = kernel_sample(tilt, y, z);
      return sign * J.pointwise({z, t * sx.value + (1.0 - t) * sy.value,
                                 t * sx.derivative + (1.0 - t) * sy.derivative});
    };

    for (double t : family.t_values) {
      for (std::size_t i = 0; i < family.x_size; ++i) {
        const Complex x = std::polar(1.0, angle(i, family.x_size));
        for (std::size_t k = 0; k < family.theta_size; ++k) {
          const Complex z = std::polar(r, angle(k, family.theta_size));
          const double vc = mixture(t, x, std::conj(x), z);
          ++rep.evaluations;
          if (vc > best_conj) {
            best_conj = vc;
            cx = x;
            cz = z;
          }
          for (std::size_t j = 0; j < family.y_size; ++j) {
            const Complex y = std::polar(1.0, angle(j, family.y_size));
            const double v = mixture(t, x, y, z);
            ++rep.evaluations;
            if (v > best) {
              best = v;
              bx = x;
              bz = z;
            }
          }
        }
      }
    }

    for (auto* part : {&rep.general, &rep.conjugate}) {
      part->name = J.name;
      part->sense = J.sense;
      part->radius = r;
    }
    rep.general.achieved = sign * best;
    rep.general.witness_x = bx;
    rep.general.witness_z = bz;
    rep.conjugate.achieved = sign * best_conj;
    rep.conjugate.witness_x = cx;
    rep.conjugate.witness_z = cz;
    finish_report(rep.general, J, r);
    finish_report(rep.conjugate, J, r);
    out.push_back(std::move(rep));
  }
  return out;
}

ClassMember random_member(const TiltAngle& tilt, std::size_t k_atoms, std::uint64_t seed,
                          std::size_t order) {
  if (k_atoms == 0) throw InvalidMeasure("a random member needs at least one atom");
  Rng rng(seed);
  std::vector<Atom> atoms(k_atoms);
  double total = 0.0;
  for (auto& a : atoms) {
    a.x = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
    a.weight = rng.exponential();
    total += a.weight;
  }
  for (auto& a : atoms) a.weight /= total;
  return herglotz_build(tilt, DiscreteMeasure(std::move(atoms)), order);
}

const std::vector<std::string>& registered_bounds() {
  static const std::vector<std::string> names{"coeff",   "deriv", "disc",  "growth_hi",
                                              "growth_lo", "re_hi", "re_lo", "logderiv_M"};
  return names;
}

Functional bound_functional(const std::string& name, const TiltAngle& tilt, std::size_t order) {
  using Sense = BoundReport::Sense;
  Functional J;
  J.name = name;
  if (name == "coeff") {
    J.coefficient = [](Complex pn, std::size_t) { return std::abs(pn); };
    J.bound = [tilt](double) { return coeff_bound(tilt); };
    (void)order;
  } else if (name == "deriv") {
    J.pointwise = [](const Sample& s) { return std::abs(s.derivative); };
    J.bound = [tilt](double r) { return deriv_bound(tilt, r); };
  } else if (name == "disc") {
    J.pointwise = [tilt](const Sample& s) {
      return std::abs(s.value - containment_disc(tilt, std::abs(s.z)).center);
    };
    J.bound = [tilt](double r) { return containment_disc(tilt, r).radius; };
  } else if (name == "growth_hi" || name == "growth_lo") {
    J.pointwise = [](const Sample& s) { return std::abs(s.value); };
    if (name == "growth_hi") {
      J.bound = [tilt](double r) { return growth_A(tilt, r); };
    } else {
      J.sense = Sense::Lower;
      J.bound = [tilt](double r) { return 1.0 / growth_A(tilt, r); };
    }
  } else if (name == "re_hi" || name == "re_lo") {
    J.pointwise = [](const Sample& s) { return s.value.real(); };
    if (name == "re_hi") {
      J.bound = [tilt](double r) { return re_bounds(tilt, r).hi; };
    } else {
      J.sense = Sense::Lower;
      J.bound = [tilt](double r) { return re_bounds(tilt, r).lo; };
    }
  } else if (name == "logderiv_M") {
    // Not convex in p; the kernel reduction comes from subordination instead.
    J.convex = false;
    J.pointwise = [](const Sample& s) { return std::abs(s.z * s.derivative / s.value); };
    J.bound = [tilt](double r) { return logderiv_M(tilt, r); };
    J.predicted_alpha = [tilt](double r) { return extremal_alpha(tilt, r); };
  } else {
    throw UnknownBound("unknown bound '" + name + "'");
  }
  return J;
}

BoundReport sharpness_certificate(const std::string& name, const TiltAngle& tilt, double r,
                                  const CertificateOptions& options) {
  const Functional J = bound_functional(name, tilt, options.order);
  if (!J.coefficient && !(r >= 0.0 && r < 1.0))
    throw RadiusOutOfRange("certificate radius outside [0, 1)");
  const ExtremalFamily family{tilt, options.lattice_size, 0.0};
  ScanOptions scan;
  scan.order = options.order;
  BoundReport rep = scan_extremal(family, J, {r}, scan).front();
  if (options.bound_scale != 1.0) {
    rep.bound *= options.bound_scale;
    rep.gap = BoundReport::gap_of(rep.sense, rep.bound, rep.achieved);
  }
  return rep;
}

bool certified(const BoundReport& report) {
  return report.gap >= -kEpsSeries && report.gap <= kCertificateGap;
}

}  // namespace tiltcara
