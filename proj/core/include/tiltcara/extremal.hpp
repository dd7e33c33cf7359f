#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tiltcara/bounds.hpp"
#include "tiltcara/caratheodory.hpp"

namespace tiltcara {

inline constexpr std::size_t kDefaultLattice = 512;
inline constexpr double kRefineTol = 1e-9;
/// Largest accepted bound - scan gap for a sharpness certificate.
inline constexpr double kCertificateGap = 1e-6;

/// The rotated kernels p_lambda(x z), x = e^{i phi}, phi = offset + 2 pi j / K.
struct ExtremalFamily {
  TiltAngle tilt;
  std::size_t lattice_size = kDefaultLattice;
  double phase_offset = 0.0;

  double phi(std::size_t j) const;
};

/// Two-kernel mixtures t p_lambda(x z) + (1 - t) p_lambda(y z).
struct WFamily {
  TiltAngle tilt;
  std::vector<double> t_values = default_t_values();
  std::size_t x_size = 64;
  std::size_t y_size = 64;
  std::size_t theta_size = 64;

  static std::vector<double> default_t_values(std::size_t n = 33);
};

/// What a pointwise functional sees at one point of one member.
struct Sample {
  Complex z;
  Complex value;       // p(z)
  Complex derivative;  // p'(z)
};

/// A real functional of a class member.
///
/// Exactly one of `pointwise` (a map of p(z), p'(z), z) or `coefficient`
/// (a map of p_n, n) is set. `convex` records whether maximizing over the
/// rotated kernels alone is justified for it.
struct Functional {
  std::string name;
  BoundReport::Sense sense = BoundReport::Sense::Upper;
  bool convex = true;
  std::function<double(const Sample&)> pointwise;
  std::function<double(Complex, std::size_t)> coefficient;
  /// Optional closed-form value of the extremum as a function of r.
  std::function<double(double)> bound;
  /// Optional predicted arg(x z) of the attaining point.
  std::function<std::vector<double>(double)> predicted_alpha;
};

struct ScanOptions {
  bool refine = true;
  double refine_tol = kRefineTol;
  /// Coefficient functionals scan n = 1..order.
  std::size_t order = kDefaultOrder;
};

/// Extremum of J over the (phi, theta) lattice for every radius, optionally
/// polished by golden-section search around the best lattice cell. Ties keep
/// the smallest phi, then the smallest theta.
std::vector<BoundReport> scan_extremal(const ExtremalFamily& family, const Functional& J,
                                       const std::vector<double>& radii,
                                       const ScanOptions& options = {});

struct WScanReport {
  BoundReport general;    // all (t, x, y, theta)
  BoundReport conjugate;  // the y = conj(x) sublattice
  std::size_t evaluations = 0;
};

/// Lattice-only extremum of a pointwise J over the two-kernel mixtures.
std::vector<WScanReport> scan_w_family(const WFamily& family, const Functional& J,
                                       const std::vector<double>& radii);

/// A reproducible member built from `k_atoms` uniform atoms with
/// Dirichlet(1, ..., 1) weights.
ClassMember random_member(const TiltAngle& tilt, std::size_t k_atoms, std::uint64_t seed,
                          std::size_t order = kDefaultOrder);

/// Names accepted by sharpness_certificate.
const std::vector<std::string>& registered_bounds();

/// The functional behind a registered bound; throws UnknownBound.
Functional bound_functional(const std::string& name, const TiltAngle& tilt,
                            std::size_t order = kDefaultOrder);

struct CertificateOptions {
  std::size_t lattice_size = kDefaultLattice;
  std::size_t order = kDefaultOrder;
  /// Multiplies the closed-form bound; anything but 1 is a fault-injection hook.
  double bound_scale = 1.0;
};

/// Scans the extremal family for the named bound at radius r and reports the
/// refined gap and the attaining witness.
BoundReport sharpness_certificate(const std::string& name, const TiltAngle& tilt, double r,
                                  const CertificateOptions& options = {});

/// True when -kEpsSeries <= gap <= kCertificateGap.
bool certified(const BoundReport& report);

}  // namespace tiltcara
