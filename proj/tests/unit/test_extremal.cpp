#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tiltcara/bounds.hpp"
#include "tiltcara/errors.hpp"
#include "tiltcara/extremal.hpp"
#include "tiltcara/random.hpp"

using namespace tiltcara;
using doctest::Approx;

namespace {

Functional modulus_functional() {
  Functional J;
  J.name = "modulus";
  J.pointwise = [](const Sample& s) { return std::abs(s.value); };
  return J;
}

Functional logderiv_functional() {
  Functional J;
  J.name = "logderiv";
  J.pointwise = [](const Sample& s) { return std::abs(s.z * s.derivative / s.value); };
  return J;
}

double wrapped_distance(double a, double b) { return std::abs(std::remainder(a - b, 2 * kPi)); }

}  // namespace

TEST_CASE("ExtremalFamily lattice") {
  const ExtremalFamily f{TiltAngle(0.2), 8, 0.1};
  CHECK(f.phi(0) == 0.1);
  CHECK(f.phi(4) == Approx(0.1 + kPi));
  const auto t = WFamily::default_t_values();
  REQUIRE(t.size() == 33);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == 1.0);
}

TEST_CASE("scan_extremal: coefficient modulus is rotation invariant") {
  const TiltAngle tilt(kPi / 3);
  Functional J;
  J.name = "coeff";
  J.coefficient = [](Complex pn, std::size_t) { return std::abs(pn); };
  ScanOptions opts;
  opts.order = 16;
  const auto rep = scan_extremal({tilt, 32}, J, {}, opts);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].achieved == Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(std::abs(*rep[0].witness_x) - 1.0) < 1e-15);
}

TEST_CASE("scan_extremal: |p| at lambda = 0, r = 1/2") {
  const auto rep = scan_extremal({TiltAngle(0.0), 64}, modulus_functional(), {0.5});
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].achieved == Approx(3.0).epsilon(1e-12));
  CHECK(wrapped_distance(*rep[0].witness_alpha, 0.0) < 1e-4);
  CHECK(std::isnan(rep[0].bound));
}

TEST_CASE("scan_extremal: log-derivative on the small branch") {
  const TiltAngle tilt(1.2);
  const double r = 0.3;
  REQUIRE(r < logderiv_branch_radius(tilt));
  ScanOptions coarse;
  coarse.refine = false;
  const auto lattice = scan_extremal({tilt, 128}, logderiv_functional(), {r}, coarse);
  const auto refined = scan_extremal({tilt, 128}, logderiv_functional(), {r});
  const double M = logderiv_M(tilt, r);
  CHECK(lattice[0].achieved <= M + 1e-12);
  CHECK(M - lattice[0].achieved < 1e-2);
  CHECK(std::abs(M - refined[0].achieved) < 1e-9);
  CHECK(refined[0].achieved >= lattice[0].achieved);
}

TEST_CASE("scan_extremal: ties resolve to the smallest phi then theta") {
  Functional J;
  J.name = "const";
  J.pointwise = [](const Sample&) { return 1.0; };
  ScanOptions opts;
  opts.refine = false;
  const auto rep = scan_extremal({TiltAngle(0.4), 16, 0.25}, J, {0.5}, opts);
  CHECK(*rep[0].witness_x == std::polar(1.0, 0.25));
  CHECK(*rep[0].witness_z == std::polar(0.5, 0.0));
}

TEST_CASE("scan_extremal is equivariant under a one-step lattice rotation") {
  const TiltAngle tilt(0.7);
  const std::size_t K = 48;
  const double step = 2 * kPi / K;
  ScanOptions opts;
  opts.refine = false;
  for (const auto& J : {modulus_functional(), logderiv_functional()}) {
    const auto a = scan_extremal({tilt, K, 0.0}, J, {0.4, 0.8}, opts);
    const auto b = scan_extremal({tilt, K, step}, J, {0.4, 0.8}, opts);
    for (std::size_t i = 0; i < a.size(); ++i) {
      // the shifted family contains the same x z products
      CHECK(a[i].achieved == Approx(b[i].achieved).epsilon(1e-12));
      CHECK(wrapped_distance(*a[i].witness_alpha, *b[i].witness_alpha) < step * (1 + 1e-9));
    }
  }
}

TEST_CASE("scan_w_family with t = 1 recovers the unrefined extremal scan") {
  const TiltAngle tilt(0.5);
  WFamily w{tilt, {1.0}, 16, 4, 16};
  ScanOptions opts;
  opts.refine = false;
  for (const auto& J : {modulus_functional(), logderiv_functional()}) {
    const auto ws = scan_w_family(w, J, {0.3, 0.7});
    const auto es = scan_extremal({tilt, 16}, J, {0.3, 0.7}, opts);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      CHECK(ws[i].general.achieved == es[i].achieved);
      CHECK(ws[i].conjugate.achieved == es[i].achieved);
      CHECK(*ws[i].conjugate.witness_x == *es[i].witness_x);
      CHECK(*ws[i].conjugate.witness_z == *es[i].witness_z);
    }
  }
}

TEST_CASE("two-kernel average at x = 1, y = -1") {
  // Re of both kernels at z = i r is (1 - r^2)/(1 + r^2), so the average is real with that value
  const TiltAngle tilt(0.0);
  for (double r : {0.1, 0.5, 0.9}) {
    const Complex z(0.0, r);
    const Complex avg = 0.5 * kernel_eval(tilt, 1.0, z) + 0.5 * kernel_eval(tilt, -1.0, z);
    CHECK(std::abs(avg - (1.0 + z * z) / (1.0 - z * z)) < 1e-15);
    CHECK(avg.real() == Approx((1 - r * r) / (1 + r * r)).epsilon(1e-15));
    CHECK(std::abs(avg.imag()) < 1e-15);
  }
}

TEST_CASE("scan_w_family does not beat the extremal scan for a convex functional") {
  const TiltAngle tilt(0.6);
  const WFamily w{tilt, WFamily::default_t_values(9), 24, 24, 24};
  const auto J = bound_functional("growth_hi", tilt);
  const auto ws = scan_w_family(w, J, {0.5});
  const auto es = scan_extremal({tilt, 24}, J, {0.5});
  CHECK(ws[0].general.achieved <= es[0].achieved + 1e-12);
  CHECK(ws[0].conjugate.achieved <= ws[0].general.achieved);
  CHECK(ws[0].evaluations == 9u * 24 * 24 * 25);
  CHECK_THROWS_AS(scan_w_family(w, bound_functional("coeff", tilt), {0.5}), UnknownBound);
}

TEST_CASE("random_member") {
  const TiltAngle tilt(0.5);
  SUBCASE("one atom is a kernel rotation") {
    const auto p = random_member(tilt, 1, 7);
    REQUIRE(p.measure() != nullptr);
    const Complex x = p.measure()->atoms().front().x;
    CHECK(p.measure()->atoms().front().weight == 1.0);
    for (std::size_t n = 1; n < 10; ++n)
      CHECK(std::abs(p.series()[n] - tilt.kernel_factor() * std::pow(x, double(n))) < 1e-13);
  }
  SUBCASE("deterministic per seed") {
    const auto a = random_member(tilt, 5, 99);
    const auto b = random_member(tilt, 5, 99);
    CHECK(a.series() == b.series());
    CHECK_FALSE(a.series() == random_member(tilt, 5, 100).series());
  }
  SUBCASE("first coefficient stays within 2 cos lambda") {
    double worst = 0;
    for (std::uint64_t s = 0; s < 1000; ++s)
      worst = std::max(worst, std::abs(random_member(tilt, 1 + s % 6, s, 4).series()[1]));
    CHECK(worst <= 2 * std::cos(0.5) + 1e-12);
  }
  CHECK_THROWS_AS(random_member(tilt, 0, 1), InvalidMeasure);
}

TEST_CASE("sharpness certificates") {
  CertificateOptions opts;
  opts.lattice_size = 128;
  opts.order = 16;
  SUBCASE("coeff at lambda = 0") {
    const auto rep = sharpness_certificate("coeff", TiltAngle(0.0), 0.0, opts);
    CHECK(rep.bound == 2.0);
    CHECK(std::abs(rep.gap) < 1e-13);
    CHECK(certified(rep));
  }
  SUBCASE("growth_hi at lambda = 0, r = 1/2") {
    const auto rep = sharpness_certificate("growth_hi", TiltAngle(0.0), 0.5, opts);
    CHECK(rep.bound == Approx(3.0));
    CHECK(certified(rep));
  }
  SUBCASE("logderiv_M witness angle at lambda = 0.9, r = 0.2") {
    const TiltAngle tilt(0.9);
    const auto rep = sharpness_certificate("logderiv_M", tilt, 0.2, opts);
    CHECK(certified(rep));
    REQUIRE(rep.alpha_error.has_value());
    CHECK(*rep.alpha_error < 1e-4);
    CHECK(wrapped_distance(*rep.witness_alpha, -kPi / 2 + 0.9) < 1e-4);
  }
  SUBCASE("every registered bound on a lattice") {
    for (const auto& name : registered_bounds())
      for (double l : {-1.3, -0.4, 0.0, 0.4, 1.3})
        for (double r : {0.15, 0.5, 0.85}) {
          const auto rep = sharpness_certificate(name, TiltAngle(l), r, opts);
          INFO(name << " lambda=" << l << " r=" << r << " gap=" << rep.gap);
          CHECK(certified(rep));
        }
  }
  SUBCASE("scaled bound is rejected") {
    opts.bound_scale = 0.99;
    const auto rep = sharpness_certificate("growth_hi", TiltAngle(0.3), 0.5, opts);
    CHECK(rep.gap < 0);
    CHECK_FALSE(certified(rep));
  }
  CHECK_THROWS_AS(sharpness_certificate("bogus", TiltAngle(0.0), 0.5), UnknownBound);
  CHECK_THROWS_AS(sharpness_certificate("deriv", TiltAngle(0.0), 1.0), RadiusOutOfRange);
  CHECK_FALSE(bound_functional("logderiv_M", TiltAngle(0.1)).convex);
  CHECK(bound_functional("disc", TiltAngle(0.1)).convex);
}

TEST_CASE("random interior members stay strictly below the bounds") {
  const auto grid = EvaluationGrid::standard();
  for (double l : {0.0, 0.9}) {
    const TiltAngle tilt(l);
    for (const std::string name : {"growth_hi", "logderiv_M", "disc"}) {
      const auto J = bound_functional(name, tilt);
      double delta = 1e300;
      for (std::uint64_t s = 0; s < 100; ++s) {
        const auto p = random_member(tilt, 3 + s % 4, split_seed(1234, s));
        grid.for_each([&](double r, double, Complex z) {
          const double v = J.pointwise({z, p(z), p.derivative(z)});
          delta = std::min(delta, J.bound(r) - v);
        });
      }
      INFO(name << " lambda=" << l << " delta=" << delta);
      CHECK(delta > 0);
    }
  }
}
