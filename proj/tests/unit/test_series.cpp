#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "tiltcara/caratheodory.hpp"
#include "tiltcara/errors.hpp"
#include "tiltcara/random.hpp"
#include "tiltcara/series.hpp"

using namespace tiltcara;

namespace {

Series random_series(Rng& rng, std::size_t order, double b0_min = 0.0) {
  std::vector<Complex> c(order + 1);
  for (auto& v : c) v = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  if (b0_min > 0.0) {
    // constant term with modulus in [b0_min, 2]
    c[0] = std::polar(rng.uniform(b0_min, 2.0), rng.uniform(0.0, 2.0 * kPi));
  }
  return Series(std::move(c));
}

std::vector<oracle::LComplex> widen(const Series& s) {
  std::vector<oracle::LComplex> v;
  for (auto c : s.coeffs()) v.emplace_back(c.real(), c.imag());
  return v;
}

}  // namespace

TEST_CASE("series rejects empty and non-finite input") {
  CHECK_THROWS_AS(Series(std::vector<Complex>{}), InvalidSeries);
  CHECK_THROWS_AS(Series(std::vector<Complex>{1.0, {NAN, 0.0}}), InvalidSeries);
  CHECK(Series(3).order() == 3);
}

TEST_CASE("mul") {
  const std::size_t N = 8;
  SUBCASE("difference of squares") {
    const Series p = mul(Series::linear(1, 1, N), Series::linear(1, -1, N));
    CHECK(p[0] == Complex(1));
    CHECK(p[1] == Complex(0));
    CHECK(p[2] == Complex(-1));
    for (std::size_t n = 3; n <= N; ++n) CHECK(p[n] == Complex(0));
  }
  SUBCASE("identity") {
    Rng rng(1);
    const Series a = random_series(rng, N);
    CHECK(mul(a, Series::constant(1.0, N)) == a);
  }
  SUBCASE("geometric squared matches the hand convolution") {
    const Series g = Series::geometric(5);
    const Series sq = mul(g, g);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(sq[n] == Complex(double(n + 1)));
  }
  SUBCASE("truncates to the smaller order") {
    CHECK(mul(Series::geometric(3), Series::geometric(7)).order() == 3);
  }
  SUBCASE("agrees with the slow Cauchy sum") {
    Rng rng(7);
    const Series a = random_series(rng, 64), b = random_series(rng, 64);
    const auto ref = oracle::cauchy(widen(a), widen(b));
    const Series c = mul(a, b);
    for (std::size_t n = 0; n <= 64; ++n)
      CHECK(std::abs(c[n] - Complex(double(ref[n].real()), double(ref[n].imag()))) < 1e-12);
  }
}

TEST_CASE("div") {
  SUBCASE("geometric series") {
    const Series g = div(Series::constant(1.0, 10), Series::linear(1, -1, 10));
    for (std::size_t n = 0; n <= 10; ++n) CHECK(std::abs(g[n] - Complex(1)) < 1e-15);
  }
  SUBCASE("a / a") {
    Rng rng(3);
    const Series a = random_series(rng, 20, 0.5);
    const Series one = div(a, a);
    CHECK(std::abs(one[0] - Complex(1)) < 1e-14);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(std::abs(one[n]) < 1e-9);
  }
  SUBCASE("tilted kernel at pi/4 against long division") {
    const double lambda = std::numbers::pi / 4;
    const Complex tw = std::polar(1.0, -2 * lambda);
    const Series k = div(Series::linear(1, tw, 8), Series::linear(1, -1, 8));
    const auto ref = oracle::long_division(widen(Series::linear(1, tw, 8)),
                                           widen(Series::linear(1, -1, 8)));
    CHECK(std::abs(k[0] - Complex(1)) < 1e-15);
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(std::abs(k[n] - Complex(1, -1)) < 1e-15);
      CHECK(std::abs(k[n] - Complex(double(ref[n].real()), double(ref[n].imag()))) < 1e-15);
    }
  }
  SUBCASE("near-zero constant term") {
    CHECK_THROWS_AS(div(Series::constant(1, 3), Series::linear(1e-13, 1, 3)),
                    DivisionByNearZeroConstantTerm);
  }
}

TEST_CASE("compose") {
  SUBCASE("rotation") {
    const Complex x = std::polar(1.0, 0.7);
    const Series r = compose(Series::geometric(12), Series::linear(0, x, 12));
    for (std::size_t n = 0; n <= 12; ++n) CHECK(std::abs(r[n] - std::pow(x, int(n))) < 1e-14);
  }
  SUBCASE("identity inner") {
    Rng rng(11);
    const Series a = random_series(rng, 16);
    CHECK(max_coeff_distance(compose(a, Series::identity(16)), a) < 1e-15);
  }
  SUBCASE("1/(1-z) composed with z^2") {
    std::vector<Complex> z2(13);
    z2[2] = 1.0;
    const Series r = compose(Series::geometric(12), Series(z2));
    for (std::size_t n = 0; n <= 12; ++n) CHECK(r[n] == Complex(n % 2 == 0 ? 1.0 : 0.0));
  }
  SUBCASE("inner must vanish at zero") {
    CHECK_THROWS_AS(compose(Series::geometric(4), Series::linear(1e-300, 1, 4)), NonzeroInnerConstant);
  }
}

TEST_CASE("cpow") {
  SUBCASE("negative integer powers") {
    const Series g = cpow(Series::linear(1, -1, 20), -1.0);
    const Series k = cpow(Series::linear(1, -1, 20), -2.0);
    for (std::size_t n = 0; n <= 20; ++n) {
      CHECK(std::abs(g[n] - Complex(1)) < 1e-12);
      CHECK(std::abs(k[n] - Complex(double(n + 1))) < 1e-12);
    }
  }
  SUBCASE("complex exponent at pi/6 against the binomial series") {
    // sum C(m, n) (-z)^n with m = 1 + e^{-i pi/3}, evaluated in 40-digit arithmetic.
    const Complex frozen[] = {
        {1.0, 0.0},
        {-1.5, 0.86602540378443864676},
        {0.0, -0.86602540378443864676},
        {0.25, -0.14433756729740644113},
        {0.125, 0.0},
        {0.0625, 0.021650635094610966169},
        {0.033333333333333333333, 0.021650635094610966169},
    };
    const Complex m = 1.0 + std::polar(1.0, -std::numbers::pi / 3);
    const Series p = cpow(Series::linear(1, -1, 6), m);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(std::abs(p[n] - frozen[n]) < 1e-14);
  }
  SUBCASE("anchor must be 1") {
    CHECK_THROWS_AS(cpow(Series::linear(2, -1, 4), 0.5), BadBranchAnchor);
    CHECK_THROWS_AS(log(Series::linear(-1, 1, 4)), BadBranchAnchor);
  }
}

TEST_CASE("derivative and integral") {
  const Series d = derivative(Series(std::vector<Complex>{1, 2, 3}));
  CHECK(d.order() == 1);
  CHECK(d[0] == Complex(2));
  CHECK(d[1] == Complex(6));
  CHECK(derivative(Series::constant(5, 0)) == Series(0));
  const Series dg = derivative(Series::geometric(9));
  CHECK(dg.order() == 8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(dg[n] == Complex(double(n + 1)));
  Rng rng(5);
  const Series a = random_series(rng, 12);
  CHECK(max_coeff_distance(derivative(integral(a)), a) < 1e-15);
}

TEST_CASE("hadamard") {
  Rng rng(9);
  const Series a = random_series(rng, 30);
  CHECK(hadamard(Series::geometric(30), a) == a);
  const Series h = hadamard(Series::linear(1, 1, 1), Series::linear(1, -1, 1));
  CHECK(h[0] == Complex(1));
  CHECK(h[1] == Complex(-1));

  SUBCASE("convolution with (1 + A z)/(1 - z) is (1 + A) h - A") {
    const TiltAngle tilt(0.6);
    const Series k = kernel_series(tilt, std::polar(1.0, 1.1), 24);
    const Complex A{0.3, -1.7};
    const Series lhs = hadamard(k, dual_element(A, 24));
    const Series rhs = ((1.0 + A) * k) - A;
    CHECK(max_coeff_distance(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("evaluate") {
  const Series g = Series::geometric(64);
  const double tail = geometric_tail_bound(1.0, 64, 0.5);
  CHECK(std::abs(evaluate(g, 0.5) - Complex(2)) <= tail + 1e-15);
  Rng rng(2);
  const Series a = random_series(rng, 10);
  CHECK(evaluate(a, 0.0) == a[0]);
  const Series p0 = kernel_series(TiltAngle(0.0), 1.0, 64);
  CHECK(std::abs(evaluate(p0, 0.3) - Complex(1.3 / 0.7)) <= geometric_tail_bound(2.0, 64, 0.3) + 1e-14);
  CHECK_THROWS_AS(evaluate(g, 0.9995), OutsideEvaluationRadius);
}

// Property sweeps over seeded random coefficient vectors.
TEST_CASE("algebraic identities hold for random series") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(split_seed(1234, seed));
    const Series a = random_series(rng, 64);
    const Series b = random_series(rng, 64, 0.1);
    const Series c = random_series(rng, 64);
    CAPTURE(seed);
    CHECK(max_coeff_distance(mul(a, b), mul(b, a)) < 1e-12);
    CHECK(max_coeff_distance(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-9);
    // rounding in the round trip scales with the quotient coefficients, which grow like |1/b_0|^n
    const Series q = div(a, b);
    const Series back = mul(q, b);
    double scale = 1.0;
    for (auto v : q.coeffs()) scale = std::max(scale, std::abs(v));
    CHECK(max_coeff_distance(back, a) < kEpsSeries * scale);
  }
}

TEST_CASE("cpow is additive in the exponent") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(split_seed(99, seed));
    std::vector<Complex> c(65);
    c[0] = 1.0;
    for (std::size_t n = 1; n <= 64; ++n)
      c[n] = std::polar(rng.uniform(0.0, 0.5) / double(n), rng.uniform(0.0, 2 * kPi));
    const Series base(c);
    const Complex m1{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Complex m2{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    CAPTURE(seed);
    CHECK(max_coeff_distance(cpow(base, m1 + m2), mul(cpow(base, m1), cpow(base, m2))) < kEpsSeries);
  }
}

TEST_CASE("closed-form kernels evaluate within their tail bound") {
  for (double lambda : {-1.3, -0.4, 0.0, 0.9}) {
    const TiltAngle tilt(lambda);
    for (double phi : {0.0, 1.0, 2.5}) {
      const Complex x = std::polar(1.0, phi);
      const Series s = kernel_series(tilt, x, 64);
      for (double r : {0.1, 0.5, 0.75, 0.9}) {
        for (double t : {-2.0, 0.3, 3.0}) {
          const Complex z = std::polar(r, t);
          const auto ref = oracle::kernel(lambda, x, z);
          const double err = std::abs(evaluate(s, z) - Complex(double(ref.real()), double(ref.imag())));
          CHECK(err <= geometric_tail_bound(2.0 * std::cos(lambda), 64, r) + 1e-12);
        }
      }
    }
  }
}
