#include "tiltcara/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tiltcara/errors.hpp"

namespace tiltcara {

namespace {

bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

std::size_t common_order(const Series& a, const Series& b) { return std::min(a.order(), b.order()); }

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1, Complex{0.0, 0.0}) {}

Series::Series(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidSeries("series needs at least one coefficient");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!is_finite(coeffs_[n]))
      throw InvalidSeries("non-finite coefficient at index " + std::to_string(n));
  }
}

Series Series::constant(Complex c, std::size_t order) {
  std::vector<Complex> v(order + 1, Complex{});
  v[0] = c;
  return Series(std::move(v));
}

Series Series::identity(std::size_t order) { return linear(0.0, 1.0, order); }

Series Series::geometric(std::size_t order) {
  return Series(std::vector<Complex>(order + 1, Complex{1.0, 0.0}));
}

Series Series::linear(Complex c0, Complex c1, std::size_t order) {
  std::vector<Complex> v(order + 1, Complex{});
  v[0] = c0;
  if (order >= 1) v[1] = c1;
  return Series(std::move(v));
}

Series Series::truncated(std::size_t new_order) const {
  if (new_order >= order()) return *this;
  Series out;
  out.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1);
  return out;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Series operator+(const Series& a, const Series& b) {
  Series out(common_order(a, b));
  for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return out;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(Complex s, const Series& a) {
  Series out = a;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

Series operator+(const Series& a, Complex c) {
  Series out = a;
  out.coeffs_[0] += c;
  return out;
}

Series operator-(const Series& a, Complex c) { return a + (-c); }

Series mul(const Series& a, const Series& b) {
  const std::size_t order = common_order(a, b);
  std::vector<Complex> c(order + 1);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t n = 0; n <= order; ++n) {
    Complex s{};
    for (std::size_t k = 0; k <= n; ++k) s += ac[k] * bc[n - k];
    c[n] = s;
  }
  return Series(std::move(c));
}

Series div(const Series& a, const Series& b) {
  const Complex b0 = b[0];
  if (std::abs(b0) <= kEpsDiv)
    throw DivisionByNearZeroConstantTerm("divisor constant term has modulus " +
                                         std::to_string(std::abs(b0)));
  const std::size_t order = common_order(a, b);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex s = ac[n];
    for (std::size_t k = 1; k <= n; ++k) s -= bc[k] * c[n - k];
    c[n] = s / b0;
  }
  return Series(std::move(c));
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != Complex{0.0, 0.0})
    throw NonzeroInnerConstant("inner series of a composition must vanish at 0");
  const std::size_t order = common_order(outer, inner);
  const Series in = inner.truncated(order);
  const auto oc = outer.coeffs();
  Series acc = Series::constant(oc[order], order);
  for (std::size_t k = order; k-- > 0;) acc = mul(acc, in) + oc[k];
  return acc;
}

Series log(const Series& a) {
  const Complex a0 = a[0];
  if (std::abs(a0 - Complex{1.0, 0.0}) > kEpsDiv)
    throw BadBranchAnchor("logarithm needs constant term 1");
  const auto ac = a.coeffs();
  const std::size_t order = a.order();
  std::vector<Complex> l(order + 1);
  l[0] = std::log(a0);
  // a * L' = a'  =>  n a0 L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}
  for (std::size_t n = 1; n <= order; ++n) {
    Complex s = static_cast<double>(n) * ac[n];
    for (std::size_t k = 1; k < n; ++k) s -= static_cast<double>(k) * l[k] * ac[n - k];
    l[n] = s / (static_cast<double>(n) * a0);
  }
  return Series(std::move(l));
}

Series exp(const Series& a) {
  const auto ac = a.coeffs();
  const std::size_t order = a.order();
  std::vector<Complex> e(order + 1);
  e[0] = std::exp(ac[0]);
  // E' = A' E  =>  n E_n = sum_{k=1}^{n} k A_k E_{n-k}
  for (std::size_t n = 1; n <= order; ++n) {
    Complex s{};
    for (std::size_t k = 1; k <= n; ++k) s += static_cast<double>(k) * ac[k] * e[n - k];
    e[n] = s / static_cast<double>(n);
  }
  return Series(std::move(e));
}

Series cpow(const Series& base, Complex m) {
  if (std::abs(base[0] - Complex{1.0, 0.0}) > kEpsDiv)
    throw BadBranchAnchor("complex power needs base with constant term 1");
  return exp(m * log(base));
}

Series derivative(const Series& a) {
  if (a.order() == 0) return Series(0);
  const auto ac = a.coeffs();
  std::vector<Complex> d(a.order());
  for (std::size_t n = 0; n < d.size(); ++n) d[n] = static_cast<double>(n + 1) * ac[n + 1];
  return Series(std::move(d));
}

Series integral(const Series& a) {
  const auto ac = a.coeffs();
  std::vector<Complex> v(a.order() + 2);
  for (std::size_t n = 0; n <= a.order(); ++n) v[n + 1] = ac[n] / static_cast<double>(n + 1);
  return Series(std::move(v));
}

Series shift_up(const Series& a, std::size_t k) {
  const auto ac = a.coeffs();
  std::vector<Complex> v(a.order() + 1);
  for (std::size_t n = k; n <= a.order(); ++n) v[n] = ac[n - k];
  return Series(std::move(v));
}

Series shift_down(const Series& a, std::size_t k) {
  if (k > a.order()) return Series(0);
  const auto ac = a.coeffs();
  return Series(std::vector<Complex>(ac.begin() + static_cast<std::ptrdiff_t>(k), ac.end()));
}

Series hadamard(const Series& a, const Series& b) {
  const std::size_t order = common_order(a, b);
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] * b[n];
  return Series(std::move(c));
}

Complex evaluate(const Series& a, Complex z) {
  if (std::abs(z) > kMaxEvalRadius)
    throw OutsideEvaluationRadius("|z| = " + std::to_string(std::abs(z)) +
                                  " exceeds the evaluation radius");
  const auto ac = a.coeffs();
  Complex acc{};
  for (std::size_t n = ac.size(); n-- > 0;) acc = acc * z + ac[n];
  return acc;
}

double max_coeff_distance(const Series& a, const Series& b) {
  double d = 0.0;
  for (std::size_t n = 0; n <= common_order(a, b); ++n) d = std::max(d, std::abs(a[n] - b[n]));
  return d;
}

double geometric_tail_bound(double coeff_bound, std::size_t order, double r) {
  return coeff_bound * std::pow(r, static_cast<double>(order + 1)) / (1.0 - r);
}

}  // namespace tiltcara
