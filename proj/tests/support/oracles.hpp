#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the series engine; values are produced by direct summation in long double.

#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using LComplex = std::complex<long double>;

/// c_n = sum_{k<=n} a_k b_{n-k}, done the slow way.
inline std::vector<LComplex> cauchy(const std::vector<LComplex>& a, const std::vector<LComplex>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<LComplex> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Schoolbook long division of power series.
inline std::vector<LComplex> long_division(std::vector<LComplex> num, const std::vector<LComplex>& den) {
  const std::size_t n = std::min(num.size(), den.size());
  std::vector<LComplex> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = num[i] / den[0];
    for (std::size_t j = 0; i + j < n; ++j) num[i + j] -= q[i] * den[j];
  }
  return q;
}

/// Kernel (1 + e^{-2i l} x z)/(1 - x z) in long double.
inline LComplex kernel(long double lambda, LComplex x, LComplex z) {
  const LComplex tw = std::polar(1.0L, -2.0L * lambda);
  return (1.0L + tw * x * z) / (1.0L - x * z);
}

inline LComplex kernel_derivative(long double lambda, LComplex x, LComplex z) {
  const LComplex d = 1.0L - x * z;
  return x * (1.0L + std::polar(1.0L, -2.0L * lambda)) / (d * d);
}

/// Dense scan of a real function of the angle on [0, 2 pi).
template <typename F>
long double circle_max(F&& f, std::size_t n = 200000) {
  long double best = -1e300L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double t = 2.0L * 3.14159265358979323846264338327950288L * i / n;
    best = std::max(best, static_cast<long double>(f(t)));
  }
  return best;
}

}  // namespace oracle
