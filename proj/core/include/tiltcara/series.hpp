#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tiltcara {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 64;
inline constexpr double kEpsDiv = 1e-12;
inline constexpr double kEpsSeries = 1e-9;
/// Largest |z| accepted by pointwise evaluation.
inline constexpr double kMaxEvalRadius = 0.999;

/// Truncated Taylor expansion c_0 + c_1 z + ... + c_N z^N about the origin.
///
/// Coefficients are always finite and there is always at least one of them.
/// Binary operations truncate to the smaller participating order; nothing is
/// padded with zeros.
class Series {
public:
  /// The zero series of the given order.
  explicit Series(std::size_t order = 0);
  /// Throws InvalidSeries on an empty vector or a non-finite coefficient.
  explicit Series(std::vector<Complex> coeffs);

  static Series constant(Complex c, std::size_t order);
  /// z, truncated at `order` (order >= 1 keeps the linear term).
  static Series identity(std::size_t order);
  /// 1 + z + z^2 + ... , the expansion of 1/(1-z).
  static Series geometric(std::size_t order);
  /// 1 + a z, the degree-one polynomial truncated at `order`.
  static Series linear(Complex c0, Complex c1, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t n) const { return coeffs_.at(n); }

  /// Copy truncated to min(order, new_order).
  Series truncated(std::size_t new_order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(Complex s, const Series& a);
  friend Series operator+(const Series& a, Complex c);
  friend Series operator-(const Series& a, Complex c);

  friend bool operator==(const Series&, const Series&) = default;

private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated to min order.
Series mul(const Series& a, const Series& b);

/// a / b. Throws DivisionByNearZeroConstantTerm when |b_0| <= kEpsDiv.
Series div(const Series& a, const Series& b);

/// outer(inner(z)). Requires inner_0 == 0 exactly (NonzeroInnerConstant).
Series compose(const Series& outer, const Series& inner);

/// Principal logarithm of a series with constant term 1.
Series log(const Series& a);
/// exp(a) for a series with a_0 == 0.
Series exp(const Series& a);
/// exp(m log(base)) on the principal branch; base_0 must be 1.
Series cpow(const Series& base, Complex m);

/// Term-by-term derivative; the order drops by one (never below zero).
Series derivative(const Series& a);
/// Antiderivative vanishing at 0; the order grows by one.
Series integral(const Series& a);
/// Multiplication by z^k followed by truncation back to the original order.
Series shift_up(const Series& a, std::size_t k = 1);
/// Division by z^k; the order drops by k. The dropped coefficients are discarded.
Series shift_down(const Series& a, std::size_t k = 1);

/// Coefficientwise (Hadamard) product truncated to min order.
Series hadamard(const Series& a, const Series& b);

/// Horner evaluation; throws OutsideEvaluationRadius when |z| > kMaxEvalRadius.
Complex evaluate(const Series& a, Complex z);

/// sup-norm of the coefficient difference over the common order.
double max_coeff_distance(const Series& a, const Series& b);

/// Analytic tail bound sum_{n>N} bound_n r^n for coefficients bounded by
/// `coeff_bound`: coeff_bound * r^{N+1} / (1 - r).
double geometric_tail_bound(double coeff_bound, std::size_t order, double r);

}  // namespace tiltcara
