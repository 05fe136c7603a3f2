#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dmp/numeric.hpp"

namespace dmp {

/// Univariate polynomial in q with exact rational coefficients, stored densely
/// (index = exponent). The highest stored coefficient is never zero.
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Rational> coefficients);

  static DensePolynomial constant(const Rational& c);
  static DensePolynomial monomial(const Rational& c, std::size_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // Zero past the degree.
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational evaluate(const Rational& q) const;

  DensePolynomial& operator+=(const DensePolynomial& rhs);
  DensePolynomial& operator-=(const DensePolynomial& rhs);
  DensePolynomial& operator*=(const Rational& c);

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
  friend DensePolynomial operator*(DensePolynomial a, const Rational& c) { return a *= c; }
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);
  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

  // Multiplication by (1 - q^k), in place.
  DensePolynomial& multiply_one_minus_q_power(unsigned k);
  // Exact quotient by (1 - q^k), or nullopt when (1 - q^k) does not divide.
  std::optional<DensePolynomial> divide_one_minus_q_power(unsigned k) const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of long division; `divisor` must be nonzero.
std::pair<DensePolynomial, DensePolynomial> divmod(const DensePolynomial& dividend, const DensePolynomial& divisor);

/// The d-th cyclotomic polynomial.
DensePolynomial cyclotomic(unsigned d);

/// Euler's totient.
unsigned totient(unsigned d);

}  // namespace dmp
