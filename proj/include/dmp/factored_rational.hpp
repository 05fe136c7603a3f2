#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dmp/numeric.hpp"
#include "dmp/polynomial.hpp"

namespace dmp {

/// Exponent map {k: e_k} standing for prod_k (1 - q^k)^{e_k}. Every stored
/// exponent is positive; the empty map is the denominator 1.
using Denominator = std::map<unsigned, unsigned>;

/// A rational function N(q) / prod_k (1 - q^k)^{e_k}. The denominator is never
/// expanded; only the numerator is dense. Zero always has an empty denominator.
class FactoredRational {
 public:
  FactoredRational() = default;
  explicit FactoredRational(DensePolynomial numerator, Denominator denominator = {});

  static FactoredRational one() { return FactoredRational(DensePolynomial::constant(1)); }

  const DensePolynomial& numerator() const noexcept { return num_; }
  const Denominator& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  // Total degree of the expanded denominator, sum_k k * e_k.
  std::size_t denominator_degree() const;

  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

 private:
  DensePolynomial num_;
  Denominator den_;
};

/// Exact sum over the factor-wise lcm of the two denominators. No
/// cancellation is attempted; see reduce().
FactoredRational add(const FactoredRational& a, const FactoredRational& b);
FactoredRational mul(const FactoredRational& a, const FactoredRational& b);

inline FactoredRational operator+(const FactoredRational& a, const FactoredRational& b) { return add(a, b); }
inline FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) { return mul(a, b); }

/// Divides the numerator by each denominator factor (1 - q^k) that divides it
/// exactly (largest k first), repeating until nothing more divides.
FactoredRational reduce(const FactoredRational& a);

using PowerSeriesPrefix = std::vector<Rational>;

/// Coefficients of q^0..q^n_max. Starts from the numerator and applies the
/// stride-k prefix sum c_i += c_{i-k} once per unit of each exponent e_k,
/// O(n_max) per application.
PowerSeriesPrefix series(const FactoredRational& a, std::size_t n_max);

/// lcm of every k in the denominator (1 for a polynomial).
Integer denominator_period(const FactoredRational& a);

/// Pole orders at the roots of unity, keyed by root order d: for each
/// primitive d-th root, sum_{d | k} e_k minus the multiplicity of the
/// cyclotomic factor Phi_d in the numerator. Only positive orders are listed.
std::map<unsigned, unsigned> pole_orders(const FactoredRational& a);

/// Canonical text, e.g. "(1 - q^3 + 2*q^6)/((1-q)^2*(1-q^3))": numerator terms by
/// ascending exponent, denominator factors by ascending k.
std::string to_string(const FactoredRational& a);

}  // namespace dmp
