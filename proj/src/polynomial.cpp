#include "dmp/polynomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dmp {

DensePolynomial::DensePolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

DensePolynomial DensePolynomial::constant(const Rational& c) { return DensePolynomial({c}); }

DensePolynomial DensePolynomial::monomial(const Rational& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Rational> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return DensePolynomial(std::move(coeffs));
}

void DensePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational DensePolynomial::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

DensePolynomial& DensePolynomial::operator+=(const DensePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator-=(const DensePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DensePolynomial(std::move(out));
}

DensePolynomial& DensePolynomial::multiply_one_minus_q_power(unsigned k) {
  if (k == 0) throw std::invalid_argument("factor exponent k must be positive");
  if (is_zero()) return *this;
  const std::size_t old = coeffs_.size();
  coeffs_.resize(old + k);
  for (std::size_t i = old + k; i-- > k;) coeffs_[i] -= coeffs_[i - k];
  trim();
  return *this;
}

std::optional<DensePolynomial> DensePolynomial::divide_one_minus_q_power(unsigned k) const {
  if (k == 0) throw std::invalid_argument("factor exponent k must be positive");
  if (is_zero()) return DensePolynomial{};
  const std::size_t size = coeffs_.size();
  if (size <= k) return std::nullopt;
  // N = Q (1 - q^k)  =>  Q_i = N_i + Q_{i-k}, and the top k coefficients of N
  // must equal -Q_{i-k}.
  std::vector<Rational> quotient(size - k);
  for (std::size_t i = 0; i < quotient.size(); ++i) {
    quotient[i] = coeffs_[i];
    if (i >= k) quotient[i] += quotient[i - k];
  }
  for (std::size_t i = quotient.size(); i < size; ++i) {
    const Rational carried = i >= k ? quotient[i - k] : Rational(0);
    if (coeffs_[i] + carried != 0) return std::nullopt;
  }
  return DensePolynomial(std::move(quotient));
}

std::pair<DensePolynomial, DensePolynomial> divmod(const DensePolynomial& dividend, const DensePolynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (dividend.degree() < divisor.degree()) return {DensePolynomial{}, dividend};
  std::vector<Rational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead = d.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational c = rem[i + dd] / lead;
    if (c == 0) continue;
    quot[i] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= c * d[j];
  }
  rem.resize(dd);
  return {DensePolynomial(std::move(quot)), DensePolynomial(std::move(rem))};
}

DensePolynomial cyclotomic(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned, DensePolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  // q^d - 1 divided by every Phi_e with e | d, e < d.
  DensePolynomial p = DensePolynomial::monomial(1, d) - DensePolynomial::constant(1);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) p = divmod(p, cyclotomic(e)).first;
  std::lock_guard lock(mutex);
  return cache.emplace(d, std::move(p)).first->second;
}

unsigned totient(unsigned d) {
  unsigned result = d;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

}  // namespace dmp
