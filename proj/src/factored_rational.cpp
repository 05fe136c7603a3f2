#include "dmp/factored_rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dmp {

FactoredRational::FactoredRational(DensePolynomial numerator, Denominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->first == 0) throw std::invalid_argument("denominator factor (1 - q^0) is zero");
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
  if (num_.is_zero()) den_.clear();
}

std::size_t FactoredRational::denominator_degree() const {
  std::size_t total = 0;
  for (auto [k, e] : den_) total += std::size_t(k) * e;
  return total;
}

namespace {

// Rewrites `num / from` over `to`, which must be a multiple of `from`.
DensePolynomial lift_numerator(DensePolynomial num, const Denominator& from, const Denominator& to) {
  for (auto [k, e] : to) {
    auto it = from.find(k);
    const unsigned have = it == from.end() ? 0 : it->second;
    for (unsigned i = have; i < e; ++i) num.multiply_one_minus_q_power(k);
  }
  return num;
}

}  // namespace

FactoredRational add(const FactoredRational& a, const FactoredRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.denominator() == b.denominator())
    return FactoredRational(a.numerator() + b.numerator(), a.denominator());
  Denominator lcm = a.denominator();
  for (auto [k, e] : b.denominator()) {
    auto& slot = lcm[k];
    slot = std::max(slot, e);
  }
  DensePolynomial num = lift_numerator(a.numerator(), a.denominator(), lcm);
  num += lift_numerator(b.numerator(), b.denominator(), lcm);
  return FactoredRational(std::move(num), std::move(lcm));
}

FactoredRational mul(const FactoredRational& a, const FactoredRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Denominator den = a.denominator();
  for (auto [k, e] : b.denominator()) den[k] += e;
  return FactoredRational(a.numerator() * b.numerator(), std::move(den));
}

FactoredRational reduce(const FactoredRational& a) {
  if (a.is_zero()) return {};
  DensePolynomial num = a.numerator();
  Denominator den = a.denominator();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = den.rbegin(); it != den.rend(); ++it) {
      while (it->second > 0) {
        auto quotient = num.divide_one_minus_q_power(it->first);
        if (!quotient) break;
        num = std::move(*quotient);
        --it->second;
        changed = true;
      }
    }
    std::erase_if(den, [](const auto& kv) { return kv.second == 0; });
  }
  return FactoredRational(std::move(num), std::move(den));
}

PowerSeriesPrefix series(const FactoredRational& a, std::size_t n_max) {
  PowerSeriesPrefix c(n_max + 1);
  const auto& num = a.numerator().coefficients();
  for (std::size_t i = 0; i < num.size() && i <= n_max; ++i) c[i] = num[i];
  for (auto [k, e] : a.denominator())
    for (unsigned rep = 0; rep < e; ++rep)
      for (std::size_t i = k; i <= n_max; ++i) c[i] += c[i - k];
  return c;
}

Integer denominator_period(const FactoredRational& a) {
  Integer period = 1;
  for (const auto& [k, e] : a.denominator()) mpz_lcm_ui(period.get_mpz_t(), period.get_mpz_t(), k);
  return period;
}

std::map<unsigned, unsigned> pole_orders(const FactoredRational& a) {
  std::map<unsigned, unsigned> orders;
  if (a.is_zero()) return orders;
  std::map<unsigned, unsigned> available;
  for (auto [k, e] : a.denominator())
    for (unsigned d = 1; d <= k; ++d)
      if (k % d == 0) available[d] += e;
  for (auto [d, total] : available) {
    const DensePolynomial phi = cyclotomic(d);
    DensePolynomial rest = a.numerator();
    unsigned cancelled = 0;
    while (cancelled < total) {
      auto [quot, rem] = divmod(rest, phi);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++cancelled;
    }
    if (total > cancelled) orders[d] = total - cancelled;
  }
  return orders;
}

namespace {

std::string q_power(std::size_t e) {
  if (e == 0) return "1";
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

}  // namespace

std::string to_string(const FactoredRational& a) {
  const auto& coeffs = a.numerator().coefficients();
  std::string num;
  std::size_t terms = 0;
  bool fractional = false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (terms == 0) num += negative ? "-" : "";
    else num += negative ? " - " : " + ";
    if (i == 0) num += to_string(mag);
    else if (mag == 1) num += q_power(i);
    else num += to_string(mag) + "*" + q_power(i);
    fractional = fractional || !is_integer(c);
    ++terms;
  }
  if (terms == 0) return "0";
  if (a.denominator().empty()) return num;
  if (terms > 1 || fractional) num = "(" + num + ")";

  std::string den;
  for (auto [k, e] : a.denominator()) {
    if (!den.empty()) den += "*";
    den += k == 1 ? std::string("(1-q)") : "(1-q^" + std::to_string(k) + ")";
    if (e > 1) den += "^" + std::to_string(e);
  }
  return num + "/(" + den + ")";
}

}  // namespace dmp
