#include "dmp/quasipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dmp/errors.hpp"

namespace dmp {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::uint64_t mod_u64(const Integer& n, std::uint64_t modulus) {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(modulus));
}

int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Smallest p dividing values.size() with values[i] == values[i mod p].
std::uint64_t minimal_period(const std::vector<Rational>& values) {
  const std::uint64_t size = values.size();
  for (std::uint64_t p = 1; p < size; ++p) {
    if (size % p != 0) continue;
    bool periodic = true;
    for (std::uint64_t i = p; i < size && periodic; ++i) periodic = values[i] == values[i - p];
    if (periodic) return p;
  }
  return std::max<std::uint64_t>(size, 1);
}

bool all_zero(const std::vector<Rational>& values) {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

Rational power_of(const Integer& n, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), e);
  return Rational(out);
}

// Coefficients (constant first) of the polynomial through (xs[i], ys[i]),
// via Newton divided differences.
std::vector<Rational> interpolate(const std::vector<Integer>& xs, std::vector<Rational> ys) {
  const std::size_t k = xs.size();
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / Rational(xs[i] - xs[i - level]);
  // Horner expansion of the Newton form into the monomial basis.
  std::vector<Rational> poly(k);
  for (std::size_t i = k; i-- > 0;) {
    // poly = poly * (x - xs[i]) + ys[i]
    for (std::size_t j = k - 1; j > 0; --j) poly[j] = poly[j - 1] - Rational(xs[i]) * poly[j];
    poly[0] = ys[i] - Rational(xs[i]) * poly[0];
  }
  return poly;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Integer& x) {
  Rational acc = 0;
  const Rational rx(x);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * rx + *it;
  return acc;
}

std::uint64_t threshold_of(const FactoredRational& g) {
  return static_cast<std::uint64_t>(g.numerator().degree() + 1);
}

std::vector<std::uint64_t> find_exceptions(const QuasiPolynomial& qp, const PowerSeriesPrefix& coeffs,
                                           std::uint64_t threshold) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < threshold; ++n)
    if (eval_quasipoly(qp, Integer(static_cast<unsigned long>(n))) != coeffs[n]) out.push_back(n);
  return out;
}

QuasiPolynomial extract_per_residue(const FactoredRational& g, unsigned degree_bound, std::uint64_t period,
                                    std::uint64_t offset) {
  constexpr unsigned kHeldOut = 3;
  const std::uint64_t last = offset + period - 1 + std::uint64_t(degree_bound + kHeldOut) * period;
  const PowerSeriesPrefix coeffs = series(g, std::max(last, threshold_of(g)));

  std::vector<QuasiComponent> components(degree_bound + 1);
  for (unsigned j = 0; j <= degree_bound; ++j) components[j] = {period, j, std::vector<Rational>(period)};

  for (std::uint64_t r = 0; r < period; ++r) {
    const std::uint64_t base = offset + (r + period - offset % period) % period;
    std::vector<Integer> xs;
    std::vector<Rational> ys;
    for (unsigned j = 0; j <= degree_bound; ++j) {
      const std::uint64_t n = base + std::uint64_t(j) * period;
      xs.emplace_back(static_cast<unsigned long>(n));
      ys.push_back(coeffs[n]);
    }
    const std::vector<Rational> poly = interpolate(xs, ys);
    for (unsigned h = 0; h < kHeldOut; ++h) {
      const std::uint64_t n = base + std::uint64_t(degree_bound + 1 + h) * period;
      if (eval_poly(poly, Integer(static_cast<unsigned long>(n))) != coeffs[n])
        throw FitValidationError("held-out sample n = " + std::to_string(n) + " disagrees with the degree-" +
                                 std::to_string(degree_bound) + " fit for residue " + std::to_string(r) +
                                 " mod " + std::to_string(period));
    }
    for (unsigned j = 0; j <= degree_bound; ++j) components[j].values[r] = poly[j];
  }
  std::erase_if(components, [](const QuasiComponent& c) { return all_zero(c.values); });
  QuasiPolynomial qp(Integer(static_cast<unsigned long>(period)), degree_bound, std::move(components),
                     ExtractionRoute::per_residue);
  const std::uint64_t threshold = threshold_of(g);
  qp.set_validity(threshold, find_exceptions(qp, coeffs, threshold));
  return qp;
}

// Solves a square integer system A x = b (b stored as column n of `rows`) by
// fraction-free elimination; returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_integer_system(std::vector<std::vector<Integer>> rows) {
  const std::size_t n = rows.size();
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && rows[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[k], rows[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer v = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j];
        mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      rows[i][k] = 0;
    }
    previous = rows[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(rows[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(rows[i][j]) * x[j];
    x[i] = acc / Rational(rows[i][i]);
  }
  return x;
}

struct Unknown {
  unsigned d;
  unsigned power;
  unsigned shift;
};

QuasiPolynomial extract_structured(const FactoredRational& g, unsigned degree_bound, const Integer& period,
                                   std::uint64_t offset, std::uint64_t residue_limit) {
  // Basis: n^j * c_d(n + s) for each pole order d, j below the (capped) pole
  // order, and 0 <= s < phi(d). The shifts of c_d span the functions on Z/d
  // built from primitive d-th roots only.
  std::vector<Unknown> unknowns;
  for (auto [d, order] : pole_orders(g)) {
    const unsigned powers = std::min(order, degree_bound + 1);
    const unsigned phi = totient(d);
    for (unsigned j = 0; j < powers; ++j)
      for (unsigned s = 0; s < phi; ++s) unknowns.push_back({d, j, s});
  }
  const std::size_t count = unknowns.size();
  const std::uint64_t held_out =
      period <= residue_limit ? 3 * period.get_ui() : 3 * std::max<std::uint64_t>(count, 1);
  const std::uint64_t threshold = threshold_of(g);
  const PowerSeriesPrefix coeffs = series(g, std::max(offset + count + held_out, threshold));

  auto basis = [](const Unknown& u, std::uint64_t n) {
    Integer v = ramanujan_sum(u.d, n + u.shift);
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(static_cast<unsigned long>(n)).get_mpz_t(), u.power);
    return Integer(v * p);
  };

  std::vector<Rational> solution;
  if (count > 0) {
    // Clear denominators of the samples so the system is integral.
    Integer scale = 1;
    for (std::size_t i = 0; i < count; ++i) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), coeffs[offset + i].get_den_mpz_t());
    }
    std::vector<std::vector<Integer>> rows(count, std::vector<Integer>(count + 1));
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t n = offset + i;
      for (std::size_t c = 0; c < count; ++c) rows[i][c] = basis(unknowns[c], n);
      Rational scaled = coeffs[n] * Rational(scale);
      rows[i][count] = scaled.get_num();
    }
    auto x = solve_integer_system(std::move(rows));
    if (!x) throw FitValidationError("singular sample system; the pole structure does not match the samples");
    solution = std::move(*x);
    for (auto& v : solution) v /= Rational(scale);
  }

  std::map<std::pair<unsigned, unsigned>, QuasiComponent> by_slot;  // (power, d)
  for (std::size_t c = 0; c < count; ++c) {
    const Unknown& u = unknowns[c];
    if (solution[c] == 0) continue;
    auto [it, inserted] = by_slot.try_emplace({u.power, u.d}, QuasiComponent{u.d, u.power, std::vector<Rational>(u.d)});
    for (unsigned x = 0; x < u.d; ++x) it->second.values[x] += solution[c] * Rational(ramanujan_sum(u.d, x + u.shift));
  }
  std::vector<QuasiComponent> components;
  for (auto& [slot, comp] : by_slot)
    if (!all_zero(comp.values)) components.push_back(std::move(comp));

  QuasiPolynomial qp(period, degree_bound, std::move(components), ExtractionRoute::structured);
  for (std::uint64_t n = offset + count; n < offset + count + held_out; ++n) {
    if (eval_quasipoly(qp, Integer(static_cast<unsigned long>(n))) != coeffs[n])
      throw FitValidationError("held-out sample n = " + std::to_string(n) + " disagrees with the degree-" +
                               std::to_string(degree_bound) + " structured fit");
  }
  qp.set_validity(threshold, find_exceptions(qp, coeffs, threshold));
  return qp;
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(Integer period, unsigned degree, std::vector<QuasiComponent> components,
                                 ExtractionRoute route)
    : period_(std::move(period)), degree_(degree), components_(std::move(components)), route_(route) {
  if (period_ < 1) throw std::invalid_argument("quasi-polynomial period must be positive");
  for (const auto& c : components_) {
    if (c.modulus == 0 || c.values.size() != c.modulus)
      throw std::invalid_argument("component value table must have one entry per residue");
    if (c.power > degree_) throw std::invalid_argument("component power exceeds the degree");
    if (mpz_divisible_ui_p(period_.get_mpz_t(), static_cast<unsigned long>(c.modulus)) == 0)
      throw std::invalid_argument("component modulus must divide the period");
  }
}

void QuasiPolynomial::set_validity(std::uint64_t threshold, std::vector<std::uint64_t> exceptional) {
  threshold_ = threshold;
  exceptional_ = std::move(exceptional);
}

std::vector<Rational> QuasiPolynomial::coefficients(const Integer& residue) const {
  std::vector<Rational> out(degree_ + 1);
  for (const auto& c : components_) out[c.power] += c.values[mod_u64(residue, c.modulus)];
  return out;
}

unsigned QuasiPolynomial::observed_degree() const {
  unsigned best = 0;
  for (const auto& c : components_)
    if (!all_zero(c.values)) best = std::max(best, c.power);
  return best;
}

Integer QuasiPolynomial::coefficient_period(unsigned power) const {
  if (route_ == ExtractionRoute::structured) {
    // Components at one power have distinct root orders d, so their sum has
    // period exactly lcm of those d.
    Integer p = 1;
    for (const auto& c : components_)
      if (c.power == power && !all_zero(c.values)) p = lcm(p, Integer(static_cast<unsigned long>(c.modulus)));
    return p;
  }
  std::uint64_t joint = 1;
  for (const auto& c : components_)
    if (c.power == power) joint = std::lcm(joint, c.modulus);
  std::vector<Rational> table(joint);
  for (const auto& c : components_)
    if (c.power == power)
      for (std::uint64_t r = 0; r < joint; ++r) table[r] += c.values[r % c.modulus];
  return Integer(static_cast<unsigned long>(minimal_period(table)));
}

bool equivalent(const QuasiPolynomial& a, const QuasiPolynomial& b, std::uint64_t residue_limit) {
  if (a.route() == ExtractionRoute::structured && b.route() == ExtractionRoute::structured &&
      a.components() == b.components())
    return true;
  std::uint64_t joint = 1;
  for (const auto* qp : {&a, &b})
    for (const auto& c : qp->components()) {
      joint = std::lcm(joint, c.modulus);
      if (joint > residue_limit)
        throw std::invalid_argument("joint period too large to compare residue by residue");
    }
  const unsigned top = std::max(a.degree(), b.degree());
  for (std::uint64_t r = 0; r < joint; ++r) {
    auto ca = a.coefficients(Integer(static_cast<unsigned long>(r)));
    auto cb = b.coefficients(Integer(static_cast<unsigned long>(r)));
    ca.resize(top + 1);
    cb.resize(top + 1);
    if (ca != cb) return false;
  }
  return true;
}

QuasiPolynomial extract_quasipoly(const FactoredRational& g, unsigned degree_bound, const ExtractOptions& options) {
  const std::uint64_t threshold = threshold_of(g);
  const std::uint64_t offset = options.offset.value_or(threshold);
  if (offset < threshold)
    throw std::invalid_argument("sample offset " + std::to_string(offset) + " is below the validity threshold " +
                                std::to_string(threshold));
  const Integer period = denominator_period(g);
  ExtractionRoute route = options.route;
  if (route == ExtractionRoute::automatic)
    route = period <= options.residue_limit ? ExtractionRoute::per_residue : ExtractionRoute::structured;
  if (route == ExtractionRoute::per_residue) {
    if (period > options.residue_limit)
      throw ResourceLimitError("period " + period.get_str() + " exceeds the residue limit of " +
                               std::to_string(options.residue_limit));
    return extract_per_residue(g, degree_bound, period.get_ui(), offset);
  }
  return extract_structured(g, degree_bound, period, offset, options.residue_limit);
}

Rational eval_quasipoly(const QuasiPolynomial& qp, const Integer& n) {
  Rational total = 0;
  for (const auto& c : qp.components()) total += c.values[mod_u64(n, c.modulus)] * power_of(n, c.power);
  return total;
}

LeadingTermReport leading_term_report(const QuasiPolynomial& qp, std::uint64_t residue_limit) {
  LeadingTermReport report;
  report.degree = qp.degree();
  report.observed_degree = qp.observed_degree();
  report.shared = qp.coefficient_period(qp.degree()) == 1;
  if (qp.period() <= residue_limit) {
    const std::uint64_t period = qp.period().get_ui();
    for (std::uint64_t r = 0; r < period; ++r)
      report.per_residue.push_back(qp.coefficients(Integer(static_cast<unsigned long>(r)))[qp.degree()]);
    report.shared = std::all_of(report.per_residue.begin(), report.per_residue.end(),
                                [&](const Rational& v) { return v == report.per_residue.front(); });
  }
  if (report.shared) report.shared_value = qp.coefficients(Integer(0))[qp.degree()];
  return report;
}

std::optional<Rational> pole_at_one_leading_coefficient(const FactoredRational& g) {
  const auto orders = pole_orders(g);
  auto it = orders.find(1);
  if (it == orders.end()) return std::nullopt;
  const unsigned order = it->second;
  unsigned factors = 0;
  Integer scale = 1;
  for (auto [k, e] : g.denominator()) {
    factors += e;
    for (unsigned i = 0; i < e; ++i) scale *= k;
  }
  // (1-q)^(factors - order) divides the numerator exactly.
  DensePolynomial rest = g.numerator();
  for (unsigned i = order; i < factors; ++i) {
    auto q = rest.divide_one_minus_q_power(1);
    if (!q) throw std::logic_error("pole order at q = 1 inconsistent with the numerator");
    rest = std::move(*q);
  }
  Integer factorial = 1;
  for (unsigned i = 2; i < order; ++i) factorial *= i;
  return rest.evaluate(1) / Rational(scale * factorial);
}

Integer ramanujan_sum(unsigned d, std::uint64_t x) {
  if (d == 0) throw std::invalid_argument("root order must be positive");
  const unsigned g = static_cast<unsigned>(std::gcd<std::uint64_t>(x, d));
  Integer total = 0;
  for (unsigned e = 1; e <= g; ++e)
    if (g % e == 0) total += mobius(d / e) * static_cast<long>(e);
  return total;
}

}  // namespace dmp
