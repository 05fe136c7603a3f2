#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dmp/export.hpp"
#include "dmp/factored_rational.hpp"
#include "oracles.hpp"

using namespace dmp;

namespace {

DensePolynomial poly(std::vector<Rational> c) { return DensePolynomial(std::move(c)); }

FactoredRational random_fraction(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), len(0, 6), kdist(1, 5), edist(0, 2);
  std::vector<Rational> c(len(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  Denominator d;
  for (int i = 0; i < 3; ++i)
    if (unsigned e = edist(rng)) d[kdist(rng)] += e;
  return FactoredRational(poly(c), d);
}

std::vector<Rational> naive_series(const FactoredRational& a, std::size_t n) {
  return oracle::divide_series(a.numerator().coefficients(), oracle::expand_denominator(a.denominator()), n);
}

std::vector<Rational> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("dense polynomial") {
  auto p = poly({1, 0, -1});
  CHECK(p.degree() == 2);
  CHECK(poly({0, 0}).degree() == -1);
  CHECK(p.evaluate(3) == -8);
  auto q = p;
  q.multiply_one_minus_q_power(2);
  CHECK(q == poly({1, 0, -2, 0, 1}));
  CHECK(q.divide_one_minus_q_power(2) == p);
  CHECK_FALSE(poly({1, 1}).divide_one_minus_q_power(3).has_value());
  auto [quot, rem] = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
  CHECK(quot == poly({1, 1, 1}));
  CHECK(rem.is_zero());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(totient(12) == 4);
  for (unsigned n = 1; n <= 12; ++n) {
    DensePolynomial prod = DensePolynomial::constant(1);
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    auto expected = DensePolynomial::monomial(1, n) - DensePolynomial::constant(1);
    CHECK(prod == expected);
  }
}

TEST_CASE("series examples") {
  CHECK(series(FactoredRational(poly({1}), {{1, 1}}), 4) == ints({1, 1, 1, 1, 1}));
  CHECK(series(FactoredRational(poly({1}), {{1, 1}, {2, 1}}), 5) == ints({1, 1, 2, 2, 3, 3}));
  CHECK(series(FactoredRational(poly({0, 0, 0, 1}), {{3, 1}}), 7) == ints({0, 0, 0, 1, 0, 0, 1, 0}));
}

TEST_CASE("stride expansion matches naive inversion") {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned e = 1; e <= 3; ++e) {
      FactoredRational a(poly({1, -2, 3}), {{k, e}, {1, 1}});
      CHECK(series(a, 60) == naive_series(a, 60));
    }
}

TEST_CASE("addition") {
  FactoredRational a(poly({1}), {{1, 1}});
  FactoredRational b(poly({0, -1}), {{1, 1}});
  auto sum = reduce(a + b);
  CHECK(sum == FactoredRational::one());

  FactoredRational c(poly({1}), {{1, 1}, {2, 1}});
  FactoredRational d(poly({0, 0, 0, -1}), {{3, 1}});
  CHECK(series(c + d, 5) == ints({1, 1, 2, 1, 3, 3}));
  CHECK(series(c + d, 40) == naive_series(c + d, 40));

  CHECK(c + FactoredRational() == c);
  CHECK(FactoredRational() + c == c);
}

TEST_CASE("multiplication") {
  FactoredRational a(poly({0, 0, 0, -1}), {{3, 1}});
  auto sq = a * a;
  CHECK(series(sq, 6) == ints({0, 0, 0, 0, 0, 0, 1}));
  CHECK(sq.denominator() == Denominator{{3, 2}});
  CHECK((a * FactoredRational()).is_zero());
}

TEST_CASE("reduction") {
  FactoredRational a(poly({1, 0, 0, -1}), {{1, 1}});
  auto r = reduce(a);
  CHECK(r.numerator() == poly({1, 1, 1}));
  CHECK(r.denominator().empty());
  CHECK(reduce(r) == r);

  FactoredRational b(poly({1, 0, -1}), {{1, 1}, {2, 1}});
  CHECK(reduce(b) == FactoredRational(poly({1}), {{1, 1}}));
}

TEST_CASE("randomized algebraic properties") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = random_fraction(rng), b = random_fraction(rng), c = random_fraction(rng);
    const std::size_t n = 30;
    CHECK(series(a + b, n) == series(b + a, n));
    CHECK(series(a * b, n) == series(b * a, n));
    CHECK(series((a + b) + c, n) == series(a + (b + c), n));
    CHECK(series((a * b) * c, n) == series(a * (b * c), n));
    auto sa = series(a, n), sb = series(b, n), sum = series(a + b, n);
    for (std::size_t i = 0; i <= n; ++i) CHECK(sum[i] == sa[i] + sb[i]);
    auto red = reduce(a);
    CHECK(series(red, n) == sa);
    CHECK(reduce(red) == red);
    CHECK(red.denominator_degree() <= a.denominator_degree());
    CHECK(sa == naive_series(a, n));
  }
}

TEST_CASE("pole orders and period") {
  FactoredRational a(poly({1}), {{1, 1}, {2, 1}, {3, 1}});
  auto orders = pole_orders(a);
  CHECK(orders == std::map<unsigned, unsigned>{{1, 3}, {2, 1}, {3, 1}});
  CHECK(denominator_period(a) == 6);
  // (1+q) cancels the pole at -1.
  FactoredRational b(poly({1, 1}), {{2, 1}});
  CHECK(pole_orders(b) == std::map<unsigned, unsigned>{{1, 1}});
}

TEST_CASE("canonical text") {
  CHECK(to_string(FactoredRational(poly({1}), {{1, 1}})) == "1/((1-q))");
  CHECK(to_string(FactoredRational(poly({1, 0, 0, -1, 0, 0, 2}), {{1, 2}, {3, 1}})) ==
        "(1 - q^3 + 2*q^6)/((1-q)^2*(1-q^3))");
  CHECK(to_string(FactoredRational(poly({0, 0, 3}))) == "3*q^2");
}

TEST_CASE("json round trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    auto a = random_fraction(rng);
    auto doc = to_json(a);
    auto back = factored_rational_from_json(nlohmann::ordered_json::parse(doc.dump()));
    CHECK(back == a);
    CHECK(to_json(back).dump() == doc.dump());
  }
}
