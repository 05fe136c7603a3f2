#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmp/errors.hpp"
#include "dmp/export.hpp"
#include "dmp/genfunc.hpp"
#include "dmp/quasipoly.hpp"
#include "dmp/recurrence.hpp"

using namespace dmp;

namespace {

Rational leading(unsigned m) {
  Integer f = 1, g = 1;
  for (unsigned i = 2; i <= m; ++i) f *= i;
  for (unsigned i = 2; i < m; ++i) g *= i;
  return Rational(1, 1) / Rational(f * g);
}

}  // namespace

TEST_CASE("constant function") {
  FactoredRational g(DensePolynomial::constant(1), {{1, 1}});
  auto qp = extract_quasipoly(g, 0);
  CHECK(qp.period() == 1);
  CHECK(eval_quasipoly(qp, Integer("1000000")) == 1);
  CHECK(qp.observed_degree() == 0);
}

TEST_CASE("m = 2") {
  auto g = distinct_multiplicity_gf(2);
  auto qp = extract_quasipoly(g, 1);
  CHECK(qp.period() == 6);
  CHECK(qp.observed_degree() == 1);
  CHECK(eval_quasipoly(qp, 12) == 6);
  for (unsigned r = 0; r < 6; ++r) CHECK(qp.coefficients(r).at(1) == Rational(1, 2));
  auto report = leading_term_report(qp);
  CHECK(report.shared);
  CHECK(report.per_residue.size() == 6);
  CHECK(report.shared_value == Rational(1, 2));
}

TEST_CASE("fit validation catches a short degree bound") {
  CHECK_THROWS_AS(extract_quasipoly(distinct_multiplicity_gf(3), 0), FitValidationError);
  CHECK_THROWS_AS(extract_quasipoly(distinct_multiplicity_gf(3), 1, {ExtractionRoute::structured, {}}),
                  FitValidationError);
}

TEST_CASE("offset below threshold is rejected") {
  auto g = distinct_multiplicity_gf(2);
  ExtractOptions opts;
  opts.offset = 0;
  CHECK_THROWS_AS(extract_quasipoly(g, 1, opts), std::invalid_argument);
}

TEST_CASE("routes agree and do not depend on offset") {
  for (unsigned m = 1; m <= 4; ++m) {
    auto g = distinct_multiplicity_gf(m);
    auto a = extract_quasipoly(g, m - 1, {ExtractionRoute::per_residue, {}});
    auto b = extract_quasipoly(g, m - 1, {ExtractionRoute::structured, {}});
    CHECK(equivalent(a, b));
    ExtractOptions shifted{ExtractionRoute::per_residue, a.validity_threshold() + 17};
    CHECK(equivalent(a, extract_quasipoly(g, m - 1, shifted)));
    shifted.route = ExtractionRoute::structured;
    CHECK(equivalent(b, extract_quasipoly(g, m - 1, shifted)));
  }
}

TEST_CASE("structure for m <= 6") {
  for (unsigned m = 1; m <= 6; ++m) {
    auto g = distinct_multiplicity_gf(m);
    auto qp = extract_quasipoly(g, m - 1);
    INFO("m=", m);
    CHECK(qp.observed_degree() == m - 1);
    auto report = leading_term_report(qp);
    CHECK(report.shared);
    CHECK(report.shared_value == leading(m));
    CHECK(pole_at_one_leading_coefficient(g) == leading(m));
    CHECK(qp.coefficient_period(m - 1) == 1);

    // A window of 100 consecutive values past the threshold.
    RestrictedCountMemo memo;
    const auto start = qp.validity_threshold();
    for (std::uint64_t n = start; n < start + 100; ++n)
      CHECK(eval_quasipoly(qp, Integer(std::to_string(n))) == restricted_count(static_cast<unsigned>(n), m, {}, memo));
    auto s = series(g, start);
    for (std::uint64_t n = 0; n < start; ++n) {
      bool exceptional = std::find(qp.exceptional_indices().begin(), qp.exceptional_indices().end(), n) !=
                         qp.exceptional_indices().end();
      CHECK(exceptional == (eval_quasipoly(qp, Integer(std::to_string(n))) != s[n]));
    }
  }
}

TEST_CASE("ramanujan sums") {
  CHECK(ramanujan_sum(1, 5) == 1);
  CHECK(ramanujan_sum(2, 3) == -1);
  CHECK(ramanujan_sum(6, 0) == 2);
  CHECK(ramanujan_sum(6, 1) == 1);
  CHECK(ramanujan_sum(4, 2) == -2);
}

TEST_CASE("json export") {
  auto qp = extract_quasipoly(distinct_multiplicity_gf(2), 1);
  auto doc = to_json(qp);
  CHECK(doc["period"] == "6");
  CHECK(doc["residues"].size() == 6);
  CHECK(nlohmann::ordered_json::parse(doc.dump()).dump() == doc.dump());
  auto big = extract_quasipoly(distinct_multiplicity_gf(5), 4);
  CHECK_FALSE(to_json(big).contains("residues"));
}
