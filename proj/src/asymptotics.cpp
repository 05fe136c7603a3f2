#include "dmp/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <sstream>
#include <stdexcept>

namespace dmp {

namespace {

using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kMaxDigits + 10>>;

void check_digits(unsigned digits) {
  if (digits == 0 || digits > kMaxDigits)
    throw std::invalid_argument("precision must be between 1 and " + std::to_string(kMaxDigits) + " digits");
}

Float to_float(const Integer& value) {
  Float out;
  mpfr_set_z(out.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return out;
}

Decimal render(const Float& x, unsigned digits) {
  Decimal d;
  if (x == 0) {
    d.text = "0";
    return d;
  }
  d.text = x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
  d.approx = x.convert_to<double>();
  return d;
}

Float constant_c() {
  using boost::multiprecision::sqrt;
  return boost::math::constants::pi<Float>() * sqrt(Float(2) / 3);
}

Float estimate(unsigned n) {
  using boost::multiprecision::exp;
  using boost::multiprecision::sqrt;
  const Float root_n = sqrt(Float(n));
  return exp(constant_c() * root_n) / (4 * Float(n) * sqrt(Float(3)));
}

}  // namespace

Decimal log_over_sqrt(const Integer& value, unsigned n, unsigned digits) {
  check_digits(digits);
  if (value <= 0) throw std::domain_error("logarithm of a non-positive count");
  if (n == 0) throw std::invalid_argument("n must be positive");
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;
  return render(log(to_float(value)) / sqrt(Float(n)), digits);
}

RatioSequence wilf_ratios(const TermTable& terms, unsigned digits) {
  check_digits(digits);
  RatioSequence seq;
  seq.digits = digits;
  for (std::size_t n = 1; n < terms.values.size(); ++n) {
    const unsigned idx = static_cast<unsigned>(n);
    seq.entries.push_back({idx, terms.values[n], log_over_sqrt(terms.values[n], idx, digits)});
  }
  return seq;
}

RatioSequence wilf_ratios(unsigned n_max, unsigned digits, const TermOptions& options) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  check_digits(digits);
  return wilf_ratios(distinct_multiplicity_terms(n_max, options), digits);
}

Decimal heuristic_limit_estimate(const RatioSequence& seq) {
  if (seq.entries.size() < 4) throw std::invalid_argument("need at least 4 ratios for an estimate");
  const RatioEntry& hi = seq.entries.back();
  const RatioEntry& lo = seq.entries[hi.n / 4 - 1];
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;
  const Float slope = (log(to_float(hi.count)) - log(to_float(lo.count))) / (sqrt(Float(hi.n)) - sqrt(Float(lo.n)));
  return render(slope, seq.digits);
}

Decimal hardy_ramanujan_constant(unsigned digits) {
  check_digits(digits);
  return render(constant_c(), digits);
}

Decimal hardy_ramanujan_estimate(unsigned n, unsigned digits) {
  check_digits(digits);
  if (n == 0) throw std::invalid_argument("n must be positive");
  return render(estimate(n), digits);
}

Decimal hardy_ramanujan_ratio(unsigned n, unsigned digits) {
  check_digits(digits);
  if (n == 0) throw std::invalid_argument("n must be positive");
  return render(estimate(n) / to_float(partition_count(n, n)), digits);
}

void write_ratio_csv(std::ostream& out, const RatioSequence& seq) {
  out << "n,f,ratio\n";
  for (const auto& e : seq.entries) out << e.n << ',' << to_string(e.count) << ',' << e.ratio.text << '\n';
}

}  // namespace dmp
