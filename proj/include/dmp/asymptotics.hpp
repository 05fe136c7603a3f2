#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dmp/numeric.hpp"
#include "dmp/recurrence.hpp"

namespace dmp {

inline constexpr unsigned kDefaultDigits = 30;
// Internal working precision; requested output precision may not exceed it.
inline constexpr unsigned kMaxDigits = 100;

/// A high-precision decimal rendered to a fixed number of significant digits.
struct Decimal {
  std::string text;
  double approx = 0.0;
};

struct RatioEntry {
  unsigned n = 0;
  Integer count;  // f(n)
  Decimal ratio;  // log f(n) / sqrt(n)
};

struct RatioSequence {
  unsigned digits = kDefaultDigits;
  std::vector<RatioEntry> entries;
};

/// log f(n) / sqrt(n) for n = 1..n_max from exact recurrence counts.
RatioSequence wilf_ratios(unsigned n_max, unsigned digits = kDefaultDigits, const TermOptions& options = {});
/// Same, from an existing term table (entries 1..size-1).
RatioSequence wilf_ratios(const TermTable& terms, unsigned digits = kDefaultDigits);

/// Heuristic limit of log f(n)/sqrt(n): the secant slope of log f against
/// sqrt(n) between n_max/4 and n_max, which cancels an a/sqrt(n) correction.
/// Not a proven bound or a convergence claim.
Decimal heuristic_limit_estimate(const RatioSequence& seq);

/// C = pi * sqrt(2/3).
Decimal hardy_ramanujan_constant(unsigned digits = kDefaultDigits);

/// exp(C sqrt(n)) / (4 n sqrt(3)).
Decimal hardy_ramanujan_estimate(unsigned n, unsigned digits = kDefaultDigits);

/// estimate(n) / p(n) with exact p(n).
Decimal hardy_ramanujan_ratio(unsigned n, unsigned digits = kDefaultDigits);

/// log(value) / sqrt(n) for a positive integer value.
Decimal log_over_sqrt(const Integer& value, unsigned n, unsigned digits = kDefaultDigits);

/// Rows "n,f,ratio" with a header line, LF endings.
void write_ratio_csv(std::ostream& out, const RatioSequence& seq);

}  // namespace dmp
