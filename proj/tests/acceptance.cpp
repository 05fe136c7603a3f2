// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dmp/asymptotics.hpp"
#include "dmp/genfunc.hpp"
#include "dmp/quasipoly.hpp"
#include "dmp/recurrence.hpp"

using namespace dmp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > budget_seconds) {
    o.ok = false;
    o.detail = "over time budget";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %d  %-34s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string capture(std::vector<std::string> args) {
  args.insert(args.begin(), "dmp");
  std::ostringstream out, err;
  int status = cli::run_cli(args, out, err);
  return std::to_string(status) + "\n" + out.str();
}

}  // namespace

int main() {
  criterion(1, "oracle equivalence", 120, [] {
    Outcome o;
    RestrictedCountMemo memo;
    for (unsigned n = 0; n <= 40; ++n)
      for (unsigned m = 1; m <= std::min(std::max(n, 1u), 8u); ++m)
        for (unsigned mask = 0; mask < 8; ++mask) {
          std::vector<unsigned> s;
          for (unsigned i = 0; i < 3; ++i)
            if (mask >> i & 1) s.push_back(i + 1);
          ForbiddenSet set(s);
          o.require(restricted_count(n, m, set, memo) == brute_force_count(n, m, set),
                    "n=" + std::to_string(n) + " m=" + std::to_string(m) + " mask=" + std::to_string(mask));
        }
    return o;
  });

  criterion(2, "term table to n = 250", 600, [] {
    Outcome o;
    auto first = distinct_multiplicity_terms(250);
    auto second = distinct_multiplicity_terms(250);
    o.require(first.values.size() == 251, "wrong table length");
    o.require(first.values == second.values, "runs differ");
    for (unsigned n = 0; n <= 60; ++n)
      o.require(first.values[n] == brute_force_count(n, std::max(n, 1u)), "oracle mismatch at n=" + std::to_string(n));
    o.detail = "f(250) = " + to_string(first.values[250]);
    return o;
  });

  criterion(3, "generating functions m <= 8", 300, [] {
    Outcome o;
    for (unsigned m = 1; m <= 8; ++m) {
      auto s = series(distinct_multiplicity_gf(m), 100);
      RestrictedCountMemo memo;
      for (unsigned n = 0; n <= 100; ++n)
        o.require(s[n] == restricted_count(n, m, {}, memo), "m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    return o;
  });

  criterion(4, "connected graph identity", 10, [] {
    Outcome o;
    auto egf = egf_log_coefficients(6);
    Integer fact = 1;
    for (unsigned n = 1; n <= 6; ++n) {
      if (n > 1) fact *= n - 1;
      const Integer expected = n % 2 == 1 ? fact : Integer(-fact);
      const Integer sum = connected_graph_signsum(n);
      o.require(sum == expected, "signsum n=" + std::to_string(n));
      o.require(egf[n] == Rational(sum), "egf n=" + std::to_string(n));
    }
    return o;
  });

  criterion(5, "quasi-polynomial structure m <= 6", 120, [] {
    Outcome o;
    for (unsigned m = 1; m <= 6; ++m) {
      auto g = distinct_multiplicity_gf(m);
      auto qp = extract_quasipoly(g, m - 1);
      auto report = leading_term_report(qp);
      const std::string tag = "m=" + std::to_string(m);
      o.require(qp.observed_degree() == m - 1, tag + " degree");
      o.require(report.shared, tag + " leading coefficient varies");
      o.require(report.shared_value == pole_at_one_leading_coefficient(g), tag + " leading value");
    }
    return o;
  });

  criterion(6, "pole order at q = 1 is m, m <= 8", 300, [] {
    Outcome o;
    for (unsigned m = 1; m <= 8; ++m) {
      auto orders = pole_orders(distinct_multiplicity_gf(m));
      const std::string tag = "m=" + std::to_string(m);
      o.require(orders.count(1) && orders.at(1) == m, tag + " order at 1");
      for (auto [d, order] : orders) o.require(order <= m, tag + " order above m at d=" + std::to_string(d));
    }
    return o;
  });

  criterion(7, "asymptotic sanity", 600, [] {
    Outcome o;
    auto seq = wilf_ratios(250);
    auto p = partition_counts(250, 250);
    const auto& last = seq.entries.back();
    o.require(last.ratio.approx > 1.0 && last.ratio.approx < 2.565099661, "ratio out of range");
    for (unsigned n = 3; n <= 250; ++n)
      o.require(seq.entries[n - 1].count < p[n], "f(n) >= p(n) at n=" + std::to_string(n));
    o.detail = "ratio(250) = " + last.ratio.text + ", heuristic limit " + heuristic_limit_estimate(seq).text;
    return o;
  });

  criterion(8, "determinism of verify and terms", 600, [] {
    Outcome o;
    const std::vector<std::string> terms{"terms", "--n-max", "150"};
    auto base = capture(terms);
    o.require(base.rfind("0\n", 0) == 0, "terms failed");
    o.require(capture(terms) == base, "terms differs between runs");
    auto threaded = terms;
    threaded.insert(threaded.end(), {"--threads", "4"});
    o.require(capture(threaded) == base, "terms differs with 4 threads");

    const std::vector<std::string> verify{"verify"};
    auto vbase = capture(verify);
    o.require(vbase.rfind("0\n", 0) == 0, "verify failed");
    o.require(capture(verify) == vbase, "verify differs between runs");
    o.require(capture({"verify", "--threads", "4"}) == vbase, "verify differs with 4 threads");
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
