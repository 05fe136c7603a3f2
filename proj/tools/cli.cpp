#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dmp/asymptotics.hpp"
#include "dmp/errors.hpp"
#include "dmp/export.hpp"
#include "dmp/genfunc.hpp"
#include "dmp/partition.hpp"
#include "dmp/quasipoly.hpp"

namespace dmp::cli {

namespace {

GeneratingFunctionOptions gf_options(const RunConfig& config) {
  GeneratingFunctionOptions options;
  options.bell_cap = config.bell_cap;
  options.threads = config.threads;
  return options;
}

TermOptions term_options(const RunConfig& config) { return TermOptions{config.memo_cap, config.threads}; }

std::string describe(const ForbiddenSet& s) {
  std::string out = "{";
  for (unsigned x : s.elements()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

TermTable compute_terms(const RunConfig& config) {
  TermTable table;
  table.method = config.method;
  switch (config.method) {
    case Method::oracle:
      for (unsigned n = 0; n <= config.n_max; ++n) table.values.push_back(brute_force_count(n, std::max(n, 1u)));
      break;
    case Method::recurrence:
      table = distinct_multiplicity_terms(config.n_max, term_options(config));
      break;
    case Method::genfunc: {
      // f(n) = f_m(n) whenever m >= n, so one generating function covers the table.
      const FactoredRational g = distinct_multiplicity_gf(std::max(config.n_max, 1u), gf_options(config));
      for (const auto& c : series(g, config.n_max)) table.values.push_back(c.get_num());
      break;
    }
  }
  return table;
}

int run_terms(const RunConfig& config, std::ostream& out) {
  const TermTable table = compute_terms(config);
  switch (config.format) {
    case Format::json:
      out << to_json(table).dump(2) << '\n';
      break;
    case Format::csv:
      out << "n,value,method\n";
      for (std::size_t n = 0; n < table.values.size(); ++n)
        out << n << ',' << to_string(table.values[n]) << ',' << to_string(table.method) << '\n';
      break;
    case Format::plain:
      for (std::size_t n = 0; n < table.values.size(); ++n) out << n << ' ' << to_string(table.values[n]) << '\n';
      break;
  }
  return kOk;
}

int run_gf(const RunConfig& config, std::ostream& out) {
  const FactoredRational g = distinct_multiplicity_gf(config.m, gf_options(config));
  if (config.format == Format::json) out << to_json(g).dump(2) << '\n';
  else out << to_string(g) << '\n';
  return kOk;
}

int run_quasipoly(const RunConfig& config, std::ostream& out) {
  const FactoredRational g = distinct_multiplicity_gf(config.m, gf_options(config));
  ExtractOptions options;
  options.residue_limit = config.residue_limit;
  const QuasiPolynomial qp = extract_quasipoly(g, config.degree_bound.value_or(config.m - 1), options);
  if (config.format == Format::json) {
    out << to_json(qp, config.residue_limit).dump(2) << '\n';
    return kOk;
  }
  const LeadingTermReport report = leading_term_report(qp, config.residue_limit);
  out << "period " << qp.period().get_str() << '\n';
  out << "degree " << qp.degree() << '\n';
  out << "observed_degree " << report.observed_degree << '\n';
  out << "validity_threshold " << qp.validity_threshold() << '\n';
  out << "exceptional_indices " << qp.exceptional_indices().size() << '\n';
  out << "components " << qp.components().size() << '\n';
  out << "leading_shared " << (report.shared ? "yes" : "no") << '\n';
  if (report.shared_value) out << "leading_coefficient " << to_string(*report.shared_value) << '\n';
  if (auto pole = pole_at_one_leading_coefficient(g)) out << "pole_at_one_coefficient " << to_string(*pole) << '\n';
  return kOk;
}

int run_wilf(const RunConfig& config, std::ostream& out) {
  const RatioSequence seq = wilf_ratios(config.n_max, config.precision, term_options(config));
  switch (config.format) {
    case Format::csv:
      write_ratio_csv(out, seq);
      break;
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["digits"] = seq.digits;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& e : seq.entries)
        rows.push_back(nlohmann::ordered_json{{"n", e.n}, {"f", to_string(e.count)}, {"ratio", e.ratio.text}});
      doc["entries"] = std::move(rows);
      if (seq.entries.size() >= 4) doc["heuristic_limit"] = heuristic_limit_estimate(seq).text;
      doc["hardy_ramanujan_constant"] = hardy_ramanujan_constant(config.precision).text;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::plain:
      for (const auto& e : seq.entries) out << e.n << ' ' << to_string(e.count) << ' ' << e.ratio.text << '\n';
      if (seq.entries.size() >= 4) out << "heuristic limit estimate: " << heuristic_limit_estimate(seq).text << '\n';
      out << "Hardy-Ramanujan C: " << hardy_ramanujan_constant(config.precision).text << '\n';
      break;
  }
  return kOk;
}

// Runs `check` over cases in increasing order and reports the first failure,
// which is therefore the smallest counterexample in that order.
struct CheckResult {
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
};

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, CheckResult>> results;
  const std::vector<ForbiddenSet> subsets = {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  const unsigned oracle_n = config.allow_large_oracle ? config.n_max : std::min(config.n_max, kOracleGuard);

  {
    CheckResult r;
    RestrictedCountMemo memo(config.memo_cap);
    for (unsigned n = 0; n <= oracle_n && !r.counterexample; ++n)
      for (unsigned m = 1; m <= config.m_max && !r.counterexample; ++m)
        for (const auto& s : subsets) {
          ++r.cases;
          const Integer a = brute_force_count(n, m, s);
          const Integer b = restricted_count(n, m, s, memo);
          if (a != b) {
            r.counterexample = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " S=" + describe(s) +
                               ": oracle " + to_string(a) + " vs recurrence " + to_string(b);
            break;
          }
        }
    results.emplace_back("oracle-vs-recurrence", std::move(r));
  }
  {
    CheckResult r;
    TermOptions options = term_options(config);
    const TermTable table = distinct_multiplicity_terms(oracle_n, options);
    for (unsigned n = 0; n <= oracle_n; ++n) {
      ++r.cases;
      const Integer a = brute_force_count(n, std::max(n, 1u));
      if (a != table.values[n]) {
        r.counterexample = "n=" + std::to_string(n) + ": oracle " + to_string(a) + " vs term table " +
                           to_string(table.values[n]);
        break;
      }
    }
    results.emplace_back("oracle-vs-term-table", std::move(r));
  }
  {
    CheckResult r;
    RestrictedCountMemo memo(config.memo_cap);
    for (unsigned m = 1; m <= config.m_max && !r.counterexample; ++m) {
      const PowerSeriesPrefix coeffs = series(distinct_multiplicity_gf(m, gf_options(config)), config.n_max);
      for (unsigned n = 0; n <= config.n_max; ++n) {
        ++r.cases;
        const Integer b = restricted_count(n, m, {}, memo);
        if (coeffs[n] != Rational(b)) {
          r.counterexample = "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": genfunc " +
                             to_string(coeffs[n]) + " vs recurrence " + to_string(b);
          break;
        }
      }
    }
    results.emplace_back("genfunc-vs-recurrence", std::move(r));
  }

  out << "verify n_max=" << config.n_max << " m_max=" << config.m_max << " oracle_n_max=" << oracle_n << '\n';
  bool ok = true;
  for (const auto& [name, r] : results) {
    out << name << ": " << r.cases << " cases, " << (r.counterexample ? "MISMATCH" : "ok") << '\n';
    if (r.counterexample) {
      out << "  counterexample: " << *r.counterexample << '\n';
      err << name << " mismatch: " << *r.counterexample << '\n';
      ok = false;
    }
  }
  out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kOk : kMismatch;
}

int run_bench(const RunConfig& config, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point start) { return std::chrono::duration<double>(clock::now() - start).count(); };
  struct Row {
    std::string method;
    double seconds;
    std::string checksum;
  };
  std::vector<Row> rows;
  const unsigned m = config.m;

  if (config.n_max <= kOracleGuard || config.allow_large_oracle) {
    auto start = clock::now();
    Integer sum = 0;
    for (unsigned n = 0; n <= config.n_max; ++n) sum += brute_force_count(n, m);
    rows.push_back({"oracle", seconds(start), to_string(sum)});
  }
  {
    auto start = clock::now();
    RestrictedCountMemo memo(config.memo_cap);
    Integer sum = 0;
    for (unsigned n = 0; n <= config.n_max; ++n) sum += restricted_count(n, m, {}, memo);
    rows.push_back({"recurrence", seconds(start), to_string(sum)});
  }
  {
    auto start = clock::now();
    Rational sum = 0;
    for (const auto& c : series(distinct_multiplicity_gf(m, gf_options(config)), config.n_max)) sum += c;
    rows.push_back({"genfunc", seconds(start), to_string(sum)});
  }

  if (config.format == Format::csv) out << "method,n_max,m,seconds,checksum\n";
  for (const auto& row : rows) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(6) << row.seconds;
    if (config.format == Format::csv)
      out << row.method << ',' << config.n_max << ',' << m << ',' << secs.str() << ',' << row.checksum << '\n';
    else
      out << std::left << std::setw(12) << row.method << secs.str() << " s  sum=" << row.checksum << '\n';
  }
  return kOk;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.threads == 0) throw std::invalid_argument("--threads must be positive");
  if (config.memo_cap == 0) throw std::invalid_argument("--memo-cap must be positive");
  if (config.bell_cap == 0) throw std::invalid_argument("--bell-cap must be positive");
  if (config.precision == 0 || config.precision > kMaxDigits)
    throw std::invalid_argument("--precision must be between 1 and " + std::to_string(kMaxDigits));
  switch (config.command) {
    case Command::terms:
      if (config.method == Method::oracle && config.n_max > kOracleGuard && !config.allow_large_oracle)
        throw std::invalid_argument("--method oracle is limited to --n-max " + std::to_string(kOracleGuard) +
                                    "; pass --allow-large-oracle to override");
      break;
    case Command::gf:
      if (config.m == 0) throw std::invalid_argument("-m must be positive");
      if (config.format == Format::csv) throw std::invalid_argument("gf supports --format plain or json");
      break;
    case Command::quasipoly:
      if (config.m == 0) throw std::invalid_argument("-m must be positive");
      if (config.format == Format::csv) throw std::invalid_argument("quasipoly supports --format plain or json");
      break;
    case Command::wilf:
      if (config.n_max == 0) throw std::invalid_argument("--n-max must be positive");
      break;
    case Command::verify:
      if (config.m_max == 0) throw std::invalid_argument("--m-max must be positive");
      break;
    case Command::bench:
      if (config.m == 0) throw std::invalid_argument("-m must be positive");
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::terms: return run_terms(config, out);
      case Command::gf: return run_gf(config, out);
      case Command::quasipoly: return run_quasipoly(config, out);
      case Command::wilf: return run_wilf(config, out);
      case Command::verify: return run_verify(config, out, err);
      case Command::bench: return run_bench(config, out);
    }
  } catch (const ResourceLimitError& e) {
    err << "resource cap exceeded: " << e.what() << '\n';
    return kResourceCap;
  } catch (const FitValidationError& e) {
    err << "fit validation failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts partitions whose part multiplicities are pairwise distinct", "dmp"};
  app.require_subcommand(1);
  RunConfig config;

  const std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
  std::string method_name = "recurrence";
  std::string format_name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_option("--threads", config.threads, "worker threads (1 = sequential)");
    sub->add_option("--memo-cap", config.memo_cap, "memo table entry cap");
    sub->add_option("--bell-cap", config.bell_cap, "largest m for the generating function");
  };

  auto* terms = app.add_subcommand("terms", "term table of f(0..n_max)");
  terms->add_option("--n-max", config.n_max, "last index")->required();
  terms->add_option("--method", method_name, "oracle, recurrence or genfunc")
      ->check(CLI::IsMember({"oracle", "recurrence", "genfunc"}));
  terms->add_flag("--allow-large-oracle", config.allow_large_oracle, "lift the oracle size guard");
  add_common(terms);

  auto* gf = app.add_subcommand("gf", "generating function sum_n f_m(n) q^n");
  gf->add_option("-m", config.m, "largest part")->required();
  add_common(gf);

  auto* qp = app.add_subcommand("quasipoly", "quasi-polynomial form of f_m(n)");
  qp->add_option("-m", config.m, "largest part")->required();
  qp->add_option("--degree-bound", config.degree_bound, "polynomial degree per residue (default m-1)");
  qp->add_option("--residue-limit", config.residue_limit, "largest period fitted residue by residue");
  add_common(qp);

  auto* wilf = app.add_subcommand("wilf", "log f(n)/sqrt(n) for n = 1..n_max");
  wilf->add_option("--n-max", config.n_max, "last index")->required();
  wilf->add_option("--precision", config.precision, "significant digits");
  add_common(wilf);

  auto* verify = app.add_subcommand("verify", "cross-check oracle, recurrence and generating function");
  verify->add_option("--n-max", config.n_max, "largest n")->capture_default_str();
  verify->add_option("--m-max", config.m_max, "largest part bound")->capture_default_str();
  verify->add_flag("--allow-large-oracle", config.allow_large_oracle, "lift the oracle size guard");
  add_common(verify);

  auto* bench = app.add_subcommand("bench", "time the three methods");
  bench->add_option("--n-max", config.n_max, "largest n")->required();
  bench->add_option("-m", config.m, "largest part")->required();
  bench->add_flag("--allow-large-oracle", config.allow_large_oracle, "lift the oracle size guard");
  add_common(bench);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kOk : kUsage;
  }

  config.method = *parse_method(method_name);
  if (!format_name.empty()) config.format = formats.at(format_name);
  if (verify->parsed() && verify->count("--n-max") == 0) config.n_max = 40;
  if (terms->parsed()) config.command = Command::terms;
  else if (gf->parsed()) config.command = Command::gf;
  else if (qp->parsed()) config.command = Command::quasipoly;
  else if (wilf->parsed()) {
    config.command = Command::wilf;
    if (format_name.empty()) config.format = Format::csv;
  } else if (verify->parsed()) config.command = Command::verify;
  else config.command = Command::bench;
  return run(config, out, err);
}

}  // namespace dmp::cli
