#include "dmp/genfunc.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "dmp/errors.hpp"

namespace dmp {

SetPartition SetPartition::from_growth_string(std::span<const unsigned> growth) {
  SetPartition c;
  c.m_ = static_cast<unsigned>(growth.size());
  unsigned next_block = 0;
  for (std::size_t i = 0; i < growth.size(); ++i) {
    if (growth[i] > next_block) throw std::invalid_argument("not a restricted growth string");
    if (growth[i] == next_block) {
      c.blocks_.emplace_back();
      ++next_block;
    }
    c.blocks_[growth[i]].push_back(static_cast<unsigned>(i + 1));
  }
  return c;
}

SetPartitionEnumerator::SetPartitionEnumerator(unsigned m) : growth_(m, 0), prefix_max_(m, 0) {
  if (m == 0) throw std::invalid_argument("ground set size must be positive");
  current_ = SetPartition::from_growth_string(growth_);
}

void SetPartitionEnumerator::advance() {
  if (done_) return;
  const std::size_t m = growth_.size();
  std::size_t i = m;
  while (i-- > 1) {
    if (growth_[i] <= prefix_max_[i - 1]) break;
  }
  if (i == 0 || i >= m) {
    done_ = true;
    return;
  }
  ++growth_[i];
  prefix_max_[i] = std::max(prefix_max_[i - 1], growth_[i]);
  for (std::size_t j = i + 1; j < m; ++j) {
    growth_[j] = 0;
    prefix_max_[j] = prefix_max_[i];
  }
  current_ = SetPartition::from_growth_string(growth_);
}

FactoredRational block_weight(std::span<const unsigned> block) {
  if (block.empty()) throw std::invalid_argument("empty block");
  if (block.size() == 1) return FactoredRational(DensePolynomial::constant(1), {{block[0], 1}});
  const unsigned t = std::accumulate(block.begin(), block.end(), 0u);
  Integer coefficient = 1;
  for (std::size_t i = 2; i < block.size(); ++i) coefficient *= static_cast<unsigned long>(i);
  if (block.size() % 2 == 0) coefficient = -coefficient;
  return FactoredRational(DensePolynomial::monomial(Rational(coefficient), t), {{t, 1}});
}

FactoredRational partition_weight(const SetPartition& c) {
  FactoredRational product = FactoredRational::one();
  for (const auto& block : c.blocks()) product = mul(product, block_weight(block));
  return product;
}

namespace {

using Buckets = std::map<Denominator, DensePolynomial>;

void accumulate(Buckets& buckets, const SetPartition& c) {
  FactoredRational w = partition_weight(c);
  buckets[w.denominator()] += w.numerator();
}

void merge_into(Buckets& into, Buckets&& from) {
  for (auto& [den, num] : from) into[den] += num;
}

}  // namespace

FactoredRational distinct_multiplicity_gf(unsigned m, const GeneratingFunctionOptions& options) {
  if (m == 0) throw std::invalid_argument("part bound m must be positive");
  if (m > options.bell_cap)
    throw ResourceLimitError("m = " + std::to_string(m) + " exceeds the Bell-number cap of " +
                             std::to_string(options.bell_cap));

  Buckets buckets;
  SetPartitionEnumerator partitions(m);
  if (options.threads <= 1) {
    for (const SetPartition& c : partitions) accumulate(buckets, c);
  } else {
    std::mutex source_mutex, sink_mutex;
    std::exception_ptr failure;
    auto work = [&] {
      Buckets local;
      std::vector<SetPartition> batch;
      try {
        for (;;) {
          batch.clear();
          {
            std::lock_guard lock(source_mutex);
            for (; !partitions.done() && batch.size() < 512; partitions.advance()) batch.push_back(partitions.current());
          }
          if (batch.empty()) break;
          for (const auto& c : batch) accumulate(local, c);
        }
      } catch (...) {
        std::lock_guard lock(sink_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard lock(sink_mutex);
      merge_into(buckets, std::move(local));
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  FactoredRational sum;
  std::size_t additions = 0;
  const std::size_t batch = std::max<std::size_t>(options.reduce_batch, 1);
  for (auto& [den, num] : buckets) {
    if (num.is_zero()) continue;
    sum = add(sum, FactoredRational(std::move(num), den));
    if (++additions % batch == 0) sum = reduce(sum);
  }
  return reduce(sum);
}

bool LabeledGraph::is_connected() const {
  if (n_vertices <= 1) return true;
  std::vector<unsigned> parent(n_vertices + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<unsigned(unsigned)> root = [&](unsigned v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
  unsigned components = n_vertices;
  for (auto [u, v] : edges) {
    unsigned ru = root(u), rv = root(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components == 1;
}

Integer connected_graph_signsum(unsigned n) {
  if (n < 1 || n > 6) throw std::out_of_range("connected_graph_signsum supports 1 <= n <= 6");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  Integer total = 0;
  const unsigned long subsets = 1ul << pairs.size();
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    LabeledGraph g{n, {}};
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) g.edges.push_back(pairs[e]);
    if (!g.is_connected()) continue;
    total += g.edges.size() % 2 == 0 ? 1 : -1;
  }
  return total;
}

std::vector<Rational> egf_log_coefficients(unsigned n_max, const Rational& y) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  // Ordinary coefficients of E(t) = sum_i (1+y)^C(i,2) t^i / i!.
  std::vector<Rational> e(n_max + 1);
  const Rational base = 1 + y;
  Integer factorial = 1;
  for (unsigned i = 0; i <= n_max; ++i) {
    if (i > 0) factorial *= i;
    const unsigned long pairs = static_cast<unsigned long>(i) * (i > 0 ? i - 1 : 0) / 2;
    Rational power;
    mpz_pow_ui(power.get_num_mpz_t(), base.get_num_mpz_t(), pairs);
    mpz_pow_ui(power.get_den_mpz_t(), base.get_den_mpz_t(), pairs);
    e[i] = power / Rational(factorial);
  }
  // L = log E with E_0 = 1:  n L_n = n E_n - sum_{k=1}^{n-1} k L_k E_{n-k}.
  std::vector<Rational> log(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    Rational acc = Rational(n) * e[n];
    for (unsigned k = 1; k < n; ++k) acc -= Rational(k) * log[k] * e[n - k];
    log[n] = acc / n;
  }
  std::vector<Rational> out(n_max + 1);
  factorial = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    factorial *= n;
    out[n] = log[n] * Rational(factorial);
  }
  return out;
}

}  // namespace dmp
