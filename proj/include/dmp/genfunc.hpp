#pragma once

#include <cstddef>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "dmp/factored_rational.hpp"
#include "dmp/numeric.hpp"

namespace dmp {

inline constexpr unsigned kDefaultBellCap = 12;

/// A set partition of {1..m}: disjoint sorted blocks ordered by smallest element.
class SetPartition {
 public:
  SetPartition() = default;
  // Block of element i+1 is growth[i]; growth must be a restricted growth string.
  static SetPartition from_growth_string(std::span<const unsigned> growth);

  unsigned ground_size() const noexcept { return m_; }
  const std::vector<std::vector<unsigned>>& blocks() const noexcept { return blocks_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  unsigned m_ = 0;
  std::vector<std::vector<unsigned>> blocks_;
};

/// Streams the set partitions of {1..m} as restricted growth strings in
/// lexicographic order (all-in-one-block first, all singletons last).
class SetPartitionEnumerator {
 public:
  explicit SetPartitionEnumerator(unsigned m);

  bool done() const noexcept { return done_; }
  std::span<const unsigned> growth_string() const noexcept { return growth_; }
  const SetPartition& current() const noexcept { return current_; }
  void advance();

  class iterator {
   public:
    using value_type = SetPartition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(SetPartitionEnumerator* owner) : owner_(owner) {}

    const SetPartition& operator*() const { return owner_->current(); }
    const SetPartition* operator->() const { return &owner_->current(); }
    iterator& operator++() {
      owner_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.owner_->done(); }

   private:
    SetPartitionEnumerator* owner_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  std::vector<unsigned> growth_;
  std::vector<unsigned> prefix_max_;  // max of growth_[0..i]
  SetPartition current_;
  bool done_ = false;
};

inline SetPartitionEnumerator set_partitions(unsigned m) { return SetPartitionEnumerator(m); }

/// Weight of one block after x_i -> q^i:
///   {s}         -> 1 / (1 - q^s)
///   {s_1..s_d}  -> (-1)^(d-1) (d-1)! q^t / (1 - q^t),  t = s_1 + ... + s_d.
FactoredRational block_weight(std::span<const unsigned> block);

/// Product of block_weight over the blocks of `c`.
FactoredRational partition_weight(const SetPartition& c);

struct GeneratingFunctionOptions {
  unsigned bell_cap = kDefaultBellCap;
  unsigned threads = 1;
  // Cross-denominator additions between reductions of the running sum.
  std::size_t reduce_batch = 1000;
};

/// sum_n f_m(n) q^n as the reduced sum of partition_weight over all B_m set
/// partitions of {1..m}. Throws ResourceLimitError when m > bell_cap.
///
/// Weights are first summed per distinct denominator (a numerator addition),
/// then the buckets are folded together in ascending denominator order, so
/// the result is the same for every thread count.
FactoredRational distinct_multiplicity_gf(unsigned m, const GeneratingFunctionOptions& options = {});

/// Labeled simple graph on vertices 1..n_vertices.
struct LabeledGraph {
  unsigned n_vertices = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;

  bool is_connected() const;
};

/// sum over connected labeled graphs on n vertices of (-1)^{#edges}, by
/// exhaustive enumeration of all 2^(n(n-1)/2) edge sets. n must be in 1..6;
/// throws std::out_of_range otherwise.
Integer connected_graph_signsum(unsigned n);

/// Coefficients of t^n/n! in log(sum_i (1+y)^C(i,2) t^i/i!) for n = 1..n_max,
/// from a truncated power-series logarithm. Index 0 of the result is unused
/// (zero). At y = -1 these are (-1)^(n-1) (n-1)!; at y = 1 they count
/// connected labeled graphs.
std::vector<Rational> egf_log_coefficients(unsigned n_max, const Rational& y = -1);

}  // namespace dmp
