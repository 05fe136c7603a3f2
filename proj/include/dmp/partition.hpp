#pragma once

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "dmp/numeric.hpp"

namespace dmp {

/// A partition in frequency notation 1^{a_1} 2^{a_2} ... m^{a_m}.
///
/// The multiplicity vector always has length m (the largest allowed part),
/// with zeros for absent parts; total() is the partitioned integer.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> multiplicities);

  unsigned total() const noexcept { return total_; }
  unsigned max_part() const noexcept { return static_cast<unsigned>(mult_.size()); }

  // Multiplicity of `part`, for 1 <= part <= max_part().
  unsigned multiplicity(unsigned part) const { return mult_.at(part - 1); }
  std::span<const unsigned> multiplicities() const noexcept { return mult_; }

  // Parts in descending order, e.g. {4,4,2,2,2,2,2,1,1,1} for 1^3 2^5 4^2.
  std::vector<unsigned> parts() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend class PartitionEnumerator;

  std::vector<unsigned> mult_;
  unsigned total_ = 0;
};

/// The nonzero multiplicities of a partition, with repetition, ascending.
struct MultiplicityProfile {
  std::vector<unsigned> values;

  bool all_distinct() const noexcept;
};

MultiplicityProfile multiplicity_profile(const Partition& p);

bool has_distinct_multiplicities(const Partition& p);

/// Sorted set of positive integers that multiplicities must avoid.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  // Sorts and deduplicates. Throws std::invalid_argument on a zero element.
  ForbiddenSet(std::initializer_list<unsigned> elements);
  explicit ForbiddenSet(std::vector<unsigned> elements);

  bool contains(unsigned x) const noexcept;
  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  std::span<const unsigned> elements() const noexcept { return elems_; }

  ForbiddenSet with(unsigned x) const;
  // Drops every element greater than `bound`.
  ForbiddenSet restricted_to(unsigned bound) const;

  friend bool operator==(const ForbiddenSet&, const ForbiddenSet&) = default;
  friend auto operator<=>(const ForbiddenSet&, const ForbiddenSet&) = default;

 private:
  std::vector<unsigned> elems_;
};

/// Streams every partition of n with parts <= m, in descending lexicographic
/// order of the descending part sequence (m^k r first, 1^n last). Only the
/// current partition is held in memory.
class PartitionEnumerator {
 public:
  PartitionEnumerator(unsigned n, unsigned m);

  bool done() const noexcept { return done_; }
  const Partition& current() const noexcept { return current_; }
  void advance();

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PartitionEnumerator* owner) : owner_(owner) {}

    const Partition& operator*() const { return owner_->current(); }
    const Partition* operator->() const { return &owner_->current(); }
    iterator& operator++() {
      owner_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.owner_->done(); }

   private:
    PartitionEnumerator* owner_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  Partition current_;
  bool done_ = false;
};

inline PartitionEnumerator enumerate_partitions(unsigned n, unsigned m) { return {n, m}; }

/// Exhaustive count of partitions of n with parts <= m whose nonzero
/// multiplicities are pairwise distinct and avoid `forbidden`.
Integer brute_force_count(unsigned n, unsigned m, const ForbiddenSet& forbidden = {});

}  // namespace dmp
