#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dmp/numeric.hpp"
#include "dmp/partition.hpp"

namespace dmp {

inline constexpr std::size_t kDefaultMemoCap = 50'000'000;

/// Number of partitions of n with every part <= m.
Integer partition_count(unsigned n, unsigned m);

/// partition_count(i, m) for i = 0..n_max, built row by row over m.
std::vector<Integer> partition_counts(unsigned n_max, unsigned m);

/// Canonical memo key for a subproblem (n, m, S). The part bound is clamped
/// to n and S is restricted to [1..n]; neither changes the count.
struct MemoKey {
  unsigned n = 0;
  unsigned m = 0;
  ForbiddenSet forbidden;

  static MemoKey canonical(unsigned n, unsigned m, const ForbiddenSet& forbidden);

  // Compact byte encoding used as the hash-table key.
  std::string encode() const;
};

/// Get-or-compute table for restricted counts. Lookups take a shared lock and
/// inserts an exclusive one, so a single table can back concurrent callers;
/// racing inserts of the same key store the same value.
class RestrictedCountMemo {
 public:
  explicit RestrictedCountMemo(std::size_t entry_cap = kDefaultMemoCap) : cap_(entry_cap) {}

  std::optional<Integer> find(std::string_view key) const;
  // Throws ResourceLimitError when the table is full.
  void insert(std::string key, const Integer& value);

  std::size_t size() const;
  std::size_t cap() const noexcept { return cap_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
  };

  std::size_t cap_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Integer, Hash, std::equal_to<>> table_;
};

/// Partitions of n with parts <= m, pairwise distinct nonzero multiplicities,
/// and no multiplicity in `forbidden`.
///
/// Evaluated with an explicit stack over
///   count(n, m, S) = count(n, m-1, S) + sum_{1 <= i <= n/m, i not in S} count(n - i*m, m-1, S + {i}),
/// so the call depth stays constant however large m is.
Integer restricted_count(unsigned n, unsigned m, const ForbiddenSet& forbidden, RestrictedCountMemo& memo);
Integer restricted_count(unsigned n, unsigned m, const ForbiddenSet& forbidden = {});

/// Number of partitions of n whose nonzero multiplicities are all different.
Integer distinct_multiplicity_count(unsigned n);

enum class Method { oracle, recurrence, genfunc };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

/// values[i] is the count for n = i; `method` records which route produced it.
struct TermTable {
  std::vector<Integer> values;
  Method method = Method::recurrence;
};

struct TermOptions {
  std::size_t memo_cap = kDefaultMemoCap;
  unsigned threads = 1;
};

/// distinct_multiplicity_count(i) for i = 0..n_max with one memo shared across
/// the whole table. With threads > 1 the indices are spread over workers that
/// share the memo; the values do not depend on the thread count.
TermTable distinct_multiplicity_terms(unsigned n_max, const TermOptions& options = {});

}  // namespace dmp
