#include "dmp/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmp {

Partition::Partition(std::vector<unsigned> multiplicities) : mult_(std::move(multiplicities)) {
  for (std::size_t j = 0; j < mult_.size(); ++j) total_ += static_cast<unsigned>(j + 1) * mult_[j];
}

std::vector<unsigned> Partition::parts() const {
  std::vector<unsigned> out;
  out.reserve(total_);
  for (std::size_t j = mult_.size(); j-- > 0;) out.insert(out.end(), mult_[j], static_cast<unsigned>(j + 1));
  return out;
}

bool MultiplicityProfile::all_distinct() const noexcept {
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

MultiplicityProfile multiplicity_profile(const Partition& p) {
  MultiplicityProfile profile;
  for (unsigned a : p.multiplicities())
    if (a > 0) profile.values.push_back(a);
  std::sort(profile.values.begin(), profile.values.end());
  return profile;
}

bool has_distinct_multiplicities(const Partition& p) { return multiplicity_profile(p).all_distinct(); }

ForbiddenSet::ForbiddenSet(std::initializer_list<unsigned> elements)
    : ForbiddenSet(std::vector<unsigned>(elements)) {}

ForbiddenSet::ForbiddenSet(std::vector<unsigned> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() == 0)
    throw std::invalid_argument("forbidden multiplicities must be positive");
}

bool ForbiddenSet::contains(unsigned x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

ForbiddenSet ForbiddenSet::with(unsigned x) const {
  if (x == 0) throw std::invalid_argument("forbidden multiplicities must be positive");
  ForbiddenSet out = *this;
  auto pos = std::lower_bound(out.elems_.begin(), out.elems_.end(), x);
  if (pos == out.elems_.end() || *pos != x) out.elems_.insert(pos, x);
  return out;
}

ForbiddenSet ForbiddenSet::restricted_to(unsigned bound) const {
  ForbiddenSet out;
  out.elems_.assign(elems_.begin(), std::upper_bound(elems_.begin(), elems_.end(), bound));
  return out;
}

PartitionEnumerator::PartitionEnumerator(unsigned n, unsigned m) {
  if (m == 0) throw std::invalid_argument("largest part bound must be positive");
  current_.mult_.assign(m, 0);
  current_.total_ = n;
  // Largest in the order: as many m's as fit, then the remainder as one part.
  current_.mult_[m - 1] = n / m;
  if (n % m != 0) current_.mult_[n % m - 1] += 1;
}

void PartitionEnumerator::advance() {
  if (done_) return;
  auto& a = current_.mult_;
  const unsigned m = current_.max_part();
  unsigned j = 2;
  while (j <= m && a[j - 1] == 0) ++j;
  if (j > m) {
    done_ = true;
    return;
  }
  // Break one copy of the smallest non-unit part j, together with all the
  // ones, into parts of size j-1 greedily.
  a[j - 1] -= 1;
  unsigned rest = j + a[0];
  a[0] = 0;
  const unsigned p = j - 1;
  a[p - 1] += rest / p;
  if (rest % p != 0) a[rest % p - 1] += 1;
}

Integer brute_force_count(unsigned n, unsigned m, const ForbiddenSet& forbidden) {
  Integer count = 0;
  for (const Partition& p : enumerate_partitions(n, m)) {
    if (!has_distinct_multiplicities(p)) continue;
    const auto mult = p.multiplicities();
    if (std::none_of(mult.begin(), mult.end(), [&](unsigned a) { return a > 0 && forbidden.contains(a); }))
      ++count;
  }
  return count;
}

}  // namespace dmp
