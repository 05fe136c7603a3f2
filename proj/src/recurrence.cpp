#include "dmp/recurrence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "dmp/errors.hpp"

namespace dmp {

std::vector<Integer> partition_counts(unsigned n_max, unsigned m) {
  if (m == 0) throw std::invalid_argument("largest part bound must be positive");
  std::vector<Integer> row(n_max + 1, Integer(1));  // p_1(n) = 1
  std::vector<Integer> next(n_max + 1);
  for (unsigned j = 2; j <= m && j <= std::max(n_max, 1u); ++j) {
    for (unsigned n = 0; n <= n_max; ++n) {
      next[n] = row[n];
      for (unsigned i = 1; i * j <= n; ++i) next[n] += row[n - i * j];
    }
    row.swap(next);
  }
  return row;
}

Integer partition_count(unsigned n, unsigned m) { return partition_counts(n, m)[n]; }

MemoKey MemoKey::canonical(unsigned n, unsigned m, const ForbiddenSet& forbidden) {
  return MemoKey{n, std::min(m, std::max(n, 1u)), forbidden.restricted_to(n)};
}

std::string MemoKey::encode() const {
  // Elements never exceed n, so one byte each suffices below 256.
  const bool wide = n > 0xff;
  std::string key;
  key.reserve(4 + forbidden.size() * (wide ? 2 : 1));
  auto put16 = [&key](unsigned v) {
    key.push_back(static_cast<char>(v >> 8));
    key.push_back(static_cast<char>(v & 0xff));
  };
  put16(m);
  put16(n);
  for (unsigned x : forbidden.elements()) {
    if (wide) put16(x);
    else key.push_back(static_cast<char>(x));
  }
  return key;
}

std::optional<Integer> RestrictedCountMemo::find(std::string_view key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void RestrictedCountMemo::insert(std::string key, const Integer& value) {
  std::unique_lock lock(mutex_);
  if (table_.size() >= cap_ && !table_.contains(key))
    throw ResourceLimitError("memo table reached its cap of " + std::to_string(cap_) +
                             " entries; raise the cap or lower n");
  table_.try_emplace(std::move(key), value);
}

std::size_t RestrictedCountMemo::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

namespace {

// Counts that need no table: n = 0 or a single available part size.
std::optional<Integer> trivial_count(const MemoKey& key) {
  if (key.n == 0) return Integer(1);
  if (key.m == 1) return Integer(key.forbidden.contains(key.n) ? 0 : 1);
  return std::nullopt;
}

struct Frame {
  MemoKey key;
  std::string encoded;
  unsigned child = 0;  // copies of the largest part still to try
  Integer sum = 0;
};

}  // namespace

Integer restricted_count(unsigned n, unsigned m, const ForbiddenSet& forbidden, RestrictedCountMemo& memo) {
  if (m == 0) throw std::invalid_argument("largest part bound must be positive");
  MemoKey root = MemoKey::canonical(n, m, forbidden);
  if (auto v = trivial_count(root)) return *v;
  std::string root_encoded = root.encode();
  if (auto v = memo.find(root_encoded)) return *v;

  std::vector<Frame> stack;
  stack.push_back(Frame{std::move(root), std::move(root_encoded)});
  Integer result;

  while (!stack.empty()) {
    Frame& top = stack.back();
    const unsigned limit = top.key.n / top.key.m;
    bool descended = false;
    for (; top.child <= limit; ++top.child) {
      const unsigned i = top.child;
      if (i > 0 && top.key.forbidden.contains(i)) continue;
      MemoKey child = i == 0 ? MemoKey::canonical(top.key.n, top.key.m - 1, top.key.forbidden)
                             : MemoKey::canonical(top.key.n - i * top.key.m, top.key.m - 1, top.key.forbidden.with(i));
      if (auto v = trivial_count(child)) {
        top.sum += *v;
        continue;
      }
      std::string encoded = child.encode();
      if (auto v = memo.find(encoded)) {
        top.sum += *v;
        continue;
      }
      stack.push_back(Frame{std::move(child), std::move(encoded)});
      descended = true;
      break;
    }
    if (descended) continue;

    Frame finished = std::move(stack.back());
    stack.pop_back();
    memo.insert(finished.encoded, finished.sum);
    if (stack.empty()) {
      result = std::move(finished.sum);
    } else {
      stack.back().sum += finished.sum;
      ++stack.back().child;
    }
  }
  return result;
}

Integer restricted_count(unsigned n, unsigned m, const ForbiddenSet& forbidden) {
  RestrictedCountMemo memo;
  return restricted_count(n, m, forbidden, memo);
}

Integer distinct_multiplicity_count(unsigned n) { return restricted_count(n, std::max(n, 1u)); }

std::string_view to_string(Method method) {
  switch (method) {
    case Method::oracle: return "oracle";
    case Method::recurrence: return "recurrence";
    case Method::genfunc: return "genfunc";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "oracle") return Method::oracle;
  if (text == "recurrence") return Method::recurrence;
  if (text == "genfunc") return Method::genfunc;
  return std::nullopt;
}

TermTable distinct_multiplicity_terms(unsigned n_max, const TermOptions& options) {
  TermTable table;
  table.method = Method::recurrence;
  table.values.resize(n_max + 1);
  RestrictedCountMemo memo(options.memo_cap);

  const unsigned workers = std::max(1u, std::min(options.threads, n_max + 1));
  if (workers == 1) {
    for (unsigned n = 0; n <= n_max; ++n) table.values[n] = restricted_count(n, std::max(n, 1u), {}, memo);
    return table;
  }

  std::atomic<unsigned> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (unsigned n = next++; n <= n_max; n = next++)
        table.values[n] = restricted_count(n, std::max(n, 1u), {}, memo);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n_max + 1;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return table;
}

}  // namespace dmp
