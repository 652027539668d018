#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace invpath {

/// Half-open index range of shard `index` when [0, total) is cut into
/// `shards` contiguous pieces whose sizes differ by at most one.
inline std::pair<uint64_t, uint64_t> shard_range(uint64_t total, unsigned shards, unsigned index) {
  const uint64_t base = total / shards;
  const uint64_t extra = total % shards;
  const uint64_t begin = index * base + std::min<uint64_t>(index, extra);
  return {begin, begin + base + (index < extra ? 1 : 0)};
}

inline unsigned default_shards() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs fn(begin, end) on every shard concurrently and folds the partial
/// results with operator+ in shard order.
template <typename T, typename Fn>
T sharded_reduce(uint64_t total, unsigned shards, Fn&& fn) {
  if (shards == 0) shards = default_shards();
  std::vector<T> partial(shards);
  if (shards == 1) {
    partial[0] = fn(uint64_t{0}, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
      pool.emplace_back([&, s] {
        auto [b, e] = shard_range(total, shards, s);
        partial[s] = fn(b, e);
      });
    }
    for (auto& t : pool) t.join();
  }
  T acc = std::move(partial[0]);
  for (unsigned s = 1; s < shards; ++s) acc = acc + partial[s];
  return acc;
}

}  // namespace invpath
