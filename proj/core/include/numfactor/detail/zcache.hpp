#pragma once

#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace numfactor {
class FactorizationSet;
}

namespace numfactor::detail {

// LRU cache from element to its factorization set, shared by all copies of
// one monoid. Internally synchronized; catenary/tame scans hit the same
// elements from several worker threads.
class ZCache {
 public:
  explicit ZCache(std::size_t capacity) : capacity_(capacity) {}

  std::shared_ptr<const FactorizationSet> get(std::int64_t n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = index_.find(n);
    if (it == index_.end()) return nullptr;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void put(std::int64_t n, std::shared_ptr<const FactorizationSet> value) const {
    if (capacity_ == 0) return;
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = index_.find(n);
    if (it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(n, std::move(value));
    index_[n] = order_.begin();
    while (index_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  std::size_t capacity() const { return capacity_; }

 private:
  using Entry = std::pair<std::int64_t, std::shared_ptr<const FactorizationSet>>;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  mutable std::list<Entry> order_;  // front = most recently used
  mutable std::unordered_map<std::int64_t, std::list<Entry>::iterator> index_;
};

}  // namespace numfactor::detail
