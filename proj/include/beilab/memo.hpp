#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

#include "beilab/graph.hpp"

namespace beilab {

/// Size-capped LRU map guarded by a mutex; safe for concurrent readers and writers.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class LruCache {
 public:
  explicit LruCache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<Value> get(const Key& key) {
    std::lock_guard lock(mu_);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void put(const Key& key, Value value) {
    std::lock_guard lock(mu_);
    if (auto it = index_.find(key); it != index_.end()) {
      it->second->second = std::move(value);
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(key, std::move(value));
    index_.emplace(key, order_.begin());
    if (index_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return index_.size();
  }

  void clear() {
    std::lock_guard lock(mu_);
    index_.clear();
    order_.clear();
  }

 private:
  std::size_t capacity_;
  mutable std::mutex mu_;
  std::list<std::pair<Key, Value>> order_;
  std::unordered_map<Key, typename std::list<std::pair<Key, Value>>::iterator, Hash> index_;
};

/// reg(R/J_G) keyed by the canonical form of G with isolated vertices dropped
/// (free variables do not change the Betti numbers).
class RegularityMemo {
 public:
  explicit RegularityMemo(int prime = 2, std::size_t capacity = 1 << 20) : prime_(prime), cache_(capacity) {}

  int prime() const { return prime_; }
  int regularity(const Graph& g);
  std::size_t size() const { return cache_.size(); }

 private:
  int prime_;
  LruCache<Graph, int, GraphHash> cache_;
};

}  // namespace beilab
