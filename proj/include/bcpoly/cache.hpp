#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace bcpoly {

/// Memo table with concurrent readers and serialized writers. Values are
/// computed outside the lock; when two threads race on one key the first
/// insertion wins and both callers see the same value.
template <class Key, class Value>
class MemoCache {
public:
  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(v));
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace bcpoly
