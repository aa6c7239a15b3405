#pragma once

#include <functional>
#include <future>
#include <map>
#include <mutex>

namespace discstrat {

/// Process-wide memo table. The first caller for a key computes the value
/// outside the lock; concurrent callers for the same key wait on its result.
template <class Key, class Value>
class KeyedCache {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    std::shared_future<Value> future;
    std::promise<Value> promise;
    bool owner = false;
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it == entries_.end()) {
        future = promise.get_future().share();
        entries_.emplace(key, future);
        owner = true;
      } else {
        future = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(compute());
      } catch (...) {
        promise.set_exception(std::current_exception());
        std::lock_guard lock(mutex_);
        entries_.erase(key);
        throw;
      }
    }
    // The map keeps its shared state alive, so the reference stays valid.
    return lookup(key, future);
  }

 private:
  const Value& lookup(const Key& key, const std::shared_future<Value>& fallback) {
    const std::shared_future<Value>* stored = nullptr;
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      stored = it == entries_.end() ? &fallback : &it->second;
    }
    return stored->get();
  }

  std::mutex mutex_;
  std::map<Key, std::shared_future<Value>> entries_;
};

}  // namespace discstrat
