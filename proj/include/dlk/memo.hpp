#pragma once

#include <map>
#include <mutex>
#include <optional>

namespace dlk {

// Mutex-guarded memo table. Values are computed outside the lock; when two
// threads race on the same key the first insertion wins and both observe it.
template <class Key, class Value>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  Value insert(const Key& key, Value value) {
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    if (auto hit = find(key)) return *hit;
    return insert(key, compute());
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace dlk
