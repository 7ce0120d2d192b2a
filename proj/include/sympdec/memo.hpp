#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace sympdec {

/// Hash map guarded by a reader/writer lock. Insertion is first-wins, so
/// racing writers of the same (deterministic) value are harmless.
template <typename Key, typename Value, typename Hash>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(Key key, Value value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(std::move(key), std::move(value));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
};

}  // namespace sympdec
