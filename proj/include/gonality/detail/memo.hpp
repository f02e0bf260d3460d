#ifndef GONALITY_DETAIL_MEMO_HPP
#define GONALITY_DETAIL_MEMO_HPP

#include <map>
#include <mutex>
#include <shared_mutex>

namespace gonality::detail {

/*
 * Read-mostly memo table. Concurrent fills of the same key are idempotent:
 * the value is a pure function of the key, so whichever writer wins stores
 * the same thing.
 */
template <typename Key, typename Value>
class ConcurrentMemo
{
  public:
    template <typename Compute>
    Value get(Key const & key, Compute && compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

  private:
    std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace gonality::detail

#endif
