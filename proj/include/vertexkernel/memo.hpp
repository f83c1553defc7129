// Thread-safe insert-only memo table. References returned by lookup/insert
// stay valid for the table's lifetime (node-based storage, no erasure).

#ifndef VERTEXKERNEL_MEMO_HPP
#define VERTEXKERNEL_MEMO_HPP

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace vk
{

inline void hash_combine(std::size_t &seed, std::size_t v)
{
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <typename K, typename V, typename Hash>
class Memo
{
public:
    const V *lookup(const K &key) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : &it->second;
    }

    /// Keeps the first value stored under key.
    const V &insert(K key, V value)
    {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(std::move(key), std::move(value));
        return it->second;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<K, V, Hash> table_;
};

} // namespace vk

#endif
