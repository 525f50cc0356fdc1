#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "combinat.hpp"

namespace symchar {

/// Irreducible characters chi_lambda(mu) of S_n. Rows and columns are indexed
/// by the partitions of n in reverse lexicographic order.
class CharacterTable {
public:
    CharacterTable() = default;

    CharacterTable(int n, std::vector<std::vector<std::int64_t>> values)
        : n_(n), partitions_(partitions_of(n)), values_(std::move(values))
    {
        if (values_.size() != partitions_.size())
            throw std::invalid_argument("character table has wrong number of rows");
        for (const auto& row : values_)
            if (row.size() != partitions_.size())
                throw std::invalid_argument("character table has wrong number of columns");
        build_index();
    }

    int n() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    const std::vector<std::vector<std::int64_t>>& values() const& noexcept { return values_; }
    std::vector<std::vector<std::int64_t>> values() && noexcept { return std::move(values_); }

    std::size_t index_of(const Partition& p) const
    {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::out_of_range("partition " + p.to_string() + " not of size n");
        return it->second;
    }

    std::int64_t operator()(std::size_t lambda, std::size_t mu) const { return values_[lambda][mu]; }
    std::int64_t operator()(const Partition& lambda, const Partition& mu) const
    {
        return values_[index_of(lambda)][index_of(mu)];
    }

    friend bool operator==(const CharacterTable& a, const CharacterTable& b)
    {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    void build_index()
    {
        for (std::size_t i = 0; i < partitions_.size(); ++i) index_[partitions_[i]] = i;
    }

    int n_ = 0;
    std::vector<Partition> partitions_;
    std::vector<std::vector<std::int64_t>> values_;
    std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

namespace detail {

// Murnaghan-Nakayama on beta-sets. A partition lambda with l parts is encoded
// by the strictly decreasing positions lambda_i + (l - i); removing a border
// strip of size k moves one bead from b to b - k, with sign (-1)^(beads jumped).
class MurnaghanNakayama {
public:
    std::int64_t chi(const Partition& lambda, const Partition& mu)
    {
        return eval(lambda.parts(), mu.parts(), 0);
    }

private:
    std::int64_t eval(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos)
    {
        if (pos == mu.size()) return lambda.empty() ? 1 : 0;
        Key key{lambda, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(pos), mu.end())};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int k = mu[pos];
        const int l = static_cast<int>(lambda.size());
        std::vector<int> beads(lambda.size());
        for (int i = 0; i < l; ++i) beads[i] = lambda[i] + (l - 1 - i);

        std::int64_t total = 0;
        for (int i = 0; i < l; ++i) {
            int target = beads[i] - k;
            if (target < 0) continue;
            bool occupied = false;
            int jumped = 0;
            for (int j = i + 1; j < l; ++j) {
                if (beads[j] == target) {
                    occupied = true;
                    break;
                }
                if (beads[j] > target) ++jumped;
            }
            if (occupied) continue;
            std::vector<int> nb = beads;
            nb[i] = target;
            std::sort(nb.begin(), nb.end(), std::greater<>());
            std::vector<int> next;
            for (int j = 0; j < l; ++j) {
                int part = nb[j] - (l - 1 - j);
                if (part > 0) next.push_back(part);
            }
            std::int64_t sub = eval(next, mu, pos + 1);
            total += (jumped % 2 ? -sub : sub);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Key, std::int64_t> memo_;
};

} // namespace detail

/// Build the character table of S_n by the Murnaghan-Nakayama rule.
inline CharacterTable compute_character_table(int n)
{
    if (n < 0) throw std::invalid_argument("character_table: n must be nonnegative");
    auto parts = partitions_of(n);
    detail::MurnaghanNakayama mn;
    std::vector<std::vector<std::int64_t>> values(parts.size(), std::vector<std::int64_t>(parts.size()));
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = 0; b < parts.size(); ++b) values[a][b] = mn.chi(parts[a], parts[b]);
    return CharacterTable(n, std::move(values));
}

/// Optional persistent backend for character tables.
struct TableBackend {
    std::function<std::optional<CharacterTable>(int)> load;
    std::function<void(const CharacterTable&)> store;
};

struct TableStats {
    long hits = 0;        // tables served from the persistent backend
    long builds = 0;      // tables built by Murnaghan-Nakayama
    double build_ms = 0;  // time spent obtaining tables (build or load)
};

/// Process-wide store of character tables: in-memory memo in front of an
/// optional persistent backend. Safe for concurrent readers.
class CharacterTableStore {
public:
    static CharacterTableStore& instance()
    {
        static CharacterTableStore store;
        return store;
    }

    std::shared_ptr<const CharacterTable> get(int n)
    {
        std::lock_guard lock(mutex_);
        if (auto it = tables_.find(n); it != tables_.end()) return it->second;
        auto t0 = std::chrono::steady_clock::now();
        std::shared_ptr<const CharacterTable> table;
        if (backend_.load) {
            if (auto loaded = backend_.load(n)) {
                table = std::make_shared<const CharacterTable>(std::move(*loaded));
                ++stats_.hits;
            }
        }
        if (!table) {
            table = std::make_shared<const CharacterTable>(compute_character_table(n));
            ++stats_.builds;
            if (backend_.store) backend_.store(*table);
        }
        stats_.build_ms +=
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        tables_.emplace(n, table);
        return table;
    }

    void set_backend(TableBackend backend)
    {
        std::lock_guard lock(mutex_);
        backend_ = std::move(backend);
    }

    // Drops the in-memory tables and statistics; the backend stays installed.
    void clear()
    {
        std::lock_guard lock(mutex_);
        tables_.clear();
        stats_ = {};
    }

    TableStats stats() const
    {
        std::lock_guard lock(mutex_);
        return stats_;
    }

private:
    CharacterTableStore() = default;

    mutable std::mutex mutex_;
    std::map<int, std::shared_ptr<const CharacterTable>> tables_;
    TableBackend backend_;
    TableStats stats_;
};

inline std::shared_ptr<const CharacterTable> character_table(int n)
{
    if (n < 1) throw std::invalid_argument("character_table: n must be positive");
    return CharacterTableStore::instance().get(n);
}

} // namespace symchar
