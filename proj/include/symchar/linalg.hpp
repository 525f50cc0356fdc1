#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "combinat.hpp"

namespace symchar::linalg {

/// Sparse vector over Q: (column, value) pairs sorted by column, no zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

inline Rational coefficient(const SparseVector& v, int col)
{
    auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, int c) { return e.first < c; });
    return (it != v.end() && it->first == col) ? it->second : Rational(0);
}

/// Sorts by column, merges duplicates, drops zeros.
inline SparseVector canonicalize(std::vector<std::pair<int, Rational>> entries)
{
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& [c, v] : entries) {
        if (!out.empty() && out.back().first == c)
            out.back().second += v;
        else
            out.emplace_back(c, std::move(v));
        if (out.back().second == 0) out.pop_back();
    }
    return out;
}

/// Row echelon basis of a subspace of Q^ncols. Rows are keyed by pivot column
/// and scaled so the pivot entry is 1; `make_reduced` turns the basis into
/// reduced row echelon form (each row vanishes on every other pivot).
class EchelonBasis {
public:
    EchelonBasis() = default;
    explicit EchelonBasis(int ncols) : ncols_(ncols) {}

    int ncols() const noexcept { return ncols_; }
    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVector>& rows() const noexcept { return rows_; }
    bool is_reduced() const noexcept { return reduced_; }

    /// Remainder of v after eliminating every pivot column.
    SparseVector reduce(const SparseVector& v) const { return reduce_except(v, -1); }

    /// Adds v to the span. Returns true when the rank grows.
    bool insert(const SparseVector& v)
    {
        SparseVector r = reduce(v);
        if (r.empty()) return false;
        Rational lead = r.front().second;
        if (lead != 1)
            for (auto& [c, x] : r) x /= lead;
        int pivot = r.front().first;
        rows_.emplace(pivot, std::move(r));
        reduced_ = rows_.size() <= 1;
        return true;
    }

    void make_reduced()
    {
        if (reduced_) return;
        // Back-substitute from the last pivot upward.
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            const int pivot = it->first;
            SparseVector tail(it->second.begin() + 1, it->second.end());
            SparseVector reduced_tail = reduce_except(tail, pivot);
            SparseVector row{{pivot, Rational(1)}};
            row.insert(row.end(), reduced_tail.begin(), reduced_tail.end());
            it->second = std::move(row);
        }
        reduced_ = true;
    }

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

private:
    // Like reduce, but only against pivots strictly greater than `above`.
    SparseVector reduce_except(const SparseVector& v, int above) const
    {
        std::map<int, Rational> work;
        for (const auto& [c, x] : v) work.emplace(c, x);
        auto it = work.upper_bound(above);
        while (it != work.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            Rational factor = it->second;
            int col = it->first;
            for (const auto& [c, x] : row->second) {
                auto [slot, inserted] = work.try_emplace(c, 0);
                slot->second -= factor * x;
                if (slot->second == 0 && c != col) work.erase(slot);
            }
            work.erase(col);
            it = work.upper_bound(col);
        }
        return SparseVector(work.begin(), work.end());
    }

    int ncols_ = 0;
    std::map<int, SparseVector> rows_;
    bool reduced_ = true;
};

} // namespace symchar::linalg
