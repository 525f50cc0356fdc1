#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symchar {

using Integer = mpz_class;
using Rational = mpq_class;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Partitions are value types ordered lexicographically on their parts. The
/// canonical enumeration order used everywhere in the library is the reverse of
/// that order, so (3) comes before (2,1) before (1,1,1).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
            n_ += parts_[i];
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts and drops zero entries.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const& noexcept { return parts_; }
    std::vector<int> parts() && noexcept { return std::move(parts_); }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Multiply every part by k.
    Partition scaled(int k) const
    {
        Partition r = *this;
        for (int& p : r.parts_) p *= k;
        r.n_ *= k;
        return r;
    }

    /// Multiset union of the parts (the partition of the product p_a p_b).
    friend Partition merge(const Partition& a, const Partition& b)
    {
        Partition r;
        r.parts_.resize(a.parts_.size() + b.parts_.size());
        std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                   r.parts_.begin(), std::greater<>());
        r.n_ = a.n_ + b.n_;
        return r;
    }

    /// The conjugate partition.
    Partition conjugate() const
    {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.assign(parts_[0], 0);
            for (int p : parts_)
                for (int i = 0; i < p; ++i) ++c[i];
        }
        return Partition(std::move(c));
    }

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Comparator giving the canonical (reverse lexicographic) order.
struct RevLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : p) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Exponential notation (1^{m_1} 2^{m_2} ...) of a partition.
class ExponentialForm {
public:
    ExponentialForm() = default;

    explicit ExponentialForm(const Partition& p)
    {
        for (int x : p) ++mult_[x];
    }

    explicit ExponentialForm(std::map<int, int> multiplicities)
    {
        for (auto [j, m] : multiplicities) {
            if (j <= 0 || m < 0) throw std::invalid_argument("invalid exponential form");
            if (m > 0) mult_[j] = m;
        }
    }

    /// Nonzero multiplicities, keyed by part size.
    const std::map<int, int>& multiplicities() const& noexcept { return mult_; }
    std::map<int, int> multiplicities() && noexcept { return std::move(mult_); }

    int multiplicity(int j) const
    {
        auto it = mult_.find(j);
        return it == mult_.end() ? 0 : it->second;
    }

    /// l(lambda): number of parts.
    int length() const
    {
        int l = 0;
        for (auto [j, m] : mult_) l += m;
        return l;
    }

    /// c_lambda: number of distinct part sizes.
    int support_count() const noexcept { return static_cast<int>(mult_.size()); }

    int size() const
    {
        int n = 0;
        for (auto [j, m] : mult_) n += j * m;
        return n;
    }

    Partition to_partition() const
    {
        std::vector<int> parts;
        for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
            parts.insert(parts.end(), it->second, it->first);
        return Partition(std::move(parts));
    }

private:
    std::map<int, int> mult_;
};

/// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Standard successor algorithm on the reverse-lex order.
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        // Find rightmost part > 1.
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) break;
        int k = --a.back();
        int rest = ones + 1;
        while (rest > 0) {
            int take = std::min(k, rest);
            a.push_back(take);
            rest -= take;
        }
    }
    return out;
}

inline Integer factorial(int n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Centralizer order z_lambda = prod_j j^{m_j} m_j!.
inline Integer z_of(const Partition& lambda)
{
    Integer z = 1;
    for (auto [j, m] : ExponentialForm(lambda).multiplicities()) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m));
        z *= pw * factorial(m);
    }
    return z;
}

inline int moebius(long d)
{
    if (d < 1) throw std::invalid_argument("moebius: d must be positive");
    int mu = 1;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            mu = -mu;
        }
    }
    if (d > 1) mu = -mu;
    return mu;
}

inline std::vector<long> divisors(long n)
{
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// A permutation of {0..n-1} of cycle type lambda, with cycles on consecutive
/// integers in decreasing part order: (3,2) gives (0 1 2)(3 4).
inline std::vector<int> class_representative(const Partition& lambda)
{
    std::vector<int> sigma(static_cast<std::size_t>(lambda.size()));
    int start = 0;
    for (int len : lambda) {
        for (int i = 0; i < len; ++i) sigma[start + i] = start + (i + 1) % len;
        start += len;
    }
    return sigma;
}

/// Cycle type of a permutation of {0..n-1}.
inline Partition cycle_type(const std::vector<int>& sigma)
{
    std::vector<bool> seen(sigma.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return Partition::from_unsorted(std::move(parts));
}

} // namespace symchar
