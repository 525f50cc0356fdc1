#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "combinat.hpp"
#include "error.hpp"

namespace symchar {

/// Formal power series in q with exact rational coefficients, known modulo q^D.
///
/// D is the truncation order: coefficients of q^D and above are unknown. An
/// order of `kExact` marks an exact polynomial. Binary operations take the
/// minimum of the operands' orders, so mixing a polynomial with a truncated
/// series yields a truncated series. Trailing zero coefficients are trimmed.
class QSeries {
public:
    static constexpr int kExact = INT_MAX;

    QSeries() = default;
    QSeries(int c) : QSeries(Rational(c)) {}
    QSeries(const Rational& c)
    {
        if (c != 0) coeffs_.push_back(c);
    }

    static QSeries from_coeffs(std::vector<Rational> coeffs, int order = kExact)
    {
        QSeries s;
        s.coeffs_ = std::move(coeffs);
        s.order_ = order;
        s.normalize();
        return s;
    }

    /// c q^k
    static QSeries monomial(const Rational& c, int k, int order = kExact)
    {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v[static_cast<std::size_t>(k)] = c;
        return from_coeffs(std::move(v), order);
    }

    int order() const noexcept { return order_; }
    bool is_exact() const noexcept { return order_ == kExact; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Highest power with a nonzero known coefficient, or -1 for zero.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Lowest power with a nonzero coefficient, or -1 for zero.
    int valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    const std::vector<Rational>& coeffs() const& noexcept { return coeffs_; }
    std::vector<Rational> coeffs() && noexcept { return std::move(coeffs_); }

    Rational operator[](int i) const
    {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    QSeries truncated(int order) const
    {
        QSeries r = *this;
        r.order_ = std::min(order_, order);
        r.normalize();
        return r;
    }

    QSeries with_order(int order) const { return truncated(order); }

    QSeries& operator+=(const QSeries& o)
    {
        order_ = std::min(order_, o.order_);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    QSeries& operator-=(const QSeries& o)
    {
        order_ = std::min(order_, o.order_);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    QSeries& operator*=(const Rational& c)
    {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    QSeries& operator*=(const QSeries& o)
    {
        *this = *this * o;
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

    friend QSeries operator-(QSeries a)
    {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b)
    {
        QSeries r;
        r.order_ = std::min(a.order_, b.order_);
        if (a.is_zero() || b.is_zero()) return r;
        std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (r.order_ != kExact) len = std::min(len, static_cast<std::size_t>(r.order_));
        r.coeffs_.assign(len, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.normalize();
        return r;
    }

    /// q^k times this series. The truncation order is kept, so the shift can only
    /// drop coefficients, matching multiplication by the exact monomial q^k.
    QSeries shifted(int k) const
    {
        QSeries r;
        r.order_ = order_;
        if (is_zero()) return r;
        r.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
        r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        r.normalize();
        return r;
    }

    /// Structural equality: same coefficients and same truncation order.
    friend bool operator==(const QSeries& a, const QSeries& b)
    {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Equality of the coefficients both series know, i.e. below the minimum order.
    friend bool equal_up_to_truncation(const QSeries& a, const QSeries& b)
    {
        int d = std::min(a.order_, b.order_);
        int top = std::max(a.degree(), b.degree());
        for (int i = 0; i <= top && i < d; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeffs_[i].get_str() + ")";
            if (i > 0) s += "q^" + std::to_string(i);
        }
        if (s.empty()) s = "0";
        if (!is_exact()) s += " + O(q^" + std::to_string(order_) + ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.to_string(); }

private:
    void normalize()
    {
        if (order_ != kExact && coeffs_.size() > static_cast<std::size_t>(std::max(order_, 0)))
            coeffs_.resize(static_cast<std::size_t>(std::max(order_, 0)));
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
    int order_ = kExact;
};

inline QSeries q_power(int k, int order = QSeries::kExact) { return QSeries::monomial(1, k, order); }

/// 1 - q^k
inline QSeries one_minus_q_power(int k = 1)
{
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v[0] = 1;
    v[static_cast<std::size_t>(k)] -= 1;
    return QSeries::from_coeffs(std::move(v));
}

/// 1/(1-q) modulo q^order.
inline QSeries geometric_series(int order)
{
    return QSeries::from_coeffs(std::vector<Rational>(static_cast<std::size_t>(order), Rational(1)), order);
}

/// Multiplicative inverse. A truncated input keeps its order; an exact input
/// needs an explicit order unless it is a nonzero constant.
inline QSeries qs_invert(const QSeries& a, int order = QSeries::kExact)
{
    if (a[0] == 0) throw ZeroConstantTerm();
    int d = std::min(a.order(), order);
    if (d == QSeries::kExact) {
        if (a.degree() == 0) return QSeries(Rational(1) / a[0]);
        throw NotPolynomial("inverse of a non-constant polynomial needs a truncation order");
    }
    std::vector<Rational> b(static_cast<std::size_t>(d));
    Rational inv0 = Rational(1) / a[0];
    for (int i = 0; i < d; ++i) {
        Rational acc = i == 0 ? Rational(1) : Rational(0);
        for (int j = 1; j <= i && j <= a.degree(); ++j) acc -= a[j] * b[static_cast<std::size_t>(i - j)];
        b[static_cast<std::size_t>(i)] = acc * inv0;
    }
    return QSeries::from_coeffs(std::move(b), d);
}

struct NegateQ {};
struct PowerQ {
    int k;
};
using Substitution = std::variant<NegateQ, PowerQ>;

/// q -> -q
inline QSeries qs_negate_q(const QSeries& a)
{
    std::vector<Rational> v = a.coeffs();
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return QSeries::from_coeffs(std::move(v), a.order());
}

/// q -> q^k, keeping the truncation order.
inline QSeries qs_power_q(const QSeries& a, int k)
{
    if (k < 1) throw std::invalid_argument("qs_power_q: k must be positive");
    if (k == 1 || a.is_zero()) return a;
    std::vector<Rational> v(static_cast<std::size_t>(a.degree()) * static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= a.degree(); ++i) v[static_cast<std::size_t>(i) * static_cast<std::size_t>(k)] = a[i];
    return QSeries::from_coeffs(std::move(v), a.order());
}

inline QSeries qs_substitute(const QSeries& a, const Substitution& mode)
{
    return std::visit(
        [&](const auto& m) -> QSeries {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, NegateQ>)
                return qs_negate_q(a);
            else
                return qs_power_q(a, m.k);
        },
        mode);
}

/// Certify that `a` is a polynomial of degree <= max_degree and return it as an
/// exact value. Every known coefficient above max_degree must vanish, and the
/// truncation order must exceed max_degree.
inline QSeries qs_exact_polynomial(const QSeries& a, int max_degree)
{
    if (!a.is_exact() && max_degree >= a.order())
        throw NotPolynomial("truncation order " + std::to_string(a.order()) +
                            " too small to certify degree <= " + std::to_string(max_degree));
    if (a.degree() > max_degree)
        throw NotPolynomial("nonzero coefficient of q^" + std::to_string(a.degree()) +
                            " above claimed degree " + std::to_string(max_degree));
    return QSeries::from_coeffs(a.coeffs(), QSeries::kExact);
}

} // namespace symchar
