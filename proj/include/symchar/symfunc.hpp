#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "character_table.hpp"
#include "combinat.hpp"
#include "error.hpp"
#include "qseries.hpp"

namespace symchar {

enum class Basis { m, e, h, p, s };

inline std::string_view basis_name(Basis b)
{
    switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
    }
    return "?";
}

inline std::optional<Basis> parse_basis(std::string_view name)
{
    for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s})
        if (basis_name(b) == name) return b;
    return std::nullopt;
}

/// Homogeneous symmetric function of degree n with q-series coefficients,
/// stored sparsely in one of the classical bases.
///
/// All coefficients share the function's truncation order; zero coefficients
/// are never stored.
class SymFunc {
public:
    using Terms = std::map<Partition, QSeries, RevLex>;

    SymFunc() = default;
    explicit SymFunc(int degree, Basis basis = Basis::p, int order = QSeries::kExact)
        : degree_(degree), basis_(basis), order_(order)
    {
        if (degree < 0) throw std::invalid_argument("SymFunc: negative degree");
    }

    /// coeff * b_lambda
    static SymFunc term(Basis basis, const Partition& lambda, const QSeries& coeff = QSeries(1))
    {
        SymFunc f(lambda.size(), basis);
        f.add(lambda, coeff);
        return f;
    }

    /// The unit: the empty partition in degree 0.
    static SymFunc one() { return term(Basis::p, Partition{}); }

    int degree() const noexcept { return degree_; }
    Basis basis() const noexcept { return basis_; }
    int order() const noexcept { return order_; }
    bool is_exact() const noexcept { return order_ == QSeries::kExact; }
    const Terms& terms() const& noexcept { return terms_; }
    Terms terms() && noexcept { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }

    QSeries coefficient(const Partition& lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? QSeries().truncated(order_) : it->second;
    }

    void add(const Partition& lambda, const QSeries& c)
    {
        if (lambda.size() != degree_)
            throw DegreeMismatch("partition " + lambda.to_string() + " does not have size " +
                                 std::to_string(degree_));
        if (c.order() < order_) lower_order(c.order());
        auto [it, inserted] = terms_.try_emplace(lambda, c.truncated(order_));
        if (!inserted) it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    void add(const Partition& lambda, const QSeries& c, const Rational& scale)
    {
        if (scale != 0) add(lambda, c * scale);
    }

    SymFunc truncated(int order) const
    {
        SymFunc r = *this;
        if (order < r.order_) r.lower_order(order);
        return r;
    }

    /// Apply a q-substitution to every coefficient (q -> -q gives ch').
    SymFunc substituted(const Substitution& mode) const
    {
        SymFunc r(degree_, basis_, order_);
        for (const auto& [lambda, c] : terms_) r.add(lambda, qs_substitute(c, mode));
        return r;
    }

    /// The same coefficients relabelled into another basis. Only meaningful in degree 0.
    SymFunc relabelled(Basis b) const
    {
        SymFunc r = *this;
        r.basis_ = b;
        return r;
    }

    /// Coefficient of q^k as a q-free symmetric function.
    SymFunc q_coefficient(int k) const
    {
        SymFunc r(degree_, basis_);
        for (const auto& [lambda, c] : terms_)
            if (c[k] != 0) r.add(lambda, QSeries(c[k]));
        return r;
    }

    /// Highest q-power with a nonzero coefficient, -1 for zero.
    int q_degree() const
    {
        int d = -1;
        for (const auto& [lambda, c] : terms_) d = std::max(d, c.degree());
        return d;
    }

    void lower_order(int order)
    {
        order_ = std::min(order_, order);
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = it->second.truncated(order_);
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
    }

private:
    int degree_ = 0;
    Basis basis_ = Basis::p;
    int order_ = QSeries::kExact;
    Terms terms_;
};

namespace detail {

// Sparse row: (column index, value)
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct DegreeIndex {
    std::vector<Partition> parts;
    std::unordered_map<Partition, std::size_t, PartitionHash> index;
    std::vector<Integer> z;
};

// Scalar p-expansion used while building transition data.
using PExpansion = std::map<Partition, Rational, RevLex>;

inline PExpansion pexp_product(const PExpansion& a, const PExpansion& b)
{
    PExpansion r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            auto& slot = r[merge(la, lb)];
            slot += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

// Transition data for one degree.
//   rows_h[l] : h_lambda in the p-basis (lower triangular in reverse-lex index)
//   rows_e[l] : e_lambda in the p-basis
//   m_of_p[l][mu] : coefficient of m_mu in p_lambda (dense, upper triangular)
struct Transition {
    DegreeIndex idx;
    std::vector<SparseRow> rows_h;
    std::vector<SparseRow> rows_e;
    std::vector<std::vector<Integer>> m_of_p;
};

// Number of ways to distribute the parts of lambda into slots of sizes mu.
inline Integer count_fillings(const std::vector<int>& lambda, std::size_t i, std::vector<int> caps,
                              std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo)
{
    if (i == lambda.size()) {
        for (int c : caps)
            if (c != 0) return 0;
        return 1;
    }
    std::vector<int> key_caps = caps;
    std::sort(key_caps.begin(), key_caps.end());
    auto key = std::make_pair(i, key_caps);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        if (caps[j] >= lambda[i]) {
            caps[j] -= lambda[i];
            total += count_fillings(lambda, i + 1, caps, memo);
            caps[j] += lambda[i];
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

class TransitionCache {
public:
    static TransitionCache& instance()
    {
        static TransitionCache c;
        return c;
    }

    std::shared_ptr<const Transition> get(int n)
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(n); it != cache_.end()) return it->second;
        auto t = std::make_shared<const Transition>(build(n));
        cache_.emplace(n, t);
        return t;
    }

private:
    static Transition build(int n)
    {
        Transition t;
        t.idx.parts = partitions_of(n);
        for (std::size_t i = 0; i < t.idx.parts.size(); ++i) {
            t.idx.index[t.idx.parts[i]] = i;
            t.idx.z.push_back(z_of(t.idx.parts[i]));
        }
        // h_k and e_k for k <= n.
        std::vector<PExpansion> hk(static_cast<std::size_t>(n) + 1), ek(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            for (const auto& mu : partitions_of(k)) {
                Rational c(1, 1);
                c /= Rational(z_of(mu));
                hk[static_cast<std::size_t>(k)][mu] = c;
                ek[static_cast<std::size_t>(k)][mu] = ((k - mu.length()) % 2 ? -c : c);
            }
        }
        auto build_rows = [&](const std::vector<PExpansion>& gens) {
            std::vector<SparseRow> rows;
            for (const auto& lambda : t.idx.parts) {
                PExpansion acc{{Partition{}, Rational(1)}};
                for (int part : lambda) acc = pexp_product(acc, gens[static_cast<std::size_t>(part)]);
                SparseRow row;
                for (const auto& [mu, c] : acc) row.emplace_back(t.idx.index.at(mu), c);
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                rows.push_back(std::move(row));
            }
            return rows;
        };
        t.rows_h = build_rows(hk);
        t.rows_e = build_rows(ek);
        return t;
    }

public:
    std::shared_ptr<const std::vector<std::vector<Integer>>> monomial_matrix(int n)
    {
        std::lock_guard lock(mutex_);
        if (auto it = mcache_.find(n); it != mcache_.end()) return it->second;
        auto parts = partitions_of(n);
        std::vector<std::vector<Integer>> m(parts.size(), std::vector<Integer>(parts.size()));
        for (std::size_t a = 0; a < parts.size(); ++a) {
            std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
            for (std::size_t b = 0; b < parts.size(); ++b) {
                memo.clear();
                m[a][b] = count_fillings(parts[a].parts(), 0, parts[b].parts(), memo);
            }
        }
        auto ptr = std::make_shared<const std::vector<std::vector<Integer>>>(std::move(m));
        mcache_.emplace(n, ptr);
        return ptr;
    }

private:
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const Transition>> cache_;
    std::map<int, std::shared_ptr<const std::vector<std::vector<Integer>>>> mcache_;
};

} // namespace detail

/// Re-express f in the power-sum basis.
inline SymFunc to_p(const SymFunc& f)
{
    if (f.basis() == Basis::p) return f;
    const int n = f.degree();
    if (n == 0) return f.relabelled(Basis::p);
    SymFunc out(n, Basis::p, f.order());
    auto tr = detail::TransitionCache::instance().get(n);
    const auto& idx = tr->idx;
    switch (f.basis()) {
    case Basis::h:
    case Basis::e: {
        const auto& rows = f.basis() == Basis::h ? tr->rows_h : tr->rows_e;
        for (const auto& [lambda, c] : f.terms())
            for (const auto& [mu, x] : rows[idx.index.at(lambda)]) out.add(idx.parts[mu], c, x);
        break;
    }
    case Basis::s: {
        auto table = character_table(n);
        std::vector<QSeries> acc(idx.parts.size(), QSeries().truncated(f.order()));
        for (const auto& [lambda, c] : f.terms()) {
            std::size_t l = table->index_of(lambda);
            for (std::size_t mu = 0; mu < idx.parts.size(); ++mu) {
                auto chi = (*table)(l, mu);
                if (chi != 0) acc[mu] += c * Rational(static_cast<long>(chi));
            }
        }
        for (std::size_t mu = 0; mu < idx.parts.size(); ++mu)
            out.add(idx.parts[mu], acc[mu], Rational(1) / Rational(idx.z[mu]));
        break;
    }
    case Basis::m: {
        // Solve sum_lambda g_lambda M[lambda][mu] = f_mu, M upper triangular in lex order.
        auto M = detail::TransitionCache::instance().monomial_matrix(n);
        const std::size_t N = idx.parts.size();
        std::vector<QSeries> g(N, QSeries().truncated(f.order()));
        for (std::size_t step = 0; step < N; ++step) {
            std::size_t mu = N - 1 - step; // increasing lex order
            QSeries rhs = f.coefficient(idx.parts[mu]);
            for (std::size_t lambda = mu + 1; lambda < N; ++lambda)
                if ((*M)[lambda][mu] != 0 && !g[lambda].is_zero()) rhs -= g[lambda] * Rational((*M)[lambda][mu]);
            g[mu] = rhs * (Rational(1) / Rational((*M)[mu][mu]));
        }
        for (std::size_t i = 0; i < N; ++i) out.add(idx.parts[i], g[i]);
        break;
    }
    case Basis::p: break;
    }
    return out;
}

/// Re-express a p-basis function in the target basis.
inline SymFunc from_p(const SymFunc& f, Basis target)
{
    if (f.basis() != Basis::p) throw std::invalid_argument("from_p expects a p-basis function");
    if (target == Basis::p) return f;
    const int n = f.degree();
    if (n == 0) return f.relabelled(target);
    SymFunc out(n, target, f.order());
    auto tr = detail::TransitionCache::instance().get(n);
    const auto& idx = tr->idx;
    const std::size_t N = idx.parts.size();
    switch (target) {
    case Basis::h:
    case Basis::e: {
        const auto& rows = target == Basis::h ? tr->rows_h : tr->rows_e;
        std::vector<QSeries> rest(N, QSeries().truncated(f.order()));
        for (const auto& [lambda, c] : f.terms()) rest[idx.index.at(lambda)] = c;
        for (std::size_t l = 0; l < N; ++l) {
            if (rest[l].is_zero()) continue;
            const auto& row = rows[l];
            // The diagonal entry is the first one: entries sit at indices >= l.
            Rational diag = row.front().second;
            QSeries c = rest[l] * (Rational(1) / diag);
            for (const auto& [mu, x] : row) rest[mu] -= c * x;
            out.add(idx.parts[l], c);
        }
        break;
    }
    case Basis::s: {
        auto table = character_table(n);
        std::vector<QSeries> acc(N, QSeries().truncated(f.order()));
        for (const auto& [mu, c] : f.terms()) {
            std::size_t m = table->index_of(mu);
            for (std::size_t l = 0; l < N; ++l) {
                auto chi = (*table)(l, m);
                if (chi != 0) acc[l] += c * Rational(static_cast<long>(chi));
            }
        }
        for (std::size_t l = 0; l < N; ++l) out.add(idx.parts[l], acc[l]);
        break;
    }
    case Basis::m: {
        auto M = detail::TransitionCache::instance().monomial_matrix(n);
        for (const auto& [lambda, c] : f.terms()) {
            std::size_t l = idx.index.at(lambda);
            for (std::size_t mu = 0; mu < N; ++mu)
                if ((*M)[l][mu] != 0) out.add(idx.parts[mu], c, Rational((*M)[l][mu]));
        }
        break;
    }
    case Basis::p: break;
    }
    return out;
}

inline SymFunc basis_convert(const SymFunc& f, Basis target)
{
    if (f.basis() == target) return f;
    return from_p(to_p(f), target);
}

// ---------------------------------------------------------------------------
// Linear structure

inline SymFunc& operator+=(SymFunc& a, const SymFunc& b)
{
    if (a.degree() != b.degree())
        throw DegreeMismatch("cannot add degree " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
    if (b.order() < a.order()) a.lower_order(b.order());
    if (b.basis() == a.basis()) {
        for (const auto& [lambda, c] : b.terms()) a.add(lambda, c);
    } else {
        for (const auto& [lambda, c] : basis_convert(b, a.basis()).terms()) a.add(lambda, c);
    }
    return a;
}

inline SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }

/// Multiply by a q-series scalar (coefficientwise, not plethystically).
inline SymFunc operator*(const QSeries& c, const SymFunc& f)
{
    SymFunc r(f.degree(), f.basis(), std::min(f.order(), c.order()));
    for (const auto& [lambda, x] : f.terms()) r.add(lambda, c * x);
    return r;
}

inline SymFunc operator*(const Rational& c, const SymFunc& f) { return QSeries(c) * f; }
inline SymFunc operator-(const SymFunc& f) { return Rational(-1) * f; }
inline SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }
inline SymFunc& operator-=(SymFunc& a, const SymFunc& b) { return a += -b; }

/// Exact equality as elements: same degree, same truncation, same p-expansion.
inline bool operator==(const SymFunc& a, const SymFunc& b)
{
    if (a.degree() != b.degree() || a.order() != b.order()) return false;
    if (a.basis() == b.basis()) return a.terms() == b.terms();
    return to_p(a).terms() == to_p(b).terms();
}

/// A coefficient where two functions disagree, in a chosen basis.
struct Discrepancy {
    Partition partition;
    int q_power = 0;
    Rational lhs;
    Rational rhs;
};

/// First (reverse-lex partition, then q-power) coefficient where a and b differ
/// below their common truncation order, comparing in `basis`.
inline std::optional<Discrepancy> first_difference(const SymFunc& a, const SymFunc& b, Basis basis = Basis::s)
{
    if (a.degree() != b.degree())
        throw DegreeMismatch("cannot compare degree " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
    SymFunc x = basis_convert(a, basis), y = basis_convert(b, basis);
    const int order = std::min(x.order(), y.order());
    std::map<Partition, int, RevLex> keys;
    for (const auto& [l, c] : x.terms()) keys[l] = 0;
    for (const auto& [l, c] : y.terms()) keys[l] = 0;
    for (const auto& [lambda, unused] : keys) {
        QSeries cx = x.coefficient(lambda), cy = y.coefficient(lambda);
        int top = std::max(cx.degree(), cy.degree());
        for (int k = 0; k <= top && k < order; ++k)
            if (cx[k] != cy[k]) return Discrepancy{lambda, k, cx[k], cy[k]};
    }
    return std::nullopt;
}

inline bool equal_up_to_truncation(const SymFunc& a, const SymFunc& b)
{
    return a.degree() == b.degree() && !first_difference(a, b, Basis::p);
}

// ---------------------------------------------------------------------------
// Products

inline SymFunc outer_mul(const SymFunc& f, const SymFunc& g)
{
    SymFunc fp = to_p(f), gp = to_p(g);
    SymFunc r(f.degree() + g.degree(), Basis::p, std::min(f.order(), g.order()));
    for (const auto& [la, ca] : fp.terms())
        for (const auto& [lb, cb] : gp.terms()) r.add(merge(la, lb), ca * cb);
    return r;
}

inline SymFunc operator*(const SymFunc& f, const SymFunc& g) { return outer_mul(f, g); }

/// Kronecker (inner) product: p_lambda * p_mu = delta z_lambda p_lambda. On
/// graded characters this is the degreewise Cauchy product over q.
inline SymFunc kronecker(const SymFunc& f, const SymFunc& g)
{
    if (f.degree() != g.degree())
        throw DegreeMismatch("Kronecker product needs equal degrees, got " + std::to_string(f.degree()) +
                             " and " + std::to_string(g.degree()));
    SymFunc fp = to_p(f), gp = to_p(g);
    SymFunc r(f.degree(), Basis::p, std::min(f.order(), g.order()));
    const auto& small = fp.terms().size() <= gp.terms().size() ? fp : gp;
    const auto& large = &small == &fp ? gp : fp;
    for (const auto& [lambda, c] : small.terms()) {
        auto it = large.terms().find(lambda);
        if (it == large.terms().end()) continue;
        r.add(lambda, c * it->second, Rational(z_of(lambda)));
    }
    return r;
}

/// Hall inner product <f, g>.
inline QSeries scalar_product(const SymFunc& f, const SymFunc& g)
{
    if (f.degree() != g.degree())
        throw DegreeMismatch("scalar product needs equal degrees, got " + std::to_string(f.degree()) + " and " +
                             std::to_string(g.degree()));
    SymFunc fp = to_p(f), gp = to_p(g);
    QSeries acc = QSeries().truncated(std::min(f.order(), g.order()));
    for (const auto& [lambda, c] : fp.terms()) {
        auto it = gp.terms().find(lambda);
        if (it != gp.terms().end()) acc += (c * it->second) * Rational(z_of(lambda));
    }
    return acc;
}

/// p_k[g]: p_j -> p_{jk} and q -> q^k in every coefficient.
inline SymFunc power_sum_plethysm(int k, const SymFunc& g)
{
    SymFunc gp = to_p(g);
    SymFunc r(g.degree() * k, Basis::p, g.order());
    for (const auto& [mu, c] : gp.terms()) r.add(mu.scaled(k), qs_power_q(c, k));
    return r;
}

/// Plethysm f[g]. Coefficients of f are scalars; q inside g transforms as
/// q -> q^k under p_k.
inline SymFunc plethysm(const SymFunc& f, const SymFunc& g)
{
    if (g.degree() == 0) {
        if (!g.is_zero()) throw InnerDegreeZero();
    }
    SymFunc fp = to_p(f);
    const int order = std::min(f.order(), g.order());
    SymFunc result(f.degree() * g.degree(), Basis::p, order);
    if (fp.is_zero()) return result;

    std::map<int, SymFunc> pk;
    auto pk_of = [&](int k) -> const SymFunc& {
        auto it = pk.find(k);
        if (it == pk.end()) it = pk.emplace(k, power_sum_plethysm(k, g)).first;
        return it->second;
    };
    // Products over partitions, memoized on the suffix of parts.
    std::map<Partition, SymFunc> prod;
    std::function<const SymFunc&(const Partition&)> product = [&](const Partition& lambda) -> const SymFunc& {
        if (auto it = prod.find(lambda); it != prod.end()) return it->second;
        SymFunc value;
        if (lambda.empty()) {
            value = SymFunc::one();
        } else {
            std::vector<int> rest(lambda.begin() + 1, lambda.end());
            value = outer_mul(pk_of(lambda[0]), product(Partition(rest)));
        }
        return prod.emplace(lambda, std::move(value)).first->second;
    };
    for (const auto& [lambda, c] : fp.terms()) result += c * product(lambda);
    return result;
}

// ---------------------------------------------------------------------------
// Named elements

inline SymFunc sym_h(int n) { return SymFunc::term(Basis::h, n == 0 ? Partition{} : Partition{n}); }
inline SymFunc sym_e(int n) { return SymFunc::term(Basis::e, n == 0 ? Partition{} : Partition{n}); }
inline SymFunc sym_p(const Partition& l) { return SymFunc::term(Basis::p, l); }
inline SymFunc sym_s(const Partition& l) { return SymFunc::term(Basis::s, l); }
inline SymFunc sym_h(const Partition& l) { return SymFunc::term(Basis::h, l); }
inline SymFunc sym_e(const Partition& l) { return SymFunc::term(Basis::e, l); }
inline SymFunc sym_m(const Partition& l) { return SymFunc::term(Basis::m, l); }

/// Graded dimension: n! times the p_{1^n} coefficient.
inline QSeries hilbert(const SymFunc& f)
{
    SymFunc fp = to_p(f);
    Partition ones(std::vector<int>(static_cast<std::size_t>(f.degree()), 1));
    return fp.coefficient(ones) * Rational(factorial(f.degree()));
}

inline bool is_schur_positive(const SymFunc& f)
{
    for (const auto& [lambda, c] : basis_convert(f, Basis::s).terms())
        for (const auto& x : c.coeffs())
            if (x < 0) return false;
    return true;
}

inline bool has_integral_schur_coefficients(const SymFunc& f)
{
    for (const auto& [lambda, c] : basis_convert(f, Basis::s).terms())
        for (const auto& x : c.coeffs())
            if (x.get_den() != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Graded families and the plethystic exponential

/// A sequence of homogeneous functions, component n of degree n, for
/// n = 1..max_n. The index plays the role of a second grading variable.
class GradedFamily {
public:
    GradedFamily() = default;
    explicit GradedFamily(std::vector<SymFunc> components) : components_(std::move(components))
    {
        for (std::size_t i = 0; i < components_.size(); ++i)
            if (components_[i].degree() != static_cast<int>(i) + 1)
                throw DegreeMismatch("graded family component " + std::to_string(i + 1) + " has degree " +
                                     std::to_string(components_[i].degree()));
    }

    int max_n() const noexcept { return static_cast<int>(components_.size()); }
    const SymFunc& operator[](int n) const { return components_.at(static_cast<std::size_t>(n) - 1); }
    const std::vector<SymFunc>& components() const noexcept { return components_; }

private:
    std::vector<SymFunc> components_;
};

/// Exp(f) = sum_k h_k[f], componentwise sum_{lambda |- n} prod_j h_{m_j}[f_j].
/// The constant term 1 is dropped.
inline GradedFamily plethystic_exp(const GradedFamily& f)
{
    const int max_n = f.max_n();
    std::map<std::pair<int, int>, SymFunc> hm; // (m, j) -> h_m[f_j]
    auto h_of = [&](int m, int j) -> const SymFunc& {
        auto key = std::make_pair(m, j);
        auto it = hm.find(key);
        if (it == hm.end()) it = hm.emplace(key, plethysm(sym_h(m), f[j])).first;
        return it->second;
    };
    std::vector<SymFunc> out;
    for (int n = 1; n <= max_n; ++n) {
        SymFunc acc(n, Basis::p);
        for (const auto& lambda : partitions_of(n)) {
            SymFunc term = SymFunc::one();
            for (auto [j, m] : ExponentialForm(lambda).multiplicities()) term = outer_mul(term, h_of(m, j));
            acc += term;
        }
        out.push_back(std::move(acc));
    }
    return GradedFamily(std::move(out));
}

/// h_n[X/(1-q)] modulo q^order, via p_k[X/(1-q)] = p_k/(1-q^k).
inline SymFunc h_of_x_over_one_minus_q(int n, int order)
{
    std::vector<QSeries> inv(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) inv[static_cast<std::size_t>(k)] = qs_invert(one_minus_q_power(k), order);
    SymFunc r(n, Basis::p, order);
    for (const auto& mu : partitions_of(n)) {
        QSeries c = QSeries(Rational(1) / Rational(z_of(mu))).truncated(order);
        for (int part : mu) c *= inv[static_cast<std::size_t>(part)];
        r.add(mu, c);
    }
    return r;
}

/// H[X/(1-q)] as a graded family, components 1..max_n.
inline GradedFamily complete_of_x_over_one_minus_q(int max_n, int order)
{
    std::vector<SymFunc> comps;
    for (int n = 1; n <= max_n; ++n) comps.push_back(h_of_x_over_one_minus_q(n, order));
    return GradedFamily(std::move(comps));
}

} // namespace symchar
