#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "combinat.hpp"
#include "error.hpp"
#include "frobchar.hpp"
#include "linalg.hpp"
#include "symfunc.hpp"

// Brute-force Frobenius characters of algebras presented by generators e_ij
// (e_ji = -e_ij) and relations, computed degree by degree with exact linear
// algebra and traces of class representatives.

namespace symchar::oracle {

enum class Variant { OT, C, D, M };

inline std::string_view variant_name(Variant v)
{
    switch (v) {
    case Variant::OT: return "ot";
    case Variant::C: return "c";
    case Variant::D: return "d";
    case Variant::M: return "m";
    }
    return "?";
}

inline std::optional<Variant> parse_variant(std::string_view s)
{
    for (Variant v : {Variant::OT, Variant::C, Variant::D, Variant::M})
        if (variant_name(v) == s) return v;
    return std::nullopt;
}

/// A monomial as the sorted list of its generator indices (with repetition).
using Monomial = std::vector<std::uint8_t>;
/// A polynomial in the free commutative ring on the generators e_ij, i < j.
using Poly = std::map<Monomial, Rational>;

struct SignedGenerator {
    int sign;
    int index;
};

class PresentedAlgebra {
public:
    PresentedAlgebra(int n, Variant variant) : n_(n), variant_(variant)
    {
        if (n < 1) throw std::invalid_argument("PresentedAlgebra: n must be positive");
        index_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                index_[i][j] = static_cast<int>(pairs_.size());
                pairs_.emplace_back(i, j);
            }
        build_relations();
    }

    int n() const noexcept { return n_; }
    Variant variant() const noexcept { return variant_; }
    int num_generators() const noexcept { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& generators() const noexcept { return pairs_; }
    const std::vector<Poly>& quadratic_relations() const noexcept { return quadratic_; }
    const std::vector<Poly>& linear_relations() const noexcept { return linear_; }

    /// e_ab for distinct a, b, rewritten through e_ba = -e_ab.
    SignedGenerator generator(int a, int b) const
    {
        if (a == b) throw std::invalid_argument("e_ii is not a generator");
        return a < b ? SignedGenerator{1, index_[a][b]} : SignedGenerator{-1, index_[b][a]};
    }

    /// Image of a monomial under a permutation: sign and sorted image.
    std::pair<int, Monomial> act(const std::vector<int>& sigma, const Monomial& m) const
    {
        int sign = 1;
        Monomial out;
        out.reserve(m.size());
        for (auto g : m) {
            auto [i, j] = pairs_[g];
            auto img = generator(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
            sign *= img.sign;
            out.push_back(static_cast<std::uint8_t>(img.index));
        }
        std::sort(out.begin(), out.end());
        return {sign, out};
    }

    /// Finest set partition of [n] joining the endpoints of every factor,
    /// encoded as a block label per point.
    std::vector<int> support(const Monomial& m) const
    {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto g : m) {
            auto [i, j] = pairs_[g];
            parent[find(i)] = find(j);
        }
        std::vector<int> label(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) label[i] = find(i);
        return label;
    }

private:
    using Linear = std::vector<std::pair<int, Rational>>; // (generator, coeff)

    Linear e(int a, int b) const
    {
        auto g = generator(a, b);
        return {{g.index, Rational(g.sign)}};
    }

    static Poly times(const Linear& x, const Linear& y)
    {
        Poly p;
        for (const auto& [gx, cx] : x)
            for (const auto& [gy, cy] : y) {
                Monomial m{static_cast<std::uint8_t>(std::min(gx, gy)), static_cast<std::uint8_t>(std::max(gx, gy))};
                p[m] += cx * cy;
            }
        std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
        return p;
    }

    static Linear plus(Linear a, const Linear& b)
    {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    static Poly sum(Poly a, const Poly& b)
    {
        for (const auto& [m, c] : b) a[m] += c;
        std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
        return a;
    }

    // Normalize so the first coefficient is positive; used to drop duplicates
    // that differ by a sign.
    static Poly normalized(Poly p)
    {
        if (!p.empty() && p.begin()->second < 0)
            for (auto& [m, c] : p) c = -c;
        return p;
    }

    void build_relations()
    {
        std::set<Poly> quad, lin;
        const int n = n_;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    if (variant_ == Variant::D) {
                        Linear t = plus(plus(e(i, j), e(j, k)), e(k, i));
                        Poly sq = times(t, t);
                        if (!sq.empty()) quad.insert(normalized(sq));
                    } else {
                        Poly r = sum(sum(times(e(i, j), e(j, k)), times(e(j, k), e(k, i))), times(e(k, i), e(i, j)));
                        if (!r.empty()) quad.insert(normalized(r));
                    }
                }
        if (variant_ == Variant::C)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) quad.insert(normalized(times(e(i, j), e(i, j))));
        if (variant_ == Variant::D || variant_ == Variant::M)
            for (int i = 0; i < n; ++i) {
                std::map<int, Rational> by_index;
                for (int j = 0; j < n; ++j)
                    if (j != i) {
                        auto g = generator(i, j);
                        by_index[g.index] += g.sign;
                    }
                Poly p;
                for (const auto& [idx, c] : by_index)
                    if (c != 0) p.emplace_hint(p.end(), Monomial(1, static_cast<std::uint8_t>(idx)), c);
                if (!p.empty()) lin.insert(normalized(p));
            }
        quadratic_.assign(quad.begin(), quad.end());
        linear_.assign(lin.begin(), lin.end());
    }

    int n_;
    Variant variant_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<int>> index_;
    std::vector<Poly> quadratic_;
    std::vector<Poly> linear_;
};

inline PresentedAlgebra presentation(Variant v, int n) { return PresentedAlgebra(n, v); }

/// Monomials of degree d in g generators, in lexicographic order.
inline std::vector<Monomial> monomials_of_degree(int g, int d)
{
    std::vector<Monomial> out;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    if (g == 0) return out;
    Monomial m(static_cast<std::size_t>(d), 0);
    for (;;) {
        out.push_back(m);
        int pos = d - 1;
        while (pos >= 0 && m[static_cast<std::size_t>(pos)] == g - 1) --pos;
        if (pos < 0) break;
        auto v = static_cast<std::uint8_t>(m[static_cast<std::size_t>(pos)] + 1);
        for (int i = pos; i < d; ++i) m[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

inline Integer monomial_count(int g, int d)
{
    if (d == 0) return 1;
    if (g == 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(g + d - 1), static_cast<unsigned long>(d));
    return r;
}

inline constexpr std::size_t kDefaultMonomialCeiling = 200000;

/// Degree-d piece of the free algebra together with the degree-d part of the
/// relation ideal, as a reduced row echelon basis over the monomial basis.
struct GradedPiece {
    int degree = 0;
    std::vector<Monomial> monomials;
    std::map<Monomial, int> index;
    linalg::EchelonBasis ideal;

    int ambient_dimension() const { return static_cast<int>(monomials.size()); }
    int ideal_rank() const { return ideal.rank(); }
    int quotient_dimension() const { return ambient_dimension() - ideal_rank(); }
};

namespace detail {

inline Monomial times_monomial(const Monomial& a, const Monomial& b)
{
    Monomial r(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), r.begin());
    return r;
}

inline linalg::SparseVector to_vector(const GradedPiece& piece, const Monomial& m, const Poly& rel)
{
    std::vector<std::pair<int, Rational>> entries;
    entries.reserve(rel.size());
    for (const auto& [t, c] : rel) entries.emplace_back(piece.index.at(times_monomial(m, t)), c);
    return linalg::canonicalize(std::move(entries));
}

} // namespace detail

/// The ideal is spanned by (degree d-2 monomials) x (quadratic relations) and
/// (degree d-1 monomials) x (linear relations).
inline GradedPiece build_piece(const PresentedAlgebra& alg, int d, std::size_t ceiling = kDefaultMonomialCeiling)
{
    if (d < 0) throw std::invalid_argument("build_piece: negative degree");
    const int g = alg.num_generators();
    if (monomial_count(g, d) > Integer(static_cast<unsigned long>(ceiling)))
        throw TooLarge("degree " + std::to_string(d) + " piece of " + std::string(variant_name(alg.variant())) +
                       "_" + std::to_string(alg.n()) + " has " + monomial_count(g, d).get_str() +
                       " monomials, above the ceiling " + std::to_string(ceiling));
    GradedPiece piece;
    piece.degree = d;
    piece.monomials = monomials_of_degree(g, d);
    for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.index.emplace(piece.monomials[i], static_cast<int>(i));
    piece.ideal = linalg::EchelonBasis(static_cast<int>(piece.monomials.size()));
    if (d >= 2)
        for (const auto& m : monomials_of_degree(g, d - 2))
            for (const auto& rel : alg.quadratic_relations()) piece.ideal.insert(detail::to_vector(piece, m, rel));
    if (d >= 1)
        for (const auto& m : monomials_of_degree(g, d - 1))
            for (const auto& rel : alg.linear_relations()) piece.ideal.insert(detail::to_vector(piece, m, rel));
    piece.ideal.make_reduced();
    return piece;
}

/// Signed column permutation induced by sigma on the monomial basis of a piece.
inline std::vector<std::pair<int, int>> column_action(const PresentedAlgebra& alg, const GradedPiece& piece,
                                                      const std::vector<int>& sigma)
{
    std::vector<std::pair<int, int>> act(piece.monomials.size());
    for (std::size_t c = 0; c < piece.monomials.size(); ++c) {
        auto [sign, img] = alg.act(sigma, piece.monomials[c]);
        act[c] = {piece.index.at(img), sign};
    }
    return act;
}

inline linalg::SparseVector apply_action(const std::vector<std::pair<int, int>>& act, const linalg::SparseVector& v)
{
    std::vector<std::pair<int, Rational>> out;
    out.reserve(v.size());
    for (const auto& [c, x] : v) {
        auto [img, sign] = act[static_cast<std::size_t>(c)];
        out.emplace_back(img, sign > 0 ? x : Rational(-x));
    }
    return linalg::canonicalize(std::move(out));
}

/// Whether sigma maps the ideal subspace into itself: every image of a basis
/// row must reduce to zero.
inline bool is_stable(const PresentedAlgebra& alg, const GradedPiece& piece, const std::vector<int>& sigma)
{
    auto act = column_action(alg, piece, sigma);
    for (const auto& [pivot, row] : piece.ideal.rows())
        if (!piece.ideal.contains(apply_action(act, row))) return false;
    return true;
}

/// Trace of sigma on the quotient: trace on the monomial span minus trace on
/// the ideal. With a reduced echelon basis, the coordinate of a vector v of the
/// ideal along the row with pivot c is v[c], so the ideal trace is
/// sum over rows r of (sigma r)[pivot(r)].
inline Rational trace_on_quotient(const PresentedAlgebra& alg, const GradedPiece& piece, const std::vector<int>& sigma)
{
    auto act = column_action(alg, piece, sigma);
    Rational ambient = 0;
    for (std::size_t c = 0; c < act.size(); ++c)
        if (act[c].first == static_cast<int>(c)) ambient += act[c].second;
    Rational ideal = 0;
    for (const auto& [pivot, row] : piece.ideal.rows())
        for (const auto& [c, x] : row) {
            auto [img, sign] = act[static_cast<std::size_t>(c)];
            if (img == pivot) ideal += sign > 0 ? x : Rational(-x);
        }
    return ambient - ideal;
}

struct OracleOptions {
    std::size_t ceiling = kDefaultMonomialCeiling;
    bool check_stability = true;
};

/// Graded Frobenius character of the presented algebra through q-degree
/// max_degree (truncation order max_degree + 1), in the p-basis.
inline SymFunc oracle_character(Variant variant, int n, int max_degree, const OracleOptions& opts = {})
{
    if (max_degree < 0) throw std::invalid_argument("oracle_character: negative max degree");
    PresentedAlgebra alg(n, variant);
    const auto classes = partitions_of(n);
    SymFunc result(n, Basis::p, max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        GradedPiece piece = build_piece(alg, d, opts.ceiling);
        for (const auto& lambda : classes) {
            auto sigma = class_representative(lambda);
            if (opts.check_stability && !is_stable(alg, piece, sigma))
                throw IdentityViolation("ideal of " + std::string(variant_name(variant)) + "_" + std::to_string(n) +
                                        " in degree " + std::to_string(d) + " is not stable under class " +
                                        lambda.to_string());
            Rational tr = trace_on_quotient(alg, piece, sigma);
            if (tr != 0) result.add(lambda, QSeries::monomial(tr / Rational(z_of(lambda)), d));
        }
    }
    SymFunc s = basis_convert(result, Basis::s);
    for (const auto& [lambda, c] : s.terms())
        for (const auto& x : c.coeffs())
            if (x < 0 || x.get_den() != 1)
                throw IdentityViolation("oracle character of " + std::string(variant_name(variant)) + "_" +
                                        std::to_string(n) + " has non-integral or negative Schur coefficient at " +
                                        lambda.to_string());
    return result;
}

/// ch T_n from oracle OT characters of every k <= n, without using the closed
/// formula for T.
inline SymFunc oracle_T(int n, int max_degree, const OracleOptions& opts = {})
{
    std::vector<SymFunc> ot;
    for (int k = 1; k <= n; ++k) ot.push_back(oracle_character(Variant::OT, k, max_degree, opts));
    return ch_T_from_OT(n, max_degree + 1, ot);
}

/// Whether every relation generator is a combination of monomials sharing one support.
inline bool relations_support_homogeneous(const PresentedAlgebra& alg)
{
    auto homogeneous = [&](const Poly& p) {
        std::optional<std::vector<int>> s;
        for (const auto& [m, c] : p) {
            auto sm = alg.support(m);
            // Canonical labels: smallest element of each block.
            std::vector<int> canon(sm.size());
            std::map<int, int> first;
            for (std::size_t i = 0; i < sm.size(); ++i) canon[i] = first.try_emplace(sm[i], static_cast<int>(i)).first->second;
            if (!s) s = canon;
            else if (*s != canon) return false;
        }
        return true;
    };
    for (const auto& p : alg.quadratic_relations())
        if (!homogeneous(p)) return false;
    for (const auto& p : alg.linear_relations())
        if (!homogeneous(p)) return false;
    return true;
}

} // namespace symchar::oracle
