#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combinat.hpp"
#include "error.hpp"
#include "qseries.hpp"
#include "symfunc.hpp"

// Graded Frobenius characters of the type-A arrangement algebras: the
// configuration-space algebras C_n and D_n, the Orlik-Terao algebra OT_n, its
// quotient M_n, the full-support piece T_n, and the symmetric and exterior
// algebras R_n and Lambda_n on the standard representation.
//
// Finite objects (C, D, Lambda, Lyndon) are returned as exact polynomials in q.
// Infinite ones (OT, R, T) are returned modulo q^D.

namespace symchar {

namespace detail {

inline int max_q_degree_of_d(int n) { return n >= 2 ? n - 2 : 0; }

/// Certify every coefficient of f is a polynomial of degree <= max_degree.
inline SymFunc certify_polynomial(const SymFunc& f, int max_degree, std::string_view what)
{
    SymFunc r(f.degree(), f.basis());
    for (const auto& [lambda, c] : f.terms()) {
        try {
            r.add(lambda, qs_exact_polynomial(c, max_degree));
        } catch (const NotPolynomial& err) {
            throw NotPolynomial(std::string(what) + ": coefficient of " + lambda.to_string() + ": " + err.what());
        }
    }
    if (!f.is_exact() && max_degree >= f.order())
        throw NotPolynomial(std::string(what) + ": truncation order " + std::to_string(f.order()) +
                            " too small to certify degree <= " + std::to_string(max_degree));
    return r;
}

/// f/(1-q) modulo q^order.
inline SymFunc divide_by_one_minus_q(const SymFunc& f, int order)
{
    return geometric_series(order) * f;
}

} // namespace detail

/// Lyndon symmetric function l_n = (1/n) sum_{d | n} mu(d) p_d^{n/d}.
inline SymFunc lyndon(int n)
{
    if (n < 1) throw std::invalid_argument("lyndon: n must be positive");
    SymFunc r(n, Basis::p);
    for (long d : divisors(n)) {
        int mu = moebius(d);
        if (mu == 0) continue;
        Partition lambda(std::vector<int>(static_cast<std::size_t>(n / d), static_cast<int>(d)));
        r.add(lambda, QSeries(Rational(mu, n)));
    }
    return r;
}

/// ch Lambda_n = sum_{i=0}^{n-1} q^i s_{n-i,1^i}.
inline SymFunc ch_lambda(int n)
{
    if (n < 1) throw std::invalid_argument("ch_lambda: n must be positive");
    SymFunc r(n, Basis::s);
    for (int i = 0; i < n; ++i) {
        std::vector<int> parts{n - i};
        parts.insert(parts.end(), static_cast<std::size_t>(i), 1);
        r.add(Partition(parts), q_power(i));
    }
    return r;
}

/// ch'Lambda_n: ch Lambda_n with q -> -q.
inline SymFunc ch_lambda_primed(int n) { return ch_lambda(n).substituted(NegateQ{}); }

/// ch'Lambda(P_n) = sum_{k=0}^n (-q)^k h_{n-k} e_k, the exterior algebra on the
/// permutation representation with q -> -q. Asserts the factorization
/// (1-q) ch'Lambda_n.
inline SymFunc ch_lambdaP_primed(int n)
{
    if (n < 1) throw std::invalid_argument("ch_lambdaP_primed: n must be positive");
    SymFunc r(n, Basis::p);
    for (int k = 0; k <= n; ++k) {
        QSeries c = QSeries::monomial(k % 2 ? -1 : 1, k);
        r += c * outer_mul(sym_h(n - k), sym_e(k));
    }
    if (auto d = first_difference(r, one_minus_q_power(1) * ch_lambda_primed(n), Basis::p))
        throw IdentityViolation("ch'Lambda(P_" + std::to_string(n) + ") != (1-q) ch'Lambda_" + std::to_string(n));
    return r;
}

/// ch R_n = (1-q) h_n[X/(1-q)] modulo q^order.
inline SymFunc ch_R(int n, int order)
{
    if (n < 1 || order < 1) throw std::invalid_argument("ch_R: need n >= 1 and D >= 1");
    return one_minus_q_power(1) * h_of_x_over_one_minus_q(n, order);
}

/// s_lambda(1, q, q^2, ...) = q^{b(lambda)} / prod_cells (1 - q^hook) modulo q^order.
inline QSeries principal_specialization(const Partition& lambda, int order)
{
    int b = 0;
    for (int i = 0; i < lambda.length(); ++i) b += i * lambda[static_cast<std::size_t>(i)];
    QSeries r = q_power(b, order);
    Partition conj = lambda.conjugate();
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
            int hook = lambda[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1;
            r *= qs_invert(one_minus_q_power(hook), order);
        }
    return r;
}

/// ch R_n = (1-q) sum_lambda s_lambda(1,q,q^2,...) s_lambda, an independent route to ch_R.
inline SymFunc ch_R_schur_form(int n, int order)
{
    SymFunc r(n, Basis::s, order);
    for (const auto& lambda : partitions_of(n)) r.add(lambda, principal_specialization(lambda, order));
    return one_minus_q_power(1) * r;
}

namespace detail {

// Sum over lambda |- n of weight(lambda) * prod_j factor(m_j, j), in the p-basis.
template <class Weight, class Factor>
SymFunc sum_over_partitions(int n, Weight&& weight, Factor&& factor)
{
    std::map<std::pair<int, int>, SymFunc> memo;
    SymFunc acc(n, Basis::p);
    for (const auto& lambda : partitions_of(n)) {
        ExponentialForm ef(lambda);
        SymFunc term = SymFunc::one();
        for (auto [j, m] : ef.multiplicities()) {
            auto key = std::make_pair(m, j);
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, factor(m, j)).first;
            term = outer_mul(term, it->second);
        }
        acc += weight(lambda, ef) * term;
    }
    return acc;
}

} // namespace detail

/// ch C_n = sum_lambda q^{n-l(lambda)} prod_j h_{m_j}[l_j].
inline SymFunc ch_C(int n)
{
    if (n < 1) throw std::invalid_argument("ch_C: n must be positive");
    SymFunc r = detail::sum_over_partitions(
        n, [n](const Partition& l, const ExponentialForm&) { return q_power(n - l.length()); },
        [](int m, int j) { return plethysm(sym_h(m), lyndon(j)); });
    return detail::certify_polynomial(r, n - 1, "ch_C");
}

/// Numerator of the h-plethysm formula for D_n:
/// sum_lambda prod_j h_{m_j}[q^{j-1}(1-q) l_j], equal to (1-q) ch D_n.
inline SymFunc d_numerator(int n)
{
    return detail::sum_over_partitions(
        n, [](const Partition&, const ExponentialForm&) { return QSeries(1); },
        [](int m, int j) { return plethysm(sym_h(m), q_power(j - 1) * (one_minus_q_power(1) * lyndon(j))); });
}

/// Numerator of the exterior-algebra formula for D_n:
/// sum_lambda q^{n-l(lambda)} prod_j ch'Lambda(P_{m_j})[l_j].
inline SymFunc d_alt_numerator(int n)
{
    return detail::sum_over_partitions(
        n, [n](const Partition& l, const ExponentialForm&) { return q_power(n - l.length()); },
        [](int m, int j) { return plethysm(ch_lambdaP_primed(m), lyndon(j)); });
}

/// Polynomial form with the (1-q) cancelled termwise:
/// sum_lambda q^{n-l(lambda)} (1-q)^{c_lambda - 1} prod_j ch'Lambda_{m_j}[l_j].
/// A polynomial of degree <= n-1 whose q^{n-1} coefficient vanishes.
inline SymFunc d_remark_form(int n)
{
    return detail::sum_over_partitions(
        n,
        [n](const Partition& l, const ExponentialForm& ef) {
            QSeries w = q_power(n - l.length());
            for (int i = 1; i < ef.support_count(); ++i) w *= one_minus_q_power(1);
            return w;
        },
        [](int m, int j) { return plethysm(ch_lambda_primed(m), lyndon(j)); });
}

/// ch D_n from the h-plethysm formula, divided by (1-q) and certified to be a
/// polynomial of degree <= n-2.
inline SymFunc ch_D_eq2(int n)
{
    if (n < 1) throw std::invalid_argument("ch_D: n must be positive");
    return detail::certify_polynomial(detail::divide_by_one_minus_q(d_numerator(n), n + 1),
                                      detail::max_q_degree_of_d(n), "ch_D");
}

/// ch D_n from the exterior-algebra formula.
inline SymFunc ch_D_alt(int n)
{
    if (n < 1) throw std::invalid_argument("ch_D_alt: n must be positive");
    return detail::certify_polynomial(detail::divide_by_one_minus_q(d_alt_numerator(n), n + 1),
                                      detail::max_q_degree_of_d(n), "ch_D_alt");
}

/// ch D_n from the termwise-cancelled polynomial form.
inline SymFunc ch_D_remark(int n)
{
    if (n < 1) throw std::invalid_argument("ch_D_remark: n must be positive");
    return detail::certify_polynomial(d_remark_form(n), detail::max_q_degree_of_d(n), "ch_D_remark");
}

/// ch D_n, asserted equal to the exterior-algebra formula.
inline SymFunc ch_D(int n)
{
    SymFunc d = ch_D_eq2(n);
    if (auto diff = first_difference(d, ch_D_alt(n), Basis::p))
        throw IdentityViolation("ch_D(" + std::to_string(n) + ") formulas disagree at " +
                                diff->partition.to_string() + " q^" + std::to_string(diff->q_power));
    return d;
}

/// ch OT_n = sum_lambda q^{n-l(lambda)} prod_j h_{m_j}[l_j * ch R_j] modulo q^order.
inline SymFunc ch_OT(int n, int order)
{
    if (n < 1 || order < 1) throw std::invalid_argument("ch_OT: need n >= 1 and D >= 1");
    std::map<int, SymFunc> lr;
    SymFunc r = detail::sum_over_partitions(
        n, [n](const Partition& l, const ExponentialForm&) { return q_power(n - l.length()); },
        [&](int m, int j) {
            auto it = lr.find(j);
            if (it == lr.end()) it = lr.emplace(j, kronecker(lyndon(j), ch_R(j, order))).first;
            return plethysm(sym_h(m), it->second);
        });
    return r.truncated(order);
}

/// ch M_n = ch OT_n * ch'Lambda_n, certified to be a polynomial of degree <= n-2.
/// Needs order >= n so that the vanishing of q^{n-1} is actually checked.
inline SymFunc ch_M(int n, int order)
{
    if (n < 1) throw std::invalid_argument("ch_M: n must be positive");
    if (order < n)
        throw NotPolynomial("ch_M: truncation order " + std::to_string(order) + " < n = " + std::to_string(n) +
                            " cannot certify a polynomial of degree <= n-2");
    return detail::certify_polynomial(kronecker(ch_OT(n, order), ch_lambda_primed(n)),
                                      detail::max_q_degree_of_d(n), "ch_M");
}

/// ch T_n = q^{n-1} l_n * ch R_n modulo q^order.
inline SymFunc ch_T(int n, int order)
{
    if (n < 1 || order < 1) throw std::invalid_argument("ch_T: need n >= 1 and D >= 1");
    return q_power(n - 1) * kronecker(lyndon(n), ch_R(n, order));
}

/// Solve ch OT_k = sum_{lambda |- k} prod_j h_{m_j}[ch T_j] for ch T_1..ch T_n,
/// given ot_by_k[k-1] = ch OT_k. The lambda = (k) term is ch T_k itself.
inline std::vector<SymFunc> t_family_from_ot(int n, int order, const std::vector<SymFunc>& ot_by_k)
{
    if (static_cast<int>(ot_by_k.size()) < n) throw std::invalid_argument("ch_T_from_OT: need ch OT_k for k <= n");
    std::vector<SymFunc> t;
    std::map<std::pair<int, int>, SymFunc> memo;
    for (int k = 1; k <= n; ++k) {
        SymFunc rest(k, Basis::p, order);
        for (const auto& lambda : partitions_of(k)) {
            if (lambda.length() == 1) continue;
            SymFunc term = SymFunc::one();
            for (auto [j, m] : ExponentialForm(lambda).multiplicities()) {
                auto key = std::make_pair(m, j);
                auto it = memo.find(key);
                if (it == memo.end())
                    it = memo.emplace(key, plethysm(sym_h(m), t[static_cast<std::size_t>(j) - 1])).first;
                term = outer_mul(term, it->second);
            }
            rest += term;
        }
        t.push_back(to_p(ot_by_k[static_cast<std::size_t>(k) - 1]).truncated(order) - rest);
    }
    return t;
}

inline SymFunc ch_T_from_OT(int n, int order, const std::vector<SymFunc>& ot_by_k)
{
    return t_family_from_ot(n, order, ot_by_k).back();
}

/// L = sum_n q^{n-1} l_n as a graded family.
inline GradedFamily lyndon_family(int max_n)
{
    std::vector<SymFunc> comps;
    for (int n = 1; n <= max_n; ++n) comps.push_back(q_power(n - 1) * lyndon(n));
    return GradedFamily(std::move(comps));
}

/// Components of (Exp((1-q)L) - 1)/(1-q). Component n is divided modulo q^order
/// and certified as a polynomial of degree <= n-2 when the order allows it.
inline GradedFamily gen_fun_D(int max_n, int order)
{
    if (max_n < 1 || order < 1) throw std::invalid_argument("gen_fun_D: need max_n >= 1 and D >= 1");
    GradedFamily L = lyndon_family(max_n);
    std::vector<SymFunc> inner;
    for (const auto& c : L.components()) inner.push_back(one_minus_q_power(1) * c);
    GradedFamily e = plethystic_exp(GradedFamily(std::move(inner)));
    std::vector<SymFunc> out;
    for (int n = 1; n <= max_n; ++n) {
        SymFunc d = detail::divide_by_one_minus_q(e[n], order);
        if (detail::max_q_degree_of_d(n) < order) d = detail::certify_polynomial(d, detail::max_q_degree_of_d(n), "gen_fun_D");
        out.push_back(std::move(d));
    }
    return GradedFamily(std::move(out));
}

/// Components of Exp((1-q) (L * H[X/(1-q)])) - 1 modulo q^order, with the
/// Kronecker product pairing equal-degree components.
inline GradedFamily gen_fun_OT(int max_n, int order)
{
    if (max_n < 1 || order < 1) throw std::invalid_argument("gen_fun_OT: need max_n >= 1 and D >= 1");
    GradedFamily L = lyndon_family(max_n);
    GradedFamily H = complete_of_x_over_one_minus_q(max_n, order);
    std::vector<SymFunc> inner;
    for (int n = 1; n <= max_n; ++n) inner.push_back(one_minus_q_power(1) * kronecker(L[n], H[n]));
    GradedFamily e = plethystic_exp(GradedFamily(std::move(inner)));
    std::vector<SymFunc> out;
    for (const auto& c : e.components()) out.push_back(c.truncated(order));
    return GradedFamily(std::move(out));
}

// ---------------------------------------------------------------------------

enum class CharName { C, D, D_alt, OT, M, R, T, Lambda, LambdaP, Lyndon };

inline std::string_view char_name(CharName c)
{
    switch (c) {
    case CharName::C: return "c";
    case CharName::D: return "d";
    case CharName::D_alt: return "d_alt";
    case CharName::OT: return "ot";
    case CharName::M: return "m";
    case CharName::R: return "r";
    case CharName::T: return "t";
    case CharName::Lambda: return "lambda";
    case CharName::LambdaP: return "lambdap";
    case CharName::Lyndon: return "lyndon";
    }
    return "?";
}

inline std::optional<CharName> parse_char_name(std::string_view s)
{
    for (CharName c : {CharName::C, CharName::D, CharName::D_alt, CharName::OT, CharName::M, CharName::R,
                       CharName::T, CharName::Lambda, CharName::LambdaP, CharName::Lyndon})
        if (char_name(c) == s) return c;
    return std::nullopt;
}

/// Whether the named character is a polynomial in q (returned exactly).
inline bool is_polynomial_character(CharName c)
{
    switch (c) {
    case CharName::C:
    case CharName::D:
    case CharName::D_alt:
    case CharName::M:
    case CharName::Lambda:
    case CharName::LambdaP:
    case CharName::Lyndon: return true;
    default: return false;
    }
}

struct NamedCharacter {
    CharName name;
    int n;
    SymFunc value;
    int truncation; // QSeries::kExact for polynomial values
};

/// Evaluate a named character. `order` is used by the series characters and by M.
inline NamedCharacter named_character(CharName name, int n, int order)
{
    SymFunc v;
    switch (name) {
    case CharName::C: v = ch_C(n); break;
    case CharName::D: v = ch_D(n); break;
    case CharName::D_alt: v = ch_D_alt(n); break;
    case CharName::OT: v = ch_OT(n, order); break;
    case CharName::M: v = ch_M(n, order); break;
    case CharName::R: v = ch_R(n, order); break;
    case CharName::T: v = ch_T(n, order); break;
    case CharName::Lambda: v = ch_lambda(n); break;
    case CharName::LambdaP: v = ch_lambdaP_primed(n); break;
    case CharName::Lyndon: v = lyndon(n); break;
    }
    return NamedCharacter{name, n, v, v.order()};
}

} // namespace symchar
