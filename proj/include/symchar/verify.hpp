#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frobchar.hpp"
#include "oracle.hpp"

namespace symchar {

enum class Check {
    mpy,
    cancellation,
    dn_two_formulas,
    ot_factorization,
    t_consistency,
    genfun,
    top_degree,
    subtraction,
    projection,
    positivity,
    hilbert,
    oracle,
};

inline constexpr Check kAllChecks[] = {Check::mpy,         Check::cancellation, Check::dn_two_formulas,
                                       Check::ot_factorization, Check::t_consistency, Check::genfun,
                                       Check::top_degree,  Check::subtraction,  Check::projection,
                                       Check::positivity,  Check::hilbert,      Check::oracle};

inline std::string_view check_name(Check c)
{
    switch (c) {
    case Check::mpy: return "mpy";
    case Check::cancellation: return "cancellation";
    case Check::dn_two_formulas: return "dn-two-formulas";
    case Check::ot_factorization: return "ot-factorization";
    case Check::t_consistency: return "t-consistency";
    case Check::genfun: return "genfun";
    case Check::top_degree: return "top-degree";
    case Check::subtraction: return "subtraction";
    case Check::projection: return "projection";
    case Check::positivity: return "positivity";
    case Check::hilbert: return "hilbert";
    case Check::oracle: return "oracle";
    }
    return "?";
}

inline std::optional<Check> parse_check(std::string_view s)
{
    for (Check c : kAllChecks)
        if (check_name(c) == s) return c;
    return std::nullopt;
}

struct VerifyOptions {
    int n_max = 6;
    std::optional<int> order; // truncation D; each check picks its own default when unset
    int oracle_n_max = 4;
    unsigned seed = 20240601;
    oracle::OracleOptions oracle_opts{};
};

/// Result of one identity at one n.
struct IdentityOutcome {
    std::string check;
    std::string identity;
    int n = 0;
    bool pass = false;
    std::string detail;                     // empty on success
    std::optional<Discrepancy> discrepancy; // first differing coefficient, when there is one
    double ms = 0;
};

struct VerificationReport {
    std::vector<IdentityOutcome> outcomes;
    int max_n = 0;
    double ms = 0;

    bool passed() const
    {
        for (const auto& o : outcomes)
            if (!o.pass) return false;
        return true;
    }

    const IdentityOutcome* first_failure() const
    {
        for (const auto& o : outcomes)
            if (!o.pass) return &o;
        return nullptr;
    }

    void merge(VerificationReport other)
    {
        for (auto& o : other.outcomes) outcomes.push_back(std::move(o));
        max_n = std::max(max_n, other.max_n);
        ms += other.ms;
    }
};

inline std::string describe(const Discrepancy& d)
{
    return "coefficient of q^" + std::to_string(d.q_power) + " at " + d.partition.to_string() + ": " +
           d.lhs.get_str() + " vs " + d.rhs.get_str();
}

inline void to_json(nlohmann::json& j, const IdentityOutcome& o)
{
    j = nlohmann::json{{"check", o.check}, {"identity", o.identity}, {"n", o.n},
                       {"pass", o.pass},   {"ms", static_cast<long>(o.ms)}};
    if (!o.detail.empty()) j["detail"] = o.detail;
    if (o.discrepancy)
        j["discrepancy"] = {{"partition", o.discrepancy->partition.parts()},
                            {"q", o.discrepancy->q_power},
                            {"lhs", o.discrepancy->lhs.get_str()},
                            {"rhs", o.discrepancy->rhs.get_str()}};
}

inline nlohmann::json report_json(const VerificationReport& r, bool with_timing = true)
{
    nlohmann::json outcomes = nlohmann::json::array();
    for (const auto& o : r.outcomes) {
        nlohmann::json j = o;
        if (!with_timing) j["ms"] = 0;
        outcomes.push_back(std::move(j));
    }
    nlohmann::json j{{"passed", r.passed()},
                     {"max_n", r.max_n},
                     {"ms", with_timing ? static_cast<long>(r.ms) : 0L},
                     {"outcomes", outcomes}};
    if (const auto* f = r.first_failure()) j["first_failure"] = *f;
    return j;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs body and records the outcome. Exceptions are failures, not errors.
class Recorder {
public:
    explicit Recorder(Check c) : check_(check_name(c)) {}

    void run(const std::string& identity, int n, const std::function<std::optional<std::string>()>& body)
    {
        auto t0 = Clock::now();
        IdentityOutcome o{check_, identity, n, true, {}, std::nullopt, 0};
        try {
            pending_.reset();
            if (auto why = body()) {
                o.pass = false;
                o.detail = *why;
                o.discrepancy = pending_;
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        o.ms = ms_since(t0);
        report_.max_n = std::max(report_.max_n, n);
        report_.outcomes.push_back(std::move(o));
    }

    // Compare and stash the discrepancy; returns a failure message or nothing.
    std::optional<std::string> compare(const SymFunc& lhs, const SymFunc& rhs, Basis basis = Basis::s)
    {
        if (auto d = first_difference(lhs, rhs, basis)) {
            pending_ = d;
            return describe(*d);
        }
        return std::nullopt;
    }

    VerificationReport take(Clock::time_point t0)
    {
        report_.ms = ms_since(t0);
        return std::move(report_);
    }

private:
    std::string check_;
    std::optional<Discrepancy> pending_;
    VerificationReport report_;
};

// Random symmetric function of degree d with small integer coefficients in the
// h-basis; q-free unless with_q.
inline SymFunc random_symfunc(int d, std::mt19937& rng, bool with_q = false)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    SymFunc f(d, Basis::h);
    for (const auto& lambda : partitions_of(d)) {
        QSeries c(coef(rng));
        if (with_q) c += QSeries::monomial(coef(rng), 1);
        f.add(lambda, c);
    }
    if (f.is_zero()) f.add(partitions_of(d).front(), QSeries(1));
    return f;
}

inline QSeries product_one_plus_iq(int lo, int hi)
{
    QSeries r(1);
    for (int i = lo; i <= hi; ++i) r *= QSeries::from_coeffs({Rational(1), Rational(i)});
    return r;
}

inline std::optional<std::string> compare_series(const QSeries& a, const QSeries& b)
{
    if (equal_up_to_truncation(a, b)) return std::nullopt;
    std::string sa, sb;
    for (const auto& x : a.coeffs()) sa += x.get_str() + " ";
    for (const auto& x : b.coeffs()) sb += x.get_str() + " ";
    return "series differ: [" + sa + "] vs [" + sb + "]";
}

inline std::optional<std::string> positivity_of(const SymFunc& f)
{
    if (!is_schur_positive(f)) return "negative Schur coefficient";
    if (!has_integral_schur_coefficients(f)) return "non-integral Schur coefficient";
    return std::nullopt;
}

} // namespace detail

/// Run one check for n = 1..opts.n_max (capped per check where the identity
/// has a natural bound, e.g. m <= 4 for the subtraction formula).
inline VerificationReport verify(Check check, const VerifyOptions& opts)
{
    using detail::Recorder;
    const auto t0 = detail::Clock::now();
    Recorder rec(check);
    const int N = opts.n_max;
    auto order_or = [&](int fallback) { return opts.order.value_or(fallback); };

    switch (check) {
    case Check::mpy:
        for (int n = 1; n <= N; ++n)
            rec.run("ch D = ch M", n, [&] { return rec.compare(ch_D(n), ch_M(n, order_or(n + 1))); });
        break;

    case Check::cancellation:
        for (int n = 1; n <= N; ++n)
            rec.run("ch R * ch'Lambda = s_n", n, [&] {
                return rec.compare(kronecker(ch_R(n, order_or(2 * n)), ch_lambda_primed(n)), sym_s(Partition{n}));
            });
        break;

    case Check::dn_two_formulas:
        for (int n = 1; n <= N; ++n) {
            rec.run("h-plethysm form = exterior form", n,
                    [&] { return rec.compare(ch_D_eq2(n), ch_D_alt(n), Basis::p); });
            rec.run("h-plethysm form = (1-q)^(c-1) form", n,
                    [&] { return rec.compare(ch_D_eq2(n), ch_D_remark(n), Basis::p); });
        }
        break;

    case Check::ot_factorization:
        for (int n = 1; n <= N; ++n)
            rec.run("ch OT = ch M * ch R", n, [&] {
                const int D = order_or(2 * n);
                return rec.compare(ch_OT(n, D), kronecker(ch_M(n, std::max(D, n)), ch_R(n, D)));
            });
        break;

    case Check::t_consistency:
        for (int n = 1; n <= N; ++n)
            rec.run("q^(n-1) l_n * ch R = T from OT", n, [&] {
                const int D = order_or(2 * n);
                std::vector<SymFunc> ot;
                for (int k = 1; k <= n; ++k) ot.push_back(ch_OT(k, D));
                return rec.compare(ch_T(n, D), ch_T_from_OT(n, D, ot));
            });
        break;

    case Check::genfun: {
        const int D = order_or(N + 1);
        std::optional<GradedFamily> gd, got;
        for (int n = 1; n <= N; ++n) {
            rec.run("Exp((1-q)L) component = ch D", n, [&] {
                if (!gd) gd = gen_fun_D(N, D);
                return rec.compare((*gd)[n], ch_D(n), Basis::p);
            });
            rec.run("Exp((1-q)(L*H[X/(1-q)])) component = ch OT", n, [&] {
                if (!got) got = gen_fun_OT(N, D);
                return rec.compare((*got)[n], ch_OT(n, D), Basis::p);
            });
        }
        break;
    }

    case Check::top_degree:
        for (int n = 1; n <= N; ++n) {
            rec.run("q^(n-1) coefficient of the (1-q)^(c-1) form vanishes", n, [&]() -> std::optional<std::string> {
                if (n < 2) return std::nullopt;
                SymFunc top = d_remark_form(n).q_coefficient(n - 1);
                if (!top.is_zero())
                    return rec.compare(top, SymFunc(n, Basis::p));
                return std::nullopt;
            });
            rec.run("exterior-form numerator has degree <= n-1", n, [&]() -> std::optional<std::string> {
                // (1-q) ch D_n, so one more than the degree of ch D_n
                int d = d_alt_numerator(n).q_degree();
                if (d > detail::max_q_degree_of_d(n) + 1) return "numerator has q-degree " + std::to_string(d);
                return std::nullopt;
            });
        }
        break;

    case Check::subtraction: {
        std::mt19937 rng(opts.seed);
        for (int m = 1; m <= std::min(N, 4); ++m)
            for (int j = 1; j <= 3; ++j) {
                SymFunc f = detail::random_symfunc(j, rng, true);
                SymFunc g = detail::random_symfunc(j, rng, true);
                SymFunc g0 = detail::random_symfunc(j, rng);
                rec.run("h_m[f-g] = sum (-1)^k h_{m-k}[f] e_k[g], deg g = " + std::to_string(j), m, [&] {
                    SymFunc rhs(m * j, Basis::p);
                    for (int k = 0; k <= m; ++k) {
                        SymFunc t = outer_mul(plethysm(sym_h(m - k), f), plethysm(sym_e(k), g));
                        rhs += (k % 2 ? Rational(-1) : Rational(1)) * t;
                    }
                    return rec.compare(plethysm(sym_h(m), f - g), rhs, Basis::p);
                });
                rec.run("ch'Lambda(P_m)[g] = h_m[(1-q)g], deg g = " + std::to_string(j), m, [&] {
                    return rec.compare(plethysm(ch_lambdaP_primed(m), g0),
                                       plethysm(sym_h(m), one_minus_q_power(1) * g0), Basis::p);
                });
            }
        break;
    }

    case Check::projection: {
        std::mt19937 rng(opts.seed + 1);
        for (int n = 1; n <= std::min(N, 6); ++n)
            for (const auto& lambda : partitions_of(n)) {
                rec.run("ch'Lambda(P_n) * prod f[g] = prod f[g * ch'Lambda(P_j)], lambda = " + lambda.to_string(), n,
                        [&] {
                            SymFunc lhs = SymFunc::one(), rhs = SymFunc::one();
                            for (auto [j, m] : ExponentialForm(lambda).multiplicities()) {
                                SymFunc f = detail::random_symfunc(m, rng);
                                SymFunc g = detail::random_symfunc(j, rng);
                                lhs = outer_mul(lhs, plethysm(f, g));
                                rhs = outer_mul(rhs, plethysm(f, kronecker(g, ch_lambdaP_primed(j))));
                            }
                            return rec.compare(kronecker(ch_lambdaP_primed(n), lhs), rhs, Basis::p);
                        });
            }
        break;
    }

    case Check::positivity:
        for (int n = 1; n <= N; ++n) {
            rec.run("ch C Schur-positive, integral", n, [&] { return detail::positivity_of(ch_C(n)); });
            rec.run("ch D Schur-positive, integral", n, [&] { return detail::positivity_of(ch_D(n)); });
            rec.run("ch OT Schur-positive, integral", n,
                    [&] { return detail::positivity_of(ch_OT(n, order_or(2 * n))); });
            rec.run("ch M Schur-positive, integral", n, [&] { return detail::positivity_of(ch_M(n, n + 1)); });
            rec.run("ch R Schur-positive, integral", n,
                    [&] { return detail::positivity_of(ch_R(n, order_or(2 * n))); });
            rec.run("ch T Schur-positive, integral", n,
                    [&] { return detail::positivity_of(ch_T(n, order_or(2 * n))); });
            rec.run("ch Lambda Schur-positive, integral", n, [&] { return detail::positivity_of(ch_lambda(n)); });
        }
        break;

    case Check::hilbert:
        for (int n = 1; n <= N; ++n) {
            rec.run("hilbert(ch C) = prod_{i<n} (1+iq)", n, [&] {
                return detail::compare_series(hilbert(ch_C(n)), detail::product_one_plus_iq(1, n - 1));
            });
            rec.run("hilbert(ch D) = prod_{i<n-1} (1+iq)", n, [&] {
                return detail::compare_series(hilbert(ch_D(n)), detail::product_one_plus_iq(1, n - 2));
            });
        }
        break;

    case Check::oracle: {
        using oracle::Variant;
        const auto& oo = opts.oracle_opts;
        for (int n = 1; n <= opts.oracle_n_max; ++n) {
            // One degree past the expected top degree, so vanishing is checked too.
            rec.run("oracle C = ch C", n,
                    [&] { return rec.compare(oracle::oracle_character(Variant::C, n, n, oo), ch_C(n)); });
            const int dm = std::max(n - 1, 1);
            rec.run("oracle D = ch D", n,
                    [&] { return rec.compare(oracle::oracle_character(Variant::D, n, dm, oo), ch_D(n)); });
            rec.run("oracle M = ch M", n,
                    [&] { return rec.compare(oracle::oracle_character(Variant::M, n, dm, oo), ch_M(n, n + 1)); });
            rec.run("oracle OT = ch OT through q^4", n,
                    [&] { return rec.compare(oracle::oracle_character(Variant::OT, n, 4, oo), ch_OT(n, 5)); });
            rec.run("oracle T = q^(n-1) l_n * ch R through q^4", n,
                    [&] { return rec.compare(oracle::oracle_T(n, 4, oo), ch_T(n, 5)); });
        }
        break;
    }
    }
    return rec.take(t0);
}

/// Every check in order; the oracle check only when requested.
inline VerificationReport verify_all(const VerifyOptions& opts, bool with_oracle)
{
    VerificationReport all;
    for (Check c : kAllChecks) {
        if (c == Check::oracle && !with_oracle) continue;
        all.merge(verify(c, opts));
    }
    return all;
}

} // namespace symchar
