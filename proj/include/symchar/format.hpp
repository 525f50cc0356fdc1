#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "combinat.hpp"
#include "symfunc.hpp"

namespace symchar {

inline constexpr const char* kVersion = "1.0.0";

/// One rendered coefficient: c * q^q_power * b_partition.
struct RenderedTerm {
    int q = 0;
    Partition partition;
    Rational coeff;
};

/// Terms sorted by q-power, then partitions in increasing lexicographic order.
inline std::vector<RenderedTerm> rendered_terms(const SymFunc& f)
{
    std::vector<RenderedTerm> out;
    for (const auto& [lambda, c] : f.terms())
        for (int k = 0; k <= c.degree(); ++k)
            if (c[k] != 0) out.push_back({k, lambda, c[k]});
    std::stable_sort(out.begin(), out.end(), [](const RenderedTerm& a, const RenderedTerm& b) {
        return std::tie(a.q, a.partition) < std::tie(b.q, b.partition);
    });
    return out;
}

inline bool is_multiplicative(Basis b) { return b == Basis::p || b == Basis::h || b == Basis::e; }

// "2^3,1" for multiplicative bases, "2,2,2,1" otherwise.
inline std::string partition_label(const Partition& lambda, Basis b, bool latex = false)
{
    std::string s;
    if (is_multiplicative(b)) {
        ExponentialForm ef(lambda);
        const auto& mult = ef.multiplicities();
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
            if (!s.empty()) s += ",";
            s += std::to_string(it->first);
            if (it->second > 1)
                s += latex ? "^{" + std::to_string(it->second) + "}" : "^" + std::to_string(it->second);
        }
    } else {
        for (int p : lambda) {
            if (!s.empty()) s += ",";
            s += std::to_string(p);
        }
    }
    return s;
}

/// Plain-text rendering, e.g. "s[3] + q*s[1,1,1]" or "(1/6)p[1^6] - (1/6)p[2^3]".
inline std::string render_text(const SymFunc& f)
{
    const auto terms = rendered_terms(f);
    std::string out;
    const std::string b(basis_name(f.basis()));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        Rational mag = abs(t.coeff);
        bool neg = t.coeff < 0;
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string coef;
        if (mag.get_den() != 1)
            coef = "(" + mag.get_str() + ")";
        else if (mag != 1)
            coef = mag.get_str() + "*";
        std::string q;
        if (t.q == 1) q = "q*";
        else if (t.q > 1) q = "q^" + std::to_string(t.q) + "*";
        out += coef + q + b + "[" + partition_label(t.partition, f.basis()) + "]";
    }
    if (terms.empty()) out = "0";
    if (!f.is_exact()) out += " + O(q^" + std::to_string(f.order()) + ")";
    return out;
}

/// LaTeX rendering in the usual notation, e.g. "s_{3} + q s_{1,1,1}".
inline std::string render_latex(const SymFunc& f)
{
    const auto terms = rendered_terms(f);
    std::string out;
    const std::string b(basis_name(f.basis()));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        Rational mag = abs(t.coeff);
        bool neg = t.coeff < 0;
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string coef;
        if (mag.get_den() != 1)
            coef = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "} ";
        else if (mag != 1)
            coef = mag.get_str() + " ";
        std::string q;
        if (t.q == 1) q = "q ";
        else if (t.q > 1) q = "q^{" + std::to_string(t.q) + "} ";
        out += coef + q + b + "_{" + partition_label(t.partition, f.basis(), true) + "}";
    }
    if (terms.empty()) out = "0";
    if (!f.is_exact()) out += " + O(q^{" + std::to_string(f.order()) + "})";
    return out;
}

// ---------------------------------------------------------------------------
// JSON output record

struct OutputTerm {
    int q = 0;
    std::vector<int> partition;
    std::string coeff; // exact "p/q" or "p"

    friend bool operator==(const OutputTerm&, const OutputTerm&) = default;
};

struct OutputMeta {
    std::string version = kVersion;
    long ms = 0;
    long cache_hits = 0;
    long table_ms = 0;

    friend bool operator==(const OutputMeta&, const OutputMeta&) = default;
};

struct OutputRecord {
    std::string formula;
    int n = 0;
    std::string basis;
    int max_q_degree = 0; // truncation order D
    std::vector<OutputTerm> terms;
    OutputMeta meta;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline void to_json(nlohmann::json& j, const OutputTerm& t)
{
    j = nlohmann::json{{"q", t.q}, {"partition", t.partition}, {"coeff", t.coeff}};
}

inline void from_json(const nlohmann::json& j, OutputTerm& t)
{
    j.at("q").get_to(t.q);
    j.at("partition").get_to(t.partition);
    j.at("coeff").get_to(t.coeff);
}

inline void to_json(nlohmann::json& j, const OutputMeta& m)
{
    j = nlohmann::json{{"version", m.version}, {"ms", m.ms}, {"cache_hits", m.cache_hits}, {"table_ms", m.table_ms}};
}

inline void from_json(const nlohmann::json& j, OutputMeta& m)
{
    j.at("version").get_to(m.version);
    j.at("ms").get_to(m.ms);
    m.cache_hits = j.value("cache_hits", 0L);
    m.table_ms = j.value("table_ms", 0L);
}

inline void to_json(nlohmann::json& j, const OutputRecord& r)
{
    j = nlohmann::json{{"formula", r.formula}, {"n", r.n},       {"basis", r.basis}, {"max_q_degree", r.max_q_degree},
                       {"terms", r.terms},     {"meta", r.meta}};
}

inline void from_json(const nlohmann::json& j, OutputRecord& r)
{
    j.at("formula").get_to(r.formula);
    j.at("n").get_to(r.n);
    j.at("basis").get_to(r.basis);
    j.at("max_q_degree").get_to(r.max_q_degree);
    j.at("terms").get_to(r.terms);
    j.at("meta").get_to(r.meta);
}

/// Record for a function already expressed in the basis to report.
inline OutputRecord make_record(std::string formula, int n, int truncation, const SymFunc& f)
{
    OutputRecord r;
    r.formula = std::move(formula);
    r.n = n;
    r.basis = std::string(basis_name(f.basis()));
    r.max_q_degree = truncation;
    for (const auto& t : rendered_terms(f)) r.terms.push_back({t.q, t.partition.parts(), t.coeff.get_str()});
    return r;
}

/// Rebuild the symmetric function described by a record.
inline SymFunc record_to_symfunc(const OutputRecord& r)
{
    auto basis = parse_basis(r.basis);
    if (!basis) throw std::invalid_argument("unknown basis '" + r.basis + "'");
    SymFunc f(r.n, *basis);
    for (const auto& t : r.terms) {
        Rational c(t.coeff);
        c.canonicalize();
        f.add(Partition(t.partition), QSeries::monomial(c, t.q));
    }
    return f;
}

} // namespace symchar
