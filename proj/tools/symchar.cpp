// symchar: graded Frobenius characters of arrangement algebras from the command line.
//
//   symchar compute --formula d --n 5 --basis s
//   symchar verify --check all --n-max 6 --oracle --oracle-n-max 4
//   symchar oracle --algebra c --n 3 --max-degree 2
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 assertion or resource failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <symchar/symchar.hpp>

namespace {

using namespace symchar;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kAssertion = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFormats{"text", "json", "latex"};

Basis basis_or_throw(const std::string& name)
{
    auto b = parse_basis(name);
    if (!b) throw UsageError("unknown basis '" + name + "'");
    return *b;
}

// Same coefficients, marked exact: the oracle computed every degree it reports.
SymFunc as_exact(const SymFunc& f)
{
    SymFunc r(f.degree(), f.basis());
    for (const auto& [lambda, c] : f.terms()) r.add(lambda, QSeries::from_coeffs(c.coeffs()));
    return r;
}

void print(const SymFunc& f, const std::string& format, const OutputRecord& record)
{
    if (format == "json")
        std::cout << nlohmann::json(record).dump(2) << "\n";
    else if (format == "latex")
        std::cout << render_latex(f) << "\n";
    else
        std::cout << render_text(f) << "\n";
}

void install_cache(const std::string& dir_flag, bool disabled, bool verbose)
{
    if (disabled) return;
    if (auto dir = resolve_cache_dir(dir_flag)) DiskTableCache(*dir, verbose).install();
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
    std::string formula;
    int n = 0;
    std::optional<int> order;
    std::string basis = "s";
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    bool no_timing = false;
    bool verbose = false;
};

int run_compute(const ComputeArgs& a)
{
    auto name = parse_char_name(a.formula);
    if (!name) throw UsageError("unknown formula '" + a.formula + "'");
    if (a.n < 1) throw UsageError("--n must be positive");
    const int order = a.order.value_or(a.n + 1);
    if (order < 1) throw UsageError("--max-q-degree must be positive");
    const Basis basis = basis_or_throw(a.basis);

    install_cache(a.cache_dir, a.no_cache, a.verbose);
    auto t0 = std::chrono::steady_clock::now();
    NamedCharacter ch = named_character(*name, a.n, order);
    SymFunc out = basis_convert(ch.value, basis);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    auto stats = CharacterTableStore::instance().stats();
    OutputRecord rec = make_record(a.formula, a.n, order, out);
    rec.meta.cache_hits = stats.hits;
    if (!a.no_timing) {
        rec.meta.ms = static_cast<long>(ms);
        rec.meta.table_ms = static_cast<long>(stats.build_ms);
    }
    if (a.verbose)
        std::cerr << "tables: " << stats.hits << " from cache, " << stats.builds << " built, " << stats.build_ms
                  << " ms\n";
    print(out, a.format, rec);
    return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string check = "all";
    int n_max = 6;
    std::optional<int> order;
    bool oracle = false;
    int oracle_n_max = 4;
    std::string format = "text";
    std::string report;
    unsigned seed = 20240601;
    bool no_timing = false;
};

void print_table(const VerificationReport& r, bool timing)
{
    // One row per (check, identity), aggregated over n.
    struct Row {
        std::string check, identity;
        int n_lo = 0, n_hi = 0, failures = 0;
        double ms = 0;
    };
    std::vector<Row> rows;
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    for (const auto& o : r.outcomes) {
        auto [it, fresh] = index.try_emplace({o.check, o.identity}, rows.size());
        if (fresh) rows.push_back({o.check, o.identity, o.n, o.n, 0, 0});
        auto& row = rows[it->second];
        row.n_lo = std::min(row.n_lo, o.n);
        row.n_hi = std::max(row.n_hi, o.n);
        row.failures += o.pass ? 0 : 1;
        row.ms += o.ms;
    }
    for (const auto& row : rows) {
        std::cout << (row.failures ? "FAIL" : "pass") << "  " << row.check << "  " << row.identity << "  [n "
                  << row.n_lo << ".." << row.n_hi << "]";
        if (timing) std::cout << "  " << static_cast<long>(row.ms) << " ms";
        std::cout << "\n";
    }
    if (const auto* f = r.first_failure())
        std::cout << "first failure: " << f->check << " (" << f->identity << ") at n=" << f->n << ": " << f->detail
                  << "\n";
    std::cout << (r.passed() ? "all identities hold" : "verification FAILED") << "\n";
}

int run_verify(const VerifyArgs& a)
{
    if (a.n_max < 1) throw UsageError("--n-max must be positive");
    if (a.oracle_n_max < 1) throw UsageError("--oracle-n-max must be positive");
    VerifyOptions opts;
    opts.n_max = a.n_max;
    opts.order = a.order;
    opts.oracle_n_max = a.oracle_n_max;
    opts.seed = a.seed;

    VerificationReport report;
    if (a.check == "all") {
        report = verify_all(opts, a.oracle);
    } else {
        auto c = parse_check(a.check);
        if (!c) throw UsageError("unknown check '" + a.check + "'");
        report = verify(*c, opts);
        if (a.oracle && *c != Check::oracle) report.merge(verify(Check::oracle, opts));
    }

    auto j = report_json(report, !a.no_timing);
    if (!a.report.empty()) {
        std::ofstream out(a.report);
        out << j.dump(2) << "\n";
        if (!out) std::cerr << "warning: cannot write report to " << a.report << "\n";
    }
    if (a.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        print_table(report, !a.no_timing);
    return report.passed() ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
    std::string algebra;
    int n = 0;
    std::optional<int> max_degree;
    std::string basis = "s";
    std::string format = "text";
    std::size_t ceiling = oracle::kDefaultMonomialCeiling;
    bool no_timing = false;
};

int run_oracle(const OracleArgs& a)
{
    auto v = oracle::parse_variant(a.algebra);
    if (!v) throw UsageError("unknown algebra '" + a.algebra + "'");
    if (a.n < 1) throw UsageError("--n must be positive");
    const int max_degree = a.max_degree.value_or(a.n - 1);
    if (max_degree < 0) throw UsageError("--max-degree must be nonnegative");
    const Basis basis = basis_or_throw(a.basis);

    auto t0 = std::chrono::steady_clock::now();
    SymFunc ch = oracle::oracle_character(*v, a.n, max_degree, {a.ceiling, true});
    SymFunc out = as_exact(basis_convert(ch, basis));
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    OutputRecord rec = make_record("oracle-" + a.algebra, a.n, max_degree + 1, out);
    if (!a.no_timing) rec.meta.ms = static_cast<long>(ms);
    print(out, a.format, rec);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graded Frobenius characters of configuration-space and Orlik-Terao algebras"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute a graded character");
    compute->add_option("--formula", ca.formula, "c, d, d_alt, ot, m, r, t, lyndon, lambda, lambdap")->required();
    compute->add_option("--n", ca.n, "Degree n")->required();
    compute->add_option("--max-q-degree", ca.order, "Truncation order D: report q^0..q^(D-1) (default n+1)");
    compute->add_option("--basis", ca.basis, "Output basis: s, p, h, e, m")->capture_default_str();
    compute->add_option("--format", ca.format, "text, json or latex")
        ->check(CLI::IsMember(kFormats))
        ->capture_default_str();
    compute->add_option("--cache-dir", ca.cache_dir, "Character-table cache directory");
    compute->add_flag("--no-cache", ca.no_cache, "Do not read or write the on-disk cache");
    compute->add_flag("--no-timing", ca.no_timing, "Zero the timing fields for reproducible output");
    compute->add_flag("--verbose,-v", ca.verbose, "Report cache activity on stderr");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Check identities between characters");
    verify_cmd->add_option("--check", va.check, "Check name or 'all'")->capture_default_str();
    verify_cmd->add_option("--n-max", va.n_max, "Largest n")->capture_default_str();
    verify_cmd->add_option("--max-q-degree", va.order, "Truncation order D (default depends on the check)");
    verify_cmd->add_flag("--oracle", va.oracle, "Also compare with the presentation oracle");
    verify_cmd->add_option("--oracle-n-max", va.oracle_n_max, "Largest n for oracle comparisons")
        ->capture_default_str();
    verify_cmd->add_option("--format", va.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify_cmd->add_option("--report", va.report, "Write the JSON report to this file");
    verify_cmd->add_option("--seed", va.seed, "Seed for randomized checks")->capture_default_str();
    verify_cmd->add_flag("--no-timing", va.no_timing, "Omit timings");

    OracleArgs oa;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force character from the presentation");
    oracle_cmd->add_option("--algebra", oa.algebra, "ot, c, d or m")->required();
    oracle_cmd->add_option("--n", oa.n, "Number of points")->required();
    oracle_cmd->add_option("--max-degree", oa.max_degree, "Highest q-degree computed (default n-1)");
    oracle_cmd->add_option("--basis", oa.basis, "Output basis")->capture_default_str();
    oracle_cmd->add_option("--format", oa.format, "text, json or latex")
        ->check(CLI::IsMember(kFormats))
        ->capture_default_str();
    oracle_cmd->add_option("--ceiling", oa.ceiling, "Refuse pieces with more monomials than this")
        ->capture_default_str();
    oracle_cmd->add_flag("--no-timing", oa.no_timing, "Zero the timing field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*compute) return run_compute(ca);
        if (*verify_cmd) return run_verify(va);
        if (*oracle_cmd) return run_oracle(oa);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotPolynomial& e) {
        std::cerr << "assertion failed (NotPolynomial): " << e.what() << "\n";
        return kAssertion;
    } catch (const TooLarge& e) {
        std::cerr << "resource limit (TooLarge): " << e.what() << "\n";
        return kAssertion;
    } catch (const IdentityViolation& e) {
        std::cerr << "assertion failed (IdentityViolation): " << e.what() << "\n";
        return kAssertion;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kAssertion;
    }
    return kUsage;
}
