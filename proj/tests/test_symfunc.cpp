#include <gtest/gtest.h>

#include <functional>
#include <map>

#include <symchar/symfunc.hpp>

using namespace symchar;

namespace {

// Independent reference: explicit polynomials in N commuting variables.
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

void add_to(Poly& acc, const Poly& p, const Rational& c = 1)
{
    for (const auto& [e, x] : p) {
        auto& slot = acc[e];
        slot += c * x;
        if (slot == 0) acc.erase(e);
    }
}

Poly mul(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ea, xa] : a)
        for (const auto& [eb, xb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_to(r, Poly{{e, xa * xb}});
        }
    return r;
}

Poly constant(int nvars, const Rational& c = 1) { return Poly{{Exponents(nvars, 0), c}}; }

// Elementary products over an arbitrary "alphabet" of monomials with weights,
// so the same code evaluates f(x) and plethysms f[g] for g monomial-positive.
using Alphabet = std::vector<Poly>;

Alphabet variables(int nvars)
{
    Alphabet a;
    for (int i = 0; i < nvars; ++i) {
        Exponents e(nvars, 0);
        e[i] = 1;
        a.push_back(Poly{{e, 1}});
    }
    return a;
}

// Alphabet made of the monomials of g, each repeated by its coefficient.
Alphabet alphabet_of(const Poly& g)
{
    Alphabet a;
    for (const auto& [e, c] : g) {
        EXPECT_EQ(c.get_den(), 1);
        for (long i = 0; i < c.get_num().get_si(); ++i) a.push_back(Poly{{e, 1}});
    }
    return a;
}

Poly power_sum(const Alphabet& a, int k, int nvars)
{
    Poly r;
    for (const auto& x : a) {
        Poly t = constant(nvars);
        for (int i = 0; i < k; ++i) t = mul(t, x);
        add_to(r, t);
    }
    return r;
}

// Multisets (complete) or subsets (elementary) of size k.
Poly choose(const Alphabet& a, int k, bool repeat, int nvars)
{
    Poly r;
    std::function<void(std::size_t, int, const Poly&)> rec = [&](std::size_t start, int left, const Poly& acc) {
        if (left == 0) {
            add_to(r, acc);
            return;
        }
        for (std::size_t i = start; i < a.size(); ++i) rec(repeat ? i : i + 1, left - 1, mul(acc, a[i]));
    };
    rec(0, k, constant(nvars));
    return r;
}

Poly monomial_symmetric(const Partition& l, int nvars)
{
    Exponents e(l.begin(), l.end());
    if (static_cast<int>(e.size()) > nvars) return {};
    e.resize(nvars, 0);
    std::sort(e.begin(), e.end());
    Poly r;
    do r[e] = 1;
    while (std::next_permutation(e.begin(), e.end()));
    return r;
}

// Schur polynomial from semistandard tableaux, no character theory involved.
Poly schur(const Partition& l, int nvars)
{
    Poly r;
    std::vector<std::vector<int>> t;
    for (int len : l) t.emplace_back(len, 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < l.length(); ++i)
        for (int j = 0; j < l[i]; ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
        if (c == cells.size()) {
            Exponents e(nvars, 0);
            for (const auto& row : t)
                for (int x : row) ++e[x];
            add_to(r, Poly{{e, 1}});
            return;
        }
        auto [i, j] = cells[c];
        int lo = 0;
        if (j > 0) lo = t[i][j - 1];
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v < nvars; ++v) {
            t[i][j] = v;
            fill(c + 1);
        }
    };
    fill(0);
    return r;
}

Poly basis_element(Basis b, const Partition& l, const Alphabet& a, int nvars)
{
    switch (b) {
    case Basis::s: return schur(l, nvars);
    case Basis::m: return monomial_symmetric(l, nvars);
    default: break;
    }
    Poly r = constant(nvars);
    for (int part : l) {
        if (b == Basis::p) r = mul(r, power_sum(a, part, nvars));
        if (b == Basis::h) r = mul(r, choose(a, part, true, nvars));
        if (b == Basis::e) r = mul(r, choose(a, part, false, nvars));
    }
    return r;
}

// Expand a q-free SymFunc through the reference polynomials of its own basis.
Poly expand(const SymFunc& f, int nvars)
{
    Poly r;
    Alphabet x = variables(nvars);
    for (const auto& [l, c] : f.terms()) {
        EXPECT_LE(c.degree(), 0);
        add_to(r, basis_element(f.basis(), l, x, nvars), c[0]);
    }
    return r;
}

const Basis kBases[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

SymFunc s_of(std::initializer_list<int> l) { return sym_s(Partition(l)); }

} // namespace

TEST(CharacterTable, SmallTables)
{
    auto t1 = compute_character_table(1);
    EXPECT_EQ(t1.values(), (std::vector<std::vector<std::int64_t>>{{1}}));
    auto t2 = compute_character_table(2);
    EXPECT_EQ(t2(Partition{2}, Partition{1, 1}), 1);
    EXPECT_EQ(t2(Partition{2}, Partition{2}), 1);
    EXPECT_EQ(t2(Partition{1, 1}, Partition{1, 1}), 1);
    EXPECT_EQ(t2(Partition{1, 1}, Partition{2}), -1);
    auto t3 = compute_character_table(3);
    EXPECT_EQ(t3(Partition{2, 1}, Partition{1, 1, 1}), 2);
    EXPECT_EQ(t3(Partition{2, 1}, Partition{2, 1}), 0);
    EXPECT_EQ(t3(Partition{2, 1}, Partition{3}), -1);
}

TEST(CharacterTable, OrthogonalityAndHookLengths)
{
    for (int n = 1; n <= 10; ++n) {
        auto t = compute_character_table(n);
        const auto& ps = t.partitions();
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = 0; b < ps.size(); ++b) {
                Integer col = 0;
                for (std::size_t l = 0; l < ps.size(); ++l) col += Integer(t(l, a)) * Integer(t(l, b));
                EXPECT_EQ(col, a == b ? z_of(ps[a]) : Integer(0));
            }
        // Dimension from the hook length formula.
        const auto ones = ps.size() - 1;
        for (std::size_t l = 0; l < ps.size(); ++l) {
            Integer hooks = 1;
            Partition conj = ps[l].conjugate();
            for (int i = 0; i < ps[l].length(); ++i)
                for (int j = 0; j < ps[l][i]; ++j) hooks *= ps[l][i] - j + conj[j] - i - 1;
            EXPECT_EQ(Integer(t(l, ones)), factorial(n) / hooks);
            EXPECT_GT(t(l, ones), 0);
        }
    }
}

TEST(CharacterTable, StoreMemoizes)
{
    auto a = character_table(7);
    auto b = character_table(7);
    EXPECT_EQ(a.get(), b.get());
    EXPECT_EQ(*a, compute_character_table(7));
}

TEST(Basis, ParseAndName)
{
    for (Basis b : kBases) EXPECT_EQ(parse_basis(basis_name(b)), b);
    EXPECT_FALSE(parse_basis("x").has_value());
}

TEST(Conversion, MatchesPolynomialReference)
{
    // n variables are enough to separate degree-n symmetric functions.
    for (int n = 1; n <= 4; ++n)
        for (Basis from : kBases)
            for (const auto& l : partitions_of(n)) {
                SymFunc f = SymFunc::term(from, l);
                Poly ref = expand(f, n);
                for (Basis to : kBases)
                    EXPECT_EQ(expand(basis_convert(f, to), n), ref)
                        << basis_name(from) << l << " -> " << basis_name(to);
            }
}

TEST(Conversion, RoundTripsThroughP)
{
    for (int n = 1; n <= 12; ++n)
        for (Basis b : kBases) {
            const auto ps = partitions_of(n);
            // Every basis element at small n, a spread sample at larger n.
            const std::size_t stride = n <= 8 ? 1 : 7;
            for (std::size_t i = 0; i < ps.size(); i += stride) {
                SymFunc f = SymFunc::term(b, ps[i], QSeries::from_coeffs({Rational(1), Rational(-2, 3)}));
                SymFunc back = basis_convert(to_p(f), b);
                EXPECT_EQ(back.terms(), f.terms()) << basis_name(b) << ps[i];
            }
        }
}

TEST(Conversion, NamedExamples)
{
    EXPECT_EQ(basis_convert(sym_h(3), Basis::s).terms(), s_of({3}).terms());
    SymFunc p2 = basis_convert(sym_p(Partition{2}), Basis::s);
    EXPECT_EQ(p2.terms(), (s_of({2}) - s_of({1, 1})).terms());
    SymFunc s21 = to_p(s_of({2, 1}));
    SymFunc expected = Rational(1, 3) * (sym_p(Partition{1, 1, 1}) - sym_p(Partition{3}));
    EXPECT_EQ(s21.terms(), expected.terms());
    // p_2 = s_2 - s_11 checked against three explicit variables.
    Poly diff = expand(s_of({2}), 3);
    add_to(diff, expand(s_of({1, 1}), 3), -1);
    EXPECT_EQ(expand(sym_p(Partition{2}), 3), diff);
}

TEST(Products, OuterMul)
{
    SymFunc he = basis_convert(sym_h(2) * sym_e(1), Basis::s);
    EXPECT_EQ(he.terms(), (s_of({3}) + s_of({2, 1})).terms());
    EXPECT_EQ(expand(basis_convert(sym_h(2) * sym_e(1), Basis::m), 3), mul(expand(sym_h(2), 3), expand(sym_e(1), 3)));
    SymFunc f = s_of({2, 1});
    EXPECT_EQ(outer_mul(f, SymFunc::one()), to_p(f));
    EXPECT_EQ((sym_p(Partition{2}) * sym_p(Partition{3})).terms(), sym_p(Partition{3, 2}).terms());
}

TEST(Products, Kronecker)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n)) {
            SymFunc f = sym_s(l);
            EXPECT_TRUE(equal_up_to_truncation(kronecker(sym_s(Partition{n}), f), f));
            // The sign representation transposes.
            Partition sign(std::vector<int>(static_cast<std::size_t>(n), 1));
            EXPECT_TRUE(equal_up_to_truncation(kronecker(sym_s(sign), f), sym_s(l.conjugate())));
        }
    EXPECT_TRUE(equal_up_to_truncation(kronecker(s_of({1, 1}), s_of({1, 1})), s_of({2})));
    Partition p21{2, 1};
    EXPECT_EQ(kronecker(sym_p(p21), sym_p(p21)).terms(), (Rational(2) * sym_p(p21)).terms());
    EXPECT_THROW(kronecker(s_of({2}), s_of({3})), DegreeMismatch);
    // s21 * s21 = s3 + s21 + s111
    EXPECT_TRUE(equal_up_to_truncation(kronecker(s_of({2, 1}), s_of({2, 1})),
                                       s_of({3}) + s_of({2, 1}) + s_of({1, 1, 1})));
}

TEST(Products, ScalarProductDuality)
{
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                QSeries want = a == b ? QSeries(1) : QSeries();
                EXPECT_EQ(scalar_product(sym_s(a), sym_s(b)), want);
                EXPECT_EQ(scalar_product(sym_h(a), sym_m(b)), want);
            }
    }
}

TEST(Plethysm, AgainstAlphabetReference)
{
    // f[g] for monomial-positive g is f evaluated on the monomials of g.
    const int nv = 4;
    struct Case {
        SymFunc f;
        SymFunc g;
    };
    std::vector<Case> cases{{sym_h(2), sym_h(2)}, {sym_e(2), sym_h(2)}, {sym_h(2), sym_e(2)},
                            {sym_e(2), sym_e(2)}, {sym_h(2), s_of({2, 1})}, {sym_h(3), sym_p(Partition{1})}};
    for (const auto& [f, g] : cases) {
        SymFunc fg = plethysm(f, g);
        Alphabet a = alphabet_of(expand(basis_convert(g, Basis::m), nv));
        const bool complete = f.basis() == Basis::h;
        const int m = f.degree();
        EXPECT_EQ(expand(basis_convert(fg, Basis::m), nv), choose(a, m, complete, nv));
    }
    EXPECT_TRUE(equal_up_to_truncation(plethysm(sym_h(2), sym_h(2)), s_of({4}) + s_of({2, 2})));
    EXPECT_TRUE(equal_up_to_truncation(plethysm(sym_e(2), sym_h(2)), s_of({3, 1})));
}

TEST(Plethysm, QTransformsAsPowerSum)
{
    SymFunc qx = q_power(1) * sym_p(Partition{1});
    EXPECT_EQ(plethysm(sym_p(Partition{2}), qx).terms(), (q_power(2) * sym_p(Partition{2})).terms());
    // h_2[(1-q)X] = h_2 - q h_1 e_1 + q^2 e_2
    SymFunc lhs = plethysm(sym_h(2), one_minus_q_power(1) * sym_p(Partition{1}));
    SymFunc rhs = sym_h(2) - q_power(1) * (sym_h(1) * sym_e(1)) + q_power(2) * sym_e(2);
    EXPECT_TRUE(equal_up_to_truncation(lhs, rhs));
    EXPECT_THROW(plethysm(sym_h(2), SymFunc::one()), InnerDegreeZero);
    EXPECT_TRUE(plethysm(sym_h(2), SymFunc(0)).is_zero());
}

TEST(PlethysticExp, Examples)
{
    // Exp(p_1) = sum_n h_n.
    GradedFamily x({sym_p(Partition{1}), SymFunc(2), SymFunc(3), SymFunc(4)});
    GradedFamily e = plethystic_exp(x);
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(equal_up_to_truncation(e[n], sym_h(n)));
    EXPECT_THROW(GradedFamily({sym_h(2)}), DegreeMismatch);
}

TEST(Hilbert, DimensionsOfSchurFunctions)
{
    EXPECT_EQ(hilbert(s_of({2, 1})), QSeries(2));
    EXPECT_EQ(hilbert(s_of({3, 2})), QSeries(5));
    EXPECT_EQ(hilbert(q_power(1) * s_of({2, 2}) + s_of({4})), QSeries::from_coeffs({Rational(1), Rational(2)}));
}

TEST(Positivity, SchurCoefficients)
{
    EXPECT_TRUE(is_schur_positive(sym_h(Partition{2, 1})));
    EXPECT_FALSE(is_schur_positive(sym_p(Partition{2})));
    EXPECT_TRUE(has_integral_schur_coefficients(sym_p(Partition{2})));
    EXPECT_FALSE(has_integral_schur_coefficients(Rational(1, 2) * sym_p(Partition{1, 1})));
}

TEST(ComparisonHelpers, FirstDifference)
{
    auto d = first_difference(s_of({2}) + q_power(1) * s_of({1, 1}), s_of({2}));
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->partition, Partition({1, 1}));
    EXPECT_EQ(d->q_power, 1);
    EXPECT_EQ(d->lhs, 1);
    EXPECT_EQ(d->rhs, 0);
    EXPECT_FALSE(first_difference(s_of({2}), to_p(s_of({2}))).has_value());
    EXPECT_THROW(first_difference(s_of({2}), s_of({3})), DegreeMismatch);
}
