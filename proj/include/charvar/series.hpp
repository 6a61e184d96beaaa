#ifndef CHARVAR_SERIES_HPP
#define CHARVAR_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include <charvar/error.hpp>
#include <charvar/fraction.hpp>
#include <charvar/partitions.hpp>
#include <charvar/polynomial.hpp>

namespace charvar
{

namespace detail
{

inline bool is_one(const Rational &r)
{
    return r == 1;
}
inline bool is_one(const FactoredFraction &f)
{
    return equivalent(f, FactoredFraction::one(f.context()));
}

} // namespace detail

// Logarithm of a truncated series with constant term 1:
//   m U_m = m S_m - sum_{k=1}^{m-1} k U_k S_{m-k}.
// Works over any commutative ring that admits scaling by rationals.
template <typename Ring>
std::vector<Ring> log_coefficients(const std::vector<Ring> &s)
{
    if (s.empty() || !detail::is_one(s[0])) {
        throw constant_term_not_one("series logarithm needs constant term 1");
    }
    std::vector<Ring> u(s.size(), s[0] * Rational(0));
    for (std::size_t m = 1; m < s.size(); ++m) {
        Ring acc = s[m] * Rational(static_cast<long>(m));
        for (std::size_t k = 1; k < m; ++k) {
            acc = acc - (u[k] * s[m - k]) * Rational(static_cast<long>(k));
        }
        u[m] = acc * Rational(1, static_cast<long>(m));
    }
    return u;
}

// Power series in T truncated after T^order, FactoredFraction coefficients.
class TruncatedSeries
{
public:
    TruncatedSeries(Flavor flavor, int genus, std::vector<FactoredFraction> coeffs)
        : m_flavor(flavor), m_genus(genus), m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw error("truncated series needs at least the constant coefficient");
        }
    }

    Flavor flavor() const noexcept
    {
        return m_flavor;
    }
    int genus() const noexcept
    {
        return m_genus;
    }
    int order() const noexcept
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    const FactoredFraction &operator[](int m) const
    {
        return m_coeffs.at(static_cast<std::size_t>(m));
    }
    const std::vector<FactoredFraction> &coefficients() const noexcept
    {
        return m_coeffs;
    }

private:
    Flavor m_flavor;
    int m_genus;
    std::vector<FactoredFraction> m_coeffs;
};

// Coefficient of T^m is the sum of hook terms over all partitions of m.
inline TruncatedSeries rhs_series(Flavor flavor, int g, int nmax)
{
    if (nmax < 0) {
        throw error("rhs_series: nmax must be non-negative");
    }
    const VarContext ctx = flavor_context(flavor);
    std::vector<FactoredFraction> coeffs;
    coeffs.reserve(static_cast<std::size_t>(nmax) + 1);
    coeffs.push_back(FactoredFraction::one(ctx));
    for (int m = 1; m <= nmax; ++m) {
        FactoredFraction sum(ctx);
        for (const auto &lambda : partitions_of(m)) {
            sum += hook_term(flavor, g, lambda);
        }
        coeffs.push_back(std::move(sum));
    }
    return TruncatedSeries(flavor, g, std::move(coeffs));
}

inline TruncatedSeries series_log(const TruncatedSeries &s)
{
    return TruncatedSeries(s.flavor(), s.genus(), log_coefficients(s.coefficients()));
}

// Inverts prod_n Z_n(T^n) = RHS where Z_n = exp(sum_r psi_r[V_n] T^r / r):
// log RHS has coefficients U_m = sum_{r | m} (1/r) psi_r[V_{m/r}], solved by
//   V_m = U_m - sum_{r | m, r > 1} (1/r) psi_r[V_{m/r}].
// Returns V_1..V_nmax.
inline std::vector<FactoredFraction> extract_V_from_log(const TruncatedSeries &log_rhs)
{
    const int nmax = log_rhs.order();
    std::vector<FactoredFraction> v;
    v.reserve(static_cast<std::size_t>(nmax));
    for (int m = 1; m <= nmax; ++m) {
        FactoredFraction vm = log_rhs[m];
        for (int r = 2; r <= m; ++r) {
            if (m % r == 0) {
                vm -= adams_substitute(v[static_cast<std::size_t>(m / r - 1)], r, log_rhs.flavor()) *
                      Rational(1, r);
            }
        }
        v.push_back(std::move(vm));
    }
    return v;
}

inline std::vector<FactoredFraction> extract_V(Flavor flavor, int g, int nmax)
{
    if (nmax < 1) {
        throw error("extract_V: nmax must be positive");
    }
    return extract_V_from_log(series_log(rhs_series(flavor, g, nmax)));
}

inline const char *invariant_symbol(Flavor flavor)
{
    switch (flavor) {
        case Flavor::E:
            return "E";
        case Flavor::QT:
            return "H(q,t)";
        case Flavor::XY:
            return "H(q,x,y)";
        case Flavor::Pure:
            return "PP";
    }
    return "?";
}

// Solves the defining relation between V_n and the named invariant and
// asserts the result is an integer polynomial.
//   E:    E_n = V_n q^{-(1-g)n(n-1)} (q-1)^{-(2g-2)}
//   qt:   H_n = V_n (q t^2 - 1)(q - 1) (q t^2)^{-(1-g)n(n-1)} (q t + 1)^{-2g}
//   xy:   H_n = V_n (q x y - 1)(q - 1) (q x y)^{-(1-g)n(n-1)} (q x + 1)^{-g} (q y + 1)^{-g}
//   pure: PP_n = V_n (1 - t^2) t^{-2(1-g)n(n-1)}
inline SparsePoly invariant_from_V(Flavor flavor, int n, int g, const FactoredFraction &vn)
{
    const VarContext ctx = flavor_context(flavor);
    require_same_context(ctx, vn.context());
    const int e = (1 - g) * n * (n - 1);
    auto poly = [&](std::vector<std::pair<Monomial, long>> terms) {
        std::vector<SparsePoly::term_type> ts;
        for (auto &[m, c] : terms) {
            ts.emplace_back(m, Rational(c));
        }
        return SparsePoly(ctx, std::move(ts));
    };
    auto mono = [&](Monomial m) { return SparsePoly::monomial(ctx, m); };
    FactoredFraction norm = FactoredFraction::one(ctx);
    switch (flavor) {
        case Flavor::E:
            norm = FactoredFraction(mono({-e, 0, 0}));
            norm *= FactoredFraction::power_of(poly({{{1, 0, 0}, 1}, {{0, 0, 0}, -1}}), -(2 * g - 2));
            break;
        case Flavor::QT:
            norm = FactoredFraction(poly({{{1, 2, 0}, 1}, {{0, 0, 0}, -1}}) * poly({{{1, 0, 0}, 1}, {{0, 0, 0}, -1}}) *
                                    mono({-e, -2 * e, 0}));
            norm *= FactoredFraction::power_of(poly({{{1, 1, 0}, 1}, {{0, 0, 0}, 1}}), -2 * g);
            break;
        case Flavor::XY:
            norm = FactoredFraction(poly({{{1, 1, 1}, 1}, {{0, 0, 0}, -1}}) * poly({{{1, 0, 0}, 1}, {{0, 0, 0}, -1}}) *
                                    mono({-e, -e, -e}));
            norm *= FactoredFraction::power_of(poly({{{1, 1, 0}, 1}, {{0, 0, 0}, 1}}), -g);
            norm *= FactoredFraction::power_of(poly({{{1, 0, 1}, 1}, {{0, 0, 0}, 1}}), -g);
            break;
        case Flavor::Pure:
            norm = FactoredFraction(poly({{{0, 0, 0}, 1}, {{2, 0, 0}, -1}}) * mono({-2 * e, 0, 0}));
            break;
    }
    const std::string where
        = std::string(invariant_symbol(flavor)) + " n=" + std::to_string(n) + " g=" + std::to_string(g);
    SparsePoly result;
    try {
        result = as_polynomial(vn * norm);
    } catch (const not_polynomial &ex) {
        throw not_polynomial(ex.factor(), where);
    }
    for (const auto &[m, c] : result.terms()) {
        if (c.get_den() != 1) {
            throw non_integer_coefficient("non-integer coefficient " + c.get_str() + " in " + where);
        }
    }
    return result;
}

} // namespace charvar

#endif
