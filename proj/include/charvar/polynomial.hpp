#ifndef CHARVAR_POLYNOMIAL_HPP
#define CHARVAR_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include <charvar/error.hpp>

namespace charvar
{

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t max_vars = 3;

// Exponent vector; slots beyond the context's variable count stay zero.
// Exponents may be negative (Laurent monomials).
using Monomial = std::array<int, max_vars>;

// Ordered list of single-letter variable names, e.g. "qt" or "qxy".
class VarContext
{
public:
    constexpr VarContext() = default;
    explicit VarContext(std::string_view names)
    {
        if (names.size() > max_vars) {
            throw context_error("too many variables in context '" + std::string(names) + "'");
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (names[i] == names[j]) {
                    throw context_error("duplicate variable in context '" + std::string(names) + "'");
                }
            }
            m_names[i] = names[i];
        }
        m_size = static_cast<std::uint8_t>(names.size());
    }

    static VarContext q()
    {
        return VarContext("q");
    }
    static VarContext t()
    {
        return VarContext("t");
    }
    static VarContext y()
    {
        return VarContext("y");
    }
    static VarContext qt()
    {
        return VarContext("qt");
    }
    static VarContext qxy()
    {
        return VarContext("qxy");
    }

    std::size_t size() const noexcept
    {
        return m_size;
    }
    char name(std::size_t i) const
    {
        return m_names.at(i);
    }
    int index_of(char v) const noexcept
    {
        for (std::size_t i = 0; i < m_size; ++i) {
            if (m_names[i] == v) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }
    std::string names() const
    {
        return std::string(m_names.data(), m_size);
    }

    friend bool operator==(const VarContext &a, const VarContext &b) noexcept
    {
        return a.m_size == b.m_size && a.m_names == b.m_names;
    }

private:
    std::array<char, max_vars> m_names{};
    std::uint8_t m_size = 0;
};

inline void require_same_context(const VarContext &a, const VarContext &b)
{
    if (!(a == b)) {
        throw context_error("variable context mismatch: (" + a.names() + ") vs (" + b.names() + ")");
    }
}

inline long total_degree(const Monomial &m) noexcept
{
    long d = 0;
    for (int e : m) {
        d += e;
    }
    return d;
}

// Graded lexicographic order, ascending.
inline bool grlex_less(const Monomial &a, const Monomial &b) noexcept
{
    const long da = total_degree(a), db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

inline Monomial mono_mul(const Monomial &a, const Monomial &b) noexcept
{
    Monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

inline Monomial mono_div(const Monomial &a, const Monomial &b) noexcept
{
    Monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

inline Monomial mono_scale(const Monomial &a, int k) noexcept
{
    Monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) {
        r[i] = a[i] * k;
    }
    return r;
}

inline bool mono_is_one(const Monomial &m) noexcept
{
    return m == Monomial{};
}

template <typename Coeff>
class Polynomial;

using IntPoly = Polynomial<Integer>;
// Public polynomial type: sparse, exact rational coefficients.
using SparsePoly = Polynomial<Rational>;

// Sparse Laurent polynomial over Integer or Rational. Terms are kept sorted
// in ascending graded-lex order with no zero coefficients.
template <typename Coeff>
class Polynomial
{
    static_assert(std::is_same_v<Coeff, Integer> || std::is_same_v<Coeff, Rational>);

public:
    using coeff_type = Coeff;
    using term_type = std::pair<Monomial, Coeff>;

    Polynomial() = default;
    explicit Polynomial(VarContext ctx) : m_ctx(ctx) {}
    Polynomial(VarContext ctx, std::vector<term_type> terms) : m_ctx(ctx), m_terms(std::move(terms))
    {
        canonicalize();
    }

    static Polynomial constant(VarContext ctx, const Coeff &c)
    {
        return monomial(ctx, Monomial{}, c);
    }
    static Polynomial monomial(VarContext ctx, const Monomial &m, const Coeff &c = Coeff(1))
    {
        Polynomial p(ctx);
        p.check_monomial(m);
        if (c != 0) {
            p.m_terms.emplace_back(m, c);
        }
        return p;
    }
    static Polynomial variable(VarContext ctx, char v, int power = 1)
    {
        const int i = ctx.index_of(v);
        if (i < 0) {
            throw context_error(std::string("variable '") + v + "' not in context (" + ctx.names() + ")");
        }
        Monomial m{};
        m[static_cast<std::size_t>(i)] = power;
        return monomial(ctx, m);
    }
    // Trusted constructor: terms already sorted, merged and nonzero.
    static Polynomial from_sorted(VarContext ctx, std::vector<term_type> terms)
    {
        Polynomial p(ctx);
        p.m_terms = std::move(terms);
        return p;
    }

    const VarContext &context() const noexcept
    {
        return m_ctx;
    }
    const std::vector<term_type> &terms() const noexcept
    {
        return m_terms;
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    bool is_constant() const noexcept
    {
        return m_terms.empty() || (m_terms.size() == 1 && mono_is_one(m_terms[0].first));
    }

    Coeff coefficient(const Monomial &m) const
    {
        auto it = std::lower_bound(m_terms.begin(), m_terms.end(), m,
                                   [](const term_type &t, const Monomial &k) { return grlex_less(t.first, k); });
        if (it != m_terms.end() && it->first == m) {
            return it->second;
        }
        return Coeff(0);
    }

    // Largest / smallest exponent of variable slot i over all terms.
    int degree(std::size_t i) const
    {
        int d = 0;
        bool first = true;
        for (const auto &[m, c] : m_terms) {
            if (first || m[i] > d) {
                d = m[i];
                first = false;
            }
        }
        return d;
    }
    int min_degree(std::size_t i) const
    {
        int d = 0;
        bool first = true;
        for (const auto &[m, c] : m_terms) {
            if (first || m[i] < d) {
                d = m[i];
                first = false;
            }
        }
        return d;
    }
    // Per-variable minimum exponents (zero polynomial: all zero).
    Monomial min_exponents() const
    {
        Monomial r{};
        for (std::size_t i = 0; i < m_ctx.size(); ++i) {
            r[i] = min_degree(i);
        }
        return r;
    }

    Polynomial operator-() const
    {
        Polynomial r(*this);
        for (auto &t : r.m_terms) {
            t.second = -t.second;
        }
        return r;
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        *this = merge(*this, o, false);
        return *this;
    }
    Polynomial &operator-=(const Polynomial &o)
    {
        *this = merge(*this, o, true);
        return *this;
    }
    friend Polynomial operator+(const Polynomial &a, const Polynomial &b)
    {
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b)
    {
        return merge(a, b, true);
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        return multiply(a, b);
    }
    Polynomial &operator*=(const Polynomial &o)
    {
        *this = multiply(*this, o);
        return *this;
    }

    friend Polynomial operator*(const Polynomial &a, const Coeff &c)
    {
        if (c == 0) {
            return Polynomial(a.m_ctx);
        }
        Polynomial r(a);
        for (auto &t : r.m_terms) {
            t.second *= c;
        }
        return r;
    }
    friend Polynomial operator*(const Coeff &c, const Polynomial &a)
    {
        return a * c;
    }

    // Multiplication by a Laurent monomial keeps the term order.
    Polynomial shifted(const Monomial &m) const
    {
        Polynomial r(*this);
        for (auto &t : r.m_terms) {
            t.first = mono_mul(t.first, m);
        }
        return r;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.m_ctx == b.m_ctx && a.m_terms == b.m_terms;
    }
    friend bool operator!=(const Polynomial &a, const Polynomial &b)
    {
        return !(a == b);
    }

private:
    void check_monomial(const Monomial &m) const
    {
        for (std::size_t i = m_ctx.size(); i < max_vars; ++i) {
            if (m[i] != 0) {
                throw context_error("monomial uses a slot outside context (" + m_ctx.names() + ")");
            }
        }
    }

    void canonicalize()
    {
        for (const auto &t : m_terms) {
            check_monomial(t.first);
        }
        std::sort(m_terms.begin(), m_terms.end(),
                  [](const term_type &a, const term_type &b) { return grlex_less(a.first, b.first); });
        std::vector<term_type> out;
        out.reserve(m_terms.size());
        for (auto &t : m_terms) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
            } else {
                if (!out.empty() && out.back().second == 0) {
                    out.pop_back();
                }
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().second == 0) {
            out.pop_back();
        }
        m_terms = std::move(out);
    }

    static Polynomial merge(const Polynomial &a, const Polynomial &b, bool subtract)
    {
        require_same_context(a.m_ctx, b.m_ctx);
        std::vector<term_type> out;
        out.reserve(a.m_terms.size() + b.m_terms.size());
        auto i = a.m_terms.begin(), j = b.m_terms.begin();
        while (i != a.m_terms.end() || j != b.m_terms.end()) {
            if (j == b.m_terms.end() || (i != a.m_terms.end() && grlex_less(i->first, j->first))) {
                out.push_back(*i++);
            } else if (i == a.m_terms.end() || grlex_less(j->first, i->first)) {
                out.emplace_back(j->first, subtract ? Coeff(-j->second) : j->second);
                ++j;
            } else {
                Coeff c = subtract ? Coeff(i->second - j->second) : Coeff(i->second + j->second);
                if (c != 0) {
                    out.emplace_back(i->first, std::move(c));
                }
                ++i;
                ++j;
            }
        }
        return from_sorted(a.m_ctx, std::move(out));
    }

    static Polynomial multiply(const Polynomial &a, const Polynomial &b);

    VarContext m_ctx;
    std::vector<term_type> m_terms;
};

namespace detail
{

// Product kernel over Integer. Accumulates into a dense box when the
// exponent bounding box is small relative to the work, otherwise into a
// hash table keyed by the box index.
inline std::vector<IntPoly::term_type> mul_terms(const std::vector<IntPoly::term_type> &a,
                                                 const std::vector<IntPoly::term_type> &b, std::size_t nv)
{
    using term = IntPoly::term_type;
    if (a.empty() || b.empty()) {
        return {};
    }
    Monomial amin, amax, bmin, bmax;
    amin = amax = a.front().first;
    bmin = bmax = b.front().first;
    for (const auto &t : a) {
        for (std::size_t i = 0; i < nv; ++i) {
            amin[i] = std::min(amin[i], t.first[i]);
            amax[i] = std::max(amax[i], t.first[i]);
        }
    }
    for (const auto &t : b) {
        for (std::size_t i = 0; i < nv; ++i) {
            bmin[i] = std::min(bmin[i], t.first[i]);
            bmax[i] = std::max(bmax[i], t.first[i]);
        }
    }
    std::array<std::uint64_t, max_vars> stride{};
    Monomial lo{};
    double cells_d = 1;
    std::uint64_t cells = 1;
    for (std::size_t i = nv; i-- > 0;) {
        stride[i] = cells;
        lo[i] = amin[i] + bmin[i];
        const std::uint64_t ext = static_cast<std::uint64_t>(amax[i] + bmax[i] - lo[i] + 1);
        cells_d *= static_cast<double>(ext);
        cells *= ext;
    }
    if (cells_d > 1e18) {
        throw error("polynomial product exponent range too large");
    }
    auto index_of = [&](const Monomial &m, const Monomial &base) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < nv; ++i) {
            k += static_cast<std::uint64_t>(m[i] - base[i]) * stride[i];
        }
        return k;
    };
    std::vector<std::uint64_t> ia(a.size()), ib(b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        ia[k] = index_of(a[k].first, amin);
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        ib[k] = index_of(b[k].first, bmin);
    }
    auto decode = [&](std::uint64_t k) {
        Monomial m{};
        for (std::size_t i = 0; i < nv; ++i) {
            m[i] = lo[i] + static_cast<int>(k / stride[i]);
            k %= stride[i];
        }
        return m;
    };

    std::vector<term> out;
    const double work = static_cast<double>(a.size()) * static_cast<double>(b.size());
    if (cells <= (std::uint64_t(1) << 22) && static_cast<double>(cells) <= 16 * work + 4096) {
        std::vector<Integer> acc(cells);
        std::vector<char> used(cells, 0);
        for (std::size_t x = 0; x < a.size(); ++x) {
            const mpz_srcptr ca = a[x].second.get_mpz_t();
            for (std::size_t y = 0; y < b.size(); ++y) {
                const std::uint64_t k = ia[x] + ib[y];
                mpz_addmul(acc[k].get_mpz_t(), ca, b[y].second.get_mpz_t());
                used[k] = 1;
            }
        }
        for (std::uint64_t k = 0; k < cells; ++k) {
            if (used[k] && acc[k] != 0) {
                out.emplace_back(decode(k), std::move(acc[k]));
            }
        }
    } else {
        std::unordered_map<std::uint64_t, Integer> acc;
        acc.reserve(std::min<std::size_t>(static_cast<std::size_t>(work), std::size_t(1) << 22));
        for (std::size_t x = 0; x < a.size(); ++x) {
            const mpz_srcptr ca = a[x].second.get_mpz_t();
            for (std::size_t y = 0; y < b.size(); ++y) {
                mpz_addmul(acc[ia[x] + ib[y]].get_mpz_t(), ca, b[y].second.get_mpz_t());
            }
        }
        out.reserve(acc.size());
        for (auto &[k, c] : acc) {
            if (c != 0) {
                out.emplace_back(decode(k), std::move(c));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const term &x, const term &y) { return grlex_less(x.first, y.first); });
    return out;
}

} // namespace detail

// Content (gcd of coefficients), positive; zero for the zero polynomial.
inline Integer content(const IntPoly &p)
{
    Integer g = 0;
    for (const auto &[m, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

inline IntPoly exact_scalar_divide(const IntPoly &p, const Integer &d)
{
    std::vector<IntPoly::term_type> out;
    out.reserve(p.size());
    for (const auto &[m, c] : p.terms()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        out.emplace_back(m, std::move(q));
    }
    return IntPoly::from_sorted(p.context(), std::move(out));
}

// Writes p = scale * primitive with primitive having content 1 and a
// positive lowest-order coefficient.
inline std::pair<Rational, IntPoly> primitive_split(const SparsePoly &p)
{
    if (p.is_zero()) {
        return {Rational(0), IntPoly(p.context())};
    }
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto &[m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    if (p.terms().front().second < 0) {
        num_gcd = -num_gcd;
    }
    std::vector<IntPoly::term_type> out;
    out.reserve(p.size());
    for (const auto &[m, c] : p.terms()) {
        // c * den_lcm / num_gcd is an integer
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), num_gcd.get_mpz_t());
        out.emplace_back(m, std::move(v));
    }
    Rational scale(num_gcd, den_lcm);
    scale.canonicalize();
    return {scale, IntPoly::from_sorted(p.context(), std::move(out))};
}

inline SparsePoly to_rational(const IntPoly &p, const Rational &scale = Rational(1))
{
    std::vector<SparsePoly::term_type> out;
    if (scale == 0) {
        return SparsePoly(p.context());
    }
    out.reserve(p.size());
    for (const auto &[m, c] : p.terms()) {
        out.emplace_back(m, Rational(c) * scale);
    }
    return SparsePoly::from_sorted(p.context(), std::move(out));
}

// Returns the integer polynomial when every coefficient is integral.
inline std::optional<IntPoly> to_integer(const SparsePoly &p)
{
    std::vector<IntPoly::term_type> out;
    out.reserve(p.size());
    for (const auto &[m, c] : p.terms()) {
        if (c.get_den() != 1) {
            return std::nullopt;
        }
        out.emplace_back(m, c.get_num());
    }
    return IntPoly::from_sorted(p.context(), std::move(out));
}

template <typename Coeff>
Polynomial<Coeff> Polynomial<Coeff>::multiply(const Polynomial &a, const Polynomial &b)
{
    require_same_context(a.m_ctx, b.m_ctx);
    if (a.is_zero() || b.is_zero()) {
        return Polynomial(a.m_ctx);
    }
    if constexpr (std::is_same_v<Coeff, Integer>) {
        return from_sorted(a.m_ctx, detail::mul_terms(a.m_terms, b.m_terms, a.m_ctx.size()));
    } else {
        auto [sa, pa] = primitive_split(a);
        auto [sb, pb] = primitive_split(b);
        return to_rational(pa * pb, sa * sb);
    }
}

template <typename Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff> &p, unsigned e)
{
    Polynomial<Coeff> result = Polynomial<Coeff>::constant(p.context(), Coeff(1));
    Polynomial<Coeff> base = p;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

// p * (a + b*m), m a monomial; linear time, no re-sorting.
inline IntPoly mul_binomial(const IntPoly &p, const Integer &a, const Integer &b, const Monomial &m)
{
    IntPoly lo = p * a;
    IntPoly hi = (p * b).shifted(m);
    return lo + hi;
}

namespace detail
{

inline int floor_div(int x, int y) noexcept
{
    int q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) {
        --q;
    }
    return q;
}

} // namespace detail

// Exact division of p by (a + b*m), where a > 0 and m is a non-constant
// monomial with non-negative exponents. Works along chains {base + k*m}:
// p_k = a*q_k + b*q_{k-1}, solved upward in k. Returns nullopt when the
// quotient is not an integer Laurent polynomial.
inline std::optional<IntPoly> divide_by_binomial(const IntPoly &p, const Integer &a, const Integer &b,
                                                 const Monomial &m)
{
    if (p.is_zero()) {
        return p;
    }
    std::size_t pivot = max_vars;
    for (std::size_t i = 0; i < max_vars; ++i) {
        if (m[i] > 0) {
            pivot = i;
            break;
        }
    }
    if (pivot == max_vars) {
        throw error("divide_by_binomial: monomial must be non-constant");
    }
    struct entry {
        Monomial base;
        int k;
        const Integer *c;
    };
    std::vector<entry> es;
    es.reserve(p.size());
    for (const auto &[mono, c] : p.terms()) {
        const int k = detail::floor_div(mono[pivot], m[pivot]);
        es.push_back({mono_div(mono, mono_scale(m, k)), k, &c});
    }
    std::sort(es.begin(), es.end(), [](const entry &x, const entry &y) {
        return x.base != y.base ? x.base < y.base : x.k < y.k;
    });
    const bool unit_a = (a == 1);
    std::vector<IntPoly::term_type> out;
    out.reserve(p.size());
    Integer prev, cur, tmp;
    std::size_t i = 0;
    while (i < es.size()) {
        std::size_t j = i;
        while (j < es.size() && es[j].base == es[i].base) {
            ++j;
        }
        const int k0 = es[i].k, k1 = es[j - 1].k;
        if (k0 == k1) {
            return std::nullopt;
        }
        prev = 0;
        std::size_t pos = i;
        for (int k = k0; k <= k1; ++k) {
            if (pos < j && es[pos].k == k) {
                cur = *es[pos].c;
                ++pos;
            } else {
                cur = 0;
            }
            if (prev != 0) {
                mpz_submul(cur.get_mpz_t(), b.get_mpz_t(), prev.get_mpz_t());
            }
            if (!unit_a && cur != 0) {
                if (!mpz_divisible_p(cur.get_mpz_t(), a.get_mpz_t())) {
                    return std::nullopt;
                }
                mpz_divexact(cur.get_mpz_t(), cur.get_mpz_t(), a.get_mpz_t());
            }
            if (k == k1) {
                if (cur != 0) {
                    return std::nullopt;
                }
            } else if (cur != 0) {
                out.emplace_back(mono_mul(es[i].base, mono_scale(m, k)), cur);
            }
            std::swap(prev, cur);
        }
        i = j;
    }
    std::sort(out.begin(), out.end(), [](const IntPoly::term_type &x, const IntPoly::term_type &y) {
        return grlex_less(x.first, y.first);
    });
    return IntPoly::from_sorted(p.context(), std::move(out));
}

namespace detail
{

// Recognises unit * (a + b*m) with a > 0, gcd(a,b) = 1 and m a non-constant
// monomial with non-negative exponents.
struct binomial_shape {
    Rational unit_coeff;
    Monomial unit_mono;
    Integer a, b;
    Monomial m;
};

inline std::optional<binomial_shape> as_binomial(const SparsePoly &p)
{
    if (p.size() != 2) {
        return std::nullopt;
    }
    const auto &[m1, c1] = p.terms()[0];
    const auto &[m2, c2] = p.terms()[1];
    Monomial lo = m1, hi = m2;
    Rational clo = c1, chi = c2;
    Monomial ratio = mono_div(hi, lo);
    bool nonneg = std::all_of(ratio.begin(), ratio.end(), [](int e) { return e >= 0; });
    if (!nonneg) {
        Monomial inv = mono_div(lo, hi);
        if (!std::all_of(inv.begin(), inv.end(), [](int e) { return e >= 0; })) {
            return std::nullopt;
        }
        std::swap(lo, hi);
        std::swap(clo, chi);
        ratio = inv;
    }
    // clo*lo + chi*hi = lo * (clo + chi*ratio)
    Integer num_g, den_l;
    mpz_gcd(num_g.get_mpz_t(), clo.get_num_mpz_t(), chi.get_num_mpz_t());
    mpz_lcm(den_l.get_mpz_t(), clo.get_den_mpz_t(), chi.get_den_mpz_t());
    Rational content(num_g, den_l);
    content.canonicalize();
    if (clo < 0) {
        content = -content;
    }
    Rational a = clo / content, b = chi / content;
    return binomial_shape{content, lo, a.get_num(), b.get_num(), ratio};
}

} // namespace detail

// Exact quotient num / div in the Laurent polynomial ring. Throws
// not_divisible when no such quotient exists.
inline SparsePoly divide_exact(const SparsePoly &num, const SparsePoly &div)
{
    require_same_context(num.context(), div.context());
    if (div.is_zero()) {
        throw not_divisible("division by the zero polynomial");
    }
    if (num.is_zero()) {
        return num;
    }
    if (div.size() == 1) {
        const auto &[m, c] = div.terms()[0];
        Monomial inv = mono_scale(m, -1);
        return num.shifted(inv) * Rational(Rational(1) / c);
    }
    if (auto shape = detail::as_binomial(div)) {
        auto [s, p] = primitive_split(num);
        auto q = divide_by_binomial(p, shape->a, shape->b, shape->m);
        if (!q) {
            throw not_divisible("polynomial is not divisible by the binomial divisor");
        }
        Monomial inv = mono_scale(shape->unit_mono, -1);
        return to_rational(*q, s / shape->unit_coeff).shifted(inv);
    }
    // General case: shift both operands so every variable has minimum
    // exponent zero; the quotient is then an ordinary polynomial and
    // leading-term division decides exact divisibility.
    const VarContext ctx = num.context();
    const Monomial nmin = num.min_exponents(), dmin = div.min_exponents();
    const SparsePoly d = div.shifted(mono_scale(dmin, -1));
    SparsePoly r = num.shifted(mono_scale(nmin, -1));
    const auto &[dlead_m, dlead_c] = d.terms().back();
    std::vector<SparsePoly::term_type> quot;
    while (!r.is_zero()) {
        const auto &[rm, rc] = r.terms().back();
        Monomial qm = mono_div(rm, dlead_m);
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            if (qm[i] < 0) {
                throw not_divisible("polynomial is not divisible by the divisor");
            }
        }
        Rational qc = rc / dlead_c;
        r -= SparsePoly::monomial(ctx, qm, qc) * d;
        quot.emplace_back(qm, qc);
    }
    return SparsePoly(ctx, std::move(quot)).shifted(mono_div(nmin, dmin));
}

// Raises a rational to an integer power; negative powers of zero throw.
inline Rational rational_pow(const Rational &x, int e)
{
    if (e < 0) {
        if (x == 0) {
            throw negative_exponent_at_zero("negative power of zero");
        }
        return rational_pow(Rational(1) / x, -e);
    }
    Rational r = 1, b = x;
    unsigned k = static_cast<unsigned>(e);
    while (k > 0) {
        if (k & 1U) {
            r *= b;
        }
        k >>= 1U;
        if (k > 0) {
            b *= b;
        }
    }
    return r;
}

// A variable is either replaced by a rational value or renamed to another
// variable (which merges like terms when two variables are fused).
using Substitution = std::variant<Rational, char>;
using Assignment = std::map<char, Substitution>;

// Evaluates/renames variables. The result context keeps the untouched
// variables in their original order, followed by any new rename targets.
inline SparsePoly specialize(const SparsePoly &f, const Assignment &assignment)
{
    const VarContext &src = f.context();
    for (const auto &[v, s] : assignment) {
        if (src.index_of(v) < 0) {
            throw context_error(std::string("cannot specialize '") + v + "': not in context (" + src.names() + ")");
        }
    }
    std::string names;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!assignment.count(src.name(i))) {
            names.push_back(src.name(i));
        }
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = assignment.find(src.name(i));
        if (it != assignment.end() && std::holds_alternative<char>(it->second)) {
            const char target = std::get<char>(it->second);
            if (names.find(target) == std::string::npos) {
                names.push_back(target);
            }
        }
    }
    const VarContext dst(names);
    std::array<int, max_vars> slot{};
    std::array<const Rational *, max_vars> value{};
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = assignment.find(src.name(i));
        if (it == assignment.end()) {
            slot[i] = dst.index_of(src.name(i));
            value[i] = nullptr;
        } else if (std::holds_alternative<char>(it->second)) {
            slot[i] = dst.index_of(std::get<char>(it->second));
            value[i] = nullptr;
        } else {
            slot[i] = -1;
            value[i] = &std::get<Rational>(it->second);
        }
    }
    std::vector<SparsePoly::term_type> out;
    out.reserve(f.size());
    for (const auto &[m, c] : f.terms()) {
        Monomial nm{};
        Rational nc = c;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (slot[i] >= 0) {
                nm[static_cast<std::size_t>(slot[i])] += m[i];
            } else if (m[i] != 0) {
                if (*value[i] == 0 && m[i] < 0) {
                    throw negative_exponent_at_zero(std::string("variable '") + src.name(i) +
                                                    "' set to 0 has a negative exponent");
                }
                nc *= rational_pow(*value[i], m[i]);
            }
        }
        out.emplace_back(nm, std::move(nc));
    }
    return SparsePoly(dst, std::move(out));
}

// Full evaluation to a rational number; every variable must be assigned.
inline Rational evaluate(const SparsePoly &f, const std::map<char, Rational> &point)
{
    Assignment a;
    for (const auto &[v, x] : point) {
        a.emplace(v, x);
    }
    SparsePoly r = specialize(f, a);
    if (r.context().size() != 0) {
        throw context_error("evaluate: not every variable was assigned");
    }
    return r.coefficient(Monomial{});
}

inline std::string coeff_to_string(const Rational &c)
{
    return c.get_str();
}
inline std::string coeff_to_string(const Integer &c)
{
    return c.get_str();
}

inline std::string monomial_to_string(const VarContext &ctx, const Monomial &m)
{
    std::string s;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += '*';
        }
        s += ctx.name(i);
        if (m[i] != 1) {
            s += '^';
            s += std::to_string(m[i]);
        }
    }
    return s;
}

// Canonical text rendering, ascending graded-lex, e.g. "1 - 4*q^2 + 6*q^4".
template <typename Coeff>
std::string to_string(const Polynomial<Coeff> &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        const bool neg = c < 0;
        const Coeff mag = neg ? Coeff(-c) : c;
        if (first) {
            if (neg) {
                s += '-';
            }
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        const std::string mono = monomial_to_string(p.context(), m);
        if (mono.empty()) {
            s += coeff_to_string(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += coeff_to_string(mag) + "*" + mono;
        }
    }
    return s;
}

} // namespace charvar

#endif
