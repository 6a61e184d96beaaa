#ifndef CHARVAR_FRACTION_HPP
#define CHARVAR_FRACTION_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <charvar/error.hpp>
#include <charvar/polynomial.hpp>

namespace charvar
{

// Which generating function a computation belongs to. Determines the
// variable context and how Adams operations act on the variables.
enum class Flavor { E, QT, XY, Pure };

inline VarContext flavor_context(Flavor f)
{
    switch (f) {
        case Flavor::E:
            return VarContext::q();
        case Flavor::QT:
            return VarContext::qt();
        case Flavor::XY:
            return VarContext::qxy();
        case Flavor::Pure:
            return VarContext::t();
    }
    throw context_error("unknown flavor");
}

inline const char *flavor_name(Flavor f)
{
    switch (f) {
        case Flavor::E:
            return "E";
        case Flavor::QT:
            return "qt";
        case Flavor::XY:
            return "xy";
        case Flavor::Pure:
            return "pure";
    }
    return "?";
}

// Normalized two-term factor a + b*m: a > 0, gcd(a, b) = 1, m a non-constant
// monomial with non-negative exponents. The constant term is the smallest
// monomial in graded-lex order, so "positive lowest coefficient" holds.
class BinomialFactor
{
public:
    BinomialFactor(VarContext ctx, Integer a, Integer b, Monomial m)
        : m_ctx(ctx), m_a(std::move(a)), m_b(std::move(b)), m_m(m)
    {
        if (m_a <= 0 || m_b == 0) {
            throw not_binomial("binomial factor needs a > 0 and b != 0");
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), m_a.get_mpz_t(), m_b.get_mpz_t());
        if (g != 1) {
            throw not_binomial("binomial factor must have content 1");
        }
        if (mono_is_one(m_m) || std::any_of(m_m.begin(), m_m.end(), [](int e) { return e < 0; })) {
            throw not_binomial("binomial factor monomial must be non-constant with non-negative exponents");
        }
        for (std::size_t i = ctx.size(); i < max_vars; ++i) {
            if (m_m[i] != 0) {
                throw context_error("binomial factor monomial outside context");
            }
        }
    }

    // 1 - m, the shape of every hook-term denominator.
    static BinomialFactor one_minus(VarContext ctx, const Monomial &m)
    {
        return BinomialFactor(ctx, Integer(1), Integer(-1), m);
    }

    const VarContext &context() const noexcept
    {
        return m_ctx;
    }
    const Integer &a() const noexcept
    {
        return m_a;
    }
    const Integer &b() const noexcept
    {
        return m_b;
    }
    const Monomial &m() const noexcept
    {
        return m_m;
    }

    SparsePoly poly() const
    {
        return SparsePoly(m_ctx, {{Monomial{}, Rational(m_a)}, {m_m, Rational(m_b)}});
    }
    std::string to_string() const
    {
        return charvar::to_string(poly());
    }

    friend bool operator==(const BinomialFactor &x, const BinomialFactor &y)
    {
        return x.m_m == y.m_m && x.m_a == y.m_a && x.m_b == y.m_b;
    }
    friend bool operator<(const BinomialFactor &x, const BinomialFactor &y)
    {
        if (x.m_m != y.m_m) {
            return grlex_less(x.m_m, y.m_m);
        }
        if (x.m_a != y.m_a) {
            return x.m_a < y.m_a;
        }
        return x.m_b < y.m_b;
    }

private:
    VarContext m_ctx;
    Integer m_a, m_b;
    Monomial m_m;
};

// p = unit_coeff * x^unit_mono * factor.
struct BinomialSplit {
    Rational unit_coeff;
    Monomial unit_mono;
    BinomialFactor factor;
};

inline BinomialSplit normalize_binomial(const SparsePoly &p)
{
    auto shape = detail::as_binomial(p);
    if (!shape) {
        throw not_binomial("not a two-term binomial with a monomial ratio: " + to_string(p));
    }
    return {shape->unit_coeff, shape->unit_mono, BinomialFactor(p.context(), shape->a, shape->b, shape->m)};
}

// Ratio of a sparse Laurent polynomial by a multiset of binomial factors.
// The numerator is stored as scale * primitive integer polynomial. After
// each operation any denominator factor that exactly divides the numerator
// is cancelled.
class FactoredFraction
{
public:
    using factor_list = std::vector<std::pair<BinomialFactor, int>>;

    FactoredFraction() = default;
    explicit FactoredFraction(VarContext ctx) : m_ctx(ctx), m_num(ctx) {}
    explicit FactoredFraction(const SparsePoly &p) : m_ctx(p.context())
    {
        std::tie(m_scale, m_num) = primitive_split(p);
        normalize(false);
    }
    // num / prod(den_factors); each factor is a monomial or a binomial.
    FactoredFraction(const SparsePoly &num, const std::vector<SparsePoly> &den_factors) : FactoredFraction(num)
    {
        factor_list den;
        for (const auto &f : den_factors) {
            require_same_context(f.context(), m_ctx);
            if (f.is_zero()) {
                throw error("zero denominator factor");
            }
            if (f.size() == 1) {
                const auto &[mm, cc] = f.terms()[0];
                m_num = m_num.shifted(mono_scale(mm, -1));
                m_scale /= cc;
                continue;
            }
            auto split = normalize_binomial(f);
            m_num = m_num.shifted(mono_scale(split.unit_mono, -1));
            m_scale /= split.unit_coeff;
            den.emplace_back(split.factor, 1);
        }
        m_den = merge_factors(std::move(den));
        normalize(true);
    }

    static FactoredFraction one(VarContext ctx)
    {
        return FactoredFraction(SparsePoly::constant(ctx, Rational(1)));
    }
    static FactoredFraction from_factors(const SparsePoly &num, factor_list den)
    {
        FactoredFraction f(num);
        f.m_den = merge_factors(std::move(den));
        f.normalize(true);
        return f;
    }
    // p^k for any integer k; negative powers need p to be a monomial or
    // a binomial.
    static FactoredFraction power_of(const SparsePoly &p, int k)
    {
        if (k >= 0) {
            return FactoredFraction(pow(p, static_cast<unsigned>(k)));
        }
        if (p.size() == 1) {
            const auto &[mm, cc] = p.terms()[0];
            return FactoredFraction(SparsePoly::monomial(p.context(), mono_scale(mm, k), rational_pow(cc, k)));
        }
        auto split = normalize_binomial(p);
        SparsePoly unit
            = SparsePoly::monomial(p.context(), mono_scale(split.unit_mono, k), rational_pow(split.unit_coeff, k));
        return from_factors(unit, {{split.factor, -k}});
    }

    const VarContext &context() const noexcept
    {
        return m_ctx;
    }
    bool is_zero() const noexcept
    {
        return m_num.is_zero();
    }
    SparsePoly numerator() const
    {
        return to_rational(m_num, m_scale);
    }
    const Rational &scale() const noexcept
    {
        return m_scale;
    }
    const IntPoly &primitive_numerator() const noexcept
    {
        return m_num;
    }
    const factor_list &denominator() const noexcept
    {
        return m_den;
    }
    std::size_t denominator_size() const noexcept
    {
        std::size_t n = 0;
        for (const auto &[f, k] : m_den) {
            n += static_cast<std::size_t>(k);
        }
        return n;
    }

    FactoredFraction operator-() const
    {
        FactoredFraction r(*this);
        r.m_scale = -r.m_scale;
        return r;
    }
    friend FactoredFraction operator+(const FactoredFraction &a, const FactoredFraction &b)
    {
        return add(a, b);
    }
    friend FactoredFraction operator-(const FactoredFraction &a, const FactoredFraction &b)
    {
        return add(a, -b);
    }
    friend FactoredFraction operator*(const FactoredFraction &a, const FactoredFraction &b)
    {
        return mul(a, b);
    }
    friend FactoredFraction operator*(const FactoredFraction &a, const Rational &r)
    {
        if (r == 0) {
            return FactoredFraction(a.m_ctx);
        }
        FactoredFraction out(a);
        out.m_scale *= r;
        return out;
    }
    friend FactoredFraction operator*(const Rational &r, const FactoredFraction &a)
    {
        return a * r;
    }
    FactoredFraction &operator+=(const FactoredFraction &o)
    {
        return *this = add(*this, o);
    }
    FactoredFraction &operator-=(const FactoredFraction &o)
    {
        return *this = add(*this, -o);
    }
    FactoredFraction &operator*=(const FactoredFraction &o)
    {
        return *this = mul(*this, o);
    }

    // Structural equality of the canonical representation.
    friend bool operator==(const FactoredFraction &a, const FactoredFraction &b)
    {
        return a.m_ctx == b.m_ctx && a.m_scale == b.m_scale && a.m_num == b.m_num && a.m_den == b.m_den;
    }

    std::string to_string() const
    {
        std::string s = "(" + charvar::to_string(numerator()) + ")";
        if (m_den.empty()) {
            return s;
        }
        s += "/(";
        bool first = true;
        for (const auto &[f, k] : m_den) {
            if (!first) {
                s += "*";
            }
            first = false;
            s += "(" + f.to_string() + ")";
            if (k != 1) {
                s += "^" + std::to_string(k);
            }
        }
        return s + ")";
    }

    friend FactoredFraction adams_substitute(const FactoredFraction &f, int r, Flavor flavor);
    friend SparsePoly as_polynomial(const FactoredFraction &f);

private:
    static factor_list merge_factors(factor_list den)
    {
        std::sort(den.begin(), den.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
        factor_list out;
        for (auto &e : den) {
            if (!out.empty() && out.back().first == e.first) {
                out.back().second += e.second;
            } else {
                out.push_back(std::move(e));
            }
        }
        std::erase_if(out, [](const auto &e) { return e.second == 0; });
        return out;
    }

    void normalize(bool cancel)
    {
        if (m_num.is_zero() || m_scale == 0) {
            m_num = IntPoly(m_ctx);
            m_scale = 0;
            m_den.clear();
            return;
        }
        Integer g = content(m_num);
        if (m_num.terms().front().second < 0) {
            g = -g;
        }
        if (g != 1) {
            m_num = exact_scalar_divide(m_num, g);
            m_scale *= g;
        }
        if (!cancel) {
            return;
        }
        for (auto &[f, k] : m_den) {
            while (k > 0) {
                auto q = divide_by_binomial(m_num, f.a(), f.b(), f.m());
                if (!q) {
                    break;
                }
                m_num = std::move(*q);
                --k;
            }
        }
        std::erase_if(m_den, [](const auto &e) { return e.second == 0; });
    }

    static FactoredFraction add(const FactoredFraction &a, const FactoredFraction &b)
    {
        require_same_context(a.m_ctx, b.m_ctx);
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        // Common denominator: multiset maximum.
        factor_list common;
        IntPoly na = a.m_num, nb = b.m_num;
        auto i = a.m_den.begin(), j = b.m_den.begin();
        auto widen = [](IntPoly &p, const BinomialFactor &f, int times) {
            for (int k = 0; k < times; ++k) {
                p = mul_binomial(p, f.a(), f.b(), f.m());
            }
        };
        while (i != a.m_den.end() || j != b.m_den.end()) {
            if (j == b.m_den.end() || (i != a.m_den.end() && i->first < j->first)) {
                widen(nb, i->first, i->second);
                common.push_back(*i++);
            } else if (i == a.m_den.end() || j->first < i->first) {
                widen(na, j->first, j->second);
                common.push_back(*j++);
            } else {
                const int k = std::max(i->second, j->second);
                widen(na, i->first, k - i->second);
                widen(nb, j->first, k - j->second);
                common.emplace_back(i->first, k);
                ++i;
                ++j;
            }
        }
        Integer l;
        mpz_lcm(l.get_mpz_t(), a.m_scale.get_den_mpz_t(), b.m_scale.get_den_mpz_t());
        const Integer ia = a.m_scale.get_num() * (l / a.m_scale.get_den());
        const Integer ib = b.m_scale.get_num() * (l / b.m_scale.get_den());
        FactoredFraction out(a.m_ctx);
        out.m_num = na * ia + nb * ib;
        out.m_scale = Rational(Integer(1), l);
        out.m_den = std::move(common);
        out.normalize(true);
        return out;
    }

    static FactoredFraction mul(const FactoredFraction &a, const FactoredFraction &b)
    {
        require_same_context(a.m_ctx, b.m_ctx);
        if (a.is_zero() || b.is_zero()) {
            return FactoredFraction(a.m_ctx);
        }
        FactoredFraction out(a.m_ctx);
        out.m_num = a.m_num * b.m_num;
        out.m_scale = a.m_scale * b.m_scale;
        factor_list den = a.m_den;
        den.insert(den.end(), b.m_den.begin(), b.m_den.end());
        out.m_den = merge_factors(std::move(den));
        out.normalize(true);
        return out;
    }

    VarContext m_ctx;
    Rational m_scale = 0;
    IntPoly m_num;
    factor_list m_den;
};

enum class FracOp { Add, Mul };

inline FactoredFraction frac_combine(FracOp op, const FactoredFraction &a, const FactoredFraction &b)
{
    return op == FracOp::Add ? a + b : a * b;
}

// True when a and b denote the same rational function.
inline bool equivalent(const FactoredFraction &a, const FactoredFraction &b)
{
    return (a - b).is_zero();
}

// Adams operation psi_r: q -> q^r always; t -> -(-t)^r in the qt flavor,
// x -> -(-x)^r and y -> -(-y)^r in the xy flavor; t -> t^r in the pure
// flavor.
inline FactoredFraction adams_substitute(const FactoredFraction &f, int r, Flavor flavor)
{
    if (r < 1) {
        throw error("Adams operation needs r >= 1");
    }
    require_same_context(f.context(), flavor_context(flavor));
    if (r == 1 || f.is_zero()) {
        return f;
    }
    // -(-v)^r = (-1)^(r+1) v^r, so v^j picks up (-1)^((r+1) j).
    std::array<bool, max_vars> twisted{};
    if (flavor == Flavor::QT) {
        twisted[1] = true;
    } else if (flavor == Flavor::XY) {
        twisted[1] = twisted[2] = true;
    }
    auto sign_of = [&](const Monomial &m) {
        if (r % 2 == 1) {
            return 1;
        }
        int parity = 0;
        for (std::size_t i = 0; i < max_vars; ++i) {
            if (twisted[i]) {
                parity ^= (m[i] & 1);
            }
        }
        return parity ? -1 : 1;
    };
    FactoredFraction out(f.m_ctx);
    std::vector<IntPoly::term_type> terms;
    terms.reserve(f.m_num.size());
    for (const auto &[m, c] : f.m_num.terms()) {
        terms.emplace_back(mono_scale(m, r), sign_of(m) < 0 ? Integer(-c) : c);
    }
    out.m_num = IntPoly::from_sorted(f.m_ctx, std::move(terms));
    out.m_scale = f.m_scale;
    FactoredFraction::factor_list den;
    for (const auto &[fac, k] : f.m_den) {
        Integer b = sign_of(fac.m()) < 0 ? Integer(-fac.b()) : fac.b();
        den.emplace_back(BinomialFactor(f.m_ctx, fac.a(), std::move(b), mono_scale(fac.m(), r)), k);
    }
    out.m_den = FactoredFraction::merge_factors(std::move(den));
    out.normalize(false);
    return out;
}

// Divides the numerator by every remaining denominator factor. Throws
// not_polynomial naming the first factor that does not divide.
inline SparsePoly as_polynomial(const FactoredFraction &f)
{
    IntPoly num = f.m_num;
    for (const auto &[fac, k] : f.m_den) {
        for (int i = 0; i < k; ++i) {
            auto q = divide_by_binomial(num, fac.a(), fac.b(), fac.m());
            if (!q) {
                throw not_polynomial(fac.to_string(), "");
            }
            num = std::move(*q);
        }
    }
    return to_rational(num, f.m_scale);
}

} // namespace charvar

#endif
