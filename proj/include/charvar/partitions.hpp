#ifndef CHARVAR_PARTITIONS_HPP
#define CHARVAR_PARTITIONS_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <charvar/error.hpp>
#include <charvar/fraction.hpp>
#include <charvar/polynomial.hpp>

namespace charvar
{

// Integer partition lambda_1 >= lambda_2 >= ... >= lambda_l > 0.
class Partition
{
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : m_parts(std::move(parts))
    {
        for (std::size_t i = 0; i < m_parts.size(); ++i) {
            if (m_parts[i] <= 0 || (i > 0 && m_parts[i] > m_parts[i - 1])) {
                throw error("partition parts must be positive and weakly decreasing");
            }
        }
    }

    const std::vector<int> &parts() const noexcept
    {
        return m_parts;
    }
    int length() const noexcept
    {
        return static_cast<int>(m_parts.size());
    }
    int weight() const noexcept
    {
        return std::accumulate(m_parts.begin(), m_parts.end(), 0);
    }
    bool empty() const noexcept
    {
        return m_parts.empty();
    }

    Partition conjugate() const
    {
        std::vector<int> c;
        if (!m_parts.empty()) {
            for (int j = 0; j < m_parts.front(); ++j) {
                int cnt = 0;
                for (int p : m_parts) {
                    if (p > j) {
                        ++cnt;
                    }
                }
                c.push_back(cnt);
            }
        }
        return Partition(std::move(c));
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < m_parts.size(); ++i) {
            if (i) {
                s += ",";
            }
            s += std::to_string(m_parts[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition &a, const Partition &b) = default;

private:
    std::vector<int> m_parts;
};

// All partitions of n in reverse-lexicographic order; partitions_of(0) is
// the single empty partition.
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 0) {
        throw error("partitions_of: n must be non-negative");
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// A point of the Ferrers diagram. (i, j) uses the lattice convention with
// rows i = 0, -1, -2, ... from the top and columns j = 0, 1, ... from the
// left; arm counts cells to the right, leg cells below.
struct Cell {
    int i = 0;
    int j = 0;
    int arm = 0;
    int leg = 0;
    int hook = 0;
};

struct DiagramStats {
    std::vector<Cell> cells;
    Partition conjugate;
    // n(lambda') = sum of legs.
    int n_conjugate = 0;
};

inline DiagramStats cell_stats(const Partition &lambda)
{
    DiagramStats st;
    st.conjugate = lambda.conjugate();
    const auto &rows = lambda.parts();
    const auto &cols = st.conjugate.parts();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int c = 0; c < rows[r]; ++c) {
            Cell z;
            z.i = -static_cast<int>(r);
            z.j = c;
            z.arm = rows[r] - c - 1;
            z.leg = cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            z.hook = z.arm + z.leg + 1;
            st.n_conjugate += z.leg;
            st.cells.push_back(z);
        }
    }
    return st;
}

namespace detail
{

inline Monomial mono(int a, int b = 0, int c = 0)
{
    return Monomial{a, b, c};
}

// 1 + m
inline SparsePoly one_plus(VarContext ctx, const Monomial &m)
{
    return SparsePoly(ctx, {{Monomial{}, Rational(1)}, {m, Rational(1)}});
}

} // namespace detail

// The term attached to lambda on the right-hand side of the flavor's
// generating function.
//   E:    prod_z (q^{-l} (1 - q^h))^{2g-2}
//   qt:   prod_z (q t^2)^{(2-2g) l} (1 + q^h t^{2l+1})^{2g}
//                / ((1 - q^h t^{2l+2}) (1 - q^h t^{2l}))
//   xy:   prod_z (q x y)^{(2-2g) l} (1 + q^h y^l x^{l+1})^g (1 + q^h x^l y^{l+1})^g
//                / ((1 - q^h (xy)^{l+1}) (1 - q^h (xy)^l))
//   pure: t^{4(1-g) n(lambda')} prod_{z: a(z)=0} 1 / (1 - t^{2h})
inline FactoredFraction hook_term(Flavor flavor, int g, const Partition &lambda)
{
    if (g < 0) {
        throw unsupported_genus("genus must be non-negative");
    }
    using detail::mono;
    const VarContext ctx = flavor_context(flavor);
    const DiagramStats st = cell_stats(lambda);
    FactoredFraction::factor_list den;
    SparsePoly num = SparsePoly::constant(ctx, Rational(1));
    Monomial shift{};

    switch (flavor) {
        case Flavor::E: {
            const int e = 2 * g - 2;
            for (const auto &z : st.cells) {
                shift[0] += -z.leg * e;
                if (e > 0) {
                    num *= pow(SparsePoly(ctx, {{mono(0), Rational(1)}, {mono(z.hook), Rational(-1)}}),
                               static_cast<unsigned>(e));
                } else if (e < 0) {
                    den.emplace_back(BinomialFactor::one_minus(ctx, mono(z.hook)), -e);
                }
            }
            break;
        }
        case Flavor::QT: {
            for (const auto &z : st.cells) {
                shift = mono_mul(shift, mono((2 - 2 * g) * z.leg, 2 * (2 - 2 * g) * z.leg));
                if (g > 0) {
                    num *= pow(detail::one_plus(ctx, mono(z.hook, 2 * z.leg + 1)), static_cast<unsigned>(2 * g));
                }
                den.emplace_back(BinomialFactor::one_minus(ctx, mono(z.hook, 2 * z.leg + 2)), 1);
                den.emplace_back(BinomialFactor::one_minus(ctx, mono(z.hook, 2 * z.leg)), 1);
            }
            break;
        }
        case Flavor::XY: {
            for (const auto &z : st.cells) {
                const int s = (2 - 2 * g) * z.leg;
                shift = mono_mul(shift, mono(s, s, s));
                if (g > 0) {
                    num *= pow(detail::one_plus(ctx, mono(z.hook, z.leg + 1, z.leg)) *
                                   detail::one_plus(ctx, mono(z.hook, z.leg, z.leg + 1)),
                               static_cast<unsigned>(g));
                }
                den.emplace_back(BinomialFactor::one_minus(ctx, mono(z.hook, z.leg + 1, z.leg + 1)), 1);
                den.emplace_back(BinomialFactor::one_minus(ctx, mono(z.hook, z.leg, z.leg)), 1);
            }
            break;
        }
        case Flavor::Pure: {
            shift[0] = 4 * (1 - g) * st.n_conjugate;
            for (const auto &z : st.cells) {
                if (z.arm == 0) {
                    den.emplace_back(BinomialFactor::one_minus(ctx, mono(2 * z.hook)), 1);
                }
            }
            break;
        }
    }
    return FactoredFraction::from_factors(num.shifted(shift), std::move(den));
}

} // namespace charvar

#endif
