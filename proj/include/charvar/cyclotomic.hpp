#ifndef CHARVAR_CYCLOTOMIC_HPP
#define CHARVAR_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include <charvar/error.hpp>
#include <charvar/polynomial.hpp>

namespace charvar
{

// Coordinates over the power basis 1, z, ..., z^{phi(e)-1} of Q(z), z a
// primitive e-th root of unity.
template <typename Coeff>
using CycloVector = std::vector<Coeff>;

using CyclotomicValue = CycloVector<Integer>;

class CyclotomicRing
{
public:
    explicit CyclotomicRing(int e) : m_e(e)
    {
        if (e < 1) {
            throw error("cyclotomic order must be positive");
        }
        m_phi = cyclotomic_poly(e);
    }

    int order() const noexcept
    {
        return m_e;
    }
    int degree() const noexcept
    {
        return static_cast<int>(m_phi.size()) - 1;
    }
    // Phi_e, lowest coefficient first.
    const std::vector<Integer> &modulus() const noexcept
    {
        return m_phi;
    }

    // Reduces an arbitrary-length coefficient list in z modulo Phi_e.
    template <typename Coeff>
    CycloVector<Coeff> reduce(CycloVector<Coeff> a) const
    {
        const int d = degree();
        for (int i = static_cast<int>(a.size()) - 1; i >= d; --i) {
            const Coeff c = a[static_cast<std::size_t>(i)];
            if (c == 0) {
                continue;
            }
            // Phi is monic: z^i = z^{i-d} (z^d - Phi).
            for (int k = 0; k <= d; ++k) {
                a[static_cast<std::size_t>(i - d + k)] -= c * Coeff(m_phi[static_cast<std::size_t>(k)]);
            }
        }
        a.resize(static_cast<std::size_t>(d), Coeff(0));
        return a;
    }

    template <typename Coeff>
    CycloVector<Coeff> zero() const
    {
        return CycloVector<Coeff>(static_cast<std::size_t>(degree()), Coeff(0));
    }

    template <typename Coeff>
    CycloVector<Coeff> constant(const Coeff &c) const
    {
        auto v = zero<Coeff>();
        v[0] = c;
        return v;
    }

    // c * z^k for any integer k.
    template <typename Coeff>
    CycloVector<Coeff> root_power(long k, const Coeff &c = Coeff(1)) const
    {
        k %= m_e;
        if (k < 0) {
            k += m_e;
        }
        CycloVector<Coeff> v(static_cast<std::size_t>(std::max<long>(k + 1, degree())), Coeff(0));
        v[static_cast<std::size_t>(k)] = c;
        return reduce(std::move(v));
    }

    template <typename Coeff>
    CycloVector<Coeff> add(const CycloVector<Coeff> &a, const CycloVector<Coeff> &b) const
    {
        CycloVector<Coeff> r = a;
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] += b[i];
        }
        return r;
    }

    template <typename Coeff>
    CycloVector<Coeff> scale(const CycloVector<Coeff> &a, const Coeff &c) const
    {
        CycloVector<Coeff> r = a;
        for (auto &x : r) {
            x *= c;
        }
        return r;
    }

    // Unreduced product, length 2 deg - 1; reduce once after accumulating.
    template <typename Coeff>
    void mul_accumulate(CycloVector<Coeff> &acc, const CycloVector<Coeff> &a, const CycloVector<Coeff> &b) const
    {
        const std::size_t d = static_cast<std::size_t>(degree());
        if (acc.size() < 2 * d) {
            acc.resize(2 * d, Coeff(0));
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (a[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                acc[i + j] += a[i] * b[j];
            }
        }
    }

    template <typename Coeff>
    CycloVector<Coeff> mul(const CycloVector<Coeff> &a, const CycloVector<Coeff> &b) const
    {
        CycloVector<Coeff> acc;
        mul_accumulate(acc, a, b);
        return reduce(std::move(acc));
    }

    // Complex conjugation z -> z^{-1}.
    template <typename Coeff>
    CycloVector<Coeff> conj(const CycloVector<Coeff> &a) const
    {
        CycloVector<Coeff> r(static_cast<std::size_t>(m_e), Coeff(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[(static_cast<std::size_t>(m_e) - i) % static_cast<std::size_t>(m_e)] += a[i];
        }
        return reduce(std::move(r));
    }

    template <typename Coeff>
    static bool is_rational(const CycloVector<Coeff> &a)
    {
        for (std::size_t i = 1; i < a.size(); ++i) {
            if (a[i] != 0) {
                return false;
            }
        }
        return true;
    }

    // "3 - z^2 + 2*z^5"
    template <typename Coeff>
    static std::string to_string(const CycloVector<Coeff> &a)
    {
        std::vector<SparsePoly::term_type> ts;
        for (std::size_t i = 0; i < a.size(); ++i) {
            ts.emplace_back(Monomial{static_cast<int>(i), 0, 0}, Rational(a[i]));
        }
        return charvar::to_string(SparsePoly(VarContext("z"), std::move(ts)));
    }

    static std::vector<Integer> cyclotomic_poly(int e)
    {
        // z^e - 1 divided by Phi_d for every proper divisor d.
        std::vector<Integer> num(static_cast<std::size_t>(e) + 1, Integer(0));
        num[0] = -1;
        num[static_cast<std::size_t>(e)] = 1;
        for (int d = 1; d < e; ++d) {
            if (e % d != 0) {
                continue;
            }
            const auto den = cyclotomic_poly(d);
            const std::size_t dn = den.size() - 1;
            std::vector<Integer> quo(num.size() - dn, Integer(0));
            for (std::size_t i = num.size() - 1; i + 1 > dn; --i) {
                const Integer c = num[i];
                quo[i - dn] = c;
                for (std::size_t k = 0; k <= dn; ++k) {
                    num[i - dn + k] -= c * den[k];
                }
                if (i == dn) {
                    break;
                }
            }
            num = quo;
        }
        return num;
    }

private:
    int m_e;
    std::vector<Integer> m_phi;
};

} // namespace charvar

#endif
