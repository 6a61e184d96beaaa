#ifndef CHARVAR_MODULAR_HPP
#define CHARVAR_MODULAR_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include <charvar/error.hpp>

namespace charvar
{

inline bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::vector<long> prime_factors(long n)
{
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

// Arithmetic in Z/pZ for a (small) prime p.
class PrimeField
{
public:
    explicit PrimeField(long p) : m_p(p)
    {
        if (!is_prime(p)) {
            throw error("PrimeField: " + std::to_string(p) + " is not prime");
        }
    }

    long characteristic() const noexcept
    {
        return m_p;
    }
    long reduce(long a) const noexcept
    {
        a %= m_p;
        return a < 0 ? a + m_p : a;
    }
    long add(long a, long b) const noexcept
    {
        return reduce(a + b);
    }
    long sub(long a, long b) const noexcept
    {
        return reduce(a - b);
    }
    long mul(long a, long b) const noexcept
    {
        return static_cast<long>((static_cast<std::int64_t>(a) * b) % m_p);
    }
    long pow(long a, long e) const noexcept
    {
        long r = 1 % m_p;
        a = reduce(a);
        while (e > 0) {
            if (e & 1) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    long inv(long a) const
    {
        a = reduce(a);
        if (a == 0) {
            throw error("PrimeField: inverse of zero");
        }
        return pow(a, m_p - 2);
    }
    // Multiplicative order of a nonzero element.
    long order(long a) const
    {
        a = reduce(a);
        if (a == 0) {
            throw error("PrimeField: zero has no multiplicative order");
        }
        long k = 1;
        for (long x = a; x != 1; x = mul(x, a)) {
            ++k;
        }
        return k;
    }
    long primitive_root() const
    {
        const auto fs = prime_factors(m_p - 1);
        for (long g = 1; g < m_p; ++g) {
            bool ok = true;
            for (long f : fs) {
                if (pow(g, (m_p - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                return g;
            }
        }
        return 1;
    }

    friend bool operator==(const PrimeField &a, const PrimeField &b) noexcept
    {
        return a.m_p == b.m_p;
    }

private:
    long m_p;
};

// Smallest prime p with p = 1 (mod e) and p > lower.
inline long prime_one_mod(long e, long lower)
{
    long p = (lower / e + 1) * e + 1;
    while (!is_prime(p)) {
        p += e;
    }
    return p;
}

} // namespace charvar

#endif
