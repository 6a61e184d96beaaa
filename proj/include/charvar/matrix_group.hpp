#ifndef CHARVAR_MATRIX_GROUP_HPP
#define CHARVAR_MATRIX_GROUP_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <charvar/error.hpp>
#include <charvar/modular.hpp>

namespace charvar
{

enum class Family { GL, SL, Custom };

inline const char *family_name(Family f)
{
    switch (f) {
        case Family::GL:
            return "GL";
        case Family::SL:
            return "SL";
        case Family::Custom:
            return "custom";
    }
    return "?";
}

// 2x2 matrix over F_p, row major: [[a, b], [c, d]].
using Mat2 = std::array<long, 4>;

inline constexpr std::size_t default_group_bound = 500;

class MatrixGroup;
MatrixGroup build_group(Family family, int dim, long q, std::size_t bound = default_group_bound);
MatrixGroup generated_group(long p, const std::vector<Mat2> &generators, std::string label,
                            std::size_t bound = default_group_bound);

// A finite group of invertible 2x2 matrices over a prime field, fully
// enumerated with a multiplication table. Element 0 is the identity.
class MatrixGroup
{
public:
    Family family() const noexcept
    {
        return m_family;
    }
    int dim() const noexcept
    {
        return 2;
    }
    const PrimeField &field() const noexcept
    {
        return m_field;
    }
    const std::string &label() const noexcept
    {
        return m_label;
    }
    std::size_t order() const noexcept
    {
        return m_elements.size();
    }
    const std::vector<Mat2> &elements() const noexcept
    {
        return m_elements;
    }
    const Mat2 &element(int i) const
    {
        return m_elements.at(static_cast<std::size_t>(i));
    }
    int identity() const noexcept
    {
        return 0;
    }
    int mul(int a, int b) const noexcept
    {
        return m_table[static_cast<std::size_t>(a) * m_elements.size() + static_cast<std::size_t>(b)];
    }
    int inverse(int a) const noexcept
    {
        return m_inverse[static_cast<std::size_t>(a)];
    }
    // Index of a matrix, or -1 when it is not in the group.
    int index_of(const Mat2 &m) const
    {
        return m_index[encode(m)];
    }
    int power(int a, long k) const
    {
        int r = identity();
        for (long i = 0; i < k; ++i) {
            r = mul(r, a);
        }
        return r;
    }
    int element_order(int a) const
    {
        int k = 1;
        for (int x = a; x != identity(); x = mul(x, a)) {
            ++k;
        }
        return k;
    }

    // Scalar matrices zeta*I contained in the group, by zeta.
    std::vector<std::pair<long, int>> central_scalars() const
    {
        std::vector<std::pair<long, int>> out;
        for (long z = 1; z < m_field.characteristic(); ++z) {
            const int i = index_of(Mat2{z, 0, 0, z});
            if (i >= 0) {
                out.emplace_back(z, i);
            }
        }
        return out;
    }

    // xi_n = zeta*I with zeta of multiplicative order n (the smallest such
    // zeta); requires n | (q - 1) and the scalar to lie in the group.
    int central_element(int n) const
    {
        const long q = m_field.characteristic();
        if (n < 1 || (q - 1) % n != 0) {
            throw central_element_unavailable("central element of order " + std::to_string(n) + " unavailable (" +
                                              std::to_string(n) + " does not divide q-1=" + std::to_string(q - 1) +
                                              ")");
        }
        for (const auto &[z, i] : central_scalars()) {
            if (m_field.order(z) == n) {
                return i;
            }
        }
        throw central_element_unavailable("central element of order " + std::to_string(n) + " unavailable in " +
                                          m_label);
    }

    Mat2 multiply(const Mat2 &x, const Mat2 &y) const
    {
        const auto &f = m_field;
        return Mat2{f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
                    f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
    }
    long det(const Mat2 &x) const
    {
        return m_field.sub(m_field.mul(x[0], x[3]), m_field.mul(x[1], x[2]));
    }

    friend MatrixGroup build_group(Family family, int dim, long q, std::size_t bound);
    friend MatrixGroup generated_group(long p, const std::vector<Mat2> &generators, std::string label,
                                       std::size_t bound);

private:
    MatrixGroup(Family family, long p, std::string label) : m_family(family), m_field(p), m_label(std::move(label))
    {
    }

    std::size_t encode(const Mat2 &m) const
    {
        const long p = m_field.characteristic();
        return static_cast<std::size_t>(((m[0] * p + m[1]) * p + m[2]) * p + m[3]);
    }

    // Takes the element list (identity first) and fills the tables.
    void finish(std::vector<Mat2> elements)
    {
        const long p = m_field.characteristic();
        m_elements = std::move(elements);
        m_index.assign(static_cast<std::size_t>(p * p * p * p), -1);
        for (std::size_t i = 0; i < m_elements.size(); ++i) {
            m_index[encode(m_elements[i])] = static_cast<int>(i);
        }
        const std::size_t n = m_elements.size();
        m_table.assign(n * n, -1);
        m_inverse.assign(n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const int k = m_index[encode(multiply(m_elements[i], m_elements[j]))];
                if (k < 0) {
                    throw error("matrix group " + m_label + " is not closed under multiplication");
                }
                m_table[i * n + j] = k;
                if (k == 0) {
                    m_inverse[i] = static_cast<int>(j);
                }
            }
        }
    }

    Family m_family;
    PrimeField m_field;
    std::string m_label;
    std::vector<Mat2> m_elements;
    std::vector<int> m_index;
    std::vector<int> m_table;
    std::vector<int> m_inverse;
};

inline std::size_t gl2_order(long q)
{
    return static_cast<std::size_t>((q * q - 1) * (q * q - q));
}

// GL(2,q) or SL(2,q) for a prime q.
inline MatrixGroup build_group(Family family, int dim, long q, std::size_t bound)
{
    if (dim != 2) {
        throw error("only 2x2 matrix groups are supported");
    }
    if (!is_prime(q)) {
        throw error("q=" + std::to_string(q) + " must be prime");
    }
    if (family == Family::Custom) {
        throw error("build_group: use generated_group for custom groups");
    }
    const std::size_t expected = family == Family::GL ? gl2_order(q) : gl2_order(q) / static_cast<std::size_t>(q - 1);
    const std::string label = std::string(family_name(family)) + "(2," + std::to_string(q) + ")";
    if (expected > bound) {
        throw group_too_large(label + " has " + std::to_string(expected) + " elements, above the bound " +
                              std::to_string(bound));
    }
    MatrixGroup g(family, q, label);
    std::vector<Mat2> elems{Mat2{1, 0, 0, 1}};
    for (long a = 0; a < q; ++a) {
        for (long b = 0; b < q; ++b) {
            for (long c = 0; c < q; ++c) {
                for (long d = 0; d < q; ++d) {
                    const Mat2 m{a, b, c, d};
                    if (m == elems.front()) {
                        continue;
                    }
                    const long det = g.det(m);
                    if (det != 0 && (family == Family::GL || det == 1)) {
                        elems.push_back(m);
                    }
                }
            }
        }
    }
    g.finish(std::move(elems));
    return g;
}

// The subgroup of GL(2,p) generated by the given matrices.
inline MatrixGroup generated_group(long p, const std::vector<Mat2> &generators, std::string label,
                                   std::size_t bound)
{
    MatrixGroup g(Family::Custom, p, std::move(label));
    const Mat2 one{1, 0, 0, 1};
    std::vector<Mat2> elems{one};
    std::vector<char> seen(static_cast<std::size_t>(p * p * p * p), 0);
    seen[g.encode(one)] = 1;
    for (Mat2 gen : generators) {
        for (auto &x : gen) {
            x = g.m_field.reduce(x);
        }
        if (g.det(gen) == 0) {
            throw error("generator is not invertible");
        }
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (Mat2 gen : generators) {
            for (auto &x : gen) {
                x = g.m_field.reduce(x);
            }
            const Mat2 m = g.multiply(elems[i], gen);
            if (!seen[g.encode(m)]) {
                seen[g.encode(m)] = 1;
                elems.push_back(m);
                if (elems.size() > bound) {
                    throw group_too_large(g.m_label + " exceeds the bound " + std::to_string(bound));
                }
            }
        }
    }
    g.finish(std::move(elems));
    return g;
}

} // namespace charvar

#endif
