#ifndef CHARVAR_CONJUGACY_HPP
#define CHARVAR_CONJUGACY_HPP

#include <numeric>
#include <vector>

#include <charvar/matrix_group.hpp>

namespace charvar
{

struct ConjugacyClass {
    int representative = 0;
    std::vector<int> members;
    int element_order = 1;

    std::size_t size() const noexcept
    {
        return members.size();
    }
};

// Classes in discovery order over the element list (identity class first),
// with the class multiplication coefficients
//   a_{ijk} = #{(x, y) in C_i x C_j : x y = z_k}, z_k the class representative.
class ConjugacyData
{
public:
    explicit ConjugacyData(const MatrixGroup &g)
    {
        const int n = static_cast<int>(g.order());
        m_class_of.assign(static_cast<std::size_t>(n), -1);
        for (int x = 0; x < n; ++x) {
            if (m_class_of[static_cast<std::size_t>(x)] >= 0) {
                continue;
            }
            ConjugacyClass c;
            c.representative = x;
            c.element_order = g.element_order(x);
            const int id = static_cast<int>(m_classes.size());
            for (int h = 0; h < n; ++h) {
                const int y = g.mul(g.mul(h, x), g.inverse(h));
                if (m_class_of[static_cast<std::size_t>(y)] < 0) {
                    m_class_of[static_cast<std::size_t>(y)] = id;
                    c.members.push_back(y);
                }
            }
            m_classes.push_back(std::move(c));
        }
        const std::size_t r = m_classes.size();
        m_inverse_class.resize(r);
        m_exponent = 1;
        for (std::size_t i = 0; i < r; ++i) {
            m_inverse_class[i] = class_of(g.inverse(m_classes[i].representative));
            m_exponent = std::lcm(m_exponent, m_classes[i].element_order);
        }
        m_coeff.assign(r * r * r, 0);
        for (std::size_t k = 0; k < r; ++k) {
            const int z = m_classes[k].representative;
            for (int x = 0; x < n; ++x) {
                const int y = g.mul(g.inverse(x), z);
                const std::size_t i = static_cast<std::size_t>(class_of(x));
                const std::size_t j = static_cast<std::size_t>(class_of(y));
                ++m_coeff[(i * r + j) * r + k];
            }
        }
        m_power.assign(r, {});
        for (std::size_t i = 0; i < r; ++i) {
            const int x = m_classes[i].representative;
            int p = g.identity();
            for (int l = 0; l < m_classes[i].element_order; ++l) {
                m_power[i].push_back(class_of(p));
                p = g.mul(p, x);
            }
        }
        m_group_order = static_cast<std::size_t>(n);
    }

    std::size_t num_classes() const noexcept
    {
        return m_classes.size();
    }
    const std::vector<ConjugacyClass> &classes() const noexcept
    {
        return m_classes;
    }
    const ConjugacyClass &operator[](std::size_t i) const
    {
        return m_classes.at(i);
    }
    int class_of(int element) const
    {
        return m_class_of.at(static_cast<std::size_t>(element));
    }
    int inverse_class(int i) const
    {
        return m_inverse_class.at(static_cast<std::size_t>(i));
    }
    // Least common multiple of element orders.
    int exponent() const noexcept
    {
        return m_exponent;
    }
    std::size_t group_order() const noexcept
    {
        return m_group_order;
    }
    long coefficient(std::size_t i, std::size_t j, std::size_t k) const
    {
        const std::size_t r = m_classes.size();
        return m_coeff[(i * r + j) * r + k];
    }
    // Class of g^l for l = 0 .. order(g)-1, g the representative of class i.
    const std::vector<int> &power_classes(std::size_t i) const
    {
        return m_power.at(i);
    }

private:
    std::vector<ConjugacyClass> m_classes;
    std::vector<int> m_class_of;
    std::vector<int> m_inverse_class;
    std::vector<long> m_coeff;
    std::vector<std::vector<int>> m_power;
    int m_exponent = 1;
    std::size_t m_group_order = 0;
};

inline ConjugacyData conjugacy_classes(const MatrixGroup &g)
{
    return ConjugacyData(g);
}

} // namespace charvar

#endif
