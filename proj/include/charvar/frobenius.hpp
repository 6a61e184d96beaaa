#ifndef CHARVAR_FROBENIUS_HPP
#define CHARVAR_FROBENIUS_HPP

#include <string>
#include <vector>

#include <charvar/character_table.hpp>
#include <charvar/conjugacy.hpp>
#include <charvar/error.hpp>
#include <charvar/matrix_group.hpp>
#include <charvar/polynomial.hpp>

namespace charvar
{

// c(z) = #{(A, B) in G^2 : A B A^{-1} B^{-1} = z}.
struct CommutatorDistribution {
    std::vector<long long> per_element;
    // Value on any element of each class.
    std::vector<Integer> per_class;
};

inline CommutatorDistribution commutator_distribution(const MatrixGroup &g, const ConjugacyData &cd)
{
    const int n = static_cast<int>(g.order());
    CommutatorDistribution out;
    out.per_element.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        const int ai = g.inverse(a);
        for (int b = 0; b < n; ++b) {
            const int z = g.mul(g.mul(a, b), g.mul(ai, g.inverse(b)));
            ++out.per_element[static_cast<std::size_t>(z)];
        }
    }
    for (const auto &c : cd.classes()) {
        const long long v = out.per_element[static_cast<std::size_t>(c.representative)];
        for (int m : c.members) {
            if (out.per_element[static_cast<std::size_t>(m)] != v) {
                throw error("commutator distribution is not a class function");
            }
        }
        out.per_class.emplace_back(static_cast<long>(v));
    }
    return out;
}

// (f * h)(z_k) = sum_{i,j} f_i h_j a_{ijk} for class functions f, h.
inline std::vector<Integer> class_convolution(const ConjugacyData &cd, const std::vector<Integer> &f,
                                              const std::vector<Integer> &h)
{
    const std::size_t r = cd.num_classes();
    std::vector<Integer> out(r, Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (f[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < r; ++j) {
            if (h[j] == 0) {
                continue;
            }
            const Integer fh = f[i] * h[j];
            for (std::size_t k = 0; k < r; ++k) {
                const long a = cd.coefficient(i, j, k);
                if (a != 0) {
                    out[k] += fh * a;
                }
            }
        }
    }
    return out;
}

// N_g(xi) = #{(A_1, B_1, ..., A_g, B_g) : prod [A_i, B_i] = xi}, as the g-fold
// class-algebra convolution of the commutator distribution.
inline Integer tuple_count(const ConjugacyData &cd, const CommutatorDistribution &c, int genus, int xi)
{
    if (genus < 1) {
        throw unsupported_genus("tuple_count needs genus >= 1");
    }
    std::vector<Integer> acc = c.per_class;
    for (int i = 1; i < genus; ++i) {
        acc = class_convolution(cd, acc, c.per_class);
    }
    return acc[static_cast<std::size_t>(cd.class_of(xi))];
}

inline Integer tuple_count(const MatrixGroup &g, int genus, int xi)
{
    const ConjugacyData cd(g);
    return tuple_count(cd, commutator_distribution(g, cd), genus, xi);
}

struct FrobeniusSums {
    // |G|^{2g-1} sum_chi chi(xi) / chi(1)^{2g-1}
    Integer tuple_prediction;
    // sum_chi |G|^{2g-2} chi(xi) / chi(1)^{2g-1} = tuple_prediction / |G|
    Rational point_count;
};

inline FrobeniusSums frobenius_sums(const CharacterTable &t, int genus, std::size_t xi_class)
{
    if (genus < 1) {
        throw unsupported_genus("frobenius_sums needs genus >= 1");
    }
    const auto &ring = t.ring();
    CycloVector<Rational> sum = ring.zero<Rational>();
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
        const auto &v = t.value(chi, xi_class);
        const Rational w = Rational(1) / rational_pow(Rational(t.degree(chi)), 2 * genus - 1);
        for (std::size_t i = 0; i < v.size(); ++i) {
            sum[i] += Rational(v[i]) * w;
        }
    }
    const Rational order(static_cast<unsigned long>(t.group_order()));
    const Rational total = sum[0] * rational_pow(order, 2 * genus - 1);
    if (!CyclotomicRing::is_rational(sum)) {
        throw non_integral_count("Frobenius sum is not rational: " + CyclotomicRing::to_string(sum));
    }
    if (total.get_den() != 1 || total < 0) {
        throw non_integral_count("Frobenius tuple prediction " + total.get_str() +
                                 " is not a non-negative integer");
    }
    return FrobeniusSums{total.get_num(), total / order};
}

} // namespace charvar

#endif
