#ifndef CHARVAR_CHARACTER_TABLE_HPP
#define CHARVAR_CHARACTER_TABLE_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <charvar/conjugacy.hpp>
#include <charvar/cyclotomic.hpp>
#include <charvar/error.hpp>
#include <charvar/modular.hpp>
#include <charvar/polynomial.hpp>

namespace charvar
{

// Irreducible characters as rows over the conjugacy classes; values in
// Z[z], z = exp(2 pi i / e), e the group exponent.
class CharacterTable
{
public:
    CharacterTable(int exponent, std::size_t group_order, std::vector<long> class_sizes, std::vector<long> degrees,
                   std::vector<std::vector<CyclotomicValue>> rows)
        : m_ring(exponent), m_group_order(group_order), m_class_sizes(std::move(class_sizes)),
          m_degrees(std::move(degrees)), m_rows(std::move(rows))
    {
    }

    const CyclotomicRing &ring() const noexcept
    {
        return m_ring;
    }
    std::size_t group_order() const noexcept
    {
        return m_group_order;
    }
    std::size_t size() const noexcept
    {
        return m_rows.size();
    }
    long degree(std::size_t chi) const
    {
        return m_degrees.at(chi);
    }
    const std::vector<long> &degrees() const noexcept
    {
        return m_degrees;
    }
    const std::vector<long> &class_sizes() const noexcept
    {
        return m_class_sizes;
    }
    const CyclotomicValue &value(std::size_t chi, std::size_t cls) const
    {
        return m_rows.at(chi).at(cls);
    }
    const std::vector<CyclotomicValue> &row(std::size_t chi) const
    {
        return m_rows.at(chi);
    }

private:
    CyclotomicRing m_ring;
    std::size_t m_group_order;
    std::vector<long> m_class_sizes;
    std::vector<long> m_degrees;
    std::vector<std::vector<CyclotomicValue>> m_rows;
};

struct OrthogonalityReport {
    bool rows_ok = true;
    bool columns_ok = true;
    std::string witness;

    bool ok() const noexcept
    {
        return rows_ok && columns_ok;
    }
};

// sum_C |C| chi(C) conj(psi(C)) = |G| delta and
// sum_chi chi(C) conj(chi(D)) = delta |G| / |C|, checked in Z[z].
inline OrthogonalityReport check_orthogonality(const CharacterTable &t)
{
    OrthogonalityReport rep;
    const auto &ring = t.ring();
    const std::size_t r = t.size();
    const Integer order(static_cast<unsigned long>(t.group_order()));
    std::vector<std::vector<CyclotomicValue>> conj(r);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t c = 0; c < r; ++c) {
            conj[a].push_back(ring.conj(t.value(a, c)));
        }
    }
    for (std::size_t a = 0; a < r && rep.rows_ok; ++a) {
        for (std::size_t b = a; b < r; ++b) {
            CyclotomicValue acc;
            for (std::size_t c = 0; c < r; ++c) {
                const CyclotomicValue sized = ring.scale(t.value(a, c), Integer(t.class_sizes()[c]));
                ring.mul_accumulate(acc, sized, conj[b][c]);
            }
            const CyclotomicValue want = ring.constant(a == b ? order : Integer(0));
            if (ring.reduce(std::move(acc)) != want) {
                rep.rows_ok = false;
                rep.witness = "row orthogonality fails for characters " + std::to_string(a) + ", " + std::to_string(b);
                break;
            }
        }
    }
    for (std::size_t c = 0; c < r && rep.columns_ok; ++c) {
        for (std::size_t d = c; d < r; ++d) {
            CyclotomicValue acc;
            for (std::size_t a = 0; a < r; ++a) {
                ring.mul_accumulate(acc, t.value(a, c), conj[a][d]);
            }
            const Integer centraliser = order / Integer(t.class_sizes()[c]);
            const CyclotomicValue want = ring.constant(c == d ? centraliser : Integer(0));
            if (ring.reduce(std::move(acc)) != want) {
                rep.columns_ok = false;
                if (rep.witness.empty()) {
                    rep.witness = "column orthogonality fails for classes " + std::to_string(c) + ", " +
                                  std::to_string(d);
                }
                break;
            }
        }
    }
    return rep;
}

namespace detail
{

using ModVec = std::vector<long>;

// Basis of the null space of the rows x cols matrix m over f.
inline std::vector<ModVec> nullspace(std::vector<ModVec> m, std::size_t cols, const PrimeField &f)
{
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[piv], m[row]);
        const long inv = f.inv(m[row][c]);
        for (auto &x : m[row]) {
            x = f.mul(x, inv);
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != row && m[i][c] != 0) {
                const long factor = m[i][c];
                for (std::size_t k = 0; k < cols; ++k) {
                    m[i][k] = f.sub(m[i][k], f.mul(factor, m[row][k]));
                }
            }
        }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) {
        is_pivot[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<ModVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        ModVec v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            v[static_cast<std::size_t>(pivot_col[i])] = f.sub(0, m[i][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

// Burnside-Dixon: the vectors omega_j = |C_j| chi(g_j) / chi(1) are the
// common eigenvectors of the class matrices (A_i)_{jk} = a_{ijk}, with
// eigenvalue omega_i. Eigenspaces are split modulo a prime p = 1 (mod e),
// p > |G|, and the values are lifted to Z[z] through the eigenvalue
// multiplicities of each element.
inline CharacterTable character_table(const ConjugacyData &cd)
{
    using detail::ModVec;
    const std::size_t r = cd.num_classes();
    const int e = cd.exponent();
    const long order = static_cast<long>(cd.group_order());
    const long p = prime_one_mod(e, std::max<long>(order, 2 * static_cast<long>(std::sqrt(order)) + 1));
    const PrimeField f(p);

    std::vector<std::vector<ModVec>> spaces;
    {
        std::vector<ModVec> full;
        for (std::size_t j = 0; j < r; ++j) {
            ModVec v(r, 0);
            v[j] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    auto all_lines = [&] {
        return std::all_of(spaces.begin(), spaces.end(), [](const auto &s) { return s.size() == 1; });
    };
    for (std::size_t i = 1; i < r && !all_lines(); ++i) {
        std::vector<std::vector<ModVec>> next;
        for (auto &basis : spaces) {
            if (basis.size() == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            const std::size_t s = basis.size();
            std::vector<ModVec> image;
            for (const auto &b : basis) {
                ModVec w(r, 0);
                for (std::size_t j = 0; j < r; ++j) {
                    long acc = 0;
                    for (std::size_t k = 0; k < r; ++k) {
                        acc = f.add(acc, f.mul(f.reduce(cd.coefficient(i, j, k)), b[k]));
                    }
                    w[j] = acc;
                }
                image.push_back(std::move(w));
            }
            std::size_t found = 0;
            for (long lambda = 0; lambda < p && found < s; ++lambda) {
                std::vector<ModVec> m(r, ModVec(s, 0));
                for (std::size_t l = 0; l < s; ++l) {
                    for (std::size_t j = 0; j < r; ++j) {
                        m[j][l] = f.sub(image[l][j], f.mul(lambda, basis[l][j]));
                    }
                }
                const auto kernel = detail::nullspace(std::move(m), s, f);
                if (kernel.empty()) {
                    continue;
                }
                std::vector<ModVec> sub;
                for (const auto &c : kernel) {
                    ModVec v(r, 0);
                    for (std::size_t l = 0; l < s; ++l) {
                        for (std::size_t j = 0; j < r; ++j) {
                            v[j] = f.add(v[j], f.mul(c[l], basis[l][j]));
                        }
                    }
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            if (found != s) {
                throw lift_failure("class matrix " + std::to_string(i) + " is not diagonalisable mod " +
                                   std::to_string(p));
            }
        }
        spaces = std::move(next);
    }
    if (!all_lines() || spaces.size() != r) {
        throw lift_failure("class matrices do not separate the characters mod " + std::to_string(p));
    }

    const long zeta = f.pow(f.primitive_root(), (p - 1) / e);
    const CyclotomicRing ring(e);
    struct Row {
        long degree;
        std::vector<CyclotomicValue> values;
    };
    std::vector<Row> rows;
    for (const auto &sp : spaces) {
        ModVec omega = sp.front();
        if (omega[0] == 0) {
            throw lift_failure("eigenvector vanishes at the identity class");
        }
        const long norm = f.inv(omega[0]);
        for (auto &x : omega) {
            x = f.mul(x, norm);
        }
        long s = 0;
        for (std::size_t j = 0; j < r; ++j) {
            const long size = static_cast<long>(cd[j].size());
            s = f.add(s, f.mul(f.mul(omega[j], omega[static_cast<std::size_t>(cd.inverse_class(static_cast<int>(j)))]),
                               f.inv(size)));
        }
        if (s == 0) {
            throw lift_failure("degenerate degree equation");
        }
        const long d2 = f.mul(f.reduce(order), f.inv(s));
        long d = 0;
        for (long c = 1; c * c <= order; ++c) {
            if (c * c == d2 && order % c == 0) {
                d = c;
                break;
            }
        }
        if (d == 0) {
            throw lift_failure("no integral degree with square " + std::to_string(d2) + " mod " + std::to_string(p));
        }
        ModVec chi(r);
        for (std::size_t j = 0; j < r; ++j) {
            chi[j] = f.mul(f.mul(omega[j], d), f.inv(static_cast<long>(cd[j].size())));
        }
        Row row{d, {}};
        for (std::size_t j = 0; j < r; ++j) {
            const int o = cd[j].element_order;
            const auto &pw = cd.power_classes(j);
            const long step = e / o;
            CyclotomicValue value = ring.zero<Integer>();
            long total = 0;
            for (int k = 0; k < o; ++k) {
                long acc = 0;
                for (int l = 0; l < o; ++l) {
                    const long root = f.pow(zeta, static_cast<long>(e) - (step * k * l) % e);
                    acc = f.add(acc, f.mul(chi[static_cast<std::size_t>(pw[static_cast<std::size_t>(l)])], root));
                }
                const long mult = f.mul(acc, f.inv(o));
                if (mult > d) {
                    throw lift_failure("eigenvalue multiplicity " + std::to_string(mult) + " exceeds degree " +
                                       std::to_string(d));
                }
                total += mult;
                if (mult != 0) {
                    value = ring.add(value, ring.root_power<Integer>(step * k, Integer(mult)));
                }
            }
            if (total != d) {
                throw lift_failure("eigenvalue multiplicities do not sum to the degree");
            }
            row.values.push_back(std::move(value));
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
        if (a.degree != b.degree) {
            return a.degree < b.degree;
        }
        return a.values < b.values;
    });
    std::vector<long> sizes, degrees;
    std::vector<std::vector<CyclotomicValue>> values;
    for (std::size_t j = 0; j < r; ++j) {
        sizes.push_back(static_cast<long>(cd[j].size()));
    }
    for (auto &row : rows) {
        degrees.push_back(row.degree);
        values.push_back(std::move(row.values));
    }
    CharacterTable table(e, cd.group_order(), std::move(sizes), std::move(degrees), std::move(values));
    const auto ortho = check_orthogonality(table);
    if (!ortho.ok()) {
        throw lift_failure("lifted table fails orthogonality: " + ortho.witness);
    }
    return table;
}

} // namespace charvar

#endif
