#ifndef CHARVAR_INVARIANTS_HPP
#define CHARVAR_INVARIANTS_HPP

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <charvar/error.hpp>
#include <charvar/fraction.hpp>
#include <charvar/parse.hpp>
#include <charvar/polynomial.hpp>
#include <charvar/series.hpp>

namespace charvar
{

// E: E-polynomial E_n(q). Hqt: H_n(q,t). Hxy: H_n(q,x,y). PP: pure part PP_n(t).
enum class Kind { E, Hqt, Hxy, PP };

inline const char *kind_name(Kind k)
{
    switch (k) {
        case Kind::E:
            return "E";
        case Kind::Hqt:
            return "hqt";
        case Kind::Hxy:
            return "hxy";
        case Kind::PP:
            return "pp";
    }
    return "?";
}

inline Kind parse_kind(const std::string &s)
{
    if (s == "E" || s == "e") {
        return Kind::E;
    }
    if (s == "hqt") {
        return Kind::Hqt;
    }
    if (s == "hxy") {
        return Kind::Hxy;
    }
    if (s == "pp") {
        return Kind::PP;
    }
    throw error("unknown invariant kind '" + s + "'");
}

inline Flavor kind_flavor(Kind k)
{
    switch (k) {
        case Kind::E:
            return Flavor::E;
        case Kind::Hqt:
            return Flavor::QT;
        case Kind::Hxy:
            return Flavor::XY;
        case Kind::PP:
            return Flavor::Pure;
    }
    return Flavor::E;
}

inline int moebius(int n)
{
    if (n < 1) {
        throw error("moebius: n must be positive");
    }
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    if (n > 1) {
        mu = -mu;
    }
    return mu;
}

struct CheckEntry {
    std::string name;
    bool passed = false;
    std::string detail;
    // Offending monomial / coefficient pair on failure; sample on success.
    std::string witness;
};

struct CheckReport {
    std::vector<CheckEntry> entries;

    void add(CheckEntry e)
    {
        if (!e.passed && e.witness.empty()) {
            e.witness = "(none recorded)";
        }
        entries.push_back(std::move(e));
    }
    bool all_passed() const
    {
        for (const auto &e : entries) {
            if (!e.passed) {
                return false;
            }
        }
        return true;
    }
    const CheckEntry *find(const std::string &name) const
    {
        for (const auto &e : entries) {
            if (e.name == name) {
                return &e;
            }
        }
        return nullptr;
    }
    void append(const CheckReport &o)
    {
        for (const auto &e : o.entries) {
            entries.push_back(e);
        }
    }
};

struct InvariantResult {
    Kind kind = Kind::E;
    int n = 1;
    int g = 0;
    SparsePoly polynomial;
    long dimension2N = 0;
    CheckReport checks;
};

inline long dimension_2N(int n, int g)
{
    return static_cast<long>(n * n - 1) * (2 * g - 2);
}

namespace detail
{

inline std::string term_string(const VarContext &ctx, const Monomial &m, const Rational &c)
{
    const std::string mono = monomial_to_string(ctx, m);
    return c.get_str() + (mono.empty() ? "" : "*" + mono);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Checks

// Kind E: q^{2N} E(1/q) = E(q). Kind Hqt: h^{i-j}_{N-j} = h^{i+j}_{N+j}
// with the superscript the t-exponent and the subscript the q-exponent,
// i.e. q^a t^b pairs with q^{2N-a} t^{b+2N-2a}.
inline CheckEntry check_duality(const SparsePoly &h, Kind kind, long N)
{
    CheckEntry e{"duality", true, "", ""};
    const VarContext &ctx = h.context();
    auto partner = [&](const Monomial &m) {
        Monomial p = m;
        p[0] = static_cast<int>(2 * N - m[0]);
        if (kind != Kind::E) {
            p[1] = static_cast<int>(m[1] + 2 * N - 2 * m[0]);
        }
        return p;
    };
    if (kind != Kind::E && kind != Kind::Hqt) {
        throw kind_mismatch("duality applies to kinds E and hqt");
    }
    std::vector<std::string> samples;
    std::size_t pairs = 0;
    for (const auto &[m, c] : h.terms()) {
        const Monomial p = partner(m);
        const Rational pc = h.coefficient(p);
        if (pc != c) {
            e.passed = false;
            e.witness = detail::term_string(ctx, m, c) + " <-> " + detail::term_string(ctx, p, pc);
            e.detail = "coefficient mismatch under the duality map (N=" + std::to_string(N) + ")";
            return e;
        }
        ++pairs;
        if (samples.size() < 2 && !grlex_less(p, m)) {
            samples.push_back(detail::term_string(ctx, m, c) + " <-> " + detail::term_string(ctx, p, pc));
        }
    }
    e.detail = std::to_string(pairs) + " coefficients matched (N=" + std::to_string(N) + ")";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        e.witness += (i ? "; " : "") + samples[i];
    }
    return e;
}

// q-degree = t-degree = 2N, (qt)^{2N} has coefficient 1, no negative exponents.
inline CheckEntry check_degrees(const SparsePoly &h, long two_n)
{
    CheckEntry e{"degrees", true, "", ""};
    if (h.is_zero()) {
        return {"degrees", false, "polynomial is zero", "0"};
    }
    const long dq = h.degree(0), dt = h.degree(1);
    const Monomial top{static_cast<int>(two_n), static_cast<int>(two_n), 0};
    const Rational lead = h.coefficient(top);
    if (h.min_degree(0) < 0 || h.min_degree(1) < 0) {
        e.passed = false;
        e.detail = "negative exponent present";
        e.witness = detail::term_string(h.context(), h.terms().front().first, h.terms().front().second);
    } else if (dq != two_n || dt != two_n) {
        e.passed = false;
        e.detail = "expected q- and t-degree " + std::to_string(two_n);
        e.witness = "q-degree " + std::to_string(dq) + ", t-degree " + std::to_string(dt);
    } else if (lead != 1) {
        e.passed = false;
        e.detail = "coefficient of (qt)^2N must be 1";
        e.witness = detail::term_string(h.context(), top, lead);
    } else {
        e.detail = "q-degree = t-degree = " + std::to_string(two_n) + ", leading (qt)^" + std::to_string(two_n);
    }
    return e;
}

inline CheckEntry check_positivity(const SparsePoly &h)
{
    for (const auto &[m, c] : h.terms()) {
        if (c < 0 || c.get_den() != 1) {
            return {"positivity", false, "coefficient is not a non-negative integer",
                    detail::term_string(h.context(), m, c)};
        }
    }
    return {"positivity", true, std::to_string(h.size()) + " non-negative integer coefficients", ""};
}

inline Rational euler_expected(int n, int g)
{
    return Rational(moebius(n)) * rational_pow(Rational(n), 2 * g - 3);
}

// E_n(1) = mu(n) n^{2g-3}.
inline CheckEntry check_euler(const SparsePoly &e_poly, int n, int g)
{
    const Rational value = evaluate(e_poly, {{'q', Rational(1)}});
    const Rational expected = euler_expected(n, g);
    CheckEntry e{"euler", value == expected, "", ""};
    e.detail = "E_" + std::to_string(n) + "(1) = " + value.get_str() + ", mu(n) n^(2g-3) = " + expected.get_str();
    if (!e.passed) {
        e.witness = "E(1)=" + value.get_str() + " expected " + expected.get_str();
    }
    return e;
}

// PP_n: polynomial, degree 2n(n-1)(g-1), leading coefficient 1, coefficients >= 0.
inline CheckEntry check_pp_properties(const SparsePoly &pp, int n, int g)
{
    const long want = 2L * n * (n - 1) * (g - 1);
    CheckEntry e{"pp_properties", true, "", ""};
    if (pp.is_zero()) {
        return {"pp_properties", false, "PP is zero", "0"};
    }
    if (pp.min_degree(0) < 0) {
        return {"pp_properties", false, "negative exponent", detail::term_string(pp.context(), pp.terms().front().first,
                                                                                    pp.terms().front().second)};
    }
    const auto &[lm, lc] = pp.terms().back();
    if (lm[0] != want) {
        return {"pp_properties", false, "expected degree " + std::to_string(want), "degree " + std::to_string(lm[0])};
    }
    if (lc != 1) {
        return {"pp_properties", false, "leading coefficient must be 1", detail::term_string(pp.context(), lm, lc)};
    }
    for (const auto &[m, c] : pp.terms()) {
        if (c < 0 || c.get_den() != 1) {
            return {"pp_properties", false, "coefficient is not a non-negative integer",
                    detail::term_string(pp.context(), m, c)};
        }
    }
    e.detail = "degree " + std::to_string(want) + ", leading coefficient 1, non-negative";
    return e;
}

// H_n(1,x,y) is symmetric under x <-> y.
inline CheckEntry check_xy_symmetry(const SparsePoly &hxy)
{
    const SparsePoly at1 = specialize(hxy, {{'q', Rational(1)}});
    const SparsePoly swapped = specialize(at1, {{'x', 'y'}, {'y', 'x'}});
    // specialize renames into context (y, x) order; rebuild in (x, y).
    std::vector<SparsePoly::term_type> terms;
    const int xi = swapped.context().index_of('x'), yi = swapped.context().index_of('y');
    for (const auto &[m, c] : swapped.terms()) {
        terms.emplace_back(Monomial{m[static_cast<std::size_t>(xi)], m[static_cast<std::size_t>(yi)], 0}, c);
    }
    const SparsePoly sw(at1.context(), std::move(terms));
    if (sw == at1) {
        return {"xy_symmetry", true, "H(1,x,y) = H(1,y,x)", ""};
    }
    const SparsePoly diff = at1 - sw;
    const auto &[m, c] = diff.terms().front();
    return {"xy_symmetry", false, "H(1,x,y) is not symmetric", detail::term_string(diff.context(), m, c)};
}

inline CheckEntry check_equal(const std::string &name, const SparsePoly &lhs, const SparsePoly &rhs,
                              const std::string &what)
{
    if (lhs == rhs) {
        return {name, true, what, ""};
    }
    if (!(lhs.context() == rhs.context())) {
        return {name, false, what + ": context mismatch", "(" + lhs.context().names() + ") vs (" +
                                                              rhs.context().names() + ")"};
    }
    const SparsePoly diff = lhs - rhs;
    const auto &[m, c] = diff.terms().front();
    return {name, false, what + ": polynomials differ",
            "difference term " + detail::term_string(diff.context(), m, c)};
}

// ---------------------------------------------------------------------------
// Computation with an in-process memo.

namespace detail
{

struct memo_state {
    std::mutex mutex;
    std::map<std::pair<Flavor, int>, std::vector<FactoredFraction>> v_lists;
    std::map<std::tuple<Kind, int, int>, SparsePoly> polys;
};

inline memo_state &memo()
{
    static memo_state m;
    return m;
}

// Straight from the generating function, bypassing the memo.
inline SparsePoly fresh_polynomial(Kind kind, int n, int g)
{
    const Flavor flavor = kind_flavor(kind);
    return invariant_from_V(flavor, n, g, extract_V(flavor, g, n)[static_cast<std::size_t>(n - 1)]);
}

inline SparsePoly compute_polynomial(Kind kind, int n, int g)
{
    auto &mm = memo();
    const Flavor flavor = kind_flavor(kind);
    std::vector<FactoredFraction> vs;
    {
        std::lock_guard lock(mm.mutex);
        auto it = mm.polys.find({kind, n, g});
        if (it != mm.polys.end()) {
            return it->second;
        }
        auto vit = mm.v_lists.find({flavor, g});
        if (vit != mm.v_lists.end() && vit->second.size() >= static_cast<std::size_t>(n)) {
            vs = vit->second;
        }
    }
    if (vs.empty()) {
        vs = extract_V(flavor, g, n);
        std::lock_guard lock(mm.mutex);
        auto &slot = mm.v_lists[{flavor, g}];
        if (slot.size() < vs.size()) {
            slot = vs;
        }
    }
    SparsePoly p = invariant_from_V(flavor, n, g, vs[static_cast<std::size_t>(n - 1)]);
    std::lock_guard lock(mm.mutex);
    mm.polys.emplace(std::make_tuple(kind, n, g), p);
    return p;
}

} // namespace detail

// The polynomial alone, without checks (memoized).
inline SparsePoly invariant_polynomial(Kind kind, int n, int g)
{
    if (n < 1) {
        throw error("n must be at least 1");
    }
    if (g < 0) {
        throw unsupported_genus("genus must be non-negative");
    }
    return detail::compute_polynomial(kind, n, g);
}

// ---------------------------------------------------------------------------
// Closed forms

enum class ClosedForm { E2, H2, H3, PP3, YGenus };

namespace detail
{

// coeff * shift * prod num[i]^k_i / prod den[j]
inline FactoredFraction closed_term(VarContext ctx, Rational coeff, Monomial shift,
                                    const std::vector<std::pair<std::string, int>> &num,
                                    const std::vector<std::string> &den)
{
    SparsePoly top = SparsePoly::monomial(ctx, shift, coeff);
    for (const auto &[text, k] : num) {
        top *= pow(parse_poly(ctx, text), static_cast<unsigned>(k));
    }
    std::vector<SparsePoly> bottom;
    for (const auto &text : den) {
        bottom.push_back(parse_poly(ctx, text));
    }
    return FactoredFraction(top, bottom);
}

} // namespace detail

// The printed closed forms, term by term. Three-term denominators
// (q^2 t^4 + q t^2 + 1), (q^2 + q + 1) and (t^4 + t^2 + 1) are expanded to
// binomials by multiplying through with (q t^2 - 1), (q - 1), (t^2 - 1).
inline FactoredFraction closed_form(ClosedForm which, int g, int n = 0)
{
    using detail::closed_term;
    const Rational third(1, 3), half(1, 2);
    if (which == ClosedForm::YGenus) {
        if (g < 2) {
            throw unsupported_genus("y-genus closed form requires g >= 2");
        }
        if (n < 1) {
            throw error("y-genus closed form requires n >= 1");
        }
        const VarContext ctx = VarContext::y();
        const SparsePoly my = SparsePoly::monomial(ctx, Monomial{1, 0, 0}, Rational(-1));
        const SparsePoly one = SparsePoly::constant(ctx, Rational(1));
        SparsePoly a(ctx);
        for (int k = 0; k < n; ++k) {
            a += pow(my, static_cast<unsigned>(k));
        }
        SparsePoly sum(ctx);
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0) {
                continue;
            }
            const int mu = moebius(m);
            if (mu == 0) {
                continue;
            }
            SparsePoly inner = pow(my, static_cast<unsigned>(n * (n - n / m))) * Rational(m);
            for (int i = 1; i <= n / m - 1; ++i) {
                const SparsePoly f = one - pow(my, static_cast<unsigned>(m * i));
                inner *= f * f;
            }
            sum += pow(inner, static_cast<unsigned>(g - 1)) * Rational(mu, m);
        }
        return FactoredFraction(pow(a, static_cast<unsigned>(g - 1)) * sum);
    }
    if (g < 1) {
        throw unsupported_genus("closed forms are transcribed for g >= 1");
    }
    const int G = 2 * g;
    switch (which) {
        case ClosedForm::E2: {
            const VarContext ctx = VarContext::q();
            const int e = 2 * g - 2;
            return closed_term(ctx, 1, {0, 0, 0}, {{"q^2-1", e}}, {}) +
                   closed_term(ctx, 1, {e, 0, 0}, {{"q^2-1", e}}, {}) -
                   closed_term(ctx, half, {e, 0, 0}, {{"q-1", e}}, {}) -
                   closed_term(ctx, half, {e, 0, 0}, {{"q+1", e}}, {});
        }
        case ClosedForm::H2: {
            const VarContext ctx = VarContext::qt();
            const Monomial s{2 * g - 2, 4 * g - 4, 0};
            return closed_term(ctx, 1, {0, 0, 0}, {{"q^2*t^3+1", G}}, {"q^2*t^2-1", "q^2*t^4-1"}) +
                   closed_term(ctx, 1, s, {{"q^2*t+1", G}}, {"q^2-1", "q^2*t^2-1"}) -
                   closed_term(ctx, half, s, {{"q*t+1", G}}, {"q*t^2-1", "q-1"}) -
                   closed_term(ctx, half, s, {{"q*t-1", G}}, {"q+1", "q*t^2+1"});
        }
        case ClosedForm::H3: {
            const VarContext ctx = VarContext::qt();
            const Monomial s6{6 * g - 6, 12 * g - 12, 0};
            const Monomial s4{4 * g - 4, 8 * g - 8, 0};
            return closed_term(ctx, 1, {0, 0, 0}, {{"q^3*t^5+1", G}, {"q^2*t^3+1", G}},
                               {"q^3*t^6-1", "q^3*t^4-1", "q^2*t^4-1", "q^2*t^2-1"}) +
                   closed_term(ctx, 1, s6, {{"q^3*t+1", G}, {"q^2*t+1", G}},
                               {"q^3*t^2-1", "q^3-1", "q^2*t^2-1", "q^2-1"}) +
                   closed_term(ctx, 1, s4, {{"q^3*t^3+1", G}, {"q*t+1", G}},
                               {"q^3*t^4-1", "q^3*t^2-1", "q*t^2-1", "q-1"}) +
                   closed_term(ctx, third, s6, {{"q*t+1", 2 * G}}, {"q*t^2-1", "q*t^2-1", "q-1", "q-1"}) -
                   closed_term(ctx, third, s6, {{"q^2*t^2-q*t+1", G}, {"q*t^2-1", 1}, {"q-1", 1}},
                               {"q^3*t^6-1", "q^3-1"}) -
                   closed_term(ctx, 1, s4, {{"q^2*t^3+1", G}, {"q*t+1", G}},
                               {"q^2*t^4-1", "q^2*t^2-1", "q*t^2-1", "q-1"}) -
                   closed_term(ctx, 1, s6, {{"q^2*t+1", G}, {"q*t+1", G}},
                               {"q^2*t^2-1", "q^2-1", "q*t^2-1", "q-1"});
        }
        case ClosedForm::PP3: {
            const VarContext ctx = VarContext::t();
            const Monomial s12{12 * g - 12, 0, 0};
            const Monomial s8{8 * g - 8, 0, 0};
            return closed_term(ctx, 1, {0, 0, 0}, {}, {"t^6-1", "t^4-1"}) + closed_term(ctx, 1, s12, {}, {}) -
                   closed_term(ctx, 1, s8, {}, {"t^2-1"}) + closed_term(ctx, third, s12, {}, {"t^2-1", "t^2-1"}) -
                   closed_term(ctx, third, s12, {{"t^2-1", 1}}, {"t^6-1"}) -
                   closed_term(ctx, 1, s8, {}, {"t^4-1", "t^2-1"}) + closed_term(ctx, 1, s12, {}, {"t^2-1"});
        }
        case ClosedForm::YGenus:
            break;
    }
    throw error("unknown closed form");
}

// ---------------------------------------------------------------------------
// Specializations

enum class Target { Poincare, ToE, PureExtract, XyToQt, YGenus };

inline const char *target_name(Target t)
{
    switch (t) {
        case Target::Poincare:
            return "poincare";
        case Target::ToE:
            return "to_E";
        case Target::PureExtract:
            return "pure_extract";
        case Target::XyToQt:
            return "xy_to_qt";
        case Target::YGenus:
            return "ygenus";
    }
    return "?";
}

inline SparsePoly specialize_poly(const SparsePoly &p, Kind kind, Target target)
{
    const bool needs_qt = target == Target::Poincare || target == Target::ToE || target == Target::PureExtract;
    if ((needs_qt && kind != Kind::Hqt) || (!needs_qt && kind != Kind::Hxy)) {
        throw kind_mismatch(std::string("specialization ") + target_name(target) + " does not apply to kind " +
                            kind_name(kind));
    }
    switch (target) {
        case Target::Poincare:
            return specialize(p, {{'q', Rational(1)}});
        case Target::ToE:
            return specialize(p, {{'t', Rational(-1)}});
        case Target::PureExtract: {
            std::vector<SparsePoly::term_type> out;
            for (const auto &[m, c] : p.terms()) {
                if (m[1] == 2 * m[0]) {
                    out.emplace_back(Monomial{m[1], 0, 0}, c);
                }
            }
            return SparsePoly(VarContext::t(), std::move(out));
        }
        case Target::XyToQt:
            return specialize(p, {{'x', 't'}, {'y', 't'}});
        case Target::YGenus:
            return specialize(specialize(p, {{'q', Rational(1)}}), {{'x', Rational(-1)}});
    }
    throw error("unknown specialization target");
}

inline SparsePoly specialize_invariant(const InvariantResult &r, Target target)
{
    return specialize_poly(r.polynomial, r.kind, target);
}

// ---------------------------------------------------------------------------
// Cross checks that need other invariants.

inline CheckEntry check_closed_form_match(Kind kind, int n, int g)
{
    std::string label;
    SparsePoly computed = invariant_polynomial(kind, n, g);
    FactoredFraction form;
    if (kind == Kind::E && n == 2) {
        form = closed_form(ClosedForm::E2, g);
        label = "E_2 closed form";
    } else if (kind == Kind::Hqt && n == 2) {
        form = closed_form(ClosedForm::H2, g);
        label = "H_2(q,t) closed form";
    } else if (kind == Kind::Hqt && n == 3) {
        form = closed_form(ClosedForm::H3, g);
        label = "H_3(q,t) closed form";
    } else if (kind == Kind::PP && n == 3) {
        form = closed_form(ClosedForm::PP3, g);
        label = "PP_3 closed form";
    } else if (kind == Kind::Hxy) {
        form = closed_form(ClosedForm::YGenus, g, n);
        label = "y-genus closed form";
        computed = specialize_poly(computed, Kind::Hxy, Target::YGenus);
    } else {
        throw error(std::string("no closed form for kind ") + kind_name(kind) + " n=" + std::to_string(n));
    }
    SparsePoly expected;
    try {
        expected = as_polynomial(form);
    } catch (const not_polynomial &ex) {
        return {"closed_form_match", false, label + " is not a polynomial", ex.factor()};
    }
    return check_equal("closed_form_match", computed, expected, label);
}

inline bool has_closed_form(Kind kind, int n, int g)
{
    switch (kind) {
        case Kind::E:
            return n == 2 && g >= 1;
        case Kind::Hqt:
            return (n == 2 || n == 3) && g >= 1;
        case Kind::PP:
            return n == 3 && g >= 1;
        case Kind::Hxy:
            return g >= 2;
    }
    return false;
}

// The flavor-compatibility identities at (n, g).
inline CheckReport check_specialization_match(int n, int g)
{
    CheckReport rep;
    const SparsePoly hqt = invariant_polynomial(Kind::Hqt, n, g);
    auto rename = [](CheckEntry e, const std::string &name) {
        e.name = name;
        return e;
    };
    rep.add(rename(check_equal("", specialize_poly(hqt, Kind::Hqt, Target::ToE), invariant_polynomial(Kind::E, n, g),
                               "H(q,-1) = E"),
                   "specialization_to_E"));
    rep.add(rename(check_equal("", specialize_poly(hqt, Kind::Hqt, Target::PureExtract),
                               invariant_polynomial(Kind::PP, n, g), "pure part of H = PP"),
                   "specialization_pure"));
    if (n <= 3) {
        const SparsePoly hxy = invariant_polynomial(Kind::Hxy, n, g);
        rep.add(rename(check_equal("", specialize_poly(hxy, Kind::Hxy, Target::XyToQt), hqt, "H(q,t,t) = H(q,t)"),
                       "specialization_xy_to_qt"));
        rep.add(check_xy_symmetry(hxy));
    }
    return rep;
}

// ---------------------------------------------------------------------------

inline CheckReport intrinsic_checks(Kind kind, int n, int g, const SparsePoly &p)
{
    CheckReport rep;
    const long two_n = dimension_2N(n, g);
    const SparsePoly one = SparsePoly::constant(p.context(), Rational(1));
    if (g <= 1 && kind != Kind::PP) {
        // Degenerate genera: 1 for g = 1; 1 for n = 1 and 0 otherwise at g = 0.
        const SparsePoly expected = (g == 1 || n == 1) ? one : SparsePoly(p.context());
        if (kind == Kind::E || kind == Kind::Hqt || kind == Kind::Hxy) {
            rep.add(check_equal("degenerate_genus", p, expected, "value at g=" + std::to_string(g)));
        }
        return rep;
    }
    switch (kind) {
        case Kind::E:
            rep.add(check_duality(p, Kind::E, two_n / 2));
            rep.add(check_euler(p, n, g));
            break;
        case Kind::Hqt:
            rep.add(check_degrees(p, two_n));
            rep.add(check_positivity(p));
            rep.add(check_duality(p, Kind::Hqt, two_n / 2));
            break;
        case Kind::Hxy:
            rep.add(check_positivity(p));
            rep.add(check_xy_symmetry(p));
            break;
        case Kind::PP:
            rep.add({"pure_normalization", true,
                     "PP_n = PV_n (1 - t^2) t^{-2(1-g)n(n-1)}; the factor (t^2 - 1) gives -PP_n", ""});
            if (g >= 2) {
                rep.add(check_pp_properties(p, n, g));
            }
            break;
    }
    return rep;
}

// Computes the invariant and attaches its intrinsic checks.
inline InvariantResult compute_invariant(Kind kind, int n, int g)
{
    InvariantResult r;
    r.kind = kind;
    r.n = n;
    r.g = g;
    r.polynomial = invariant_polynomial(kind, n, g);
    r.dimension2N = dimension_2N(n, g);
    r.checks = intrinsic_checks(kind, n, g, r.polynomial);
    return r;
}

} // namespace charvar

#endif
