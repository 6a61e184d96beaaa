#ifndef CHARVAR_DOCUMENT_HPP
#define CHARVAR_DOCUMENT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <charvar/error.hpp>
#include <charvar/invariants.hpp>
#include <charvar/polynomial.hpp>

namespace charvar
{

inline constexpr int document_version = 1;

using json = nlohmann::json;

inline json polynomial_terms_json(const SparsePoly &p)
{
    json terms = json::array();
    for (const auto &[m, c] : p.terms()) {
        json e = json::array();
        for (std::size_t i = 0; i < p.context().size(); ++i) {
            e.push_back(m[i]);
        }
        terms.push_back({{"e", e}, {"c", c.get_str()}});
    }
    return terms;
}

// {"kind","n","g","vars","terms","meta":{"dim2N","checks"},"version"}
inline json result_to_document(const InvariantResult &r)
{
    json vars = json::array();
    for (std::size_t i = 0; i < r.polynomial.context().size(); ++i) {
        vars.push_back(std::string(1, r.polynomial.context().name(i)));
    }
    json checks = json::object();
    for (const auto &e : r.checks.entries) {
        checks[e.name] = {{"passed", e.passed}, {"detail", e.detail}, {"witness", e.witness}};
    }
    return {{"kind", kind_name(r.kind)},
            {"n", r.n},
            {"g", r.g},
            {"vars", vars},
            {"terms", polynomial_terms_json(r.polynomial)},
            {"meta", {{"dim2N", r.dimension2N}, {"checks", checks}}},
            {"version", document_version}};
}

// Document for a computation that stopped on a polynomiality or integrality
// assertion.
inline json failure_document(Kind kind, int n, int g, const std::string &type, const std::string &message,
                             const std::string &factor = {})
{
    json err = {{"type", type}, {"message", message}};
    if (!factor.empty()) {
        err["factor"] = factor;
    }
    return {{"kind", kind_name(kind)}, {"n", n}, {"g", g}, {"error", err}, {"version", document_version}};
}

inline InvariantResult result_from_document(const json &doc)
{
    if (!doc.is_object() || doc.value("version", 0) != document_version) {
        throw error("document has an unsupported version");
    }
    InvariantResult r;
    r.kind = parse_kind(doc.at("kind").get<std::string>());
    r.n = doc.at("n").get<int>();
    r.g = doc.at("g").get<int>();
    std::string names;
    for (const auto &v : doc.at("vars")) {
        names += v.get<std::string>();
    }
    const VarContext ctx(names);
    std::vector<SparsePoly::term_type> terms;
    for (const auto &t : doc.at("terms")) {
        Monomial m{};
        const auto &e = t.at("e");
        if (e.size() != ctx.size()) {
            throw error("document term has the wrong number of exponents");
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            m[i] = e[i].get<int>();
        }
        terms.emplace_back(m, Rational(t.at("c").get<std::string>()));
    }
    r.polynomial = SparsePoly(ctx, std::move(terms));
    r.dimension2N = doc.at("meta").at("dim2N").get<long>();
    for (const auto &[name, c] : doc.at("meta").at("checks").items()) {
        r.checks.entries.push_back(
            {name, c.at("passed").get<bool>(), c.at("detail").get<std::string>(), c.at("witness").get<std::string>()});
    }
    return r;
}

} // namespace charvar

#endif
