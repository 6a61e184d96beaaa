#ifndef CHARVAR_TOOLS_CLI_APP_HPP
#define CHARVAR_TOOLS_CLI_APP_HPP

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <charvar/cache.hpp>
#include <charvar/character_table.hpp>
#include <charvar/conjugacy.hpp>
#include <charvar/document.hpp>
#include <charvar/error.hpp>
#include <charvar/frobenius.hpp>
#include <charvar/invariants.hpp>
#include <charvar/matrix_group.hpp>
#include <charvar/table_export.hpp>

namespace charvar::cli
{

enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, assertion = 3 };

struct Streams {
    std::ostream &out;
    std::ostream &err;
};

inline void print_json(std::ostream &os, const json &doc)
{
    os << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// compute

struct ComputeOptions {
    std::string kind = "E";
    int n = 1;
    int g = 0;
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
};

inline int cmd_compute(const ComputeOptions &o, Streams s)
{
    const Kind kind = parse_kind(o.kind);
    std::optional<DiskCache> cache;
    if (!o.no_cache) {
        cache.emplace(DiskCache::resolve_dir(o.cache_dir));
    }
    std::optional<json> doc;
    if (cache) {
        doc = cache->load(kind, o.n, o.g);
    }
    if (!doc) {
        try {
            doc = result_to_document(compute_invariant(kind, o.n, o.g));
        } catch (const not_polynomial &e) {
            print_json(s.out, failure_document(kind, o.n, o.g, "not_polynomial", e.what(), e.factor()));
            s.err << "error: " << e.what() << '\n';
            return assertion;
        } catch (const non_integer_coefficient &e) {
            print_json(s.out, failure_document(kind, o.n, o.g, "non_integer_coefficient", e.what()));
            s.err << "error: " << e.what() << '\n';
            return assertion;
        }
        if (cache) {
            try {
                cache->store(kind, o.n, o.g, *doc);
            } catch (const error &e) {
                s.err << "warning: " << e.what() << '\n';
            }
        }
    }
    if (o.format == "text") {
        s.out << to_string(result_from_document(*doc).polynomial) << '\n';
    } else {
        print_json(s.out, *doc);
    }
    return ok;
}

// ---------------------------------------------------------------------------
// check

struct CheckOptions {
    std::string suite = "all";
    int n = 2;
    int g = 2;
    std::string format = "text";
};

inline CheckEntry renamed(CheckEntry e, const std::string &name)
{
    e.name = name;
    return e;
}

inline bool any_closed_form(int n, int g)
{
    return has_closed_form(Kind::E, n, g) || has_closed_form(Kind::Hqt, n, g) || has_closed_form(Kind::PP, n, g) ||
           (n <= 3 && has_closed_form(Kind::Hxy, n, g));
}

inline CheckReport run_suite(const std::string &suite, int n, int g)
{
    const bool all = suite == "all";
    CheckReport rep;
    const long two_n = dimension_2N(n, g);
    if (all || suite == "duality") {
        rep.add(renamed(check_duality(invariant_polynomial(Kind::E, n, g), Kind::E, two_n / 2), "duality[E]"));
        rep.add(renamed(check_duality(invariant_polynomial(Kind::Hqt, n, g), Kind::Hqt, two_n / 2), "duality[hqt]"));
    }
    if (all) {
        const SparsePoly h = invariant_polynomial(Kind::Hqt, n, g);
        rep.add(renamed(check_degrees(h, two_n), "degrees[hqt]"));
        rep.add(renamed(check_positivity(h), "positivity[hqt]"));
    }
    if (all || suite == "euler") {
        rep.add(check_euler(invariant_polynomial(Kind::E, n, g), n, g));
    }
    if (all || suite == "specialization") {
        rep.append(check_specialization_match(n, g));
    }
    if (all || suite == "closedform") {
        const std::pair<Kind, const char *> forms[] = {
            {Kind::E, "E2"}, {Kind::Hqt, n == 2 ? "H2" : "H3"}, {Kind::PP, "PP3"}, {Kind::Hxy, "ygenus"}};
        for (const auto &[kind, label] : forms) {
            if (has_closed_form(kind, n, g) && (kind != Kind::Hxy || n <= 3)) {
                rep.add(renamed(check_closed_form_match(kind, n, g), std::string("closed_form[") + label + "]"));
            }
        }
    }
    if (all || suite == "pp") {
        rep.add(check_pp_properties(invariant_polynomial(Kind::PP, n, g), n, g));
        rep.add(renamed(check_equal("", specialize_poly(invariant_polynomial(Kind::Hqt, n, g), Kind::Hqt,
                                                        Target::PureExtract),
                                    invariant_polynomial(Kind::PP, n, g), "pure part of H = PP"),
                        "specialization_pure"));
    }
    return rep;
}

inline int cmd_check(const CheckOptions &o, Streams s)
{
    if (o.g < 2) {
        s.err << "error: check suites need g >= 2\n";
        return usage;
    }
    if (o.suite == "closedform" && !any_closed_form(o.n, o.g)) {
        s.err << "error: no closed form available for n=" << o.n << '\n';
        return usage;
    }
    const CheckReport rep = run_suite(o.suite, o.n, o.g);
    const bool passed = rep.all_passed();
    if (o.format == "json") {
        json checks = json::array();
        for (const auto &e : rep.entries) {
            checks.push_back({{"name", e.name}, {"passed", e.passed}, {"detail", e.detail}, {"witness", e.witness}});
        }
        print_json(s.out, {{"suite", o.suite}, {"n", o.n}, {"g", o.g}, {"checks", checks}, {"passed", passed}});
    } else {
        s.out << "check suite=" << o.suite << " n=" << o.n << " g=" << o.g << '\n';
        for (const auto &e : rep.entries) {
            s.out << (e.passed ? "PASS " : "FAIL ") << e.name << ": " << e.detail;
            if (!e.witness.empty()) {
                s.out << " [" << (e.passed ? "sample " : "witness ") << e.witness << "]";
            }
            s.out << '\n';
        }
        s.out << "result: " << (passed ? "pass" : "fail") << '\n';
    }
    return passed ? ok : check_failed;
}

// ---------------------------------------------------------------------------
// count

struct CountOptions {
    std::string family = "gl";
    long q = 3;
    int g = 1;
    int zeta_order = 1;
    std::string oracle = "both";
    std::string format = "text";
    std::size_t bound = default_group_bound;
};

inline Family parse_family(const std::string &f)
{
    return f == "sl" ? Family::SL : Family::GL;
}

inline int cmd_count(const CountOptions &o, Streams s)
{
    if (!is_prime(o.q)) {
        s.err << "error: q=" << o.q << " must be prime\n";
        return usage;
    }
    if (o.zeta_order < 1 || (o.q - 1) % o.zeta_order != 0) {
        s.err << "error: central element of order " << o.zeta_order << " unavailable (" << o.zeta_order
              << " does not divide q-1=" << (o.q - 1) << ")\n";
        return usage;
    }
    const MatrixGroup grp = build_group(parse_family(o.family), 2, o.q, o.bound);
    const int xi = grp.central_element(o.zeta_order);
    const ConjugacyData cd(grp);
    std::optional<Integer> brute, character;
    std::optional<Rational> point_count;
    if (o.oracle == "brute" || o.oracle == "both") {
        brute = tuple_count(cd, commutator_distribution(grp, cd), o.g, xi);
    }
    if (o.oracle == "character" || o.oracle == "both") {
        const CharacterTable table = character_table(cd);
        const FrobeniusSums fs = frobenius_sums(table, o.g, static_cast<std::size_t>(cd.class_of(xi)));
        character = fs.tuple_prediction;
        point_count = fs.point_count;
    }
    const bool agree = !(brute && character) || *brute == *character;
    const long zeta = grp.element(xi)[0];
    if (o.format == "json") {
        json doc = {{"group", grp.label()},
                    {"order", grp.order()},
                    {"g", o.g},
                    {"xi", {{"scalar", zeta}, {"order", o.zeta_order}}}};
        if (brute) {
            doc["brute"] = brute->get_str();
        }
        if (character) {
            doc["character"] = character->get_str();
            doc["point_count"] = point_count->get_str();
        }
        if (brute && character) {
            doc["agreement"] = agree;
        }
        print_json(s.out, doc);
    } else {
        s.out << "group: " << grp.label() << " order " << grp.order() << '\n';
        s.out << "xi: " << zeta << "*I (order " << o.zeta_order << ")\n";
        s.out << "g: " << o.g << '\n';
        if (brute) {
            s.out << "brute: " << brute->get_str() << '\n';
        }
        if (character) {
            s.out << "character: " << character->get_str() << '\n';
            s.out << "point_count: " << point_count->get_str() << '\n';
        }
        if (brute && character) {
            s.out << "agreement: " << (agree ? "true" : "false") << '\n';
        }
    }
    return agree ? ok : check_failed;
}

// ---------------------------------------------------------------------------
// cache / table

struct CacheOptions {
    bool list = false;
    bool clear = false;
    std::string cache_dir;
    std::string format = "text";
};

inline int cmd_cache(const CacheOptions &o, Streams s)
{
    DiskCache cache(DiskCache::resolve_dir(o.cache_dir));
    if (o.clear) {
        const std::size_t removed = cache.clear();
        if (!o.list) {
            s.err << "removed " << removed << " cached document(s)\n";
        }
    }
    if (o.list) {
        const auto entries = cache.list();
        if (o.format == "json") {
            json arr = json::array();
            for (const auto &e : entries) {
                arr.push_back({{"kind", e.kind}, {"n", e.n}, {"g", e.g}, {"file", e.file}});
            }
            print_json(s.out, arr);
        } else {
            for (const auto &e : entries) {
                s.out << e.kind << '/' << e.n << '/' << e.g << '\n';
            }
        }
    }
    return ok;
}

struct TableOptions {
    std::string family = "gl";
    long q = 3;
    std::size_t bound = default_group_bound;
};

inline int cmd_table(const TableOptions &o, Streams s)
{
    if (!is_prime(o.q)) {
        s.err << "error: q=" << o.q << " must be prime\n";
        return usage;
    }
    const MatrixGroup grp = build_group(parse_family(o.family), 2, o.q, o.bound);
    const ConjugacyData cd(grp);
    print_json(s.out, character_table_json(grp, cd, character_table(cd)));
    return ok;
}

// ---------------------------------------------------------------------------

// args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    Streams s{out, err};
    CLI::App app{"Exact invariants of PGL(n,C) character varieties and finite-group point counts", "charvar"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const auto formats = CLI::IsMember({"json", "text"});

    ComputeOptions co;
    auto *compute = app.add_subcommand("compute", "Compute E, H(q,t), H(q,x,y) or the pure part PP");
    compute->add_option("--kind", co.kind, "E | hqt | hxy | pp")->required()->check(CLI::IsMember({"E", "hqt", "hxy", "pp"}));
    compute->add_option("--n", co.n, "rank n >= 1")->required()->check(CLI::PositiveNumber);
    compute->add_option("--g", co.g, "genus g >= 0")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--format", co.format, "json | text")->check(formats);
    compute->add_option("--cache-dir", co.cache_dir, "cache directory (default $CHARVAR_CACHE_DIR or ./.charvar-cache)");
    compute->add_flag("--no-cache", co.no_cache, "neither read nor write the cache");

    CheckOptions ko;
    auto *check = app.add_subcommand("check", "Run a check suite at (n, g)");
    check->add_option("--suite", ko.suite, "duality | euler | specialization | closedform | pp | all")
        ->check(CLI::IsMember({"duality", "euler", "specialization", "closedform", "pp", "all"}));
    check->add_option("--n", ko.n, "rank n >= 1")->required()->check(CLI::PositiveNumber);
    check->add_option("--g", ko.g, "genus g >= 2")->required()->check(CLI::NonNegativeNumber);
    check->add_option("--format", ko.format, "json | text")->check(formats);

    CountOptions no;
    auto *count = app.add_subcommand("count", "Count solutions of [A1,B1]...[Ag,Bg] = xi in GL(2,q) or SL(2,q)");
    count->add_option("--family", no.family, "gl | sl")->required()->check(CLI::IsMember({"gl", "sl"}));
    count->add_option("--q", no.q, "prime q")->required()->check(CLI::PositiveNumber);
    count->add_option("--g", no.g, "genus g >= 1")->required()->check(CLI::PositiveNumber);
    count->add_option("--zeta-order", no.zeta_order, "order n of the central element xi")
        ->required()
        ->check(CLI::PositiveNumber);
    count->add_option("--oracle", no.oracle, "brute | character | both")
        ->check(CLI::IsMember({"brute", "character", "both"}));
    count->add_option("--format", no.format, "json | text")->check(formats);
    count->add_option("--bound", no.bound, "largest group order to enumerate");

    CacheOptions cao;
    auto *cache = app.add_subcommand("cache", "List or clear cached documents");
    cache->add_flag("--list", cao.list, "list cached (kind, n, g)");
    cache->add_flag("--clear", cao.clear, "remove cached documents");
    cache->add_option("--cache-dir", cao.cache_dir, "cache directory");
    cache->add_option("--format", cao.format, "json | text")->check(formats);

    TableOptions to;
    auto *table = app.add_subcommand("table", "Export the character table of GL(2,q) or SL(2,q) as JSON");
    table->add_option("--family", to.family, "gl | sl")->required()->check(CLI::IsMember({"gl", "sl"}));
    table->add_option("--q", to.q, "prime q")->required()->check(CLI::PositiveNumber);
    table->add_option("--bound", to.bound, "largest group order to enumerate");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(co, s);
        }
        if (check->parsed()) {
            return cmd_check(ko, s);
        }
        if (count->parsed()) {
            return cmd_count(no, s);
        }
        if (cache->parsed()) {
            if (!cao.list && !cao.clear) {
                err << "error: cache needs --list or --clear\n";
                return usage;
            }
            return cmd_cache(cao, s);
        }
        if (table->parsed()) {
            return cmd_table(to, s);
        }
    } catch (const not_polynomial &e) {
        err << "error: " << e.what() << '\n';
        return assertion;
    } catch (const non_integer_coefficient &e) {
        err << "error: " << e.what() << '\n';
        return assertion;
    } catch (const lift_failure &e) {
        err << "error: " << e.what() << '\n';
        return assertion;
    } catch (const non_integral_count &e) {
        err << "error: " << e.what() << '\n';
        return assertion;
    } catch (const error &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace charvar::cli

#endif
