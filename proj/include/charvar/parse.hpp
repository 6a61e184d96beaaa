#ifndef CHARVAR_PARSE_HPP
#define CHARVAR_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include <charvar/error.hpp>
#include <charvar/polynomial.hpp>

namespace charvar
{

// Reads the canonical text rendering back (and slightly more: any order of
// terms, repeated factors, spaces anywhere). Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | var ['^' ['-'] integer]
inline SparsePoly parse_poly(VarContext ctx, std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    std::size_t pos = 0;
    auto fail = [&](const std::string &why) -> void {
        throw error("parse_poly: " + why + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };
    auto read_int = [&]() {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
        if (start == pos) {
            fail("expected digits");
        }
        return Integer(s.substr(start, pos - start));
    };
    std::vector<SparsePoly::term_type> terms;
    if (s.empty()) {
        fail("empty input");
    }
    while (pos < s.size()) {
        Rational coeff = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') {
                coeff = -1;
            }
            ++pos;
        } else if (!terms.empty()) {
            fail("expected '+' or '-'");
        }
        Monomial m{};
        bool first_factor = true;
        while (true) {
            if (!first_factor) {
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                } else {
                    break;
                }
            }
            first_factor = false;
            if (pos >= s.size()) {
                fail("unexpected end");
            }
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                Rational c(read_int());
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    c /= Rational(read_int());
                }
                coeff *= c;
            } else {
                const int idx = ctx.index_of(s[pos]);
                if (idx < 0) {
                    fail(std::string("unknown variable '") + s[pos] + "'");
                }
                ++pos;
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    bool neg = false;
                    if (pos < s.size() && s[pos] == '-') {
                        neg = true;
                        ++pos;
                    }
                    e = static_cast<int>(read_int().get_si());
                    if (neg) {
                        e = -e;
                    }
                }
                m[static_cast<std::size_t>(idx)] += e;
            }
        }
        terms.emplace_back(m, coeff);
    }
    return SparsePoly(ctx, std::move(terms));
}

} // namespace charvar

#endif
