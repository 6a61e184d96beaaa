#ifndef CHARVAR_TABLE_EXPORT_HPP
#define CHARVAR_TABLE_EXPORT_HPP

#include <string>

#include <json.hpp>

#include <charvar/character_table.hpp>
#include <charvar/conjugacy.hpp>
#include <charvar/matrix_group.hpp>

namespace charvar
{

// {"group","order","exponent","cyclotomic_modulus","classes":[{"representative":[[a,b],[c,d]],"size","element_order"}],
//  "characters":[{"degree","values":[[coordinates...] per class]}]}
inline nlohmann::json character_table_json(const MatrixGroup &g, const ConjugacyData &cd, const CharacterTable &t)
{
    using nlohmann::json;
    json classes = json::array();
    for (const auto &c : cd.classes()) {
        const Mat2 &m = g.element(c.representative);
        classes.push_back({{"representative", {{m[0], m[1]}, {m[2], m[3]}}},
                           {"size", c.size()},
                           {"element_order", c.element_order}});
    }
    json modulus = json::array();
    for (const auto &c : t.ring().modulus()) {
        modulus.push_back(c.get_si());
    }
    json characters = json::array();
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
        json values = json::array();
        for (const auto &v : t.row(chi)) {
            json coords = json::array();
            for (const auto &x : v) {
                coords.push_back(x.get_si());
            }
            values.push_back(coords);
        }
        characters.push_back({{"degree", t.degree(chi)}, {"values", values}});
    }
    return {{"group", g.label()},
            {"order", g.order()},
            {"exponent", t.ring().order()},
            {"cyclotomic_modulus", modulus},
            {"classes", classes},
            {"characters", characters}};
}

} // namespace charvar

#endif
