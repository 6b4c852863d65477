#include "bilindisc/system_file.hpp"

#include "bilindisc/errors.hpp"

#include <fstream>
#include <sstream>

namespace bilindisc {

using nlohmann::json;

namespace {

Rational read_rational(const json& value, const std::string& where) {
    if (!value.is_string()) {
        throw ParseError(where + ": rationals must be strings like \"3/4\"");
    }
    try {
        return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(where + ": missing key '" + key + "'");
    }
    return obj.at(key);
}

int read_dimension(const json& doc, const std::string& key) {
    const json& v = member(doc, key, "bilinear system");
    if (!v.is_number_integer() || v.get<int>() < 1) {
        throw ParseError("bilinear system: '" + key + "' must be a positive integer");
    }
    return v.get<int>();
}

BilinearSystem bilinear_from_json(const json& doc) {
    const int n = read_dimension(doc, "n");
    const int m = read_dimension(doc, "m");
    const json& eqs = member(doc, "equations", "bilinear system");
    if (!eqs.is_array() || static_cast<int>(eqs.size()) != n + m) {
        throw ParseError("bilinear system: expected " + std::to_string(n + m) + " equations");
    }
    std::vector<RationalMatrix> matrices;
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        const std::string where = "equation " + std::to_string(k);
        const json& rows = member(eqs[k], "coeffs", where);
        if (!rows.is_array() || static_cast<int>(rows.size()) != n + 1) {
            throw ParseError(where + ": coeffs must have " + std::to_string(n + 1) + " rows");
        }
        RationalMatrix mat(n + 1, m + 1);
        for (int i = 0; i <= n; ++i) {
            const json& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != m + 1) {
                throw ParseError(where + ": each coeffs row must have " + std::to_string(m + 1) +
                                 " entries");
            }
            for (int j = 0; j <= m; ++j) {
                mat(i, j) = read_rational(row[static_cast<std::size_t>(j)],
                                          where + " coeffs[" + std::to_string(i) + "][" +
                                              std::to_string(j) + "]");
            }
        }
        matrices.push_back(std::move(mat));
    }
    return BilinearSystem::numeric(n, m, matrices);
}

template <std::size_t N>
void read_player(const json& doc, const char* player, const std::array<int, N>& labels,
                 std::array<Rational, 12>& values, std::size_t offset) {
    const json& group = member(doc, player, "three-player system");
    if (!group.is_object() || group.size() != N) {
        throw ParseError(std::string("three-player system: '") + player + "' needs exactly " +
                         std::to_string(N) + " coefficients");
    }
    for (std::size_t s = 0; s < N; ++s) {
        const std::string key = player + std::to_string(labels[s]);
        values[offset + s] = read_rational(member(group, key, player), key);
    }
}

ThreePlayerSystem three_player_from_json(const json& doc) {
    std::array<Rational, 12> values;
    read_player(doc, "a", ThreePlayerSystem::kLabelsA, values, 0);
    read_player(doc, "b", ThreePlayerSystem::kLabelsB, values, 4);
    read_player(doc, "c", ThreePlayerSystem::kLabelsC, values, 8);
    return ThreePlayerSystem::numeric(values);
}

template <std::size_t N>
json player_to_json(const char* player, const std::array<int, N>& labels,
                    const std::array<MultiPoly, N>& coeffs) {
    json out = json::object();
    for (std::size_t s = 0; s < N; ++s) {
        out[player + std::to_string(labels[s])] = to_string(coeffs[s].to_constant());
    }
    return out;
}

}  // namespace

SystemFile system_from_json(const json& doc) {
    const json& kind = member(doc, "kind", "system file");
    if (kind == "bilinear") return bilinear_from_json(doc);
    if (kind == "three-player") return three_player_from_json(doc);
    throw ParseError("system file: unknown kind " + kind.dump());
}

SystemFile parse_system(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return system_from_json(doc);
}

SystemFile load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_system(buffer.str());
}

json system_to_json(const SystemFile& sys) {
    if (const auto* bil = std::get_if<BilinearSystem>(&sys)) {
        json eqs = json::array();
        for (int k = 0; k < bil->equation_count(); ++k) {
            json rows = json::array();
            for (int i = 0; i <= bil->n(); ++i) {
                json row = json::array();
                for (int j = 0; j <= bil->m(); ++j) {
                    row.push_back(to_string(bil->coeff(k, i, j).to_constant()));
                }
                rows.push_back(std::move(row));
            }
            eqs.push_back({{"coeffs", std::move(rows)}});
        }
        return {{"kind", "bilinear"}, {"n", bil->n()}, {"m", bil->m()}, {"equations", eqs}};
    }
    const auto& tp = std::get<ThreePlayerSystem>(sys);
    return {{"kind", "three-player"},
            {"a", player_to_json("a", ThreePlayerSystem::kLabelsA, tp.a)},
            {"b", player_to_json("b", ThreePlayerSystem::kLabelsB, tp.b)},
            {"c", player_to_json("c", ThreePlayerSystem::kLabelsC, tp.c)}};
}

std::string serialize_system(const SystemFile& sys) { return system_to_json(sys).dump(2); }

}  // namespace bilindisc
