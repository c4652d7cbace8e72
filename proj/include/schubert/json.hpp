#pragma once

// JSON forms of classes, censuses and bound reports.
//
//   class:  {"terms":[{"diagram":[2,1],"coeff":3}, ...], "k":2, "n":5}
//   cells:  {"q":2,"n":4,"k":2,"cells":[{"diagram":[1],"count":8}, ...]}
//   ranks:  {"q":2,"n":2,"m":2,"ranks":[{"rank":0,"count":1}, ...]}
//
// Coefficients that do not fit in 64 bits are written as decimal strings.

#include <cstdint>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "schubert/bounds.hpp"
#include "schubert/error.hpp"
#include "schubert/oracle.hpp"
#include "schubert/ring.hpp"
#include "schubert/young.hpp"

namespace schubert {

using json = nlohmann::json;

inline json diagram_to_json(const YoungDiagram& d) { return json(d.parts()); }

inline YoungDiagram diagram_from_json(const json& j) {
    detail::require(j.is_array(), "diagram must be a JSON array of integers");
    return YoungDiagram(j.get<std::vector<int>>());
}

inline json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    detail::require(j.is_string(), "coefficient must be an integer or a decimal string");
    const auto s = j.get<std::string>();
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw ValidationError("malformed coefficient '" + s + "'");
    }
}

inline json to_json(const CohomologyClass& x) {
    json terms = json::array();
    for (const auto& [d, c] : x.terms()) terms.push_back({{"diagram", diagram_to_json(d)}, {"coeff", bigint_to_json(c)}});
    return {{"terms", terms}, {"k", x.context().k}, {"n", x.context().n}};
}

inline CohomologyClass class_from_json(const json& j) {
    try {
        const RectangleContext ctx(j.at("k").get<int>(), j.at("n").get<int>());
        CohomologyClass out(ctx);
        for (const auto& t : j.at("terms")) out.add(diagram_from_json(t.at("diagram")), bigint_from_json(t.at("coeff")));
        return out;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed class JSON: ") + e.what());
    }
}

struct CellCensusReport {
    int q = 2;
    int n = 2;
    int k = 1;
    CellCensus cells;
    friend bool operator==(const CellCensusReport&, const CellCensusReport&) = default;
};

inline json to_json(const CellCensusReport& r) {
    json cells = json::array();
    for (const auto& [d, count] : r.cells) cells.push_back({{"diagram", diagram_to_json(d)}, {"count", count}});
    return {{"q", r.q}, {"n", r.n}, {"k", r.k}, {"cells", cells}};
}

inline CellCensusReport cell_census_from_json(const json& j) {
    try {
        CellCensusReport r;
        r.q = j.at("q").get<int>();
        r.n = j.at("n").get<int>();
        r.k = j.at("k").get<int>();
        for (const auto& c : j.at("cells")) r.cells[diagram_from_json(c.at("diagram"))] = c.at("count").get<std::uint64_t>();
        return r;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed census JSON: ") + e.what());
    }
}

struct RankCensusReport {
    int q = 2;
    int n = 1;
    int m = 1;
    std::map<int, std::uint64_t> ranks;
    friend bool operator==(const RankCensusReport&, const RankCensusReport&) = default;
};

inline json to_json(const RankCensusReport& r) {
    json ranks = json::array();
    for (const auto& [rank, count] : r.ranks) ranks.push_back({{"rank", rank}, {"count", count}});
    return {{"q", r.q}, {"n", r.n}, {"m", r.m}, {"ranks", ranks}};
}

inline RankCensusReport rank_census_from_json(const json& j) {
    try {
        RankCensusReport r;
        r.q = j.at("q").get<int>();
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<int>();
        for (const auto& c : j.at("ranks")) r.ranks[c.at("rank").get<int>()] = c.at("count").get<std::uint64_t>();
        return r;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed rank census JSON: ") + e.what());
    }
}

inline json to_json(const BoundReport& r) {
    return {{"formula", r.formula}, {"source", r.source},  {"inputs", r.inputs},
            {"value", r.value},     {"vacuous", r.vacuous}, {"vacuously_true", r.vacuously_true}};
}

} // namespace schubert
