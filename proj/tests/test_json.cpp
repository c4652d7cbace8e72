#include <catch_amalgamated.hpp>

#include <random>

#include "schubert/json.hpp"

using namespace schubert;

namespace {

CohomologyClass random_class(std::mt19937& rng, const RectangleContext& ctx) {
    const auto basis = enumerate_diagrams(ctx);
    CohomologyClass x(ctx);
    const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int t = 0; t < terms; ++t) {
        const auto& d = basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
        x.add(d, BigInt(std::uniform_int_distribution<int>(-50, 50)(rng)));
    }
    return x;
}

} // namespace

TEST_CASE("class JSON shape") {
    const RectangleContext ctx(2, 4);
    const auto x = cup({1}, {1}, ctx);
    const auto j = to_json(x);
    CHECK(j.at("k") == 2);
    CHECK(j.at("n") == 4);
    REQUIRE(j.at("terms").size() == 2);
    CHECK(j.at("terms")[0].at("diagram") == json::array({2}));
    CHECK(j.at("terms")[0].at("coeff") == 1);
    CHECK(j.at("terms")[1].at("diagram") == json::array({1, 1}));
    CHECK(to_json(CohomologyClass(ctx)).at("terms").empty());
}

TEST_CASE("class JSON round trip") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const auto x = random_class(rng, RectangleContext(k, n));
        CHECK(class_from_json(to_json(x)) == x);
        CHECK(class_from_json(json::parse(to_json(x).dump())) == x);
        CHECK(parse_class(to_string(x), x.context()) == x);
    }
}

TEST_CASE("coefficients beyond 64 bits travel as strings") {
    const RectangleContext ctx(2, 4);
    CohomologyClass x(ctx);
    const BigInt huge = BigInt(1) << 100;
    x.add({1}, huge);
    x.add({2}, -huge);
    const auto j = to_json(x);
    CHECK(j.at("terms")[0].at("coeff").is_string());
    CHECK(class_from_json(j) == x);
    CHECK(bigint_from_json(json(-7)) == -7);
    CHECK(bigint_from_json(json("123456789012345678901234567890")) == BigInt("123456789012345678901234567890"));
}

TEST_CASE("malformed JSON is a validation error") {
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"k":2})")), ValidationError);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"k":2,"n":4,"terms":[{"diagram":[3],"coeff":1}]})")), ValidationError);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"k":2,"n":4,"terms":[{"diagram":[1,2],"coeff":1}]})")), ValidationError);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"k":2,"n":4,"terms":[{"diagram":"x","coeff":1}]})")), ValidationError);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"k":2,"n":4,"terms":[{"diagram":[1],"coeff":"1.5"}]})")), ValidationError);
    CHECK_THROWS_AS(class_from_json(json::parse(R"({"k":4,"n":4,"terms":[]})")), ValidationError);
    CHECK_THROWS_AS(cell_census_from_json(json::parse(R"({"q":2,"n":4})")), ValidationError);
    CHECK_THROWS_AS(rank_census_from_json(json::parse(R"({"q":2,"n":2,"m":2,"ranks":[{"rank":"a"}]})")), ValidationError);
}

TEST_CASE("census JSON round trips") {
    for (int q : {2, 3})
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k < n; ++k) {
                const CellCensusReport cells{q, n, k, schubert_cell_census(q, n, k)};
                const auto back = cell_census_from_json(json::parse(to_json(cells).dump()));
                CHECK(back == cells);
            }
    const RankCensusReport ranks{2, 2, 2, rank_census(2, 2, 2)};
    const auto j = to_json(ranks);
    CHECK(j.at("ranks")[1].at("rank") == 1);
    CHECK(j.at("ranks")[1].at("count") == 9);
    CHECK(rank_census_from_json(j) == ranks);

    // cells come out in graded order: the empty diagram first
    const auto cj = to_json(CellCensusReport{2, 4, 2, schubert_cell_census(2, 4, 2)});
    CHECK(cj.at("cells")[0].at("diagram").empty());
    CHECK(cj.at("cells")[0].at("count") == 16);
}

TEST_CASE("bound report JSON") {
    const auto j = to_json(main_bound(MatrixSpaceShape(4, 3), 4));
    CHECK(j.at("formula") == "m+1-e");
    CHECK(j.at("value") == 0);
    CHECK(j.at("vacuous") == true);
    CHECK(j.at("inputs").at("m") == 3);
}
