#include "taut/json_io.hpp"

#include "taut/algebra.hpp"

#include <doctest.h>

using namespace taut;

TEST_CASE("rational round trip") {
    for (Rational r : {Rational(0), Rational(1, 24), Rational(-7, 3),
                       Rational(Integer("123456789123456789"), Integer(7))}) {
        json j = to_json(r);
        CHECK(rational_from_json(j) == r);
    }
    CHECK(to_json(Rational(-1, 24))["num"] == "-1");
    CHECK(to_json(Rational(-1, 24))["den"] == "24");
    CHECK_THROWS(rational_from_json(json{{"num", "1"}}));
}

TEST_CASE("graph round trip") {
    TailGraph t;
    t.g = 4;
    t.n = 2;
    t.k = 2;
    t.root.leg_psi = {1, 0};
    t.root.star_psi = {0, 1};
    t.root.lambda = {1, 2};
    t.root.big_lambda = {-1, 1};
    t.tails.resize(2);
    t.tails[0].bullet_psi = 1;
    t.tails[1].lambda1 = 1;
    t.tails[1].big_lambda = {1};

    TailGraph back = tail_graph_from_json(to_json(t));
    CHECK(back == canonicalize(t));
}

TEST_CASE("graph deserialization validates structure") {
    json j = to_json(TailGraph{1, 2, 0, {{0, 0}, {}, {}, {}}, {}});
    CHECK_NOTHROW(tail_graph_from_json(j));
    j["k"] = 1;  // sizes no longer consistent
    CHECK_THROWS_AS(tail_graph_from_json(j), std::invalid_argument);
}

TEST_CASE("graph sum round trip") {
    GraphSum s = mumford_lhs(2, 1);
    json j = to_json(s);
    CHECK(graph_sum_from_json(j) == s);
    // Deterministic: serializing twice is byte-identical.
    CHECK(j.dump() == to_json(mumford_lhs(2, 1)).dump());
}

TEST_CASE("wk cache round trip and revalidation path") {
    std::map<TauIndex, Rational> entries{
        {TauIndex::make(1, {1}), Rational(1, 24)},
        {TauIndex::make(2, {4}), Rational(1, 1152)},
    };
    json j = wk_cache_to_json(entries);
    CHECK(wk_cache_from_json(j) == entries);

    json bad = json::parse(R"({"entries":[{"g":1,"d":[-1],"value":{"num":"1","den":"24"}}]})");
    CHECK_THROWS_AS(wk_cache_from_json(bad), std::invalid_argument);
}
