#include "doctest.h"

#include "wheelzeta/errors.hpp"
#include "wheelzeta/json_io.hpp"
#include "wheelzeta/wheel.hpp"

using namespace wheelzeta;
using nlohmann::json;

TEST_CASE("polynomial round trip") {
    for (unsigned d : {1u, 2u, 6u, 12u}) {
        const auto p = wcyc(d);
        CHECK(polynomial_from_json(json::parse(to_json(p).dump())) == p);
    }
    const auto j = to_json(wcyc(2));
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][0]["c"] == "2");
    const auto big = BivariatePolynomial(parse_decimal("123456789012345678901234567890"));
    CHECK(to_json(big)["terms"][0]["c"] == "123456789012345678901234567890");
    CHECK(polynomial_from_json(to_json(big)) == big);
}

TEST_CASE("malformed polynomial JSON") {
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"terms":[{"q":0,"t":0,"c":2}]})")), InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"terms":[{"q":0,"t":0,"c":"1"},{"q":0,"t":0,"c":"2"}]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"terms":[{"q":-1,"t":0,"c":"1"}]})")), InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([1,2])")), InvalidArgument);
}

TEST_CASE("SNF round trip") {
    const SNFResult s{{1, 4, 4}};
    CHECK(snf_from_json(json::parse(to_json(s).dump())) == s);
    CHECK_THROWS_AS(snf_from_json(json::parse(R"({"factors":[]})")), InvalidArgument);
}

TEST_CASE("integer polynomial encoding") {
    CHECK(to_json(cyclotomic(6)) == json::parse(R"(["1","-1","1"])"));
}
