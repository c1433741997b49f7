#include <catch2/catch_amalgamated.hpp>

#include "sylv/io.hpp"
#include "sylv/verify.hpp"

using namespace sylv;

TEST_CASE("rational text form") {
    CHECK(format_rational(Rational(2)) == "2");
    CHECK(format_rational(Rational(-3, 6)) == "-1/2");
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational(" 3/9 ") == Rational(1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), argument_error);
    CHECK_THROWS_AS(parse_rational("1/-2"), argument_error);
    CHECK_THROWS_AS(parse_rational("a"), argument_error);
    CHECK_THROWS_AS(parse_rational(""), argument_error);

    Rng rng(149);
    for (int t = 0; t < 100; ++t) {
        const Rational v(rng.range(-500, 500), rng.range(1, 97));
        CHECK(parse_rational(format_rational(v)) == v);
    }
}

TEST_CASE("polynomial text rendering") {
    CHECK(render_unipoly(UniPoly()) == "0");
    CHECK(render_unipoly(UniPoly(std::vector<Rational>{3, -1})) == "-U + 3");
    CHECK(render_unipoly(UniPoly(std::vector<Rational>{-1, 3})) == "3U - 1");
    CHECK(render_unipoly(UniPoly(std::vector<Rational>{2})) == "2");
    CHECK(render_unipoly(UniPoly(std::vector<Rational>{0, 1})) == "U");
    CHECK(render_unipoly(UniPoly(std::vector<Rational>{Rational(1, 2), Rational(-3, 2), 0, 1})) ==
          "U^3 - 3/2U + 1/2");
    CHECK(render_unipoly(UniPoly(std::vector<Rational>{0, 0, -1})) == "-U^2");
}

TEST_CASE("root spec parsing") {
    const RootMultiset r = parse_root_spec("1^2,3");
    REQUIRE(r.groups().size() == 2);
    CHECK(r.groups()[0].root == 1);
    CHECK(r.groups()[0].multiplicity == 2);
    CHECK(r.degree() == 3);
    CHECK(parse_root_spec("").degree() == 0);
    CHECK(parse_root_spec("-1/2^3").degree() == 3);
    CHECK(parse_root_spec(" 1 , 2 ").degree() == 2);
    CHECK_THROWS_AS(parse_root_spec("1,1"), argument_error);
    CHECK_THROWS_AS(parse_root_spec("1^0"), argument_error);
    CHECK_THROWS_AS(parse_root_spec("1^-2"), argument_error);
    CHECK_THROWS_AS(parse_root_spec("x"), argument_error);
}

TEST_CASE("coefficient list parsing") {
    const UniPoly p = parse_coeff_list("2,-3,1");
    CHECK(render_unipoly(p) == "U^2 - 3U + 2");
    CHECK_THROWS_AS(parse_coeff_list("1,0"), argument_error);
    CHECK_THROWS_AS(parse_coeff_list("0"), argument_error);
    CHECK_THROWS_AS(parse_coeff_list(""), argument_error);
}

TEST_CASE("PolyJson round-trips byte for byte") {
    Rng rng(151);
    for (int t = 0; t < 40; ++t) {
        const UniPoly p = t == 0 ? UniPoly() : rng.random_int_poly(static_cast<int>(rng.range(0, 6)));
        const nlohmann::json j = unipoly_to_json(p, "U");
        const std::string emitted = j.dump();
        const auto [back, var] = unipoly_from_json(nlohmann::json::parse(emitted));
        CHECK(back == p);
        CHECK(var == "U");
        CHECK(unipoly_to_json(back, var).dump() == emitted);
    }
    CHECK_THROWS_AS(unipoly_from_json(nlohmann::json::parse("{\"coeffs\":[\"1\",\"0\"],\"variable\":\"U\"}")),
                    argument_error);
    CHECK_THROWS_AS(unipoly_from_json(nlohmann::json::parse("[1,2]")), argument_error);
}

TEST_CASE("multivariate rendering") {
    const MultiPoly u1 = MultiPoly::variable("U1");
    const MultiPoly u2 = MultiPoly::variable("U2");
    CHECK(render_multipoly(MultiPoly()) == "0");
    CHECK(render_multipoly(-u1 + MultiPoly(Rational(3))) == "-U1 + 3");
    CHECK(render_multipoly(Rational(2) * (u1 * u1 * u2) - u2) == "2U1^2*U2 - U2");
    const nlohmann::json j = multipoly_to_json(u1 * u2 - MultiPoly(Rational(1)));
    CHECK(j["variables"] == nlohmann::json({"U1", "U2"}));
    CHECK(j["terms"].size() == 2);
}
