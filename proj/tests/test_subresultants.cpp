#include <catch2/catch_amalgamated.hpp>

#include "sylv/io.hpp"
#include "sylv/subresultants.hpp"
#include "sylv/verify.hpp"

using namespace sylv;

namespace {
const UniPoly kP(std::vector<Rational>{2, -3, 1}); // U^2 - 3U + 2
const UniPoly kQ(std::vector<Rational>{-3, 1});    // U - 3
} // namespace

TEST_CASE("worked subresultant family") {
    CHECK(render_unipoly(sres_det(kP, kQ, 0)) == "-2");
    CHECK(sres_det(kP, kQ, 1) == kQ);
    const SresSequence s = sres_prs(kP, kQ);
    REQUIRE(s.entries.size() == 2);
    CHECK(render_unipoly(s.entries.at(1)) == "U - 3");
    CHECK(render_unipoly(s.entries.at(0)) == "-2");
}

TEST_CASE("conventional levels") {
    Rng rng(127);
    for (int t = 0; t < 20; ++t) {
        const int p = static_cast<int>(rng.range(3, 7));
        const int q = static_cast<int>(rng.range(1, p - 2));
        const UniPoly P = rng.random_int_poly(p);
        const UniPoly Q = rng.random_int_poly(q);
        CHECK(sres_det(P, Q, p - 1) == Q);
        for (int j = q + 1; j < p - 1; ++j) CHECK(sres_det(P, Q, j).is_zero());
        CHECK(sres_det(P, Q, q) == Rational(epsilon(p - q)) * rational_pow(Q.leading(), p - q - 1) * Q);
    }
}

TEST_CASE("sign anchors pin the matrix layout") {
    Rng rng(131);
    for (int t = 0; t < 25; ++t) {
        const int p = static_cast<int>(rng.range(2, 7));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const UniPoly P = rng.random_int_poly(p);
        const UniPoly Q = rng.random_int_poly(q);
        const UniPoly R = -euclid_divrem(P, Q).second;
        CHECK(sres_det(P, Q, q - 1) == Rational(epsilon(p - q)) * rational_pow(Q.leading(), p - q + 1) * R);
        // divisibility: every level strictly below q-1 vanishes for P = C Q
        const UniPoly C = rng.random_int_poly(static_cast<int>(rng.range(1, 2)));
        const UniPoly M = C * Q;
        for (int j = 0; j < q - 1; ++j) CHECK(sres_det(M, Q, j).is_zero());
    }
}

TEST_CASE("determinant and recursion routes agree") {
    Rng rng(137);
    for (int t = 0; t < 25; ++t) {
        const int p = static_cast<int>(rng.range(2, 7));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const UniPoly P = rng.random_int_poly(p);
        const UniPoly Q = rng.random_int_poly(q);
        const SresSequence s = sres_prs(P, Q);
        REQUIRE(static_cast<int>(s.entries.size()) == p);
        for (int j = 0; j <= p - 1; ++j) CHECK(s.entries.at(j) == sres_det(P, Q, j));
    }
}

TEST_CASE("subresultant argument validation") {
    CHECK_THROWS_AS(sres_det(kQ, kP, 0), domain_error);
    CHECK_THROWS_AS(sres_det(kP, kP, 0), domain_error);
    CHECK_THROWS_AS(sres_det(kP, UniPoly(), 0), domain_error);
    CHECK_THROWS_AS(sres_det(kP, kQ, 2), argument_error);
    CHECK_THROWS_AS(sres_det(kP, kQ, -1), argument_error);
    CHECK_THROWS_AS(sres_prs(kQ, kP), domain_error);
    CHECK_THROWS_AS(sylvester_habicht_matrix(kP, kQ, 1), argument_error);
}

TEST_CASE("sylvester-habicht matrix shape") {
    // p = 3, q = 2, j = 0: rows X P, P, Q, X Q, X^2 Q over X^4..1
    const UniPoly P(std::vector<Rational>{-6, 11, -6, 1});
    const UniPoly Q(std::vector<Rational>{4, -5, 1});
    const ScalarMatrix m = sylvester_habicht_matrix(P, Q, 0);
    REQUIRE(m.rows() == 5);
    REQUIRE(m.cols() == 5);
    // first row: X P has coefficients (1, -6, 11, -6, 0) on X^4..X^0
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 4) == 0);
    // second row: P as (0, 1, -6, 11, -6)
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 4) == -6);
    // third row: Q as (0, 0, 1, -5, 4)
    CHECK(m.at(2, 2) == 1);
    CHECK(m.at(2, 4) == 4);
}

TEST_CASE("remainder sequences") {
    CHECK(remainder_sequence(kP, kQ).size() == 3);
    CHECK(render_unipoly(remainder_sequence(kP, kQ).back()) == "-2");
    CHECK(remainder_sequence(kP * kQ, kQ).size() == 2); // Q | P stops immediately
    CHECK_THROWS_AS(remainder_sequence(kP, UniPoly()), domain_error);

    Rng rng(139);
    for (int t = 0; t < 20; ++t) {
        const UniPoly P = rng.random_int_poly(static_cast<int>(rng.range(1, 7)));
        const UniPoly Q = rng.random_int_poly(static_cast<int>(rng.range(0, 5)));
        const auto s = remainder_sequence(P, Q);
        CHECK(static_cast<long>(s.size()) <= static_cast<long>(Q.degree_nonzero()) + 2);
        for (size_t i = 2; i < s.size(); ++i)
            CHECK(s[i] == -euclid_divrem(s[i - 2], s[i - 1]).second);
    }
}
