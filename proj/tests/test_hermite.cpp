#include <catch2/catch_amalgamated.hpp>

#include "sylv/hermite.hpp"
#include "sylv/io.hpp"
#include "sylv/verify.hpp"

using namespace sylv;

TEST_CASE("hermite interpolation worked examples") {
    const RootMultiset one_sq(std::vector<RootGroup>{{1, 2}});
    CHECK(render_unipoly(hermite_interpolate({one_sq, {2, 3}})) == "3U - 1");
    CHECK(render_unipoly(hermite_interpolate({RootMultiset::simple({0, 1}), {0, 1}})) == "U");
    CHECK_THROWS_AS(hermite_interpolate({RootMultiset(), {}}), argument_error);
    CHECK_THROWS_AS(hermite_interpolate({one_sq, {2}}), argument_error);
}

TEST_CASE("hermite interpolation satisfies and uniquely determines the data") {
    Rng rng(97);
    for (int t = 0; t < 20; ++t) {
        const int p = static_cast<int>(rng.range(1, 6));
        const RootMultiset nodes = rng.random_multiset(p);
        std::vector<Rational> values;
        for (int i = 0; i < p; ++i) values.push_back(rng.small_int());
        const UniPoly f = hermite_interpolate({nodes, values});
        CHECK((f.is_zero() || f.degree_nonzero() <= p - 1));
        for (int pos = 0; pos < p; ++pos) {
            const auto& [x, j] = nodes.flattened()[pos];
            CHECK(normalized_derivative(f, j).evaluate(x) == values[pos]);
        }
        // round-trip: sampling a polynomial of degree < p recovers it
        const UniPoly g = rng.random_int_poly(static_cast<int>(rng.range(0, p - 1)));
        std::vector<Rational> sampled;
        for (int pos = 0; pos < p; ++pos) {
            const auto& [x, j] = nodes.flattened()[pos];
            sampled.push_back(normalized_derivative(g, j).evaluate(x));
        }
        CHECK(hermite_interpolate({nodes, sampled}) == g);
    }
}

TEST_CASE("hermite interpolation is linear in the data") {
    Rng rng(101);
    const RootMultiset nodes = rng.random_multiset(4);
    std::vector<Rational> a, b, sum;
    for (int i = 0; i < 4; ++i) {
        a.push_back(rng.small_int());
        b.push_back(rng.small_int());
        sum.push_back(a.back() + b.back());
    }
    CHECK(hermite_interpolate({nodes, sum}) == hermite_interpolate({nodes, a}) + hermite_interpolate({nodes, b}));
    std::vector<Rational> scaled;
    for (const auto& v : a) scaled.push_back(Rational(3) * v);
    CHECK(hermite_interpolate({nodes, scaled}) == Rational(3) * hermite_interpolate({nodes, a}));
}

TEST_CASE("symmetric basis shape") {
    const RootMultiset p1 = RootMultiset::simple({5});
    const auto b0 = symmetric_basis(p1, 0, {"U1"});
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].poly == MultiPoly(Rational(1)));

    const RootMultiset one_sq(std::vector<RootGroup>{{1, 2}});
    const auto b1 = symmetric_basis(one_sq, 1, {"U1"});
    REQUIRE(b1.size() == 2);
    for (const auto& el : b1) CHECK(el.poly.degree_in("U1") <= 1);

    Rng rng(103);
    for (int p = 1; p <= 4; ++p)
        for (int k = 0; k <= p; ++k) {
            const RootMultiset P = rng.random_multiset(p);
            const auto uv = detail::indexed_names("U", p - k);
            const auto basis = symmetric_basis(P, k, uv);
            CHECK(static_cast<long>(basis.size()) == static_cast<long>(binom(p, k)));
            for (const auto& el : basis) {
                for (const auto& v : uv) CHECK(el.poly.degree_in(v) <= k);
                for (size_t i = 0; i + 1 < uv.size(); ++i)
                    CHECK(el.poly.rename({{uv[i], uv[i + 1]}, {uv[i + 1], uv[i]}}) == el.poly);
            }
        }
    CHECK_THROWS_AS(symmetric_basis(p1, 2, {}), argument_error);
    CHECK_THROWS_AS(symmetric_basis(p1, 0, {"U1", "U2"}), argument_error);
}

TEST_CASE("symmetric coordinates examples") {
    // g = 1, p = 1, k = 0: single coordinate 1
    const RootMultiset p1 = RootMultiset::simple({5});
    const auto coords = symmetric_coords(MultiPoly(Rational(1)), p1, 0, {"U1"});
    REQUIRE(coords.size() == 1);
    CHECK(coords.begin()->second == 1);

    // g(U) = prod Q(U_t) with q <= k: coordinates are
    // (-1)^{k(p-k)} s_K V[Q||(P\K)] / V[Q]
    Rng rng(107);
    for (int t = 0; t < 10; ++t) {
        const int p = static_cast<int>(rng.range(2, 4));
        const int k = static_cast<int>(rng.range(1, p));
        const int q = static_cast<int>(rng.range(1, k));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        const UniPoly Qp = from_roots(Q);
        const auto uv = detail::indexed_names("U", p - k);
        MultiPoly g((Rational(1)));
        for (const auto& name : uv) g = g * MultiPoly::from_unipoly(Qp, name);
        const auto cs = symmetric_coords(g, P, k, uv);
        for_each_subset(p, k, [&](const std::vector<int>& kpos) {
            auto blocks = Q.flattened();
            const auto rest = P.select_complement(kpos);
            blocks.insert(blocks.end(), rest.begin(), rest.end());
            const Rational expected = Rational(parity_sign(static_cast<long>(k) * (p - k)) *
                                               subset_signature(p, kpos)) *
                                      gen_vandermonde_value(blocks) / vp_closed_form(Q);
            CHECK(cs.at(kpos) == expected);
        });
    }
}

TEST_CASE("symmetric coordinate round-trip") {
    Rng rng(109);
    for (int t = 0; t < 15; ++t) {
        const int p = static_cast<int>(rng.range(1, 4));
        const int k = static_cast<int>(rng.range(0, p));
        const RootMultiset P = rng.random_multiset(p);
        const auto uv = detail::indexed_names("U", p - k);
        const MultiPoly g = verify_detail::random_symmetric_poly(rng, uv, k);
        const auto coords = symmetric_coords(g, P, k, uv);
        CHECK(reconstruct(coords, symmetric_basis(P, k, uv)) == g);
    }
}

TEST_CASE("symmetric coordinates reject bad input") {
    const RootMultiset P = RootMultiset::simple({1, 2});
    const MultiPoly u1 = MultiPoly::variable("U1");
    const MultiPoly u2 = MultiPoly::variable("U2");
    // asymmetric
    CHECK_THROWS_AS(symmetric_coords(u1, P, 0, {"U1", "U2"}), argument_error);
    // over-degree
    CHECK_THROWS_AS(symmetric_coords(u1 * u1 * u2 * u2, P, 1, {"U1", "U2"}), argument_error);
    // stray variable
    CHECK_THROWS_AS(symmetric_coords(MultiPoly::variable("W"), P, 1, {"U1"}), argument_error);
}

TEST_CASE("dual functionals diagonalize the basis") {
    // evaluating del^[P\K'] ( V(X_{P\K'}) b_K(X_{P\K'}) ) at P\K' is, up to the
    // stated sign, the Kronecker pairing of basis elements and subsets
    Rng rng(113);
    for (int p = 2; p <= 5; ++p) {
        const RootMultiset P = rng.random_multiset(p);
        for (int k = 1; k < p; ++k) {
            const auto uv = detail::indexed_names("U", p - k);
            const auto basis = symmetric_basis(P, k, uv);
            for (const auto& el : basis) {
                for_each_subset(p, k, [&](const std::vector<int>& other) {
                    const BoundVariables bv = bind_variables(P.select_complement(other), "X");
                    std::map<std::string, std::string> to_bound;
                    for (size_t i = 0; i < uv.size(); ++i) to_bound.emplace(uv[i], bv.names[i]);
                    const MultiPoly inner = vandermonde_symbolic(bv.names) * el.poly.rename(to_bound);
                    const Rational h = derivate_then_substitute(inner, bv).constant_value();
                    const Rational expected =
                        other == el.subset.positions
                            ? Rational(parity_sign(static_cast<long>(k) * (p - k)) * el.subset.sign)
                            : Rational(0);
                    CHECK(h == expected);
                });
            }
        }
    }
}
