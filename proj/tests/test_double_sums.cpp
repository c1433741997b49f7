#include <catch2/catch_amalgamated.hpp>

#include "sylv/double_sums.hpp"
#include "sylv/io.hpp"
#include "sylv/verify.hpp"

using namespace sylv;

TEST_CASE("classical double sum oracle") {
    CHECK(render_unipoly(sylv_classical({1, 2}, {3}, {1, 0})) == "-U + 3");
    CHECK(render_unipoly(sylv_classical({1, 2}, {3}, {0, 0})) == "2");
    CHECK(sylv_classical({1, 2}, {3}, {3, 0}).is_zero());
    CHECK(sylv_classical({1, 2}, {3}, {0, 2}).is_zero());
    CHECK_THROWS_AS(sylv_classical({1, 1}, {3}, {1, 0}), domain_error);
    CHECK_THROWS_AS(sylv_classical({1, 2}, {3, 3}, {0, 1}), domain_error);
}

TEST_CASE("generalized double sum examples") {
    const RootMultiset p12 = RootMultiset::simple({1, 2});
    const RootMultiset q3 = RootMultiset::simple({3});
    CHECK(sylv_general(p12, q3, {1, 0}) == sylv_classical({1, 2}, {3}, {1, 0}));

    const RootMultiset one_sq(std::vector<RootGroup>{{1, 2}});
    CHECK(render_unipoly(sylv_general(one_sq, q3, {1, 0})) == "-U + 3");

    // Q | P with j = l = 1 < q = 2: the double sum collapses to zero
    const RootMultiset P(std::vector<RootGroup>{{1, 2}, {2, 1}});
    const RootMultiset Q = RootMultiset::simple({1, 2});
    CHECK(sylv_general(P, Q, {0, 1}).is_zero());
    // at j = q the collapse does not apply: Sylv^{0,q} is the monic Q itself
    CHECK(render_unipoly(sylv_general(one_sq, RootMultiset::simple({1}), {0, 1})) == "U - 1");

    CHECK(sylv_general(p12, q3, {3, 0}).is_zero());
}

TEST_CASE("simple-root equivalence on random inputs") {
    Rng rng(61);
    for (int t = 0; t < 12; ++t) {
        const int p = static_cast<int>(rng.range(1, 4));
        const int q = static_cast<int>(rng.range(0, 3));
        const auto pr = rng.distinct_ints(p);
        const auto qr = rng.distinct_ints(q);
        for (int k = 0; k <= p; ++k)
            for (int ell = 0; ell <= q; ++ell)
                CHECK(sylv_general(RootMultiset::simple(pr), RootMultiset::simple(qr), {k, ell}) ==
                      sylv_classical(pr, qr, {k, ell}));
    }
}

TEST_CASE("non-monic double sum") {
    const RootMultiset p12 = RootMultiset::simple({1, 2});
    const RootMultiset q3 = RootMultiset::simple({3});
    CHECK(sylv_nonmonic({1, p12}, {1, q3}, {1, 0}) == sylv_general(p12, q3, {1, 0}));

    // P = U - 3 monic, Q the constant -2: scale factor lc(Q)^{p-j} = -2
    CHECK(render_unipoly(sylv_nonmonic({1, RootMultiset::simple({3})}, {-2, RootMultiset()}, {0, 0})) == "-2");

    // scaling Q by c multiplies Sylv^{k,l} by c^{p-j}
    Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        const int p = static_cast<int>(rng.range(1, 4));
        const int q = static_cast<int>(rng.range(1, 3));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        const Rational c = rng.nonzero_int();
        const int k = static_cast<int>(rng.range(0, std::min(p, 2)));
        const int ell = static_cast<int>(rng.range(0, std::min({q, p - k, 2})));
        const int j = k + ell;
        CHECK(sylv_nonmonic({1, P}, {c, Q}, {k, ell}) ==
              rational_pow(c, p - j) * sylv_general(P, Q, {k, ell}));
    }
    CHECK_THROWS_AS(sylv_nonmonic({1, RootMultiset::simple({3})}, {1, RootMultiset()}, {2, 0}), domain_error);
    CHECK_THROWS_AS(sylv_nonmonic({0, p12}, {1, q3}, {0, 0}), argument_error);
}

TEST_CASE("multi double sum examples") {
    const RootMultiset p12 = RootMultiset::simple({1, 2});
    const RootMultiset q3 = RootMultiset::simple({3});
    CHECK(render_multipoly(msylv(p12, q3, {1, 0}, {"U1"})) == "-U1 + 3");

    // empty variable block: constant equal to the U^j coefficient of Sylv
    const MultiPoly c = msylv(p12, q3, {2, 0}, {});
    CHECK(c.is_constant());
    CHECK(c.constant_value() == sylv_general(p12, q3, {2, 0}).coeff(2));

    // coefficient extraction reproduces the single-variable double sum
    Rng rng(71);
    for (int t = 0; t < 8; ++t) {
        const int p = static_cast<int>(rng.range(2, 4));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        for (int j = std::max(0, p - 3); j < p; ++j)
            for (int ell = 0; ell <= std::min(j, q); ++ell) {
                std::vector<std::string> uv;
                for (int i = 1; i <= p - j; ++i) uv.push_back("U" + std::to_string(i));
                const MultiPoly ms = msylv(P, Q, {j - ell, ell}, uv);
                std::map<std::string, int> trail;
                for (size_t v = 1; v < uv.size(); ++v) trail[uv[v]] = j;
                CHECK(ms.coefficient_of(trail) ==
                      MultiPoly::from_unipoly(sylv_general(P, Q, {j - ell, ell}), uv[0]));
            }
    }
    CHECK_THROWS_AS(msylv(p12, q3, {1, 0}, {"U1", "U2"}), argument_error);
}

TEST_CASE("symbolic antisymmetrized sum") {
    const MultiPoly f11 = symbolic_F(1, 1, {0, 0});
    CHECK(render_multipoly(f11) == "X1 - Y1");
    CHECK(symbolic_F(2, 1, {3, 0}).is_zero());

    const MultiPoly f21 = symbolic_F(2, 1, {1, 0});
    CHECK(f21.rename({{"X1", "X2"}, {"X2", "X1"}}) == -f21);

    CHECK_THROWS_AS(symbolic_F(4, 1, {0, 0}), resource_error);
}

TEST_CASE("symbolic symmetric quotient") {
    CHECK(symbolic_S(1, 1, {0, 0}) == symbolic_F(1, 1, {0, 0}));
    const MultiPoly s = symbolic_S(2, 1, {0, 0});
    CHECK(s.rename({{"X1", "X2"}, {"X2", "X1"}}) == s);
    CHECK(s.substitute({{"X1", 1}, {"X2", 2}, {"Y1", 3}}).to_unipoly() == sylv_classical({1, 2}, {3}, {0, 0}));

    // the multiset substitution X_{i,j} -> x_i applied to S reproduces the
    // generalized sum built directly from derivated determinants
    const MultiPoly s21 = symbolic_S(2, 1, {1, 0});
    const MultiPoly sub = s21.substitute({{"X1", 1}, {"X2", 1}, {"Y1", 3}});
    CHECK(sub.to_unipoly() == sylv_general(RootMultiset(std::vector<RootGroup>{{1, 2}}), RootMultiset::simple({3}), {1, 0}));
}

TEST_CASE("products of evaluations factor through V[P]") {
    // V[(Q\L)||P] = V[P] f(Q\L) with f from del(V * prod P(Y)), and the
    // mirrored form for V[Q||(P\K)]
    Rng rng(73);
    for (int t = 0; t < 12; ++t) {
        const int p = static_cast<int>(rng.range(1, 4));
        const int q = static_cast<int>(rng.range(1, 4));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        const UniPoly Pp = from_roots(P);
        const UniPoly Qp = from_roots(Q);
        const int ell = static_cast<int>(rng.range(0, q));
        for_each_subset(q, ell, [&](const std::vector<int>& lpos) {
            const auto rest = Q.select_complement(lpos);
            const BoundVariables bv = bind_variables(rest, "Y");
            MultiPoly inner = vandermonde_symbolic(bv.names);
            for (const auto& name : bv.names) inner = inner * MultiPoly::from_unipoly(Pp, name);
            const Rational f = Rational(parity_sign(static_cast<long>(p) * (q - ell))) *
                               derivate_then_substitute(inner, bv).constant_value();
            auto blocks = rest;
            const auto& pf = P.flattened();
            blocks.insert(blocks.end(), pf.begin(), pf.end());
            CHECK(gen_vandermonde_value(blocks) == vp_closed_form(P) * f);
        });
        const int k = static_cast<int>(rng.range(0, p));
        for_each_subset(p, k, [&](const std::vector<int>& kpos) {
            const auto rest = P.select_complement(kpos);
            const BoundVariables bv = bind_variables(rest, "X");
            MultiPoly inner = vandermonde_symbolic(bv.names);
            for (const auto& name : bv.names) inner = inner * MultiPoly::from_unipoly(Qp, name);
            const Rational g = derivate_then_substitute(inner, bv).constant_value();
            auto blocks = Q.flattened();
            blocks.insert(blocks.end(), rest.begin(), rest.end());
            CHECK(gen_vandermonde_value(blocks) == vp_closed_form(Q) * g);
        });
    }
}

TEST_CASE("coefficient route agrees with the root route on split inputs") {
    Rng rng(79);
    for (int t = 0; t < 12; ++t) {
        const int p = static_cast<int>(rng.range(2, 4));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const ScaledRoots P{rng.nonzero_int(), rng.random_multiset(p)};
        const ScaledRoots Q{rng.nonzero_int(), rng.random_multiset(q)};
        const UniPoly p_poly = P.lc * from_roots(P.roots);
        for (int j = 0; j <= q; ++j)
            CHECK(sylv_j0_from_coefficients(p_poly, Q.lc, Q.roots, j) == sylv_nonmonic(P, Q, {j, 0}));
    }
    CHECK_THROWS_AS(sylv_j0_from_coefficients(UniPoly(), 1, RootMultiset(), 0), argument_error);
}
