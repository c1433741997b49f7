#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sylv/double_sums.hpp"
#include "sylv/hermite.hpp"
#include "sylv/io.hpp"
#include "sylv/subresultants.hpp"

namespace sylv {

/// Deterministic splitmix64 stream, so verification runs reproduce bit-exactly
/// for a given seed regardless of the standard library's distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        if (hi < lo) throw argument_error("Rng::range: empty interval");
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next() & 1) != 0; }

    Rational small_int() { return Rational(range(-9, 9)); }
    Rational nonzero_int() {
        const long v = range(1, 9);
        return Rational(coin() ? v : -v);
    }

    std::vector<Rational> distinct_ints(int count, int bound = 9) {
        if (count > 2 * bound + 1) throw argument_error("distinct_ints: range too small");
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < count) {
            const Rational v(range(-bound, bound));
            bool seen = false;
            for (const auto& x : out) seen = seen || (x == v);
            if (!seen) out.push_back(v);
        }
        return out;
    }

    /// Random ordered multiset of the given total degree with multiplicities
    /// bounded by max_mult and integer roots in [-9, 9].
    RootMultiset random_multiset(int degree, int max_mult = 3) {
        std::vector<int> pattern;
        int left = degree;
        while (left > 0) {
            const int part = static_cast<int>(range(1, std::min<long>(max_mult, left)));
            pattern.push_back(part);
            left -= part;
        }
        return multiset_from_pattern(pattern);
    }

    RootMultiset multiset_from_pattern(const std::vector<int>& pattern) {
        const auto roots = distinct_ints(static_cast<int>(pattern.size()));
        std::vector<RootGroup> groups;
        for (size_t i = 0; i < pattern.size(); ++i) groups.push_back({roots[i], pattern[i]});
        return RootMultiset(std::move(groups));
    }

    UniPoly random_int_poly(int degree) {
        std::vector<Rational> coeffs(degree + 1);
        for (int i = 0; i < degree; ++i) coeffs[i] = small_int();
        coeffs[degree] = nonzero_int();
        return UniPoly(std::move(coeffs));
    }

  private:
    std::uint64_t state_;
};

/// All ordered multiplicity patterns (compositions) of p.
inline std::vector<std::vector<int>> multiplicity_patterns(int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= left; ++part) {
            cur.push_back(part);
            rec(left - part);
            cur.pop_back();
        }
    };
    rec(p);
    return out;
}

inline std::string root_spec_text(const RootMultiset& r) {
    std::string s;
    for (const auto& g : r.groups()) {
        if (!s.empty()) s += ',';
        s += format_rational(g.root);
        if (g.multiplicity > 1) s += '^' + std::to_string(g.multiplicity);
    }
    return s;
}

struct IdentityReport {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> reproducers;

    IdentityReport() = default;
    explicit IdentityReport(std::string identity) : name(std::move(identity)) {}

    void record(bool ok, const std::function<std::string()>& describe) {
        ++checks;
        if (!ok) {
            ++failures;
            if (reproducers.size() < 3) reproducers.push_back(describe());
        }
    }
};

struct SuiteReport {
    std::vector<IdentityReport> identities;

    bool ok() const {
        for (const auto& id : identities)
            if (id.failures != 0) return false;
        return true;
    }
    void append(const SuiteReport& other) {
        identities.insert(identities.end(), other.identities.begin(), other.identities.end());
    }
};

struct VerifyOptions {
    int max_p = 5;
    int max_q = 4;
    long trials = 20;
    std::uint64_t seed = 1;
};

namespace verify_detail {

inline std::string pair_text(const RootMultiset& P, const RootMultiset& Q, int k, int ell) {
    return "P=" + root_spec_text(P) + " Q=" + root_spec_text(Q) + " k=" + std::to_string(k) +
           " l=" + std::to_string(ell);
}

inline SuiteReport suite_vandermonde(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport closed{"vandermonde.closed_form"};
    IdentityReport concat{"vandermonde.concat_product"};
    IdentityReport collapse{"vandermonde.tail_subset_collapse"};
    IdentityReport remark{"vandermonde.derivated_subset_zero"};
    IdentityReport classical{"vandermonde.classical_reduction"};

    std::vector<std::vector<int>> patterns;
    for (int p = 1; p <= opt.max_p; ++p)
        for (auto& pat : multiplicity_patterns(p)) patterns.push_back(std::move(pat));
    for (long t = 0; t < opt.trials; ++t) {
        const RootMultiset P = rng.multiset_from_pattern(patterns[t % patterns.size()]);
        closed.record(gen_vandermonde_value(P.flattened()) == vp_closed_form(P),
                      [&] { return "P=" + root_spec_text(P); });
    }

    for (long t = 0; t < opt.trials; ++t) {
        const int na = static_cast<int>(rng.range(0, 5));
        const int nb = static_cast<int>(rng.range(0, 5));
        std::vector<Rational> a, b;
        for (int i = 0; i < na; ++i) a.push_back(rng.small_int());
        for (int i = 0; i < nb; ++i) b.push_back(rng.small_int());
        std::vector<Rational> ba = b;
        ba.insert(ba.end(), a.begin(), a.end());
        concat.record(vandermonde_det(ba) == vandermonde_det(a) * pi_product(a, b) * vandermonde_det(b),
                         [&] { return "|A|=" + std::to_string(na) + " |B|=" + std::to_string(nb); });
    }

    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(1, std::min(opt.max_p, 5)));
        const RootMultiset P = rng.random_multiset(p);
        const Rational vp = vp_closed_form(P);
        for (int k = 0; k <= p; ++k) {
            const auto subsets = enumerate_subsets(p, k);
            for (const auto& kpos : subsets) {
                const auto tail = P.select_complement(kpos);
                for (const auto& kpos2 : subsets) {
                    auto blocks = P.select(kpos2);
                    blocks.insert(blocks.end(), tail.begin(), tail.end());
                    const Rational v = gen_vandermonde_value(blocks);
                    const Rational expected = kpos2 == kpos
                                                  ? Rational(parity_sign(static_cast<long>(k) * (p - k)) *
                                                             subset_signature(p, kpos)) *
                                                        vp
                                                  : Rational(0);
                    collapse.record(v == expected, [&] { return "P=" + root_spec_text(P) + " k=" + std::to_string(k); });
                }
            }
        }
    }

    for (long t = 0; t < opt.trials; ++t) {
        const auto roots = rng.distinct_ints(2);
        remark.record(gen_vandermonde_value({{roots[0], 1}, {roots[1], 1}}) == 0,
                      [&] { return "roots " + format_rational(roots[0]) + "," + format_rational(roots[1]); });
    }

    for (long t = 0; t < opt.trials; ++t) {
        const int n = static_cast<int>(rng.range(0, opt.max_p));
        const auto pts = rng.distinct_ints(n);
        std::vector<DerivatedPoint> blocks;
        for (const auto& x : pts) blocks.push_back({x, 0});
        classical.record(gen_vandermonde_value(blocks) == vandermonde_det(pts),
                         [&] { return "n=" + std::to_string(n); });
    }

    return SuiteReport{{closed, concat, collapse, remark, classical}};
}

inline SuiteReport suite_theoreme0(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport eq{"theoreme0.simple_equivalence"};
    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(1, opt.max_p));
        const int q = static_cast<int>(rng.range(0, opt.max_q));
        const auto p_roots = rng.distinct_ints(p);
        const auto q_roots = rng.distinct_ints(q);
        const RootMultiset P = RootMultiset::simple(p_roots);
        const RootMultiset Q = RootMultiset::simple(q_roots);
        for (int k = 0; k <= p; ++k)
            for (int ell = 0; ell <= q; ++ell)
                eq.record(sylv_general(P, Q, {k, ell}) == sylv_classical(p_roots, q_roots, {k, ell}),
                          [&] { return pair_text(P, Q, k, ell); });
    }
    return SuiteReport{{eq}};
}

inline SuiteReport suite_theo4(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport prop{"theo4.proportionality"};
    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(2, std::max(2, opt.max_p)));
        if (p < 2) continue;
        const int q = static_cast<int>(rng.range(1, p - 1));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        for (int j = 0; j < q; ++j) {
            const UniPoly ref = sylv_general(P, Q, {j, 0});
            for (int ell = 0; ell <= j; ++ell) {
                const UniPoly lhs = sylv_general(P, Q, {j - ell, ell});
                const UniPoly rhs =
                    Rational(parity_sign(static_cast<long>(ell) * (p - j)) * binom(j, ell)) * ref;
                prop.record(lhs == rhs, [&] { return pair_text(P, Q, j - ell, ell); });
            }
        }
    }
    return SuiteReport{{prop}};
}

inline SuiteReport suite_lienentresylv(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport prop{"lienentreSylv.proportionality"};
    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(2, std::max(2, opt.max_p)));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        for (int j = q; j < p; ++j) {
            const UniPoly ref = sylv_general(P, Q, {j, 0});
            for (int ell = 0; ell <= j; ++ell) {
                const UniPoly lhs = sylv_general(P, Q, {j - ell, ell});
                const UniPoly rhs =
                    Rational(parity_sign(static_cast<long>(ell) * (p - j)) * binom(q, ell)) * ref;
                prop.record(lhs == rhs, [&] { return pair_text(P, Q, j - ell, ell); });
            }
        }
    }
    return SuiteReport{{prop}};
}

inline SuiteReport suite_ouf(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport at_q{"ouf.j_eq_q"};
    IdentityReport strip{"ouf.strip_zero"};
    IdentityReport top{"ouf.j_eq_p_minus_1"};
    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(2, std::max(2, opt.max_p)));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        const UniPoly Qp = from_roots(Q);
        for (int k = 0; k <= q; ++k)
            at_q.record(sylv_general(P, Q, {k, q - k}) ==
                            Rational(parity_sign(static_cast<long>(k) * (p - q)) * binom(q, k)) * Qp,
                        [&] { return pair_text(P, Q, k, q - k); });
        for (int j = q + 1; j < p - 1; ++j)
            for (int ell = 0; ell <= std::min(q, j); ++ell)
                strip.record(sylv_general(P, Q, {j - ell, ell}).is_zero(),
                             [&] { return pair_text(P, Q, j - ell, ell); });
        for (int ell = 0; ell <= std::min(q, p - 1); ++ell)
            top.record(sylv_general(P, Q, {p - 1 - ell, ell}) ==
                           Rational(parity_sign(p - 1 - ell) * binom(q, ell)) * Qp,
                       [&] { return pair_text(P, Q, p - 1 - ell, ell); });
    }
    return SuiteReport{{at_q, strip, top}};
}

inline SuiteReport suite_theo4mult(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport prop{"theo4mult.proportionality"};
    IdentityReport high{"theo4mult.jplusgrandqueq"};
    IdentityReport enplus{"theo4mult.enplus"};
    IdentityReport lien{"theo4mult.lien_coeff"};
    const int cap_p = std::min(opt.max_p, 4);
    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(2, std::max(2, cap_p)));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        const UniPoly Qp = from_roots(Q);
        for (int j = std::max(0, p - 3); j < p; ++j) {
            std::vector<std::string> uv = detail::indexed_names("U", p - j);
            const MultiPoly ref = msylv(P, Q, {j, 0}, uv);
            if (j >= q) {
                MultiPoly expect((Rational(1)));
                for (const auto& name : uv) expect = expect * MultiPoly::from_unipoly(Qp, name);
                enplus.record(ref == Rational(parity_sign(static_cast<long>(j) * (p - j))) * expect,
                              [&] { return pair_text(P, Q, j, 0); });
            }
            for (int ell = 0; ell <= j; ++ell) {
                const int k = j - ell;
                const MultiPoly ms = msylv(P, Q, {k, ell}, uv);
                const Rational cmul = j < q ? Rational(binom(j, ell)) : Rational(binom(q, ell));
                const MultiPoly rhs = (Rational(parity_sign(static_cast<long>(ell) * (p - j))) * cmul) * ref;
                (j < q ? prop : high).record(ms == rhs, [&] { return pair_text(P, Q, k, ell); });
                // coefficient extraction back to the single-variable sum
                std::map<std::string, int> trail;
                for (size_t v = 1; v < uv.size(); ++v) trail[uv[v]] = j;
                const MultiPoly extracted = ms.coefficient_of(trail);
                lien.record(extracted == MultiPoly::from_unipoly(sylv_general(P, Q, {k, ell}), uv[0]),
                            [&] { return pair_text(P, Q, k, ell); });
            }
        }
    }
    return SuiteReport{{prop, high, enplus, lien}};
}

struct BackwardTriple {
    Rational lc_q;
    RootMultiset q_roots;
    Rational lc_r;            // 0 when R = 0
    RootMultiset r_roots;
    UniPoly p_poly;           // C * Q - R; does not split in general
    UniPoly q_poly;
    UniPoly r_poly;
};

inline BackwardTriple backward_triple(Rng& rng, int max_q) {
    BackwardTriple b;
    const int q = static_cast<int>(rng.range(1, std::max(1, max_q)));
    b.lc_q = rng.nonzero_int();
    b.q_roots = rng.random_multiset(q);
    b.q_poly = b.lc_q * from_roots(b.q_roots);
    if (rng.range(0, 4) == 0) {
        b.lc_r = 0; // exact division case
    } else {
        const int r = static_cast<int>(rng.range(0, q - 1));
        b.lc_r = rng.nonzero_int();
        b.r_roots = rng.random_multiset(r);
        b.r_poly = b.lc_r * from_roots(b.r_roots);
    }
    const UniPoly C = rng.random_int_poly(static_cast<int>(rng.range(1, 2)));
    b.p_poly = C * b.q_poly - b.r_poly;
    return b;
}

inline SuiteReport suite_prorecurrence(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport rec{"prorecurrence.push_down"};
    IdentityReport zero{"prorecurrence.division_zero"};
    for (long t = 0; t < opt.trials; ++t) {
        const BackwardTriple b = backward_triple(rng, opt.max_q);
        const int p = b.p_poly.degree_nonzero();
        const int q = b.q_poly.degree_nonzero();
        const auto describe = [&](int j) {
            return "P=" + render_unipoly(b.p_poly) + " Q=" + render_unipoly(b.q_poly) + " j=" + std::to_string(j);
        };
        for (int j = 0; j < q; ++j) {
            const UniPoly lhs = sylv_j0_from_coefficients(b.p_poly, b.lc_q, b.q_roots, j);
            if (b.lc_r == 0) {
                zero.record(lhs.is_zero(), [&] { return describe(j); });
            } else {
                const int r = b.r_poly.degree_nonzero();
                const UniPoly rhs = Rational(parity_sign(static_cast<long>(q) * (p - q))) *
                                    rational_pow(b.lc_q, p - r) *
                                    sylv_nonmonic({b.lc_q, b.q_roots}, {b.lc_r, b.r_roots}, {j, 0});
                rec.record(lhs == rhs, [&] { return describe(j); });
            }
        }
    }
    return SuiteReport{{rec, zero}};
}

inline SuiteReport suite_rappelbis(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport strip{"rappelbis.strip_zero"};
    IdentityReport at_q{"rappelbis.j_eq_q"};
    IdentityReport at_qm1{"rappelbis.j_eq_q_minus_1"};
    IdentityReport push{"rappelbis.push_down"};
    IdentityReport zero{"rappelbis.division_zero"};

    // Items 1-2 restate the closed forms that only involve (P, Q); they are
    // exercised on split pairs through sylv_nonmonic.
    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(2, std::max(2, opt.max_p)));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const ScaledRoots P{rng.nonzero_int(), rng.random_multiset(p)};
        const ScaledRoots Q{rng.nonzero_int(), rng.random_multiset(q)};
        const UniPoly q_poly = Q.lc * from_roots(Q.roots);
        for (int j = q + 1; j < p - 1; ++j)
            strip.record(sylv_nonmonic(P, Q, {j, 0}).is_zero(), [&] { return pair_text(P.roots, Q.roots, j, 0); });
        at_q.record(sylv_nonmonic(P, Q, {q, 0}) ==
                        Rational(parity_sign(static_cast<long>(q) * (p - q))) * rational_pow(Q.lc, p - q - 1) * q_poly,
                    [&] { return pair_text(P.roots, Q.roots, q, 0); });
    }

    // Items 2-5 on backward triples, with the (P, Q) side computed from P's
    // coefficients since P does not split.
    for (long t = 0; t < opt.trials; ++t) {
        const BackwardTriple b = backward_triple(rng, opt.max_q);
        const int p = b.p_poly.degree_nonzero();
        const int q = b.q_poly.degree_nonzero();
        const auto describe = [&](int j) {
            return "P=" + render_unipoly(b.p_poly) + " Q=" + render_unipoly(b.q_poly) + " j=" + std::to_string(j);
        };
        at_q.record(sylv_j0_from_coefficients(b.p_poly, b.lc_q, b.q_roots, q) ==
                        Rational(parity_sign(static_cast<long>(q) * (p - q))) * rational_pow(b.lc_q, p - q - 1) *
                            b.q_poly,
                    [&] { return describe(q); });
        {
            const UniPoly lhs = sylv_j0_from_coefficients(b.p_poly, b.lc_q, b.q_roots, q - 1);
            const UniPoly rhs = Rational(parity_sign(static_cast<long>(q - 1) * (p - q + 1) + p - q)) *
                                rational_pow(b.lc_q, p - q + 1) * b.r_poly;
            at_qm1.record(lhs == rhs, [&] { return describe(q - 1); });
        }
        for (int j = 0; j < q - 1; ++j) {
            const UniPoly lhs = sylv_j0_from_coefficients(b.p_poly, b.lc_q, b.q_roots, j);
            if (b.lc_r == 0) {
                zero.record(lhs.is_zero(), [&] { return describe(j); });
            } else {
                const int r = b.r_poly.degree_nonzero();
                const UniPoly rhs = Rational(parity_sign(static_cast<long>(q) * (p - q))) *
                                    rational_pow(b.lc_q, p - r) *
                                    sylv_nonmonic({b.lc_q, b.q_roots}, {b.lc_r, b.r_roots}, {j, 0});
                push.record(lhs == rhs, [&] { return describe(j); });
            }
        }
    }
    return SuiteReport{{strip, at_q, at_qm1, push, zero}};
}

inline SuiteReport suite_theoreme2(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport monic{"theoreme2.monic"};
    IdentityReport nonmonic{"theoreme2.nonmonic"};
    IdentityReport agree{"theoreme2.det_prs_agree"};
    IdentityReport top{"theoreme2.top_remark"};
    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(2, std::max(2, opt.max_p)));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const RootMultiset P = rng.random_multiset(p);
        const RootMultiset Q = rng.random_multiset(q);
        const UniPoly Pp = from_roots(P);
        const UniPoly Qp = from_roots(Q);
        const bool rescale = (t % 3 == 1); // mix monic runs with non-monic rescalings
        const Rational cp = rescale ? rng.nonzero_int() : Rational(1);
        const Rational cq = rescale ? rng.nonzero_int() : Rational(1);
        const UniPoly Pfull = cp * Pp;
        const UniPoly Qfull = cq * Qp;
        const SresSequence prs = sres_prs(Pfull, Qfull);
        for (int j = 0; j <= p - 1; ++j) {
            const UniPoly sd = sres_det(Pfull, Qfull, j);
            agree.record(sd == prs.entries.at(j), [&] {
                return "P=" + render_unipoly(Pfull) + " Q=" + render_unipoly(Qfull) + " j=" + std::to_string(j);
            });
        }
        for (int j = 0; j < p - 1; ++j) {
            const UniPoly sres_j = sres_det(Pfull, Qfull, j);
            for (int ell = 0; ell <= std::min(q, j); ++ell) {
                const int k = j - ell;
                const UniPoly lhs = sylv_nonmonic({cp, P}, {cq, Q}, {k, ell});
                const UniPoly rhs = Rational(parity_sign(static_cast<long>(k) * (p - j)) * epsilon(p - j) *
                                             binom(j, k)) *
                                    sres_j;
                (rescale ? nonmonic : monic).record(lhs == rhs, [&] {
                    return pair_text(P, Q, k, ell) + " cp=" + format_rational(cp) + " cq=" + format_rational(cq);
                });
            }
        }
        // At j = p-1 the proportionality factor carries lc(P)^{q-p+1}; this is
        // what Definition-level rescaling plus the monic closed form give, and
        // it matches the stated Sylv^{p-1,0} = (-1)^{p-1} lc(P)^{q-p+1} Q.
        for (int ell = 0; ell <= std::min(q, p - 1); ++ell) {
            const int k = p - 1 - ell;
            const UniPoly lhs = sylv_nonmonic({cp, P}, {cq, Q}, {k, ell});
            const UniPoly rhs = Rational(parity_sign(k) * binom(q, ell)) * rational_pow(cp, q - p + 1) *
                                sres_det(Pfull, Qfull, p - 1);
            top.record(lhs == rhs, [&] { return pair_text(P, Q, k, ell); });
        }
    }
    return SuiteReport{{monic, nonmonic, agree, top}};
}

inline SuiteReport suite_rappel(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport strip{"rappel.strip_zero"};
    IdentityReport at_q{"rappel.j_eq_q"};
    IdentityReport at_qm1{"rappel.j_eq_q_minus_1"};
    IdentityReport divides{"rappel.divides_zero"};
    IdentityReport topc{"rappel.top_convention"};
    IdentityReport agree{"rappel.det_prs_agree"};
    const int cap_p = std::max(2, std::min(opt.max_p + 2, 7));
    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(2, cap_p));
        const int q = static_cast<int>(rng.range(1, p - 1));
        const UniPoly P = rng.random_int_poly(p);
        const UniPoly Q = rng.random_int_poly(q);
        const UniPoly R = -euclid_divrem(P, Q).second;
        const auto describe = [&](int j) {
            return "P=" + render_unipoly(P) + " Q=" + render_unipoly(Q) + " j=" + std::to_string(j);
        };
        for (int j = q + 1; j < p - 1; ++j) strip.record(sres_det(P, Q, j).is_zero(), [&] { return describe(j); });
        at_q.record(sres_det(P, Q, q) == Rational(epsilon(p - q)) * rational_pow(Q.leading(), p - q - 1) * Q,
                    [&] { return describe(q); });
        at_qm1.record(sres_det(P, Q, q - 1) == Rational(epsilon(p - q)) * rational_pow(Q.leading(), p - q + 1) * R,
                      [&] { return describe(q - 1); });
        topc.record(sres_det(P, Q, p - 1) == Q, [&] { return describe(p - 1); });
        const SresSequence prs = sres_prs(P, Q);
        for (int j = 0; j <= p - 1; ++j)
            agree.record(sres_det(P, Q, j) == prs.entries.at(j), [&] { return describe(j); });
        // exact-multiple pair: every level below q-1 vanishes
        const UniPoly C = rng.random_int_poly(static_cast<int>(rng.range(1, 2)));
        const UniPoly PQ = C * Q;
        for (int j = 0; j < q - 1; ++j)
            divides.record(sres_det(PQ, Q, j).is_zero(), [&] {
                return "P=" + render_unipoly(PQ) + " Q=" + render_unipoly(Q) + " j=" + std::to_string(j);
            });
    }
    return SuiteReport{{strip, at_q, at_qm1, divides, topc, agree}};
}

inline MultiPoly random_symmetric_poly(Rng& rng, const std::vector<std::string>& u_vars, int max_deg) {
    // Symmetrize a random sparse polynomial, then truncate per-variable degree.
    const int u = static_cast<int>(u_vars.size());
    MultiPoly base;
    const int terms = static_cast<int>(rng.range(1, 3));
    for (int t = 0; t < terms; ++t) {
        MultiPoly mono(rng.nonzero_int());
        for (int v = 0; v < u; ++v)
            mono = mono * MultiPoly::variable_power(u_vars[v], static_cast<int>(rng.range(0, max_deg + 1)));
        base += mono;
    }
    std::vector<int> perm(u);
    for (int i = 0; i < u; ++i) perm[i] = i;
    MultiPoly sym;
    do {
        std::map<std::string, std::string> mapping;
        for (int i = 0; i < u; ++i) mapping[u_vars[i]] = u_vars[perm[i]];
        sym += base.rename(mapping);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // drop terms that exceed the degree bound in any variable
    MultiPoly out = sym;
    for (const auto& v : u_vars) {
        MultiPoly kept;
        for (int e = 0; e <= max_deg; ++e) {
            const MultiPoly slice = out.coefficient_of({{v, e}});
            kept += slice * MultiPoly::variable_power(v, e);
        }
        out = kept;
    }
    return out;
}

inline SuiteReport suite_hermite(const VerifyOptions& opt) {
    Rng rng(opt.seed);
    IdentityReport uni{"hermite.univariate_roundtrip"};
    IdentityReport recover{"hermite.recover_low_degree"};
    IdentityReport multi{"hermite.multivariate_roundtrip"};
    IdentityReport reduce{"hermite.reduces_to_univariate"};

    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(1, 6));
        const RootMultiset nodes = rng.random_multiset(p);
        std::vector<Rational> values;
        for (int i = 0; i < p; ++i) values.push_back(rng.small_int());
        const UniPoly f = hermite_interpolate({nodes, values});
        bool ok = f.is_zero() || f.degree_nonzero() <= p - 1;
        for (int pos = 0; pos < p; ++pos) {
            const auto& [x, j] = nodes.flattened()[pos];
            ok = ok && (normalized_derivative(f, j).evaluate(x) == values[pos]);
        }
        uni.record(ok, [&] { return "nodes=" + root_spec_text(nodes); });

        const UniPoly g = rng.random_int_poly(static_cast<int>(rng.range(0, p - 1)));
        std::vector<Rational> sampled;
        for (int pos = 0; pos < p; ++pos) {
            const auto& [x, j] = nodes.flattened()[pos];
            sampled.push_back(normalized_derivative(g, j).evaluate(x));
        }
        recover.record(hermite_interpolate({nodes, sampled}) == g, [&] { return "nodes=" + root_spec_text(nodes); });
    }

    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(1, std::min(opt.max_p, 4)));
        const RootMultiset P = rng.random_multiset(p);
        for (int k = 0; k <= p; ++k) {
            const auto uv = detail::indexed_names("U", p - k);
            const auto basis = symmetric_basis(P, k, uv);
            const MultiPoly g = random_symmetric_poly(rng, uv, k);
            const auto coords = symmetric_coords(g, P, k, uv);
            multi.record(static_cast<long>(basis.size()) == static_cast<long>(binom(p, k)) &&
                             reconstruct(coords, basis) == g,
                         [&] { return "P=" + root_spec_text(P) + " k=" + std::to_string(k); });
        }
    }

    for (long t = 0; t < opt.trials; ++t) {
        const int p = static_cast<int>(rng.range(1, std::min(opt.max_p, 4)));
        const RootMultiset P = rng.random_multiset(p);
        std::vector<Rational> values;
        for (int i = 0; i < p; ++i) values.push_back(rng.small_int());
        const UniPoly f = hermite_interpolate({P, values});
        const auto uv = detail::indexed_names("U", 1);
        const auto basis = symmetric_basis(P, p - 1, uv);
        const auto coords = symmetric_coords(MultiPoly::from_unipoly(f, uv[0]), P, p - 1, uv);
        bool ok = reconstruct(coords, basis) == MultiPoly::from_unipoly(f, uv[0]);
        // the coordinate of P \ {position t} must be the signed datum
        for (int pos = 0; pos < p; ++pos) {
            const auto kpos = complement_positions(p, {pos});
            ok = ok && (coords.at(kpos) == Rational(parity_sign(p - 1 - pos)) * values[pos]);
        }
        reduce.record(ok, [&] { return "nodes=" + root_spec_text(P); });
    }

    return SuiteReport{{uni, recover, multi, reduce}};
}

} // namespace verify_detail

/// Antisymmetry and exact-divisibility checks of the symbolic F/S layer,
/// exhaustive over p, q <= 3 and every index pair.
inline SuiteReport run_symbolic_layer(const VerifyOptions& opt) {
    IdentityReport anti{"symbolic.antisymmetry"};
    IdentityReport divis{"symbolic.divisibility"};
    IdentityReport match{"symbolic.matches_classical"};
    Rng rng(opt.seed);
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int k = 0; k <= p + 1; ++k)
                for (int ell = 0; ell <= q + 1; ++ell) {
                    const auto describe = [&] {
                        return "p=" + std::to_string(p) + " q=" + std::to_string(q) + " k=" + std::to_string(k) +
                               " l=" + std::to_string(ell);
                    };
                    const MultiPoly f = symbolic_F(p, q, {k, ell});
                    if (k > p || ell > q) {
                        anti.record(f.is_zero(), describe);
                        continue;
                    }
                    bool ok = true;
                    for (int i = 1; i < p; ++i) {
                        const std::string a = "X" + std::to_string(i), b = "X" + std::to_string(i + 1);
                        ok = ok && (f.rename({{a, b}, {b, a}}) == -f);
                    }
                    for (int i = 1; i < q; ++i) {
                        const std::string a = "Y" + std::to_string(i), b = "Y" + std::to_string(i + 1);
                        ok = ok && (f.rename({{a, b}, {b, a}}) == -f);
                    }
                    anti.record(ok, describe);
                    try {
                        const MultiPoly s = symbolic_S(p, q, {k, ell});
                        divis.record(true, describe);
                        // substituting distinct rational roots recovers the oracle
                        const auto xr = rng.distinct_ints(p);
                        const auto yr = rng.distinct_ints(q);
                        std::map<std::string, Rational> sub;
                        for (int i = 0; i < p; ++i) sub["X" + std::to_string(i + 1)] = xr[i];
                        for (int i = 0; i < q; ++i) sub["Y" + std::to_string(i + 1)] = yr[i];
                        match.record(s.substitute(sub).to_unipoly() == sylv_classical(xr, yr, {k, ell}), describe);
                    } catch (const invariant_violation&) {
                        divis.record(false, describe);
                    }
                }
    return SuiteReport{{anti, divis, match}};
}

inline std::vector<std::string> suite_names() {
    return {"theoreme0", "theo4",   "theo4mult", "lienentreSylv", "ouf",     "prorecurrence",
            "theoreme2", "rappel",  "rappelbis", "vandermonde",   "hermite", "all"};
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
    using namespace verify_detail;
    if (name == "vandermonde") return suite_vandermonde(opt);
    if (name == "theoreme0") return suite_theoreme0(opt);
    if (name == "theo4") return suite_theo4(opt);
    if (name == "lienentreSylv") return suite_lienentresylv(opt);
    if (name == "ouf") return suite_ouf(opt);
    if (name == "theo4mult") return suite_theo4mult(opt);
    if (name == "prorecurrence") return suite_prorecurrence(opt);
    if (name == "rappelbis") return suite_rappelbis(opt);
    if (name == "theoreme2") return suite_theoreme2(opt);
    if (name == "rappel") return suite_rappel(opt);
    if (name == "hermite") return suite_hermite(opt);
    if (name == "all") {
        SuiteReport total;
        for (const auto& n : suite_names())
            if (n != "all") total.append(run_suite(n, opt));
        return total;
    }
    throw argument_error("unknown suite '" + name + "'");
}

} // namespace sylv
