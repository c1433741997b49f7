#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sylv/sylv.hpp"

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 usage/parse, 3 domain,
// 4 internal invariant violation.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInvariant = 4;

struct DoubleSumArgs {
    std::string p_roots;
    std::string q_roots;
    int k = 0;
    int ell = 0;
    std::string lc_p;
    std::string lc_q;
    bool json = false;
};

struct MsylvArgs {
    std::string p_roots;
    std::string q_roots;
    int k = 0;
    int ell = 0;
    bool json = false;
};

struct SubresultantArgs {
    std::string p_coeffs;
    std::string q_coeffs;
    std::optional<int> j;
    bool all = false;
    std::string method;
    bool json = false;
};

struct HermiteArgs {
    std::string nodes;
    std::string values;
    bool json = false;
};

struct VerifyArgs {
    std::string suite;
    sylv::VerifyOptions options;
};

void emit_unipoly(const sylv::UniPoly& p, bool json) {
    if (json)
        std::cout << sylv::unipoly_to_json(p).dump() << "\n";
    else
        std::cout << sylv::render_unipoly(p) << "\n";
}

int run_doublesum(const DoubleSumArgs& a) {
    const sylv::RootMultiset P = sylv::parse_root_spec(a.p_roots);
    const sylv::RootMultiset Q = sylv::parse_root_spec(a.q_roots);
    if (a.k < 0 || a.ell < 0) throw sylv::argument_error("indices k and l must be non-negative");
    sylv::UniPoly result;
    if (a.lc_p.empty() && a.lc_q.empty()) {
        result = sylv::sylv_general(P, Q, {a.k, a.ell});
    } else {
        const sylv::Rational lp = a.lc_p.empty() ? sylv::Rational(1) : sylv::parse_rational(a.lc_p);
        const sylv::Rational lq = a.lc_q.empty() ? sylv::Rational(1) : sylv::parse_rational(a.lc_q);
        if (lp == 0 || lq == 0) throw sylv::argument_error("leading coefficients must be nonzero");
        result = sylv::sylv_nonmonic({lp, P}, {lq, Q}, {a.k, a.ell});
    }
    emit_unipoly(result, a.json);
    return kExitOk;
}

int run_msylv(const MsylvArgs& a) {
    const sylv::RootMultiset P = sylv::parse_root_spec(a.p_roots);
    const sylv::RootMultiset Q = sylv::parse_root_spec(a.q_roots);
    if (a.k < 0 || a.ell < 0) throw sylv::argument_error("indices k and l must be non-negative");
    const int u = P.degree() - a.k - a.ell;
    if (u < 0) throw sylv::domain_error("msylv needs k+l <= deg P");
    std::vector<std::string> uv;
    for (int i = 1; i <= u; ++i) uv.push_back("U" + std::to_string(i));
    const sylv::MultiPoly result = sylv::msylv(P, Q, {a.k, a.ell}, uv);
    if (a.json)
        std::cout << sylv::multipoly_to_json(result).dump() << "\n";
    else
        std::cout << sylv::render_multipoly(result) << "\n";
    return kExitOk;
}

int run_subresultant(const SubresultantArgs& a) {
    const sylv::UniPoly P = sylv::parse_coeff_list(a.p_coeffs);
    const sylv::UniPoly Q = sylv::parse_coeff_list(a.q_coeffs);
    const int p = P.degree_nonzero();
    const int q = Q.degree_nonzero();
    if (p <= q) throw sylv::domain_error("need deg P > deg Q");
    if (a.all == a.j.has_value()) throw sylv::argument_error("give exactly one of -j or --all");
    if (!a.method.empty() && a.method != "det" && a.method != "prs")
        throw sylv::argument_error("--method must be det or prs");

    auto compute = [&](int j) -> sylv::UniPoly {
        if (a.method == "det") return sylv::sres_det(P, Q, j);
        if (a.method == "prs") return sylv::sres_prs(P, Q).entries.at(j);
        const sylv::UniPoly by_det = sylv::sres_det(P, Q, j);
        if (by_det != sylv::sres_prs(P, Q).entries.at(j))
            throw sylv::invariant_violation("sres_det and sres_prs disagree at j=" + std::to_string(j));
        return by_det;
    };

    if (a.j) {
        if (*a.j < 0 || *a.j > p - 1) throw sylv::argument_error("need 0 <= j <= deg P - 1");
        emit_unipoly(compute(*a.j), a.json);
        return kExitOk;
    }

    if (a.json) {
        nlohmann::json seq = nlohmann::json::array();
        for (int j = p - 1; j >= 0; --j)
            seq.push_back(nlohmann::json{{"j", j}, {"poly", sylv::unipoly_to_json(compute(j))}});
        std::cout << seq.dump() << "\n";
    } else {
        std::string out = "{";
        for (int j = p - 1; j >= 0; --j) {
            if (j < p - 1) out += ", ";
            out += std::to_string(j) + ": \"" + sylv::render_unipoly(compute(j)) + "\"";
        }
        out += "}";
        std::cout << out << "\n";
    }
    return kExitOk;
}

int run_hermite(const HermiteArgs& a) {
    const sylv::RootMultiset nodes = sylv::parse_root_spec(a.nodes);
    const std::vector<sylv::Rational> values = sylv::parse_rational_list(a.values);
    if (static_cast<int>(values.size()) != nodes.degree())
        throw sylv::argument_error("need exactly one value per flattened node pair");
    emit_unipoly(sylv::hermite_interpolate({nodes, values}), a.json);
    return kExitOk;
}

int run_verify(const VerifyArgs& a) {
    const sylv::SuiteReport report = sylv::run_suite(a.suite, a.options);
    bool ok = true;
    for (const auto& id : report.identities) {
        std::cout << id.name << ": trials=" << id.checks << " failures=" << id.failures << "\n";
        if (id.failures != 0) {
            ok = false;
            for (const auto& repro : id.reproducers) std::cout << "  reproducer: " << repro << "\n";
        }
    }
    return ok ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Sylvester double sums, subresultants, and Hermite interpolation"};
    app.require_subcommand(1);

    DoubleSumArgs ds;
    auto* ds_cmd = app.add_subcommand("doublesum", "Sylvester double sum of two root multisets");
    ds_cmd->add_option("--p-roots", ds.p_roots, "roots of P, e.g. \"1^2,3\"")->required();
    ds_cmd->add_option("--q-roots", ds.q_roots, "roots of Q")->required();
    ds_cmd->add_option("-k", ds.k, "subset size on the P side")->required();
    ds_cmd->add_option("-l", ds.ell, "subset size on the Q side")->required();
    ds_cmd->add_option("--lc-p", ds.lc_p, "leading coefficient of P (non-monic form)");
    ds_cmd->add_option("--lc-q", ds.lc_q, "leading coefficient of Q (non-monic form)");
    ds_cmd->add_flag("--json", ds.json, "emit PolyJson");

    MsylvArgs ms;
    auto* ms_cmd = app.add_subcommand("msylv", "multi Sylvester double sum over p-(k+l) indeterminates");
    ms_cmd->add_option("--p-roots", ms.p_roots, "roots of P")->required();
    ms_cmd->add_option("--q-roots", ms.q_roots, "roots of Q")->required();
    ms_cmd->add_option("-k", ms.k, "subset size on the P side")->required();
    ms_cmd->add_option("-l", ms.ell, "subset size on the Q side")->required();
    ms_cmd->add_flag("--json", ms.json, "emit structured output");

    SubresultantArgs sr;
    auto* sr_cmd = app.add_subcommand("subresultant", "subresultants from coefficient lists");
    sr_cmd->add_option("--p-coeffs", sr.p_coeffs, "ascending coefficients of P, e.g. \"2,-3,1\"")->required();
    sr_cmd->add_option("--q-coeffs", sr.q_coeffs, "ascending coefficients of Q")->required();
    int j_value = 0;
    auto* j_opt = sr_cmd->add_option("-j", j_value, "single level j");
    sr_cmd->add_flag("--all", sr.all, "whole sequence Sres_0..Sres_{p-1}");
    sr_cmd->add_option("--method", sr.method, "det or prs (default: both, cross-checked)");
    sr_cmd->add_flag("--json", sr.json, "emit PolyJson");

    HermiteArgs hm;
    auto* hm_cmd = app.add_subcommand("hermite", "Hermite interpolation with derivative data");
    hm_cmd->add_option("--nodes", hm.nodes, "node multiset, e.g. \"1^2,4\"")->required();
    hm_cmd->add_option("--values", hm.values, "one value per flattened (node, derivative) pair")->required();
    hm_cmd->add_flag("--json", hm.json, "emit PolyJson");

    VerifyArgs vf;
    auto* vf_cmd = app.add_subcommand("verify", "run a seeded identity suite");
    vf_cmd->add_option("--suite", vf.suite, "one of: theoreme0 theo4 theo4mult lienentreSylv ouf prorecurrence "
                                            "theoreme2 rappel rappelbis vandermonde hermite all")
        ->required();
    vf_cmd->add_option("--max-p", vf.options.max_p, "degree bound for P");
    vf_cmd->add_option("--max-q", vf.options.max_q, "degree bound for Q");
    vf_cmd->add_option("--trials", vf.options.trials, "number of generated inputs");
    vf_cmd->add_option("--seed", vf.options.seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*ds_cmd) return run_doublesum(ds);
        if (*ms_cmd) return run_msylv(ms);
        if (*sr_cmd) {
            if (j_opt->count() > 0) sr.j = j_value;
            return run_subresultant(sr);
        }
        if (*hm_cmd) return run_hermite(hm);
        if (*vf_cmd) return run_verify(vf);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const sylv::argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sylv::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const sylv::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const sylv::invariant_violation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
