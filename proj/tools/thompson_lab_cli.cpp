// Batch command-line front end: exact element arithmetic, the Thurston
// isomorphism, centralizers, the Cuntz representation, spectral experiments,
// and the one-shot verification suite.

#include "tlab/budget.hpp"
#include "tlab/cuntz.hpp"
#include "tlab/group_algebra.hpp"
#include "tlab/plmap.hpp"
#include "tlab/ppsl.hpp"
#include "tlab/question_mark.hpp"
#include "tlab/spectral.hpp"
#include "tlab/text_io.hpp"
#include "tlab/thurston.hpp"
#include "tlab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using nlohmann::json;

tlab::PLMap element_arg(const std::string& text) {
    tlab::ParsedElement parsed = tlab::parse_element(text);
    if (auto* f = std::get_if<tlab::PLMap>(&parsed)) return *f;
    if (auto* w = std::get_if<tlab::GroupWord>(&parsed)) return tlab::word_to_element(*w);
    throw tlab::ParseError("expected a group element (word or PLMap JSON): " + text);
}

tlab::ExtRational rational_arg(const std::string& text) {
    auto r = tlab::ExtRational::parse(text);
    if (!r) throw tlab::ParseError("bad rational '" + text + "'");
    return *r;
}

tlab::Dyadic dyadic_arg(const std::string& text) {
    auto d = tlab::Dyadic::parse(text);
    if (!d) throw tlab::ParseError("bad dyadic '" + text + "'");
    return *d;
}

std::string membership_name(tlab::PLMap::Membership m) {
    switch (m) {
        case tlab::PLMap::Membership::F: return "F";
        case tlab::PLMap::Membership::T_minus_F: return "T\\F";
        case tlab::PLMap::Membership::V_minus_T: return "V\\T";
    }
    return "?";
}

void emit(const json& payload, const std::string& format) {
    if (format == "json")
        std::cout << payload.dump(2) << "\n";
    else if (payload.is_string())
        std::cout << payload.get<std::string>() << "\n";
    else
        std::cout << payload.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the Thompson groups F, T and V"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t seed = 42;
    std::size_t budget = 0;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--budget", budget, "global subdivision/ball budget cap");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an element at a dyadic point");
    std::string eval_element, eval_point;
    eval_cmd->add_option("element", eval_element, "group word or PLMap JSON")->required();
    eval_cmd->add_option("-x,--x", eval_point, "dyadic point p/2^n")->required();

    // compose
    auto* compose_cmd = app.add_subcommand("compose", "compose two elements (left acts last)");
    std::string compose_f, compose_g;
    compose_cmd->add_option("f", compose_f)->required();
    compose_cmd->add_option("g", compose_g)->required();

    // member
    auto* member_cmd = app.add_subcommand("member", "classify an element into F, T\\F or V\\T");
    std::string member_element;
    member_cmd->add_option("element", member_element)->required();

    // breakpoints
    auto* breaks_cmd = app.add_subcommand("breakpoints", "circle breakpoints and discontinuities");
    std::string breaks_element;
    breaks_cmd->add_option("element", breaks_element)->required();

    // question-mark family
    std::string qm_arg;
    auto* psi_cmd = app.add_subcommand("psi", "psi at a rational or +-inf");
    psi_cmd->add_option("x", qm_arg)->required();
    auto* psi_inv_cmd = app.add_subcommand("psi-inv", "rational preimage of a dyadic");
    psi_inv_cmd->add_option("d", qm_arg)->required();
    auto* phi_cmd = app.add_subcommand("phi", "circle map phi at a rational or inf");
    phi_cmd->add_option("x", qm_arg)->required();
    auto* phi_inv_cmd = app.add_subcommand("phi-inv", "circle preimage of a dyadic of [0,1)");
    phi_inv_cmd->add_option("d", qm_arg)->required();
    auto* q_cmd = app.add_subcommand("q", "Minkowski ?-function at a rational of [0,1]");
    q_cmd->add_option("x", qm_arg)->required();

    // iso push | pull
    auto* iso_cmd = app.add_subcommand("iso", "the isomorphism between PPSL(2,Z) and T");
    auto* iso_push = iso_cmd->add_subcommand("push", "PPSL(2,Z) -> T");
    auto* iso_pull = iso_cmd->add_subcommand("pull", "T -> PPSL(2,Z)");
    std::string iso_arg;
    iso_push->add_option("element", iso_arg, "matrix [[a,b],[c,d]] or PPSLMap JSON")->required();
    iso_pull->add_option("element", iso_arg, "group word or PLMap JSON")->required();
    iso_cmd->require_subcommand(1);

    // lambda member
    auto* lambda_cmd = app.add_subcommand("lambda", "the subgroup Lambda = Phi(PSL(2,Z))");
    auto* lambda_member = lambda_cmd->add_subcommand("member", "matrix of an element of Lambda");
    std::string lambda_arg;
    lambda_member->add_option("element", lambda_arg)->required();
    lambda_cmd->require_subcommand(1);

    // centralizer
    auto* cent_cmd = app.add_subcommand("centralizer", "centralizer in Lambda of an element of V");
    std::string cent_element;
    int cent_word_bound = 8;
    cent_cmd->add_option("element", cent_element)->required();
    cent_cmd->add_option("--word-bound", cent_word_bound, "ball radius for the Lambda case");

    // pi
    auto* pi_cmd = app.add_subcommand("pi", "image of an element in the Cuntz algebra");
    std::string pi_element;
    pi_cmd->add_option("element", pi_element)->required();

    // states
    auto* states_cmd = app.add_subcommand("states", "phi0 and phi1 of a Cuntz sum or element");
    std::string states_element;
    states_cmd->add_option("element", states_element, "Cuntz sum text/JSON or group element")
        ->required();

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "truncated norm estimate of an algebra element");
    std::string norm_element;
    int norm_depth = 6;
    double norm_tol = 1e-10;
    norm_cmd->add_option("element", norm_element, "group algebra JSON {\"terms\":[...]}")->required();
    norm_cmd->add_option("--depth", norm_depth, "dyadic depth of the compression");
    norm_cmd->add_option("--tol", norm_tol, "power iteration tolerance");

    // v0-experiment
    auto* v0_cmd = app.add_subcommand("v0-experiment", "average-power decay for V_0 generators");
    std::vector<std::string> v0_gens;
    int v0_depth = 6, v0_mmax = 12;
    v0_cmd->add_option("--gens", v0_gens,
                       "generator words, rescaled into V_0 (default: D^2 and C rescaled)");
    v0_cmd->add_option("--depth", v0_depth, "dyadic depth");
    v0_cmd->add_option("--m-max", v0_mmax, "largest power");

    // convex-search
    auto* convex_cmd = app.add_subcommand("convex-search", "norm minimization over conjugate hulls");
    int convex_ball = 1, convex_iters = 50, convex_depth = 5;
    convex_cmd->add_option("--conjugator-ball", convex_ball, "radius of the {C,D} conjugator ball");
    convex_cmd->add_option("--iters", convex_iters, "subgradient iterations");
    convex_cmd->add_option("--depth", convex_depth, "dyadic depth");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    std::string verify_selection = "all";
    std::string verify_out;
    int verify_word_bound = 8;
    verify_cmd->add_option("--selection", verify_selection,
                           "identities|questionmark|thurston|centralizer|cuntz|pair|spectral|io|all");
    verify_cmd->add_option("--out", verify_out, "write the JSON report to this path");
    verify_cmd->add_option("--word-bound", verify_word_bound, "ball radius for centralizer checks");

    CLI11_PARSE(app, argc, argv);

    if (budget > 0) {
        setenv("THOMPSON_LAB_BUDGET", std::to_string(budget).c_str(), 1);
    }

    try {
        if (*eval_cmd) {
            tlab::PLMap f = element_arg(eval_element);
            emit(json(f(dyadic_arg(eval_point)).str()), format);
        } else if (*compose_cmd) {
            tlab::PLMap f = element_arg(compose_f), g = element_arg(compose_g);
            emit(tlab::plmap_to_json(tlab::compose(f, g)), "json");
        } else if (*member_cmd) {
            emit(json(membership_name(element_arg(member_element).classify())), format);
        } else if (*breaks_cmd) {
            tlab::PLMap f = element_arg(breaks_element);
            json bps = json::array(), discs = json::array();
            for (auto& x : f.circle_breakpoints()) bps.push_back(x.str());
            for (auto& x : f.circle_discontinuities()) discs.push_back(x.str());
            emit({{"circle_breakpoints", bps}, {"circle_discontinuities", discs}}, "json");
        } else if (*psi_cmd) {
            emit(json(tlab::psi(rational_arg(qm_arg)).str()), format);
        } else if (*psi_inv_cmd) {
            emit(json(tlab::psi_inv(dyadic_arg(qm_arg)).str()), format);
        } else if (*phi_cmd) {
            emit(json(tlab::phi_circle(rational_arg(qm_arg)).str()), format);
        } else if (*phi_inv_cmd) {
            emit(json(tlab::phi_circle_inv(dyadic_arg(qm_arg)).str()), format);
        } else if (*q_cmd) {
            emit(json(tlab::minkowski_q(rational_arg(qm_arg)).str()), format);
        } else if (*iso_push) {
            tlab::ParsedElement parsed = tlab::parse_element(iso_arg);
            tlab::PPSLMap g = std::holds_alternative<tlab::PSL2Z>(parsed)
                                  ? tlab::PPSLMap::single(std::get<tlab::PSL2Z>(parsed))
                                  : tlab::ppsl_from_json(json::parse(iso_arg));
            emit(tlab::plmap_to_json(tlab::push_forward(g)), "json");
        } else if (*iso_pull) {
            emit(tlab::ppsl_to_json(tlab::pull_back(element_arg(iso_arg))), "json");
        } else if (*lambda_member) {
            auto m = tlab::lambda_membership(element_arg(lambda_arg));
            emit(json(m ? m->str() : "none"), format);
        } else if (*cent_cmd) {
            tlab::CentralizerReport rep =
                tlab::centralizer_in_lambda(element_arg(cent_element), cent_word_bound);
            json elements = json::array();
            for (auto& g : rep.elements) elements.push_back(tlab::plmap_to_json(g));
            json out{{"case", rep.kind == tlab::CentralizerReport::Case::InLambda
                                  ? "in_lambda"
                                  : rep.kind == tlab::CentralizerReport::Case::InTMinusLambda
                                        ? "in_T_minus_lambda"
                                        : "in_V_minus_T"},
                     {"complete", rep.complete},
                     {"certificate", rep.certificate},
                     {"elements", elements}};
            if (rep.classification)
                out["classification"] =
                    *rep.classification == tlab::CentralizerReport::CyclicClass::FiniteCyclic
                        ? "finite-cyclic"
                        : "infinite-cyclic";
            emit(out, "json");
        } else if (*pi_cmd) {
            tlab::CuntzWordSum u = tlab::pi_of(element_arg(pi_element));
            emit({{"text", u.str()}, {"terms", tlab::cuntz_to_json(u)["terms"]}}, "json");
        } else if (*states_cmd) {
            tlab::ParsedElement parsed = tlab::parse_element(states_element);
            tlab::CuntzWordSum u = std::holds_alternative<tlab::CuntzWordSum>(parsed)
                                       ? std::get<tlab::CuntzWordSum>(parsed)
                                       : tlab::pi_of(element_arg(states_element));
            emit({{"phi0", tlab::state_phi0(u).str()}, {"phi1", tlab::state_phi1(u).str()}},
                 "json");
        } else if (*norm_cmd) {
            tlab::GroupAlgebraElement x = tlab::algebra_from_json(json::parse(norm_element));
            tlab::NormEstimate est =
                tlab::norm_estimate(tlab::truncate_pi(x, norm_depth), norm_tol, 100000, seed);
            emit({{"depth", norm_depth},
                  {"tol", norm_tol},
                  {"seed", seed},
                  {"estimate", est.value},
                  {"converged", est.converged},
                  {"iterations", est.iterations}},
                 "json");
        } else if (*v0_cmd) {
            std::vector<tlab::PLMap> gens;
            if (v0_gens.empty()) {
                gens = {tlab::rescale_upper(tlab::compose(tlab::generator(tlab::GeneratorName::D),
                                                          tlab::generator(tlab::GeneratorName::D))),
                        tlab::rescale_upper(tlab::generator(tlab::GeneratorName::C))};
            } else {
                for (auto& w : v0_gens) gens.push_back(tlab::rescale_upper(element_arg(w)));
            }
            auto seq = tlab::average_power_experiment(gens, v0_mmax, v0_depth);
            emit({{"depth", v0_depth}, {"m_max", v0_mmax}, {"seed", seed}, {"norms", seq}}, "json");
        } else if (*convex_cmd) {
            tlab::GroupAlgebraElement base =
                tlab::GroupAlgebraElement::lambda(
                    tlab::word_to_element(tlab::GroupWord::parse("C D C"))) +
                tlab::GroupAlgebraElement::lambda(
                    tlab::word_to_element(tlab::GroupWord::parse("D^2 C D C D^2")));
            auto conjugators =
                tlab::ball_enumerate({tlab::generator(tlab::GeneratorName::C),
                                      tlab::generator(tlab::GeneratorName::D)},
                                     convex_ball);
            tlab::ConvexSearchResult res =
                tlab::convex_minimize(base, conjugators, convex_depth, convex_iters, seed);
            json weights = json::array();
            for (auto& w : res.weights) weights.push_back(w.str());
            emit({{"depth", res.depth},
                  {"iterations", res.iterations},
                  {"seed", res.seed},
                  {"conjugators", conjugators.size()},
                  {"achieved_norm_estimate", res.achieved_norm_estimate},
                  {"weights", weights},
                  {"best_trace", res.best_trace}},
                 "json");
        } else if (*verify_cmd) {
            tlab::SuiteOptions opts;
            opts.seed = seed;
            opts.word_bound = verify_word_bound;
            auto records = tlab::run_suite(verify_selection, opts);
            for (auto& r : records)
                std::cout << (r.status == "pass" ? "[PASS] " : "[FAIL] ") << r.name << " — "
                          << r.anchor << " (" << r.runtime_ms << " ms)\n";
            if (!verify_out.empty()) tlab::export_report(records, verify_out);
            if (format == "json") std::cout << tlab::report_to_json(records).dump(2) << "\n";
            return tlab::all_passed(records) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
