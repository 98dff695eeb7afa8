#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "qbrst/brst.hpp"
#include "qbrst/fock.hpp"
#include "qbrst/glq.hpp"
#include "qbrst/io.hpp"
#include "qbrst/qla.hpp"
#include "qbrst/rmatrix.hpp"
#include "qbrst/wedge.hpp"

using namespace qbrst;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Opts {
    std::string model = "glq";
    int N = 2;
    std::string in, out;
    std::string q0 = "3/2";
    int max_degree = -1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Run {
    std::string command;
    Json params = Json::object();
    Json checks = Json::array();
    Json result;
    std::string first_failure;

    void check(const std::string& name, size_t residual, double seconds = 0) {
        checks.push_back({{"name", name}, {"residual_terms", residual}, {"seconds", seconds}});
        if (residual && first_failure.empty()) first_failure = name;
    }
    void add(const IdentityReport& r) {
        for (auto& i : r.items) {
            checks.push_back({{"name", i.name}, {"residual_terms", i.residual_terms}, {"expr_terms", i.expr_terms},
                              {"seconds", i.seconds}});
            if (!i.ok() && first_failure.empty()) first_failure = i.name;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

QuantumLieAlgebra load_model(const Opts& o) {
    if (!o.in.empty()) return qla_from_json(read_json_file(o.in));
    if (o.model != "sl2" && o.model != "gl11" && o.model != "glq") throw UsageError("unknown model " + o.model);
    return model_library(o.model, {}, {}, o.N);
}

void need_glq(const Opts& o) {
    if (o.model != "glq") throw UsageError("this command needs --model glq");
    if (o.N < 1) throw UsageError("--N must be >= 1");
}

Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw UsageError("--q0 must be a rational like 3/2");
    }
}

void cmd_check_axioms(const Opts& o, Run& run) {
    QuantumLieAlgebra a = o.in.empty() ? (o.model == "glq" ? derive_from_glq(o.N)
                                                            : o.model == "sl2" ? classical_lie(sl2_constants())
                                                            : o.model == "gl11" ? super_lie(gl11_constants(), gl11_parity)
                                                                                : throw UsageError("unknown model " + o.model))
                                       : qla_from_json(read_json_file(o.in));
    auto t = std::chrono::steady_clock::now();
    AxiomReport r = check_axioms(a);
    double s = seconds_since(t);
    run.check("eigenvalue-one", r.has_eigenvalue_one ? 0 : 1, s);
    run.check("yang-baxter", r.ybe.nnz());
    run.check("jacobi", r.jacobi.nnz());
    run.check("int3", r.int3.nnz());
    run.check("int3a", r.int3a.nnz());
    run.check("p1c", r.p1c.nnz());
    t = std::chrono::steady_clock::now();
    Tensor S = build_extended_S(a);
    run.check("extended-S yang-baxter", ybe_residual(S).nnz(), seconds_since(t));
}

void cmd_height(const Opts& o, Run& run) {
    const int cap = o.max_degree > 0 ? o.max_degree : 6;
    Tensor sigma = o.model == "glq" && o.in.empty() ? omega_braid(o.N) : load_model(o).sigma;
    auto t = std::chrono::steady_clock::now();
    AntisymTower tw = build_tower(sigma, cap);
    run.params["cap"] = cap;
    run.result = {{"height", tw.height ? Json(*tw.height) : Json(nullptr)}, {"seconds", seconds_since(t)}};
    if (tw.height) std::cout << *tw.height << '\n';
    else std::cout << "height exceeds cap " << cap << '\n';
}

void cmd_solve_x(const Opts& o, Run& run) {
    QuantumLieAlgebra a = load_model(o);
    const int cap = o.max_degree > 0 ? o.max_degree : 4;
    AntisymTower tw = build_tower(a.sigma, cap);
    int r_max = tw.height ? *tw.height - 1 : tw.size() - 1;
    auto t = std::chrono::steady_clock::now();
    XTower xt = solve_x_generic(a, tw, r_max);
    double s = seconds_since(t);
    ResidualReport rr = verify_recurrence(xt);
    for (size_t i = 0; i < rr.nnz.size(); ++i) run.check("recurrence level " + std::to_string(i + 1), rr.nnz[i], i ? 0 : s);
    Json cands = Json::array();
    for (int r = 1; r <= 2 && r + 1 <= xt.top(); ++r) {
        CandidateCheck c = check_candidate(xt, r);
        run.check("candidate " + std::to_string(r) + " identity", c.identity_nnz);
        cands.push_back({{"r", r}, {"identity", c.identity}, {"literal", c.literal}});
    }
    run.result = {{"tower", to_json(xt)}, {"candidates", cands}};
}

void cmd_build_q(const Opts& o, Run& run) {
    if (o.model == "glq" && o.in.empty()) {
        GlqInstance g = build_instance(o.N);
        auto t = std::chrono::steady_clock::now();
        NCPoly Q = build_Q(g);
        run.result = {{"terms", Q.size()}, {"seconds", seconds_since(t)}, {"Q", to_json(Q, g.rels->alphabet())}};
        return;
    }
    QuantumLieAlgebra a = load_model(o);
    AntisymTower tw = build_tower(a.sigma, o.max_degree > 0 ? o.max_degree : 4);
    XTower xt = solve_x_generic(a, tw, tw.height ? *tw.height - 1 : tw.size() - 1);
    ResidualReport rr = verify_recurrence(xt);
    for (size_t i = 0; i < rr.nnz.size(); ++i) run.check("recurrence level " + std::to_string(i + 1), rr.nnz[i]);
    NCPoly Q = assemble_q_abstract(xt);
    GeneratorAlphabet al = abstract_alphabet(a.n_gen);
    auto g = Q.grading(al);
    run.check("grading +1", g && *g == 1 ? 0 : 1);
    run.result = {{"terms", Q.size()}, {"Q", to_json(Q, al)}};
}

void cmd_verify_glq(const Opts& o, Run& run) {
    need_glq(o);
    GlqInstance g = build_instance(o.N);
    run.add(verify_brst_identities(g, build_Q(g)));
}

void cmd_verify_qstar(const Opts& o, Run& run) {
    need_glq(o);
    GlqInstance g = build_instance(o.N);
    run.add(verify_qstar_identities(g, build_Qstar(g)));
    run.add(verify_current(g, build_current_U(g)));
}

void cmd_laplacian(const Opts& o, Run& run) {
    need_glq(o);
    GlqInstance g = build_instance(o.N);
    run.add(verify_laplacian(g, build_Q(g), build_Qstar(g)));
}

void cmd_cohomology(const Opts& o, Run& run) {
    need_glq(o);
    GlqInstance g = build_instance(o.N);
    run.add(verify_cohomology(g));
    Json gens = Json::array();
    for (auto& p : cohomology_generators(g)) gens.push_back(to_json(p, g.rels->alphabet()));
    run.result = {{"generators", gens}};
}

void cmd_classical_limit(const Opts& o, Run& run) {
    if (o.N < 1) throw UsageError("--N must be >= 1");
    run.add(classical_limit_check(o.N));
}

void cmd_hodge(const Opts& o, Run& run) {
    need_glq(o);
    Rational q0 = parse_rational(o.q0);
    const int wmax = o.max_degree >= 0 ? o.max_degree : 2;
    GlqInstance g = build_instance(o.N);
    NCPoly Q = build_Q(g), Qs = build_Qstar(g);
    Json comps = Json::array();
    for (int t = 0; t <= 1; ++t)
        for (int w = 0; w <= wmax; ++w) {
            auto start = std::chrono::steady_clock::now();
            HodgeData d = hodge_data(g, Q, Qs, t, w);
            HodgeComponent c = hodge_component(d, q0);
            NCPoly sample;
            int k = 0;
            for (auto& b : d.space.basis) sample.add(b, Scalar(++k));
            HodgeDecomposition h = hodge_decompose(d, sample, q0);
            std::string tag = "(" + std::to_string(t) + "," + std::to_string(w) + ")";
            double s = seconds_since(start);
            run.check("Delta = QQ*+Q*Q " + tag, c.delta_is_anticommutator ? 0 : 1, s);
            run.check("dimension count " + tag, c.dims_add_up() ? 0 : 1);
            run.check("round trip " + tag, h.round_trip ? 0 : 1);
            comps.push_back({{"t_degree", t}, {"w_degree", w}, {"dim", c.dim}, {"ker_delta", c.ker_delta},
                             {"rank_q", c.rank_q}, {"rank_qstar", c.rank_qs}, {"direct_sum", c.direct_sum},
                             {"q_squared_zero", c.q_squared_zero}});
        }
    run.result = {{"components", comps}};
}

}

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of quantum BRST constructions"};
    app.require_subcommand(1);
    Opts o;
    auto flags = [&](CLI::App* s) {
        s->add_option("--model", o.model, "sl2, gl11 or glq")->check(CLI::IsMember({"sl2", "gl11", "glq"}));
        s->add_option("--N", o.N, "matrix size for glq");
        s->add_option("--in", o.in, "input JSON");
        s->add_option("--out", o.out, "manifest output path");
        s->add_option("--q0", o.q0, "rational specialization point");
        s->add_option("--max-degree", o.max_degree, "degree cap");
    };
    const std::vector<std::pair<std::string, void (*)(const Opts&, Run&)>> cmds = {
        {"check-axioms", cmd_check_axioms}, {"height", cmd_height},         {"solve-x", cmd_solve_x},
        {"build-q", cmd_build_q},           {"verify-glq", cmd_verify_glq}, {"verify-qstar", cmd_verify_qstar},
        {"laplacian", cmd_laplacian},       {"cohomology", cmd_cohomology}, {"classical-limit", cmd_classical_limit},
        {"hodge", cmd_hodge}};
    for (auto& [name, f] : cmds) flags(app.add_subcommand(name));
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    Run run;
    void (*fn)(const Opts&, Run&) = nullptr;
    for (auto& [name, f] : cmds)
        if (app.got_subcommand(name)) {
            run.command = name;
            fn = f;
        }
    run.params = {{"model", o.model}, {"N", o.N}, {"q0", o.q0}, {"max_degree", o.max_degree}};
    if (!o.in.empty()) run.params["in"] = o.in;
    try {
        fn(o, run);
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "input: " << e.what() << '\n';
        return 2;
    } catch (const AxiomFailure& e) {
        std::cerr << e.what() << '\n';
        run.first_failure = e.report.first_failure();
    } catch (const NonGenericPoint& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const PoleError& e) {
        std::cerr << "q0: " << e.what() << '\n';
        return 2;
    }
    Json manifest = {{"command", run.command}, {"version", kVersion}, {"parameters", run.params},
                     {"checks", run.checks}, {"status", run.first_failure.empty() ? "ok" : "fail"}};
    if (!run.first_failure.empty()) manifest["first_failure"] = run.first_failure;
    if (!run.result.is_null()) manifest["result"] = run.result;
    if (!o.out.empty()) write_json_file(o.out, manifest);
    for (auto& c : run.checks)
        std::cout << (c["residual_terms"].get<size_t>() ? "FAIL " : "ok   ") << c["name"].get<std::string>() << "  ("
                  << c["residual_terms"].get<size_t>() << " residual terms)\n";
    if (!run.first_failure.empty()) {
        std::cerr << "first failing identity: " << run.first_failure << '\n';
        return 1;
    }
    return 0;
}
