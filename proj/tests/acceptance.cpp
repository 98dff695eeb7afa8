#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "qbrst/brst.hpp"
#include "qbrst/fock.hpp"
#include "qbrst/glq.hpp"
#include "qbrst/rmatrix.hpp"

using namespace qbrst;

namespace {

// wall-clock limits in seconds
constexpr double kInvariantEach = 1;
constexpr double kAxioms = 10;
constexpr double kExtendedS = 10;
constexpr double kWedge = 60;
constexpr double kRecurrence = 600;
constexpr double kBrstSuite = 1800;
constexpr double kRest = 1800;
const Rational kQ0(3, 2);
constexpr int kFlatLetters = 4;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

// body returns pass/fail and writes details
void criterion(int id, const std::string& title, double limit, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    auto t = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "    exception: " << e.what() << '\n';
    }
    double s = since(t);
    bool in_time = s <= limit;
    if (!in_time) detail << "    over time limit\n";
    bool pass = ok && in_time;
    failures += !pass;
    std::printf("%s %2d %s  (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", id, title.c_str(), s, limit);
    std::cout << detail.str() << std::flush;
}

bool report_all(std::ostream& os, const IdentityReport& r) {
    for (auto& i : r.items)
        os << "    " << (i.ok() ? "ok   " : "FAIL ") << i.name << "  residual " << i.residual_terms << " terms\n";
    return r.ok();
}

}

int main() {
    criterion(1, "Hecke and trace invariants, N = 1, 2, 3", 3 * kInvariantEach, [](std::ostream& os) {
        bool ok = true;
        for (int N = 1; N <= 3; ++N) {
            auto t = Clock::now();
            InvariantResiduals r = glq_invariants(N, Scalar::q());
            double s = since(t);
            bool pass = r.ok() && s <= kInvariantEach;
            os << "    N = " << N << (pass ? " ok" : " FAIL") << " (" << s << " s)\n";
            ok &= pass;
        }
        return ok;
    });

    criterion(2, "axiom suite on sl2, gl11, glq(2); corrupted instances rejected", kAxioms, [](std::ostream& os) {
        bool ok = true;
        for (const char* m : {"sl2", "gl11", "glq"}) {
            QuantumLieAlgebra a = m == std::string("glq") ? derive_from_glq(2) : model_library(m);
            AxiomReport r = check_axioms(a);
            os << "    " << m << (r.ok() ? " ok" : " FAIL at " + r.first_failure()) << '\n';
            ok &= r.ok();
            QuantumLieAlgebra bad = a;
            auto [k, v] = *bad.C.entries().begin();
            bad.C.add_packed(k, v);
            AxiomReport rb = check_axioms(bad);
            os << "    corrupted " << m << (rb.ok() ? " accepted (FAIL)" : " rejected at " + rb.first_failure()) << '\n';
            ok &= !rb.ok();
        }
        return ok;
    });

    criterion(3, "extended S-matrix braid relation", kExtendedS, [](std::ostream& os) {
        bool ok = true;
        for (const char* m : {"sl2", "gl11", "glq"}) {
            size_t n = ybe_residual(build_extended_S(model_library(m))).nnz();
            os << "    " << m << " residual " << n << '\n';
            ok &= n == 0;
        }
        return ok;
    });

    criterion(4, "antisymmetrizer recursions and heights", kWedge, [](std::ostream& os) {
        bool ok = true;
        for (int N = 1; N <= 4; ++N) {
            auto h = compute_height(Tensor::permutation(N), 6);
            os << "    flip on " << N << " generators: h = " << (h ? std::to_string(*h) : "none") << '\n';
            ok &= h == std::optional<int>(N);
        }
        AntisymTower t = build_tower(omega_braid(2), 6);
        os << "    omega braid N = 2: h = " << (t.height ? std::to_string(*t.height) : "none") << ", A5 zero "
           << t.A(5).is_zero() << ", A4 nonzero " << !t.A(4).is_zero() << '\n';
        ok &= t.height == std::optional<int>(4) && t.A(5).is_zero() && !t.A(4).is_zero();
        for (int n = 2; n <= 5; ++n) ok &= antisym_step_right(t.sigma, t.A(n - 1), n) == t.A(n);
        return ok;
    });

    criterion(5, "X recurrence: candidates, generic solver, involutive models", kRecurrence, [](std::ostream& os) {
        bool ok = true;
        QuantumLieAlgebra a = model_library("glq");
        AntisymTower t = build_tower(a.sigma, 5);
        XTower xt = solve_x_generic(a, t, 3);
        ResidualReport rr = verify_recurrence(xt);
        for (size_t i = 0; i < rr.nnz.size(); ++i)
            os << "    glq level " << i + 1 << " solved, residual " << rr.nnz[i] << ", provenance "
               << to_string(xt.levels[i].provenance) << '\n';
        ok &= rr.ok() && xt.top() == 3;
        for (int r = 1; r <= 2; ++r) {
            CandidateCheck c = check_candidate(xt, r);
            os << "    candidate " << r << ": identity " << (c.identity ? "holds" : "fails") << ", literal X = bracket "
               << (c.literal ? "holds" : "fails (" + std::to_string(c.literal_nnz) + " terms)") << '\n';
            ok &= c.identity;
        }
        for (const char* m : {"sl2", "gl11"}) {
            QuantumLieAlgebra s = model_library(m);
            AntisymTower ts = build_tower(s.sigma, 3);
            XTower xs = solve_x_generic(s, ts, 2);
            bool zero_ok = recurrence_rhs(ts, xs.X(1), 2).is_zero();
            auto sum = q_summands_abstract(xs);
            bool two_term = sum.size() == 3 && sum[2].is_zero();
            os << "    " << m << ": X = 0 solves level 2 " << zero_ok << ", two-term charge " << two_term << '\n';
            ok &= zero_ok && two_term && verify_recurrence(xs).ok();
        }
        return ok;
    });

    GlqInstance g = build_instance(2);
    NCPoly Q = build_Q(g), Qs = build_Qstar(g);

    criterion(6, "BRST charge identities, N = 2", kBrstSuite, [&](std::ostream& os) {
        os << "    Q has " << Q.size() << " terms\n";
        return report_all(os, verify_brst_identities(g, Q));
    });

    criterion(7, "anti-BRST identities, N = 2", kRest, [&](std::ostream& os) {
        return report_all(os, verify_qstar_identities(g, Qs));
    });

    criterion(8, "Laplacian closed form, commutation, current U", kRest, [&](std::ostream& os) {
        bool a = report_all(os, verify_laplacian(g, Q, Qs));
        bool b = report_all(os, verify_current(g, build_current_U(g)));
        return a && b;
    });

    criterion(9, "cohomology relations, N = 2", kRest, [&](std::ostream& os) { return report_all(os, verify_cohomology(g)); });

    criterion(10, "classical limit, gl(2)", kRest, [](std::ostream& os) { return report_all(os, classical_limit_check(2)); });

    auto hodge = [&](const NCPoly& q, std::ostream& os) {
        bool ok = true;
        for (int t = 0; t <= 1; ++t)
            for (int w = 0; w <= 2; ++w) {
                HodgeData d = hodge_data(g, q, Qs, t, w);
                HodgeComponent c = hodge_component(d, kQ0);
                NCPoly s;
                int k = 0;
                for (auto& b : d.space.basis) s.add(b, Scalar(++k));
                bool rt = hodge_decompose(d, s, kQ0).round_trip;
                bool pass = c.delta_is_anticommutator && c.dims_add_up() && rt;
                os << "    (" << t << "," << w << ") dim " << c.dim << " = ker " << c.ker_delta << " + Q " << c.rank_q
                   << " + Q* " << c.rank_qs << (c.dims_add_up() ? "" : " (mismatch)") << ", Delta = QQ*+Q*Q "
                   << c.delta_is_anticommutator << ", direct " << c.direct_sum << ", round trip " << rt
                   << (pass ? "" : "  FAIL") << '\n';
                ok &= pass;
            }
        return ok;
    };

    criterion(11, "Hodge decomposition on t <= 1, w <= 2, q0 = 3/2", kRest,
              [&](std::ostream& os) { return hodge(Q, os); });

    criterion(12, "flatness: generic and classical graded dimensions", kRest, [](std::ostream& os) {
        FlatnessReport f = flatness_check(2, kFlatLetters);
        os << "    generic  ";
        for (long d : f.generic) os << ' ' << d;
        os << "\n    classical";
        for (long d : f.classical) os << ' ' << d;
        os << '\n';
        return f.ok();
    });

    std::cout << "\ndiagnostic (not a criterion): charge with the adjusted weights\n";
    NCPoly Qa = build_Q_weighted(g, adjusted_weights_n2());
    report_all(std::cout, verify_brst_identities(g, Qa));
    report_all(std::cout, verify_laplacian(g, Qa, Qs));
    hodge(Qa, std::cout);

    std::printf("\n%d of 12 criteria failed\n", failures);
    return failures ? 1 : 0;
}
