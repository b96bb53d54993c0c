// Acceptance gates for the verification engine. Each numbered gate prints
// one PASS/FAIL line; any failure makes the binary exit nonzero. Frozen
// regression values (grid counts, reference-table diff set) come from the
// first verified run and are cross-checked by an independent enumeration.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "triop/cybe.hpp"
#include "triop/json_io.hpp"
#include "triop/ooperator.hpp"
#include "triop/parse.hpp"
#include "triop/prelie.hpp"

using namespace triop;

namespace {

int g_failures = 0;

void gate(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d: %s — %s%s\n", number, ok ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : (" [" + detail + "]").c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::mt19937_64 rng(20250810);

long rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

Scalar rand_rat() { return Scalar(Rational(rand_int(-4, 4), rand_int(1, 4))); }

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(TRIOP_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::map<std::string, Scalar> admissible(const ParamOperator& fam) {
    std::map<std::string, Scalar> sigma;
    for (const auto& p : fam.free_parameters()) {
        for (;;) {
            sigma[p] = rand_rat();
            bool ok = true;
            for (const auto& sc : fam.side_conditions) {
                bool assigned = true;
                for (const auto& v : sc.variables())
                    if (!sigma.count(v)) assigned = false;
                if (assigned && sc.substitute(sigma).is_zero()) ok = false;
            }
            if (ok) break;
        }
    }
    return sigma;
}

}  // namespace

int main() {
    const TriAlgebra A = TriAlgebra::a3();
    const TriAlgebra SD = semidirect(A, coadjoint_rep(A), {"e1*", "e2*", "e3*"});

    // 1. fundamental identity on the 3-dimensional algebra
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = check_fundamental_identity(A).pass();
        double dt = seconds_since(t0);
        gate(1, "fundamental identity holds on A3", ok && dt < 1.0,
             "runtime " + std::to_string(dt) + " s (< 1 s)");
    }

    // 2. all 31 catalogue families pass the direct check symbolically
    {
        auto t0 = std::chrono::steady_clock::now();
        auto results = verify_catalogue(A, catalogue(), 4);
        double dt = seconds_since(t0);
        int pass = 0;
        std::string bad;
        for (const auto& r : results) {
            if (r.pass)
                ++pass;
            else
                bad += r.name + " ";
        }
        gate(2, "31/31 families verify symbolically", pass == 31 && dt < 10.0,
             std::to_string(pass) + "/31, runtime " + std::to_string(dt) + " s (< 10 s)" +
                 (bad.empty() ? "" : "; failing: " + bad));
    }

    // 3. specialized cubic conditions: exact reproduction and equivalence
    {
        ParamOperator generic = zero_operator(3);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                generic.entries[i - 1][j - 1] =
                    LaurentPoly::var("a" + std::to_string(i) + std::to_string(j));
        auto conds = specialized_conditions_3d(generic);
        // frozen transcription of the three reference cubics
        bool exact =
            conds[0] == parse_expr("a12*(a11*a21 - a21*a33 + a23*a31) + "
                                   "a13*(a21*a32 + a11*a31 - a22*a31) - a11^2*(a22 + a33)") &&
            conds[1] == parse_expr(
                            "a12*(a11*a22 - a12*a21 - a31*a13 + a33*a11 + a22*a33 - a23*a32)") &&
            conds[2] == parse_expr(
                            "a13*(a11*a22 - a12*a21 - a13*a31 + a33*a11 + a22*a33 - a23*a32)");

        int checked = 0, satisfying = 0, violating = 0;
        bool equiv = true;
        auto try_matrix = [&](const std::vector<std::vector<Scalar>>& m) {
            auto c = specialized_conditions_at(m);
            bool vanish = c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
            bool pass = check_o_operator_direct(A, operator_from_scalars(m)).pass();
            if (vanish != pass) equiv = false;
            ++checked;
            (vanish ? satisfying : violating)++;
        };
        for (int t = 0; t < 350; ++t) {
            std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3));
            for (auto& row : m)
                for (auto& x : row) x = Scalar(rand_int(-2, 2));
            try_matrix(m);
        }
        for (const auto& fam : catalogue())
            for (int t = 0; t < 5; ++t) try_matrix(fam.substitute(admissible(fam)));
        gate(3, "cubic conditions match the reference text and the direct check",
             exact && equiv && checked >= 500 && satisfying > 0 && violating > 0,
             std::to_string(checked) + " matrices (" + std::to_string(satisfying) +
                 " satisfying, " + std::to_string(violating) + " violating), zero tolerance");
    }

    // 4. induced products: axioms hold; reference-table diffs are findings
    {
        auto t0 = std::chrono::steady_clock::now();
        int axioms_pass = 0;
        std::set<std::string> diffs;
        for (const auto& fam : catalogue()) {
            PreLieAlgebra P = induce_from_operator(A, fam);
            if (check_pre_lie_axioms(P).pass()) ++axioms_pass;
            if (!table_diff(P, reference_induced_table(fam.name)).empty())
                diffs.insert(fam.name);
        }
        double dt = seconds_since(t0);
        // frozen finding set: the documented O4/O18 defects plus the further
        // misprints the recomputation uncovered (see the decisions record)
        const std::set<std::string> expected = {"O1",  "O4",  "O8",  "O11", "O14",
                                                "O18", "O19", "O22", "O29", "O30"};
        bool documented_present = diffs.count("O4") && diffs.count("O18");
        CliResult diff4 = run_cli("prelie diff --family O4");
        CliResult diff18 = run_cli("prelie diff --family O18");
        CliResult diff2 = run_cli("prelie diff --family O2");
        bool findings_exit = diff4.exit_code == 3 && diff18.exit_code == 3;
        bool clean_exit = diff2.exit_code == 0;
        std::string diffnames;
        for (const auto& d : diffs) diffnames += d + " ";
        gate(4, "31/31 induced products satisfy the axioms; table diffs surface as findings",
             axioms_pass == 31 && documented_present && diffs == expected && findings_exit &&
                 clean_exit && dt < 30.0,
             std::to_string(axioms_pass) + "/31 axioms; diff set {" + diffnames +
                 "} (10 reference-table defects incl. documented O4, O18; exit 3 each); "
                 "runtime " + std::to_string(dt) + " s (< 30 s)");
    }

    // 5. direct and constants-based product checkers agree
    {
        std::mt19937_64 gen(777);
        int agree = 0, total = 0;
        for (int dim = 2; dim <= 3; ++dim)
            for (int t = 0; t < 60; ++t) {
                PreLieAlgebra P = PreLieAlgebra::zero(dim);
                for (int i = 1; i <= dim; ++i)
                    for (int j = i + 1; j <= dim; ++j)
                        for (int k = 1; k <= dim; ++k) {
                            Vec v(dim);
                            bool nz = false;
                            for (auto& c : v)
                                if (gen() % 3 == 0) {
                                    c = LaurentPoly(Scalar(static_cast<long>(gen() % 7) - 3));
                                    if (!c.is_zero()) nz = true;
                                }
                            if (nz) P.set_constant(i, j, k, v);
                        }
                CheckReport d = check_pre_lie_axioms(P);
                CheckReport e = check_pre_lie_by_constants(P);
                bool same = d.violations.size() == e.violations.size();
                if (same)
                    for (std::size_t v = 0; v < d.violations.size(); ++v)
                        if (d.violations[v].where != e.violations[v].where ||
                            d.violations[v].residual != e.violations[v].residual)
                            same = false;
                agree += same;
                ++total;
            }
        gate(5, "axiom checkers agree on random products (dims 2-3)",
             agree == total && total >= 100,
             std::to_string(agree) + "/" + std::to_string(total) + " exact agreements");
    }

    // 6. semidirect product with the coadjoint action
    {
        bool four = SD.constants().size() == 4;
        Vec e1 = basis_vec(6, 1);
        Vec me3s(6); me3s[5] = LaurentPoly(-1);
        Vec e2s(6); e2s[4] = LaurentPoly(1);
        Vec me1s(6); me1s[3] = LaurentPoly(-1);
        bool values = SD.bracket_basis(1, 2, 3) == e1 && SD.bracket_basis(1, 2, 4) == me3s &&
                      SD.bracket_basis(1, 3, 4) == e2s && SD.bracket_basis(2, 3, 4) == me1s;
        gate(6, "6-dimensional semidirect product has exactly the four expected products",
             four && values && check_fundamental_identity(SD).pass());
    }

    // 7. all 31 solution tensors: skew, fixture match, zero bracket
    {
        auto t0 = std::chrono::steady_clock::now();
        auto results = verify_cybe_catalogue(4);
        double dt = seconds_since(t0);
        int pass = 0;
        std::string bad;
        for (const auto& r : results) {
            if (r.pass())
                ++pass;
            else
                bad += r.name + "(" + r.detail + ") ";
        }
        gate(7, "31/31 tensors are skew, match references, and solve the equation",
             pass == 31 && dt < 120.0,
             std::to_string(pass) + "/31, 1296-slot tensors all-zero, runtime " +
                 std::to_string(dt) + " s (< 2 min)" + (bad.empty() ? "" : "; " + bad));
    }

    // 8. operator condition <=> zero bracket, sampled both ways
    {
        int total = 0, op_side = 0, non_side = 0;
        bool equiv = true;
        auto sample = [&](const ParamOperator& T) {
            bool is_op = check_o_operator_direct(A, T).pass();
            bool zero = yang_baxter_bracket(SD, tensor_from_operator(SD, T)).is_zero();
            if (is_op != zero) equiv = false;
            (is_op ? op_side : non_side)++;
            ++total;
        };
        for (int t = 0; t < 110; ++t) {
            ParamOperator T = zero_operator(3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) T.entries[i][j] = LaurentPoly(rand_rat());
            sample(T);
        }
        for (const auto& fam : catalogue())
            for (int t = 0; t < 3; ++t)
                sample(operator_from_scalars(fam.substitute(admissible(fam)), fam.name));
        gate(8, "operator condition holds iff the bracket vanishes (sampled)",
             equiv && total >= 200 && op_side > 0 && non_side > 0,
             std::to_string(total) + " samples (" + std::to_string(op_side) + " operators, " +
                 std::to_string(non_side) + " non-operators), no one-sided counterexample");
    }

    // 9. grid completeness probe at bound 1 (frozen regression counts)
    {
        auto t0 = std::chrono::steady_clock::now();
        GridResult res = grid_completeness_search(1, 4);
        double dt = seconds_since(t0);
        bool counts = res.enumerated == 19683 && res.solutions == 3015 &&
                      res.matched == 1718 &&
                      res.unmatched.size() == static_cast<std::size_t>(1297);
        CliResult cli = run_cli("search-grid --bound 1 --jobs 2");
        gate(9, "bound-1 grid search reproduces frozen counts; unmatched list is a finding",
             counts && cli.exit_code == 3 && dt < 60.0,
             "19683 enumerated, 3015 solutions, 1718 matched, 1297 unmatched (finding, exit "
             "3); runtime " + std::to_string(dt) + " s (< 1 min)");
    }

    // 10. dimension-2 experiment emits its constraint system and verdict
    {
        Dim2Result res = dim2_experiment();
        CliResult cli = run_cli("dim2-experiment");
        bool witness_nonzero = false;
        for (const auto& [k, v] : res.witness)
            if (!v.is_zero()) witness_nonzero = true;
        gate(10, "dim-2 experiment: empty constraint set, non-trivial verdict is a finding",
             res.constraints.empty() && !res.trivial_only && res.witness_checked &&
                 witness_nonzero && cli.exit_code == 3,
             "verdict disagrees with the reference triviality claim; witness c121_1=1 "
             "(axioms re-checked), CLI exit 3");
    }

    // 11. byte-identical reports across runs and worker counts
    {
        bool ok = true;
        std::string detail;
        auto same_twice = [&](const std::string& args) {
            CliResult a = run_cli(args);
            CliResult b = run_cli(args);
            if (a.out != b.out || a.out.empty()) {
                ok = false;
                detail += "[rerun differs: " + args + "] ";
            }
        };
        auto same_jobs = [&](const std::string& args) {
            CliResult a = run_cli(args + " --jobs 1");
            CliResult b = run_cli(args + " --jobs 4");
            if (a.out != b.out || a.out.empty()) {
                ok = false;
                detail += "[jobs differ: " + args + "] ";
            }
        };
        same_twice("verify-algebra");
        same_twice("catalog verify");
        same_twice("catalog verify --format json");
        same_twice("prelie diff --family O4");
        same_twice("dim2-experiment");
        same_twice("cybe verify --solution r7");
        same_jobs("catalog verify");
        same_jobs("search-grid --bound 1");
        same_jobs("cybe verify");
        gate(11, "reports are byte-identical across runs and --jobs 1 vs --jobs 4", ok, detail);
    }

    std::printf("%s (%d failure(s))\n", g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
