#include <doctest.h>

#include "test_util.hpp"
#include "triop/parse.hpp"

using namespace triop;
using namespace triop_test;

namespace {
ParamOperator rand_operator(int dim) {
    ParamOperator T = zero_operator(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) T.entries[i][j] = LaurentPoly(rand_scalar(false));
    return T;
}

std::map<std::string, Scalar> admissible_assignment(const ParamOperator& fam) {
    std::map<std::string, Scalar> sigma;
    std::set<std::string> side_vars;
    for (const auto& sc : fam.side_conditions)
        for (const auto& v : sc.variables()) side_vars.insert(v);
    for (const auto& p : fam.free_parameters()) {
        for (;;) {
            Scalar s = side_vars.count(p) ? rand_nonzero_scalar(false) : rand_scalar(false);
            sigma[p] = s;
            bool ok = true;
            for (const auto& sc : fam.side_conditions) {
                bool all_assigned = true;
                for (const auto& v : sc.variables())
                    if (!sigma.count(v)) all_assigned = false;
                if (all_assigned && sc.substitute(sigma).is_zero()) ok = false;
            }
            if (ok) break;
        }
    }
    return sigma;
}
}  // namespace

TEST_CASE("direct operator check: base cases") {
    TriAlgebra A = TriAlgebra::a3();
    CHECK(check_o_operator_direct(A, zero_operator(3)).pass());

    // identity fails with residual 2*e1 on the only triple
    CheckReport rep = check_o_operator_direct(A, identity_operator(3));
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].where == std::vector<int>{1, 2, 3});
    CHECK(rep.violations[0].residual == "2*e1");

    CHECK(check_o_operator_direct(A, catalogue_family("O1")).pass());
    CHECK_THROWS_AS(check_o_operator_direct(A, zero_operator(4)), DimensionError);
}

TEST_CASE("expanded check agrees with the direct one") {
    TriAlgebra A = TriAlgebra::a3();
    CHECK(check_o_operator_expanded(A, catalogue_family("O7")).pass());

    CheckReport direct = check_o_operator_direct(A, identity_operator(3));
    CheckReport expanded = check_o_operator_expanded(A, identity_operator(3));
    REQUIRE(expanded.violations.size() == 1);
    CHECK(expanded.violations[0].residual == direct.violations[0].residual);

    // identical residual sets on random constants and operators, dims 3 and 4
    // (the equivalence needs only multilinearity and skew-symmetry, not the
    // fundamental identity)
    for (int dim = 3; dim <= 4; ++dim)
        for (int t = 0; t < 50; ++t) {
            TriAlgebra B = rand_tri_algebra(dim);
            ParamOperator T = rand_operator(dim);
            CheckReport d = check_o_operator_direct(B, T);
            CheckReport e = check_o_operator_expanded(B, T);
            REQUIRE(d.violations.size() == e.violations.size());
            for (std::size_t v = 0; v < d.violations.size(); ++v) {
                CHECK(d.violations[v].where == e.violations[v].where);
                CHECK(d.violations[v].residual == e.violations[v].residual);
            }
        }
}

TEST_CASE("general-representation check specializes to the adjoint one") {
    TriAlgebra A = TriAlgebra::a3();
    Representation ad = adjoint_rep(A);
    for (int t = 0; t < 30; ++t) {
        ParamOperator T = rand_operator(3);
        CHECK(check_o_operator_general(A, ad, T.entries).pass() ==
              check_o_operator_direct(A, T).pass());
    }
    CHECK(check_o_operator_general(A, ad, catalogue_family("O13").entries).pass());
}

TEST_CASE("specialized 3d conditions") {
    // generic symbolic matrix reproduces the reference polynomials
    ParamOperator generic = zero_operator(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            generic.entries[i - 1][j - 1] =
                LaurentPoly::var("a" + std::to_string(i) + std::to_string(j));
    auto conds = specialized_conditions_3d(generic);
    auto ref = specialized_conditions_generic();
    CHECK(conds[0] == ref[0]);
    CHECK(conds[1] == ref[1]);
    CHECK(conds[2] == ref[2]);

    // ... and ties to the direct residual on the generic matrix:
    // cond1 = -res_1, cond2 = res_2, cond3 = res_3
    CheckReport rep = check_o_operator_direct(TriAlgebra::a3(), generic);
    REQUIRE(rep.violations.size() == 1);
    // recompute residual vector directly for structural comparison
    TriAlgebra A = TriAlgebra::a3();
    Vec inner = A.bracket(generic.row(1), generic.row(2), basis_vec(3, 3));
    inner = vec_add(inner, A.bracket(generic.row(2), generic.row(3), basis_vec(3, 1)));
    inner = vec_add(inner, A.bracket(generic.row(3), generic.row(1), basis_vec(3, 2)));
    Vec res = vec_sub(generic.apply(inner),
                      A.bracket(generic.row(1), generic.row(2), generic.row(3)));
    CHECK(conds[0] == -res[0]);
    CHECK(conds[1] == res[1]);
    CHECK(conds[2] == res[2]);

    // O24 satisfies them identically
    auto c24 = specialized_conditions_3d(catalogue_family("O24"));
    CHECK(c24[0].is_zero());
    CHECK(c24[1].is_zero());
    CHECK(c24[2].is_zero());

    // numeric: matrix with a single 1 in cell (1,2)
    std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3, Scalar(0)));
    m[0][1] = Scalar(1);
    auto cm = specialized_conditions_at(m);
    CHECK(cm[0].is_zero());
    CHECK(cm[1].is_zero());
    CHECK(cm[2].is_zero());
    auto matches = classify_matrix(m);
    bool has_o10 = false;
    for (const auto& match : matches)
        if (match.family == "O10") has_o10 = true;
    CHECK(has_o10);

    CHECK_THROWS_AS(specialized_conditions_3d(zero_operator(4)), DimensionError);
}

TEST_CASE("conditions vanish iff the direct check passes") {
    TriAlgebra A = TriAlgebra::a3();
    int satisfied = 0;
    for (int t = 0; t < 200; ++t) {
        ParamOperator T = rand_operator(3);
        std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = T.entries[i][j].constant_value();
        auto c = specialized_conditions_at(m);
        bool vanish = c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
        bool pass = check_o_operator_direct(A, T).pass();
        CHECK(vanish == pass);
        if (pass) ++satisfied;
    }
    (void)satisfied;  // random matrices rarely satisfy the conditions; the
                      // satisfying side is covered by catalogue instantiations
    for (const auto& fam : catalogue()) {
        auto sigma = admissible_assignment(fam);
        auto m = fam.substitute(sigma);
        auto c = specialized_conditions_at(m);
        CHECK(c[0].is_zero());
        CHECK(c[1].is_zero());
        CHECK(c[2].is_zero());
    }
}

TEST_CASE("catalogue verification") {
    auto results = verify_catalogue(TriAlgebra::a3(), catalogue(), 2);
    REQUIRE(results.size() == 31);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }

    SUBCASE("corrupting O5 is detected") {
        ParamOperator bad = catalogue_family("O5");
        bad.entries[2][2] = parse_expr("a23*a32/a22 + 1");
        CheckReport rep = check_o_operator_direct(TriAlgebra::a3(), bad);
        CHECK_FALSE(rep.pass());
    }

    SUBCASE("empty catalogue is a vacuous pass with a warning") {
        std::vector<std::string> warnings;
        auto empty = verify_catalogue(TriAlgebra::a3(), {}, 1, &warnings);
        CHECK(empty.empty());
        CHECK(warnings.size() == 1);
    }

    SUBCASE("every family instantiates and passes numerically") {
        for (const auto& fam : catalogue())
            for (int t = 0; t < 10; ++t) {
                auto sigma = admissible_assignment(fam);
                ParamOperator inst = operator_from_scalars(fam.substitute(sigma), fam.name);
                INFO(fam.name);
                CHECK(check_o_operator_direct(TriAlgebra::a3(), inst).pass());
            }
    }
}

TEST_CASE("operator validation requires side conditions for denominators") {
    ParamOperator T = zero_operator(3);
    T.entries[0][0] = parse_expr("a23/a13");
    CHECK_THROWS_AS(T.validate(), ArithmeticError);
    T.side_conditions.push_back(parse_expr("a13"));
    CHECK_NOTHROW(T.validate());
}

TEST_CASE("classification") {
    std::vector<std::vector<Scalar>> zero(3, std::vector<Scalar>(3, Scalar(0)));
    auto z = classify_matrix(zero);
    CHECK_FALSE(z.empty());
    bool has_o1 = false;
    for (const auto& m : z)
        if (m.family == "O1") has_o1 = true;
    CHECK(has_o1);

    // single 1 at cell (2,1)
    auto e21 = zero;
    e21[1][0] = Scalar(1);
    auto r = classify_matrix(e21);
    bool o1_with_a21 = false;
    for (const auto& m : r)
        if (m.family == "O1" && m.assignment.at("a21") == Scalar(1)) o1_with_a21 = true;
    CHECK(o1_with_a21);

    // an O8 instance with the middle row zeroed
    std::vector<std::vector<Scalar>> m8 = {{Scalar(1), Scalar(0), Scalar(1)},
                                           {Scalar(0), Scalar(0), Scalar(0)},
                                           {Scalar(-1), Scalar(0), Scalar(-1)}};
    bool has_o8 = false;
    for (const auto& m : classify_matrix(m8))
        if (m.family == "O8") has_o8 = true;
    CHECK(has_o8);
}

TEST_CASE("classification round trip over the catalogue") {
    for (const auto& fam : catalogue()) {
        for (int t = 0; t < 10; ++t) {
            auto sigma = admissible_assignment(fam);
            auto m = fam.substitute(sigma);
            auto matches = classify_matrix(m);
            bool found = false;
            for (const auto& match : matches)
                if (match.family == fam.name) found = true;
            INFO(fam.name);
            CHECK(found);
        }
    }
}

TEST_CASE("every family parameter has a bare cell (classification precondition)") {
    for (const auto& fam : catalogue())
        for (const auto& p : fam.free_parameters()) {
            bool bare = false;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (fam.entries[i][j] == LaurentPoly::var(p)) bare = true;
            INFO(fam.name, " parameter ", p);
            CHECK(bare);
        }
}

TEST_CASE("grid search") {
    GridResult b0 = grid_completeness_search(0, 1);
    CHECK(b0.enumerated == 1);
    CHECK(b0.solutions == 1);
    CHECK(b0.matched == 1);  // the zero matrix lies in several families
    CHECK(b0.unmatched.empty());

    CHECK_THROWS_AS(grid_completeness_search(-1, 1), ArithmeticError);
    CHECK_THROWS_AS(grid_completeness_search(99, 1), ArithmeticError);
}
