#include <doctest.h>

#include "test_util.hpp"

using namespace triop;
using namespace triop_test;

namespace {
RawConstants raw_constants(const TriAlgebra& A) {
    RawConstants out;
    for (const auto& [k, v] : A.constants()) out[k] = v;
    return out;
}

// the passing dim-4 fixture: [e1,e2,e3]=e4, [e1,e2,e4]=e3
TriAlgebra dim4_pass() {
    TriAlgebra A = TriAlgebra::zero(4);
    A.set_constant(1, 2, 3, {LaurentPoly(0), LaurentPoly(0), LaurentPoly(0), LaurentPoly(1)});
    A.set_constant(1, 2, 4, {LaurentPoly(0), LaurentPoly(0), LaurentPoly(1), LaurentPoly(0)});
    return A;
}

// a failing one: [e1,e2,e3]=e1, [e1,e2,e4]=e2
TriAlgebra dim4_fail() {
    TriAlgebra A = TriAlgebra::zero(4);
    A.set_constant(1, 2, 3, {LaurentPoly(1), LaurentPoly(0), LaurentPoly(0), LaurentPoly(0)});
    A.set_constant(1, 2, 4, {LaurentPoly(0), LaurentPoly(1), LaurentPoly(0), LaurentPoly(0)});
    return A;
}
}  // namespace

TEST_CASE("bracket on the 3-dimensional algebra") {
    TriAlgebra A = TriAlgebra::a3();
    Vec e1 = basis_vec(3, 1), e2 = basis_vec(3, 2), e3 = basis_vec(3, 3);
    CHECK(A.bracket(e1, e2, e3) == e1);
    CHECK(vec_is_zero(A.bracket(e1, e1, e3)));
    CHECK(A.bracket(e2, e1, e3) == vec_scale(LaurentPoly(-1), e1));
    CHECK_THROWS_AS(A.bracket(e1, e2, basis_vec(4, 1)), DimensionError);
}

TEST_CASE("bracket is fully skew on random vectors") {
    TriAlgebra A = rand_tri_algebra(4);
    for (int t = 0; t < 30; ++t) {
        Vec x = rand_vec(4), y = rand_vec(4), z = rand_vec(4);
        Vec b = A.bracket(x, y, z);
        CHECK(A.bracket(y, x, z) == vec_scale(LaurentPoly(-1), b));
        CHECK(A.bracket(z, x, y) == b);  // even permutation
        CHECK(A.bracket(x, z, y) == vec_scale(LaurentPoly(-1), b));
        CHECK(vec_is_zero(A.bracket(x, x, z)));
    }
}

TEST_CASE("fundamental identity check") {
    CHECK(check_fundamental_identity(TriAlgebra::a3()).pass());
    CHECK(check_fundamental_identity(TriAlgebra::zero(5)).pass());

    // frozen from the independent termwise oracle
    TriAlgebra pass4 = dim4_pass();
    CHECK(oracle_fi_holds(raw_constants(pass4), 4));
    CHECK(check_fundamental_identity(pass4).pass());

    TriAlgebra fail4 = dim4_fail();
    CHECK_FALSE(oracle_fi_holds(raw_constants(fail4), 4));
    CheckReport rep = check_fundamental_identity(fail4);
    CHECK_FALSE(rep.pass());
    // the oracle pinpoints a violation at (1,3),(1,2,4)
    Vec res = oracle_fi_residual(raw_constants(fail4), 4, 1, 3, 1, 2, 4);
    CHECK_FALSE(vec_is_zero(res));
}

TEST_CASE("deduplicated and full FI loops agree (dims 2..4)") {
    for (int dim = 2; dim <= 4; ++dim)
        for (int t = 0; t < 8; ++t) {
            TriAlgebra A = rand_tri_algebra(dim);
            CHECK(check_fundamental_identity(A, true).pass() ==
                  check_fundamental_identity(A, false).pass());
        }
    CHECK(check_fundamental_identity(dim4_pass(), false).pass());
    CHECK_FALSE(check_fundamental_identity(dim4_fail(), false).pass());
}

TEST_CASE("basis-tuple FI check matches random-vector instances") {
    // multilinearity spot check, >= 100 random 5-tuples
    TriAlgebra good = TriAlgebra::a3();
    for (int t = 0; t < 100; ++t) {
        Vec x1 = rand_vec(3), x2 = rand_vec(3), x3 = rand_vec(3), x4 = rand_vec(3),
            x5 = rand_vec(3);
        Vec lhs = good.bracket(x1, x2, good.bracket(x3, x4, x5));
        Vec r = vec_sub(lhs, good.bracket(good.bracket(x1, x2, x3), x4, x5));
        r = vec_sub(r, good.bracket(x3, good.bracket(x1, x2, x4), x5));
        r = vec_sub(r, good.bracket(x3, x4, good.bracket(x1, x2, x5)));
        CHECK(vec_is_zero(r));
    }
    // a violating algebra must show a nonzero residual on generic vectors
    TriAlgebra bad = dim4_fail();
    bool found = false;
    for (int t = 0; t < 100 && !found; ++t) {
        Vec x1 = rand_vec(4), x2 = rand_vec(4), x3 = rand_vec(4), x4 = rand_vec(4),
            x5 = rand_vec(4);
        Vec lhs = bad.bracket(x1, x2, bad.bracket(x3, x4, x5));
        Vec r = vec_sub(lhs, bad.bracket(bad.bracket(x1, x2, x3), x4, x5));
        r = vec_sub(r, bad.bracket(x3, bad.bracket(x1, x2, x4), x5));
        r = vec_sub(r, bad.bracket(x3, x4, bad.bracket(x1, x2, x5)));
        if (!vec_is_zero(r)) found = true;
    }
    CHECK(found);
}

TEST_CASE("adjoint representation of the 3-dimensional algebra") {
    TriAlgebra A = TriAlgebra::a3();
    Representation ad = adjoint_rep(A);
    // ad(e1,e2): e3 -> e1 is the only nonzero column
    Mat m12 = ad.action(1, 2);
    CHECK(m12[0][2] == LaurentPoly(1));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (!(r == 0 && c == 2)) CHECK(m12[r][c].is_zero());
    // ad(e2,e3): e1 -> e1
    Mat m23 = ad.action(2, 3);
    CHECK(m23[0][0] == LaurentPoly(1));
    // zero algebra -> zero action
    Representation adz = adjoint_rep(TriAlgebra::zero(3));
    CHECK(mat_is_zero(adz.action(1, 2)));
    CHECK(check_representation(A, ad).pass());
}

TEST_CASE("coadjoint representation and duality") {
    TriAlgebra A = TriAlgebra::a3();
    Representation co = coadjoint_rep(A);
    // ad*(e1,e2) e1* = -e3*
    Mat m12 = co.action(1, 2);
    CHECK(m12[2][0] == LaurentPoly(-1));
    // ad*(e2,e3) e1* = -e1*
    Mat m23 = co.action(2, 3);
    CHECK(m23[0][0] == LaurentPoly(-1));
    CHECK(check_representation(A, co).pass());
    CHECK(mat_is_zero(coadjoint_rep(TriAlgebra::zero(3)).action(1, 3)));

    // <ad*(ei,ej) alpha, v> + <alpha, ad(ei,ej) v> = 0 for all basis pairs
    Representation ad = adjoint_rep(A);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            Mat star = co.action(i, j), plain = ad.action(i, j);
            for (int alpha = 0; alpha < 3; ++alpha)
                for (int v = 0; v < 3; ++v) {
                    // <ad* alpha, v> = star[v][alpha], <alpha, ad v> = plain[alpha][v]
                    CHECK((star[v][alpha] + plain[alpha][v]).is_zero());
                }
        }
}

TEST_CASE("zero representation passes trivially") {
    TriAlgebra A = TriAlgebra::zero(3);
    Representation rho(3, 2);
    CHECK(check_representation(A, rho).pass());
}

TEST_CASE("semidirect products") {
    TriAlgebra A = TriAlgebra::a3();

    SUBCASE("coadjoint gives exactly the four published products") {
        TriAlgebra S = semidirect(A, coadjoint_rep(A), {"e1*", "e2*", "e3*"});
        CHECK(S.dim() == 6);
        CHECK(S.constants().size() == 4);
        Vec e1 = basis_vec(6, 1);
        CHECK(S.bracket_basis(1, 2, 3) == e1);
        Vec me3s(6);
        me3s[5] = LaurentPoly(-1);
        CHECK(S.bracket_basis(1, 2, 4) == me3s);
        Vec e2s(6);
        e2s[4] = LaurentPoly(1);
        CHECK(S.bracket_basis(1, 3, 4) == e2s);
        Vec me1s(6);
        me1s[3] = LaurentPoly(-1);
        CHECK(S.bracket_basis(2, 3, 4) == me1s);
        CHECK(check_fundamental_identity(S).pass());
    }

    SUBCASE("zero representation appends a trivial line") {
        Representation rho(3, 1);
        TriAlgebra S = semidirect(A, rho);
        CHECK(S.dim() == 4);
        CHECK(S.constants().size() == 1);  // only [e1,e2,e3] = e1 survives
        CHECK(check_fundamental_identity(S).pass());
    }

    SUBCASE("zero algebra with zero representation") {
        TriAlgebra S = semidirect(TriAlgebra::zero(2), Representation(2, 2));
        CHECK(S.dim() == 4);
        CHECK(S.constants().empty());
    }

    SUBCASE("adjoint works too") {
        TriAlgebra S = semidirect(A, adjoint_rep(A));
        CHECK(check_fundamental_identity(S).pass());
    }

    SUBCASE("random single-line algebras: semidirect preserves the identity") {
        // dim-3 algebras with one bracket line always satisfy the identity
        for (int t = 0; t < 5; ++t) {
            TriAlgebra B = TriAlgebra::zero(3);
            Vec v = rand_vec(3);
            if (vec_is_zero(v)) continue;
            B.set_constant(1, 2, 3, v);
            REQUIRE(check_fundamental_identity(B).pass());
            Representation co = coadjoint_rep(B);
            if (!check_representation(B, co).pass()) continue;
            CHECK(check_fundamental_identity(semidirect(B, co)).pass());
        }
    }

    SUBCASE("invalid representation is rejected") {
        Representation rho(3, 3);
        Mat m = zero_mat(3, 3);
        m[0][0] = LaurentPoly(1);
        rho.set_action(1, 2, m);  // not a representation of A3
        CHECK_FALSE(check_representation(A, rho).pass());
        CHECK_THROWS_AS(semidirect(A, rho), DimensionError);
    }
}
