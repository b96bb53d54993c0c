#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "triop/trialgebra.hpp"

namespace triop {

// Square matrix of Laurent entries, row i = coordinates of T(e_i), together
// with side conditions (each asserted != 0). Every parameter appearing with
// a negative exponent in the entries must be listed as a side condition.
struct ParamOperator {
    int dim = 0;
    Mat entries;
    std::vector<LaurentPoly> side_conditions;
    std::string name;  // optional, e.g. catalogue family name

    // T(v) for a coordinate vector: (Tv)_m = sum_i v_i entries[i][m]
    Vec apply(const Vec& v) const;
    Vec row(int i) const { return entries[i - 1]; }  // 1-based

    std::vector<std::string> free_parameters() const;
    // throws ArithmeticError if a negative-exponent parameter lacks a side condition
    void validate() const;

    // numeric instantiation; enforces side conditions
    std::vector<std::vector<Scalar>> substitute(
        const std::map<std::string, Scalar>& assignment) const;
};

ParamOperator operator_from_scalars(const std::vector<std::vector<Scalar>>& m,
                                    const std::string& name = "");
ParamOperator zero_operator(int dim);
ParamOperator identity_operator(int dim);

// Empty report iff [Tx1,Tx2,Tx3] = T([Tx1,Tx2,x3]+[Tx2,Tx3,x1]+[Tx3,Tx1,x2])
// holds identically for all basis triples i<j<k (sufficient by skew-symmetry
// and trilinearity). Residual per triple is RHS - LHS.
CheckReport check_o_operator_direct(const TriAlgebra& A, const ParamOperator& T);

// Same contract, computed through the expanded structure-constant sums
//   sum_{s,v,t} ( a_it a_js a_kv C_tsv^m - a_iv a_js a_tm C_vsk^t
//                 - a_kv a_is a_tm C_vsj^t - a_js a_kv a_tm C_svi^t )
// (sign-normalized to RHS - LHS so residuals match the direct form exactly).
CheckReport check_o_operator_expanded(const TriAlgebra& A, const ParamOperator& T);

// General-representation condition, Eq-style:
//   [Tu1,Tu2,Tu3] = T(rho(Tu1,Tu2)u3 + rho(Tu2,Tu3)u1 + rho(Tu3,Tu1)u2)
// with T mapping the carrier into A (rows = images of carrier basis vectors).
CheckReport check_o_operator_general(const TriAlgebra& A, const Representation& rho,
                                     const Mat& T);

// The three cubic polynomial conditions for a 3x3 operator on the algebra
// [e1,e2,e3] = e1, as frozen reference polynomials composed at T's entries.
// All three vanish identically iff the direct check passes.
std::array<LaurentPoly, 3> specialized_conditions_3d(const ParamOperator& T);
std::array<LaurentPoly, 3> specialized_conditions_generic();
// fast numeric evaluation at a scalar matrix
std::array<Scalar, 3> specialized_conditions_at(const std::vector<std::vector<Scalar>>& m);

// The reference catalogue of the 31 operator families O1..O31.
const std::vector<ParamOperator>& catalogue();
const ParamOperator& catalogue_family(const std::string& name);

struct FamilyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};
// Symbolic forward verification of every family (parameters left free).
// Side conditions are not consulted: the identities hold in the Laurent ring
// localized at the side-condition monomials.
std::vector<FamilyResult> verify_catalogue(const TriAlgebra& A,
                                           const std::vector<ParamOperator>& families,
                                           int jobs = 1, std::vector<std::string>* warnings = nullptr);

struct FamilyMatch {
    std::string family;
    std::map<std::string, Scalar> assignment;
};
// Every family admitting a parameter assignment that reproduces M exactly
// with its side conditions satisfied. Parameters are read off cells whose
// family entry is a bare parameter, then all cells are checked by
// substitution. Returns an empty list when nothing matches.
std::vector<FamilyMatch> classify_matrix(const std::vector<std::vector<Scalar>>& m);

struct GridResult {
    long long enumerated = 0;
    long long solutions = 0;
    long long matched = 0;
    std::vector<std::array<long, 9>> unmatched;  // row-major entries
};
// Enumerates all (2B+1)^9 integer matrices with entries in [-B, B], filters
// by the three cubic conditions (exactly), classifies every survivor.
GridResult grid_completeness_search(long bound, int jobs = 1);

}  // namespace triop
