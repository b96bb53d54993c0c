#pragma once

#include <string>
#include <vector>

#include "triop/ooperator.hpp"
#include "triop/trialgebra.hpp"

namespace triop {

// Element of A (x) A as a dense coefficient matrix over the basis,
// coeffs[i][j] = coefficient of e_{i+1} (x) e_{j+1}.
struct TwoTensor {
    int dim = 0;
    Mat coeffs;

    static TwoTensor zero(int dim) { return {dim, zero_mat(dim, dim)}; }
    bool is_skew_symmetric() const;
    bool is_zero() const;
    std::string str(const std::vector<std::string>& basis_names) const;
};

// Element of A^(x)4 as a dense dim^4 array (index ((i*dim+j)*dim+k)*dim+l).
struct FourTensor {
    int dim = 0;
    std::vector<LaurentPoly> coeffs;

    static FourTensor zero(int dim);
    LaurentPoly& at(int i, int j, int k, int l);
    const LaurentPoly& at(int i, int j, int k, int l) const;
    bool is_zero() const;
    long long nonzero_count() const;
    std::string nonzero_summary(const std::vector<std::string>& basis_names,
                                std::size_t max_items = 6) const;
};

TwoTensor switch12(const TwoTensor& r);

// r = sum_i e_i* (x) Te_i  -  sum_i Te_i (x) e_i* on a semidirect product
// A0 (+) A0* whose dual basis is appended after the A0 basis (so e_i* is
// basis index dim0 + i). Skew-symmetric by construction.
TwoTensor tensor_from_operator(const TriAlgebra& semidirect_algebra, const ParamOperator& T);

// The four-term bracket
//   [[r,r,r]] = sum ( [x_i,x_j,x_k] (x) y_i (x) y_j (x) y_k
//               + x_i (x) [y_i,x_j,x_k] (x) y_j (x) y_k
//               + x_i (x) x_j (x) [y_i,y_j,x_k] (x) y_k
//               + x_i (x) x_j (x) x_k (x) [y_i,y_j,y_k] )
// computed over the canonical basis expansion of r.
FourTensor yang_baxter_bracket(const TriAlgebra& A, const TwoTensor& r);

// Reference tensors r1..r31 as operator-row fixtures (coefficients of
// e1,e2,e3 in the e_k*-row of r_k, k = 1..3).
struct TensorFixture {
    std::string name;          // r1..r31
    std::string rows[3][3];    // rows[k][j]: coefficient of e_{j+1} in the e_{k+1}* row
};
const std::vector<TensorFixture>& reference_solution_tensors();
TwoTensor fixture_tensor(const TensorFixture& fx);

struct CybeSolutionResult {
    std::string name;
    bool skew = false;
    bool matches_fixture = false;
    bool bracket_zero = false;
    std::string detail;
    bool pass() const { return skew && matches_fixture && bracket_zero; }
};

// For every catalogue family: build r_i on A3 (x) A3*, assert skew-symmetry,
// compare against the reference tensor, and verify [[r_i,r_i,r_i]] = 0
// symbolically in the Laurent ring.
std::vector<CybeSolutionResult> verify_cybe_catalogue(int jobs = 1);
CybeSolutionResult verify_cybe_solution(const std::string& family_name);

}  // namespace triop
