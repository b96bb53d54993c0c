#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "triop/laurent.hpp"
#include "triop/report.hpp"

namespace triop {

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<LaurentPoly>;          // coordinates over a basis
using Mat = std::vector<std::vector<LaurentPoly>>;

Vec zero_vec(int dim);
Vec basis_vec(int dim, int i);  // 1-based
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const LaurentPoly& c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a, const std::vector<std::string>& basis_names);

Mat zero_mat(int rows, int cols);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const LaurentPoly& c, const Mat& a);
Mat mat_neg_transpose(const Mat& a);
bool mat_is_zero(const Mat& a);
Vec mat_apply(const Mat& a, const Vec& v);
std::string mat_str(const Mat& a);

// Finite-dimensional algebra with a trilinear fully skew-symmetric ternary
// bracket, stored as structure constants on ordered triples i<j<k (1-based).
// General index triples are recovered from the permutation sign; repeated
// indices give zero. The fundamental identity is a checkable predicate, not
// an construction invariant.
class TriAlgebra {
public:
    TriAlgebra() = default;
    TriAlgebra(int dim, std::vector<std::string> basis_names)
        : dim_(dim), basis_(std::move(basis_names)) {}

    static TriAlgebra zero(int dim);
    // the 3-dimensional algebra with [e1,e2,e3] = e1
    static TriAlgebra a3();

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const std::map<std::array<int, 3>, Vec>& constants() const { return constants_; }

    void set_constant(int i, int j, int k, Vec coeffs);

    // bracket of basis elements, any index order (1-based)
    Vec bracket_basis(int i, int j, int k) const;
    Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

    std::string product_table() const;

private:
    int dim_ = 0;
    std::vector<std::string> basis_;
    std::map<std::array<int, 3>, Vec> constants_;  // keys i<j<k, 1-based
};

// Empty report iff Eq-style fundamental identity
//   [x1,x2,[x3,x4,x5]] = [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]
// holds for all basis tuples; sufficient by multilinearity. Residuals are
// LHS - RHS. Iterates x1<x2 and x3<x4<x5 (the residual is skew in both
// groups); `dedup = false` walks all dim^5 tuples instead.
CheckReport check_fundamental_identity(const TriAlgebra& A, bool dedup = true);

// Pair-indexed action on a carrier space: rho(e_i,e_j) for i<j, extended
// skew-symmetrically. The representation axioms are a checkable predicate.
class Representation {
public:
    Representation() = default;
    Representation(int algebra_dim, int carrier_dim)
        : algebra_dim_(algebra_dim), carrier_dim_(carrier_dim) {}

    int algebra_dim() const { return algebra_dim_; }
    int carrier_dim() const { return carrier_dim_; }

    void set_action(int i, int j, Mat m);  // i<j, 1-based
    Mat action(int i, int j) const;        // any order
    // bilinear extension rho(x, y) for coordinate vectors on the algebra
    Mat action(const Vec& x, const Vec& y) const;

private:
    int algebra_dim_ = 0;
    int carrier_dim_ = 0;
    std::map<std::array<int, 2>, Mat> action_;
};

// Both representation axioms on all basis 4-tuples (restricted to the index
// ranges their skew symmetries justify).
CheckReport check_representation(const TriAlgebra& A, const Representation& rho);

// ad(x1,x2)x = [x1,x2,x]
Representation adjoint_rep(const TriAlgebra& A);
// ad*(e_i,e_j) = -transpose(ad(e_i,e_j)) on the dual basis
Representation coadjoint_rep(const TriAlgebra& A);

// Semidirect product on A (+) V: bracket [x1+v1,x2+v2,x3+v3] =
// [x1,x2,x3] + rho(x1,x2)v3 + rho(x3,x1)v2 + rho(x2,x3)v1. Carrier basis is
// appended after the algebra basis; requires check_representation to pass.
TriAlgebra semidirect(const TriAlgebra& A, const Representation& rho,
                      const std::vector<std::string>& carrier_names = {});

}  // namespace triop
