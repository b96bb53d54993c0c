#pragma once

#include <map>
#include <string>
#include <vector>

#include "triop/ooperator.hpp"
#include "triop/trialgebra.hpp"

namespace triop {

// Ternary product skew-symmetric in its first two slots (structural: only
// i<j is stored, slot 3 free). The defining axioms are a checkable
// predicate, not a construction invariant.
class PreLieAlgebra {
public:
    PreLieAlgebra() = default;
    PreLieAlgebra(int dim, std::vector<std::string> basis_names)
        : dim_(dim), basis_(std::move(basis_names)) {}
    static PreLieAlgebra zero(int dim);

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const std::map<std::array<int, 3>, Vec>& constants() const { return constants_; }

    void set_constant(int i, int j, int k, Vec coeffs);  // i<j, 1-based
    Vec product_basis(int i, int j, int k) const;        // any i,j order
    Vec product(const Vec& x, const Vec& y, const Vec& z) const;

    std::string product_table() const;

private:
    int dim_ = 0;
    std::vector<std::string> basis_;
    std::map<std::array<int, 3>, Vec> constants_;
};

// Sub-adjacent bracket [x,y,z]^c = {x,y,z} + {y,z,x} + {z,x,y}; fully skew
// by the slot-1-2 skew symmetry of the product.
TriAlgebra sub_adjacent(const PreLieAlgebra& P);

// Empty report iff both defining identities hold on all basis 5-tuples:
//   (I)  {x1,x2,{x3,x4,x5}} = {[x1,x2,x3]^c,x4,x5} + {x3,[x1,x2,x4]^c,x5}
//                             + {x3,x4,{x1,x2,x5}}
//   (II) {[x1,x2,x3]^c,x4,x5} = {x1,x2,{x3,x4,x5}} + {x2,x3,{x1,x4,x5}}
//                             + {x3,x1,{x2,x4,x5}}
// With dedup, (I) runs over x1<x2, x3<x4 and (II) over x1<x2<x3 (both
// residuals are alternating in those slots); dedup=false walks all dim^5
// tuples for both.
CheckReport check_pre_lie_axioms(const PreLieAlgebra& P, bool dedup = true);

// Same pass/fail semantics computed through the expanded structure-constant
// sums; residuals are normalized to match check_pre_lie_axioms exactly.
CheckReport check_pre_lie_by_constants(const PreLieAlgebra& P);

// {x1,x2,x3} = [Tx1,Tx2,x3]; requires T to pass the direct operator check.
PreLieAlgebra induce_from_operator(const TriAlgebra& A, const ParamOperator& T);

// {u,v,w} = rho(Tu,Tv)w on the carrier; requires the general operator check.
PreLieAlgebra induce_from_representation(const TriAlgebra& A, const Representation& rho,
                                         const Mat& T);

// A transcribed reference table. Stored as a plain entry list because the
// published tables contain duplicate keys that a product map cannot hold.
struct TranscribedTable {
    std::string name;
    std::vector<std::pair<std::array<int, 3>, std::string>> entries;  // (i,j,k) -> expr
};

struct TableDiffEntry {
    std::array<int, 3> key;
    std::string computed;                 // canonical polynomial text
    std::vector<std::string> transcribed; // all transcribed values for the key
    bool duplicate_key = false;
};
struct TableDiff {
    std::vector<TableDiffEntry> entries;
    bool empty() const { return entries.empty(); }
};

TableDiff table_diff(const PreLieAlgebra& computed, const PreLieAlgebra& transcribed);
TableDiff table_diff(const PreLieAlgebra& computed, const TranscribedTable& transcribed);

// Reference induced tables for the 31 families, transcribed literally
// (including their known defects).
const std::vector<TranscribedTable>& reference_induced_tables();
const TranscribedTable& reference_induced_table(const std::string& name);

struct Dim2Result {
    std::vector<std::string> constraints;   // distinct nonzero constraint polynomials
    bool trivial_only = false;              // do the constraints force the zero product?
    std::map<std::string, Scalar> witness;  // nonzero witness when not trivial-only
    bool witness_checked = false;           // witness re-verified numerically
};
// Expands both axioms for the generic 2-dimensional product (4 free
// parameters c121_1, c121_2, c122_1, c122_2) and reports the constraint set.
Dim2Result dim2_experiment();

}  // namespace triop
