#include "triop/cybe.hpp"

#include "triop/parallel.hpp"
#include "triop/parse.hpp"

namespace triop {

bool TwoTensor::is_skew_symmetric() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= i; ++j)
            if (!(coeffs[i][j] + coeffs[j][i]).is_zero()) return false;
    return true;
}

bool TwoTensor::is_zero() const { return mat_is_zero(coeffs); }

std::string TwoTensor::str(const std::vector<std::string>& basis_names) const {
    std::string out;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (coeffs[i][j].is_zero()) continue;
            std::string body = "(" + coeffs[i][j].str() + ")*" + basis_names[i] + "(x)" +
                               basis_names[j];
            out += (out.empty() ? "" : " + ") + body;
        }
    return out.empty() ? "0" : out;
}

FourTensor FourTensor::zero(int dim) {
    FourTensor t;
    t.dim = dim;
    t.coeffs.assign(static_cast<std::size_t>(dim) * dim * dim * dim, LaurentPoly());
    return t;
}

LaurentPoly& FourTensor::at(int i, int j, int k, int l) {
    return coeffs[((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l];
}

const LaurentPoly& FourTensor::at(int i, int j, int k, int l) const {
    return coeffs[((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l];
}

bool FourTensor::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

long long FourTensor::nonzero_count() const {
    long long n = 0;
    for (const auto& c : coeffs)
        if (!c.is_zero()) ++n;
    return n;
}

std::string FourTensor::nonzero_summary(const std::vector<std::string>& basis_names,
                                        std::size_t max_items) const {
    std::string out;
    std::size_t shown = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    const LaurentPoly& c = at(i, j, k, l);
                    if (c.is_zero()) continue;
                    if (shown++ == max_items) return out + "; ...";
                    out += (out.empty() ? "" : "; ") + basis_names[i] + "(x)" + basis_names[j] +
                           "(x)" + basis_names[k] + "(x)" + basis_names[l] + ": " + c.str();
                }
    return out.empty() ? "0" : out;
}

TwoTensor switch12(const TwoTensor& r) {
    TwoTensor out = TwoTensor::zero(r.dim);
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j) out.coeffs[i][j] = r.coeffs[j][i];
    return out;
}

TwoTensor tensor_from_operator(const TriAlgebra& semidirect_algebra, const ParamOperator& T) {
    int n = T.dim;
    if (semidirect_algebra.dim() != 2 * n)
        throw DimensionError(
            "tensor construction expects a semidirect product of twice the operator dimension");
    TwoTensor r = TwoTensor::zero(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (T.entries[i][j].is_zero()) continue;
            r.coeffs[n + i][j] += T.entries[i][j];
            r.coeffs[j][n + i] -= T.entries[i][j];
        }
    return r;
}

FourTensor yang_baxter_bracket(const TriAlgebra& A, const TwoTensor& r) {
    int n = A.dim();
    if (r.dim != n) throw DimensionError("tensor dimension does not match the algebra");
    struct Slot {
        int x, y;
        const LaurentPoly* c;
    };
    std::vector<Slot> slots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!r.coeffs[i][j].is_zero()) slots.push_back({i, j, &r.coeffs[i][j]});

    FourTensor out = FourTensor::zero(n);
    for (const Slot& s1 : slots)
        for (const Slot& s2 : slots) {
            LaurentPoly c12 = (*s1.c) * (*s2.c);
            for (const Slot& s3 : slots) {
                LaurentPoly c = c12 * (*s3.c);
                Vec b = A.bracket_basis(s1.x + 1, s2.x + 1, s3.x + 1);
                for (int t = 0; t < n; ++t)
                    if (!b[t].is_zero()) out.at(t, s1.y, s2.y, s3.y) += c * b[t];
                b = A.bracket_basis(s1.y + 1, s2.x + 1, s3.x + 1);
                for (int t = 0; t < n; ++t)
                    if (!b[t].is_zero()) out.at(s1.x, t, s2.y, s3.y) += c * b[t];
                b = A.bracket_basis(s1.y + 1, s2.y + 1, s3.x + 1);
                for (int t = 0; t < n; ++t)
                    if (!b[t].is_zero()) out.at(s1.x, s2.x, t, s3.y) += c * b[t];
                b = A.bracket_basis(s1.y + 1, s2.y + 1, s3.y + 1);
                for (int t = 0; t < n; ++t)
                    if (!b[t].is_zero()) out.at(s1.x, s2.x, s3.x, t) += c * b[t];
            }
        }
    return out;
}

TwoTensor fixture_tensor(const TensorFixture& fx) {
    TwoTensor r = TwoTensor::zero(6);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) {
            LaurentPoly c = parse_expr(fx.rows[k][j]);
            if (c.is_zero()) continue;
            r.coeffs[3 + k][j] += c;
            r.coeffs[j][3 + k] -= c;
        }
    return r;
}

namespace {
const TriAlgebra& cybe_carrier() {
    static const TriAlgebra sd = semidirect(TriAlgebra::a3(), coadjoint_rep(TriAlgebra::a3()),
                                            {"e1*", "e2*", "e3*"});
    return sd;
}

const TensorFixture& fixture_for(const std::string& operator_name) {
    std::string want = "r" + operator_name.substr(1);
    for (const auto& fx : reference_solution_tensors())
        if (fx.name == want) return fx;
    throw ArithmeticError("no reference tensor named '" + want + "'");
}

CybeSolutionResult verify_one(const ParamOperator& fam) {
    const TriAlgebra& sd = cybe_carrier();
    CybeSolutionResult res;
    res.name = "r" + fam.name.substr(1);
    TwoTensor r = tensor_from_operator(sd, fam);
    res.skew = r.is_skew_symmetric();

    TwoTensor ref = fixture_tensor(fixture_for(fam.name));
    res.matches_fixture = (r.coeffs == ref.coeffs);

    FourTensor br = yang_baxter_bracket(sd, r);
    res.bracket_zero = br.is_zero();

    if (!res.pass()) {
        res.detail = std::string(res.skew ? "" : "not skew-symmetric; ") +
                     (res.matches_fixture ? "" : "differs from reference tensor; ") +
                     (res.bracket_zero
                          ? ""
                          : "bracket nonzero: " + br.nonzero_summary(sd.basis_names()));
    }
    return res;
}
}  // namespace

std::vector<CybeSolutionResult> verify_cybe_catalogue(int jobs) {
    const auto& fams = catalogue();
    auto chunks = parallel_chunks<std::vector<CybeSolutionResult>>(
        static_cast<long long>(fams.size()), jobs, [&](long long begin, long long end) {
            std::vector<CybeSolutionResult> out;
            for (long long i = begin; i < end; ++i) out.push_back(verify_one(fams[i]));
            return out;
        });
    std::vector<CybeSolutionResult> results;
    for (auto& c : chunks) results.insert(results.end(), c.begin(), c.end());
    return results;
}

CybeSolutionResult verify_cybe_solution(const std::string& family_name) {
    std::string op_name = family_name;
    if (!op_name.empty() && (op_name[0] == 'r' || op_name[0] == 'R'))
        op_name = "O" + op_name.substr(1);
    return verify_one(catalogue_family(op_name));
}

}  // namespace triop
