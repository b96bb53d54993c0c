#include "triop/ooperator.hpp"

#include <algorithm>

#include "triop/parallel.hpp"
#include "triop/parse.hpp"

namespace triop {

Vec ParamOperator::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim)
        throw DimensionError("operator applied to a vector of the wrong dimension");
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (v[i].is_zero()) continue;
        for (int m = 0; m < dim; ++m)
            if (!entries[i][m].is_zero()) out[m] += v[i] * entries[i][m];
    }
    return out;
}

std::vector<std::string> ParamOperator::free_parameters() const {
    std::set<std::string> vars;
    for (const auto& row : entries)
        for (const auto& p : row)
            for (const auto& v : p.variables()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

void ParamOperator::validate() const {
    std::set<std::string> needed;
    for (const auto& row : entries)
        for (const auto& p : row)
            for (const auto& v : p.negative_exponent_variables()) needed.insert(v);
    for (const auto& v : needed) {
        bool found = false;
        for (const auto& sc : side_conditions)
            if (sc == LaurentPoly::var(v)) found = true;
        if (!found)
            throw ArithmeticError("parameter '" + v +
                                  "' occurs with a negative exponent but is not listed as a "
                                  "side condition");
    }
}

std::vector<std::vector<Scalar>> ParamOperator::substitute(
    const std::map<std::string, Scalar>& assignment) const {
    for (const auto& sc : side_conditions) {
        if (sc.substitute(assignment).is_zero())
            throw ArithmeticError("side condition violated: " + sc.str() + " = 0");
    }
    std::vector<std::vector<Scalar>> out(dim, std::vector<Scalar>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out[i][j] = entries[i][j].substitute(assignment);
    return out;
}

ParamOperator operator_from_scalars(const std::vector<std::vector<Scalar>>& m,
                                    const std::string& name) {
    ParamOperator T;
    T.dim = static_cast<int>(m.size());
    T.name = name;
    T.entries = zero_mat(T.dim, T.dim);
    for (int i = 0; i < T.dim; ++i)
        for (int j = 0; j < T.dim; ++j) T.entries[i][j] = LaurentPoly(m[i][j]);
    return T;
}

ParamOperator zero_operator(int dim) {
    ParamOperator T;
    T.dim = dim;
    T.name = "zero";
    T.entries = zero_mat(dim, dim);
    return T;
}

ParamOperator identity_operator(int dim) {
    ParamOperator T = zero_operator(dim);
    T.name = "identity";
    for (int i = 0; i < dim; ++i) T.entries[i][i] = LaurentPoly(1);
    return T;
}

CheckReport check_o_operator_direct(const TriAlgebra& A, const ParamOperator& T) {
    if (T.dim != A.dim())
        throw DimensionError("operator dimension does not match the algebra");
    CheckReport rep;
    int n = A.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Vec Ti = T.row(i), Tj = T.row(j), Tk = T.row(k);
                Vec lhs = A.bracket(Ti, Tj, Tk);
                Vec inner = A.bracket(Ti, Tj, basis_vec(n, k));
                inner = vec_add(inner, A.bracket(Tj, Tk, basis_vec(n, i)));
                inner = vec_add(inner, A.bracket(Tk, Ti, basis_vec(n, j)));
                Vec res = vec_sub(T.apply(inner), lhs);
                if (!vec_is_zero(res))
                    rep.add({i, j, k}, "o-operator", vec_str(res, A.basis_names()));
            }
    return rep;
}

CheckReport check_o_operator_expanded(const TriAlgebra& A, const ParamOperator& T) {
    if (T.dim != A.dim())
        throw DimensionError("operator dimension does not match the algebra");
    CheckReport rep;
    int n = A.dim();
    auto a = [&](int r, int c) -> const LaurentPoly& { return T.entries[r - 1][c - 1]; };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Vec res(n);
                for (int s = 1; s <= n; ++s)
                    for (int v = 1; v <= n; ++v)
                        for (int t = 1; t <= n; ++t) {
                            Vec c_tsv = A.bracket_basis(t, s, v);
                            Vec c_vsk = A.bracket_basis(v, s, k);
                            Vec c_vsj = A.bracket_basis(v, s, j);
                            Vec c_svi = A.bracket_basis(s, v, i);
                            for (int m = 1; m <= n; ++m) {
                                LaurentPoly acc;
                                if (!c_tsv[m - 1].is_zero())
                                    acc += a(i, t) * a(j, s) * a(k, v) * c_tsv[m - 1];
                                if (!c_vsk[t - 1].is_zero())
                                    acc -= a(i, v) * a(j, s) * a(t, m) * c_vsk[t - 1];
                                if (!c_vsj[t - 1].is_zero())
                                    acc -= a(k, v) * a(i, s) * a(t, m) * c_vsj[t - 1];
                                if (!c_svi[t - 1].is_zero())
                                    acc -= a(j, s) * a(k, v) * a(t, m) * c_svi[t - 1];
                                // the sum above is LHS - RHS; report RHS - LHS to
                                // match the direct form
                                res[m - 1] -= acc;
                            }
                        }
                if (!vec_is_zero(res))
                    rep.add({i, j, k}, "o-operator-expanded", vec_str(res, A.basis_names()));
            }
    return rep;
}

CheckReport check_o_operator_general(const TriAlgebra& A, const Representation& rho,
                                     const Mat& T) {
    int m = static_cast<int>(T.size());
    if (m != rho.carrier_dim() || static_cast<int>(T[0].size()) != A.dim())
        throw DimensionError("operator shape does not match carrier and algebra dimensions");
    CheckReport rep;
    auto img = [&](int i) { return T[i - 1]; };
    auto t_apply = [&](const Vec& w) {
        Vec out(A.dim());
        for (int i = 0; i < m; ++i)
            if (!w[i].is_zero())
                for (int c = 0; c < A.dim(); ++c)
                    if (!T[i][c].is_zero()) out[c] += w[i] * T[i][c];
        return out;
    };
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k) {
                Vec lhs = A.bracket(img(i), img(j), img(k));
                Vec inner = mat_apply(rho.action(img(i), img(j)), basis_vec(m, k));
                inner = vec_add(inner, mat_apply(rho.action(img(j), img(k)), basis_vec(m, i)));
                inner = vec_add(inner, mat_apply(rho.action(img(k), img(i)), basis_vec(m, j)));
                Vec res = vec_sub(t_apply(inner), lhs);
                if (!vec_is_zero(res))
                    rep.add({i, j, k}, "o-operator-general", vec_str(res, A.basis_names()));
            }
    return rep;
}

namespace {
// frozen reference conditions for [e1,e2,e3] = e1
const char* kCond1 =
    "a12*(a11*a21 - a21*a33 + a23*a31) + a13*(a21*a32 + a11*a31 - a22*a31) "
    "- a11^2*(a22 + a33)";
const char* kCond2 = "a12*(a11*a22 - a12*a21 - a31*a13 + a33*a11 + a22*a33 - a23*a32)";
const char* kCond3 = "a13*(a11*a22 - a12*a21 - a13*a31 + a33*a11 + a22*a33 - a23*a32)";

const std::array<LaurentPoly, 3>& generic_conditions() {
    static const std::array<LaurentPoly, 3> conds = {
        parse_expr(kCond1), parse_expr(kCond2), parse_expr(kCond3)};
    return conds;
}

std::string cell_name(int i, int j) { return "a" + std::to_string(i) + std::to_string(j); }
}  // namespace

std::array<LaurentPoly, 3> specialized_conditions_generic() { return generic_conditions(); }

std::array<LaurentPoly, 3> specialized_conditions_3d(const ParamOperator& T) {
    if (T.dim != 3) throw DimensionError("specialized conditions require a 3x3 operator");
    std::map<std::string, LaurentPoly> images;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) images[cell_name(i, j)] = T.entries[i - 1][j - 1];
    const auto& conds = generic_conditions();
    return {conds[0].compose(images), conds[1].compose(images), conds[2].compose(images)};
}

std::array<Scalar, 3> specialized_conditions_at(const std::vector<std::vector<Scalar>>& m) {
    if (m.size() != 3) throw DimensionError("specialized conditions require a 3x3 matrix");
    std::map<std::string, Scalar> assignment;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) assignment[cell_name(i, j)] = m[i - 1][j - 1];
    const auto& conds = generic_conditions();
    return {conds[0].substitute(assignment), conds[1].substitute(assignment),
            conds[2].substitute(assignment)};
}

std::vector<FamilyResult> verify_catalogue(const TriAlgebra& A,
                                           const std::vector<ParamOperator>& families,
                                           int jobs, std::vector<std::string>* warnings) {
    if (families.empty() && warnings)
        warnings->push_back("catalogue is empty: verification is vacuous");
    auto chunks = parallel_chunks<std::vector<FamilyResult>>(
        static_cast<long long>(families.size()), jobs,
        [&](long long begin, long long end) {
            std::vector<FamilyResult> out;
            for (long long idx = begin; idx < end; ++idx) {
                const ParamOperator& fam = families[idx];
                CheckReport rep = check_o_operator_direct(A, fam);
                out.push_back({fam.name, rep.pass(), rep.summary()});
            }
            return out;
        });
    std::vector<FamilyResult> results;
    for (auto& c : chunks) results.insert(results.end(), c.begin(), c.end());
    return results;
}

std::vector<FamilyMatch> classify_matrix(const std::vector<std::vector<Scalar>>& m) {
    std::vector<FamilyMatch> matches;
    for (const ParamOperator& fam : catalogue()) {
        std::map<std::string, Scalar> assignment;
        bool viable = true;
        for (const auto& p : fam.free_parameters()) {
            LaurentPoly bare = LaurentPoly::var(p);
            bool found = false;
            for (int i = 0; i < 3 && !found; ++i)
                for (int j = 0; j < 3 && !found; ++j)
                    if (fam.entries[i][j] == bare) {
                        assignment[p] = m[i][j];
                        found = true;
                    }
            if (!found) {
                viable = false;  // no forced cell for this parameter
                break;
            }
        }
        if (!viable) continue;
        for (const auto& sc : fam.side_conditions)
            if (sc.substitute(assignment).is_zero()) {
                viable = false;
                break;
            }
        if (!viable) continue;
        for (int i = 0; i < 3 && viable; ++i)
            for (int j = 0; j < 3 && viable; ++j) {
                try {
                    if (fam.entries[i][j].substitute(assignment) != m[i][j]) viable = false;
                } catch (const ArithmeticError&) {
                    viable = false;
                }
            }
        if (viable) matches.push_back({fam.name, assignment});
    }
    return matches;
}

namespace {
// evaluator for the three conditions with variable lookups resolved to
// matrix cells once, used by the grid filter
struct CompiledConditions {
    struct Term {
        Scalar coeff;
        std::vector<std::pair<int, long>> powers;  // (cell index 0..8, exponent > 0)
    };
    std::array<std::vector<Term>, 3> conds;

    CompiledConditions() {
        const auto& polys = generic_conditions();
        for (int c = 0; c < 3; ++c) {
            for (const auto& [mono, coeff] : polys[c].terms()) {
                Term t;
                t.coeff = coeff;
                for (const auto& [v, e] : mono.exponents()) {
                    int i = v[1] - '1', j = v[2] - '1';
                    t.powers.push_back({i * 3 + j, e});
                }
                conds[c].push_back(std::move(t));
            }
        }
    }

    bool vanish_at(const std::array<Scalar, 9>& cells) const {
        for (const auto& cond : conds) {
            Scalar acc(0);
            for (const auto& t : cond) {
                Scalar term = t.coeff;
                for (const auto& [idx, e] : t.powers) term = term * scalar_pow(cells[idx], e);
                acc += term;
            }
            if (!acc.is_zero()) return false;
        }
        return true;
    }
};
}  // namespace

GridResult grid_completeness_search(long bound, int jobs) {
    if (bound < 0 || bound > 4)
        throw ArithmeticError("grid search bound must be in [0, 4] (desk scale)");
    long width = 2 * bound + 1;
    long long total = 1;
    for (int i = 0; i < 9; ++i) total *= width;
    static const CompiledConditions compiled;

    auto chunks = parallel_chunks<GridResult>(total, jobs, [&](long long begin, long long end) {
        GridResult local;
        std::array<long, 9> digits{};
        long long rem = begin;
        for (int i = 8; i >= 0; --i) {
            digits[i] = static_cast<long>(rem % width);
            rem /= width;
        }
        for (long long idx = begin; idx < end; ++idx) {
            std::array<Scalar, 9> cells;
            std::array<long, 9> entries;
            for (int i = 0; i < 9; ++i) {
                entries[i] = digits[i] - bound;
                cells[i] = Scalar(entries[i]);
            }
            if (compiled.vanish_at(cells)) {
                ++local.solutions;
                std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3));
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) m[i][j] = cells[i * 3 + j];
                if (!classify_matrix(m).empty())
                    ++local.matched;
                else
                    local.unmatched.push_back(entries);
            }
            // odometer step
            for (int i = 8; i >= 0; --i) {
                if (++digits[i] < width) break;
                digits[i] = 0;
            }
        }
        local.enumerated = end - begin;
        return local;
    });

    GridResult out;
    for (const auto& c : chunks) {
        out.enumerated += c.enumerated;
        out.solutions += c.solutions;
        out.matched += c.matched;
        out.unmatched.insert(out.unmatched.end(), c.unmatched.begin(), c.unmatched.end());
    }
    return out;
}

}  // namespace triop
