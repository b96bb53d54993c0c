#include "triop/prelie.hpp"

#include <algorithm>

#include "triop/parse.hpp"

namespace triop {

PreLieAlgebra PreLieAlgebra::zero(int dim) {
    std::vector<std::string> names;
    for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
    return PreLieAlgebra(dim, names);
}

void PreLieAlgebra::set_constant(int i, int j, int k, Vec coeffs) {
    if (!(1 <= i && i < j && j <= dim_ && 1 <= k && k <= dim_))
        throw DimensionError("product constant indices must satisfy 1 <= i < j <= dim, 1 <= k <= dim");
    if (static_cast<int>(coeffs.size()) != dim_)
        throw DimensionError("product constant coefficient vector has wrong length");
    if (vec_is_zero(coeffs))
        constants_.erase({i, j, k});
    else
        constants_[{i, j, k}] = std::move(coeffs);
}

Vec PreLieAlgebra::product_basis(int i, int j, int k) const {
    if (i == j) return zero_vec(dim_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = constants_.find({i, j, k});
    if (it == constants_.end()) return zero_vec(dim_);
    if (!flip) return it->second;
    Vec out = it->second;
    for (auto& c : out) c = -c;
    return out;
}

Vec PreLieAlgebra::product(const Vec& x, const Vec& y, const Vec& z) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_ ||
        static_cast<int>(z.size()) != dim_)
        throw DimensionError("product arguments do not match the algebra dimension");
    Vec out(dim_);
    for (const auto& [key, coeffs] : constants_) {
        auto [i, j, k] = key;
        // skew pair (i,j), free slot k
        LaurentPoly c = (x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]) * z[k - 1];
        if (c.is_zero()) continue;
        for (int t = 0; t < dim_; ++t)
            if (!coeffs[t].is_zero()) out[t] += c * coeffs[t];
    }
    return out;
}

std::string PreLieAlgebra::product_table() const {
    std::string out;
    for (const auto& [key, coeffs] : constants_) {
        auto [i, j, k] = key;
        out += "{" + basis_[i - 1] + "," + basis_[j - 1] + "," + basis_[k - 1] + "} = " +
               vec_str(coeffs, basis_) + "\n";
    }
    return out.empty() ? "(zero product)\n" : out;
}

namespace {
Vec cyclic_bracket(const PreLieAlgebra& P, const Vec& x, const Vec& y, const Vec& z) {
    Vec out = P.product(x, y, z);
    out = vec_add(out, P.product(y, z, x));
    out = vec_add(out, P.product(z, x, y));
    return out;
}

Vec axiom1_residual(const PreLieAlgebra& P, const Vec& x1, const Vec& x2, const Vec& x3,
                    const Vec& x4, const Vec& x5) {
    Vec lhs = P.product(x1, x2, P.product(x3, x4, x5));
    Vec r = vec_sub(lhs, P.product(cyclic_bracket(P, x1, x2, x3), x4, x5));
    r = vec_sub(r, P.product(x3, cyclic_bracket(P, x1, x2, x4), x5));
    r = vec_sub(r, P.product(x3, x4, P.product(x1, x2, x5)));
    return r;
}

Vec axiom2_residual(const PreLieAlgebra& P, const Vec& x1, const Vec& x2, const Vec& x3,
                    const Vec& x4, const Vec& x5) {
    Vec lhs = P.product(cyclic_bracket(P, x1, x2, x3), x4, x5);
    Vec r = vec_sub(lhs, P.product(x1, x2, P.product(x3, x4, x5)));
    r = vec_sub(r, P.product(x2, x3, P.product(x1, x4, x5)));
    r = vec_sub(r, P.product(x3, x1, P.product(x2, x4, x5)));
    return r;
}
}  // namespace

TriAlgebra sub_adjacent(const PreLieAlgebra& P) {
    int n = P.dim();
    TriAlgebra out(n, P.basis_names());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Vec v = cyclic_bracket(P, basis_vec(n, i), basis_vec(n, j), basis_vec(n, k));
                if (!vec_is_zero(v)) out.set_constant(i, j, k, v);
            }
    return out;
}

CheckReport check_pre_lie_axioms(const PreLieAlgebra& P, bool dedup) {
    CheckReport rep;
    int n = P.dim();
    auto e = [&](int i) { return basis_vec(n, i); };
    if (dedup) {
        // axiom I residual is skew in (x1,x2) and in (x3,x4)
        for (int s = 1; s <= n; ++s)
            for (int u = s + 1; u <= n; ++u)
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        for (int k = 1; k <= n; ++k) {
                            Vec r = axiom1_residual(P, e(s), e(u), e(i), e(j), e(k));
                            if (!vec_is_zero(r))
                                rep.add({s, u, i, j, k}, "pre-lie-axiom-1",
                                        vec_str(r, P.basis_names()));
                        }
        // axiom II residual is alternating in (x1,x2,x3)
        for (int s = 1; s <= n; ++s)
            for (int u = s + 1; u <= n; ++u)
                for (int i = u + 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        for (int k = 1; k <= n; ++k) {
                            Vec r = axiom2_residual(P, e(s), e(u), e(i), e(j), e(k));
                            if (!vec_is_zero(r))
                                rep.add({s, u, i, j, k}, "pre-lie-axiom-2",
                                        vec_str(r, P.basis_names()));
                        }
    } else {
        for (int s = 1; s <= n; ++s)
            for (int u = 1; u <= n; ++u)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        for (int k = 1; k <= n; ++k) {
                            Vec r1 = axiom1_residual(P, e(s), e(u), e(i), e(j), e(k));
                            if (!vec_is_zero(r1))
                                rep.add({s, u, i, j, k}, "pre-lie-axiom-1",
                                        vec_str(r1, P.basis_names()));
                            Vec r2 = axiom2_residual(P, e(s), e(u), e(i), e(j), e(k));
                            if (!vec_is_zero(r2))
                                rep.add({s, u, i, j, k}, "pre-lie-axiom-2",
                                        vec_str(r2, P.basis_names()));
                        }
    }
    return rep;
}

CheckReport check_pre_lie_by_constants(const PreLieAlgebra& P) {
    CheckReport rep;
    int n = P.dim();
    // C_{ijk}^t with skew first pair
    auto C = [&](int i, int j, int k, int t) { return P.product_basis(i, j, k)[t - 1]; };
    auto Ccyc = [&](int i, int j, int k, int t) {
        return C(i, j, k, t) + C(j, k, i, t) + C(k, i, j, t);
    };
    for (int s = 1; s <= n; ++s)
        for (int u = s + 1; u <= n; ++u)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        Vec res(n);
                        for (int l = 1; l <= n; ++l)
                            for (int t = 1; t <= n; ++t)
                                res[l - 1] += C(i, j, k, t) * C(s, u, t, l) -
                                              Ccyc(s, u, i, t) * C(t, j, k, l) -
                                              Ccyc(s, u, j, t) * C(i, t, k, l) -
                                              C(s, u, k, t) * C(i, j, t, l);
                        if (!vec_is_zero(res))
                            rep.add({s, u, i, j, k}, "pre-lie-axiom-1",
                                    vec_str(res, P.basis_names()));
                    }
    for (int s = 1; s <= n; ++s)
        for (int u = s + 1; u <= n; ++u)
            for (int i = u + 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        Vec res(n);
                        for (int l = 1; l <= n; ++l)
                            for (int t = 1; t <= n; ++t)
                                res[l - 1] += Ccyc(s, u, i, t) * C(t, j, k, l) -
                                              C(i, j, k, t) * C(s, u, t, l) -
                                              C(s, j, k, t) * C(u, i, t, l) -
                                              C(u, j, k, t) * C(i, s, t, l);
                        if (!vec_is_zero(res))
                            rep.add({s, u, i, j, k}, "pre-lie-axiom-2",
                                    vec_str(res, P.basis_names()));
                    }
    return rep;
}

PreLieAlgebra induce_from_operator(const TriAlgebra& A, const ParamOperator& T) {
    CheckReport ok = check_o_operator_direct(A, T);
    if (!ok.pass())
        throw ArithmeticError("operator does not satisfy the defining condition: " + ok.summary());
    int n = A.dim();
    PreLieAlgebra out(n, A.basis_names());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Vec v = A.bracket(T.row(i), T.row(j), basis_vec(n, k));
                if (!vec_is_zero(v)) out.set_constant(i, j, k, v);
            }
    return out;
}

PreLieAlgebra induce_from_representation(const TriAlgebra& A, const Representation& rho,
                                         const Mat& T) {
    CheckReport ok = check_o_operator_general(A, rho, T);
    if (!ok.pass())
        throw ArithmeticError("operator does not satisfy the representation condition: " +
                              ok.summary());
    int m = rho.carrier_dim();
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
    PreLieAlgebra out(m, names);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            Mat act = rho.action(T[i - 1], T[j - 1]);
            for (int k = 1; k <= m; ++k) {
                Vec v = mat_apply(act, basis_vec(m, k));
                if (!vec_is_zero(v)) out.set_constant(i, j, k, v);
            }
        }
    return out;
}

TableDiff table_diff(const PreLieAlgebra& computed, const PreLieAlgebra& transcribed) {
    if (computed.dim() != transcribed.dim())
        throw DimensionError("table diff requires equal dimensions");
    TranscribedTable t;
    for (const auto& [key, coeffs] : transcribed.constants()) {
        // only e1-multiples are expressible in single-expression form; fall
        // back to the full vector rendering otherwise
        bool e1_only = true;
        for (int i = 1; i < transcribed.dim(); ++i)
            if (!coeffs[i].is_zero()) e1_only = false;
        if (!e1_only)
            throw DimensionError("transcribed table values must be multiples of e1");
        t.entries.push_back({key, coeffs[0].str()});
    }
    return table_diff(computed, t);
}

TableDiff table_diff(const PreLieAlgebra& computed, const TranscribedTable& transcribed) {
    int n = computed.dim();
    std::map<std::array<int, 3>, std::vector<LaurentPoly>> trans;
    for (const auto& [key, expr] : transcribed.entries)
        trans[key].push_back(parse_expr(expr));

    std::set<std::array<int, 3>> keys;
    for (const auto& [key, coeffs] : computed.constants()) keys.insert(key);
    for (const auto& [key, vals] : trans) keys.insert(key);

    TableDiff diff;
    for (const auto& key : keys) {
        Vec comp = computed.product_basis(key[0], key[1], key[2]);
        LaurentPoly comp_e1 = comp[0];
        bool comp_is_e1_multiple = true;
        for (int t = 1; t < n; ++t)
            if (!comp[t].is_zero()) comp_is_e1_multiple = false;

        auto it = trans.find(key);
        std::vector<LaurentPoly> vals =
            it == trans.end() ? std::vector<LaurentPoly>{LaurentPoly()} : it->second;
        bool dup = it != trans.end() && it->second.size() > 1;
        bool distinct_dup = false;
        for (std::size_t a = 1; a < vals.size(); ++a)
            if (vals[a] != vals[0]) distinct_dup = true;

        bool value_mismatch;
        if (!comp_is_e1_multiple) {
            value_mismatch = true;  // transcription can only express e1-multiples
        } else {
            value_mismatch =
                std::none_of(vals.begin(), vals.end(),
                             [&](const LaurentPoly& v) { return v == comp_e1; });
        }
        if (value_mismatch || (dup && distinct_dup)) {
            TableDiffEntry entry;
            entry.key = key;
            entry.computed = vec_str(comp, computed.basis_names());
            for (const auto& v : vals) {
                Vec tv = zero_vec(n);
                tv[0] = v;
                entry.transcribed.push_back(vec_str(tv, computed.basis_names()));
            }
            entry.duplicate_key = dup;
            diff.entries.push_back(std::move(entry));
        }
    }
    return diff;
}

Dim2Result dim2_experiment() {
    const char* params[4] = {"c121_1", "c121_2", "c122_1", "c122_2"};
    PreLieAlgebra P(2, {"e1", "e2"});
    P.set_constant(1, 2, 1, {LaurentPoly::var(params[0]), LaurentPoly::var(params[1])});
    P.set_constant(1, 2, 2, {LaurentPoly::var(params[2]), LaurentPoly::var(params[3])});

    // full undeduplicated expansion of both axioms over all basis 5-tuples
    std::set<LaurentPoly> constraints;
    auto e = [&](int i) { return basis_vec(2, i); };
    for (int s = 1; s <= 2; ++s)
        for (int u = 1; u <= 2; ++u)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    for (int k = 1; k <= 2; ++k) {
                        for (const auto& r :
                             {axiom1_residual(P, e(s), e(u), e(i), e(j), e(k)),
                              axiom2_residual(P, e(s), e(u), e(i), e(j), e(k))})
                            for (const auto& c : r)
                                if (!c.is_zero()) constraints.insert(c);
                    }

    Dim2Result out;
    for (const auto& c : constraints) out.constraints.push_back(c.str());

    // probe witnesses: a structure is admissible iff it satisfies the axioms,
    // which for numeric parameters we can check outright
    std::vector<std::map<std::string, Scalar>> candidates = {
        {{params[0], Scalar(1)}, {params[1], Scalar(0)}, {params[2], Scalar(0)}, {params[3], Scalar(0)}},
        {{params[0], Scalar(0)}, {params[1], Scalar(0)}, {params[2], Scalar(0)}, {params[3], Scalar(1)}},
        {{params[0], Scalar(1)}, {params[1], Scalar(1)}, {params[2], Scalar(1)}, {params[3], Scalar(1)}},
    };
    for (const auto& cand : candidates) {
        PreLieAlgebra Q(2, {"e1", "e2"});
        Q.set_constant(1, 2, 1,
                       {LaurentPoly(cand.at(params[0])), LaurentPoly(cand.at(params[1]))});
        Q.set_constant(1, 2, 2,
                       {LaurentPoly(cand.at(params[2])), LaurentPoly(cand.at(params[3]))});
        bool nonzero = !Q.constants().empty();
        if (nonzero && check_pre_lie_axioms(Q, false).pass()) {
            out.trivial_only = false;
            out.witness = cand;
            out.witness_checked = true;
            return out;
        }
    }
    out.trivial_only = true;
    return out;
}

}  // namespace triop
