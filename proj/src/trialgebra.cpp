#include "triop/trialgebra.hpp"

#include <algorithm>

#include "triop/report.hpp"

namespace triop {

Vec zero_vec(int dim) { return Vec(dim); }

Vec basis_vec(int dim, int i) {
    Vec v(dim);
    v[i - 1] = LaurentPoly(1);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_scale(const LaurentPoly& c, const Vec& a) {
    Vec out = a;
    for (auto& x : out) x = c * x;
    return out;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

std::string vec_str(const Vec& a, const std::vector<std::string>& basis_names) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        std::string name = i < basis_names.size() ? basis_names[i] : "e" + std::to_string(i + 1);
        std::string c = a[i].str();
        std::string body;
        if (c == "1")
            body = name;
        else if (c == "-1")
            body = "-" + name;
        else if (a[i].is_term())
            body = c + "*" + name;
        else
            body = "(" + c + ")*" + name;
        if (out.empty())
            out = body;
        else if (body[0] == '-')
            out += " - " + body.substr(1);
        else
            out += " + " + body;
    }
    return out.empty() ? "0" : out;
}

Mat zero_mat(int rows, int cols) { return Mat(rows, std::vector<LaurentPoly>(cols)); }

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat out = zero_mat(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

Mat mat_scale(const LaurentPoly& c, const Mat& a) {
    Mat out = a;
    for (auto& row : out)
        for (auto& x : row) x = c * x;
    return out;
}

Mat mat_neg_transpose(const Mat& a) {
    Mat out = zero_mat(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = -a[i][j];
    return out;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
    return out;
}

std::string mat_str(const Mat& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (j) out += ", ";
            out += a[i][j].str();
        }
        out += "]";
    }
    return out + "]";
}

namespace {
std::vector<std::string> default_names(int dim, const std::string& stem = "e") {
    std::vector<std::string> out;
    for (int i = 1; i <= dim; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

// sign of the permutation sorting (i,j,k); 0 on repeats
int triple_sign(int& i, int& j, int& k) {
    if (i == j || j == k || i == k) return 0;
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    return sign;
}
}  // namespace

TriAlgebra TriAlgebra::zero(int dim) { return TriAlgebra(dim, default_names(dim)); }

TriAlgebra TriAlgebra::a3() {
    TriAlgebra A(3, default_names(3));
    A.set_constant(1, 2, 3, {LaurentPoly(1), LaurentPoly(0), LaurentPoly(0)});
    return A;
}

void TriAlgebra::set_constant(int i, int j, int k, Vec coeffs) {
    if (!(1 <= i && i < j && j < k && k <= dim_))
        throw DimensionError("structure constant indices must satisfy 1 <= i < j < k <= dim");
    if (static_cast<int>(coeffs.size()) != dim_)
        throw DimensionError("structure constant coefficient vector has wrong length");
    if (vec_is_zero(coeffs))
        constants_.erase({i, j, k});
    else
        constants_[{i, j, k}] = std::move(coeffs);
}

Vec TriAlgebra::bracket_basis(int i, int j, int k) const {
    int sign = triple_sign(i, j, k);
    if (sign == 0) return zero_vec(dim_);
    auto it = constants_.find({i, j, k});
    if (it == constants_.end()) return zero_vec(dim_);
    if (sign == 1) return it->second;
    Vec out = it->second;
    for (auto& c : out) c = -c;
    return out;
}

Vec TriAlgebra::bracket(const Vec& x, const Vec& y, const Vec& z) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_ ||
        static_cast<int>(z.size()) != dim_)
        throw DimensionError("bracket arguments do not match the algebra dimension");
    Vec out(dim_);
    // expand over stored ordered triples with all six permutations folded in
    for (const auto& [key, coeffs] : constants_) {
        auto [i, j, k] = key;
        LaurentPoly det =
            x[i - 1] * (y[j - 1] * z[k - 1] - y[k - 1] * z[j - 1]) -
            x[j - 1] * (y[i - 1] * z[k - 1] - y[k - 1] * z[i - 1]) +
            x[k - 1] * (y[i - 1] * z[j - 1] - y[j - 1] * z[i - 1]);
        if (det.is_zero()) continue;
        for (int t = 0; t < dim_; ++t)
            if (!coeffs[t].is_zero()) out[t] += det * coeffs[t];
    }
    return out;
}

std::string TriAlgebra::product_table() const {
    std::string out;
    for (const auto& [key, coeffs] : constants_) {
        auto [i, j, k] = key;
        out += "[" + basis_[i - 1] + "," + basis_[j - 1] + "," + basis_[k - 1] + "] = " +
               vec_str(coeffs, basis_) + "\n";
    }
    return out.empty() ? "(zero bracket)\n" : out;
}

CheckReport check_fundamental_identity(const TriAlgebra& A, bool dedup) {
    CheckReport rep;
    int n = A.dim();
    auto residual = [&](int a, int b, int c, int d, int e) {
        Vec ea = basis_vec(n, a), eb = basis_vec(n, b), ec = basis_vec(n, c),
            ed = basis_vec(n, d), ee = basis_vec(n, e);
        Vec lhs = A.bracket(ea, eb, A.bracket(ec, ed, ee));
        Vec r = vec_sub(lhs, A.bracket(A.bracket(ea, eb, ec), ed, ee));
        r = vec_sub(r, A.bracket(ec, A.bracket(ea, eb, ed), ee));
        r = vec_sub(r, A.bracket(ec, ed, A.bracket(ea, eb, ee)));
        return r;
    };
    if (dedup) {
        // residual is skew in (x1,x2) and in (x3,x4,x5)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d)
                        for (int e = d + 1; e <= n; ++e) {
                            Vec r = residual(a, b, c, d, e);
                            if (!vec_is_zero(r))
                                rep.add({a, b, c, d, e}, "fundamental-identity",
                                        vec_str(r, A.basis_names()));
                        }
    } else {
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int d = 1; d <= n; ++d)
                        for (int e = 1; e <= n; ++e) {
                            Vec r = residual(a, b, c, d, e);
                            if (!vec_is_zero(r))
                                rep.add({a, b, c, d, e}, "fundamental-identity",
                                        vec_str(r, A.basis_names()));
                        }
    }
    return rep;
}

void Representation::set_action(int i, int j, Mat m) {
    if (!(1 <= i && i < j && j <= algebra_dim_))
        throw DimensionError("representation action indices must satisfy 1 <= i < j <= dim");
    if (static_cast<int>(m.size()) != carrier_dim_ ||
        static_cast<int>(m[0].size()) != carrier_dim_)
        throw DimensionError("representation action matrix has wrong shape");
    if (mat_is_zero(m))
        action_.erase({i, j});
    else
        action_[{i, j}] = std::move(m);
}

Mat Representation::action(int i, int j) const {
    if (i == j) return zero_mat(carrier_dim_, carrier_dim_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = action_.find({i, j});
    if (it == action_.end()) return zero_mat(carrier_dim_, carrier_dim_);
    return flip ? mat_scale(LaurentPoly(-1), it->second) : it->second;
}

Mat Representation::action(const Vec& x, const Vec& y) const {
    Mat out = zero_mat(carrier_dim_, carrier_dim_);
    for (const auto& [key, m] : action_) {
        auto [i, j] = key;
        LaurentPoly c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
        if (c.is_zero()) continue;
        out = mat_add(out, mat_scale(c, m));
    }
    return out;
}

CheckReport check_representation(const TriAlgebra& A, const Representation& rho) {
    if (rho.algebra_dim() != A.dim())
        throw DimensionError("representation is indexed over a different algebra dimension");
    CheckReport rep;
    int n = A.dim();
    auto rho_of = [&](const Vec& x, int l) { return rho.action(x, basis_vec(n, l)); };
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Mat Rab = rho.action(a, b);
            Vec ea = basis_vec(n, a), eb = basis_vec(n, b);
            // axiom 1: [rho(ea,eb), rho(ec,ed)] = rho([ea,eb,ec],ed) - rho([ea,eb,ed],ec)
            for (int c = 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    Mat Rcd = rho.action(c, d);
                    Mat lhs = mat_sub(mat_mul(Rab, Rcd), mat_mul(Rcd, Rab));
                    Vec ec = basis_vec(n, c), ed = basis_vec(n, d);
                    Mat rhs = mat_sub(rho_of(A.bracket(ea, eb, ec), d),
                                      rho_of(A.bracket(ea, eb, ed), c));
                    Mat res = mat_sub(lhs, rhs);
                    if (!mat_is_zero(res))
                        rep.add({a, b, c, d}, "representation-axiom-1", mat_str(res));
                }
            // axiom 2: rho([ea,eb,ec],ed) =
            //   rho(ea,eb)rho(ec,ed) + rho(eb,ec)rho(ea,ed) + rho(ec,ea)rho(eb,ed)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    Vec ec = basis_vec(n, c), ed = basis_vec(n, d);
                    Mat lhs = rho_of(A.bracket(ea, eb, ec), d);
                    Mat rhs = mat_mul(Rab, rho.action(c, d));
                    rhs = mat_add(rhs, mat_mul(rho.action(eb, ec), rho.action(a, d)));
                    rhs = mat_add(rhs, mat_mul(rho.action(ec, ea), rho.action(b, d)));
                    Mat res = mat_sub(lhs, rhs);
                    if (!mat_is_zero(res))
                        rep.add({a, b, c, d}, "representation-axiom-2", mat_str(res));
                }
        }
    return rep;
}

Representation adjoint_rep(const TriAlgebra& A) {
    int n = A.dim();
    Representation rho(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Mat m = zero_mat(n, n);
            for (int c = 1; c <= n; ++c) {
                Vec col = A.bracket_basis(i, j, c);
                for (int r = 0; r < n; ++r) m[r][c - 1] = col[r];
            }
            rho.set_action(i, j, std::move(m));
        }
    return rho;
}

Representation coadjoint_rep(const TriAlgebra& A) {
    int n = A.dim();
    Representation ad = adjoint_rep(A);
    Representation rho(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Mat m = ad.action(i, j);
            if (mat_is_zero(m)) continue;
            rho.set_action(i, j, mat_neg_transpose(m));
        }
    return rho;
}

TriAlgebra semidirect(const TriAlgebra& A, const Representation& rho,
                      const std::vector<std::string>& carrier_names) {
    CheckReport ok = check_representation(A, rho);
    if (!ok.pass())
        throw DimensionError("semidirect product requires a representation; axioms violated at " +
                             std::to_string(ok.violations.size()) + " basis tuples");
    int n = A.dim();
    int m = rho.carrier_dim();
    std::vector<std::string> names = A.basis_names();
    if (static_cast<int>(carrier_names.size()) == m) {
        names.insert(names.end(), carrier_names.begin(), carrier_names.end());
    } else {
        for (int i = 1; i <= m; ++i) names.push_back("f" + std::to_string(i));
    }
    TriAlgebra out(n + m, names);
    for (const auto& [key, coeffs] : A.constants()) {
        Vec padded = coeffs;
        padded.resize(n + m);
        out.set_constant(key[0], key[1], key[2], padded);
    }
    // [e_i, e_j, f_c] = rho(e_i,e_j) f_c
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Mat act = rho.action(i, j);
            for (int c = 1; c <= m; ++c) {
                Vec v(n + m);
                bool nz = false;
                for (int r = 0; r < m; ++r) {
                    if (!act[r][c - 1].is_zero()) {
                        v[n + r] = act[r][c - 1];
                        nz = true;
                    }
                }
                if (nz) out.set_constant(i, j, n + c, v);
            }
        }
    return out;
}

}  // namespace triop
