#include "triop/json_io.hpp"

#include <fstream>

#include "triop/parse.hpp"

namespace triop {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

int require_dim(const json& doc) {
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() < 1)
        fail("document requires a positive integer \"dim\"");
    return doc["dim"].get<int>();
}

void check_field_param(const json& doc) {
    if (doc.contains("d")) {
        long d = doc["d"].get<long>();
        if (d != sqrt_param())
            fail("document field parameter d=" + std::to_string(d) +
                 " does not match the session (d=" + std::to_string(sqrt_param()) +
                 "; set TRIOP_D to change it)");
    }
}

LaurentPoly parse_entry(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where + " must be an expression string");
    try {
        return parse_expr(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where + ": " + e.what());
    }
}

Vec parse_coeffs(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        fail(where + " must be an array of " + std::to_string(dim) + " expression strings");
    Vec out(dim);
    for (int t = 0; t < dim; ++t)
        out[t] = parse_entry(j[t], where + "[" + std::to_string(t) + "]");
    return out;
}

std::vector<std::string> basis_names_or_default(const json& doc, int dim) {
    std::vector<std::string> names;
    if (doc.contains("basis")) {
        for (const auto& b : doc["basis"]) names.push_back(b.get<std::string>());
        if (static_cast<int>(names.size()) != dim)
            fail("\"basis\" must list exactly dim names");
    } else {
        for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
    }
    return names;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        fail(path + ": " + e.what());
    }
    return doc;
}

TriAlgebra algebra_from_json(const json& doc) {
    check_field_param(doc);
    int dim = require_dim(doc);
    TriAlgebra A(dim, basis_names_or_default(doc, dim));
    if (doc.contains("brackets")) {
        for (const auto& b : doc["brackets"]) {
            int i = b.at("i").get<int>(), j = b.at("j").get<int>(), k = b.at("k").get<int>();
            if (!(1 <= i && i < j && j < k && k <= dim))
                fail("bracket indices must satisfy 1 <= i < j < k <= dim");
            A.set_constant(i, j, k, parse_coeffs(b.at("coeffs"), dim, "bracket coeffs"));
        }
    }
    return A;
}

nlohmann::json algebra_to_json(const TriAlgebra& A) {
    json doc;
    doc["dim"] = A.dim();
    doc["basis"] = A.basis_names();
    doc["d"] = sqrt_param();
    json brackets = json::array();
    for (const auto& [key, coeffs] : A.constants()) {
        json b;
        b["i"] = key[0];
        b["j"] = key[1];
        b["k"] = key[2];
        json cs = json::array();
        for (const auto& c : coeffs) cs.push_back(c.str());
        b["coeffs"] = cs;
        brackets.push_back(b);
    }
    doc["brackets"] = brackets;
    return doc;
}

ParamOperator operator_from_json(const json& doc) {
    check_field_param(doc);
    int dim = require_dim(doc);
    if (!doc.contains("entries") || !doc["entries"].is_array() ||
        static_cast<int>(doc["entries"].size()) != dim)
        fail("operator document requires an \"entries\" matrix of dim rows");
    ParamOperator T;
    T.dim = dim;
    T.entries = zero_mat(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = doc["entries"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            fail("operator row " + std::to_string(i + 1) + " must have dim entries");
        for (int j = 0; j < dim; ++j)
            T.entries[i][j] =
                parse_entry(row[j], "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    if (doc.contains("sideConditions"))
        for (const auto& sc : doc["sideConditions"])
            T.side_conditions.push_back(parse_entry(sc, "sideConditions"));
    if (doc.contains("name")) T.name = doc["name"].get<std::string>();
    try {
        T.validate();
    } catch (const ArithmeticError& e) {
        fail(e.what());
    }
    return T;
}

nlohmann::json operator_to_json(const ParamOperator& T) {
    json doc;
    doc["dim"] = T.dim;
    if (!T.name.empty()) doc["name"] = T.name;
    json entries = json::array();
    for (int i = 0; i < T.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < T.dim; ++j) row.push_back(T.entries[i][j].str());
        entries.push_back(row);
    }
    doc["entries"] = entries;
    json scs = json::array();
    for (const auto& sc : T.side_conditions) scs.push_back(sc.str());
    doc["sideConditions"] = scs;
    return doc;
}

PreLieAlgebra prelie_from_json(const json& doc) {
    check_field_param(doc);
    int dim = require_dim(doc);
    PreLieAlgebra P(dim, basis_names_or_default(doc, dim));
    if (doc.contains("products")) {
        for (const auto& p : doc["products"]) {
            int i = p.at("i").get<int>(), j = p.at("j").get<int>(), k = p.at("k").get<int>();
            if (!(1 <= i && i < j && j <= dim && 1 <= k && k <= dim))
                fail("product indices must satisfy 1 <= i < j <= dim, 1 <= k <= dim");
            P.set_constant(i, j, k, parse_coeffs(p.at("coeffs"), dim, "product coeffs"));
        }
    }
    return P;
}

nlohmann::json prelie_to_json(const PreLieAlgebra& P) {
    json doc;
    doc["dim"] = P.dim();
    doc["basis"] = P.basis_names();
    doc["d"] = sqrt_param();
    json products = json::array();
    for (const auto& [key, coeffs] : P.constants()) {
        json p;
        p["i"] = key[0];
        p["j"] = key[1];
        p["k"] = key[2];
        json cs = json::array();
        for (const auto& c : coeffs) cs.push_back(c.str());
        p["coeffs"] = cs;
        products.push_back(p);
    }
    doc["products"] = products;
    return doc;
}

TwoTensor tensor_from_json(const json& doc) {
    check_field_param(doc);
    int dim = require_dim(doc);
    if (!doc.contains("coeffs") || static_cast<int>(doc["coeffs"].size()) != dim)
        fail("tensor document requires a \"coeffs\" matrix of dim rows");
    TwoTensor r = TwoTensor::zero(dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = doc["coeffs"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            fail("tensor row " + std::to_string(i + 1) + " must have dim entries");
        for (int j = 0; j < dim; ++j)
            r.coeffs[i][j] =
                parse_entry(row[j], "coeffs[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return r;
}

nlohmann::json tensor_to_json(const TwoTensor& r) {
    json doc;
    doc["dim"] = r.dim;
    json coeffs = json::array();
    for (int i = 0; i < r.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < r.dim; ++j) row.push_back(r.coeffs[i][j].str());
        coeffs.push_back(row);
    }
    doc["coeffs"] = coeffs;
    return doc;
}

std::vector<std::vector<Scalar>> scalar_matrix_from_json(const json& doc) {
    check_field_param(doc);
    const json& entries = doc.contains("entries") ? doc["entries"] : doc;
    if (!entries.is_array() || entries.size() != 3) fail("expected a 3x3 \"entries\" matrix");
    std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3));
    for (int i = 0; i < 3; ++i) {
        if (!entries[i].is_array() || entries[i].size() != 3)
            fail("matrix row " + std::to_string(i + 1) + " must have 3 entries");
        for (int j = 0; j < 3; ++j) {
            LaurentPoly p = parse_entry(entries[i][j], "matrix entry");
            if (!p.is_constant()) fail("matrix entries must be constant: " + p.str());
            m[i][j] = p.constant_value();
        }
    }
    return m;
}

}  // namespace triop
