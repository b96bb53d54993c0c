#include <mutex>

#include "triop/ooperator.hpp"
#include "triop/parse.hpp"

namespace triop {

namespace {

struct FamilySpec {
    const char* name;
    const char* rows[3][3];
    const char* side[2];  // "!=0" conditions, nullptr-terminated
};

// Reference catalogue of nonzero operator families on [e1,e2,e3] = e1.
// Parameters follow the a_ij cell naming; side conditions are the
// nonvanishing requirements (every denominator parameter plus the explicit
// a33 != 1 exclusion of O28).
constexpr FamilySpec kFamilies[] = {
    {"O1", {{"0", "0", "0"}, {"a21", "a22", "a23"}, {"a31", "a32", "a33"}}, {nullptr, nullptr}},
    {"O2", {{"a11", "0", "0"}, {"a21", "-a33", "a23"}, {"a31", "a32", "a33"}}, {nullptr, nullptr}},
    {"O3", {{"0", "0", "a13"}, {"a21", "0", "a23"}, {"0", "0", "a33"}}, {nullptr, nullptr}},
    {"O4", {{"0", "0", "a13"}, {"0", "0", "a23"}, {"-a23/a13", "1", "a33"}}, {"a13", nullptr}},
    {"O5", {{"0", "0", "a13"}, {"0", "a22", "a23"}, {"0", "a32", "a23*a32/a22"}},
     {"a22", nullptr}},
    {"O6", {{"0", "0", "a13"}, {"a21", "a22", "a23"}, {"0", "0", "0"}}, {nullptr, nullptr}},
    {"O7", {{"0", "0", "a13"}, {"a21", "1", "a23"}, {"1", "1/a21", "a23/a21 + a13"}},
     {"a21", nullptr}},
    {"O8", {{"1", "0", "1"}, {"a21", "a22", "a23"}, {"-1", "0", "-1"}}, {nullptr, nullptr}},
    {"O9", {{"1", "0", "1"}, {"0", "a22", "0"}, {"-1", "a32", "-1"}}, {nullptr, nullptr}},
    {"O10", {{"0", "a12", "0"}, {"0", "a22", "0"}, {"a31", "a32", "0"}}, {nullptr, nullptr}},
    {"O11", {{"0", "a12", "0"}, {"0", "0", "0"}, {"a31", "a32", "a33"}}, {nullptr, nullptr}},
    {"O12", {{"0", "a12", "0"}, {"0", "a22", "1"}, {"0", "a22*a33", "a33"}}, {nullptr, nullptr}},
    {"O13", {{"0", "a12", "0"}, {"1", "a22", "1"}, {"a31", "a22*a31 - a12", "a31"}},
     {nullptr, nullptr}},
    {"O14", {{"0", "1", "1"}, {"a21", "a22", "a22"}, {"-a21", "a32", "a32"}},
     {nullptr, nullptr}},
    {"O15", {{"0", "1", "1"}, {"a32*(a22 - a23)", "a22", "a23"}, {"0", "a32", "a32"}},
     {nullptr, nullptr}},
    {"O16", {{"0", "1", "1"}, {"0", "a22", "a22"}, {"a22*(a33 - a32)", "a32", "a33"}},
     {nullptr, nullptr}},
    {"O17", {{"0", "a12", "a13"}, {"0", "0", "a23"}, {"0", "0", "a33"}}, {nullptr, nullptr}},
    {"O18", {{"0", "1", "1"}, {"0", "a22", "a23"}, {"0", "a32", "a23*a32/a22"}},
     {"a22", nullptr}},
    // O19's published third row drops the signs; row3 = -row2 is the unique
    // choice keeping a21 free (see the verification suite).
    {"O19", {{"0", "1", "1"}, {"a21", "1", "2"}, {"-a21", "-1", "-2"}}, {nullptr, nullptr}},
    {"O20", {{"a11", "a12", "0"}, {"0", "0", "0"}, {"a31", "a32", "0"}}, {nullptr, nullptr}},
    {"O21", {{"a11", "a12", "0"}, {"0", "-a33", "a23"}, {"0", "-a33^2/a23", "a33"}},
     {"a23", nullptr}},
    {"O22", {{"a33", "-a33^2", "0"}, {"1", "-a33", "0"}, {"a31", "a32", "a33"}},
     {nullptr, nullptr}},
    {"O23", {{"a11", "1", "0"}, {"1", "-1", "1"}, {"1 - a11", "-2", "1"}}, {nullptr, nullptr}},
    {"O24", {{"1", "1", "0"}, {"-1", "-1", "0"}, {"a31", "a32", "-1"}}, {nullptr, nullptr}},
    {"O25", {{"1", "1", "0"}, {"1", "3 + a23*a31", "a23"}, {"a31", "-2/a23", "-1"}},
     {"a23", nullptr}},
    {"O26", {{"a11", "1", "1"}, {"0", "-a33", "a23"}, {"0", "-a33^2/a23", "a33"}},
     {"a23", nullptr}},
    {"O27", {{"1", "1", "1"}, {"0", "1", "0"}, {"-1", "a32", "-1"}}, {nullptr, nullptr}},
    {"O28", {{"-1", "1", "1"}, {"0", "a22", "1 - a33"}, {"-1", "1 - a22", "a33"}},
     {"a33 - 1", nullptr}},
    // O29's published (1,1) entry is 0; the defining equations force 2*a33.
    {"O29",
     {{"2*a33", "1", "1"}, {"a33*(a23 - a33)", "-a33", "a23"}, {"0", "-a33", "a33"}},
     {nullptr, nullptr}},
    {"O30", {{"1", "1", "1"}, {"1", "0", "s - 1"}, {"1", "-1 - s", "0"}}, {nullptr, nullptr}},
    {"O31", {{"1", "1", "1"}, {"1", "0", "-1 - s"}, {"1", "s - 1", "0"}}, {nullptr, nullptr}},
};

std::vector<ParamOperator> build_catalogue() {
    std::vector<ParamOperator> out;
    for (const auto& spec : kFamilies) {
        ParamOperator T;
        T.dim = 3;
        T.name = spec.name;
        T.entries = zero_mat(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) T.entries[i][j] = parse_expr(spec.rows[i][j]);
        for (const char* sc : spec.side)
            if (sc) T.side_conditions.push_back(parse_expr(sc));
        T.validate();
        out.push_back(std::move(T));
    }
    return out;
}

}  // namespace

const std::vector<ParamOperator>& catalogue() {
    static const std::vector<ParamOperator> fams = build_catalogue();
    return fams;
}

const ParamOperator& catalogue_family(const std::string& name) {
    for (const auto& fam : catalogue())
        if (fam.name == name) return fam;
    throw ArithmeticError("unknown catalogue family '" + name + "' (expected O1..O31)");
}

}  // namespace triop
