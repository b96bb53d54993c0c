#include "triop/prelie.hpp"

namespace triop {

namespace {

struct Row {
    int i, j, k;
    const char* expr;  // coefficient of e1
};

struct TableSpec {
    const char* name;
    std::vector<Row> rows;
};

// Reference induced multiplication tables, transcribed literally from the
// published listing (defects included: duplicate keys, sign slips, swapped
// subscripts). The diff command surfaces every disagreement with the
// computed tables as findings.
const std::vector<TableSpec>& table_specs() {
    static const std::vector<TableSpec> specs = {
        {"O1", {{2,3,1, "a22*a33 - a23*a32"}, {2,3,2, "a23*a31 - a21*a33"},
                {1,3,3, "a21*a32 - a22*a31"}}},
        {"O2", {{1,2,2, "-a11*a23"}, {1,2,3, "-a11*a33"}, {1,3,2, "-a11*a33"},
                {1,3,3, "a11*a32"}, {2,3,1, "-(a23*a32 + a33^2)"},
                {2,3,2, "a23*a31 - a21*a33"}, {2,3,3, "a21*a32 + a33*a31"}}},
        {"O3", {{1,2,2, "a13*a21"}, {2,3,2, "-a21*a33"}}},
        {"O4", {{1,3,1, "-a13"}, {1,3,1, "-a23"}, {2,3,1, "-a23"}, {2,3,2, "-a23^2/a13"}}},
        {"O5", {{1,2,1, "-a13*a22"}, {1,3,1, "-a13*a32"}}},
        {"O6", {{1,2,1, "-a13*a22"}, {1,2,2, "a13*a21"}}},
        {"O7", {{1,2,1, "-a13"}, {1,2,2, "a13*a21"}, {1,3,1, "-a13/a21"}, {1,3,2, "a13"},
                {2,3,1, "a13"}, {2,3,2, "-a13*a21"}}},
        {"O8", {{1,2,1, "-a22"}, {1,2,2, "a21 - a33"}, {1,2,3, "a22"}, {2,3,1, "-a22"},
                {2,3,2, "a21 - a33"}, {2,3,3, "a22"}}},
        {"O9", {{1,2,1, "-a22"}, {1,2,3, "a22"}, {1,3,1, "-a32"}, {1,3,3, "a32"},
                {2,3,1, "-a22"}, {2,3,3, "a22"}}},
        {"O10", {{1,3,3, "-a12*a31"}, {2,3,3, "-a22*a31"}}},
        {"O11", {{1,3,1, "a12*a33"}, {1,3,3, "a12*a31"}}},
        {"O12", {{1,2,1, "a12"}, {1,3,1, "a12*a33"}}},
        {"O13", {{1,2,1, "a12"}, {1,2,3, "-a12"}, {1,3,1, "a12*a31"}, {1,3,3, "-a12*a31"},
                 {2,3,1, "a12"}, {2,3,3, "-a12"}}},
        {"O14", {{1,2,2, "a21"}, {1,2,3, "-a21"}, {1,3,2, "-a21"}, {1,3,3, "-a21"},
                 {2,3,2, "-(a22*a21 + a32*a21)"}, {2,3,3, "a22*a21 + a32*a21"}}},
        {"O15", {{1,2,1, "a23 - a22"}, {1,2,2, "a32*(a22 - a23)"}, {1,2,3, "a32*(a23 - a22)"},
                 {2,3,1, "a22*a32 - a23*a32"}, {2,3,2, "a32^2*(a23 - a22)"},
                 {2,3,3, "a32^2*(a22 - a23)"}}},
        {"O16", {{1,3,1, "a33 - a32"}, {1,3,2, "a22*(a33 - a32)"}, {1,3,3, "-a22*(a33 - a32)"},
                 {2,3,1, "a22*a33 - a22*a32"}, {2,3,2, "a22^2*(a33 - a32)"},
                 {2,3,3, "-a22^2*(a33 - a32)"}}},
        {"O17", {{1,2,1, "a12*a23"}, {1,3,1, "a12*a33"}}},
        {"O18", {{1,2,1, "a23 - a22"}, {1,3,1, "(a23*a32 - a23*a32)/a22"}}},
        {"O19", {{1,2,1, "1"}, {1,2,2, "a21"}, {1,2,3, "-a21"}, {1,3,1, "1"},
                 {1,3,2, "a21"}, {1,3,3, "-a21"}}},
        {"O20", {{1,3,3, "a11*a32 - a12*a31"}}},
        {"O21", {{1,2,1, "a12*a23"}, {1,2,2, "-a11*a23"}, {1,2,3, "-a11*a33"},
                 {1,3,1, "a12*a33"}, {1,3,2, "-a11*a33"}, {1,3,3, "-a11*a33^2/a23"}}},
        {"O22", {{1,3,1, "-a33^2"}, {1,3,2, "-a33^2"}, {1,3,3, "a33*(a32 + a33*a31)"},
                 {2,3,1, "-a33^2"}, {2,3,2, "-a33"}, {2,3,3, "a32 + a33*a31"}}},
        {"O23", {{1,2,1, "1"}, {1,2,2, "-a11"}, {1,2,3, "-(a11 + 1)"}, {1,3,1, "1"},
                 {1,3,2, "-a11"}, {1,3,3, "-(a11 + 1)"}, {2,3,1, "1"}, {2,3,2, "-a11"},
                 {2,3,3, "-(a11 + 1)"}}},
        {"O24", {{1,3,1, "-1"}, {1,3,2, "1"}, {1,3,3, "a32 - a31"}, {2,3,1, "1"},
                 {2,3,2, "-1"}, {2,3,3, "a31 - a32"}}},
        {"O25", {{1,2,1, "a23"}, {1,2,2, "-a23"}, {1,2,3, "2 + a23*a31"}, {1,3,1, "-1"},
                 {1,3,2, "1"}, {1,3,3, "-(2/a23 + a31)"}, {2,3,1, "-(1 + a23*a31)"},
                 {2,3,2, "a23*a31 + 1"}, {2,3,3, "-(2/a23 + 3*a31 + a23*a31^2)"}}},
        {"O26", {{1,2,1, "a23 + a33"}, {1,2,2, "-a11*a23"}, {1,2,3, "-a11*a33"},
                 {1,3,1, "a33*(a23 + a33)/a23"}, {1,3,2, "-a11*a33"},
                 {1,3,3, "-a11*a33^2/a23"}}},
        {"O27", {{1,2,1, "-1"}, {1,2,3, "1"}, {1,3,1, "-(1 + a32)"}, {1,3,3, "1 + a32"},
                 {2,3,1, "-1"}, {2,3,3, "1"}}},
        {"O28", {{1,2,1, "-(a33 + a22 - 1)"}, {1,2,2, "-(a33 - 1)"}, {1,2,3, "-a22"},
                 {1,3,1, "a33 + a22 - 1"}, {1,3,2, "a33 - 1"}, {1,3,3, "a22"},
                 {2,3,1, "a33 + a22 - 1"}, {2,3,2, "a33 - 1"}, {2,3,3, "a22"}}},
        {"O29", {{1,2,1, "a23 + a33"}, {1,2,2, "a33*(a23 - a33)"}, {1,2,3, "a33*(a33 - a23)"},
                 {2,3,1, "a33*(a23 - a33)"}, {2,3,2, "a33^2*(a33 - a23)"},
                 {2,3,3, "a33^2*(a33 - a23)"}}},
        {"O30", {{1,2,1, "s - 1"}, {1,2,2, "2 - s"}, {1,2,3, "-1"}, {1,3,1, "s + 1"},
                 {1,3,2, "1"}, {1,3,3, "-(s + 2)"}, {2,3,1, "-2"}, {2,3,2, "s - 1"},
                 {2,3,3, "-(s + 1)"}}},
        {"O31", {{1,2,1, "-(s + 1)"}, {1,2,2, "2 + s"}, {1,2,3, "-1"}, {1,3,1, "1 - s"},
                 {1,3,2, "1"}, {1,3,3, "s - 2"}, {2,3,1, "2"}, {2,3,2, "-(s + 1)"},
                 {2,3,3, "s - 1"}}},
    };
    return specs;
}

}  // namespace

const std::vector<TranscribedTable>& reference_induced_tables() {
    static const std::vector<TranscribedTable> tables = [] {
        std::vector<TranscribedTable> out;
        for (const auto& spec : table_specs()) {
            TranscribedTable t;
            t.name = spec.name;
            for (const auto& row : spec.rows)
                t.entries.push_back({{row.i, row.j, row.k}, row.expr});
            out.push_back(std::move(t));
        }
        return out;
    }();
    return tables;
}

const TranscribedTable& reference_induced_table(const std::string& name) {
    for (const auto& t : reference_induced_tables())
        if (t.name == name) return t;
    throw ArithmeticError("no reference induced table for '" + name + "'");
}

}  // namespace triop
