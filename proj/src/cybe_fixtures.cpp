#include "triop/cybe.hpp"

namespace triop {

// Reference solution tensors on A3 (x) A3*, written as the three dual-basis
// rows: r_k = sum_k e_k* (x) (row k) - (row k) (x) e_k*. Entries follow the
// published listing with its transcription slips corrected against the
// operator catalogue (the corrected rows are the ones that satisfy the
// bracket equation; the verification suite enforces this).
const std::vector<TensorFixture>& reference_solution_tensors() {
    static const std::vector<TensorFixture> fixtures = {
        {"r1", {{"0", "0", "0"}, {"a21", "a22", "a23"}, {"a31", "a32", "a33"}}},
        {"r2", {{"a11", "0", "0"}, {"a21", "-a33", "a23"}, {"a31", "a32", "a33"}}},
        {"r3", {{"0", "0", "a13"}, {"a21", "0", "a23"}, {"0", "0", "a33"}}},
        {"r4", {{"0", "0", "a13"}, {"0", "0", "a23"}, {"-a23/a13", "1", "a33"}}},
        {"r5", {{"0", "0", "a13"}, {"0", "a22", "a23"}, {"0", "a32", "a23*a32/a22"}}},
        {"r6", {{"0", "0", "a13"}, {"a21", "a22", "a23"}, {"0", "0", "0"}}},
        {"r7", {{"0", "0", "a13"}, {"a21", "1", "a23"}, {"1", "1/a21", "(a23 + a21*a13)/a21"}}},
        {"r8", {{"1", "0", "1"}, {"a21", "a22", "a23"}, {"-1", "0", "-1"}}},
        {"r9", {{"1", "0", "1"}, {"0", "a22", "0"}, {"-1", "a32", "-1"}}},
        {"r10", {{"0", "a12", "0"}, {"0", "a22", "0"}, {"a31", "a32", "0"}}},
        {"r11", {{"0", "a12", "0"}, {"0", "0", "0"}, {"a31", "a32", "a33"}}},
        {"r12", {{"0", "a12", "0"}, {"0", "a22", "1"}, {"0", "a22*a33", "a33"}}},
        {"r13", {{"0", "a12", "0"}, {"1", "a22", "1"}, {"a31", "a22*a31 - a12", "a31"}}},
        {"r14", {{"0", "1", "1"}, {"a21", "a22", "a22"}, {"-a21", "a32", "a32"}}},
        {"r15", {{"0", "1", "1"}, {"a32*(a22 - a23)", "a22", "a23"}, {"0", "a32", "a32"}}},
        {"r16", {{"0", "1", "1"}, {"0", "a22", "a22"}, {"a22*(a33 - a32)", "a32", "a33"}}},
        {"r17", {{"0", "a12", "a13"}, {"0", "0", "a23"}, {"0", "0", "a33"}}},
        {"r18", {{"0", "1", "1"}, {"0", "a22", "a23"}, {"0", "a32", "a23*a32/a22"}}},
        {"r19", {{"0", "1", "1"}, {"a21", "1", "2"}, {"-a21", "-1", "-2"}}},
        {"r20", {{"a11", "a12", "0"}, {"0", "0", "0"}, {"a31", "a32", "0"}}},
        {"r21", {{"a11", "a12", "0"}, {"0", "-a33", "a23"}, {"0", "-a33^2/a23", "a33"}}},
        {"r22", {{"a33", "-a33^2", "0"}, {"1", "-a33", "0"}, {"a31", "a32", "a33"}}},
        {"r23", {{"a11", "1", "0"}, {"1", "-1", "1"}, {"1 - a11", "-2", "1"}}},
        {"r24", {{"1", "1", "0"}, {"-1", "-1", "0"}, {"a31", "a32", "-1"}}},
        {"r25", {{"1", "1", "0"}, {"1", "3 + a23*a31", "a23"}, {"a31", "-2/a23", "-1"}}},
        {"r26", {{"a11", "1", "1"}, {"0", "-a33", "a23"}, {"0", "-a33^2/a23", "a33"}}},
        {"r27", {{"1", "1", "1"}, {"0", "1", "0"}, {"-1", "a32", "-1"}}},
        {"r28", {{"-1", "1", "1"}, {"0", "a22", "1 - a33"}, {"-1", "1 - a22", "a33"}}},
        {"r29",
         {{"2*a33", "1", "1"}, {"a33*(a23 - a33)", "-a33", "a23"}, {"0", "-a33", "a33"}}},
        {"r30", {{"1", "1", "1"}, {"1", "0", "s - 1"}, {"1", "-1 - s", "0"}}},
        {"r31", {{"1", "1", "1"}, {"1", "0", "-1 - s"}, {"1", "s - 1", "0"}}},
    };
    return fixtures;
}

}  // namespace triop
