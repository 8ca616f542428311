// Copyright 2026 The qsvbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qsv/qasm.hpp"
#include "qsv/taskgen.hpp"

namespace qsv {
namespace {

QasmError parse_error(const std::string &text) {
    try {
        parse_qasm(text);
    } catch (const QasmError &e) {
        return e;
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return QasmError(QasmErrorKind::SyntaxError, 0, 0, "");
}

TEST(ParseQasm, SingleHadamard) {
    const Circuit c = parse_qasm("OPENQASM 2.0; qreg q[1]; h q[0];");
    EXPECT_EQ(c.num_qubits, 1);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.ops[0], (GateOp{GateKind::H, {}, {0}}));
}

TEST(ParseQasm, MeasureIsUnsupported) {
    const auto e = parse_error("OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nmeasure q -> c;\n");
    EXPECT_EQ(e.kind(), QasmErrorKind::UnsupportedStatement);
    const auto m = parse_error("OPENQASM 2.0;\nqreg q[1];\nmeasure q[0] -> c[0];\n");
    EXPECT_EQ(m.kind(), QasmErrorKind::UnsupportedStatement);
    EXPECT_EQ(m.detail(), "measure");
    EXPECT_EQ(m.line(), 3);
    EXPECT_EQ(m.column(), 1);
}

TEST(ParseQasm, OtherUnsupportedStatements) {
    for (const char *stmt : {"reset q[0];", "opaque foo q;", "if (c==1) x q[0];"}) {
        const auto e = parse_error(std::string("OPENQASM 2.0; qreg q[2]; ") + stmt);
        EXPECT_EQ(e.kind(), QasmErrorKind::UnsupportedStatement) << stmt;
    }
    const auto inc = parse_error("OPENQASM 2.0; include \"other.inc\"; qreg q[1];");
    EXPECT_EQ(inc.kind(), QasmErrorKind::UnsupportedStatement);
}

TEST(ParseQasm, UnknownGate) {
    const auto e = parse_error("OPENQASM 2.0;\nqreg q[2];\nccx q[0],q[1];\n");
    EXPECT_EQ(e.kind(), QasmErrorKind::UnknownGate);
    EXPECT_EQ(e.detail(), "ccx");
    EXPECT_EQ(e.line(), 3);
}

TEST(ParseQasm, SyntaxErrorHasPosition) {
    const auto e = parse_error("OPENQASM 2.0;\nqreg q[2];\nh q[0]\ncx q[0],q[1];\n");
    EXPECT_EQ(e.kind(), QasmErrorKind::SyntaxError);
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 1);
}

TEST(ParseQasm, SecondQregRejected) {
    const auto e = parse_error("OPENQASM 2.0; qreg a[1]; qreg b[1];");
    EXPECT_NE(e.kind(), QasmErrorKind::UnknownGate);
}

TEST(ParseQasm, IndexOutOfRegister) {
    const auto e = parse_error("OPENQASM 2.0; qreg q[2]; h q[2];");
    EXPECT_EQ(e.kind(), QasmErrorKind::SyntaxError);
}

TEST(ParseQasm, AliasesNormalize) {
    const Circuit c = parse_qasm(
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nu1(0.5) q[0];\ncu1(0.25) q[0],q[1];\n"
        "CX q[1],q[0];\nbarrier q;\n");
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.ops[0], (GateOp{GateKind::P, {0.5}, {0}}));
    EXPECT_EQ(c.ops[1], (GateOp{GateKind::CP, {0.25}, {0, 1}}));
    EXPECT_EQ(c.ops[2], (GateOp{GateKind::CX, {}, {1, 0}}));
}

TEST(ParseQasm, ExpressionsAndComments) {
    const Circuit c = parse_qasm("OPENQASM 2.0; // header\nqreg q[1];\n"
                                 "rz(-pi/4 + 2*0.5^2) q[0]; // comment\n"
                                 "rx(sin(pi/2) * sqrt(4)) q[0];\n");
    ASSERT_EQ(c.size(), 2u);
    EXPECT_DOUBLE_EQ(c.ops[0].params[0], -std::numbers::pi / 4 + 0.5);
    EXPECT_DOUBLE_EQ(c.ops[1].params[0], 2.0);
}

TEST(ParseQasm, RegisterBroadcast) {
    const Circuit c = parse_qasm("OPENQASM 2.0; qreg q[3]; h q;");
    ASSERT_EQ(c.size(), 3u);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(c.ops[i].qubits, std::vector<int>{i});
    }
}

TEST(ParseQasm, GateDefinitionExpands) {
    const Circuit c = parse_qasm("OPENQASM 2.0;\nqreg q[3];\n"
                                 "gate bell(t) a, b { h a; cx a, b; rz(t/2) b; }\n"
                                 "bell(pi) q[2], q[0];\n");
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.ops[0], (GateOp{GateKind::H, {}, {2}}));
    EXPECT_EQ(c.ops[1], (GateOp{GateKind::CX, {}, {2, 0}}));
    EXPECT_EQ(c.ops[2], (GateOp{GateKind::RZ, {std::numbers::pi / 2}, {0}}));
}

TEST(ParseQasm, NestedGateDefinitions) {
    const Circuit c = parse_qasm("OPENQASM 2.0; qreg q[2];\n"
                                 "gate a(x) p { rx(x) p; }\n"
                                 "gate b(y) p, r { a(2*y) p; a(y) r; }\n"
                                 "b(0.5) q[1], q[0];");
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.ops[0], (GateOp{GateKind::RX, {1.0}, {1}}));
    EXPECT_EQ(c.ops[1], (GateOp{GateKind::RX, {0.5}, {0}}));
}

TEST(ParseQasm, WrongParamCount) {
    const auto e = parse_error("OPENQASM 2.0; qreg q[2]; fsim(0.1) q[0],q[1];");
    EXPECT_EQ(e.kind(), QasmErrorKind::SyntaxError);
}

TEST(ParseQasm, DuplicateOperandRejected) {
    EXPECT_THROW(parse_qasm("OPENQASM 2.0; qreg q[2]; cx q[1],q[1];"), Error);
}

TEST(ParseQasm, TotalOnGarbage) {
    // Random byte strings must end in a typed error, never a crash.
    std::mt19937 rng(7);
    const std::string alphabet = "OPENQASM2.0;qreg[]()hcx,pi+-*/^ \n\"{}gate1";
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s = "OPENQASM 2.0; ";
        const int len = static_cast<int>(rng() % 60);
        for (int i = 0; i < len; ++i) {
            s += alphabet[rng() % alphabet.size()];
        }
        try {
            (void)parse_qasm(s);
        } catch (const Error &) {
        }
    }
}

TEST(ParseQasm, DeepExpressionIsBounded) {
    std::string expr(5000, '(');
    expr += "1";
    expr += std::string(5000, ')');
    EXPECT_THROW(parse_qasm("OPENQASM 2.0; qreg q[1]; rz(" + expr + ") q[0];"), QasmError);
}

TEST(EmitQasm, CanonicalHadamard) {
    Circuit c;
    c.num_qubits = 1;
    c.add(GateKind::H, {0});
    EXPECT_EQ(emit_qasm(c), "OPENQASM 2.0;\nqreg q[1];\nh q[0];\n");
}

TEST(EmitQasm, EmptyCircuitIsHeaderOnly) {
    Circuit c;
    c.num_qubits = 2;
    EXPECT_EQ(emit_qasm(c), "OPENQASM 2.0;\nqreg q[2];\n");
}

TEST(EmitQasm, FsimRoundTrips) {
    Circuit c;
    c.num_qubits = 2;
    c.add(GateKind::FSIM, {0, 1}, {std::numbers::pi / 2, std::numbers::pi / 6});
    const Circuit back = parse_qasm(emit_qasm(c));
    EXPECT_TRUE(same_ops(c, back));
}

TEST(EmitQasm, AwkwardRealsRoundTrip) {
    Circuit c;
    c.num_qubits = 1;
    for (double v : {0.1, -0.0, 1e-300, 5e-324, 1.7976931348623157e308, 1.0 / 3.0, -2.5e-7}) {
        c.add(GateKind::RZ, {0}, {v});
    }
    const Circuit back = parse_qasm(emit_qasm(c));
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_EQ(back.ops[i].params[0], c.ops[i].params[0]) << i;
    }
}

TEST(EmitQasm, EveryGateKindRoundTrips) {
    Circuit c;
    c.num_qubits = 3;
    for (const auto &info : kGateTable) {
        std::vector<int> q = info.arity == 1 ? std::vector<int>{2} : std::vector<int>{2, 0};
        std::vector<double> p(static_cast<std::size_t>(info.num_params), 0.123456789012345678);
        c.add(info.kind, q, p);
    }
    EXPECT_TRUE(same_ops(c, parse_qasm(emit_qasm(c))));
}

class GeneratorRoundTrip : public ::testing::TestWithParam<std::tuple<Task, int>> {};

TEST_P(GeneratorRoundTrip, Identity) {
    const auto [task, n] = GetParam();
    const Circuit c = build_task(task, n);
    const std::string text = emit_qasm(c);
    const Circuit back = parse_qasm(text);
    EXPECT_TRUE(same_ops(c, back));
    EXPECT_EQ(emit_qasm(back), text);
}

INSTANTIATE_TEST_SUITE_P(AllTasks, GeneratorRoundTrip,
                         ::testing::Combine(::testing::Values(Task::Heisenberg, Task::Rqc,
                                                              Task::Qft),
                                            ::testing::Values(2, 8, 16)));

} // namespace
} // namespace qsv
