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

/**
 * @file
 * OpenQASM 2.0 subset reader and writer.
 *
 * Accepted: the OPENQASM 2.0 header, `include "qelib1.inc";` (ignored), a
 * single qreg, `barrier` (ignored), `gate` definitions built from supported
 * gates, and calls to the gate table below. Classical registers,
 * measurement, reset, conditionals and opaque gates are rejected.
 *
 * Gate table: h x y z sx sy sw rx ry rz p cx cz cp swap fsim, with the
 * aliases u1/phase -> p, cu1/cphase -> cp, CX -> cx. `fsim(theta, phi)` is a
 * native two-parameter gate; the writer emits it by name.
 */

#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qsv/circuit.hpp"
#include "qsv/errors.hpp"

namespace qsv {

enum class QasmErrorKind { SyntaxError, UnsupportedStatement, UnknownGate };

inline const char *to_string(QasmErrorKind k) {
    switch (k) {
    case QasmErrorKind::SyntaxError:
        return "SyntaxError";
    case QasmErrorKind::UnsupportedStatement:
        return "UnsupportedStatement";
    case QasmErrorKind::UnknownGate:
        return "UnknownGate";
    }
    return "?";
}

class QasmError : public Error {
  public:
    QasmError(QasmErrorKind kind, int line, int column, const std::string &detail)
        : Error(to_string(kind), std::string(to_string(kind)) + " at " + std::to_string(line) +
                                     ":" + std::to_string(column) + ": " + detail),
          kind_(kind), line_(line), column_(column), detail_(detail) {}

    QasmErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    /// Construct name for UnsupportedStatement / gate name for UnknownGate.
    const std::string &detail() const noexcept { return detail_; }

  private:
    QasmErrorKind kind_;
    int line_;
    int column_;
    std::string detail_;
};

/// Canonical kind for a QASM gate name, including aliases.
inline std::optional<GateKind> lookup_gate(std::string_view name) {
    for (const auto &info : kGateTable) {
        if (info.name == name) {
            return info.kind;
        }
    }
    if (name == "u1" || name == "phase") {
        return GateKind::P;
    }
    if (name == "cu1" || name == "cphase") {
        return GateKind::CP;
    }
    if (name == "CX") {
        return GateKind::CX;
    }
    return std::nullopt;
}

namespace qasm_detail {

enum class Tok {
    Ident,
    Number,
    String,
    Semi,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Arrow,
    EqEq,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    double number = 0.0;
    bool integral = false;
    int line = 1;
    int column = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                t.kind = Tok::End;
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (is_ident_start(c)) {
                const std::size_t start = pos_;
                while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
                    advance();
                }
                t.kind = Tok::Ident;
                t.text = std::string(src_.substr(start, pos_ - start));
            } else if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
                lex_number(t);
            } else if (c == '"') {
                advance();
                const std::size_t start = pos_;
                while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                    advance();
                }
                if (pos_ >= src_.size() || src_[pos_] != '"') {
                    throw QasmError(QasmErrorKind::SyntaxError, t.line, t.column,
                                    "unterminated string");
                }
                t.kind = Tok::String;
                t.text = std::string(src_.substr(start, pos_ - start));
                advance();
            } else {
                t.text = std::string(1, c);
                advance();
                switch (c) {
                case ';':
                    t.kind = Tok::Semi;
                    break;
                case ',':
                    t.kind = Tok::Comma;
                    break;
                case '(':
                    t.kind = Tok::LParen;
                    break;
                case ')':
                    t.kind = Tok::RParen;
                    break;
                case '[':
                    t.kind = Tok::LBracket;
                    break;
                case ']':
                    t.kind = Tok::RBracket;
                    break;
                case '{':
                    t.kind = Tok::LBrace;
                    break;
                case '}':
                    t.kind = Tok::RBrace;
                    break;
                case '+':
                    t.kind = Tok::Plus;
                    break;
                case '*':
                    t.kind = Tok::Star;
                    break;
                case '/':
                    t.kind = Tok::Slash;
                    break;
                case '^':
                    t.kind = Tok::Caret;
                    break;
                case '-':
                    if (pos_ < src_.size() && src_[pos_] == '>') {
                        advance();
                        t.kind = Tok::Arrow;
                        t.text = "->";
                    } else {
                        t.kind = Tok::Minus;
                    }
                    break;
                case '=':
                    if (pos_ < src_.size() && src_[pos_] == '=') {
                        advance();
                        t.kind = Tok::EqEq;
                        t.text = "==";
                        break;
                    }
                    [[fallthrough]];
                default:
                    throw QasmError(QasmErrorKind::SyntaxError, t.line, t.column,
                                    "unexpected character '" + t.text + "'");
                }
            }
            out.push_back(std::move(t));
        }
    }

  private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                return;
            }
        }
    }

    void lex_number(Token &t) {
        const std::size_t start = pos_;
        bool integral = true;
        while (pos_ < src_.size() && is_digit(src_[pos_])) {
            advance();
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            integral = false;
            advance();
            while (pos_ < src_.size() && is_digit(src_[pos_])) {
                advance();
            }
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) {
                ++look;
            }
            if (look < src_.size() && is_digit(src_[look])) {
                integral = false;
                while (pos_ < look) {
                    advance();
                }
                while (pos_ < src_.size() && is_digit(src_[pos_])) {
                    advance();
                }
            }
        }
        t.kind = Tok::Number;
        t.text = std::string(src_.substr(start, pos_ - start));
        t.integral = integral;
        const char *first = t.text.data();
        const char *last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, t.number);
        if (ec != std::errc{} || ptr != last) {
            throw QasmError(QasmErrorKind::SyntaxError, t.line, t.column,
                            "malformed number '" + t.text + "'");
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

/// Parameter expression. Leaves are constants or formal parameters of the
/// enclosing gate definition.
struct Expr {
    enum class Op { Const, Param, Neg, Add, Sub, Mul, Div, Pow, Func };
    Op op = Op::Const;
    double value = 0.0;
    int param = -1;
    std::string func;
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;

    double eval(const std::vector<double> &env) const {
        switch (op) {
        case Op::Const:
            return value;
        case Op::Param:
            return env[static_cast<std::size_t>(param)];
        case Op::Neg:
            return -lhs->eval(env);
        case Op::Add:
            return lhs->eval(env) + rhs->eval(env);
        case Op::Sub:
            return lhs->eval(env) - rhs->eval(env);
        case Op::Mul:
            return lhs->eval(env) * rhs->eval(env);
        case Op::Div:
            return lhs->eval(env) / rhs->eval(env);
        case Op::Pow:
            return std::pow(lhs->eval(env), rhs->eval(env));
        case Op::Func: {
            const double x = lhs->eval(env);
            if (func == "sin") return std::sin(x);
            if (func == "cos") return std::cos(x);
            if (func == "tan") return std::tan(x);
            if (func == "exp") return std::exp(x);
            if (func == "ln") return std::log(x);
            return std::sqrt(x);
        }
        }
        return 0.0;
    }
};

using ExprPtr = std::shared_ptr<const Expr>;

/// One call inside a gate body, operands as formal-argument indices.
struct BodyCall {
    std::string name;
    std::vector<ExprPtr> params;
    std::vector<int> args;
    int line;
    int column;
};

struct GateDef {
    std::vector<std::string> params;
    std::vector<std::string> args;
    std::vector<BodyCall> body;
};

struct Operand {
    bool whole_register;
    int index;
};

inline constexpr int kMaxExprDepth = 200;
inline constexpr std::size_t kMaxExpandedOps = std::size_t{1} << 26;

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Circuit run() {
        expect_header();
        while (peek().kind != Tok::End) {
            statement();
        }
        if (!have_qreg_) {
            // An empty program still needs a register to define N.
            fail(peek(), "missing qreg declaration");
        }
        return std::move(circuit_);
    }

  private:
    const Token &peek() const { return toks_[pos_]; }
    const Token &next() {
        const Token &t = toks_[pos_];
        if (t.kind != Tok::End) {
            ++pos_;
        }
        return t;
    }
    bool accept(Tok k) {
        if (peek().kind == k) {
            next();
            return true;
        }
        return false;
    }
    [[noreturn]] static void fail(const Token &t, const std::string &msg) {
        throw QasmError(QasmErrorKind::SyntaxError, t.line, t.column, msg);
    }
    [[noreturn]] static void unsupported(const Token &t, const std::string &what) {
        throw QasmError(QasmErrorKind::UnsupportedStatement, t.line, t.column, what);
    }
    const Token &expect(Tok k, const char *what) {
        if (peek().kind != k) {
            const Token &t = peek();
            fail(t, std::string("expected ") + what + ", found '" +
                        (t.kind == Tok::End ? std::string("end of input") : t.text) + "'");
        }
        return next();
    }

    int expect_int(const char *what) {
        const Token &t = expect(Tok::Number, what);
        if (!t.integral || t.number > 2147483647.0) {
            fail(t, std::string("expected non-negative integer ") + what);
        }
        return static_cast<int>(t.number);
    }

    void expect_header() {
        const Token &t = peek();
        if (t.kind != Tok::Ident || t.text != "OPENQASM") {
            fail(t, "expected 'OPENQASM 2.0;' header");
        }
        next();
        const Token &v = expect(Tok::Number, "version number");
        if (v.text != "2.0" && v.text != "2") {
            unsupported(v, "OPENQASM " + v.text);
        }
        expect(Tok::Semi, "';'");
    }

    void statement() {
        const Token &t = peek();
        if (t.kind != Tok::Ident) {
            fail(t, "expected statement, found '" + t.text + "'");
        }
        const std::string &word = t.text;
        if (word == "include") {
            next();
            const Token &file = expect(Tok::String, "include file name");
            if (file.text != "qelib1.inc") {
                unsupported(file, "include \"" + file.text + "\"");
            }
            expect(Tok::Semi, "';'");
        } else if (word == "qreg") {
            qreg();
        } else if (word == "creg" || word == "measure" || word == "reset" || word == "if" ||
                   word == "opaque" || word == "OPENQASM") {
            unsupported(t, word);
        } else if (word == "barrier") {
            next();
            operand_list();
            expect(Tok::Semi, "';'");
        } else if (word == "gate") {
            gate_definition();
        } else {
            gate_call();
        }
    }

    void qreg() {
        const Token &kw = next();
        if (have_qreg_) {
            unsupported(kw, "multiple qreg");
        }
        reg_name_ = expect(Tok::Ident, "register name").text;
        expect(Tok::LBracket, "'['");
        const Token &size_tok = peek();
        const int size = expect_int("register size");
        if (size < 1) {
            fail(size_tok, "register size must be positive");
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::Semi, "';'");
        have_qreg_ = true;
        circuit_.num_qubits = size;
    }

    // ---- expressions -----------------------------------------------------

    ExprPtr make_const(double v) {
        auto e = std::make_shared<Expr>();
        e->value = v;
        return e;
    }
    ExprPtr make_bin(Expr::Op op, ExprPtr a, ExprPtr b) {
        auto e = std::make_shared<Expr>();
        e->op = op;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }

    ExprPtr expression(const std::vector<std::string> *formals, int depth = 0) {
        if (depth > kMaxExprDepth) {
            fail(peek(), "expression nested too deeply");
        }
        ExprPtr e = term(formals, depth);
        for (;;) {
            if (accept(Tok::Plus)) {
                e = make_bin(Expr::Op::Add, e, term(formals, depth));
            } else if (accept(Tok::Minus)) {
                e = make_bin(Expr::Op::Sub, e, term(formals, depth));
            } else {
                return e;
            }
        }
    }

    ExprPtr term(const std::vector<std::string> *formals, int depth) {
        ExprPtr e = factor(formals, depth);
        for (;;) {
            if (accept(Tok::Star)) {
                e = make_bin(Expr::Op::Mul, e, factor(formals, depth));
            } else if (accept(Tok::Slash)) {
                e = make_bin(Expr::Op::Div, e, factor(formals, depth));
            } else {
                return e;
            }
        }
    }

    ExprPtr factor(const std::vector<std::string> *formals, int depth) {
        ExprPtr base = unary(formals, depth);
        if (accept(Tok::Caret)) {
            return make_bin(Expr::Op::Pow, base, factor(formals, depth + 1));
        }
        return base;
    }

    ExprPtr unary(const std::vector<std::string> *formals, int depth) {
        if (depth > kMaxExprDepth) {
            fail(peek(), "expression nested too deeply");
        }
        if (accept(Tok::Minus)) {
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::Neg;
            e->lhs = unary(formals, depth + 1);
            return e;
        }
        if (accept(Tok::Plus)) {
            return unary(formals, depth + 1);
        }
        return primary(formals, depth);
    }

    ExprPtr primary(const std::vector<std::string> *formals, int depth) {
        const Token &t = peek();
        if (t.kind == Tok::Number) {
            next();
            return make_const(t.number);
        }
        if (t.kind == Tok::LParen) {
            next();
            ExprPtr e = expression(formals, depth + 1);
            expect(Tok::RParen, "')'");
            return e;
        }
        if (t.kind == Tok::Ident) {
            const std::string name = t.text;
            next();
            if (name == "pi") {
                return make_const(std::numbers::pi);
            }
            if (name == "sin" || name == "cos" || name == "tan" || name == "exp" ||
                name == "ln" || name == "sqrt") {
                expect(Tok::LParen, "'('");
                auto e = std::make_shared<Expr>();
                e->op = Expr::Op::Func;
                e->func = name;
                e->lhs = expression(formals, depth + 1);
                expect(Tok::RParen, "')'");
                return e;
            }
            if (formals) {
                for (std::size_t i = 0; i < formals->size(); ++i) {
                    if ((*formals)[i] == name) {
                        auto e = std::make_shared<Expr>();
                        e->op = Expr::Op::Param;
                        e->param = static_cast<int>(i);
                        return e;
                    }
                }
            }
            fail(t, "unknown identifier '" + name + "' in expression");
        }
        fail(t, "expected expression, found '" + (t.kind == Tok::End ? std::string("end of input") : t.text) + "'");
    }

    std::vector<ExprPtr> param_list(const std::vector<std::string> *formals) {
        std::vector<ExprPtr> out;
        if (!accept(Tok::LParen)) {
            return out;
        }
        if (accept(Tok::RParen)) {
            return out;
        }
        do {
            out.push_back(expression(formals));
        } while (accept(Tok::Comma));
        expect(Tok::RParen, "')'");
        return out;
    }

    // ---- operands --------------------------------------------------------

    Operand operand() {
        const Token &t = expect(Tok::Ident, "qubit operand");
        if (!have_qreg_) {
            fail(t, "operand before qreg declaration");
        }
        if (t.text != reg_name_) {
            fail(t, "unknown register '" + t.text + "'");
        }
        if (!accept(Tok::LBracket)) {
            return {true, -1};
        }
        const Token &idx_tok = peek();
        const int idx = expect_int("qubit index");
        if (idx >= circuit_.num_qubits) {
            fail(idx_tok, "qubit index " + std::to_string(idx) + " out of range for " +
                              reg_name_ + "[" + std::to_string(circuit_.num_qubits) + "]");
        }
        expect(Tok::RBracket, "']'");
        return {false, idx};
    }

    std::vector<Operand> operand_list() {
        std::vector<Operand> out;
        do {
            out.push_back(operand());
        } while (accept(Tok::Comma));
        return out;
    }

    // ---- gates -----------------------------------------------------------

    struct Resolved {
        bool builtin;
        GateKind kind;
        const GateDef *def;
        std::size_t num_params;
        std::size_t num_args;
    };

    Resolved resolve(const Token &at, const std::string &name) const {
        if (auto it = defs_.find(name); it != defs_.end()) {
            return {false, GateKind::H, &it->second, it->second.params.size(),
                    it->second.args.size()};
        }
        if (auto kind = lookup_gate(name)) {
            return {true, *kind, nullptr, static_cast<std::size_t>(param_count(*kind)),
                    static_cast<std::size_t>(arity(*kind))};
        }
        if (name == "measure" || name == "reset" || name == "creg" || name == "if" ||
            name == "opaque") {
            unsupported(at, name);
        }
        throw QasmError(QasmErrorKind::UnknownGate, at.line, at.column, name);
    }

    void gate_definition() {
        next(); // 'gate'
        const Token &name_tok = expect(Tok::Ident, "gate name");
        const std::string name = name_tok.text;
        if (defs_.count(name) || lookup_gate(name)) {
            fail(name_tok, "gate '" + name + "' already defined");
        }
        GateDef def;
        if (accept(Tok::LParen)) {
            if (!accept(Tok::RParen)) {
                do {
                    def.params.push_back(expect(Tok::Ident, "parameter name").text);
                } while (accept(Tok::Comma));
                expect(Tok::RParen, "')'");
            }
        }
        do {
            def.args.push_back(expect(Tok::Ident, "argument name").text);
        } while (accept(Tok::Comma));
        expect(Tok::LBrace, "'{'");
        while (!accept(Tok::RBrace)) {
            const Token &call_tok = expect(Tok::Ident, "gate call in definition body");
            if (call_tok.text == "barrier") {
                while (peek().kind != Tok::Semi && peek().kind != Tok::End) {
                    next();
                }
                expect(Tok::Semi, "';'");
                continue;
            }
            BodyCall call{call_tok.text, {}, {}, call_tok.line, call_tok.column};
            const Resolved r = resolve(call_tok, call.name);
            call.params = param_list(&def.params);
            do {
                const Token &arg = expect(Tok::Ident, "argument");
                int found = -1;
                for (std::size_t i = 0; i < def.args.size(); ++i) {
                    if (def.args[i] == arg.text) {
                        found = static_cast<int>(i);
                    }
                }
                if (found < 0) {
                    fail(arg, "unknown argument '" + arg.text + "' in gate body");
                }
                call.args.push_back(found);
            } while (accept(Tok::Comma));
            expect(Tok::Semi, "';'");
            check_shape(call_tok, call.name, r, call.params.size(), call.args.size());
            for (std::size_t i = 0; i < call.args.size(); ++i) {
                for (std::size_t j = i + 1; j < call.args.size(); ++j) {
                    if (call.args[i] == call.args[j]) {
                        fail(call_tok, "argument repeated in call to '" + call.name + "'");
                    }
                }
            }
            def.body.push_back(std::move(call));
        }
        defs_.emplace(name, std::move(def));
    }

    static void check_shape(const Token &at, const std::string &name, const Resolved &r,
                            std::size_t nparams, std::size_t nargs) {
        if (nparams != r.num_params) {
            fail(at, "'" + name + "' expects " + std::to_string(r.num_params) +
                         " parameter(s), got " + std::to_string(nparams));
        }
        if (nargs != r.num_args) {
            fail(at, "'" + name + "' expects " + std::to_string(r.num_args) +
                         " qubit argument(s), got " + std::to_string(nargs));
        }
    }

    void emit(const Token &at, GateKind kind, std::vector<double> params, std::vector<int> qubits) {
        if (circuit_.ops.size() >= kMaxExpandedOps) {
            fail(at, "program expands to too many gates");
        }
        circuit_.ops.push_back(GateOp{kind, std::move(params), std::move(qubits)});
    }

    void expand(const Token &at, const Resolved &r, const std::vector<double> &params,
                const std::vector<int> &qubits) {
        if (r.builtin) {
            emit(at, r.kind, params, qubits);
            return;
        }
        for (const BodyCall &call : r.def->body) {
            std::vector<double> values;
            values.reserve(call.params.size());
            for (const auto &e : call.params) {
                values.push_back(e->eval(params));
            }
            std::vector<int> mapped;
            mapped.reserve(call.args.size());
            for (int a : call.args) {
                mapped.push_back(qubits[static_cast<std::size_t>(a)]);
            }
            const Resolved inner = resolve(at, call.name);
            expand(at, inner, values, mapped);
        }
    }

    void gate_call() {
        const Token &name_tok = next();
        const std::string name = name_tok.text;
        const Resolved r = resolve(name_tok, name);
        const auto exprs = param_list(nullptr);
        const std::vector<double> no_env;
        std::vector<double> params;
        for (const auto &e : exprs) {
            params.push_back(e->eval(no_env));
        }
        const auto operands = operand_list();
        expect(Tok::Semi, "';'");
        check_shape(name_tok, name, r, params.size(), operands.size());

        bool broadcast = false;
        for (const auto &o : operands) {
            broadcast = broadcast || o.whole_register;
        }
        const int reps = broadcast ? circuit_.num_qubits : 1;
        for (int k = 0; k < reps; ++k) {
            std::vector<int> qubits;
            for (const auto &o : operands) {
                qubits.push_back(o.whole_register ? k : o.index);
            }
            for (std::size_t i = 0; i < qubits.size(); ++i) {
                for (std::size_t j = i + 1; j < qubits.size(); ++j) {
                    if (qubits[i] == qubits[j]) {
                        fail(name_tok, "qubit " + std::to_string(qubits[i]) +
                                           " used twice in '" + name + "'");
                    }
                }
            }
            expand(name_tok, r, params, qubits);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Circuit circuit_;
    bool have_qreg_ = false;
    std::string reg_name_;
    std::map<std::string, GateDef> defs_;
};

inline std::string format_real(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

} // namespace qasm_detail

/// Parses the accepted subset into a circuit with N = qreg size. Throws
/// QasmError on the first failure.
inline Circuit parse_qasm(std::string_view text) {
    qasm_detail::Lexer lexer(text);
    qasm_detail::Parser parser(lexer.run());
    return parser.run();
}

/// Deterministic text for `c`; parse_qasm(emit_qasm(c)) reproduces the ops
/// exactly. Reals are written with 17 significant digits.
inline std::string emit_qasm(const Circuit &c) {
    std::string out = "OPENQASM 2.0;\nqreg q[" + std::to_string(c.num_qubits) + "];\n";
    for (const auto &op : c.ops) {
        out += gate_name(op.kind);
        if (!op.params.empty()) {
            out += '(';
            for (std::size_t i = 0; i < op.params.size(); ++i) {
                if (i) {
                    out += ',';
                }
                out += qasm_detail::format_real(op.params[i]);
            }
            out += ')';
        }
        out += ' ';
        for (std::size_t i = 0; i < op.qubits.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += "q[" + std::to_string(op.qubits[i]) + "]";
        }
        out += ";\n";
    }
    return out;
}

} // namespace qsv
