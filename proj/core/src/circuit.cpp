// Copyright 2026 The Abstraqt Authors
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

#include "abstraqt/circuit.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>

#include "abstraqt/errors.hpp"

namespace abstraqt {

namespace {

using std::numbers::pi;
using cd = std::complex<double>;

struct GateInfo {
    std::string_view name;
    std::size_t arity;
    std::size_t params;
};

constexpr GateInfo kGates[] = {
    {"id", 1, 0}, {"x", 1, 0},  {"y", 1, 0},   {"z", 1, 0},    {"h", 1, 0},   {"s", 1, 0},
    {"sdg", 1, 0}, {"t", 1, 0}, {"tdg", 1, 0}, {"cx", 2, 0},   {"cz", 2, 0},  {"swap", 2, 0},
    {"ccx", 3, 0}, {"rx", 1, 1}, {"ry", 1, 1}, {"rz", 1, 1},
};

const GateInfo *find_gate(std::string_view name) {
    for (const auto &g : kGates) {
        if (g.name == name) {
            return &g;
        }
    }
    return nullptr;
}

bool is_rotation(std::string_view name) {
    return name == "rx" || name == "ry" || name == "rz";
}

double snap_angle(double theta) {
    double quarter = pi / 2;
    double k = std::round(theta / quarter);
    double reduced = theta - k * quarter;
    if (std::abs(reduced) <= 1e-12) {
        long long m = ((long long)k % 4 + 4) % 4;
        return (double)m * quarter;
    }
    return theta;
}

Eigen::MatrixXcd controlled(const Eigen::MatrixXcd &u, std::size_t controls) {
    std::size_t dim = (std::size_t)u.rows() << controls;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity((Eigen::Index)dim, (Eigen::Index)dim);
    m.bottomRightCorner(u.rows(), u.cols()) = u;
    return m;
}

std::string param_key(const Gate &gate, const std::vector<double> &params) {
    std::string key = gate.name;
    for (double p : params) {
        key += ':' + std::to_string(std::bit_cast<std::uint64_t>(p));
    }
    return key;
}

// --- lexer -----------------------------------------------------------------

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {
    }

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            t.kind = Tok::Ident;
            while (pos_ < src_.size() && (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_')) {
                t.text += advance();
            }
            return t;
        }
        if (std::isdigit((unsigned char)c) || (c == '.' && pos_ + 1 < src_.size() && std::isdigit((unsigned char)src_[pos_ + 1]))) {
            t.kind = Tok::Number;
            while (pos_ < src_.size() && (std::isdigit((unsigned char)src_[pos_]) || src_[pos_] == '.')) {
                t.text += advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t save = pos_;
                std::string exp(1, src_[pos_]);
                std::size_t p = pos_ + 1;
                if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) {
                    exp += src_[p++];
                }
                if (p < src_.size() && std::isdigit((unsigned char)src_[p])) {
                    while (pos_ < p) {
                        advance();
                    }
                    t.text += exp;
                    while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) {
                        t.text += advance();
                    }
                } else {
                    pos_ = save;
                }
            }
            return t;
        }
        if (c == '"') {
            t.kind = Tok::String;
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                t.text += advance();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw ParseError(ParseErrorKind::Syntax, t.line, t.column, "unterminated string");
            }
            advance();
            return t;
        }
        t.kind = Tok::Symbol;
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            t.text = "->";
            advance();
            advance();
            return t;
        }
        if (std::string_view(";,()[]+-*/").find(c) != std::string_view::npos) {
            t.text = std::string(1, advance());
            return t;
        }
        throw ParseError(ParseErrorKind::Syntax, t.line, t.column, std::string("unexpected character '") + c + "'");
    }

   private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace((unsigned char)c)) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// --- parser ----------------------------------------------------------------

class Parser {
   public:
    explicit Parser(std::string_view src) : lex_(src) {
        cur_ = lex_.next();
    }

    Circuit parse() {
        Circuit c;
        bool have_qreg = false;
        while (cur_.kind != Tok::End) {
            Token head = expect_ident("statement");
            if (head.text == "OPENQASM") {
                if (cur_.kind != Tok::Number) {
                    fail(cur_, "expected version number");
                }
                take();
                expect_symbol(";");
            } else if (head.text == "include") {
                if (cur_.kind != Tok::String) {
                    fail(cur_, "expected file name string");
                }
                take();
                expect_symbol(";");
            } else if (head.text == "qreg") {
                if (have_qreg) {
                    fail(head, "only one qreg is supported");
                }
                Token name = expect_ident("register name");
                expect_symbol("[");
                Token size = expect_number_token();
                std::size_t n = to_index(size);
                if (n == 0) {
                    fail(size, "register must have at least one qubit");
                }
                expect_symbol("]");
                expect_symbol(";");
                reg_ = name.text;
                c.num_qubits = n;
                have_qreg = true;
            } else if (head.text == "creg") {
                expect_ident("register name");
                expect_symbol("[");
                expect_number_token();
                expect_symbol("]");
                expect_symbol(";");
            } else if (head.text == "barrier") {
                require_qreg(have_qreg, head);
                parse_args(c.num_qubits);
                expect_symbol(";");
            } else if (head.text == "measure") {
                require_qreg(have_qreg, head);
                auto [q, tok] = parse_qubit(c.num_qubits);
                (void)tok;
                if (is_symbol("->")) {
                    take();
                    expect_ident("classical register");
                    expect_symbol("[");
                    expect_number_token();
                    expect_symbol("]");
                }
                expect_symbol(";");
                c.gates.push_back(Gate::measure(q));
            } else if (head.text == "project") {
                require_qreg(have_qreg, head);
                auto [q, tok] = parse_qubit(c.num_qubits);
                (void)tok;
                expect_symbol("->");
                ProjectOutcome outcome;
                if (cur_.kind == Tok::Number && (cur_.text == "0" || cur_.text == "1")) {
                    outcome = cur_.text == "0" ? ProjectOutcome::Zero : ProjectOutcome::One;
                } else if (is_symbol("+")) {
                    outcome = ProjectOutcome::Plus;
                } else if (is_symbol("-")) {
                    outcome = ProjectOutcome::Minus;
                } else {
                    fail(cur_, "expected 0, 1, + or - after '->'");
                }
                take();
                expect_symbol(";");
                c.gates.push_back(Gate::project(q, outcome));
            } else {
                require_qreg(have_qreg, head);
                c.gates.push_back(parse_gate(head, c.num_qubits));
            }
        }
        if (!have_qreg) {
            throw ParseError(ParseErrorKind::Syntax, cur_.line, cur_.column, "missing qreg declaration");
        }
        return c;
    }

   private:
    [[noreturn]] void fail(const Token &t, const std::string &msg, ParseErrorKind kind = ParseErrorKind::Syntax) {
        throw ParseError(kind, t.line, t.column, msg);
    }

    Token take() {
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }

    bool is_symbol(std::string_view s) const {
        return cur_.kind == Tok::Symbol && cur_.text == s;
    }

    void expect_symbol(std::string_view s) {
        if (!is_symbol(s)) {
            fail(cur_, "expected '" + std::string(s) + "'" + found());
        }
        take();
    }

    Token expect_ident(const char *what) {
        if (cur_.kind != Tok::Ident) {
            fail(cur_, std::string("expected ") + what + found());
        }
        return take();
    }

    Token expect_number_token() {
        if (cur_.kind != Tok::Number) {
            fail(cur_, "expected integer" + found());
        }
        return take();
    }

    std::string found() const {
        if (cur_.kind == Tok::End) {
            return ", found end of input";
        }
        return ", found '" + cur_.text + "'";
    }

    std::size_t to_index(const Token &t) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(t, "expected non-negative integer, found '" + t.text + "'");
        }
        return v;
    }

    void require_qreg(bool have, const Token &t) {
        if (!have) {
            fail(t, "statement before qreg declaration");
        }
    }

    std::pair<std::size_t, Token> parse_qubit(std::size_t n) {
        Token name = expect_ident("qubit");
        if (name.text != reg_) {
            fail(name, "unknown register '" + name.text + "'");
        }
        expect_symbol("[");
        Token idx = expect_number_token();
        std::size_t q = to_index(idx);
        if (q >= n) {
            fail(idx, "qubit index " + idx.text + " out of range for " + reg_ + "[" + std::to_string(n) + "]",
                 ParseErrorKind::IndexOutOfRange);
        }
        expect_symbol("]");
        return {q, name};
    }

    std::vector<std::pair<std::size_t, Token>> parse_args(std::size_t n) {
        std::vector<std::pair<std::size_t, Token>> args;
        args.push_back(parse_qubit(n));
        while (is_symbol(",")) {
            take();
            args.push_back(parse_qubit(n));
        }
        return args;
    }

    Gate parse_gate(const Token &head, std::size_t n) {
        std::string name = head.text;
        if (name == "i") {
            name = "id";
        }
        const GateInfo *info = find_gate(name);
        if (!info) {
            fail(head, "unknown gate '" + head.text + "'", ParseErrorKind::UnknownGate);
        }
        std::vector<double> params;
        if (is_symbol("(")) {
            take();
            params.push_back(parse_expr());
            while (is_symbol(",")) {
                take();
                params.push_back(parse_expr());
            }
            expect_symbol(")");
        }
        if (params.size() != info->params) {
            fail(head, "gate '" + name + "' takes " + std::to_string(info->params) + " parameter(s), got " +
                           std::to_string(params.size()),
                 ParseErrorKind::Arity);
        }
        auto args = parse_args(n);
        if (args.size() != info->arity) {
            fail(head, "gate '" + name + "' acts on " + std::to_string(info->arity) + " qubit(s), got " +
                           std::to_string(args.size()),
                 ParseErrorKind::Arity);
        }
        std::vector<std::size_t> targets;
        for (std::size_t i = 0; i < args.size(); i++) {
            for (std::size_t j = 0; j < i; j++) {
                if (args[i].first == args[j].first) {
                    fail(args[i].second, "qubit " + std::to_string(args[i].first) + " used twice",
                         ParseErrorKind::DuplicateTarget);
                }
            }
            targets.push_back(args[i].first);
        }
        expect_symbol(";");
        return Gate::unitary(name, std::move(targets), std::move(params));
    }

    double parse_expr() {
        Token start = cur_;
        double v = parse_term();
        while (is_symbol("+") || is_symbol("-")) {
            bool plus = take().text == "+";
            double rhs = parse_term();
            v = plus ? v + rhs : v - rhs;
        }
        if (!std::isfinite(v)) {
            fail(start, "angle is not finite");
        }
        return v;
    }

    double parse_term() {
        double v = parse_unary();
        while (is_symbol("*") || is_symbol("/")) {
            bool mul = take().text == "*";
            double rhs = parse_unary();
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    double parse_unary() {
        if (is_symbol("-")) {
            take();
            return -parse_unary();
        }
        if (is_symbol("+")) {
            take();
            return parse_unary();
        }
        if (is_symbol("(")) {
            take();
            double v = parse_expr();
            expect_symbol(")");
            return v;
        }
        if (cur_.kind == Tok::Ident && cur_.text == "pi") {
            take();
            return pi;
        }
        if (cur_.kind == Tok::Number) {
            Token t = take();
            double v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
                fail(t, "malformed number '" + t.text + "'");
            }
            return v;
        }
        fail(cur_, "expected angle expression" + found());
    }

    Lexer lex_;
    Token cur_;
    std::string reg_;
};

std::string format_param(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const char *parse_error_code(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax:
            return "syntax";
        case ParseErrorKind::UnknownGate:
            return "unknown-gate";
        case ParseErrorKind::IndexOutOfRange:
            return "index-out-of-range";
        case ParseErrorKind::Arity:
            return "arity";
        case ParseErrorKind::DuplicateTarget:
            return "duplicate-target";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {
}

Gate Gate::unitary(std::string name, std::vector<std::size_t> targets, std::vector<double> params) {
    Gate g;
    g.name = std::move(name);
    g.targets = std::move(targets);
    g.params = std::move(params);
    g.kind = GateKind::Unitary;
    return g;
}

Gate Gate::measure(std::size_t qubit) {
    Gate g;
    g.name = "measure";
    g.targets = {qubit};
    g.kind = GateKind::MeasureBoth;
    return g;
}

Gate Gate::project(std::size_t qubit, ProjectOutcome outcome) {
    Gate g;
    g.name = "project";
    g.targets = {qubit};
    g.kind = GateKind::Project;
    g.outcome = outcome;
    return g;
}

bool Circuit::has_measurements() const {
    for (const auto &g : gates) {
        if (g.kind != GateKind::Unitary) {
            return true;
        }
    }
    return false;
}

bool is_builtin_gate(std::string_view name) {
    return find_gate(name) != nullptr;
}

std::size_t gate_arity(std::string_view name) {
    const GateInfo *g = find_gate(name);
    if (!g) {
        throw UsageError("unknown gate '" + std::string(name) + "'");
    }
    return g->arity;
}

std::size_t gate_param_count(std::string_view name) {
    const GateInfo *g = find_gate(name);
    if (!g) {
        throw UsageError("unknown gate '" + std::string(name) + "'");
    }
    return g->params;
}

Eigen::MatrixXcd gate_matrix(std::string_view name, const std::vector<double> &params) {
    if (params.size() != gate_param_count(name)) {
        throw UsageError("wrong parameter count for gate '" + std::string(name) + "'");
    }
    const cd i(0, 1);
    const double r = 1 / std::numbers::sqrt2;
    Eigen::MatrixXcd m(2, 2);
    if (name == "id") {
        m << 1, 0, 0, 1;
    } else if (name == "x") {
        m << 0, 1, 1, 0;
    } else if (name == "y") {
        m << 0, -i, i, 0;
    } else if (name == "z") {
        m << 1, 0, 0, -1;
    } else if (name == "h") {
        m << r, r, r, -r;
    } else if (name == "s") {
        m << 1, 0, 0, i;
    } else if (name == "sdg") {
        m << 1, 0, 0, -i;
    } else if (name == "t") {
        m << 1, 0, 0, std::polar(1.0, pi / 4);
    } else if (name == "tdg") {
        m << 1, 0, 0, std::polar(1.0, -pi / 4);
    } else if (name == "rx") {
        double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
        m << c, -i * s, -i * s, c;
    } else if (name == "ry") {
        double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
        m << c, -s, s, c;
    } else if (name == "rz") {
        m << std::polar(1.0, -params[0] / 2), 0, 0, std::polar(1.0, params[0] / 2);
    } else if (name == "cx") {
        Eigen::MatrixXcd x(2, 2);
        x << 0, 1, 1, 0;
        return controlled(x, 1);
    } else if (name == "cz") {
        Eigen::MatrixXcd z(2, 2);
        z << 1, 0, 0, -1;
        return controlled(z, 1);
    } else if (name == "swap") {
        Eigen::MatrixXcd sw = Eigen::MatrixXcd::Zero(4, 4);
        sw(0, 0) = sw(1, 2) = sw(2, 1) = sw(3, 3) = 1;
        return sw;
    } else if (name == "ccx") {
        Eigen::MatrixXcd x(2, 2);
        x << 0, 1, 1, 0;
        return controlled(x, 2);
    }
    return m;
}

const GateAction &builtin_action(const Gate &gate) {
    if (gate.kind != GateKind::Unitary) {
        throw UsageError("builtin_action: '" + gate.name + "' is not a unitary gate");
    }
    if (!is_builtin_gate(gate.name)) {
        throw UsageError("unknown gate '" + gate.name + "'");
    }
    std::vector<double> params = gate.params;
    if (is_rotation(gate.name)) {
        for (double &p : params) {
            p = snap_angle(p);
        }
    }
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<GateAction>> cache;
    std::string key = param_key(gate, params);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto action = std::make_unique<GateAction>(classify_gate(gate_matrix(gate.name, params)));
        it = cache.emplace(key, std::move(action)).first;
    }
    return *it->second;
}

void validate_gate(const Gate &gate, std::size_t num_qubits) {
    if (gate.kind == GateKind::Unitary) {
        if (!is_builtin_gate(gate.name)) {
            throw UsageError("unknown gate '" + gate.name + "'");
        }
        if (gate.params.size() != gate_param_count(gate.name)) {
            throw UsageError("wrong parameter count for gate '" + gate.name + "'");
        }
        for (double p : gate.params) {
            if (!std::isfinite(p)) {
                throw UsageError("gate angle is not finite");
            }
        }
        check_targets(gate_arity(gate.name), gate.targets, num_qubits);
    } else {
        check_targets(1, gate.targets, num_qubits);
    }
}

Circuit inverse(const Circuit &circuit) {
    Circuit out;
    out.num_qubits = circuit.num_qubits;
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        if (it->kind != GateKind::Unitary) {
            throw UsageError("inverse: circuit contains measurements");
        }
        Gate g = *it;
        if (g.name == "s") {
            g.name = "sdg";
        } else if (g.name == "sdg") {
            g.name = "s";
        } else if (g.name == "t") {
            g.name = "tdg";
        } else if (g.name == "tdg") {
            g.name = "t";
        } else if (is_rotation(g.name)) {
            for (double &p : g.params) {
                p = -p;
            }
        }
        out.gates.push_back(std::move(g));
    }
    return out;
}

ConcretePauli measurement_pauli(const Gate &gate, std::size_t num_qubits) {
    if (gate.kind == GateKind::Unitary || gate.targets.size() != 1) {
        throw UsageError("measurement_pauli: not a measurement");
    }
    std::size_t q = gate.targets[0];
    if (gate.kind == GateKind::MeasureBoth) {
        return ConcretePauli::single(num_qubits, q, PauliLetter::Z);
    }
    switch (gate.outcome) {
        case ProjectOutcome::Zero:
            return ConcretePauli::single(num_qubits, q, PauliLetter::Z);
        case ProjectOutcome::One:
            return ConcretePauli::single(num_qubits, q, PauliLetter::Z, 2);
        case ProjectOutcome::Plus:
            return ConcretePauli::single(num_qubits, q, PauliLetter::X);
        case ProjectOutcome::Minus:
            return ConcretePauli::single(num_qubits, q, PauliLetter::X, 2);
    }
    throw InvariantError("measurement_pauli: bad outcome");
}

Circuit parse_circuit(std::string_view text) {
    return Parser(text).parse();
}

std::string emit_circuit(const Circuit &circuit) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(circuit.num_qubits) + "];\n";
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::MeasureBoth) {
            out += "measure q[" + std::to_string(g.targets[0]) + "];\n";
            continue;
        }
        if (g.kind == GateKind::Project) {
            static const char *outcomes[] = {"0", "1", "+", "-"};
            out += "project q[" + std::to_string(g.targets[0]) + "] -> " + outcomes[(int)g.outcome] + ";\n";
            continue;
        }
        out += g.name;
        if (!g.params.empty()) {
            out += "(";
            for (std::size_t i = 0; i < g.params.size(); i++) {
                out += (i ? "," : "") + format_param(g.params[i]);
            }
            out += ")";
        }
        for (std::size_t i = 0; i < g.targets.size(); i++) {
            out += (i ? ",q[" : " q[") + std::to_string(g.targets[i]) + "]";
        }
        out += ";\n";
    }
    return out;
}

}  // namespace abstraqt
