// Copyright 2026 The qinst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "qinst/error.hpp"
#include "qinst/io/qasm.hpp"

namespace qinst::io {
namespace {

using ir::Gate;
namespace gates = ir::gates;
constexpr double kPi = std::numbers::pi;

struct Spelling {
  int num_params;
  int num_qubits;
  std::function<std::pair<Gate, std::vector<double>>(const std::vector<double>&)> lower;
};

// Maps a QASM spelling onto a registry gate.
const std::map<std::string, Spelling>& spellings() {
  static const std::map<std::string, Spelling> table = [] {
    std::map<std::string, Spelling> t;
    auto same = [](const Gate& g) {
      return [g](const std::vector<double>& p) { return std::make_pair(g, p); };
    };
    auto phase = [](double lambda) {
      return [lambda](const std::vector<double>&) {
        return std::make_pair(gates::u3(), std::vector<double>{0.0, 0.0, lambda});
      };
    };
    auto u3 = [](const std::vector<double>& p) { return std::make_pair(gates::u3(), p); };
    t["u3"] = {3, 1, u3};
    t["u"] = {3, 1, u3};
    t["U"] = {3, 1, u3};
    t["u2"] = {2, 1, [](const std::vector<double>& p) {
                 return std::make_pair(gates::u3(), std::vector<double>{kPi / 2, p[0], p[1]});
               }};
    auto u1 = [](const std::vector<double>& p) {
      return std::make_pair(gates::u3(), std::vector<double>{0.0, 0.0, p[0]});
    };
    t["u1"] = {1, 1, u1};
    t["p"] = {1, 1, u1};
    t["rx"] = {1, 1, same(gates::rx())};
    t["ry"] = {1, 1, same(gates::ry())};
    t["rz"] = {1, 1, same(gates::rz())};
    t["x"] = {0, 1, same(gates::x())};
    t["h"] = {0, 1, same(gates::h())};
    t["sx"] = {0, 1, same(gates::sx())};
    t["y"] = {0, 1, [](const std::vector<double>&) {
                return std::make_pair(gates::u3(), std::vector<double>{kPi, kPi / 2, kPi / 2});
              }};
    t["z"] = {0, 1, phase(kPi)};
    t["s"] = {0, 1, phase(kPi / 2)};
    t["sdg"] = {0, 1, phase(-kPi / 2)};
    t["t"] = {0, 1, phase(kPi / 4)};
    t["tdg"] = {0, 1, phase(-kPi / 4)};
    t["id"] = {0, 1, phase(0.0)};
    t["cx"] = {0, 2, same(gates::cx())};
    t["CX"] = {0, 2, same(gates::cx())};
    t["cz"] = {0, 2, same(gates::cz())};
    t["rzz"] = {1, 2, same(gates::rzz())};
    t["rxx"] = {1, 2, same(gates::rxx())};
    t["xx"] = {0, 2, same(gates::xx())};
    t["zz"] = {0, 2, same(gates::zz())};
    t["sqisw"] = {0, 2, same(gates::sqisw())};
    t["syc"] = {0, 2, same(gates::syc())};
    return t;
  }();
  return table;
}

struct Register {
  int offset;
  int size;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ir::Circuit parse() {
    if (peek_is_identifier("OPENQASM")) header();
    while (peek().kind != TokenKind::end) statement();
    return ir::Circuit(num_qubits_, std::move(ops_));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool peek_is_identifier(std::string_view name) const {
    return peek().kind == TokenKind::identifier && peek().text == name;
  }
  bool peek_is_symbol(std::string_view s) const {
    return peek().kind == TokenKind::symbol && peek().text == s;
  }
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(message, at.line, at.column);
  }
  [[noreturn]] void unsupported(const Token& at, const std::string& message) const {
    throw UnsupportedError(message, at.line, at.column);
  }
  static std::string describe(const Token& t) {
    return t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'";
  }
  void expect_symbol(std::string_view s) {
    if (!peek_is_symbol(s)) {
      fail(peek(), "expected '" + std::string(s) + "', found " + describe(peek()));
    }
    next();
  }
  const Token& expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    }
    return next();
  }

  void header() {
    next();
    const Token& version = peek();
    if (version.kind != TokenKind::real && version.kind != TokenKind::integer) {
      fail(version, "expected a version number, found " + describe(version));
    }
    next();
    if (version.text != "2.0" && version.text != "2") {
      unsupported(version, "only OPENQASM 2.0 is supported, found " + version.text);
    }
    expect_symbol(";");
  }

  void statement() {
    const Token& head = peek();
    if (head.kind != TokenKind::identifier) {
      fail(head, "expected a statement, found " + describe(head));
    }
    const std::string& word = head.text;
    if (word == "OPENQASM") fail(head, "duplicate OPENQASM header");
    if (word == "include") return include();
    if (word == "qreg") return qreg();
    if (word == "creg") return creg();
    if (word == "opaque") return opaque();
    if (word == "gate") unsupported(head, "gate definitions are not supported");
    if (word == "measure") unsupported(head, "measure is not supported");
    if (word == "reset") unsupported(head, "reset is not supported");
    if (word == "barrier") unsupported(head, "barrier is not supported");
    if (word == "if") unsupported(head, "classically controlled gates are not supported");
    application();
  }

  void include() {
    next();
    const Token& file = expect(TokenKind::string, "a file name");
    if (file.text != "qelib1.inc") {
      unsupported(file, "only qelib1.inc may be included, found \"" + file.text + "\"");
    }
    expect_symbol(";");
  }

  std::pair<const Token*, int> declaration() {
    next();
    const Token& name = expect(TokenKind::identifier, "a register name");
    expect_symbol("[");
    const Token& size = expect(TokenKind::integer, "a register size");
    expect_symbol("]");
    expect_symbol(";");
    const long n = std::stol(size.text);
    if (n < 1 || n > 1 << 20) fail(size, "register size out of range: " + size.text);
    if (qregs_.count(name.text) || cregs_.count(name.text)) {
      fail(name, "register '" + name.text + "' is already declared");
    }
    return {&name, static_cast<int>(n)};
  }

  void qreg() {
    auto [name, size] = declaration();
    qregs_[name->text] = {num_qubits_, size};
    num_qubits_ += size;
  }

  void creg() {
    auto [name, size] = declaration();
    cregs_[name->text] = size;
  }

  void opaque() {
    next();
    const Token& name = expect(TokenKind::identifier, "a gate name");
    const auto it = spellings().find(name.text);
    if (it == spellings().end()) {
      unsupported(name, "opaque gate '" + name.text + "' has no known matrix");
    }
    int params = 0;
    if (peek_is_symbol("(")) {
      next();
      if (!peek_is_symbol(")")) params = identifier_list();
      expect_symbol(")");
    }
    const int qubits = identifier_list();
    expect_symbol(";");
    if (params != it->second.num_params || qubits != it->second.num_qubits) {
      fail(name, "opaque declaration of '" + name.text + "' does not match its registry signature");
    }
  }

  int identifier_list() {
    int count = 0;
    do {
      if (count) next();
      expect(TokenKind::identifier, "an identifier");
      ++count;
    } while (peek_is_symbol(","));
    return count;
  }

  // One qubit argument: either a single index or a whole register.
  struct Argument {
    const Token* at;
    int offset;
    int size;
    bool whole;
  };

  Argument argument() {
    const Token& name = expect(TokenKind::identifier, "a qubit argument");
    const auto it = qregs_.find(name.text);
    if (it == qregs_.end()) {
      if (cregs_.count(name.text)) fail(name, "'" + name.text + "' is a classical register");
      fail(name, "undeclared register '" + name.text + "'");
    }
    if (!peek_is_symbol("[")) return {&name, it->second.offset, it->second.size, true};
    next();
    const Token& index = expect(TokenKind::integer, "a qubit index");
    expect_symbol("]");
    const long i = std::stol(index.text);
    if (i < 0 || i >= it->second.size) {
      fail(index, "index " + index.text + " out of range for " + name.text + "[" +
                      std::to_string(it->second.size) + "]");
    }
    return {&name, it->second.offset + static_cast<int>(i), 1, false};
  }

  void application() {
    const Token& name = next();
    const auto it = spellings().find(name.text);
    if (it == spellings().end()) unsupported(name, "unknown gate '" + name.text + "'");
    const Spelling& spelling = it->second;

    std::vector<double> params;
    if (peek_is_symbol("(")) {
      next();
      if (!peek_is_symbol(")")) {
        params.push_back(expression());
        while (peek_is_symbol(",")) {
          next();
          params.push_back(expression());
        }
      }
      expect_symbol(")");
    }
    if (static_cast<int>(params.size()) != spelling.num_params) {
      fail(name, "'" + name.text + "' takes " + std::to_string(spelling.num_params) +
                     " parameters, got " + std::to_string(params.size()));
    }

    std::vector<Argument> args{argument()};
    while (peek_is_symbol(",")) {
      next();
      args.push_back(argument());
    }
    expect_symbol(";");
    if (static_cast<int>(args.size()) != spelling.num_qubits) {
      fail(name, "'" + name.text + "' acts on " + std::to_string(spelling.num_qubits) +
                     " qubits, got " + std::to_string(args.size()));
    }

    int repeat = 1;
    for (const auto& a : args) {
      if (!a.whole) continue;
      if (repeat > 1 && a.size != repeat) {
        fail(*a.at, "registers of different sizes in one broadcast");
      }
      repeat = a.size;
    }
    auto [gate, values] = spelling.lower(params);
    for (int r = 0; r < repeat; ++r) {
      std::vector<int> qubits;
      for (const auto& a : args) qubits.push_back(a.whole ? a.offset + r : a.offset);
      try {
        ops_.emplace_back(gate, ir::Location(std::span<const int>(qubits)), values);
      } catch (const Error& e) {
        fail(name, e.what());
      }
    }
  }

  // expression := term (('+' | '-') term)*
  double expression() {
    double v = term();
    while (peek_is_symbol("+") || peek_is_symbol("-")) {
      const bool plus = next().text == "+";
      const double rhs = term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  double term() {
    double v = unary();
    while (peek_is_symbol("*") || peek_is_symbol("/")) {
      const Token& op = next();
      const double rhs = unary();
      if (op.text == "/" && rhs == 0.0) fail(op, "division by zero");
      v = op.text == "*" ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary() {
    if (peek_is_symbol("-")) {
      next();
      return -unary();
    }
    if (peek_is_symbol("+")) {
      next();
      return unary();
    }
    return power();
  }

  double power() {
    const double base = primary();
    if (peek_is_symbol("^")) {
      next();
      return std::pow(base, unary());
    }
    return base;
  }

  double primary() {
    const Token& t = next();
    if (t.kind == TokenKind::real || t.kind == TokenKind::integer) {
      return std::stod(t.text);
    }
    if (t.kind == TokenKind::symbol && t.text == "(") {
      const double v = expression();
      expect_symbol(")");
      return v;
    }
    if (t.kind == TokenKind::identifier) {
      if (t.text == "pi") return kPi;
      static const std::map<std::string, double (*)(double)> functions = {
          {"sin", [](double x) { return std::sin(x); }},
          {"cos", [](double x) { return std::cos(x); }},
          {"tan", [](double x) { return std::tan(x); }},
          {"exp", [](double x) { return std::exp(x); }},
          {"ln", [](double x) { return std::log(x); }},
          {"sqrt", [](double x) { return std::sqrt(x); }},
      };
      const auto f = functions.find(t.text);
      if (f == functions.end()) fail(t, "unknown identifier '" + t.text + "' in expression");
      expect_symbol("(");
      const double arg = expression();
      expect_symbol(")");
      const double v = f->second(arg);
      if (!std::isfinite(v)) fail(t, t.text + " is not finite here");
      return v;
    }
    fail(t, "expected an expression, found " + describe(t));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, Register> qregs_;
  std::map<std::string, int> cregs_;
  int num_qubits_ = 0;
  std::vector<ir::Operation> ops_;
};

}  // namespace

ir::Circuit parse_qasm(std::string_view text) {
  return Parser(tokenize(text)).parse();
}

}  // namespace qinst::io
