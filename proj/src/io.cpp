// Copyright 2026 The rphase Authors
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

#include "rphase/io.hpp"

#include <cctype>
#include <cmath>
#include <json.hpp>
#include <map>
#include <sstream>

#include "rphase/error.hpp"

namespace rphase {

using nlohmann::ordered_json;

namespace {

constexpr const char* kMetaPrefix = "rphase:";

// ---------------------------------------------------------------- emit

bool plain_qasm(const Gate& g) {
  if (is_marker(g.kind) || g.has_negative_control()) return false;
  if (g.kind == GateKind::TOF) return g.controls.size() == 2;
  return true;
}

std::string angle_text(int pi_quarters) {
  if (pi_quarters == 0) return "0";
  std::string sign = pi_quarters < 0 ? "-" : "";
  int k = std::abs(pi_quarters);
  int den = 4;
  while (k % 2 == 0 && den > 1) {
    k /= 2;
    den /= 2;
  }
  std::string num = k == 1 ? "pi" : std::to_string(k) + "*pi";
  return sign + num + (den == 1 ? "" : "/" + std::to_string(den));
}

std::string q(QubitId id) { return "q[" + std::to_string(id.index) + "]"; }

ordered_json gate_json(const Gate& g) {
  ordered_json j;
  j["kind"] = gate_name(g.kind);
  j["dagger"] = g.dagger;
  ordered_json cs = ordered_json::array();
  for (const auto& c : g.controls) cs.push_back({c.qubit.index, c.positive});
  j["controls"] = cs;
  ordered_json ts = ordered_json::array();
  for (auto t : g.targets) ts.push_back(t.index);
  j["targets"] = ts;
  j["angle"] = g.angle;
  return j;
}

void emit_plain(std::ostream& os, const Gate& g) {
  switch (g.kind) {
    case GateKind::RY:
      os << "ry(" << angle_text(g.angle) << ") " << q(g.targets[0]) << ";\n";
      return;
    case GateKind::CNOT:
    case GateKind::CZ:
      os << gate_name(g.kind) << " " << q(g.controls[0].qubit) << "," << q(g.targets[0])
         << ";\n";
      return;
    case GateKind::TOF:
      os << "ccx " << q(g.controls[0].qubit) << "," << q(g.controls[1].qubit) << ","
         << q(g.targets[0]) << ";\n";
      return;
    default:
      os << gate_name(g.kind) << " " << q(g.targets[0]) << ";\n";
  }
}

void emit_gate(std::ostream& os, const Gate& g, std::uint32_t width) {
  if (plain_qasm(g)) return emit_plain(os, g);
  ordered_json meta;
  meta["begin"] = true;
  ordered_json body = gate_json(g);
  for (auto& [k, v] : body.items()) meta[k] = v;
  os << "// " << kMetaPrefix << " " << meta.dump() << "\n";
  Circuit one(width);
  one.add(g);
  if (g.kind == GateKind::TOF && g.controls.size() > 2) {
    os << "// expansion needs ancillae; see the rphase lowering pass\n";
  } else {
    const Circuit expanded = lower(one, LowerPolicy{MultiControl::none, true});
    for (const auto& e : expanded.gates())
      emit_gate(os, e, width);
  }
  os << "// " << kMetaPrefix << " {\"end\":true}\n";
}

// ---------------------------------------------------------------- lexer

enum class Tok { ident, number, string, symbol, meta, eof };

struct Token {
  Tok type;
  std::string text;
  int line, col;
};

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ", column " +
                                     std::to_string(col) + ": " + msg);
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < s.size(); ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
      std::size_t end = s.find('\n', i);
      if (end == std::string::npos) end = s.size();
      std::string body = s.substr(i + 2, end - i - 2);
      std::size_t p = body.find_first_not_of(" \t");
      if (p != std::string::npos && body.compare(p, 7, kMetaPrefix) == 0)
        out.push_back({Tok::meta, body.substr(p + 7), l, cl});
      advance(end - i);
      continue;
    }
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      std::size_t end = s.find("*/", i + 2);
      if (end == std::string::npos) fail(l, cl, "unterminated comment");
      advance(end + 2 - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.'))
        ++j;
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        ++j;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Tok::number, s.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t end = s.find('"', i + 1);
      if (end == std::string::npos) fail(l, cl, "unterminated string");
      out.push_back({Tok::string, s.substr(i + 1, end - i - 1), l, cl});
      advance(end + 1 - i);
      continue;
    }
    if (std::string("[](),;+-*/").find(c) != std::string::npos) {
      out.push_back({Tok::symbol, std::string(1, c), l, cl});
      advance(1);
      continue;
    }
    fail(l, cl, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::eof, "", line, col});
  return out;
}

// ---------------------------------------------------------------- parser

struct PendingBlock {
  Gate gate;
  int line, col;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, bool strict) : t_(std::move(toks)), strict_(strict) {}

  Circuit run() {
    while (peek().type != Tok::eof) statement();
    if (block_) fail(block_->line, block_->col, "metadata block is not closed");
    Circuit c(width_, roles_.empty() ? std::vector<Role>(width_, Role::primary) : roles_);
    c.set_gates(std::move(gates_));
    return c;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_++]; }

  const Token& expect(Tok type, const std::string& text = "") {
    const Token& k = peek();
    if (k.type != type || (!text.empty() && k.text != text))
      fail(k.line, k.col,
           "expected " + (text.empty() ? std::string("token") : "'" + text + "'") +
               ", found '" + (k.type == Tok::eof ? std::string("end of input") : k.text) +
               "'");
    return next();
  }

  bool accept_symbol(const std::string& s) {
    if (peek().type == Tok::symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer(const Token& k) {
    if (k.type != Tok::number || k.text.find_first_not_of("0123456789") != std::string::npos)
      fail(k.line, k.col, "expected an integer, found '" + k.text + "'");
    return std::stoull(k.text);
  }

  void statement() {
    const Token& k = peek();
    if (k.type == Tok::meta) return meta(next());
    if (k.type != Tok::ident) fail(k.line, k.col, "expected a statement, found '" + k.text + "'");
    const std::string& w = k.text;
    if (w == "OPENQASM") {
      next();
      const Token& v = expect(Tok::number);
      if (v.text != "2.0" && v.text != "2")
        fail(v.line, v.col, "only OpenQASM 2.0 is supported");
      expect(Tok::symbol, ";");
      return;
    }
    if (w == "include") {
      next();
      expect(Tok::string);
      expect(Tok::symbol, ";");
      return;
    }
    if (w == "qreg" || w == "creg") {
      next();
      const Token& name = expect(Tok::ident);
      expect(Tok::symbol, "[");
      std::uint64_t n = integer(next());
      expect(Tok::symbol, "]");
      expect(Tok::symbol, ";");
      if (w == "qreg") {
        if (regs_.count(name.text)) fail(name.line, name.col, "duplicate register " + name.text);
        regs_[name.text] = {width_, static_cast<std::uint32_t>(n)};
        width_ += static_cast<std::uint32_t>(n);
      }
      return;
    }
    if (w == "barrier") {
      next();
      while (!accept_symbol(";")) {
        if (peek().type == Tok::eof) fail(peek().line, peek().col, "expected ';'");
        next();
      }
      return;
    }
    gate_statement();
  }

  QubitId qubit_arg() {
    const Token& name = expect(Tok::ident);
    auto it = regs_.find(name.text);
    if (it == regs_.end()) fail(name.line, name.col, "unknown register '" + name.text + "'");
    if (!accept_symbol("["))
      fail(peek().line, peek().col, "register broadcast is not supported");
    const Token& idx = next();
    std::uint64_t i = integer(idx);
    expect(Tok::symbol, "]");
    if (i >= it->second.second) fail(idx.line, idx.col, "qubit index out of range");
    return QubitId{it->second.first + static_cast<std::uint32_t>(i)};
  }

  // expr := term (('+'|'-') term)*
  double expr() {
    double v = term();
    for (;;) {
      if (accept_symbol("+")) v += term();
      else if (accept_symbol("-")) v -= term();
      else return v;
    }
  }
  double term() {
    double v = factor();
    for (;;) {
      if (accept_symbol("*")) {
        v *= factor();
      } else if (accept_symbol("/")) {
        const Token& k = peek();
        double d = factor();
        if (d == 0) fail(k.line, k.col, "division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  double factor() {
    if (accept_symbol("-")) return -factor();
    if (accept_symbol("+")) return factor();
    if (accept_symbol("(")) {
      double v = expr();
      expect(Tok::symbol, ")");
      return v;
    }
    const Token& k = next();
    if (k.type == Tok::ident && k.text == "pi") return M_PI;
    if (k.type == Tok::number) {
      try {
        return std::stod(k.text);
      } catch (const std::exception&) {
        fail(k.line, k.col, "bad number '" + k.text + "'");
      }
    }
    fail(k.line, k.col, "bad angle expression near '" + k.text + "'");
  }

  void gate_statement() {
    const Token name = next();
    static const std::map<std::string, std::pair<GateKind, int>> kinds = {
        {"x", {GateKind::X, 1}},     {"y", {GateKind::Y, 1}},   {"z", {GateKind::Z, 1}},
        {"s", {GateKind::P, 1}},     {"sdg", {GateKind::Pdg, 1}}, {"t", {GateKind::T, 1}},
        {"tdg", {GateKind::Tdg, 1}}, {"h", {GateKind::H, 1}},   {"ry", {GateKind::RY, 1}},
        {"cx", {GateKind::CNOT, 2}}, {"CX", {GateKind::CNOT, 2}}, {"cz", {GateKind::CZ, 2}},
        {"ccx", {GateKind::TOF, 3}},
    };
    auto it = kinds.find(name.text);
    if (it == kinds.end())
      throw Error(Errc::unsupported_gate, "line " + std::to_string(name.line) + ", column " +
                                              std::to_string(name.col) +
                                              ": unsupported gate '" + name.text + "'");
    const GateKind kind = it->second.first;
    int angle = 0;
    if (kind == GateKind::RY) {
      expect(Tok::symbol, "(");
      const Token& at = peek();
      double v = expr();
      expect(Tok::symbol, ")");
      double k = v / (M_PI / 4.0);
      double r = std::round(k);
      if (std::abs(k - r) > 1e-9)
        throw Error(Errc::unsupported_gate,
                    "line " + std::to_string(at.line) + ", column " + std::to_string(at.col) +
                        ": ry angle must be a multiple of pi/4");
      angle = static_cast<int>(r);
    }
    std::vector<QubitId> args{qubit_arg()};
    while (accept_symbol(",")) args.push_back(qubit_arg());
    expect(Tok::symbol, ";");
    if (static_cast<int>(args.size()) != it->second.second)
      fail(name.line, name.col, "'" + name.text + "' takes " +
                                    std::to_string(it->second.second) + " qubit argument(s)");
    Gate g;
    if (kind == GateKind::TOF) {
      g = Gate::tof(std::vector<std::uint32_t>{args[0].index, args[1].index}, args[2].index);
    } else if (kind == GateKind::CNOT || kind == GateKind::CZ) {
      g = kind == GateKind::CNOT ? Gate::cx(args[0].index, args[1].index)
                                 : Gate::cz(args[0].index, args[1].index);
    } else {
      g = Gate::single(kind, args[0].index);
      g.angle = angle;
    }
    push(g, name);
  }

  void push(const Gate& g, const Token& at) {
    if (block_) return;  // expansion of a metadata block
    try {
      validate_gate(g, width_);
    } catch (const Error& e) {
      fail(at.line, at.col, e.what());
    }
    gates_.push_back(g);
  }

  void meta(const Token& k) {
    if (strict_) fail(k.line, k.col, "metadata comment not allowed in strict mode");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(k.text);
    } catch (const std::exception& e) {
      fail(k.line, k.col, std::string("bad metadata JSON: ") + e.what());
    }
    if (j.contains("roles")) {
      std::vector<Role> roles;
      for (const auto& r : j["roles"]) {
        auto role = role_from_name(r.get<std::string>());
        if (!role) fail(k.line, k.col, "unknown role");
        roles.push_back(*role);
      }
      if (roles.size() != width_) fail(k.line, k.col, "role list does not match qreg width");
      roles_ = roles;
      return;
    }
    if (j.contains("end")) {
      if (!block_) fail(k.line, k.col, "metadata end without begin");
      Gate g = block_->gate;
      block_.reset();
      gates_.push_back(g);
      return;
    }
    if (j.contains("begin")) {
      if (block_) fail(k.line, k.col, "nested metadata block");
      Gate g;
      try {
        g = gate_from_json(j);
        validate_gate(g, width_);
      } catch (const Error& e) {
        fail(k.line, k.col, e.what());
      } catch (const std::exception& e) {
        fail(k.line, k.col, std::string("bad gate metadata: ") + e.what());
      }
      block_ = PendingBlock{g, k.line, k.col};
      return;
    }
    fail(k.line, k.col, "unrecognised metadata");
  }

 public:
  static Gate gate_from_json(const nlohmann::json& j) {
    auto kind = gate_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw Error(Errc::unsupported_gate, "unsupported gate '" +
                                                       j.at("kind").get<std::string>() + "'");
    Gate g;
    g.kind = *kind;
    g.dagger = j.value("dagger", false);
    g.angle = j.value("angle", 0);
    for (const auto& c : j.at("controls"))
      g.controls.push_back(Control{QubitId{c.at(0).get<std::uint32_t>()}, c.at(1).get<bool>()});
    for (const auto& t : j.at("targets")) g.targets.push_back(QubitId{t.get<std::uint32_t>()});
    return g;
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  bool strict_;
  std::map<std::string, std::pair<std::uint32_t, std::uint32_t>> regs_;
  std::uint32_t width_ = 0;
  std::vector<Role> roles_;
  std::vector<Gate> gates_;
  std::optional<PendingBlock> block_;
};

}  // namespace

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.width() << "];\n";
  bool all_primary = true;
  for (auto r : c.roles()) all_primary = all_primary && r == Role::primary;
  if (!all_primary) {
    ordered_json roles = ordered_json::array();
    for (auto r : c.roles()) roles.push_back(role_name(r));
    os << "// " << kMetaPrefix << " " << ordered_json{{"roles", roles}}.dump() << "\n";
  }
  for (const auto& g : c.gates()) emit_gate(os, g, c.width());
  return os.str();
}

Circuit parse_qasm(const std::string& text, bool strict) {
  return Parser(lex(text), strict).run();
}

std::string emit_json(const Circuit& c) {
  ordered_json j;
  j["width"] = c.width();
  ordered_json roles = ordered_json::array();
  for (auto r : c.roles()) roles.push_back(role_name(r));
  j["roles"] = roles;
  ordered_json gates = ordered_json::array();
  for (const auto& g : c.gates()) gates.push_back(gate_json(g));
  j["gates"] = gates;
  return j.dump(1) + "\n";
}

Circuit parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("bad circuit JSON: ") + e.what());
  }
  try {
    auto width = j.at("width").get<std::uint32_t>();
    std::vector<Role> roles(width, Role::primary);
    if (j.contains("roles")) {
      roles.clear();
      for (const auto& r : j["roles"]) {
        auto role = role_from_name(r.get<std::string>());
        if (!role) throw Error(Errc::parse_error, "unknown role '" + r.get<std::string>() + "'");
        roles.push_back(*role);
      }
    }
    Circuit c(width, roles);
    std::vector<Gate> gates;
    for (const auto& g : j.at("gates")) gates.push_back(Parser::gate_from_json(g));
    c.set_gates(std::move(gates));
    return c;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::parse_error, std::string("bad circuit JSON: ") + e.what());
  }
}

Circuit parse_circuit(const std::string& text, bool strict) {
  std::size_t p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') return parse_json(text);
  return parse_qasm(text, strict);
}

}  // namespace rphase
