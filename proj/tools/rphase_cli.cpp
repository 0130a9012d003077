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

// rphase command-line driver: synth | count | verify | rewrite | table.
// Exit codes: 0 success, 1 verification failed, 2 usage error, 3 internal error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rphase/rphase.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CircuitDeleter {
  void operator()(rphase_circuit* c) const { rphase_circuit_free(c); }
};
using CircuitPtr = std::unique_ptr<rphase_circuit, CircuitDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rphase_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries a status out of a command body.
struct Failure {
  int exit_code;
};

int exit_code_for(rphase_status s) {
  switch (s) {
    case RPHASE_OK: return kExitOk;
    case RPHASE_E_INTERNAL:
    case RPHASE_E_OVERFLOW: return kExitInternal;
    default: return kExitUsage;
  }
}

void check(rphase_status s) {
  if (s == RPHASE_OK) return;
  std::cerr << "rphase: " << rphase_status_string(s) << ": " << rphase_last_error() << "\n";
  throw Failure{exit_code_for(s)};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "rphase: cannot open " << path << "\n";
    throw Failure{kExitUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "rphase: cannot write " << path << "\n";
    throw Failure{kExitUsage};
  }
}

CircuitPtr parse(const std::string& text, bool strict) {
  rphase_circuit* c = nullptr;
  check(rphase_circuit_parse(text.c_str(), strict ? 1 : 0, &c));
  return CircuitPtr(c);
}

std::string emit(const rphase_circuit* c, const std::string& format) {
  char* s = nullptr;
  check(rphase_circuit_emit(c, format.c_str(), &s));
  return StringPtr(s).get();
}

std::string count(const rphase_circuit* c) {
  char* s = nullptr;
  check(rphase_count(c, &s));
  return StringPtr(s).get();
}

const char* opt_cstr(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

// Reports go to stdout when the circuit goes to a file, otherwise stderr.
std::ostream& report_stream(const std::string& out_path) {
  return out_path.empty() || out_path == "-" ? std::cerr : std::cout;
}

struct SynthArgs {
  std::string gate;
  int n = 0;
  int k = 0;
  std::string ancilla;
  int variant = 0;
  std::string u;
  std::string out;
  std::string format = "qasm";
};

int run_synth(const SynthArgs& a) {
  rphase_synth_options o{};
  o.gate = a.gate.c_str();
  o.n = a.n;
  o.k = a.k;
  o.ancilla = opt_cstr(a.ancilla);
  o.variant = a.variant;
  o.u = opt_cstr(a.u);
  rphase_circuit* lowered = nullptr;
  rphase_circuit* markers = nullptr;
  check(rphase_synthesize(&o, &lowered, &markers));
  CircuitPtr l(lowered), m(markers);
  // JSON carries the marker-level form; QASM the lowered circuit.
  const rphase_circuit* shown = a.format == "json" ? m.get() : l.get();
  write_output(a.out, emit(shown, a.format));
  report_stream(a.out) << count(l.get()) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string in;
  std::string target = "tof";
  int n = 0;
  std::string layout;
  std::string ancilla;
  std::string equivalence = "exact";
  std::string xprime;
  std::string backend;
};

int run_verify(const VerifyArgs& a) {
  CircuitPtr c = parse(read_input(a.in), false);
  std::string backend = a.backend;
  if (backend.empty()) {
    if (const char* env = std::getenv("RPHASE_BACKEND")) backend = env;
  }
  rphase_verify_options o{};
  o.target = a.target.c_str();
  o.n = a.n;
  o.layout = opt_cstr(a.layout);
  o.ancilla = opt_cstr(a.ancilla);
  o.equivalence = a.equivalence.c_str();
  o.xprime = opt_cstr(a.xprime);
  o.backend = opt_cstr(backend);
  char* report = nullptr;
  int satisfied = 0;
  check(rphase_verify(c.get(), &o, &report, &satisfied));
  std::cout << StringPtr(report).get() << "\n";
  return satisfied ? kExitOk : kExitFailed;
}

struct RewriteArgs {
  std::string in;
  std::string rules = "prop1,prop2";
  std::string out;
  std::string format;
};

int run_rewrite(const RewriteArgs& a) {
  const std::string text = read_input(a.in);
  CircuitPtr c = parse(text, false);
  rphase_circuit* out = nullptr;
  char* summary = nullptr;
  check(rphase_rewrite(c.get(), a.rules.c_str(), &out, &summary));
  CircuitPtr r(out);
  StringPtr s(summary);
  const std::string summary_text = s.get();
  const bool json_in = text.find_first_not_of(" \t\r\n") != std::string::npos &&
                       text[text.find_first_not_of(" \t\r\n")] == '{';
  const std::string format = a.format.empty() ? (json_in ? "json" : "qasm") : a.format;
  // An untouched circuit is echoed verbatim.
  const bool unchanged = summary_text.find("\"replacements\":0,\"cancelled_gates\":0") !=
                         std::string::npos;
  write_output(a.out, unchanged && a.format.empty() ? text : emit(r.get(), format));
  report_stream(a.out) << summary_text << "\n";
  return kExitOk;
}

int run_table(const std::vector<int>& ns, bool csv) {
  char* text = nullptr;
  check(rphase_table(ns.empty() ? nullptr : ns.data(), ns.size(), csv ? 1 : 0, &text));
  std::cout << StringPtr(text).get();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rphase: relative-phase Toffoli synthesis, counting, verification and rewriting"};
  app.require_subcommand(1);

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "Generate a catalog construction");
  synth->add_option("--gate", sa.gate, "Catalog name (see --list)");
  synth->add_option("--n", sa.n, "Number of qubits of the target gate");
  synth->add_option("--k", sa.k, "Block size for two_block");
  synth->add_option("--ancilla", sa.ancilla, "clean or dirty")
      ->check(CLI::IsMember({"clean", "dirty"}));
  synth->add_option("--variant", sa.variant, "Variant index (margolus, ccix)");
  synth->add_option("--u", sa.u, "Controlled operation for cnu_*: x, z or p")
      ->check(CLI::IsMember({"x", "z", "p"}));
  synth->add_option("--out", sa.out, "Output path (default stdout)");
  synth->add_option("--format", sa.format, "qasm (lowered) or json (marker level)")
      ->check(CLI::IsMember({"qasm", "json"}));
  bool list = false;
  synth->add_flag("--list", list, "List catalog names");

  std::string count_in;
  auto* cnt = app.add_subcommand("count", "Print the resource report of a circuit");
  cnt->add_option("input", count_in, "QASM or JSON file, - for stdin")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a circuit against a target gate");
  verify->add_option("input", va.in, "QASM or JSON file, - for stdin")->required();
  verify->add_option("--target", va.target, "tof or identity")
      ->check(CLI::IsMember({"tof", "identity"}));
  verify->add_option("--n", va.n, "Number of qubits of the target gate");
  verify->add_option("--layout", va.layout,
                     "Per-qubit roles: c control, n negative control, t target, "
                     "0 clean ancilla, x dirty ancilla, i idle");
  verify->add_option("--ancilla", va.ancilla, "Treat non-primary qubits as clean or dirty")
      ->check(CLI::IsMember({"clean", "dirty"}));
  verify->add_option("--class,--equivalence", va.equivalence,
                     "exact, global, relative or special")
      ->check(CLI::IsMember({"exact", "global", "relative", "special"}));
  verify->add_option("--xprime", va.xprime, "Special-form qubits, comma separated");
  verify->add_option("--backend", va.backend, "ring or float (default: RPHASE_BACKEND, auto)")
      ->check(CLI::IsMember({"ring", "float"}));

  RewriteArgs ra;
  auto* rw = app.add_subcommand("rewrite", "Apply conjugation replacements and cancellation");
  rw->add_option("input", ra.in, "QASM or JSON file, - for stdin")->required();
  rw->add_option("--rules", ra.rules, "Comma list of prop1, prop2, prop3, cancel");
  rw->add_option("--out", ra.out, "Output path (default stdout)");
  rw->add_option("--format", ra.format, "qasm or json (default: input format)")
      ->check(CLI::IsMember({"qasm", "json"}));

  std::vector<int> ns;
  bool csv = false;
  auto* table = app.add_subcommand("table", "Print construction costs for TOF^n");
  table->add_option("--n-list", ns, "Sizes, e.g. 4,5,6,11")->delimiter(',');
  table->add_flag("--csv", csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*synth) {
      if (list) {
        char* names = nullptr;
        check(rphase_catalog(&names));
        std::cout << StringPtr(names).get() << "\n";
        return kExitOk;
      }
      if (sa.gate.empty()) {
        std::cerr << "rphase: synth needs --gate (or --list)\n";
        return kExitUsage;
      }
      return run_synth(sa);
    }
    if (*cnt) {
      CircuitPtr c = parse(read_input(count_in), false);
      std::cout << count(c.get()) << "\n";
      return kExitOk;
    }
    if (*verify) return run_verify(va);
    if (*rw) return run_rewrite(ra);
    if (*table) return run_table(ns, csv);
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "rphase: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
