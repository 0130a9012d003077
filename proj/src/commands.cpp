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

#include "rphase/commands.hpp"

#include <iomanip>
#include <sstream>

#include "rphase/constructions.hpp"
#include "rphase/error.hpp"

namespace rphase {

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

void expect_count(int n, const char* kind, const char* what, int got, int want) {
  if (got != want)
    throw Error(Errc::internal, "TOF" + std::to_string(n) + " " + kind + ": " + what +
                                    " counted " + std::to_string(got) + ", formula gives " +
                                    std::to_string(want));
}

}  // namespace

std::vector<TableRow> build_table(const std::vector<int>& ns) {
  std::vector<TableRow> rows;
  for (int n : ns) {
    if (n < 4) throw Error(Errc::invalid_argument, "table rows need n >= 4");
    const int anc = (n - 3 + 1) / 2;
    Construction clean = n == 4 ? tof4_clean() : n == 5 ? tof5_clean() : tofn_clean(n);
    Construction dirty = n == 4 ? tof4_dirty() : n == 5 ? tof5_dirty() : tofn_dirty(n);
    TableRow rc{n, "clean", count_resources(clean.circuit)};
    TableRow rd{n, "dirty", count_resources(dirty.circuit)};
    expect_count(n, "clean", "T", rc.counts.t, 8 * n - 17);
    expect_count(n, "clean", "CNOT", rc.counts.cnot, 6 * n - 12);
    expect_count(n, "clean", "H", rc.counts.h, 4 * n - 10);
    expect_count(n, "clean", "ancillae", rc.counts.ancilla_count, anc);
    const bool four = n == 4;
    // The single-ancilla dirty TOF4 is cheaper than the general formula.
    expect_count(n, "dirty", "T", rd.counts.t, four ? 16 : 8 * n - 16);
    expect_count(n, "dirty", "CNOT", rd.counts.cnot, four ? 14 : 8 * n - 20);
    expect_count(n, "dirty", "H", rd.counts.h, 4 * n - 10);
    expect_count(n, "dirty", "ancillae", rd.counts.ancilla_count, anc);
    expect_count(n, "clean", "P/Z", rc.counts.pz, 0);
    expect_count(n, "dirty", "P/Z", rd.counts.pz, 0);
    rows.push_back(rc);
    rows.push_back(rd);
  }
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows, bool csv) {
  std::ostringstream os;
  if (csv) {
    os << "gate,ancilla,t,cnot,h,pz,ancillae\n";
    for (const auto& r : rows)
      os << "TOF" << r.n << "," << r.ancilla << "," << r.counts.t << "," << r.counts.cnot << ","
         << r.counts.h << "," << r.counts.pz << "," << r.counts.ancilla_count << "\n";
    os << "TOFn,clean,8n-17,6n-12,4n-10,0,ceil((n-3)/2)\n";
    os << "TOFn,dirty,8n-16,8n-20,4n-10,0,ceil((n-3)/2)\n";
    return os.str();
  }
  auto line = [&](const std::string& g, const std::string& a, const std::string& t,
                  const std::string& cx, const std::string& h, const std::string& pz,
                  const std::string& anc) {
    os << std::left << std::setw(7) << g << std::setw(9) << a << std::right << std::setw(7) << t
       << std::setw(7) << cx << std::setw(7) << h << std::setw(6) << pz << "  " << anc << "\n";
  };
  line("gate", "ancilla", "T", "CNOT", "H", "P/Z", "ancillae");
  for (const auto& r : rows)
    line("TOF" + std::to_string(r.n), r.ancilla, std::to_string(r.counts.t),
         std::to_string(r.counts.cnot), std::to_string(r.counts.h), std::to_string(r.counts.pz),
         std::to_string(r.counts.ancilla_count));
  line("TOFn", "clean", "8n-17", "6n-12", "4n-10", "0", "ceil((n-3)/2)");
  line("TOFn", "dirty", "8n-16", "8n-20", "4n-10", "0", "ceil((n-3)/2)");
  return os.str();
}

std::pair<Circuit, TargetSpec> resolve_target(const Circuit& c, const LayoutRequest& req) {
  auto eq = equivalence_from_name(req.equivalence);
  if (!eq) throw Error(Errc::invalid_argument, "unknown equivalence class '" + req.equivalence + "'");
  if (req.op != "tof" && req.op != "identity")
    throw Error(Errc::invalid_argument, "target must be tof or identity");
  std::vector<Role> roles = c.roles();
  TargetSpec spec;
  spec.equivalence = *eq;
  std::vector<Control> controls;
  std::optional<QubitId> target;
  if (!req.layout.empty()) {
    auto letters = split(req.layout);
    if (letters.size() != c.width())
      throw Error(Errc::invalid_argument, "layout has " + std::to_string(letters.size()) +
                                              " entries for " + std::to_string(c.width()) +
                                              " qubits");
    for (std::uint32_t q = 0; q < c.width(); ++q) {
      const std::string& l = letters[q];
      roles[q] = Role::primary;
      if (l == "c" || l == "n") controls.push_back(Control{QubitId{q}, l == "c"});
      else if (l == "t") {
        if (target) throw Error(Errc::invalid_argument, "layout names two targets");
        target = QubitId{q};
      } else if (l == "0") roles[q] = Role::clean_ancilla;
      else if (l == "x") roles[q] = Role::dirty_ancilla;
      else if (l != "i") throw Error(Errc::invalid_argument, "unknown layout letter '" + l + "'");
    }
  } else if (req.op == "tof") {
    std::vector<QubitId> prim;
    for (std::uint32_t q = 0; q < c.width(); ++q)
      if (roles[q] == Role::primary) prim.push_back(QubitId{q});
    if (req.n > 0 && static_cast<int>(prim.size()) != req.n)
      throw Error(Errc::invalid_argument,
                  "circuit has " + std::to_string(prim.size()) + " primary qubits but n is " +
                      std::to_string(req.n) + "; give a layout");
    if (prim.size() < 1) throw Error(Errc::invalid_argument, "no primary qubits");
    target = prim.back();
    for (std::size_t i = 0; i + 1 < prim.size(); ++i) controls.push_back(Control{prim[i], true});
  }
  if (!req.ancilla.empty()) {
    auto r = role_from_name(req.ancilla);
    if (!r || *r == Role::primary) throw Error(Errc::invalid_argument, "ancilla must be clean or dirty");
    for (auto& role : roles)
      if (role != Role::primary) role = *r;
  }
  if (req.op == "identity") {
    spec = TargetSpec::identity();
    spec.equivalence = *eq;
  } else {
    if (!target) throw Error(Errc::invalid_argument, "layout has no target");
    if (req.n > 0 && static_cast<int>(controls.size()) + 1 != req.n)
      throw Error(Errc::invalid_argument, "layout does not describe a TOF" + std::to_string(req.n));
    spec.controls = controls;
    spec.target = target;
    if (*eq == Equivalence::relative_phase) spec.kind = TargetKind::rtof;
    if (*eq == Equivalence::special_form) spec.kind = TargetKind::srtof;
  }
  for (const auto& s : split(req.xprime)) {
    if (s.empty()) continue;
    spec.xprime.push_back(QubitId{static_cast<std::uint32_t>(std::stoul(s))});
  }
  spec.validate();
  Circuit out(c.width(), roles);
  out.set_gates(c.gates());
  return {out, spec};
}

}  // namespace rphase
