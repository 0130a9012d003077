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

#include "rphase/rphase.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>

#include "rphase/commands.hpp"
#include "rphase/constructions.hpp"
#include "rphase/error.hpp"
#include "rphase/io.hpp"
#include "rphase/resources.hpp"
#include "rphase/rewrite.hpp"
#include "rphase/verify.hpp"

struct rphase_circuit {
  rphase::Circuit c;
};

namespace {

thread_local std::string g_last_error;

rphase_status to_status(rphase::Errc e) {
  using rphase::Errc;
  switch (e) {
    case Errc::invalid_argument: return RPHASE_E_INVALID_ARGUMENT;
    case Errc::parse_error: return RPHASE_E_PARSE;
    case Errc::unsupported_gate: return RPHASE_E_UNSUPPORTED_GATE;
    case Errc::no_construction: return RPHASE_E_NO_CONSTRUCTION;
    case Errc::ancilla_budget: return RPHASE_E_ANCILLA_BUDGET;
    case Errc::arity_mismatch: return RPHASE_E_ARITY_MISMATCH;
    case Errc::special_form_violated: return RPHASE_E_SPECIAL_FORM;
    case Errc::not_phase_permutation: return RPHASE_E_NOT_PHASE_PERMUTATION;
    case Errc::not_relative_phase: return RPHASE_E_NOT_RELATIVE_PHASE;
    case Errc::width_limit: return RPHASE_E_WIDTH_LIMIT;
    case Errc::marker_in_simulation: return RPHASE_E_MARKER_IN_SIMULATION;
    case Errc::coefficient_overflow: return RPHASE_E_OVERFLOW;
    case Errc::backend_unsupported: return RPHASE_E_BACKEND;
    case Errc::internal: return RPHASE_E_INTERNAL;
  }
  return RPHASE_E_INTERNAL;
}

template <class F>
rphase_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return RPHASE_OK;
  } catch (const rphase::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RPHASE_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw rphase::Error(rphase::Errc::invalid_argument, std::string(what) + " is NULL");
}

std::string str(const char* s, const char* fallback = "") { return s ? s : fallback; }

rphase_circuit* wrap(rphase::Circuit c) { return new rphase_circuit{std::move(c)}; }

}  // namespace

extern "C" {

const char* rphase_last_error(void) { return g_last_error.c_str(); }

const char* rphase_status_string(rphase_status s) {
  switch (s) {
    case RPHASE_OK: return "ok";
    case RPHASE_E_INVALID_ARGUMENT: return "invalid argument";
    case RPHASE_E_PARSE: return "parse error";
    case RPHASE_E_UNSUPPORTED_GATE: return "unsupported gate";
    case RPHASE_E_NO_CONSTRUCTION: return "no construction for gate";
    case RPHASE_E_ANCILLA_BUDGET: return "ancilla budget exceeded";
    case RPHASE_E_ARITY_MISMATCH: return "arity mismatch";
    case RPHASE_E_SPECIAL_FORM: return "special-form type violated";
    case RPHASE_E_NOT_PHASE_PERMUTATION: return "not a phase permutation";
    case RPHASE_E_NOT_RELATIVE_PHASE: return "not a relative-phase Toffoli";
    case RPHASE_E_WIDTH_LIMIT: return "width limit exceeded";
    case RPHASE_E_MARKER_IN_SIMULATION: return "marker gate in simulation";
    case RPHASE_E_OVERFLOW: return "coefficient overflow";
    case RPHASE_E_BACKEND: return "gate not representable in backend";
    case RPHASE_E_INTERNAL: return "internal invariant violation";
  }
  return "unknown status";
}

void rphase_string_free(char* s) { std::free(s); }
void rphase_circuit_free(rphase_circuit* c) { delete c; }

rphase_status rphase_circuit_parse(const char* text, int strict, rphase_circuit** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(rphase::parse_circuit(text, strict != 0));
  });
}

rphase_status rphase_circuit_emit(const rphase_circuit* c, const char* format, char** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    std::string f = str(format, "qasm");
    if (f == "qasm") *out = dup(rphase::emit_qasm(c->c));
    else if (f == "json") *out = dup(rphase::emit_json(c->c));
    else throw rphase::Error(rphase::Errc::invalid_argument, "format must be qasm or json");
  });
}

rphase_status rphase_circuit_width(const rphase_circuit* c, size_t* width) {
  return guarded([&] {
    need(c, "circuit");
    need(width, "width");
    *width = c->c.width();
  });
}

rphase_status rphase_circuit_gate_count(const rphase_circuit* c, size_t* count) {
  return guarded([&] {
    need(c, "circuit");
    need(count, "count");
    *count = c->c.size();
  });
}

rphase_status rphase_catalog(char** json) {
  return guarded([&] {
    need(json, "out");
    *json = dup(nlohmann::json(rphase::catalog_names()).dump());
  });
}

rphase_status rphase_synthesize(const rphase_synth_options* opt, rphase_circuit** lowered,
                                rphase_circuit** markers) {
  return guarded([&] {
    need(opt, "options");
    rphase::SynthRequest r;
    r.gate = str(opt->gate);
    r.n = opt->n;
    r.k = opt->k;
    r.ancilla = str(opt->ancilla);
    r.variant = opt->variant;
    r.u = str(opt->u, "x");
    rphase::Construction c = rphase::synthesize(r);
    if (lowered) *lowered = wrap(c.circuit);
    if (markers) *markers = wrap(c.markers);
  });
}

rphase_status rphase_count(const rphase_circuit* c, char** report_json) {
  return guarded([&] {
    need(c, "circuit");
    need(report_json, "out");
    *report_json = dup(rphase::count_resources(c->c).to_json());
  });
}

rphase_status rphase_verify(const rphase_circuit* c, const rphase_verify_options* opt,
                            char** report_json, int* satisfied) {
  return guarded([&] {
    need(c, "circuit");
    need(opt, "options");
    rphase::LayoutRequest req;
    req.op = str(opt->target, "tof");
    req.n = opt->n;
    req.layout = str(opt->layout);
    req.ancilla = str(opt->ancilla);
    req.equivalence = str(opt->equivalence, "exact");
    req.xprime = str(opt->xprime);
    auto [circuit, spec] = rphase::resolve_target(c->c, req);
    std::optional<rphase::Backend> backend;
    std::string b = str(opt->backend);
    if (b == "ring") backend = rphase::Backend::ring;
    else if (b == "float") backend = rphase::Backend::floating;
    else if (!b.empty())
      throw rphase::Error(rphase::Errc::invalid_argument, "backend must be ring or float");
    rphase::VerificationReport rep = rphase::check_implements(circuit, spec, backend);
    if (report_json) *report_json = dup(rep.to_json());
    if (satisfied) *satisfied = rep.satisfies(spec) ? 1 : 0;
  });
}

rphase_status rphase_rewrite(const rphase_circuit* c, const char* rules, rphase_circuit** out,
                             char** summary_json) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    rphase::RewriteRules r = rphase::RewriteRules::parse(str(rules, "prop1,prop2"));
    rphase::RewriteResult res = rphase::rewrite(c->c, r);
    if (summary_json) {
      nlohmann::ordered_json j;
      j["replacements"] = res.replacements;
      j["cancelled_gates"] = res.cancelled_gates;
      j["before"] = nlohmann::ordered_json::parse(rphase::count_resources(c->c).to_json());
      j["after"] = nlohmann::ordered_json::parse(rphase::count_resources(res.circuit).to_json());
      *summary_json = dup(j.dump());
    }
    *out = wrap(std::move(res.circuit));
  });
}

rphase_status rphase_lower(const rphase_circuit* c, const char* mode, rphase_circuit** out) {
  return guarded([&] {
    need(c, "circuit");
    need(out, "out");
    rphase::LowerPolicy p;
    std::string m = str(mode);
    if (m == "clean") p.multi_control = rphase::MultiControl::clean;
    else if (m == "dirty") p.multi_control = rphase::MultiControl::dirty;
    else if (!m.empty())
      throw rphase::Error(rphase::Errc::invalid_argument, "mode must be clean or dirty");
    *out = wrap(rphase::lower(c->c, p));
  });
}

rphase_status rphase_table(const int* n_list, size_t count, int csv, char** text) {
  return guarded([&] {
    need(text, "out");
    std::vector<int> ns = n_list ? std::vector<int>(n_list, n_list + count)
                                 : std::vector<int>{4, 5, 6, 11};
    *text = dup(rphase::format_table(rphase::build_table(ns), csv != 0));
  });
}

}  // extern "C"
