#include "vlsikit/vlsikit.h"

#include <memory>
#include <new>
#include <string>

#include "cases/registry.hpp"
#include "vlsikit/error.hpp"
#include "vlsikit/interconnect.hpp"
#include "vlsikit/testability.hpp"

struct vk_report {
  std::string text;
  std::string error;
};

struct vk_rctree {
  vk::RcTree tree;
};

struct vk_lfsr {
  vk::Lfsr lfsr;
};

struct vk_netlist {
  vk::GateNetlist net;
  vk::CompiledNetlist compiled;
};

namespace {

thread_local std::string g_last_error;

vk_status fail_with(vk_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
vk_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const vk::Error& e) {
    return fail_with(e.kind() == vk::ErrorKind::Input ? VK_ERR_INPUT : VK_ERR_ANALYSIS, e.what());
  } catch (const vk::cases::ParamError& e) {
    return fail_with(VK_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(VK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(VK_ERR_INTERNAL, e.what());
  }
}

vk_status deliver(const vk::cases::Outcome& o, vk_report** out) {
  *out = new vk_report{o.output, o.error};
  if (o.exit_code == 0) return VK_OK;
  g_last_error = o.error;
  return o.exit_code == 1 ? VK_ERR_INPUT : VK_ERR_ANALYSIS;
}

vk::cases::Format fmt(vk_format f) {
  return f == VK_FORMAT_TABLE ? vk::cases::Format::Table : vk::cases::Format::Json;
}

}  // namespace

extern "C" {

const char* vk_version(void) { return "1.0.0"; }

const char* vk_last_error(void) { return g_last_error.c_str(); }

vk_status vk_run_case(const char* case_json, vk_format format, vk_report** out) {
  if (!case_json || !out) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] { return deliver(vk::cases::run_case(case_json, fmt(format)), out); });
}

vk_status vk_validate_case(const char* case_json, vk_report** out) {
  if (!case_json || !out) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] { return deliver(vk::cases::validate_case(case_json), out); });
}

vk_status vk_list(vk_format format, vk_report** out) {
  if (!out) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new vk_report{vk::cases::list_analyses(fmt(format)), ""};
    return VK_OK;
  });
}

const char* vk_report_text(const vk_report* r) { return r ? r->text.c_str() : ""; }

const char* vk_report_error(const vk_report* r) { return r && !r->error.empty() ? r->error.c_str() : nullptr; }

void vk_report_free(vk_report* r) { delete r; }

vk_status vk_rctree_create(double root_c, vk_rctree** out) {
  if (!out) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new vk_rctree{vk::RcTree(root_c)};
    return VK_OK;
  });
}

vk_status vk_rctree_add(vk_rctree* t, int parent, double r, double c, int* node) {
  if (!t) return fail_with(VK_ERR_NULL, "null tree");
  return guarded([&] {
    int id = t->tree.add(parent, r, c);
    if (node) *node = id;
    return VK_OK;
  });
}

vk_status vk_rctree_elmore(const vk_rctree* t, int sink, double scale, double* delay) {
  if (!t || !delay) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] {
    *delay = vk::elmore(t->tree, sink, scale);
    return VK_OK;
  });
}

void vk_rctree_free(vk_rctree* t) { delete t; }

vk_status vk_lfsr_create(const char* polynomial, vk_lfsr** out) {
  if (!polynomial || !out) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new vk_lfsr{vk::lfsr_build(vk::GfPolynomial::parse(polynomial))};
    return VK_OK;
  });
}

int vk_lfsr_degree(const vk_lfsr* l) { return l ? l->lfsr.n : 0; }

uint64_t vk_lfsr_step(const vk_lfsr* l, uint64_t state) { return l ? l->lfsr.step(state) : 0; }

vk_status vk_lfsr_period(const vk_lfsr* l, uint64_t seed, uint64_t* period) {
  if (!l || !period) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] {
    auto run = vk::lfsr_run(l->lfsr, seed, 0);
    if (!run.period) return fail_with(VK_ERR_ANALYSIS, "period not computed for registers above 32 bits");
    *period = *run.period;
    return VK_OK;
  });
}

void vk_lfsr_free(vk_lfsr* l) { delete l; }

vk_status vk_netlist_parse(const char* netlist_json, vk_netlist** out) {
  if (!netlist_json || !out) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(netlist_json);
    } catch (const nlohmann::json::parse_error& e) {
      return fail_with(VK_ERR_INPUT, e.what());
    }
    vk::cases::Params p(j, "netlist");
    p.only({"inputs", "outputs", "gates"});
    vk::GateNetlist n;
    n.inputs = p.strs("inputs");
    n.outputs = p.strs("outputs");
    for (const auto& g : p.objs("gates")) {
      g.only({"type", "inputs", "output"});
      n.gates.push_back({vk::parse_gate_type(g.str("type")), g.strs("inputs"), g.str("output")});
    }
    vk::CompiledNetlist c(n);
    *out = new vk_netlist{std::move(n), std::move(c)};
    return VK_OK;
  });
}

size_t vk_netlist_inputs(const vk_netlist* n) { return n ? n->net.inputs.size() : 0; }

size_t vk_netlist_outputs(const vk_netlist* n) { return n ? n->net.outputs.size() : 0; }

vk_status vk_netlist_simulate(const vk_netlist* n, const unsigned char* in, unsigned char* out) {
  if (!n || !in || !out) return fail_with(VK_ERR_NULL, "null argument");
  return guarded([&] {
    std::vector<std::uint64_t> words(n->net.inputs.size());
    for (std::size_t i = 0; i < words.size(); ++i) words[i] = in[i] ? 1 : 0;
    auto o = n->compiled.eval(words);
    for (std::size_t i = 0; i < o.size(); ++i) out[i] = static_cast<unsigned char>(o[i] & 1u);
    return VK_OK;
  });
}

vk_status vk_netlist_atpg(const vk_netlist* n, const char* net, int stuck_value, unsigned char* vector,
                          int* found) {
  if (!n || !net || !vector || !found) return fail_with(VK_ERR_NULL, "null argument");
  if (stuck_value != 0 && stuck_value != 1) return fail_with(VK_ERR_INPUT, "stuck value must be 0 or 1");
  return guarded([&] {
    auto v = vk::atpg_exhaustive(n->net, {net, stuck_value == 1});
    *found = v.has_value();
    if (v)
      for (std::size_t i = 0; i < v->size(); ++i) vector[i] = (*v)[i] ? 1 : 0;
    return VK_OK;
  });
}

void vk_netlist_free(vk_netlist* n) { delete n; }

}  // extern "C"
