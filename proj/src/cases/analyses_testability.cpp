#include "cases/common.hpp"
#include "vlsikit/error.hpp"
#include "vlsikit/testability.hpp"

namespace vk::cases {

namespace {

GateNetlist parse_netlist(const Params& p) {
  p.only({"inputs", "outputs", "gates"});
  GateNetlist n;
  n.inputs = p.strs("inputs");
  n.outputs = p.strs("outputs");
  for (const auto& g : p.objs("gates")) {
    g.only({"type", "inputs", "output"});
    try {
      n.gates.push_back({parse_gate_type(g.str("type")), g.strs("inputs"), g.str("output")});
    } catch (const vk::Error& e) {
      g.bad("type", e.what());
    }
  }
  try {
    CompiledNetlist check(n);
  } catch (const vk::Error& e) {
    p.bad("", e.what());
  }
  return n;
}

std::vector<bool> parse_vector(const json& v, std::size_t width, const std::string& where) {
  if (!v.is_string()) throw ParamError(where, "expected a bit string such as \"0110\"");
  auto s = v.get<std::string>();
  if (s.size() != width) throw ParamError(where, "expected " + std::to_string(width) + " bits");
  std::vector<bool> out;
  for (char c : s) {
    if (c != '0' && c != '1') throw ParamError(where, "bits must be 0 or 1");
    out.push_back(c == '1');
  }
  return out;
}

StuckFault parse_fault(const json& v, const std::string& where) {
  // "net/SA0" or {"net": ..., "value": 0|1}
  if (v.is_string()) {
    auto s = v.get<std::string>();
    auto slash = s.rfind('/');
    if (slash == std::string::npos || (s.substr(slash + 1) != "SA0" && s.substr(slash + 1) != "SA1"))
      throw ParamError(where, "expected net/SA0 or net/SA1");
    return {s.substr(0, slash), s.back() == '1'};
  }
  Params f(v, where);
  f.only({"net", "value"});
  long val = f.integer("value");
  if (val != 0 && val != 1) f.bad("value", "must be 0 or 1");
  return {f.str("net"), val == 1};
}

std::vector<StuckFault> parse_faults(const Params& p, const GateNetlist& n) {
  if (!p.has("faults")) return all_faults(n);
  const json& arr = p.raw("faults");
  if (!arr.is_array()) p.bad("faults", "expected an array");
  std::vector<StuckFault> out;
  CompiledNetlist c(n);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto where = p.at("faults") + "[" + std::to_string(i) + "]";
    auto f = parse_fault(arr[i], where);
    try {
      c.net_index(f.net);
    } catch (const vk::Error& e) {
      throw ParamError(where, e.what());
    }
    out.push_back(f);
  }
  return out;
}

std::string bits_text(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s += b ? '1' : '0';
  return s;
}

const char* const kNetlistDoc = "{inputs, outputs, gates: [{type and|or|nand|nor|not|xor|xnor|buf, inputs, output}]}";

}  // namespace

void register_testability(Registry& r) {
  r.add({"lfsr", "testability", "Galois LFSR states, period and companion matrix",
         {{"polynomial", "string", true, "e.g. \"1 + x^2 + x^7 + x^8\""},
          {"seed", "integer|string", false, "initial state, bit i is stage i (default 1)"},
          {"steps", "integer", false, "states to list (default 16)"}},
         [](const Params& p) -> Runner {
           GfPolynomial poly;
           Lfsr l;
           try {
             poly = GfPolynomial::parse(p.str("polynomial"));
             l = lfsr_build(poly);
           } catch (const vk::Error& e) {
             p.bad("polynomial", e.what());
           }
           std::uint64_t seed = p.has("seed") ? p.u64("seed") : 1;
           if (l.n < 64 && (seed >> l.n) != 0) p.bad("seed", "wider than the register");
           long steps = p.integer("steps", 16);
           if (steps < 0 || steps > 100000) p.bad("steps", "must be in 0..100000");
           return [=](Report& rep) {
             auto run = lfsr_run(l, seed, static_cast<std::uint64_t>(steps));
             rep.set("degree", l.n);
             rep.set("taps", l.taps);
             std::vector<std::string> rows;
             for (const auto& row : l.matrix) {
               std::string s;
               for (auto b : row) s += b ? '1' : '0';
               rows.push_back(s);
             }
             rep.set("matrix", rows);
             rep.set("states", run.states);
             if (run.period) {
               rep.set("period", *run.period);
               rep.set("maximal", *run.period == (1ull << l.n) - 1);
             }
           };
         }});

  r.add({"logic_simulate", "testability", "output values of a gate netlist for input vectors",
         {{"netlist", "object", true, kNetlistDoc},
          {"vectors", "array", true, "bit strings in input declaration order"}},
         [](const Params& p) -> Runner {
           auto n = parse_netlist(p.obj("netlist"));
           std::vector<std::vector<bool>> vecs;
           const json& arr = p.raw("vectors");
           if (!arr.is_array()) p.bad("vectors", "expected an array");
           for (std::size_t i = 0; i < arr.size(); ++i)
             vecs.push_back(parse_vector(arr[i], n.inputs.size(), p.at("vectors") + "[" + std::to_string(i) + "]"));
           return [=](Report& rep) {
             json out = json::array();
             for (const auto& v : vecs) {
               std::map<std::string, bool> in;
               for (std::size_t i = 0; i < v.size(); ++i) in[n.inputs[i]] = v[i];
               auto o = logic_simulate(n, in);
               std::string bits;
               for (const auto& name : n.outputs) bits += o.at(name) ? '1' : '0';
               out.push_back({{"in", bits_text(v)}, {"out", bits}});
             }
             rep.set("outputs", n.outputs);
             rep.set("vectors", out);
           };
         }});

  r.add({"fault_simulate", "testability", "stuck-at faults detected by a vector set",
         {{"netlist", "object", true, kNetlistDoc}, {"vectors", "array", true, "bit strings"},
          {"faults", "array", false, "net/SA0 strings (default: every net, both values)"}},
         [](const Params& p) -> Runner {
           auto n = parse_netlist(p.obj("netlist"));
           std::vector<std::vector<bool>> vecs;
           const json& arr = p.raw("vectors");
           if (!arr.is_array()) p.bad("vectors", "expected an array");
           for (std::size_t i = 0; i < arr.size(); ++i)
             vecs.push_back(parse_vector(arr[i], n.inputs.size(), p.at("vectors") + "[" + std::to_string(i) + "]"));
           auto faults = parse_faults(p, n);
           return [=](Report& rep) {
             auto hits = fault_simulate(n, vecs, faults);
             std::vector<std::string> detected, undetected;
             json per = json::array();
             for (std::size_t i = 0; i < vecs.size(); ++i) {
               std::vector<std::string> names;
               for (const auto& f : hits[i]) names.push_back(to_string(f));
               per.push_back({{"vector", bits_text(vecs[i])}, {"detects", names}});
             }
             for (const auto& f : faults) {
               bool seen = false;
               for (const auto& h : hits)
                 for (const auto& g : h) seen |= g == f;
               (seen ? detected : undetected).push_back(to_string(f));
             }
             rep.set("per_vector", per);
             rep.set("detected", detected);
             rep.set("undetected", undetected);
             rep.x("coverage", faults.empty() ? 1.0 : double(detected.size()) / faults.size());
           };
         }});

  r.add({"atpg", "testability", "exhaustive test generation for stuck-at faults",
         {{"netlist", "object", true, kNetlistDoc},
          {"faults", "array", false, "net/SA0 strings (default: every net, both values)"}},
         [](const Params& p) -> Runner {
           auto n = parse_netlist(p.obj("netlist"));
           if (n.inputs.size() > 20) p.bad("netlist", "exhaustive search is limited to 20 inputs");
           auto faults = parse_faults(p, n);
           return [=](Report& rep) {
             json tests = json::object();
             std::vector<std::string> untestable;
             for (const auto& f : faults) {
               auto v = atpg_exhaustive(n, f);
               if (v) {
                 tests[to_string(f)] = bits_text(*v);
               } else {
                 untestable.push_back(to_string(f));
               }
             }
             rep.set("tests", tests);
             rep.set("untestable", untestable);
           };
         }});
}

}  // namespace vk::cases
