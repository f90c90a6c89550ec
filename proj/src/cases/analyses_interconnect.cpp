#include "cases/common.hpp"
#include "vlsikit/interconnect.hpp"

namespace vk::cases {

namespace {

RcTree parse_tree(const Params& p) {
  p.only({"root", "root_c", "nodes"});
  RcTree t(p.num("root_c", 0), p.str("root", "root"));
  for (const auto& n : p.objs("nodes")) {
    n.only({"name", "parent", "r", "c"});
    auto parent = n.str("parent");
    int id = t.find(parent);
    if (id < 0) n.bad("parent", "unknown node '" + parent + "' (parents must come first)");
    auto name = n.str("name");
    if (t.find(name) >= 0) n.bad("name", "duplicate node '" + name + "'");
    double res = n.num("r"), cap = n.num("c", 0);
    if (res < 0) n.bad("r", "must be non-negative");
    if (cap < 0) n.bad("c", "must be non-negative");
    t.add(id, res, cap, name);
  }
  return t;
}

double parse_scale(const Params& p) {
  if (!p.has("scale")) return kTauScale;
  const json& v = p.raw("scale");
  if (v.is_string() && v.get<std::string>() == "tau") return kTauScale;
  if (v.is_string() && v.get<std::string>() == "ln2") return kLn2Scale;
  return p.positive("scale");
}

DriverModel parse_driver(const Params& p) {
  p.only({"delay", "r", "c_out", "c_in"});
  if (p.has("delay")) {
    if (p.has("r")) p.bad("r", "give either a fixed delay or an RC model");
    return DriverModel::fixed(p.num("delay"));
  }
  return DriverModel::rc(p.num("r"), p.num("c_out", 0), p.num("c_in", 0));
}

MosDevice parse_slew_device(const Params& p) { return parse_device(p); }

}  // namespace

void register_interconnect(Registry& r) {
  r.add({"elmore", "interconnect", "Elmore delay from the root of an RC tree",
         {{"tree", "object", true, "{root, root_c, nodes: [{name, parent, r, c}]}"},
          {"sinks", "array", false, "node names (default: every node)"},
          {"scale", "number|string", false, "tau (1, default), ln2 (0.69) or a factor"}},
         [](const Params& p) -> Runner {
           auto t = parse_tree(p.obj("tree"));
           double scale = parse_scale(p);
           std::vector<std::string> sinks;
           if (p.has("sinks")) {
             sinks = p.strs("sinks");
             for (const auto& s : sinks)
               if (t.find(s) < 0) p.bad("sinks", "unknown node '" + s + "'");
           } else {
             for (const auto& n : t.nodes()) sinks.push_back(n.name);
           }
           return [=](Report& rep) {
             json d = json::object();
             for (const auto& s : sinks) d[s] = quantity(elmore(t, t.find(s), scale), "s");
             rep.set("delay", d);
           };
         }});

  r.add({"wire_rc", "interconnect", "resistance and capacitance of a wire",
         {{"length", "number", true, "m"}, {"width", "number", true, "m"},
          {"r_sheet", "number", true, "ohm/square"}, {"c_area", "number", false, "F/m^2"},
          {"c_fringe", "number", false, "F/m per edge"}, {"fringe_edges", "integer", false, "default 2"}},
         [](const Params& p) -> Runner {
           WireGeometry w;
           w.length = p.positive("length");
           w.width = p.positive("width");
           w.r_sheet = p.num("r_sheet");
           w.c_area = p.num("c_area", 0);
           w.c_fringe_per_edge = p.num("c_fringe", 0);
           w.fringe_edges = static_cast<int>(p.integer("fringe_edges", 2));
           return [=](Report& rep) {
             auto rc = wire_rc(w);
             rep.q("r", rc.r, "ohm");
             rep.q("c", rc.c, "F");
             rep.q("rc", rc.r * rc.c, "s");
           };
         }});

  r.add({"buffered_wire", "interconnect", "delay of a wire split by n equally spaced buffers",
         {{"r_wire", "number", false, "ohm (or give wire)"},
          {"c_wire", "number", false, "F (or give wire)"},
          {"wire", "object", false, "{length, width, r_sheet, c_area, c_fringe, fringe_edges}"},
          {"driver", "object", true, "{delay} or {r, c_out, c_in}"},
          {"buffer", "object", true, "{delay} or {r, c_out, c_in}"},
          {"c_load", "number", false, "F"},
          {"scale", "number|string", false, "tau, ln2 or a factor on RC products"},
          {"n", "integer", false, "evaluate a single buffer count"},
          {"n_min", "integer", false, "default 0"},
          {"n_max", "integer", false, "default 10"}},
         [](const Params& p) -> Runner {
           BufferedWire b;
           if (p.has("wire")) {
             auto w = p.obj("wire");
             w.only({"length", "width", "r_sheet", "c_area", "c_fringe", "fringe_edges"});
             WireGeometry g;
             g.length = w.positive("length");
             g.width = w.positive("width");
             g.r_sheet = w.num("r_sheet");
             g.c_area = w.num("c_area", 0);
             g.c_fringe_per_edge = w.num("c_fringe", 0);
             g.fringe_edges = static_cast<int>(w.integer("fringe_edges", 2));
             auto rc = wire_rc(g);
             b.r_wire = rc.r;
             b.c_wire = rc.c;
           } else {
             b.r_wire = p.num("r_wire");
             b.c_wire = p.num("c_wire");
           }
           b.driver = parse_driver(p.obj("driver"));
           b.buffer = parse_driver(p.obj("buffer"));
           b.c_load = p.num("c_load", 0);
           b.scale = parse_scale(p);
           b.n_min = static_cast<int>(p.integer("n_min", 0));
           b.n_max = static_cast<int>(p.integer("n_max", 10));
           if (b.n_min < 0 || b.n_max < b.n_min) p.bad("n_max", "need 0 <= n_min <= n_max");
           std::optional<int> single;
           if (p.has("n")) single = static_cast<int>(p.integer("n"));
           if (single && *single < 0) p.bad("n", "must be non-negative");
           return [=](Report& rep) {
             rep.q("r_wire", b.r_wire, "ohm");
             rep.q("c_wire", b.c_wire, "F");
             if (single) {
               rep.q("delay", buffered_wire_delay(b, *single), "s");
               return;
             }
             auto res = buffered_wire_delay(b);
             rep.set("delays", quantities(res.delay, "s"));
             rep.set("best_n", res.best_n);
             rep.q("best_delay", res.best_delay, "s");
           };
         }});

  r.add({"inverter_chain", "interconnect", "tapered inverter chain driving a large load",
         {{"cd_over_cg", "number", true, "self-loading ratio"},
          {"fanout", "number", true, "load over first-stage input capacitance"}},
         [](const Params& p) -> Runner {
           double g = p.num("cd_over_cg"), f = p.positive("fanout");
           if (g < 0) p.bad("cd_over_cg", "must be non-negative");
           return [=](Report& rep) {
             auto c = inverter_chain_plan(g, f);
             rep.x("alpha", c.alpha);
             rep.x("stages_exact", c.stages_exact);
             rep.set("inverters", c.inverters);
             rep.set("delay_optimal_stages", c.delay_optimal);
           };
         }});

  r.add({"output_slew", "interconnect", "time for a device to swing its output between two levels",
         {{"device", "object", true, kDeviceDoc},
          {"c_load", "number", true, "F"},
          {"v_dd", "number", true, "V"},
          {"from", "number", false, "start fraction of v_dd (default 0.9)"},
          {"to", "number", false, "end fraction of v_dd (default 0.1)"},
          {"methods", "array", false, "any of acc, diff, avg_current (default all)"}},
         [](const Params& p) -> Runner {
           auto d = parse_slew_device(p.obj("device"));
           double c = p.positive("c_load"), v = p.positive("v_dd");
           double from = p.num("from", 0.9), to = p.num("to", 0.1);
           if (!(from > to && to >= 0 && from <= 1)) p.bad("from", "need 0 <= to < from <= 1");
           std::map<std::string, SlewMethod> all{
               {"acc", SlewMethod::Acc}, {"diff", SlewMethod::Diff}, {"avg_current", SlewMethod::AvgCurrent}};
           std::vector<std::pair<std::string, SlewMethod>> use;
           if (p.has("methods")) {
             for (const auto& m : p.strs("methods")) {
               auto it = all.find(m);
               if (it == all.end()) p.bad("methods", "unknown method '" + m + "'");
               use.emplace_back(m, it->second);
             }
           } else {
             use.assign(all.begin(), all.end());
           }
           return [=](Report& rep) {
             for (const auto& [name, m] : use) rep.q(name, output_slew(d, c, v, from, to, m), "s");
           };
         }});

  r.add({"avg_current_slew", "interconnect", "charge-based delay C dV / I",
         {{"c_load", "number", true, "F"}, {"delta_v", "number", true, "V"}, {"i_avg", "number", true, "A"}},
         [](const Params& p) -> Runner {
           double c = p.positive("c_load"), dv = p.num("delta_v"), i = p.positive("i_avg");
           return [=](Report& rep) { rep.q("delay", avg_current_slew(c, dv, i), "s"); };
         }});
}

}  // namespace vk::cases
