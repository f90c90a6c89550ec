#include <regex>

#include "cases/common.hpp"
#include "vlsikit/effort.hpp"

namespace vk::cases {

namespace {

PathStage parse_stage(const Params& s, double mu) {
  s.only({"name", "gate", "g", "p", "b", "inverting"});
  PathStage st;
  if (s.has("gate")) {
    auto kind = s.str("gate");
    std::smatch m;
    static const std::regex re("(nand|nor)([1-9][0-9]*)");
    if (kind == "inv" || kind == "inverter") {
      st.g = 1;
      st.p = 1;
    } else if (std::regex_match(kind, m, re)) {
      auto e = nand_nor_effort(m[1] == "nand" ? GateFamily::Nand : GateFamily::Nor, std::stoi(m[2]), mu);
      st.g = e.g_input;
      st.p = e.p;
    } else if (kind == "buf") {
      st.g = 1;
      st.p = 2;
      st.inverting = false;
    } else {
      s.bad("gate", "unknown gate '" + kind + "' (inv, buf, nandN, norN)");
    }
    st.name = kind;
  } else if (!s.has("g")) {
    s.bad("g", "give g or a gate name");
  }
  st.name = s.str("name", st.name);
  st.g = s.num("g", st.g);
  st.p = s.num("p", st.p);
  st.b = s.num("b", 1);
  st.inverting = s.flag("inverting", st.inverting);
  if (!(st.g > 0)) s.bad("g", "must be positive");
  if (st.p < 0) s.bad("p", "must be non-negative");
  if (!(st.b >= 1)) s.bad("b", "branching must be at least 1");
  return st;
}

PathSpec parse_path(const Params& p, double mu) {
  PathSpec path;
  for (const auto& s : p.objs("stages")) path.stages.push_back(parse_stage(s, mu));
  if (path.stages.empty()) p.bad("stages", "need at least one stage");
  path.c_in = p.positive("c_in");
  path.c_load = p.positive("c_load");
  return path;
}

json path_json(const PathSpec& spec, const PathResult& r) {
  json names = json::array();
  for (const auto& s : spec.stages) names.push_back(s.name);
  return {{"G", plain(r.G)},          {"B", plain(r.B)},       {"H", plain(r.H)},
          {"F", plain(r.F)},          {"P", plain(r.P)},       {"N", r.N},
          {"f_hat", plain(r.f_hat)},  {"delay", plain(r.delay)}, {"c_in", plain(r.c_in)},
          {"stage_delay", plain(r.stage_delay)}, {"stages", names}};
}

const char* const kStagesDoc = "[{name, gate inv|buf|nandN|norN or g, p, b, inverting}]";

}  // namespace

void register_effort(Registry& r) {
  r.add({"gate_effort", "effort", "logical and parasitic effort of every gate input",
         {{"gate", "object", true, kGateDoc},
          {"reference", "object", false, "reference gate (default: the reference inverter)"},
          {"ref", "object", false, "reference inverter {w_n, w_p}"},
          {"mu", "number", false, "mobility ratio (default 2)"},
          {"cd_over_cg", "number", false, "diffusion to gate capacitance ratio (default 1)"}},
         [](const Params& p) -> Runner {
           double mu = p.num("mu", 2);
           auto ref = parse_reference(p);
           auto g = parse_gate(p.obj("gate"), ref, mu);
           auto reference = p.has("reference") ? parse_gate(p.obj("reference"), ref, mu) : inverter_gate(ref, mu);
           double cd = p.num("cd_over_cg", 1);
           return [=](Report& rep) {
             auto t = derive_template(g, reference, cd);
             json ins = json::object();
             for (const auto& i : t.inputs)
               ins[i.input] = {{"c_in", plain(i.c_in)}, {"g_rise", plain(i.g_rise)}, {"g_fall", plain(i.g_fall)},
                               {"p_rise", plain(i.p_rise)}, {"p_fall", plain(i.p_fall)}};
             rep.set("inputs", ins);
             rep.x("c_parasitic", t.c_parasitic);
             rep.x("p_rise", t.p_rise);
             rep.x("p_fall", t.p_fall);
           };
         }});

  r.add({"nand_nor_effort", "effort", "logical effort of an n-input NAND or NOR",
         {{"family", "string", true, "nand|nor"}, {"n", "integer", true, "inputs"},
          {"mu", "number", false, "mobility ratio (default 2)"}},
         [](const Params& p) -> Runner {
           auto fam = p.choice<GateFamily>("family", {{"nand", GateFamily::Nand}, {"nor", GateFamily::Nor}});
           long n = p.integer("n");
           if (n < 1) p.bad("n", "must be at least 1");
           double mu = p.num("mu", 2);
           if (!(mu > 0)) p.bad("mu", "must be positive");
           return [=](Report& rep) {
             auto e = nand_nor_effort(fam, static_cast<int>(n), mu);
             rep.x("g_input", e.g_input);
             rep.x("g_total", e.g_total);
             rep.x("p", e.p);
           };
         }});

  r.add({"path_delay", "effort", "minimum delay and stage sizes of a fixed path",
         {{"stages", "array", true, kStagesDoc}, {"c_in", "number", true, "path input capacitance"},
          {"c_load", "number", true, "path load capacitance"}, {"mu", "number", false, "for named gates"}},
         [](const Params& p) -> Runner {
           auto path = parse_path(p, p.num("mu", 2));
           return [=](Report& rep) {
             auto res = path_delay(path);
             auto out = path_json(path, res);
             for (auto& [k, v] : out.items()) rep.set(k, v);
           };
         }});

  r.add({"optimize_path", "effort", "best stage count for a path, padding with inverters",
         {{"stages", "array", true, kStagesDoc}, {"c_in", "number", true, ""}, {"c_load", "number", true, ""},
          {"mu", "number", false, ""}, {"rho", "number", false, "best stage effort (default 3.59)"},
          {"polarity", "string", false, "any|inverting|non_inverting"},
          {"add_inverters", "boolean", false, "default true"}, {"p_inv", "number", false, "default 1"}},
         [](const Params& p) -> Runner {
           auto path = parse_path(p, p.num("mu", 2));
           OptimizeOptions o;
           o.rho = p.num("rho", 3.59);
           if (!(o.rho > 1)) p.bad("rho", "must exceed 1");
           o.polarity = p.choice<OutputPolarity>("polarity",
                                                 {{"any", OutputPolarity::Any},
                                                  {"inverting", OutputPolarity::Inverting},
                                                  {"non_inverting", OutputPolarity::NonInverting}},
                                                 OutputPolarity::Any);
           o.add_inverters = p.flag("add_inverters", true);
           o.p_inv = p.num("p_inv", 1);
           return [=](Report& rep) {
             auto best = optimize_path(path, o);
             auto out = path_json(best.path, best.result);
             for (auto& [k, v] : out.items()) rep.set(k, v);
             json c = json::array();
             for (const auto& [n, d] : best.candidates) c.push_back({{"stages", n}, {"delay", plain(d)}});
             rep.set("candidates", c);
           };
         }});

  r.add({"compare_paths", "effort", "delays of alternative implementations of one path",
         {{"paths", "array", true, "[{name, stages, c_in, c_load}]"}, {"mu", "number", false, ""}},
         [](const Params& p) -> Runner {
           std::vector<PathSpec> paths;
           std::vector<std::string> names;
           double mu = p.num("mu", 2);
           for (const auto& q : p.objs("paths")) {
             q.only({"name", "stages", "c_in", "c_load"});
             names.push_back(q.str("name", "path" + std::to_string(paths.size())));
             paths.push_back(parse_path(q, mu));
           }
           if (paths.empty()) p.bad("paths", "need at least one path");
           return [=](Report& rep) {
             auto [best, all] = compare_paths(paths);
             json out = json::object();
             for (std::size_t i = 0; i < all.size(); ++i) out[names[i]] = path_json(paths[i], all[i]);
             rep.set("paths", out);
             rep.set("best", names[best]);
           };
         }});

  r.add({"design_fork", "effort", "complementary-output inverter fork under an input capacitance budget",
         {{"c_in_total", "number", true, ""}, {"load_long", "number", true, "load of the m+1 branch"},
          {"load_short", "number", true, "load of the m branch"}, {"p_inv", "number", false, "default 1"},
          {"rho", "number", false, "default 3.59"}, {"m", "integer", false, "fix the short-branch length"}},
         [](const Params& p) -> Runner {
           ForkSpec f;
           f.c_in_total = p.positive("c_in_total");
           f.load_long = p.positive("load_long");
           f.load_short = p.positive("load_short");
           f.p_inv = p.num("p_inv", 1);
           f.rho = p.num("rho", 3.59);
           if (p.has("m")) {
             f.m = static_cast<int>(p.integer("m"));
             if (*f.m < 1) p.bad("m", "must be at least 1");
           }
           return [=](Report& rep) {
             auto res = design_fork(f);
             rep.set("m", res.m);
             rep.x("x", res.x);
             rep.x("y", res.y);
             rep.x("delay", res.delay);
             rep.set("long_caps", plain(res.long_caps));
             rep.set("short_caps", plain(res.short_caps));
             json c = json::array();
             for (const auto& [n, d] : res.candidates) c.push_back({{"m", n}, {"delay", plain(d)}});
             rep.set("candidates", c);
           };
         }});
}

}  // namespace vk::cases
