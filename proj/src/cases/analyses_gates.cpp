#include "cases/common.hpp"
#include "vlsikit/error.hpp"
#include "vlsikit/gates.hpp"
#include "vlsikit/logic.hpp"

namespace vk::cases {

namespace {

const std::vector<ParamDoc> kGateParams = {
    {"gate", "object", true, kGateDoc},
    {"ref", "object", false, "reference inverter {w_n, w_p}; w_p defaults to mu * w_n"},
    {"mu", "number", false, "nmos/pmos mobility ratio (default 2)"}};

CompoundGate gate_of(const Params& p) {
  double mu = p.num("mu", 2);
  return parse_gate(p.obj("gate"), parse_reference(p), mu);
}

}  // namespace

void register_gates(Registry& r) {
  r.add({"gate_sizing", "gates", "network construction, transistor widths and area of a gate", kGateParams,
         [](const Params& p) -> Runner {
           auto g = gate_of(p);
           return [=](Report& rep) {
             rep.set("pdn", network_text(g.pdn));
             rep.set("pun", network_text(g.pun));
             rep.set("pdn_widths", width_table(g.pdn));
             rep.set("pun_widths", width_table(g.pun));
             rep.x("total_width", g.total_width());
             rep.x("area_ratio", g.area_ratio());
           };
         }});

  r.add({"delay_bounds", "gates", "worst and best pull-down/pull-up resistance over input assignments",
         kGateParams, [](const Params& p) -> Runner {
           auto g = gate_of(p);
           return [=](Report& rep) {
             auto b = delay_bounds(g);
             rep.x("worst_fall", b.worst_fall);
             rep.x("best_fall", b.best_fall);
             rep.x("worst_rise", b.worst_rise);
             rep.x("best_rise", b.best_rise);
             rep.x("fall_ratio", b.worst_fall / b.best_fall);
             rep.x("rise_ratio", b.worst_rise / b.best_rise);
           };
         }});

  r.add({"euler_ordering", "gates", "common Euler ordering of the pull-down and pull-up networks",
         kGateParams, [](const Params& p) -> Runner {
           auto g = gate_of(p);
           return [=](Report& rep) {
             auto e = common_euler_ordering(g);
             rep.set("found", e.has_value());
             if (!e) {
               rep.warn("no common Euler ordering exists for this network shape");
               return;
             }
             rep.set("sequence", e->sequence);
             rep.set("pdn", network_text(e->pdn));
             rep.set("pun", network_text(e->pun));
           };
         }});

  r.add({"network_dual", "gates", "pull-down network of an expression and its dual",
         {{"pulldown", "string", true, "conduction function of the pull-down network"}},
         [](const Params& p) -> Runner {
           BoolExpr f;
           try {
             f = parse_expr(p.str("pulldown"));
           } catch (const vk::Error& e) {
             p.bad("pulldown", e.what());
           }
           return [=](Report& rep) {
             auto n = network_from_expr(f);
             rep.set("pdn", network_text(n));
             rep.set("pun", network_text(dual(n)));
           };
         }});

  r.add({"charge_share", "gates", "precharged node voltage after sharing with internal capacitances",
         {{"c_out", "number", true, "F (or any consistent unit)"},
          {"v_dd", "number", true, "V"},
          {"c_exposed", "array", true, "internal capacitances connected during evaluation"},
          {"v_init", "number", false, "initial internal node voltage, V"}},
         [](const Params& p) -> Runner {
           double c = p.positive("c_out"), v = p.positive("v_dd"), vi = p.num("v_init", 0);
           auto ex = p.nums("c_exposed");
           for (double x : ex)
             if (x < 0) p.bad("c_exposed", "capacitances must be non-negative");
           return [=](Report& rep) {
             double out = charge_share_voltage(c, v, ex, vi);
             rep.q("v_out", out, "V");
             rep.x("fraction_of_v_dd", out / v);
           };
         }});
}

}  // namespace vk::cases
