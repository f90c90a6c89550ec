#include <cmath>

#include "cases/common.hpp"
#include "vlsikit/memory.hpp"

namespace vk::cases {

namespace {

CellDevice parse_cell_device(const Params& p, bool need_ratio = true) {
  p.only({"k_prime", "w_over_l", "v_t", "gamma", "phi2f"});
  CellDevice d;
  d.k_prime = p.positive("k_prime");
  d.w_over_l = need_ratio ? p.positive("w_over_l") : p.num("w_over_l", 0);
  d.v_t = p.num("v_t");
  if (d.v_t < 0) p.bad("v_t", "give the threshold magnitude");
  d.gamma = p.num("gamma", 0);
  d.phi2f = p.num("phi2f", 0.6);
  return d;
}

const char* const kCellDoc = "{k_prime, w_over_l, v_t (magnitude), gamma, phi2f}";

const std::vector<ParamDoc> kCellParams = {
    {"access", "object", true, kCellDoc},      {"pulldown", "object", false, kCellDoc},
    {"pullup", "object", false, kCellDoc},     {"v_dd", "number", true, "V"},
    {"v_bitline", "number", true, "V"},        {"v_wordline", "number", false, "V (default v_dd)"}};

}  // namespace

void register_memory(Registry& r) {
  r.add({"cell_node_voltage", "memory", "storage node voltage of a 6T cell during read or write",
         [] {
           auto d = kCellParams;
           d.push_back({"mode", "string", true, "read|write"});
           return d;
         }(),
         [](const Params& p) -> Runner {
           SramCell c;
           auto mode = p.choice<CellMode>("mode", {{"read", CellMode::ReadDisturb}, {"write", CellMode::Write}});
           c.access = parse_cell_device(p.obj("access"));
           if (mode == CellMode::ReadDisturb) {
             c.pulldown = parse_cell_device(p.obj("pulldown"));
           } else {
             c.pullup = parse_cell_device(p.obj("pullup"));
           }
           c.v_dd = p.positive("v_dd");
           c.v_bitline = p.num("v_bitline");
           c.v_wordline = p.opt_num("v_wordline");
           return [=](Report& rep) {
             auto s = cell_node_voltage(c, mode);
             rep.q("v", s.v, "V");
             rep.set("roots", quantities(s.roots, "V"));
             rep.set("access_region", to_string(s.access));
             rep.set(mode == CellMode::ReadDisturb ? "pulldown_region" : "pullup_region", to_string(s.other));
             for (double x : s.roots)
               if (std::abs(x - s.v) > 1e-9) rep.warn("discarded quadratic root outside the valid range");
           };
         }});

  r.add({"write_sizing", "memory", "W/L of the access or pull-up device that puts the node at the trip point",
         [] {
           auto d = kCellParams;
           d.push_back({"solve_for", "string", true, "access|pullup"});
           d.push_back({"v_trip", "number", true, "V"});
           return d;
         }(),
         [](const Params& p) -> Runner {
           SramCell c;
           auto which = p.choice<SizedDevice>("solve_for", {{"access", SizedDevice::Access},
                                                            {"pullup", SizedDevice::Pullup}});
           c.access = parse_cell_device(p.obj("access"), which != SizedDevice::Access);
           c.pullup = parse_cell_device(p.obj("pullup"), which != SizedDevice::Pullup);
           c.v_dd = p.positive("v_dd");
           c.v_bitline = p.num("v_bitline");
           c.v_wordline = p.opt_num("v_wordline");
           double trip = p.num("v_trip");
           return [=](Report& rep) { rep.x("w_over_l", write_sizing(c, which, trip)); };
         }});

  r.add({"load_resistor_bound", "memory", "smallest load resistor of a resistive-load cell",
         {{"access", "object", true, kCellDoc}, {"pulldown", "object", true, kCellDoc},
          {"v_dd", "number", true, "V"}, {"v_q_max", "number", true, "largest tolerated 0-node voltage, V"}},
         [](const Params& p) -> Runner {
           auto a = parse_cell_device(p.obj("access"));
           auto d = parse_cell_device(p.obj("pulldown"));
           double v = p.positive("v_dd"), q = p.positive("v_q_max");
           return [=](Report& rep) { rep.q("r_min", load_resistor_bound(a, d, v, q), "ohm"); };
         }});

  r.add({"bitline_model", "memory", "bitline capacitance, resistance and delay",
         {{"rows", "integer", true, ""}, {"cell_height", "number", true, "m"},
          {"bl_width", "number", true, "m"}, {"access_width", "number", true, "m"},
          {"c_d", "number", true, "diffusion capacitance per width, F/m"},
          {"c_pp", "number", true, "area capacitance, F/m^2"}, {"c_fr", "number", true, "fringe per edge, F/m"},
          {"fringe_edges", "integer", false, "default 2"}, {"r_sq", "number", true, "ohm/square"}},
         [](const Params& p) -> Runner {
           BitlineGeometry g;
           g.rows = static_cast<int>(p.integer("rows"));
           if (g.rows < 1) p.bad("rows", "must be positive");
           g.cell_height = p.positive("cell_height");
           g.bl_width = p.positive("bl_width");
           g.access_width = p.num("access_width");
           g.c_d = p.num("c_d");
           g.c_pp = p.num("c_pp");
           g.c_fr = p.num("c_fr");
           g.fringe_edges = static_cast<int>(p.integer("fringe_edges", 2));
           g.r_sq = p.num("r_sq");
           return [=](Report& rep) {
             auto m = bitline_model(g);
             rep.q("c_diffusion", m.c_diffusion, "F");
             rep.q("c_wire", m.c_wire, "F");
             rep.q("c_total", m.c_total, "F");
             rep.q("r_total", m.r_total, "ohm");
             rep.q("delay", m.delay, "s");
           };
         }});

  r.add({"blocked_read_delay", "memory", "read delay coefficients of a blocked array",
         {{"rows", "integer", true, "rows per block"}, {"cols", "integer", true, "columns per block"},
          {"decode_levels", "integer", false, ""}, {"mux_levels", "integer", false, ""},
          {"r_word", "number", false, ""}, {"c_word", "number", false, ""}, {"r_bit", "number", false, ""},
          {"c_bit", "number", false, ""}, {"d_gate", "number", false, ""}, {"d_mux", "number", false, ""}},
         [](const Params& p) -> Runner {
           ArrayPlan a;
           a.rows = static_cast<int>(p.integer("rows"));
           a.cols = static_cast<int>(p.integer("cols"));
           if (a.rows < 1 || a.cols < 1) p.bad("rows", "rows and cols must be positive");
           a.decode_levels = static_cast<int>(p.integer("decode_levels", 0));
           a.mux_levels = static_cast<int>(p.integer("mux_levels", 0));
           a.r_word = p.opt_num("r_word");
           a.c_word = p.opt_num("c_word");
           a.r_bit = p.opt_num("r_bit");
           a.c_bit = p.opt_num("c_bit");
           a.d_gate = p.opt_num("d_gate");
           a.d_mux = p.opt_num("d_mux");
           return [=](Report& rep) {
             auto d = blocked_read_delay(a);
             rep.x("k_gate", d.k_gate);
             rep.x("k_word", d.k_word);
             rep.x("k_bit", d.k_bit);
             rep.x("k_mux", d.k_mux);
             if (d.total) rep.x("total", *d.total);
           };
         }});

  r.add({"decoder_cost", "memory", "transistor count of decoder plans",
         {{"plans", "array", true, "[{name, stages: [{kind nand|nor|inv, fan_in, count}]}]"}},
         [](const Params& p) -> Runner {
           std::vector<std::pair<std::string, std::vector<DecoderStage>>> plans;
           for (const auto& q : p.objs("plans")) {
             q.only({"name", "stages"});
             std::vector<DecoderStage> st;
             for (const auto& s : q.objs("stages")) {
               s.only({"kind", "fan_in", "count"});
               auto kind = s.choice<GateKind>("kind", {{"nand", GateKind::Nand}, {"nor", GateKind::Nor},
                                                       {"inv", GateKind::Inverter}});
               long fi = s.integer("fan_in", kind == GateKind::Inverter ? 1 : 0);
               long n = s.integer("count");
               if (fi < 1 || n < 0) s.bad("fan_in", "fan_in must be positive and count non-negative");
               st.push_back({kind, static_cast<int>(fi), n});
             }
             plans.emplace_back(q.str("name", "plan" + std::to_string(plans.size())), st);
           }
           if (plans.empty()) p.bad("plans", "need at least one plan");
           return [=](Report& rep) {
             json c = json::object();
             long lo = 0, hi = 0;
             for (std::size_t i = 0; i < plans.size(); ++i) {
               long v = decoder_cost(plans[i].second);
               c[plans[i].first] = v;
               lo = i ? std::min(lo, v) : v;
               hi = i ? std::max(hi, v) : v;
             }
             rep.set("transistors", c);
             rep.set("saving", hi - lo);
           };
         }});

  r.add({"address_decode", "memory", "split a physical address into chip, bank, row and column fields",
         {{"address", "integer|string", true, "e.g. \"0x004f1ad8\""},
          {"chips", "integer", false, ""}, {"banks", "integer", false, ""}, {"rows", "integer", true, ""},
          {"cols", "integer", true, ""}, {"address_bits", "integer", false, "default 32"},
          {"order", "array", false, "field names MSB first (default unused,row,bank,col,chip)"}},
         [](const Params& p) -> Runner {
           AddressMap m;
           m.chips = p.integer("chips", 1);
           m.banks = p.integer("banks", 1);
           m.rows = p.integer("rows");
           m.cols = p.integer("cols");
           m.address_bits = static_cast<int>(p.integer("address_bits", 32));
           if (p.has("order")) m.order = p.strs("order");
           auto addr = p.u64("address");
           return [=](Report& rep) {
             auto fields = address_decode(m, addr);
             json out = json::object();
             for (const auto& f : fields) {
               std::string bits;
               for (int i = f.width - 1; i >= 0; --i) bits += ((f.value >> i) & 1u) ? '1' : '0';
               out[f.name] = {{"value", f.value}, {"width", f.width}, {"lsb", f.lsb}, {"bits", bits}};
             }
             rep.set("fields", out);
           };
         }});
}

}  // namespace vk::cases
