#include <cmath>

#include "cases/common.hpp"
#include "vlsikit/device.hpp"

namespace vk::cases {

namespace {

VtcDevice parse_vtc_device(const Params& p) {
  p.only({"k", "k_prime", "w_over_l", "v_t", "lambda"});
  VtcDevice d;
  if (p.has("k")) {
    d.k = p.positive("k");
  } else {
    d.k = p.positive("k_prime") * p.positive("w_over_l");
  }
  d.v_t = p.num("v_t");
  d.lambda = p.num("lambda", 0);
  return d;
}

json point(const VtcPoint& pt) {
  return {{"v_in", quantity(pt.v_in, "V")},
          {"v_out", quantity(pt.v_out, "V")},
          {"driver_region", to_string(pt.driver)},
          {"load_region", to_string(pt.load)}};
}

}  // namespace

void register_device(Registry& r) {
  r.add({"threshold_voltage", "device", "threshold with body effect",
         {{"device", "object", true, kDeviceDoc}, {"v_sb", "number", false, "source-body bias magnitude, V"}},
         [](const Params& p) -> Runner {
           auto d = parse_device(p.obj("device"));
           double v_sb = p.num("v_sb", 0);
           return [=](Report& rep) { rep.q("v_t", threshold_voltage(d, v_sb), "V"); };
         }});

  r.add({"drain_current", "device", "square-law drain current and region",
         {{"device", "object", true, kDeviceDoc},
          {"v_gs", "number", true, "gate-source magnitude for pmos, V"},
          {"v_ds", "number", true, "drain-source magnitude for pmos, V"},
          {"v_sb", "number", false, "V"}},
         [](const Params& p) -> Runner {
           auto d = parse_device(p.obj("device"));
           double vgs = p.num("v_gs"), vds = p.num("v_ds"), vsb = p.num("v_sb", 0);
           if (vds < 0) p.bad("v_ds", "must be a non-negative magnitude");
           return [=](Report& rep) {
             auto b = bias_point(d, vgs, vds, vsb);
             rep.q("i_d", b.i_d, "A");
             rep.set("region", to_string(b.region));
             rep.q("v_t", b.v_t, "V");
           };
         }});

  r.add({"mos_capacitances", "device", "gate, overlap and junction capacitances",
         {{"device", "object", true, kDeviceDoc},
          {"v_db", "number", true, "reverse drain-body bias, V"},
          {"region", "string", false, "cutoff|linear|saturation (default saturation)"}},
         [](const Params& p) -> Runner {
           auto d = parse_device(p.obj("device"));
           double v = p.num("v_db");
           Region reg = p.has("region") ? parse_region(p, "region") : Region::Saturation;
           return [=](Report& rep) {
             auto c = mos_capacitances(d, v, reg);
             rep.q("c_gate", c.c_gs + c.c_gd + c.c_gb, "F");
             rep.q("c_ov", c.c_ov, "F");
             rep.q("c_gs", c.c_gs, "F");
             rep.q("c_gd", c.c_gd, "F");
             rep.q("c_gb", c.c_gb, "F");
             rep.q("c_db_bottom", c.c_db_bottom, "F");
             rep.q("c_db_sidewall", c.c_db_sidewall, "F");
             rep.q("c_db", c.c_db, "F");
             rep.q("phi0_bottom", c.phi0_bottom, "V");
             rep.q("phi0_sidewall", c.phi0_sidewall, "V");
             rep.set("c_j0", quantity(c.c_j0, "F/m^2"));
             rep.set("c_jsw0", quantity(c.c_jsw0, "F/m^2"));
           };
         }});

  r.add({"scale_factors", "device", "multiplicative change of device quantities under scaling",
         {{"kind", "string", true, "constant_field|constant_voltage|general"},
          {"s", "number", true, "dimension scale divisor"},
          {"m", "number", false, "voltage scale divisor for general scaling"}},
         [](const Params& p) -> Runner {
           auto kind = p.choice<ScalingKind>("kind", {{"constant_field", ScalingKind::ConstantField},
                                                      {"constant_voltage", ScalingKind::ConstantVoltage},
                                                      {"general", ScalingKind::General}});
           double s = p.positive("s");
           double m = p.has("m") ? p.positive("m") : 1;
           return [=](Report& rep) {
             for (const auto& [k, v] : scale_factors(kind, s, m)) rep.x(k, v);
           };
         }});

  r.add({"inverter_vtc", "device", "critical points and noise margins of an inverter transfer curve",
         {{"config", "string", true, "cmos|depletion_load|resistive_load|pseudo_nmos"},
          {"v_dd", "number", true, "V"},
          {"driver", "object", true, "{k | k_prime and w_over_l, v_t (signed), lambda}"},
          {"load", "object", false, "same shape as driver"},
          {"r_load", "number", false, "ohm, resistive load"},
          {"driver_type", "string", false, "nmos|pmos; pmos puts the resistor to ground"}},
         [](const Params& p) -> Runner {
           InverterParams ip;
           ip.config = p.choice<InverterConfig>("config", {{"cmos", InverterConfig::Cmos},
                                                           {"depletion_load", InverterConfig::DepletionLoad},
                                                           {"resistive_load", InverterConfig::ResistiveLoad},
                                                           {"pseudo_nmos", InverterConfig::PseudoNmos}});
           ip.v_dd = p.positive("v_dd");
           ip.driver = parse_vtc_device(p.obj("driver"));
           if (ip.config == InverterConfig::ResistiveLoad) {
             ip.r_load = p.positive("r_load");
           } else {
             ip.load = parse_vtc_device(p.obj("load"));
           }
           ip.driver_type = p.choice<Polarity>("driver_type", {{"nmos", Polarity::Nmos}, {"pmos", Polarity::Pmos}},
                                               Polarity::Nmos);
           return [=](Report& rep) {
             auto v = inverter_vtc(ip);
             rep.set("oh", point(v.oh));
             rep.set("ol", point(v.ol));
             rep.set("il", point(v.il));
             rep.set("ih", point(v.ih));
             rep.set("m", point(v.m));
             rep.q("v_oh", v.oh.v_out, "V");
             rep.q("v_ol", v.ol.v_out, "V");
             rep.q("v_il", v.il.v_in, "V");
             rep.q("v_ih", v.ih.v_in, "V");
             rep.q("v_m", v.m.v_in, "V");
             auto nm = noise_margins(v.oh.v_out, v.ol.v_out, v.ih.v_in, v.il.v_in);
             rep.q("nm_h", nm.nm_h, "V");
             rep.q("nm_l", nm.nm_l, "V");
           };
         }});

  r.add({"noise_margins", "device", "high and low noise margins from the critical voltages",
         {{"v_oh", "number", true, "V"}, {"v_ol", "number", true, "V"},
          {"v_ih", "number", true, "V"}, {"v_il", "number", true, "V"}},
         [](const Params& p) -> Runner {
           double oh = p.num("v_oh"), ol = p.num("v_ol"), ih = p.num("v_ih"), il = p.num("v_il");
           return [=](Report& rep) {
             auto nm = noise_margins(oh, ol, ih, il);
             rep.q("nm_h", nm.nm_h, "V");
             rep.q("nm_l", nm.nm_l, "V");
             rep.set("negative", nm.negative);
             if (nm.negative) rep.warn("a noise margin is negative");
           };
         }});
}

}  // namespace vk::cases
