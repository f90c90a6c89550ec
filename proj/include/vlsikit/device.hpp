#pragma once

#include <map>
#include <optional>
#include <string>

namespace vk {

enum class Polarity { Nmos, Pmos };

// Physical constants in the cgs-flavoured units of junction math.
struct PhysicalConstants {
  double q = 1.6e-19;         // C
  double eps0 = 8.85e-14;     // F/cm
  double k_si = 11.7;
  double k_ox = 3.9;
  double n_i = 1.45e10;       // cm^-3
  double thermal_v = 0.026;   // kT/q, V

  double eps_si() const { return k_si * eps0; }
  double eps_ox() const { return k_ox * eps0; }
};

// Level-1 device. Lengths in metres, doping in cm^-3.
// Thresholds are signed (pmos negative); bias voltages passed to the
// analysis functions are source-referenced magnitudes for either polarity.
struct MosDevice {
  Polarity type = Polarity::Nmos;
  double k_prime = 0;   // mobility * Cox, A/V^2
  double v_t0 = 0;
  double gamma = 0;     // signed body coefficient, V^0.5
  double phi2f = 0.6;   // |2 phi_F|
  double lambda = 0;    // magnitude, 1/V; applied in saturation only
  double w = 0;
  double l = 0;         // drawn length
  double l_d = 0;       // lateral diffusion per side
  double t_ox = 0;
  std::optional<double> c_ox;  // F/m^2, overrides eps_ox / t_ox when set

  // junction geometry and doping
  double x_j = 0;
  std::optional<double> x_j_sidewall;  // defaults to x_j
  double y = 0;                        // diffusion extent from gate edge
  double n_sub = 0;
  double n_diff = 0;
  double n_sidewall = 0;               // channel-stop doping at the sidewall
  double grading = 0.5;

  double l_eff() const { return l - 2 * l_d; }
  double w_over_l() const;
  double cox(const PhysicalConstants& pc = {}) const;  // F/m^2
};

double threshold_voltage(const MosDevice& d, double v_sb);

enum class Region { Cutoff, Linear, Saturation };
const char* to_string(Region r);

struct BiasPoint {
  Region region;
  double i_d;  // magnitude, A
  double v_t;  // threshold used (signed)
};

BiasPoint bias_point(const MosDevice& d, double v_gs, double v_ds, double v_sb = 0);

// Square-law drain current and its partial derivatives for an enhancement or
// depletion device; `v_t` is the signed threshold, voltages source-referenced
// (magnitudes for pmos, with v_t negated by the caller).
struct SquareLaw {
  double i = 0;
  double di_dvgs = 0;
  double di_dvds = 0;
  Region region = Region::Cutoff;
};
SquareLaw square_law(double k, double v_t, double v_gs, double v_ds, double lambda = 0);

struct MosCaps {
  double c_ov;       // per-side overlap
  double c_gs;
  double c_gd;
  double c_gb;
  double c_db_bottom;
  double c_db_sidewall;
  double c_db;
  double phi0_bottom;
  double phi0_sidewall;
  double c_j0;          // zero-bias junction capacitance, F/m^2
  double c_jsw0;        // F/m^2
};

MosCaps mos_capacitances(const MosDevice& d, double v_db, Region region,
                         const PhysicalConstants& pc = {});

// Multiplicative change of each quantity when voltages scale by 1/S and
// dimensions by 1/M.
enum class ScalingKind { ConstantField, ConstantVoltage, General };
std::map<std::string, double> scale_factors(ScalingKind kind, double s, double m = 1);

enum class InverterConfig { Cmos, DepletionLoad, ResistiveLoad, PseudoNmos };

struct VtcDevice {
  double k = 0;       // k' * W/L, A/V^2
  double v_t = 0;     // signed
  double lambda = 0;
};

// Cmos and PseudoNmos: `driver` is the nmos pull-down, `load` the pmos pull-up.
// DepletionLoad: `load` is the depletion nmos with gate tied to the output.
// ResistiveLoad: a resistor opposite the driver; with a pmos driver the
// resistor goes to ground.
struct InverterParams {
  InverterConfig config = InverterConfig::Cmos;
  double v_dd = 0;
  VtcDevice driver;
  VtcDevice load;
  double r_load = 0;
  Polarity driver_type = Polarity::Nmos;
};

struct VtcPoint {
  double v_in;
  double v_out;
  Region driver;
  Region load;
};

struct VtcResult {
  VtcPoint oh, ol, il, ih, m;
};

VtcResult inverter_vtc(const InverterParams& p);

// Output voltage for a given input, and the KCL residual used to find it.
double vtc_output(const InverterParams& p, double v_in);

struct NoiseMargins {
  double nm_h;
  double nm_l;
  bool negative;
};

NoiseMargins noise_margins(double v_oh, double v_ol, double v_ih, double v_il);

}  // namespace vk
