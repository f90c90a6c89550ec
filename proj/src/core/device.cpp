#include "vlsikit/device.hpp"

#include <cmath>
#include <optional>

#include "vlsikit/error.hpp"

namespace vk {

namespace {

constexpr double kCmPerM = 100.0;

double junction_phi(const PhysicalConstants& pc, double na, double nd) {
  return pc.thermal_v * std::log(na * nd / (pc.n_i * pc.n_i));
}

// Zero-bias capacitance per area of an abrupt junction, F/cm^2.
double junction_c0(const PhysicalConstants& pc, double na, double nd, double phi) {
  return std::sqrt(pc.eps_si() * pc.q / 2.0 * (na * nd / (na + nd)) / phi);
}

}  // namespace

double MosDevice::w_over_l() const {
  double le = l_eff();
  require(w > 0 && le > 0, "device needs positive width and effective length");
  return w / le;
}

double MosDevice::cox(const PhysicalConstants& pc) const {
  if (c_ox) return *c_ox;
  require(t_ox > 0, "device needs t_ox or c_ox");
  return pc.eps_ox() * kCmPerM / t_ox;
}

double threshold_voltage(const MosDevice& d, double v_sb) {
  require(d.phi2f >= 0, "|2 phi_F| must be non-negative");
  require(d.phi2f + v_sb >= 0, "source-body bias below -|2 phi_F|");
  return d.v_t0 + d.gamma * (std::sqrt(d.phi2f + v_sb) - std::sqrt(d.phi2f));
}

const char* to_string(Region r) {
  switch (r) {
    case Region::Cutoff: return "cutoff";
    case Region::Linear: return "linear";
    case Region::Saturation: return "saturation";
  }
  return "?";
}

SquareLaw square_law(double k, double v_t, double v_gs, double v_ds, double lambda) {
  SquareLaw s;
  double vov = v_gs - v_t;
  if (vov <= 0) return s;
  if (v_ds >= vov) {
    s.region = Region::Saturation;
    double clm = 1 + lambda * v_ds;
    s.i = 0.5 * k * vov * vov * clm;
    s.di_dvgs = k * vov * clm;
    s.di_dvds = 0.5 * k * vov * vov * lambda;
  } else {
    s.region = Region::Linear;
    s.i = k * (vov * v_ds - 0.5 * v_ds * v_ds);
    s.di_dvgs = k * v_ds;
    s.di_dvds = k * (vov - v_ds);
  }
  return s;
}

BiasPoint bias_point(const MosDevice& d, double v_gs, double v_ds, double v_sb) {
  require(v_ds >= 0, "v_ds is a source-referenced magnitude and must be >= 0");
  double vt = threshold_voltage(d, v_sb);
  // pmos thresholds are negative; the square law works on magnitudes
  double vt_mag = d.type == Polarity::Pmos ? -vt : vt;
  auto s = square_law(d.k_prime * d.w_over_l(), vt_mag, v_gs, v_ds, std::abs(d.lambda));
  return {s.region, s.i, vt};
}

MosCaps mos_capacitances(const MosDevice& d, double v_db, Region region,
                         const PhysicalConstants& pc) {
  require(d.w > 0, "device needs positive width");
  require(d.l_eff() >= 0, "lateral diffusion exceeds drawn length");
  MosCaps c{};
  double cox = d.cox(pc);
  double c_channel = cox * d.w * d.l_eff();
  c.c_ov = cox * d.w * d.l_d;
  switch (region) {
    case Region::Cutoff:
      c.c_gs = c.c_ov;
      c.c_gd = c.c_ov;
      c.c_gb = c_channel;
      break;
    case Region::Linear:
      c.c_gs = c.c_ov + 0.5 * c_channel;
      c.c_gd = c.c_ov + 0.5 * c_channel;
      break;
    case Region::Saturation:
      c.c_gs = c.c_ov + 2.0 / 3.0 * c_channel;
      c.c_gd = c.c_ov;
      break;
  }

  if (d.n_sub > 0 && d.n_diff > 0) {
    require(d.x_j >= 0 && d.y >= 0, "junction geometry must be non-negative");
    c.phi0_bottom = junction_phi(pc, d.n_sub, d.n_diff);
    double cj0 = junction_c0(pc, d.n_sub, d.n_diff, c.phi0_bottom);
    require(v_db > -c.phi0_bottom, "junction forward biased beyond built-in potential");
    double area_cm2 = d.w * (d.y + d.x_j) * kCmPerM * kCmPerM;
    c.c_j0 = cj0 * kCmPerM * kCmPerM;
    c.c_db_bottom = area_cm2 * cj0 / std::pow(1 + v_db / c.phi0_bottom, d.grading);

    double n_sw = d.n_sidewall > 0 ? d.n_sidewall : d.n_sub;
    c.phi0_sidewall = junction_phi(pc, n_sw, d.n_diff);
    double cjsw0 = junction_c0(pc, n_sw, d.n_diff, c.phi0_sidewall);
    double xj_sw = d.x_j_sidewall.value_or(d.x_j);
    double sw_cm2 = (2 * d.y + d.w) * xj_sw * kCmPerM * kCmPerM;
    c.c_jsw0 = cjsw0 * kCmPerM * kCmPerM;
    c.c_db_sidewall = sw_cm2 * cjsw0 / std::pow(1 + v_db / c.phi0_sidewall, d.grading);
    c.c_db = c.c_db_bottom + c.c_db_sidewall;
  }
  return c;
}

std::map<std::string, double> scale_factors(ScalingKind kind, double s, double m) {
  require(s > 0, "scale factor must be positive");
  double S = s, M = m;
  switch (kind) {
    case ScalingKind::ConstantField: M = s; break;
    case ScalingKind::ConstantVoltage: S = 1; M = s; break;
    case ScalingKind::General: require(m > 0, "dimension scale must be positive"); break;
  }
  double current = M / (S * S);
  double area = 1 / (M * M);
  double delay = S / (M * M);
  return {
      {"voltage", 1 / S},
      {"current", current},
      {"capacitance", 1 / M},
      {"resistance", S / M},
      {"sheet_resistance", S / M},
      {"delay", delay},
      {"power", M / (S * S * S)},
      {"energy", 1 / (M * S * S)},
      {"power_density", M * M * M / (S * S * S)},
      {"area", area},
      {"current_density_delay", current / area * delay},
  };
}

namespace {

struct Kcl {
  double f;      // pull-down minus pull-up current
  double f_in;   // d f / d v_in
  double f_out;  // d f / d v_out
  Region driver;
  Region load;
};

Kcl kcl(const InverterParams& p, double vin, double vout) {
  const double vdd = p.v_dd;
  const auto& dn = p.driver;
  const auto& ld = p.load;
  Kcl r{};
  switch (p.config) {
    case InverterConfig::Cmos: {
      auto pd = square_law(dn.k, dn.v_t, vin, vout, dn.lambda);
      auto pu = square_law(ld.k, std::abs(ld.v_t), vdd - vin, vdd - vout, ld.lambda);
      r = {pd.i - pu.i, pd.di_dvgs + pu.di_dvgs, pd.di_dvds + pu.di_dvds, pd.region, pu.region};
      break;
    }
    case InverterConfig::PseudoNmos: {
      auto pd = square_law(dn.k, dn.v_t, vin, vout, dn.lambda);
      auto pu = square_law(ld.k, std::abs(ld.v_t), vdd, vdd - vout, ld.lambda);
      r = {pd.i - pu.i, pd.di_dvgs, pd.di_dvds + pu.di_dvds, pd.region, pu.region};
      break;
    }
    case InverterConfig::DepletionLoad: {
      auto pd = square_law(dn.k, dn.v_t, vin, vout, dn.lambda);
      auto pu = square_law(ld.k, ld.v_t, 0.0, vdd - vout, ld.lambda);
      r = {pd.i - pu.i, pd.di_dvgs, pd.di_dvds + pu.di_dvds, pd.region, pu.region};
      break;
    }
    case InverterConfig::ResistiveLoad: {
      double g = 1.0 / p.r_load;
      if (p.driver_type == Polarity::Nmos) {
        auto pd = square_law(dn.k, dn.v_t, vin, vout, dn.lambda);
        r = {pd.i - (vdd - vout) * g, pd.di_dvgs, pd.di_dvds + g, pd.region, Region::Linear};
      } else {
        auto pu = square_law(dn.k, std::abs(dn.v_t), vdd - vin, vdd - vout, dn.lambda);
        r = {vout * g - pu.i, pu.di_dvgs, g + pu.di_dvds, pu.region, Region::Linear};
      }
      break;
    }
  }
  return r;
}

void check_params(const InverterParams& p) {
  require(p.v_dd > 0, "v_dd must be positive");
  require(p.driver.k > 0, "driver k must be positive");
  if (p.config == InverterConfig::ResistiveLoad)
    require(p.r_load > 0, "resistive load needs r_load > 0");
  else
    require(p.load.k > 0, "load k must be positive");
}

template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double vtc_output(const InverterParams& p, double v_in) {
  check_params(p);
  // f is non-decreasing in v_out: pull-down current rises, pull-up falls
  auto f = [&](double vo) { return kcl(p, v_in, vo).f; };
  if (f(p.v_dd) <= 0) return p.v_dd;
  if (f(0.0) >= 0) return 0.0;
  return bisect(f, 0.0, p.v_dd, 1e-13);
}

VtcResult inverter_vtc(const InverterParams& p) {
  check_params(p);
  const double vdd = p.v_dd;
  auto point = [&](double vin) {
    double vo = vtc_output(p, vin);
    auto k = kcl(p, vin, vo);
    return VtcPoint{vin, vo, k.driver, k.load};
  };
  // slope dVout/dVin = -f_in/f_out; it is steeper than -1 where f_in > f_out
  auto steep = [&](double vin) {
    auto k = kcl(p, vin, vtc_output(p, vin));
    return k.f_in - k.f_out;
  };

  VtcResult r{};
  r.oh = point(0.0);
  r.ol = point(vdd);

  constexpr int kGrid = 4000;
  double prev_v = 0, prev_h = steep(0.0);
  std::optional<double> il, ih;
  for (int i = 1; i <= kGrid; ++i) {
    double v = vdd * i / kGrid;
    double h = steep(v);
    if (!il && prev_h <= 0 && h > 0) il = bisect(steep, prev_v, v, 1e-10);
    if (prev_h > 0 && h <= 0) ih = bisect(steep, prev_v, v, 1e-10);
    prev_v = v;
    prev_h = h;
  }
  if (!il || !ih) fail(ErrorKind::Solver, "transfer curve never reaches unity gain");
  r.il = point(*il);
  r.ih = point(*ih);

  auto g = [&](double vin) { return vtc_output(p, vin) - vin; };
  // with lambda = 0 the curve can be vertical here, so pin v_out to v_in
  double vm = bisect(g, 0.0, vdd, 1e-10);
  auto km = kcl(p, vm, vm);
  r.m = VtcPoint{vm, vm, km.driver, km.load};
  return r;
}

NoiseMargins noise_margins(double v_oh, double v_ol, double v_ih, double v_il) {
  NoiseMargins n{v_oh - v_ih, v_il - v_ol, false};
  n.negative = n.nm_h < 0 || n.nm_l < 0;
  return n;
}

}  // namespace vk
