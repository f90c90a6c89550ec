#include "vlsikit/memory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "vlsikit/error.hpp"

namespace vk {

namespace {

double body_vt(const CellDevice& d, double v_sb) {
  if (d.gamma == 0) return d.v_t;
  require(d.phi2f + v_sb >= 0, "source-body bias below -|2 phi_F|");
  return d.v_t + d.gamma * (std::sqrt(d.phi2f + v_sb) - std::sqrt(d.phi2f));
}

void check_device(const CellDevice& d, const char* role) {
  require(d.k_prime > 0 && d.w_over_l > 0, std::string(role) + " needs positive k' and W/L");
}

// Current of a device held in `region`, valid beyond that region's bounds so
// the KCL can be written as one quadratic.
double forced(double k, double vt, double vgs, double vds, Region region) {
  double vov = vgs - vt;
  switch (region) {
    case Region::Cutoff: return 0;
    case Region::Linear: return k * (vov * vds - 0.5 * vds * vds);
    case Region::Saturation: return 0.5 * k * vov * vov;
  }
  return 0;
}

std::vector<double> quadratic_roots(double a, double b, double c) {
  if (std::abs(a) < 1e-300) {
    if (std::abs(b) < 1e-300) return {};
    return {-c / b};
  }
  double disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  double s = std::sqrt(disc);
  // cancellation-free pair
  double q = -0.5 * (b + std::copysign(s, b));
  std::vector<double> r{q / a, q != 0 ? c / q : -b / (2 * a)};
  std::sort(r.begin(), r.end());
  return r;
}

template <class F>
double bisect_increasing(F&& f, double lo, double hi) {
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CellSolution cell_node_voltage(const SramCell& c, CellMode mode) {
  check_device(c.access, "access device");
  require(c.v_dd > 0, "v_dd must be positive");
  const double vwl = c.wordline(), vbl = c.v_bitline, vdd = c.v_dd;
  const auto& a = c.access;
  CellSolution s{};

  if (mode == CellMode::ReadDisturb) {
    check_device(c.pulldown, "pulldown");
    require(vbl >= 0 && vbl <= vdd, "bitline voltage outside [0, v_dd]");
    auto ia = [&](double v) { return square_law(a.k(), body_vt(a, v), vwl - v, vbl - v); };
    auto id = [&](double v) { return square_law(c.pulldown.k(), c.pulldown.v_t, vdd, v); };
    // access current falls and pulldown current rises with the node voltage
    auto r = [&](double v) { return id(v).i - ia(v).i; };
    s.v = ia(0).i <= 0 ? 0.0 : bisect_increasing(r, 0.0, vbl);
    s.access = ia(s.v).region;
    s.other = id(s.v).region;
    if (a.gamma == 0) {
      auto poly = [&](double v) {
        return forced(a.k(), a.v_t, vwl - v, vbl - v, s.access) -
               forced(c.pulldown.k(), c.pulldown.v_t, vdd, v, s.other);
      };
      double p0 = poly(0), p1 = poly(1), p2 = poly(2);
      s.roots = quadratic_roots((p2 - 2 * p1 + p0) / 2, (4 * p1 - 3 * p0 - p2) / 2, p0);
    }
  } else {
    check_device(c.pullup, "pullup");
    require(vbl >= 0 && vbl < vdd, "write bitline must lie in [0, v_dd)");
    const double vt_a = body_vt(a, vbl);
    auto ia = [&](double v) { return square_law(a.k(), vt_a, vwl - vbl, v - vbl); };
    auto ip = [&](double v) { return square_law(c.pullup.k(), c.pullup.v_t, vdd, vdd - v); };
    auto r = [&](double v) { return ia(v).i - ip(v).i; };
    s.v = ip(vbl).i <= 0 ? vbl : bisect_increasing(r, vbl, vdd);
    s.access = ia(s.v).region;
    s.other = ip(s.v).region;
    if (a.gamma == 0) {
      auto poly = [&](double v) {
        return forced(a.k(), vt_a, vwl - vbl, v - vbl, s.access) -
               forced(c.pullup.k(), c.pullup.v_t, vdd, vdd - v, s.other);
      };
      double p0 = poly(0), p1 = poly(1), p2 = poly(2);
      s.roots = quadratic_roots((p2 - 2 * p1 + p0) / 2, (4 * p1 - 3 * p0 - p2) / 2, p0);
    }
  }
  return s;
}

double write_sizing(const SramCell& c, SizedDevice which, double v_trip) {
  const double vwl = c.wordline(), vbl = c.v_bitline, vdd = c.v_dd;
  require(vdd > 0, "v_dd must be positive");
  require(v_trip >= 0 && v_trip <= vdd, "trip voltage outside [0, v_dd]");
  require(c.access.k_prime > 0 && c.pullup.k_prime > 0, "access and pullup need positive k'");
  const double vt_a = body_vt(c.access, vbl);
  double ia_unit = v_trip > vbl ? square_law(c.access.k_prime, vt_a, vwl - vbl, v_trip - vbl).i : 0.0;
  double ip_unit = square_law(c.pullup.k_prime, c.pullup.v_t, vdd, vdd - v_trip).i;
  if (ia_unit <= 0) fail(ErrorKind::Infeasible, "access device cannot pull the node down");
  if (ip_unit <= 0) fail(ErrorKind::Infeasible, "pullup is off at the trip point");
  if (which == SizedDevice::Pullup) {
    require(c.access.w_over_l > 0, "access W/L must be positive");
    return ia_unit * c.access.w_over_l / ip_unit;
  }
  require(c.pullup.w_over_l > 0, "pullup W/L must be positive");
  return ip_unit * c.pullup.w_over_l / ia_unit;
}

double load_resistor_bound(const CellDevice& access, const CellDevice& pulldown, double v_dd,
                           double v_q_max) {
  check_device(access, "access device");
  require(pulldown.k_prime > 0 && pulldown.w_over_l >= 0, "pulldown needs k' > 0 and W/L >= 0");
  require(v_dd > 0 && v_q_max > 0 && v_q_max < v_dd, "need 0 < v_q_max < v_dd");
  double ia = square_law(access.k(), body_vt(access, v_q_max), v_dd - v_q_max, v_dd - v_q_max).i;
  double id = square_law(pulldown.k(), pulldown.v_t, v_dd, v_q_max).i;
  if (id <= ia) fail(ErrorKind::Infeasible, "pulldown cannot sink the access current");
  return (v_dd - v_q_max) / (id - ia);
}

BitlineModel bitline_model(const BitlineGeometry& g) {
  require(g.rows >= 0, "row count must be non-negative");
  require(g.cell_height > 0 && g.bl_width > 0, "bitline geometry must be positive");
  require(g.access_width >= 0 && g.c_d >= 0 && g.c_pp >= 0 && g.c_fr >= 0 && g.r_sq >= 0,
          "bitline parameters must be non-negative");
  const double len = g.rows * g.cell_height;
  BitlineModel m{};
  m.c_diffusion = g.rows * g.access_width * g.c_d;
  m.c_wire = len * g.bl_width * g.c_pp + g.fringe_edges * len * g.c_fr;
  m.c_total = m.c_diffusion + m.c_wire;
  m.r_total = g.r_sq * len / g.bl_width;
  m.delay = m.r_total * m.c_total / 2;
  return m;
}

ReadDelay blocked_read_delay(const ArrayPlan& p) {
  require(p.rows >= 1 && p.cols >= 1, "array needs at least one row and column");
  require(p.decode_levels >= 0 && p.mux_levels >= 0, "level counts must be non-negative");
  auto tri = [](double n) { return 0.69 * n * (n + 1) / 2; };
  ReadDelay d{static_cast<double>(p.decode_levels), tri(p.cols), tri(p.rows),
              static_cast<double>(p.mux_levels), std::nullopt};
  bool wires = p.r_word && p.c_word && p.r_bit && p.c_bit;
  bool gate = p.decode_levels == 0 || p.d_gate;
  bool mux = p.mux_levels == 0 || p.d_mux;
  if (wires && gate && mux) {
    d.total = d.k_word * *p.r_word * *p.c_word + d.k_bit * *p.r_bit * *p.c_bit +
              (p.decode_levels ? d.k_gate * *p.d_gate : 0.0) +
              (p.mux_levels ? d.k_mux * *p.d_mux : 0.0);
  }
  return d;
}

long decoder_cost(const std::vector<DecoderStage>& plan) {
  long total = 0;
  for (const auto& s : plan) {
    require(s.count >= 0, "gate count must be non-negative");
    if (s.kind == GateKind::Inverter) {
      require(s.fan_in == 1, "an inverter has one input");
    } else {
      require(s.fan_in >= 1, "fan-in must be at least 1");
    }
    total += s.count * 2L * s.fan_in;
  }
  return total;
}

namespace {

int log2_exact(long n, const char* what) {
  require(n >= 1 && std::has_single_bit(static_cast<unsigned long>(n)),
          std::string(what) + " count must be a power of two");
  return std::countr_zero(static_cast<unsigned long>(n));
}

}  // namespace

std::vector<AddressField> address_decode(const AddressMap& m, std::uint64_t address) {
  require(m.address_bits >= 1 && m.address_bits <= 64, "address width must lie in 1..64");
  std::map<std::string, int> widths{{"chip", log2_exact(m.chips, "chip")},
                                    {"bank", log2_exact(m.banks, "bank")},
                                    {"row", log2_exact(m.rows, "row")},
                                    {"col", log2_exact(m.cols, "column")}};
  int used = 0;
  for (const auto& [k, w] : widths) used += w;
  require(used <= m.address_bits, "fields exceed the address width");
  widths["unused"] = m.address_bits - used;
  if (m.address_bits < 64) require(address >> m.address_bits == 0, "address exceeds the address width");

  std::vector<std::string> order = m.order;
  require(order.size() == widths.size(), "field order must name each field once");
  std::vector<AddressField> out;
  int lsb = m.address_bits;
  for (const auto& name : order) {
    auto it = widths.find(name);
    require(it != widths.end(), "unknown address field '" + name + "'");
    require(std::none_of(out.begin(), out.end(), [&](const AddressField& f) { return f.name == name; }),
            "field '" + name + "' listed twice");
    int w = it->second;
    lsb -= w;
    std::uint64_t mask = w >= 64 ? ~0ull : (1ull << w) - 1;
    out.push_back({name, w, lsb, w ? (address >> lsb) & mask : 0});
  }
  return out;
}

std::uint64_t address_encode(const std::vector<AddressField>& fields) {
  std::uint64_t a = 0;
  for (const auto& f : fields)
    if (f.width) a |= f.value << f.lsb;
  return a;
}

}  // namespace vk
