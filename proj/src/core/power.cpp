#include "vlsikit/power.hpp"

#include <bit>
#include <cmath>

#include "vlsikit/error.hpp"

namespace vk {

double signal_probability(const BoolExpr& f, const std::map<std::string, double>& p_inputs) {
  auto vars = variables(f);
  if (vars.size() > 24) fail(ErrorKind::Size, "exact enumeration is limited to 24 inputs");
  std::vector<double> p;
  for (const auto& v : vars) {
    auto it = p_inputs.find(v);
    require(it != p_inputs.end(), "no probability for input '" + v + "'");
    require(it->second >= 0 && it->second <= 1, "probability of '" + v + "' outside [0, 1]");
    p.push_back(it->second);
  }
  CompiledExpr fn(f, vars);
  const std::uint64_t n = 1ull << vars.size();
  double total = 0;
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    if (!fn(bits)) continue;
    double w = 1;
    for (std::size_t i = 0; i < p.size(); ++i) w *= (bits >> i) & 1u ? p[i] : 1 - p[i];
    total += w;
  }
  return total;
}

double activity(double p) {
  require(p >= 0 && p <= 1, "probability outside [0, 1]");
  return 2 * p * (1 - p);
}

SwitchingPower switching_power(const std::vector<LoadPoint>& nodes, double v_dd, double f) {
  require(v_dd >= 0 && f >= 0, "supply and frequency must be non-negative");
  SwitchingPower s{0, {}};
  for (const auto& n : nodes) {
    require(n.c >= 0 && n.beta >= 0, "node '" + n.name + "' needs non-negative C and activity");
    double p = 0.5 * n.c * v_dd * v_dd * f * n.beta;
    s.per_node.push_back(p);
    s.total += p;
  }
  return s;
}

ShortCircuit short_circuit_power(double k, double v_dd, double v_t, double tau_in, double f,
                                 double beta) {
  require(k > 0 && v_dd > 0 && v_t >= 0, "need k > 0, v_dd > 0, v_t >= 0");
  require(tau_in >= 0 && f >= 0 && beta >= 0, "timing and activity must be non-negative");
  double overlap = v_dd - 2 * v_t;
  if (overlap <= 0) return {0, 0};
  double e = k / 24 * overlap * overlap * overlap * tau_in;
  return {e, e * f * beta};
}

VoltageScaling voltage_scaling_factors(double v_from, double v_to, double v_t, double sc_exponent) {
  require(v_from > 0 && v_to > 0, "supplies must be positive");
  if (v_to <= 2 * v_t || v_from <= 2 * v_t)
    fail(ErrorKind::Domain, "supply at or below 2 v_t: no short-circuit conduction");
  double sc = v_from * std::pow(v_from - 2 * v_t, sc_exponent) /
              (v_to * std::pow(v_to - 2 * v_t, sc_exponent));
  double r = v_from / v_to;
  return {r * r, sc};
}

StackLeakage leakage_stack(double v_dd, double dibl, double swing) {
  require(v_dd > 0 && dibl >= 0 && swing > 0, "need v_dd > 0, dibl >= 0, swing > 0");
  double vx = (1 + dibl) / (1 + 2 * dibl) * v_dd;
  return {vx, std::pow(10.0, -dibl * vx / swing)};
}

double adiabatic_energy(double r_on, double c, double v, double t_ramp) {
  require(r_on >= 0 && c >= 0, "R and C must be non-negative");
  require(t_ramp > 0, "ramp time must be positive");
  return r_on * c / t_ramp * c * v * v;
}

BusSplit bus_split(int n_bits, double m, double locality) {
  require(n_bits >= 1, "bus needs at least one bit");
  require(m >= 1, "segment count must be at least 1");
  require(locality >= 0 && locality < 1, "locality must lie in [0, 1)");
  double a = locality + 2 * (1 - locality);
  double b = (1 - locality) / n_bits;
  auto saving = [&](double mm) { return (1 - a / mm - b * mm) * 100; };
  double m_opt = std::sqrt(a / b);
  return {saving(m), m_opt, saving(m_opt)};
}

std::uint64_t to_gray(std::uint64_t b) { return b ^ (b >> 1); }

GrayCount gray_code(const std::vector<std::uint64_t>& seq, int width) {
  require(width >= 1 && width <= 63, "width must lie in 1..63");
  const std::uint64_t limit = 1ull << width;
  GrayCount g{0, 0, 0};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    require(seq[i] < limit, "sequence value exceeds the bit width");
    if (i == 0) continue;
    g.binary += std::popcount(seq[i] ^ seq[i - 1]);
    g.gray += std::popcount(to_gray(seq[i]) ^ to_gray(seq[i - 1]));
  }
  g.saved = g.binary - g.gray;
  return g;
}

}  // namespace vk
