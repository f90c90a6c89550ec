#include <gtest/gtest.h>

#include <cmath>

#include "support/gen.hpp"
#include "vlsikit/error.hpp"
#include "vlsikit/power.hpp"

namespace {

using namespace vk;

// AND(x, y) -> NOT(OR(NOT x, NOT y)) and the mirror rule, applied everywhere.
BoolExpr de_morgan(const BoolExpr& e) {
  std::vector<BoolExpr> kids;
  for (const auto& a : e.args) kids.push_back(de_morgan(a));
  switch (e.op) {
    case BoolExpr::Op::And:
    case BoolExpr::Op::Or: {
      for (auto& k : kids) k = BoolExpr::lnot(std::move(k));
      auto flipped = e.op == BoolExpr::Op::And ? BoolExpr::lor(std::move(kids)) : BoolExpr::land(std::move(kids));
      return BoolExpr::lnot(std::move(flipped));
    }
    case BoolExpr::Op::Not: return BoolExpr::lnot(std::move(kids[0]));
    case BoolExpr::Op::Xor: return BoolExpr::lxor(std::move(kids));
    default: return e;
  }
}

TEST(Probability, AndOrNode) {
  double p = signal_probability(parse_expr("A B + C"), {{"A", 0.2}, {"B", 0.2}, {"C", 0.667}});
  EXPECT_NEAR(p, 1 - 0.96 * 0.333, 1e-12);
  EXPECT_NEAR(activity(0.68), 0.4352, 1e-12);
}

TEST(Probability, ConstantAndMissingInputs) {
  EXPECT_DOUBLE_EQ(signal_probability(parse_expr("A + A'"), {{"A", 0.3}}), 1);
  EXPECT_DOUBLE_EQ(activity(1), 0);
  EXPECT_THROW(signal_probability(parse_expr("A B"), {{"A", 0.5}}), Error);
  EXPECT_THROW(activity(1.5), Error);
}

TEST(Probability, InvariantUnderDeMorgan) {
  vk::testing::Gen gen(61);
  for (int k = 0; k < 300; ++k) {
    int n = gen.uniform_int(1, 6);
    auto f = gen.expression(n, 4);
    std::map<std::string, double> p;
    for (int i = 0; i < n; ++i) p[vk::testing::Gen::var_name(i)] = gen.uniform(0, 1);
    EXPECT_NEAR(signal_probability(f, p), signal_probability(de_morgan(f), p), 1e-12) << to_string(f);
  }
}

TEST(Probability, ActivityPeaksAtHalf) {
  for (double p = 0; p <= 1.0; p += 0.01) EXPECT_LE(activity(p), 0.5);
  EXPECT_DOUBLE_EQ(activity(0.5), 0.5);
}

TEST(Switching, SingleNode) {
  auto s = switching_power({{"f", 100e-15, 0.4352}}, 1.2, 500e6);
  EXPECT_NEAR(s.total, 15.67e-6, 0.005 * 15.67e-6);
  auto chip = switching_power({{"die", 150e-12 * 70, 0.2}}, 0.9, 450e6);
  EXPECT_NEAR(chip.total, 0.38, 0.005);
}

TEST(Switching, LinearInCapacitanceAndFrequency) {
  vk::testing::Gen gen(62);
  for (int k = 0; k < 200; ++k) {
    std::vector<LoadPoint> nodes;
    for (int i = gen.uniform_int(1, 8); i > 0; --i)
      nodes.push_back({"n", gen.log_uniform(1e-15, 1e-12), gen.uniform(0, 2)});
    double v = gen.uniform(0.5, 3), f = gen.log_uniform(1e6, 1e10), a = gen.uniform(0.1, 10);
    auto base = switching_power(nodes, v, f);
    EXPECT_NEAR(switching_power(nodes, v, a * f).total, a * base.total, 1e-12 * a * base.total);
    std::size_t i = gen.uniform_int(0, static_cast<int>(nodes.size()) - 1);
    auto scaled = nodes;
    scaled[i].c *= a;
    auto s = switching_power(scaled, v, f);
    EXPECT_NEAR(s.per_node[i], a * base.per_node[i], 1e-12 * a * base.per_node[i]);
    EXPECT_NEAR(s.total - s.per_node[i], base.total - base.per_node[i], 1e-12 * base.total);
  }
}

// Charge drawn while both devices conduct as the input ramps 0 -> v_dd,
// each in saturation, integrated with Simpson's rule.
double overlap_energy(double k, double v_dd, double v_t, double tau) {
  const int n = 20000;
  auto current = [&](double t) {
    double vin = v_dd * t / tau;
    double on_n = std::max(0.0, vin - v_t), on_p = std::max(0.0, v_dd - vin - v_t);
    double ov = std::min(on_n, on_p);
    return 0.5 * k * ov * ov;
  };
  double h = tau / n, sum = current(0) + current(tau);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4 : 2) * current(i * h);
  return v_dd * sum * h / 3;
}

TEST(ShortCircuit, FormulaMatchesQuadrature) {
  vk::testing::Gen gen(63);
  for (int i = 0; i < 100; ++i) {
    double k = gen.log_uniform(1e-5, 1e-3), v = gen.uniform(1, 3), vt = gen.uniform(0.1, 0.45) * v;
    double tau = gen.log_uniform(1e-11, 1e-9);
    auto sc = short_circuit_power(k, v, vt, tau, 1e9, 0.3);
    double want = overlap_energy(k, v, vt, tau);
    EXPECT_NEAR(sc.energy_per_edge, want, 0.01 * want);
    EXPECT_NEAR(sc.power, sc.energy_per_edge * 1e9 * 0.3, 1e-12 * sc.power);
  }
}

TEST(ShortCircuit, NoOverlapBelowTwoThresholds) {
  auto sc = short_circuit_power(1e-4, 0.6, 0.3, 1e-10, 1e9, 0.5);
  EXPECT_EQ(sc.power, 0);
  EXPECT_EQ(sc.energy_per_edge, 0);
}

TEST(ShortCircuit, WithinTolerableBandOfThePrintedFigure) {
  auto sc = short_circuit_power(200e-6, 1.2, 0.3, 100e-12, 500e6, 0.3163);
  EXPECT_NEAR(sc.power, 32.5e-9, 0.2 * 32.5e-9);
}

TEST(VoltageScaling, NearThreshold) {
  auto s = voltage_scaling_factors(1.0, 0.5, 0.2);
  EXPECT_NEAR(s.switching, 4, 1e-12);
  EXPECT_NEAR(s.short_circuit, 72, 1e-9);
  auto same = voltage_scaling_factors(0.8, 0.8, 0.1);
  EXPECT_DOUBLE_EQ(same.switching, 1);
  EXPECT_DOUBLE_EQ(same.short_circuit, 1);
  EXPECT_NEAR(voltage_scaling_factors(2, 1, 0, 3).short_circuit, 16, 1e-12);
  EXPECT_THROW(voltage_scaling_factors(1.0, 0.3, 0.2), Error);
}

TEST(Leakage, StackedNodeBalancesCurrents) {
  auto s = leakage_stack(1, 0.1, 0.1);
  EXPECT_NEAR(s.v_x, 11.0 / 12, 1e-12);
  EXPECT_NEAR(s.ratio, std::pow(10, -11.0 / 12), 1e-12);
  auto none = leakage_stack(1.2, 0, 0.1);
  EXPECT_DOUBLE_EQ(none.v_x, 1.2);
  EXPECT_DOUBLE_EQ(none.ratio, 1);

  vk::testing::Gen gen(64);
  for (int k = 0; k < 200; ++k) {
    double v = gen.uniform(0.5, 2), dibl = gen.uniform(0, 0.3), swing = gen.uniform(0.06, 0.12);
    auto r = leakage_stack(v, dibl, swing);
    // upper device: v_gs = 0, v_ds = v - v_x; lower device: v_gs = v_x - v, v_ds = v_x
    double upper = std::pow(10, dibl * (v - r.v_x) / swing);
    double lower = std::pow(10, (r.v_x - v + dibl * r.v_x) / swing);
    EXPECT_NEAR(upper, lower, 1e-12 * upper);
    EXPECT_NEAR(r.ratio, lower / std::pow(10, dibl * v / swing), 1e-12);
  }
}

TEST(Adiabatic, RampedCharging) {
  EXPECT_NEAR(adiabatic_energy(3.3e3, 200e-15, 2, 100e-9), 5.28e-15, 1e-27);
  EXPECT_NEAR(adiabatic_energy(3.3e3, 200e-15, 2, 1000e-9), 0.528e-15, 1e-27);
  EXPECT_THROW(adiabatic_energy(1, 1, 1, 0), Error);
}

TEST(BusSplit, DefaultLocality) {
  vk::testing::Gen gen(65);
  for (int k = 0; k < 100; ++k) {
    int n = gen.uniform_int(1, 128);
    double m = gen.uniform(1, n);
    EXPECT_NEAR(bus_split(n, m, 0.8).saving_pct, (1 - (1.2 / m + 0.2 * m / n)) * 100, 1e-9);
  }
  EXPECT_NEAR(bus_split(24, 1, 0.8).m_opt, 12, 1e-12);
}

TEST(Gray, ThreeBitCounter) {
  std::vector<std::uint64_t> seq{0, 1, 2, 3, 4, 5, 6, 7};
  auto g = gray_code(seq, 3);
  EXPECT_EQ(g.binary, 11);
  EXPECT_EQ(g.gray, 7);
  EXPECT_EQ(g.saved, 4);
  EXPECT_EQ(to_gray(0), 0u);
  EXPECT_THROW(gray_code({8}, 3), Error);
}

}  // namespace
