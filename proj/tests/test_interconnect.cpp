#include <gtest/gtest.h>

#include <cmath>

#include "support/gen.hpp"
#include "vlsikit/error.hpp"
#include "vlsikit/interconnect.hpp"

namespace {

using namespace vk;

RcTree rebuild(const RcTree& t, int node, double dr, double dc) {
  const auto& n = t.nodes();
  RcTree out(n[0].c + (node == 0 ? dc : 0));
  for (std::size_t i = 1; i < n.size(); ++i) {
    bool hit = static_cast<int>(i) == node;
    out.add(n[i].parent, n[i].r + (hit ? dr : 0), n[i].c + (hit ? dc : 0));
  }
  return out;
}

TEST(Elmore, SingleLump) {
  RcTree t;
  int a = t.add(0, 50e3, 20e-15);
  EXPECT_NEAR(elmore(t, a), 1e-9, 1e-21);
  EXPECT_NEAR(elmore(t, a, kLn2Scale), 0.69e-9, 1e-21);
}

TEST(Elmore, TwoStageLadder) {
  RcTree t;
  int a = t.add(0, 1, 1);
  int b = t.add(a, 1, 1);
  EXPECT_DOUBLE_EQ(elmore(t, b), 3);
  EXPECT_DOUBLE_EQ(elmore(t, a), 2);
  EXPECT_DOUBLE_EQ(elmore(t, 0), 0);
}

TEST(Elmore, UnknownSink) {
  RcTree t;
  t.add(0, 1, 1);
  EXPECT_THROW(elmore(t, 5), Error);
}

TEST(Elmore, MatchesSharedPathOracleOnTwentyNodeTrees) {
  vk::testing::Gen gen(31);
  for (int k = 0; k < 100; ++k) {
    RcTree t(0);
    for (int i = 1; i <= 20; ++i)
      t.add(gen.uniform_int(0, i - 1), gen.log_uniform(1, 1e4), gen.log_uniform(1e-16, 1e-12));
    auto all = elmore_all(t);
    for (int s = 0; s < 21; ++s) {
      double want = vk::testing::elmore_shared_path(t, s);
      EXPECT_NEAR(all[s], want, 1e-12 * want);
    }
  }
}

TEST(Elmore, MonotoneInEveryElement) {
  vk::testing::Gen gen(32);
  for (int k = 0; k < 100; ++k) {
    RcTree t = gen.rc_tree(15);
    auto base = elmore_all(t);
    int node = gen.uniform_int(0, static_cast<int>(t.size()) - 1);
    auto more_r = elmore_all(rebuild(t, node, node > 0 ? gen.uniform(1, 100) : 0, 0));
    auto more_c = elmore_all(rebuild(t, node, 0, gen.uniform(1e-15, 1e-13)));
    for (std::size_t s = 0; s < t.size(); ++s) {
      EXPECT_GE(more_r[s], base[s] * (1 - 1e-12));
      EXPECT_GE(more_c[s], base[s] * (1 - 1e-12));
    }
  }
}

TEST(WireRc, LongFringeOnlyWire) {
  WireGeometry w{9e-3, 3 * 0.125e-6, 0.025, 0, 50e-15 / 1e-3 / 2, 2};
  auto rc = wire_rc(w);
  EXPECT_NEAR(rc.r, 600, 1e-9);
  EXPECT_NEAR(rc.c, 450e-15, 1e-24);
}

TEST(WireRc, AreaPlusFringe) {
  WireGeometry w{10000e-6, 0.4e-6, 0.08, 8e-18 / 1e-12, 23e-18 / 1e-6, 1};
  auto rc = wire_rc(w);
  EXPECT_NEAR(rc.r, 2000, 1e-9);
  EXPECT_NEAR(rc.c, 0.262e-12, 1e-18);
}

TEST(WireRc, RejectsZeroLength) {
  EXPECT_THROW(wire_rc(WireGeometry{0, 1e-6, 0.1, 0, 0, 2}), Error);
}

TEST(BufferedWire, FixedDelaySweep) {
  BufferedWire b;
  b.r_wire = 50e3;
  b.c_wire = 20e-15;
  b.buffer = DriverModel::fixed(0.25e-9);
  b.n_max = 4;
  auto r = buffered_wire_delay(b);
  EXPECT_NEAR(r.delay[0], 1e-9, 1e-18);
  EXPECT_NEAR(r.delay[1], 0.75e-9, 1e-18);
  EXPECT_NEAR(r.delay[2], 0.25e-9 * 2 + 1e-9 / 3, 1e-18);
  EXPECT_EQ(r.best_n, 1);
  EXPECT_DOUBLE_EQ(r.best_delay, r.delay[1]);
}

TEST(BufferedWire, FreeBuffersNeverHurt) {
  vk::testing::Gen gen(33);
  for (int k = 0; k < 100; ++k) {
    BufferedWire b;
    b.r_wire = gen.log_uniform(10, 1e5);
    b.c_wire = gen.log_uniform(1e-15, 1e-11);
    b.c_load = gen.coin() ? 0 : gen.log_uniform(1e-16, 1e-13);
    b.n_max = 20;
    auto r = buffered_wire_delay(b);
    for (std::size_t n = 1; n < r.delay.size(); ++n) EXPECT_LE(r.delay[n], r.delay[n - 1] * (1 + 1e-12));
  }
}

TEST(ChainPlan, ThousandFoldLoad) {
  auto p = inverter_chain_plan(1, 1000);
  EXPECT_NEAR(p.alpha, 3.59, 0.005);
  EXPECT_EQ(p.inverters, 6);
  EXPECT_EQ(inverter_chain_plan(1, 1).inverters, 1);
  EXPECT_THROW(inverter_chain_plan(1, 0.5), Error);
}

TEST(ChainPlan, AlphaMinimizesContinuousStageCost) {
  for (double gamma : {0.0, 0.5, 1.0, 2.0}) {
    double f = 1e4;
    auto p = inverter_chain_plan(gamma, f);
    double best_n = 1, best = 1e300;
    for (double n = 1; n <= 40; n += 1e-4) {
      double cost = n * (std::pow(f, 1 / n) + gamma);
      if (cost < best) best = cost, best_n = n;
    }
    EXPECT_NEAR(std::pow(f, 1 / best_n), p.alpha, 1e-3 * p.alpha) << gamma;
    int int_best = 1;
    for (int n = 1; n <= 60; ++n)
      if (n * (std::pow(f, 1.0 / n) + gamma) < int_best * (std::pow(f, 1.0 / int_best) + gamma)) int_best = n;
    EXPECT_EQ(p.delay_optimal, int_best) << gamma;
  }
}

// Forward-Euler integration of C dV/dt = -I(V) with a very small step.
double ode_fall_time(double k, double vt, double c, double vdd, double from, double to) {
  double v = from * vdd, t = 0;
  const double vov = vdd - vt;
  while (v > to * vdd) {
    double i = v >= vov ? 0.5 * k * vov * vov : k * (vov * v - 0.5 * v * v);
    double dv = std::min(1e-5 * vdd, v - to * vdd);
    t += c * dv / i;
    v -= dv;
  }
  return t;
}

TEST(OutputSlew, AccAndDiffMethods) {
  MosDevice d;
  d.k_prime = 50e-6;
  d.w = 12e-6;
  d.l = 1e-6;
  d.v_t0 = 0.7;
  EXPECT_NEAR(output_slew(d, 10e-12, 3, 0.9, 0.1, SlewMethod::Acc), 24.31e-9, 0.01 * 24.31e-9);
  EXPECT_NEAR(output_slew(d, 10e-12, 3, 0.9, 0.1, SlewMethod::Diff), 21.82e-9, 0.01 * 21.82e-9);
}

TEST(OutputSlew, DiffAgreesWithIntegration) {
  vk::testing::Gen gen(34);
  for (int k = 0; k < 50; ++k) {
    MosDevice d;
    d.k_prime = gen.log_uniform(1e-5, 2e-4);
    d.w = gen.uniform(1e-6, 2e-5);
    d.l = 1e-6;
    d.v_t0 = gen.uniform(0.3, 0.9);
    double vdd = gen.uniform(1.5, 5), c = gen.log_uniform(1e-14, 1e-11);
    double from = gen.uniform(0.6, 1.0), to = gen.uniform(0.05, 0.5);
    double diff = output_slew(d, c, vdd, from, to, SlewMethod::Diff);
    double ode = ode_fall_time(d.k_prime * d.w_over_l(), d.v_t0, c, vdd, from, to);
    EXPECT_NEAR(diff, ode, 0.01 * ode);
    // the endpoint average is a coarse estimate; check it against its own definition
    double k_dev = d.k_prime * d.w_over_l(), vov = vdd - d.v_t0;
    auto current = [&](double v) { return v >= vov ? 0.5 * k_dev * vov * vov : k_dev * (vov * v - 0.5 * v * v); };
    double acc = output_slew(d, c, vdd, from, to, SlewMethod::Acc);
    double i_avg = 0.5 * (current(from * vdd) + current(to * vdd));
    EXPECT_NEAR(acc, c * (from - to) * vdd / i_avg, 1e-9 * acc);
  }
}

TEST(OutputSlew, DeviceThatNeverTurnsOn) {
  MosDevice d;
  d.k_prime = 50e-6;
  d.w = 1e-6;
  d.l = 1e-6;
  d.v_t0 = 2;
  EXPECT_THROW(output_slew(d, 1e-12, 1.5, 0.9, 0.1, SlewMethod::Diff), Error);
}

TEST(OutputSlew, AverageCurrent) {
  EXPECT_NEAR(avg_current_slew(50e-15, 0.5, 8e-6), 3.125e-9, 1e-20);
}

}  // namespace
