#include <gtest/gtest.h>

#include <cmath>

#include "support/gen.hpp"
#include "vlsikit/error.hpp"
#include "vlsikit/memory.hpp"

namespace {

using namespace vk;

double sat(double k, double vt, double vgs) {
  double ov = vgs - vt;
  return ov > 0 ? 0.5 * k * ov * ov : 0;
}

double lin(double k, double vt, double vgs, double vds) {
  double ov = vgs - vt;
  return k * (ov - 0.5 * vds) * vds;
}

// Current and region of a device with the given gate and drain overdrive.
std::pair<double, Region> drain(double k, double vt, double vgs, double vds) {
  if (vgs <= vt) return {0, Region::Cutoff};
  if (vds >= vgs - vt) return {sat(k, vt, vgs), Region::Saturation};
  return {lin(k, vt, vgs, vds), Region::Linear};
}

double access_vt(const CellDevice& a, double v_sb) {
  return a.v_t + a.gamma * (std::sqrt(a.phi2f + v_sb) - std::sqrt(a.phi2f));
}

SramCell read_cell() {
  SramCell c;
  c.v_dd = 2;
  c.v_bitline = 2;
  c.access = {60e-6, 2, 0.5};
  c.pulldown = {60e-6, 4, 0.5};
  return c;
}

TEST(Cell, ReadDisturbOfARatioTwoCell) {
  auto s = cell_node_voltage(read_cell(), CellMode::ReadDisturb);
  EXPECT_NEAR(s.v, 0.275, 0.005 * 0.275);
  EXPECT_EQ(s.access, Region::Saturation);
  EXPECT_EQ(s.other, Region::Linear);
  ASSERT_EQ(s.roots.size(), 2u);
  EXPECT_NEAR(std::min(s.roots[0], s.roots[1]), s.v, 1e-9);
}

SramCell random_read_cell(vk::testing::Gen& gen) {
  SramCell c;
  c.v_dd = gen.uniform(1.2, 3.3);
  c.v_bitline = c.v_dd * gen.uniform(0.7, 1.0);
  double kp = gen.log_uniform(2e-5, 2e-4);
  double vt = gen.uniform(0.15, 0.25) * c.v_dd;
  c.access = {kp, gen.uniform(1, 2), vt, gen.coin() ? 0.0 : gen.uniform(0.1, 0.5)};
  c.pulldown = {kp, gen.uniform(2.5, 6), vt};
  return c;
}

TEST(Cell, ReadSolutionSatisfiesKclAndRegions) {
  vk::testing::Gen gen(71);
  for (int k = 0; k < 300; ++k) {
    auto c = random_read_cell(gen);
    auto s = cell_node_voltage(c, CellMode::ReadDisturb);
    auto [ia, ra] = drain(c.access.k(), access_vt(c.access, s.v), c.wordline() - s.v, c.v_bitline - s.v);
    auto [id, rd] = drain(c.pulldown.k(), c.pulldown.v_t, c.v_dd, s.v);
    EXPECT_EQ(s.access, ra);
    EXPECT_EQ(s.other, rd);
    EXPECT_GT(ia, 0);
    EXPECT_NEAR(ia, id, 1e-9 * ia);
  }
}

TEST(Cell, WeakerPulldownDisturbsMore) {
  vk::testing::Gen gen(72);
  for (int k = 0; k < 200; ++k) {
    auto c = random_read_cell(gen);
    double prev = cell_node_voltage(c, CellMode::ReadDisturb).v;
    for (int step = 0; step < 5; ++step) {
      c.pulldown.w_over_l *= 0.9;
      double v = cell_node_voltage(c, CellMode::ReadDisturb).v;
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(Cell, WriteSolutionSatisfiesKcl) {
  vk::testing::Gen gen(73);
  for (int k = 0; k < 300; ++k) {
    SramCell c;
    c.v_dd = gen.uniform(1.2, 3.3);
    c.v_bitline = 0;
    double vt = gen.uniform(0.15, 0.25) * c.v_dd;
    c.access = {gen.log_uniform(5e-5, 2e-4), gen.uniform(1, 3), vt};
    c.pullup = {gen.log_uniform(1e-5, 4e-5), gen.uniform(0.5, 1.5), vt};
    auto s = cell_node_voltage(c, CellMode::Write);
    auto [ia, ra] = drain(c.access.k(), vt, c.wordline(), s.v);
    auto [ip, rp] = drain(c.pullup.k(), vt, c.v_dd, c.v_dd - s.v);
    EXPECT_EQ(s.access, ra);
    EXPECT_EQ(s.other, rp);
    EXPECT_NEAR(ia, ip, 1e-9 * ip);
    EXPECT_LT(s.v, c.v_dd);
  }
}

TEST(Sizing, PluggedBackBalancesCurrents) {
  vk::testing::Gen gen(74);
  for (int k = 0; k < 200; ++k) {
    SramCell c;
    c.v_dd = gen.uniform(1.5, 3.3);
    c.v_bitline = gen.uniform(0, 0.2) * c.v_dd;
    c.access = {gen.log_uniform(5e-5, 2e-4), gen.uniform(1, 3), gen.uniform(0.3, 0.6),
                gen.uniform(0, 0.4)};
    c.pullup = {gen.log_uniform(1e-5, 4e-5), 0, gen.uniform(0.3, 0.6)};
    double v_trip = c.v_bitline + gen.uniform(0.2, 0.4) * c.v_dd;
    double wl = write_sizing(c, SizedDevice::Pullup, v_trip);
    c.pullup.w_over_l = wl;
    double vt_a = access_vt(c.access, c.v_bitline);
    double vgs = c.wordline() - c.v_bitline, vds = v_trip - c.v_bitline;
    double ia = vds < vgs - vt_a ? lin(c.access.k(), vt_a, vgs, vds) : sat(c.access.k(), vt_a, vgs);
    double vsd = c.v_dd - v_trip, ov = c.v_dd - c.pullup.v_t;
    double ip = vsd < ov ? lin(c.pullup.k(), c.pullup.v_t, c.v_dd, vsd) : sat(c.pullup.k(), c.pullup.v_t, c.v_dd);
    EXPECT_NEAR(ia, ip, 1e-9 * ia);
  }
}

TEST(Sizing, NoDriveIsInfeasible) {
  SramCell c;
  c.v_dd = 2;
  c.v_bitline = 0.7;
  c.access = {1e-4, 1, 0.5};
  c.pullup = {3e-5, 1, 0.5};
  EXPECT_THROW(write_sizing(c, SizedDevice::Pullup, 0.7), Error);
}

TEST(LoadResistor, PluggedBackIsTight) {
  vk::testing::Gen gen(75);
  for (int k = 0; k < 200; ++k) {
    double vdd = gen.uniform(1.5, 5), vq = gen.uniform(0.05, 0.15) * vdd, vt = gen.uniform(0.1, 0.2) * vdd;
    CellDevice a{gen.log_uniform(1e-5, 1e-4), 1, vt, gen.uniform(0, 0.4)};
    CellDevice d{a.k_prime, gen.uniform(3, 8), vt};
    double ia = sat(a.k(), access_vt(a, vq), vdd - vq);
    double id = lin(d.k(), vt, vdd, vq);
    if (id <= ia) {
      EXPECT_THROW(load_resistor_bound(a, d, vdd, vq), Error);
      continue;
    }
    double r = load_resistor_bound(a, d, vdd, vq);
    EXPECT_NEAR((vdd - vq) / r + ia, id, 1e-9 * id);
  }
  CellDevice a{5e-5, 1, 0.5}, none{5e-5, 0, 0.5};
  EXPECT_THROW(load_resistor_bound(a, none, 3, 0.3), Error);
}

BitlineGeometry bitline(int rows) {
  BitlineGeometry g;
  g.rows = rows;
  g.cell_height = 5e-6;
  g.bl_width = 0.5e-6;
  g.access_width = 1e-6;
  g.c_d = 0.3e-9;
  g.c_pp = 40e-6;
  g.c_fr = 30e-12;
  g.r_sq = 0.08;
  return g;
}

TEST(Bitline, ScalesWithRows) {
  auto a = bitline_model(bitline(128)), b = bitline_model(bitline(256));
  EXPECT_NEAR(b.c_total, 2 * a.c_total, 1e-12 * b.c_total);
  EXPECT_NEAR(b.r_total, 2 * a.r_total, 1e-12 * b.r_total);
  EXPECT_NEAR(b.delay, 4 * a.delay, 1e-12 * b.delay);
  EXPECT_DOUBLE_EQ(b.delay, b.r_total * b.c_total / 2);
  auto z = bitline_model(bitline(0));
  EXPECT_EQ(z.c_total, 0);
  EXPECT_EQ(z.r_total, 0);
}

TEST(BlockedRead, TriangularCoefficients) {
  for (int n = 1; n <= 300; n += 7) {
    ArrayPlan p;
    p.rows = n;
    p.cols = n + 3;
    auto d = blocked_read_delay(p);
    EXPECT_DOUBLE_EQ(d.k_bit, 0.69 * n * (n + 1) / 2);
    EXPECT_DOUBLE_EQ(d.k_word, 0.69 * (n + 3) * (n + 4) / 2);
  }
  ArrayPlan tall{64, 16, 4, 0};
  auto d = blocked_read_delay(tall);
  EXPECT_NEAR(d.k_word, 93.84, 1e-9);
  EXPECT_NEAR(d.k_bit, 1435.2, 1e-9);
  EXPECT_EQ(d.k_gate, 4);
  EXPECT_FALSE(d.total);
}

TEST(BlockedRead, NumericTotal) {
  ArrayPlan p{1, 1, 2, 1, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0};
  auto d = blocked_read_delay(p);
  ASSERT_TRUE(d.total);
  EXPECT_NEAR(*d.total, 0.69 * 15 + 0.69 * 77 + 2 * 13 + 17, 1e-12);
}

TEST(Decoder, AdditiveOverStages) {
  vk::testing::Gen gen(76);
  for (int k = 0; k < 100; ++k) {
    std::vector<DecoderStage> a, b;
    for (int i = gen.uniform_int(0, 4); i > 0; --i)
      a.push_back({GateKind::Nand, gen.uniform_int(2, 4), gen.uniform_int(1, 1024)});
    for (int i = gen.uniform_int(0, 4); i > 0; --i)
      b.push_back({GateKind::Inverter, 1, gen.uniform_int(1, 1024)});
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(decoder_cost(ab), decoder_cost(a) + decoder_cost(b));
  }
  EXPECT_EQ(decoder_cost({}), 0);
  EXPECT_EQ(decoder_cost({{GateKind::Nor, 3, 10}, {GateKind::Inverter, 1, 4}}), 68);
}

TEST(Address, ByteLaneSplit) {
  AddressMap m;
  m.chips = 8;
  m.banks = 4;
  m.rows = 16384;
  m.cols = 1024;
  const std::uint64_t a = 0x004f1ad8;
  std::map<std::string, std::uint64_t> got;
  for (const auto& f : address_decode(m, a)) got[f.name] = f.value;
  EXPECT_EQ(got["chip"], a & 0x7);
  EXPECT_EQ(got["col"], (a >> 3) & 0x3ff);
  EXPECT_EQ(got["bank"], (a >> 13) & 0x3);
  EXPECT_EQ(got["row"], (a >> 15) & 0x3fff);
  EXPECT_EQ(got["row"], 0b00000010011110u);
  EXPECT_EQ(got["col"], 0b1101011011u);
  for (const auto& f : address_decode(m, 0)) EXPECT_EQ(f.value, 0u);
  EXPECT_THROW(address_decode(m, 1ull << 32), Error);
}

TEST(Address, RoundTrip) {
  vk::testing::Gen gen(77);
  AddressMap m;
  m.chips = 4;
  m.banks = 8;
  m.rows = 4096;
  m.cols = 512;
  for (int k = 0; k < 100000; ++k) {
    std::uint64_t a = gen.bits() & 0xffffffffu;
    ASSERT_EQ(address_encode(address_decode(m, a)), a);
  }
}

}  // namespace
