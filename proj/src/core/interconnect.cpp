#include "vlsikit/interconnect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vlsikit/error.hpp"

namespace vk {

RcTree::RcTree(double root_c, std::string root_name) {
  require(root_c >= 0, "capacitance must be non-negative");
  nodes_.push_back({-1, 0, root_c, std::move(root_name)});
}

int RcTree::add(int parent, double r, double c, std::string name) {
  require(parent >= 0 && parent < static_cast<int>(nodes_.size()), "unknown parent node");
  require(r >= 0 && c >= 0, "tree resistance and capacitance must be non-negative");
  if (name.empty()) name = "n" + std::to_string(nodes_.size());
  nodes_.push_back({parent, r, c, std::move(name)});
  return static_cast<int>(nodes_.size()) - 1;
}

int RcTree::find(const std::string& name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].name == name) return static_cast<int>(i);
  fail(ErrorKind::Input, "no tree node named '" + name + "'");
}

namespace {

// Nodes are appended after their parent, so a reverse sweep accumulates
// subtree capacitance and a forward sweep accumulates path resistance.
std::vector<double> downstream_c(const RcTree& t) {
  const auto& n = t.nodes();
  std::vector<double> c(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) c[i] = n[i].c;
  for (std::size_t i = n.size(); i-- > 1;) c[n[i].parent] += c[i];
  return c;
}

std::vector<double> root_r(const RcTree& t) {
  const auto& n = t.nodes();
  std::vector<double> r(n.size(), 0.0);
  for (std::size_t i = 1; i < n.size(); ++i) r[i] = r[n[i].parent] + n[i].r;
  return r;
}

std::vector<bool> on_path(const RcTree& t, int sink) {
  std::vector<bool> p(t.size(), false);
  for (int v = sink; v >= 0; v = t.nodes()[v].parent) p[v] = true;
  return p;
}

// deepest common ancestor resistance of k and the sink path
double shared_r(const RcTree& t, const std::vector<bool>& path, const std::vector<double>& rr, int k) {
  int v = k;
  while (!path[v]) v = t.nodes()[v].parent;
  return rr[v];
}

}  // namespace

double elmore(const RcTree& tree, int sink, double scale) {
  require(sink >= 0 && sink < static_cast<int>(tree.size()), "unknown sink node");
  const auto& n = tree.nodes();
  auto dc = downstream_c(tree);
  auto rr = root_r(tree);
  auto path = on_path(tree, sink);

  double by_r = 0;
  for (int v = sink; v > 0; v = n[v].parent) by_r += n[v].r * dc[v];
  double by_c = 0;
  for (std::size_t k = 0; k < n.size(); ++k) by_c += n[k].c * shared_r(tree, path, rr, static_cast<int>(k));

  if (std::abs(by_r - by_c) > 1e-9 * std::max({std::abs(by_r), std::abs(by_c), 1e-300}))
    fail(ErrorKind::Solver, "Elmore forms disagree");
  return scale * by_r;
}

std::vector<double> elmore_all(const RcTree& tree, double scale) {
  std::vector<double> out;
  for (std::size_t i = 0; i < tree.size(); ++i) out.push_back(elmore(tree, static_cast<int>(i), scale));
  return out;
}

WireRc wire_rc(const WireGeometry& w) {
  require(w.length > 0 && w.width > 0, "wire needs positive length and width");
  require(w.r_sheet >= 0 && w.c_area >= 0 && w.c_fringe_per_edge >= 0 && w.fringe_edges >= 0,
          "wire parameters must be non-negative");
  return {w.r_sheet * w.length / w.width,
          w.c_area * w.length * w.width + w.c_fringe_per_edge * w.length * w.fringe_edges};
}

namespace {

void check_driver(const DriverModel& d) {
  if (d.kind == DriverModel::Kind::FixedDelay)
    require(d.delay >= 0, "fixed delay must be non-negative");
  else
    require(d.r >= 0 && d.c_out >= 0 && d.c_in >= 0, "driver parameters must be non-negative");
}

double stage(const DriverModel& d, double r_seg, double c_seg, double c_recv, double scale) {
  double t = scale * r_seg * (c_seg + c_recv);
  if (d.kind == DriverModel::Kind::FixedDelay) return t + d.delay;
  return t + scale * d.r * (d.c_out + c_seg + c_recv);
}

}  // namespace

double buffered_wire_delay(const BufferedWire& s, int n) {
  require(n >= 0, "buffer count must be non-negative");
  require(s.r_wire >= 0 && s.c_wire >= 0 && s.c_load >= 0, "wire values must be non-negative");
  check_driver(s.driver);
  check_driver(s.buffer);
  const double r = s.r_wire / (n + 1), c = s.c_wire / (n + 1);
  const double c_buf = s.buffer.kind == DriverModel::Kind::Rc ? s.buffer.c_in : 0.0;
  double t = 0;
  for (int i = 0; i <= n; ++i) {
    const auto& d = i == 0 ? s.driver : s.buffer;
    t += stage(d, r, c, i == n ? s.c_load : c_buf, s.scale);
  }
  return t;
}

BufferedWireResult buffered_wire_delay(const BufferedWire& s) {
  require(s.n_min >= 0 && s.n_max >= s.n_min, "buffer sweep range is empty");
  BufferedWireResult out{{}, s.n_min, std::numeric_limits<double>::infinity()};
  for (int n = s.n_min; n <= s.n_max; ++n) {
    double d = buffered_wire_delay(s, n);
    out.delay.push_back(d);
    // strict improvement beyond rounding keeps the smaller count on ties
    if (d < out.best_delay * (1 - 1e-12)) {
      out.best_delay = d;
      out.best_n = n;
    }
  }
  return out;
}

ChainPlan inverter_chain_plan(double cd_over_cg, double fanout) {
  require(cd_over_cg >= 0, "cd/cg must be non-negative");
  require(fanout >= 1, "fanout must be at least 1");
  // a(ln a - 1) is increasing for a > 1 and equals -1 at a = 1
  auto h = [&](double a) { return a * (std::log(a) - 1) - cd_over_cg; };
  double lo = 1.0, hi = 3.0;
  while (h(hi) < 0) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (h(mid) < 0 ? lo : hi) = mid;
  }
  ChainPlan p{};
  p.alpha = 0.5 * (lo + hi);
  p.stages_exact = std::log(fanout) / std::log(p.alpha);
  p.inverters = std::max(1, static_cast<int>(std::ceil(p.stages_exact - 1e-9)));
  auto cost = [&](int n) { return n * (std::pow(fanout, 1.0 / n) + cd_over_cg); };
  int lo_n = std::max(1, static_cast<int>(std::floor(p.stages_exact)));
  p.delay_optimal = cost(lo_n + 1) < cost(lo_n) ? lo_n + 1 : lo_n;
  return p;
}

namespace {

double drain_current(double k, double vov, double lambda, double v) {
  if (v >= vov) return 0.5 * k * vov * vov * (1 + lambda * v);
  return k * (vov * v - 0.5 * v * v);
}

template <class F>
double simpson(F&& f, double a, double b, int n) {
  if (n % 2) ++n;
  double h = (b - a) / n, s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

}  // namespace

double output_slew(const MosDevice& dev, double c_load, double v_dd, double from_pct, double to_pct,
                   SlewMethod method) {
  require(c_load > 0 && v_dd > 0, "load and supply must be positive");
  require(0 < to_pct && to_pct < from_pct && from_pct <= 1, "need 0 < to_pct < from_pct <= 1");
  const double k = dev.k_prime * dev.w_over_l();
  const double vt = std::abs(threshold_voltage(dev, 0));
  const double vov = v_dd - vt;
  if (vov <= 0) fail(ErrorKind::Domain, "device never turns on: no discharge");
  const double lambda = std::abs(dev.lambda);
  const double v1 = from_pct * v_dd, v2 = to_pct * v_dd;
  auto i = [&](double v) { return drain_current(k, vov, lambda, v); };

  switch (method) {
    case SlewMethod::Acc: return c_load * (v1 - v2) / (0.5 * (i(v1) + i(v2)));
    case SlewMethod::AvgCurrent: {
      // mean current over the voltage window
      double mean = simpson(i, v2, v1, 2000) / (v1 - v2);
      return c_load * (v1 - v2) / mean;
    }
    case SlewMethod::Diff: {
      double t = 0;
      double sat_lo = std::max(v2, vov);
      if (v1 > sat_lo) {
        if (lambda == 0)
          t += c_load * (v1 - sat_lo) / i(v1);
        else
          t += c_load / (0.5 * k * vov * vov * lambda) *
               std::log((1 + lambda * v1) / (1 + lambda * sat_lo));
      }
      double lin_hi = std::min(v1, vov);
      if (lin_hi > v2) {
        // integral of dV / (k V (vov - V/2)) in closed form
        auto prim = [&](double v) { return std::log(v / (2 * vov - v)) / (k * vov); };
        t += c_load * (prim(lin_hi) - prim(v2));
      }
      return t;
    }
  }
  return 0;
}

double avg_current_slew(double c_load, double delta_v, double i_avg) {
  require(c_load > 0 && delta_v > 0, "load and swing must be positive");
  if (i_avg <= 0) fail(ErrorKind::Domain, "no discharge current");
  return c_load * delta_v / i_avg;
}

}  // namespace vk
