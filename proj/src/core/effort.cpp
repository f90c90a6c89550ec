#include "vlsikit/effort.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "vlsikit/error.hpp"

namespace vk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void literals(const SpNetwork& n, std::vector<std::pair<std::string, std::string>>& out) {
  if (n.kind == SpNetwork::Kind::Switch) {
    if (n.input.empty()) return;
    auto key = std::make_pair(n.literal(), n.input);
    if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
    return;
  }
  for (const auto& c : n.children) literals(c, out);
}

double literal_width(const SpNetwork& n, const std::string& literal) {
  if (n.kind == SpNetwork::Kind::Switch)
    return !n.input.empty() && n.literal() == literal ? n.width : 0.0;
  double s = 0;
  for (const auto& c : n.children) s += literal_width(c, literal);
  return s;
}

// Width of the devices whose drain touches the output.
double output_width(const SpNetwork& n) {
  switch (n.kind) {
    case SpNetwork::Kind::Switch: return n.width;
    case SpNetwork::Kind::Series: return output_width(n.children.front());
    case SpNetwork::Kind::Parallel: {
      double s = 0;
      for (const auto& c : n.children) s += output_width(c);
      return s;
    }
  }
  return 0;
}

struct Drive {
  double fall = 0;
  double rise = 0;
};

// Worst pull-down and pull-up resistance over assignments where toggling
// `var` toggles the network's conduction.
Drive sensitized_drive(const CompoundGate& g, const std::string& var) {
  const auto& in = g.inputs;
  if (in.size() > 20) fail(ErrorKind::Size, "effort derivation enumerates at most 20 inputs");
  const bool ratioed = g.pull_up == PullUp::PseudoNmos;
  const double r_load = ratioed ? g.mu / g.pun.width : 0;
  Drive d;
  std::map<std::string, bool> a;
  for (std::uint64_t v = 0; v < (1ull << in.size()); ++v) {
    for (std::size_t i = 0; i < in.size(); ++i) a[in[i]] = (v >> i) & 1u;
    auto flipped = a;
    flipped[var] = !a[var];
    double rf = network_resistance(g.pdn, a, false, g.mu);
    if (std::isfinite(rf) && !std::isfinite(network_resistance(g.pdn, flipped, false, g.mu))) {
      if (ratioed) {
        if (rf >= r_load) fail(ErrorKind::Domain, "pull-down weaker than the pmos load");
        rf = rf * r_load / (r_load - rf);
      }
      d.fall = std::max(d.fall, rf);
    }
    if (ratioed) {
      d.rise = r_load;
    } else {
      double rr = network_resistance(g.pun, a, true, g.mu);
      if (std::isfinite(rr) && !std::isfinite(network_resistance(g.pun, flipped, true, g.mu)))
        d.rise = std::max(d.rise, rr);
    }
  }
  return d;
}

double stage_delay_product(const CompoundGate& ref) {
  std::vector<std::pair<std::string, std::string>> lits;
  literals(ref.pdn, lits);
  require(!lits.empty(), "reference gate has no inputs");
  double r = 0, c = 0;
  for (const auto& [lit, var] : lits) {
    r = std::max(r, sensitized_drive(ref, var).fall);
    c = std::max(c, literal_width(ref.pdn, lit) + literal_width(ref.pun, lit));
  }
  require(r > 0 && c > 0, "reference gate never switches");
  return r * c;
}

}  // namespace

const InputEffort& GateTemplate::input(const std::string& literal) const {
  for (const auto& i : inputs)
    if (i.input == literal) return i;
  fail(ErrorKind::Input, "template '" + name + "' has no input '" + literal + "'");
}

CompoundGate inverter_gate(GateReference ref, double mu) {
  return compound_gate(BoolExpr::var("A"), ref, mu);
}

GateTemplate derive_template(const CompoundGate& gate, const CompoundGate& reference,
                             double cd_over_cg, std::string name) {
  require(cd_over_cg >= 0, "cd/cg must be non-negative");
  const double norm = stage_delay_product(reference);
  GateTemplate t;
  t.name = std::move(name);
  t.c_parasitic = cd_over_cg * (output_width(gate.pdn) + output_width(gate.pun));

  std::vector<std::pair<std::string, std::string>> lits;
  literals(gate.pdn, lits);
  for (const auto& [lit, var] : lits) {
    auto d = sensitized_drive(gate, var);
    InputEffort e;
    e.input = lit;
    e.c_in = literal_width(gate.pdn, lit) +
             (gate.pull_up == PullUp::Complementary ? literal_width(gate.pun, lit) : 0.0);
    e.g_fall = d.fall * e.c_in / norm;
    e.g_rise = d.rise * e.c_in / norm;
    e.p_fall = d.fall * t.c_parasitic / norm;
    e.p_rise = d.rise * t.c_parasitic / norm;
    t.p_fall = std::max(t.p_fall, e.p_fall);
    t.p_rise = std::max(t.p_rise, e.p_rise);
    t.inputs.push_back(e);
  }
  return t;
}

NandNorEffort nand_nor_effort(GateFamily family, int n, double mu) {
  require(n >= 1, "gate needs at least one input");
  require(mu > 0, "mobility ratio must be positive");
  double g = family == GateFamily::Nand ? (n + mu) / (1 + mu) : (1 + n * mu) / (1 + mu);
  return {g, n * g, static_cast<double>(n)};
}

PathStage stage_from(const GateTemplate& t, const std::string& literal, Edge edge, double b) {
  const auto& in = t.input(literal);
  PathStage s;
  s.name = t.name;
  s.b = b;
  s.inverting = t.inverting;
  switch (edge) {
    case Edge::Rise: s.g = in.g_rise; s.p = in.p_rise; break;
    case Edge::Fall: s.g = in.g_fall; s.p = in.p_fall; break;
    case Edge::Mean:
      s.g = 0.5 * (in.g_rise + in.g_fall);
      s.p = 0.5 * (in.p_rise + in.p_fall);
      break;
  }
  return s;
}

PathResult path_delay(const PathSpec& path) {
  require(!path.stages.empty(), "path needs at least one stage");
  require(path.c_in > 0 && path.c_load > 0, "path capacitances must be positive");
  PathResult r{};
  r.N = static_cast<int>(path.stages.size());
  r.G = r.B = 1;
  r.P = 0;
  for (const auto& s : path.stages) {
    require(s.g > 0 && s.b >= 1 && s.p >= 0, "stage '" + s.name + "' has invalid effort");
    r.G *= s.g;
    r.B *= s.b;
    r.P += s.p;
  }
  r.H = path.c_load / path.c_in;
  r.F = r.G * r.B * r.H;
  r.f_hat = std::pow(r.F, 1.0 / r.N);
  r.delay = r.N * r.f_hat + r.P;

  r.c_in.assign(r.N, 0);
  double c_out = path.c_load;
  for (int i = r.N - 1; i >= 0; --i) {
    const auto& s = path.stages[i];
    r.c_in[i] = s.g * s.b * c_out / r.f_hat;
    c_out = r.c_in[i];
  }
  for (const auto& s : path.stages) r.stage_delay.push_back(r.f_hat + s.p);
  return r;
}

OptimizedPath optimize_path(const PathSpec& path, const OptimizeOptions& opts) {
  require(opts.rho > 1, "rho must exceed 1");
  auto base = path_delay(path);
  const int n0 = base.N;
  int parity = 0;
  for (const auto& s : path.stages) parity ^= s.inverting ? 1 : 0;

  auto allowed = [&](int n) {
    int out = parity ^ ((n - n0) & 1);
    switch (opts.polarity) {
      case OutputPolarity::Any: return true;
      case OutputPolarity::Inverting: return out == 1;
      case OutputPolarity::NonInverting: return out == 0;
    }
    return true;
  };

  std::vector<int> ns;
  if (!opts.add_inverters) {
    if (!allowed(n0)) fail(ErrorKind::Infeasible, "path polarity cannot be met without inverters");
    ns.push_back(n0);
  } else {
    int est = static_cast<int>(std::lround(std::log(base.F) / std::log(opts.rho)));
    for (int n = est - 1; n <= est + 1; ++n)
      if (n >= n0 && allowed(n)) ns.push_back(n);
    if (ns.empty()) ns.push_back(allowed(n0) ? n0 : n0 + 1);
  }

  OptimizedPath best;
  double best_d = kInf;
  for (int n : ns) {
    PathSpec p = path;
    for (int k = n0; k < n; ++k) p.stages.push_back({"inv", 1.0, opts.p_inv, 1.0, true});
    auto r = path_delay(p);
    best.candidates.emplace_back(n, r.delay);
    if (r.delay < best_d) {
      best_d = r.delay;
      best.path = p;
      best.result = r;
    }
  }
  return best;
}

std::pair<std::size_t, std::vector<PathResult>> compare_paths(const std::vector<PathSpec>& paths) {
  require(!paths.empty(), "no alternatives to compare");
  std::vector<PathResult> rs;
  std::size_t best = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    rs.push_back(path_delay(paths[i]));
    if (rs[i].delay < rs[best].delay) best = i;
  }
  return {best, rs};
}

namespace {

double branch_delay(int stages, double load, double c_in, double p) {
  return stages * std::pow(load / c_in, 1.0 / stages) + stages * p;
}

ForkResult fork_for(const ForkSpec& s, int m) {
  auto h = [&](double x) {
    return branch_delay(m + 1, s.load_long, x, s.p_inv) -
           branch_delay(m, s.load_short, s.c_in_total - x, s.p_inv);
  };
  // long-branch delay falls and short-branch delay rises with x
  double lo = s.c_in_total * 1e-12, hi = s.c_in_total * (1 - 1e-12);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (h(mid) > 0 ? lo : hi) = mid;
  }
  ForkResult r{};
  r.m = m;
  r.x = 0.5 * (lo + hi);
  r.y = s.c_in_total - r.x;
  r.delay = branch_delay(m + 1, s.load_long, r.x, s.p_inv);
  double fl = std::pow(s.load_long / r.x, 1.0 / (m + 1));
  double fs = std::pow(s.load_short / r.y, 1.0 / m);
  for (int i = 0; i <= m; ++i) r.long_caps.push_back(r.x * std::pow(fl, i));
  for (int i = 0; i < m; ++i) r.short_caps.push_back(r.y * std::pow(fs, i));
  return r;
}

}  // namespace

ForkResult design_fork(const ForkSpec& spec) {
  require(spec.c_in_total > 0, "fork input capacitance must be positive");
  require(spec.load_long > 0 && spec.load_short > 0, "fork loads must be positive");
  require(spec.rho > 1, "rho must exceed 1");
  std::vector<int> ms;
  if (spec.m) {
    require(*spec.m >= 1, "short branch needs at least one stage");
    ms.push_back(*spec.m);
  } else {
    double est = std::log((spec.load_long + spec.load_short) / spec.c_in_total) / std::log(spec.rho);
    int r = static_cast<int>(std::lround(est));
    for (int m = r - 1; m <= r + 1; ++m)
      if (m >= 1) ms.push_back(m);
    if (ms.empty()) ms.push_back(1);
  }
  ForkResult best{};
  best.delay = kInf;
  std::vector<std::pair<int, double>> cands;
  for (int m : ms) {
    auto r = fork_for(spec, m);
    cands.emplace_back(m, r.delay);
    if (r.delay < best.delay) best = r;
  }
  best.candidates = cands;
  return best;
}

}  // namespace vk
