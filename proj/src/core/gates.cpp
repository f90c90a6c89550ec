#include "vlsikit/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_set>

#include "vlsikit/error.hpp"

namespace vk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void number_leaves(SpNetwork& n, int& next) {
  if (n.kind == SpNetwork::Kind::Switch) {
    n.leaf = next++;
    return;
  }
  for (auto& c : n.children) number_leaves(c, next);
}

SpNetwork build(const BoolExpr& e) {
  using Op = BoolExpr::Op;
  switch (e.op) {
    case Op::Var: return SpNetwork::sw(e.name, 1);
    case Op::Not:
      if (e.args.front().op == Op::Var) return SpNetwork::sw(e.args.front().name, 1, true);
      break;
    case Op::And:
    case Op::Or: {
      std::vector<SpNetwork> kids;
      for (const auto& a : e.args) kids.push_back(build(a));
      return e.op == Op::And ? SpNetwork::series(std::move(kids))
                             : SpNetwork::parallel(std::move(kids));
    }
    default: break;
  }
  fail(ErrorKind::Input, "switch networks need AND/OR over literals, got '" + to_string(e) + "'");
}

// Split a resistance budget: series children share it equally, parallel
// children each get all of it.
void size(SpNetwork& n, double budget, double unit) {
  switch (n.kind) {
    case SpNetwork::Kind::Switch: n.width = unit / budget; break;
    case SpNetwork::Kind::Series:
      for (auto& c : n.children) size(c, budget / n.children.size(), unit);
      break;
    case SpNetwork::Kind::Parallel:
      for (auto& c : n.children) size(c, budget, unit);
      break;
  }
}

double width_sum(const SpNetwork& n) {
  if (n.kind == SpNetwork::Kind::Switch) return n.width;
  double s = 0;
  for (const auto& c : n.children) s += width_sum(c);
  return s;
}

void check_widths(const SpNetwork& n) {
  if (n.kind == SpNetwork::Kind::Switch) {
    require(n.width > 0, "switch '" + n.input + "' needs a positive width");
    return;
  }
  require(!n.children.empty(), "series/parallel node without children");
  for (const auto& c : n.children) check_widths(c);
}

void leaf_inputs(const SpNetwork& n, std::vector<std::string>& out) {
  if (n.kind == SpNetwork::Kind::Switch) {
    if (std::find(out.begin(), out.end(), n.input) == out.end()) out.push_back(n.input);
    return;
  }
  for (const auto& c : n.children) leaf_inputs(c, out);
}

}  // namespace

SpNetwork SpNetwork::sw(std::string input, double width, bool complemented) {
  SpNetwork n;
  n.kind = Kind::Switch;
  n.input = std::move(input);
  n.width = width;
  n.complemented = complemented;
  return n;
}

SpNetwork SpNetwork::series(std::vector<SpNetwork> kids) {
  SpNetwork n;
  n.kind = Kind::Series;
  for (auto& k : kids) {
    if (k.kind == Kind::Series)
      for (auto& g : k.children) n.children.push_back(std::move(g));
    else
      n.children.push_back(std::move(k));
  }
  return n;
}

SpNetwork SpNetwork::parallel(std::vector<SpNetwork> kids) {
  SpNetwork n;
  n.kind = Kind::Parallel;
  for (auto& k : kids) {
    if (k.kind == Kind::Parallel)
      for (auto& g : k.children) n.children.push_back(std::move(g));
    else
      n.children.push_back(std::move(k));
  }
  return n;
}

SpNetwork network_from_expr(const BoolExpr& f) {
  auto n = build(f);
  int next = 0;
  number_leaves(n, next);
  return n;
}

SpNetwork dual(const SpNetwork& n) {
  SpNetwork d = n;
  if (n.kind == SpNetwork::Kind::Switch) return d;
  d.kind = n.kind == SpNetwork::Kind::Series ? SpNetwork::Kind::Parallel : SpNetwork::Kind::Series;
  for (std::size_t i = 0; i < n.children.size(); ++i) d.children[i] = dual(n.children[i]);
  return d;
}

bool evaluate_network(const SpNetwork& n, const std::map<std::string, bool>& assignment,
                      bool pmos) {
  switch (n.kind) {
    case SpNetwork::Kind::Switch: {
      auto it = assignment.find(n.input);
      require(it != assignment.end(), "no value for input '" + n.input + "'");
      bool lit = it->second != n.complemented;
      return pmos ? !lit : lit;
    }
    case SpNetwork::Kind::Series:
      return std::all_of(n.children.begin(), n.children.end(),
                         [&](const SpNetwork& c) { return evaluate_network(c, assignment, pmos); });
    case SpNetwork::Kind::Parallel:
      return std::any_of(n.children.begin(), n.children.end(),
                         [&](const SpNetwork& c) { return evaluate_network(c, assignment, pmos); });
  }
  return false;
}

double network_resistance(const SpNetwork& n, const std::map<std::string, bool>& assignment,
                          bool pmos, double mu) {
  switch (n.kind) {
    case SpNetwork::Kind::Switch:
      if (!evaluate_network(n, assignment, pmos)) return kInf;
      return (pmos ? mu : 1.0) / n.width;
    case SpNetwork::Kind::Series: {
      double r = 0;
      for (const auto& c : n.children) r += network_resistance(c, assignment, pmos, mu);
      return r;
    }
    case SpNetwork::Kind::Parallel: {
      double g = 0;
      for (const auto& c : n.children) g += 1.0 / network_resistance(c, assignment, pmos, mu);
      return g > 0 ? 1.0 / g : kInf;
    }
  }
  return kInf;
}

double CompoundGate::total_width() const { return width_sum(pdn) + width_sum(pun); }

double CompoundGate::area_ratio() const { return total_width() / (ref.w_n + ref_wp()); }

CompoundGate compound_gate(const BoolExpr& pulldown_fn, GateReference ref, double mu) {
  require(mu > 0, "mobility ratio must be positive");
  require(ref.w_n > 0, "reference nmos width must be positive");
  CompoundGate g;
  g.mu = mu;
  g.ref = ref;
  g.pdn = network_from_expr(pulldown_fn);
  g.pun = dual(g.pdn);
  size(g.pdn, 1.0 / ref.w_n, 1.0);
  size(g.pun, mu / g.ref_wp(), mu);
  leaf_inputs(g.pdn, g.inputs);
  return g;
}

CompoundGate sized_gate(SpNetwork pdn, SpNetwork pun, GateReference ref, double mu) {
  check_widths(pdn);
  check_widths(pun);
  CompoundGate g;
  g.mu = mu;
  g.ref = ref;
  g.pdn = std::move(pdn);
  g.pun = std::move(pun);
  int next = 0;
  number_leaves(g.pdn, next);
  // pull-up leaves take the id of the pull-down leaf with the same literal
  std::multimap<std::string, int> ids;
  std::function<void(const SpNetwork&)> gather = [&](const SpNetwork& n) {
    if (n.kind == SpNetwork::Kind::Switch) ids.emplace(n.literal(), n.leaf);
    for (const auto& c : n.children) gather(c);
  };
  gather(g.pdn);
  std::function<void(SpNetwork&)> match = [&](SpNetwork& n) {
    if (n.kind == SpNetwork::Kind::Switch) {
      auto it = ids.find(n.literal());
      if (it != ids.end()) {
        n.leaf = it->second;
        ids.erase(it);
      } else {
        n.leaf = next++;
      }
    }
    for (auto& c : n.children) match(c);
  };
  match(g.pun);
  leaf_inputs(g.pdn, g.inputs);
  leaf_inputs(g.pun, g.inputs);
  return g;
}

CompoundGate pseudo_nmos_gate(SpNetwork pdn, double load_width, GateReference ref, double mu) {
  check_widths(pdn);
  require(load_width > 0, "pmos load needs a positive width");
  CompoundGate g;
  g.mu = mu;
  g.ref = ref;
  g.pull_up = PullUp::PseudoNmos;
  g.pdn = std::move(pdn);
  int next = 0;
  number_leaves(g.pdn, next);
  g.pun = SpNetwork::sw("", load_width);
  leaf_inputs(g.pdn, g.inputs);
  return g;
}

DelayBounds delay_bounds(const CompoundGate& g) {
  const std::size_t n = g.inputs.size();
  if (n > 20) fail(ErrorKind::Size, "delay bounds enumerate at most 20 inputs");
  const double r_ref = 1.0 / g.ref.w_n;
  const bool ratioed = g.pull_up == PullUp::PseudoNmos;
  const double r_load = ratioed ? g.mu / g.pun.width : 0;

  DelayBounds b{0, kInf, 0, kInf};
  std::map<std::string, bool> a;
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    for (std::size_t i = 0; i < n; ++i) a[g.inputs[i]] = (v >> i) & 1u;
    double rf = network_resistance(g.pdn, a, false, g.mu);
    if (std::isfinite(rf)) {
      if (ratioed) {
        if (rf >= r_load) fail(ErrorKind::Domain, "pull-down weaker than the pmos load");
        rf = rf * r_load / (r_load - rf);
      }
      b.worst_fall = std::max(b.worst_fall, rf);
      b.best_fall = std::min(b.best_fall, rf);
    }
    double rr = ratioed ? r_load : network_resistance(g.pun, a, true, g.mu);
    if (std::isfinite(rr) && (ratioed || !std::isfinite(rf))) {
      b.worst_rise = std::max(b.worst_rise, rr);
      b.best_rise = std::min(b.best_rise, rr);
    }
  }
  b.worst_fall /= r_ref;
  b.best_fall /= r_ref;
  b.worst_rise /= r_ref;
  b.best_rise /= r_ref;
  return b;
}

namespace {

void graph_build(const SpNetwork& n, int a, int b, DiffusionGraph& g) {
  switch (n.kind) {
    case SpNetwork::Kind::Switch: g.edges.push_back({a, b, n.leaf}); break;
    case SpNetwork::Kind::Parallel:
      for (const auto& c : n.children) graph_build(c, a, b, g);
      break;
    case SpNetwork::Kind::Series: {
      int from = a;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        int to = i + 1 == n.children.size() ? b : g.vertices++;
        graph_build(n.children[i], from, to, g);
        from = to;
      }
      break;
    }
  }
}

// Series node sizes in preorder.
void series_sizes(const SpNetwork& n, std::vector<std::size_t>& out) {
  if (n.kind == SpNetwork::Kind::Series) out.push_back(n.children.size());
  for (const auto& c : n.children) series_sizes(c, out);
}

// Copy of `n` with the children of the k-th series node (preorder) arranged by perm[k].
SpNetwork permuted(const SpNetwork& n, const std::vector<std::vector<int>>& perm, std::size_t& k) {
  SpNetwork out = n;
  std::size_t mine = n.kind == SpNetwork::Kind::Series ? k++ : 0;
  for (std::size_t i = 0; i < n.children.size(); ++i) out.children[i] = permuted(n.children[i], perm, k);
  if (n.kind == SpNetwork::Kind::Series) {
    auto kids = out.children;
    for (std::size_t i = 0; i < kids.size(); ++i) out.children[i] = kids[perm[mine][i]];
  }
  return out;
}

int leaf_count(const SpNetwork& n) {
  if (n.kind == SpNetwork::Kind::Switch) return 1;
  int s = 0;
  for (const auto& c : n.children) s += leaf_count(c);
  return s;
}

void leaf_literals(const SpNetwork& n, std::map<int, std::string>& out) {
  if (n.kind == SpNetwork::Kind::Switch) {
    out[n.leaf] = n.literal();
    return;
  }
  for (const auto& c : n.children) leaf_literals(c, out);
}

// Walk both graphs in lockstep, consuming the same leaf in each.
class LockstepWalk {
 public:
  LockstepWalk(const DiffusionGraph& p, const DiffusionGraph& q, int leaves)
      : p_(p), q_(q), leaves_(leaves), pe_(leaves), qe_(leaves) {
    for (const auto& e : p.edges) at(pe_, e.leaf) = e;
    for (const auto& e : q.edges) at(qe_, e.leaf) = e;
  }

  bool run(std::vector<int>& order) {
    for (int vp = 0; vp < p_.vertices; ++vp)
      for (int vq = 0; vq < q_.vertices; ++vq) {
        order.clear();
        if (dfs(vp, vq, 0, order)) return true;
      }
    return false;
  }

 private:
  static DiffusionGraph::Edge& at(std::vector<DiffusionGraph::Edge>& v, int leaf) {
    if (leaf < 0 || leaf >= static_cast<int>(v.size()))
      fail(ErrorKind::Input, "pull-up and pull-down devices do not correspond");
    return v[leaf];
  }

  static int other(const DiffusionGraph::Edge& e, int v) {
    if (e.a == v) return e.b;
    if (e.b == v) return e.a;
    return -1;
  }

  bool dfs(int vp, int vq, std::uint32_t used, std::vector<int>& order) {
    if (used == (1u << leaves_) - 1) return true;
    std::uint64_t key = (static_cast<std::uint64_t>(vp) << 48) |
                        (static_cast<std::uint64_t>(vq) << 32) | used;
    if (dead_.count(key)) return false;
    for (int leaf = 0; leaf < leaves_; ++leaf) {
      if (used & (1u << leaf)) continue;
      int np = other(pe_[leaf], vp);
      int nq = other(qe_[leaf], vq);
      if (np < 0 || nq < 0) continue;
      order.push_back(leaf);
      if (dfs(np, nq, used | (1u << leaf), order)) return true;
      order.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  const DiffusionGraph& p_;
  const DiffusionGraph& q_;
  int leaves_;
  std::vector<DiffusionGraph::Edge> pe_, qe_;
  std::unordered_set<std::uint64_t> dead_;
};

}  // namespace

DiffusionGraph diffusion_graph(const SpNetwork& n) {
  DiffusionGraph g;
  graph_build(n, 0, 1, g);
  return g;
}

std::optional<EulerOrdering> common_euler_ordering(const CompoundGate& g) {
  require(g.pull_up == PullUp::Complementary, "Euler ordering needs a complementary gate");
  const int leaves = leaf_count(g.pdn);
  if (leaves != leaf_count(g.pun)) fail(ErrorKind::Input, "networks differ in device count");
  if (g.inputs.size() > 12 || leaves > 24)
    fail(ErrorKind::Size, "Euler ordering is limited to 12 inputs");

  EulerOrdering out{{}, {}, g.pdn, g.pun};
  std::vector<std::size_t> sizes;
  series_sizes(g.pdn, sizes);
  series_sizes(g.pun, sizes);

  // odometer over the child permutations of every series node
  std::vector<std::vector<int>> perm;
  for (std::size_t n : sizes) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    perm.push_back(std::move(p));
  }
  constexpr long kMaxConfigs = 200000;
  for (long tries = 0; tries < kMaxConfigs; ++tries) {
    std::size_t k = 0;
    out.pdn = permuted(g.pdn, perm, k);
    out.pun = permuted(g.pun, perm, k);

    auto gp = diffusion_graph(out.pdn);
    auto gq = diffusion_graph(out.pun);
    LockstepWalk walk(gp, gq, leaves);
    if (walk.run(out.leaves)) {
      std::map<int, std::string> lit;
      leaf_literals(out.pdn, lit);
      for (int leaf : out.leaves) out.sequence.push_back(lit[leaf]);
      return out;
    }

    k = perm.size();
    while (k > 0 && !std::next_permutation(perm[k - 1].begin(), perm[k - 1].end())) --k;
    if (k == 0) return std::nullopt;
  }
  fail(ErrorKind::Size, "Euler ordering search exceeded its configuration budget");
}

double charge_share_voltage(double c_out, double v_dd, const std::vector<double>& c_exposed,
                            double v_init) {
  require(c_out > 0, "output capacitance must be positive");
  double c_total = c_out, q = c_out * v_dd;
  for (double c : c_exposed) {
    require(c >= 0, "capacitances must be non-negative");
    c_total += c;
    q += c * v_init;
  }
  return q / c_total;
}

}  // namespace vk
