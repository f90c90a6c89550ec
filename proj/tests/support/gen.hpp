#pragma once

// Random instance generators and brute-force reference models shared by the
// property suites. Everything here is deliberately naive: the reference
// models must not reuse the library's evaluation code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vlsikit/gates.hpp"
#include "vlsikit/interconnect.hpp"
#include "vlsikit/logic.hpp"
#include "vlsikit/testability.hpp"

namespace vk::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::uint64_t bits() { return rng_(); }
  std::mt19937_64& engine() { return rng_; }

  static std::string var_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

  // Any mix of NOT/AND/OR/XOR over the first `n_vars` names.
  BoolExpr expression(int n_vars, int depth) {
    if (depth == 0 || coin(0.25)) {
      if (coin(0.05)) return BoolExpr::constant(coin());
      auto v = BoolExpr::var(var_name(uniform_int(0, n_vars - 1)));
      return coin(0.3) ? BoolExpr::lnot(v) : v;
    }
    int pick = uniform_int(0, 6);
    if (pick == 0) return BoolExpr::lnot(expression(n_vars, depth - 1));
    std::vector<BoolExpr> kids;
    int k = uniform_int(2, 3);
    for (int i = 0; i < k; ++i) kids.push_back(expression(n_vars, depth - 1));
    if (pick <= 2) return BoolExpr::land(std::move(kids));
    if (pick <= 4) return BoolExpr::lor(std::move(kids));
    return BoolExpr::lxor(std::move(kids));
  }

  // AND/OR of literals, each input used at most once: the shape a static
  // complementary gate can realize.
  BoolExpr pulldown_function(int max_inputs) {
    std::vector<std::string> pool;
    int n = uniform_int(1, max_inputs);
    for (int i = 0; i < n; ++i) pool.push_back(var_name(i));
    std::shuffle(pool.begin(), pool.end(), rng_);
    return sp_tree(pool, coin());
  }

  RcTree rc_tree(int max_nodes) {
    RcTree t(log_uniform(1e-15, 1e-12));
    int n = uniform_int(1, max_nodes);
    for (int i = 1; i <= n; ++i)
      t.add(uniform_int(0, i - 1), coin(0.05) ? 0.0 : log_uniform(1, 1e4),
            coin(0.05) ? 0.0 : log_uniform(1e-16, 1e-12));
    return t;
  }

  GateNetlist netlist(int max_inputs, int max_gates) {
    static const GateType kTypes[] = {GateType::And, GateType::Or,  GateType::Nand, GateType::Nor,
                                      GateType::Not, GateType::Xor, GateType::Xnor, GateType::Buf};
    GateNetlist net;
    std::vector<std::string> nets;
    int n_in = uniform_int(1, max_inputs);
    for (int i = 0; i < n_in; ++i) {
      net.inputs.push_back("i" + std::to_string(i));
      nets.push_back(net.inputs.back());
    }
    std::map<std::string, int> fanout;
    int n_gates = uniform_int(1, max_gates);
    for (int g = 0; g < n_gates; ++g) {
      NetGate gate;
      gate.type = kTypes[uniform_int(0, 7)];
      int arity = (gate.type == GateType::Not || gate.type == GateType::Buf) ? 1 : uniform_int(2, 3);
      for (int k = 0; k < arity; ++k) {
        // favour recent nets so the logic gets some depth
        int lo = std::max(0, static_cast<int>(nets.size()) - 6);
        int idx = coin(0.7) ? uniform_int(lo, static_cast<int>(nets.size()) - 1)
                            : uniform_int(0, static_cast<int>(nets.size()) - 1);
        gate.inputs.push_back(nets[idx]);
        ++fanout[nets[idx]];
      }
      gate.output = "n" + std::to_string(g);
      nets.push_back(gate.output);
      net.gates.push_back(gate);
    }
    for (const auto& g : net.gates)
      if (fanout[g.output] == 0 || coin(0.15)) net.outputs.push_back(g.output);
    return net;
  }

 private:
  BoolExpr sp_tree(std::vector<std::string> pool, bool and_node) {
    if (pool.size() == 1) {
      auto v = BoolExpr::var(pool.front());
      return coin(0.2) ? BoolExpr::lnot(v) : v;
    }
    int groups = uniform_int(2, static_cast<int>(std::min<std::size_t>(pool.size(), 3)));
    std::vector<std::vector<std::string>> parts(groups);
    for (int i = 0; i < groups; ++i) parts[i].push_back(pool[i]);
    for (std::size_t i = groups; i < pool.size(); ++i) parts[uniform_int(0, groups - 1)].push_back(pool[i]);
    std::vector<BoolExpr> kids;
    for (auto& p : parts) kids.push_back(sp_tree(p, !and_node));
    return and_node ? BoolExpr::land(std::move(kids)) : BoolExpr::lor(std::move(kids));
  }

  std::mt19937_64 rng_;
};

// Straightforward recursive evaluation of an expression tree.
inline bool eval_ref(const BoolExpr& e, const std::map<std::string, bool>& a) {
  switch (e.op) {
    case BoolExpr::Op::Var: return a.at(e.name);
    case BoolExpr::Op::Const: return e.value;
    case BoolExpr::Op::Not: return !eval_ref(e.args[0], a);
    case BoolExpr::Op::And: {
      bool r = true;
      for (const auto& x : e.args) r = r && eval_ref(x, a);
      return r;
    }
    case BoolExpr::Op::Or: {
      bool r = false;
      for (const auto& x : e.args) r = r || eval_ref(x, a);
      return r;
    }
    case BoolExpr::Op::Xor: {
      bool r = false;
      for (const auto& x : e.args) r = r != eval_ref(x, a);
      return r;
    }
  }
  return false;
}

// Shannon expansion on one variable at a time.
inline double shannon_probability(const BoolExpr& e, const std::vector<std::string>& vars,
                                  const std::map<std::string, double>& p, std::size_t at,
                                  std::map<std::string, bool>& fixed) {
  if (at == vars.size()) return eval_ref(e, fixed) ? 1.0 : 0.0;
  const auto& v = vars[at];
  fixed[v] = true;
  double hi = shannon_probability(e, vars, p, at + 1, fixed);
  fixed[v] = false;
  double lo = shannon_probability(e, vars, p, at + 1, fixed);
  fixed.erase(v);
  return p.at(v) * hi + (1 - p.at(v)) * lo;
}

// Elmore delay as the sum over every capacitor of C_k times the resistance
// shared by the root-to-sink and root-to-k paths, each found by walking
// parent links.
inline double elmore_shared_path(const RcTree& t, int sink) {
  const auto& n = t.nodes();
  std::vector<bool> on_sink_path(n.size(), false);
  for (int v = sink; v > 0; v = n[v].parent) on_sink_path[v] = true;
  double tau = 0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    double shared = 0;
    for (int v = static_cast<int>(k); v > 0; v = n[v].parent)
      if (on_sink_path[v]) shared += n[v].r;
    tau += n[k].c * shared;
  }
  return tau;
}

// Elmore delay as the sum over path resistors of R times the capacitance
// below them, with the subtree found by walking parent links.
inline double elmore_downstream(const RcTree& t, int sink) {
  const auto& n = t.nodes();
  auto below = [&](int edge) {
    double c = 0;
    for (std::size_t k = 0; k < n.size(); ++k)
      for (int v = static_cast<int>(k); v >= 0; v = v > 0 ? n[v].parent : -1)
        if (v == edge) {
          c += n[k].c;
          break;
        }
    return c;
  };
  double tau = 0;
  for (int v = sink; v > 0; v = n[v].parent) tau += n[v].r * below(v);
  return tau;
}

// Gate-by-gate simulation of one input vector, optionally with one net held
// at a constant. Returns output values in declaration order.
inline std::vector<bool> simulate_ref(const GateNetlist& net, const std::vector<bool>& in,
                                      const StuckFault* fault = nullptr) {
  std::map<std::string, bool> v;
  auto set = [&](const std::string& name, bool x) {
    v[name] = (fault && fault->net == name) ? fault->value : x;
  };
  for (std::size_t i = 0; i < net.inputs.size(); ++i) set(net.inputs[i], in[i]);
  std::vector<bool> done(net.gates.size(), false);
  for (std::size_t pass = 0; pass < net.gates.size(); ++pass) {
    for (std::size_t g = 0; g < net.gates.size(); ++g) {
      if (done[g]) continue;
      const auto& gate = net.gates[g];
      bool ready = true;
      for (const auto& i : gate.inputs) ready = ready && v.count(i);
      if (!ready) continue;
      bool all = true, any = false, par = false;
      for (const auto& i : gate.inputs) {
        all = all && v[i];
        any = any || v[i];
        par = par != v[i];
      }
      bool out = false;
      switch (gate.type) {
        case GateType::And: out = all; break;
        case GateType::Nand: out = !all; break;
        case GateType::Or: out = any; break;
        case GateType::Nor: out = !any; break;
        case GateType::Xor: out = par; break;
        case GateType::Xnor: out = !par; break;
        case GateType::Not: out = !v[gate.inputs[0]]; break;
        case GateType::Buf: out = v[gate.inputs[0]]; break;
      }
      set(gate.output, out);
      done[g] = true;
    }
  }
  std::vector<bool> out;
  for (const auto& o : net.outputs) out.push_back(v.at(o));
  return out;
}

inline std::vector<bool> vector_of(std::uint64_t code, std::size_t n) {
  std::vector<bool> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = (code >> j) & 1u;
  return v;
}

}  // namespace vk::testing
