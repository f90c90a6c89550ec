#include "vlsikit/testability.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>

#include "vlsikit/error.hpp"

namespace vk {

int GfPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i]) return i;
  return -1;
}

GfPolynomial GfPolynomial::parse(const std::string& text) {
  GfPolynomial p;
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  require(!t.empty(), "empty polynomial");
  std::stringstream ss(t);
  std::string term;
  while (std::getline(ss, term, '+')) {
    int e;
    if (term == "1") {
      e = 0;
    } else if (term == "x") {
      e = 1;
    } else if (term.rfind("x^", 0) == 0 && term.size() > 2 &&
               std::all_of(term.begin() + 2, term.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      e = std::stoi(term.substr(2));
    } else {
      fail(ErrorKind::Input, "bad polynomial term '" + term + "'");
    }
    require(e <= 63, "polynomial degree above 63");
    if (static_cast<int>(p.coeffs.size()) <= e) p.coeffs.resize(e + 1, 0);
    p.coeffs[e] ^= 1;
  }
  return p;
}

std::string GfPolynomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i]) continue;
    if (!s.empty()) s += " + ";
    s += i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::uint64_t Lfsr::step(std::uint64_t s) const {
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  bool fb = (s >> (n - 1)) & 1u;
  std::uint64_t next = (s << 1) & full;
  return fb ? next ^ feedback_mask : next;
}

std::uint64_t Lfsr::step_matrix(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    unsigned bit = 0;
    for (int j = 0; j < n; ++j) bit ^= matrix[i][j] & ((s >> j) & 1u);
    out |= static_cast<std::uint64_t>(bit) << i;
  }
  return out;
}

Lfsr lfsr_build(const GfPolynomial& poly) {
  const int n = poly.degree();
  require(n >= 1, "LFSR polynomial needs degree >= 1");
  require(n <= 63, "LFSR degree above 63");
  require(!poly.coeffs.empty() && poly.coeffs[0] == 1, "LFSR polynomial needs c_0 = 1");
  Lfsr l;
  l.n = n;
  l.matrix.assign(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (poly.coeffs[i]) {
      l.feedback_mask |= 1ull << i;
      if (i > 0) l.taps.push_back(i);
      l.matrix[i][n - 1] ^= 1;
    }
    if (i > 0) l.matrix[i][i - 1] ^= 1;
  }
  return l;
}

LfsrRun lfsr_run(const Lfsr& l, std::uint64_t seed, std::uint64_t steps) {
  require(l.n >= 1, "LFSR not built");
  if (l.n < 64) require(seed >> l.n == 0, "seed wider than the register");
  LfsrRun r;
  r.states.reserve(steps + 1);
  std::uint64_t s = seed;
  r.states.push_back(s);
  for (std::uint64_t k = 0; k < steps; ++k) r.states.push_back(s = l.step(s));

  // the register map is invertible (c_0 = 1), so every state lies on a cycle
  if (l.n <= 32) {
    const std::uint64_t guard = 1ull << l.n;
    s = seed;
    for (std::uint64_t k = 1; k <= guard; ++k) {
      s = l.step(s);
      if (s == seed) {
        r.period = k;
        break;
      }
    }
  }
  return r;
}

GateType parse_gate_type(const std::string& s) {
  static const std::map<std::string, GateType> m{
      {"and", GateType::And}, {"or", GateType::Or},   {"nand", GateType::Nand},
      {"nor", GateType::Nor}, {"not", GateType::Not}, {"xor", GateType::Xor},
      {"xnor", GateType::Xnor}, {"buf", GateType::Buf}};
  auto it = m.find(s);
  require(it != m.end(), "unknown gate kind '" + s + "'");
  return it->second;
}

const char* to_string(GateType t) {
  switch (t) {
    case GateType::And: return "and";
    case GateType::Or: return "or";
    case GateType::Nand: return "nand";
    case GateType::Nor: return "nor";
    case GateType::Not: return "not";
    case GateType::Xor: return "xor";
    case GateType::Xnor: return "xnor";
    case GateType::Buf: return "buf";
  }
  return "?";
}

std::string to_string(const StuckFault& f) { return f.net + "/SA" + (f.value ? "1" : "0"); }

CompiledNetlist::CompiledNetlist(const GateNetlist& net, bool reverse_ties) {
  auto intern = [&](const std::string& n) {
    auto [it, fresh] = index_.emplace(n, static_cast<int>(names_.size()));
    if (fresh) names_.push_back(n);
    return it->second;
  };
  std::vector<int> driver;  // gate index driving each net, -1 for inputs, -2 undriven
  auto set_driver = [&](int net_id, int d, const std::string& name) {
    if (static_cast<int>(driver.size()) <= net_id) driver.resize(net_id + 1, -2);
    if (driver[net_id] != -2) fail(ErrorKind::Input, "net '" + name + "' is driven more than once");
    driver[net_id] = d;
  };
  for (const auto& i : net.inputs) {
    int id = intern(i);
    set_driver(id, -1, i);
    inputs_.push_back(id);
  }
  std::vector<G> raw;
  for (std::size_t g = 0; g < net.gates.size(); ++g) {
    const auto& ng = net.gates[g];
    bool unary = ng.type == GateType::Not || ng.type == GateType::Buf;
    require(unary ? ng.inputs.size() == 1 : ng.inputs.size() >= 1,
            std::string(to_string(ng.type)) + " gate driving '" + ng.output + "' has a bad input count");
    G x{ng.type, {}, intern(ng.output)};
    set_driver(x.out, static_cast<int>(g), ng.output);
    for (const auto& in : ng.inputs) x.in.push_back(intern(in));
    raw.push_back(std::move(x));
  }
  driver.resize(names_.size(), -2);
  for (std::size_t id = 0; id < names_.size(); ++id)
    if (driver[id] == -2) fail(ErrorKind::Input, "net '" + names_[id] + "' is never driven");
  for (const auto& o : net.outputs) {
    auto it = index_.find(o);
    require(it != index_.end(), "primary output '" + o + "' is not a net");
    outputs_.push_back(it->second);
  }

  // Kahn levelization; ties broken by gate index in either direction
  std::vector<int> pending(raw.size());
  std::vector<std::vector<int>> fanout(names_.size());
  for (std::size_t g = 0; g < raw.size(); ++g) {
    for (int in : raw[g].in) {
      if (driver[in] >= 0) {
        ++pending[g];
        fanout[in].push_back(static_cast<int>(g));
      }
    }
  }
  auto cmp = [reverse_ties](int a, int b) { return reverse_ties ? a < b : a > b; };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (std::size_t g = 0; g < raw.size(); ++g)
    if (!pending[g]) ready.push(static_cast<int>(g));
  while (!ready.empty()) {
    int g = ready.top();
    ready.pop();
    gates_.push_back(raw[g]);
    order_names_.push_back(names_[raw[g].out]);
    for (int h : fanout[raw[g].out])
      if (--pending[h] == 0) ready.push(h);
  }
  if (gates_.size() != raw.size()) fail(ErrorKind::Input, "netlist contains a combinational cycle");
}

int CompiledNetlist::net_index(const std::string& name) const {
  auto it = index_.find(name);
  require(it != index_.end(), "unknown net '" + name + "'");
  return it->second;
}

std::vector<std::uint64_t> CompiledNetlist::eval_all(const std::vector<std::uint64_t>& in,
                                                     const StuckFault* fault) const {
  require(in.size() == inputs_.size(), "input vector size differs from primary input count");
  std::vector<std::uint64_t> v(names_.size(), 0);
  int fnet = fault ? net_index(fault->net) : -1;
  const std::uint64_t fval = fault && fault->value ? ~0ull : 0ull;
  for (std::size_t i = 0; i < inputs_.size(); ++i) v[inputs_[i]] = in[i];
  if (fnet >= 0) v[fnet] = fval;
  for (const auto& g : gates_) {
    std::uint64_t x = v[g.in.front()];
    switch (g.type) {
      case GateType::And:
      case GateType::Nand:
        for (std::size_t k = 1; k < g.in.size(); ++k) x &= v[g.in[k]];
        break;
      case GateType::Or:
      case GateType::Nor:
        for (std::size_t k = 1; k < g.in.size(); ++k) x |= v[g.in[k]];
        break;
      case GateType::Xor:
      case GateType::Xnor:
        for (std::size_t k = 1; k < g.in.size(); ++k) x ^= v[g.in[k]];
        break;
      case GateType::Not:
      case GateType::Buf: break;
    }
    if (g.type == GateType::Nand || g.type == GateType::Nor || g.type == GateType::Xnor ||
        g.type == GateType::Not)
      x = ~x;
    v[g.out] = g.out == fnet ? fval : x;
  }
  return v;
}

std::vector<std::uint64_t> CompiledNetlist::eval(const std::vector<std::uint64_t>& in,
                                                 const StuckFault* fault) const {
  auto v = eval_all(in, fault);
  std::vector<std::uint64_t> out;
  for (int o : outputs_) out.push_back(v[o]);
  return out;
}

std::map<std::string, bool> logic_simulate(const GateNetlist& net,
                                           const std::map<std::string, bool>& vec) {
  CompiledNetlist c(net);
  std::vector<std::uint64_t> in;
  for (const auto& i : net.inputs) {
    auto it = vec.find(i);
    require(it != vec.end(), "no value for primary input '" + i + "'");
    in.push_back(it->second ? 1 : 0);
  }
  auto out = c.eval(in);
  std::map<std::string, bool> r;
  for (std::size_t k = 0; k < net.outputs.size(); ++k) r[net.outputs[k]] = out[k] & 1u;
  return r;
}

std::vector<StuckFault> all_faults(const GateNetlist& net) {
  std::vector<std::string> nets;
  auto add = [&](const std::string& n) {
    if (std::find(nets.begin(), nets.end(), n) == nets.end()) nets.push_back(n);
  };
  for (const auto& i : net.inputs) add(i);
  for (const auto& g : net.gates) add(g.output);
  std::vector<StuckFault> f;
  for (const auto& n : nets) {
    f.push_back({n, false});
    f.push_back({n, true});
  }
  return f;
}

std::vector<std::vector<StuckFault>> fault_simulate(const GateNetlist& net,
                                                    const std::vector<std::vector<bool>>& vectors,
                                                    const std::vector<StuckFault>& faults) {
  CompiledNetlist c(net);
  for (const auto& f : faults) c.net_index(f.net);
  std::vector<std::vector<StuckFault>> out;
  for (const auto& vec : vectors) {
    require(vec.size() == c.input_count(), "vector length differs from primary input count");
    std::vector<std::uint64_t> in(vec.begin(), vec.end());
    auto good = c.eval(in);
    std::vector<StuckFault> hit;
    for (const auto& f : faults) {
      auto bad = c.eval(in, &f);
      bool differs = false;
      for (std::size_t k = 0; k < good.size(); ++k) differs |= ((good[k] ^ bad[k]) & 1u) != 0;
      if (differs) hit.push_back(f);
    }
    out.push_back(std::move(hit));
  }
  return out;
}

std::optional<std::vector<bool>> atpg_exhaustive(const GateNetlist& net, const StuckFault& fault) {
  CompiledNetlist c(net);
  const std::size_t n = c.input_count();
  if (n > 20) fail(ErrorKind::Size, "exhaustive ATPG is limited to 20 primary inputs");
  c.net_index(fault.net);
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t base = 0; base < total; base += 64) {
    const std::uint64_t lanes = std::min<std::uint64_t>(64, total - base);
    std::vector<std::uint64_t> in(n, 0);
    for (std::uint64_t l = 0; l < lanes; ++l) {
      std::uint64_t v = base + l;
      for (std::size_t j = 0; j < n; ++j)
        if ((v >> (n - 1 - j)) & 1u) in[j] |= 1ull << l;
    }
    auto good = c.eval(in);
    auto bad = c.eval(in, &fault);
    std::uint64_t diff = 0;
    for (std::size_t k = 0; k < good.size(); ++k) diff |= good[k] ^ bad[k];
    if (lanes < 64) diff &= (1ull << lanes) - 1;
    if (diff) {
      std::uint64_t v = base + static_cast<std::uint64_t>(__builtin_ctzll(diff));
      std::vector<bool> vec(n);
      for (std::size_t j = 0; j < n; ++j) vec[j] = (v >> (n - 1 - j)) & 1u;
      return vec;
    }
  }
  return std::nullopt;
}

}  // namespace vk
