#include "cases/common.hpp"

#include <functional>

#include "vlsikit/error.hpp"
#include "vlsikit/logic.hpp"

namespace vk::cases {

const char* const kDeviceDoc =
    "{type nmos|pmos, k_prime, v_t0, gamma, phi2f, lambda, w, l, l_d, t_ox, c_ox, x_j, "
    "x_j_sidewall, y, n_sub, n_diff, n_sidewall, grading}; lengths in m, doping in cm^-3";

const char* const kGateDoc = "{pulldown: expr} | {pdn: network, pun: network} | {pdn: network, pseudo_load: width}";

MosDevice parse_device(const Params& p) {
  p.only({"type", "k_prime", "v_t0", "gamma", "phi2f", "lambda", "w", "l", "l_d", "t_ox", "c_ox", "x_j",
          "x_j_sidewall", "y", "n_sub", "n_diff", "n_sidewall", "grading"});
  MosDevice d;
  d.type = p.choice<Polarity>("type", {{"nmos", Polarity::Nmos}, {"pmos", Polarity::Pmos}}, Polarity::Nmos);
  d.k_prime = p.num("k_prime", 0);
  d.v_t0 = p.num("v_t0", 0);
  d.gamma = p.num("gamma", 0);
  d.phi2f = p.num("phi2f", 0.6);
  d.lambda = p.num("lambda", 0);
  d.w = p.num("w", 0);
  d.l = p.num("l", 0);
  d.l_d = p.num("l_d", 0);
  d.t_ox = p.num("t_ox", 0);
  d.c_ox = p.opt_num("c_ox");
  d.x_j = p.num("x_j", 0);
  d.x_j_sidewall = p.opt_num("x_j_sidewall");
  d.y = p.num("y", 0);
  d.n_sub = p.num("n_sub", 0);
  d.n_diff = p.num("n_diff", 0);
  d.n_sidewall = p.num("n_sidewall", 0);
  d.grading = p.num("grading", 0.5);
  if (d.phi2f < 0) p.bad("phi2f", "must be non-negative");
  if (d.lambda < 0) p.bad("lambda", "is a magnitude and must be non-negative");
  for (const char* k : {"w", "l", "l_d", "t_ox", "x_j", "y", "n_sub", "n_diff", "n_sidewall", "k_prime"})
    if (p.has(k) && p.num(k) < 0) p.bad(k, "must be non-negative");
  return d;
}

Region parse_region(const Params& p, const std::string& key) {
  return p.choice<Region>(key, {{"cutoff", Region::Cutoff}, {"linear", Region::Linear},
                                {"saturation", Region::Saturation}});
}

SpNetwork parse_network(const json& j, const std::string& path) {
  auto leaf = [&](std::string name, double w, bool neg) {
    if (name.empty()) throw ParamError(path, "empty input name");
    while (!name.empty() && name.back() == '\'') {
      name.pop_back();
      neg = !neg;
    }
    if (name.empty()) throw ParamError(path, "empty input name");
    if (!(w > 0)) throw ParamError(path, "width must be positive");
    return SpNetwork::sw(name, w, neg);
  };
  if (j.is_string()) {
    auto s = j.get<std::string>();
    auto colon = s.find(':');
    double w = 1;
    if (colon != std::string::npos) {
      w = Params::number_of(json(s.substr(colon + 1)), path);
      s = s.substr(0, colon);
    }
    return leaf(s, w, false);
  }
  Params p(j, path);
  if (p.has("in")) {
    p.only({"in", "w", "not"});
    return leaf(p.str("in"), p.num("w", 1), p.flag("not", false));
  }
  p.only({"series", "parallel"});
  bool series = p.has("series");
  if (series == p.has("parallel")) p.bad("", "expected exactly one of in, series, parallel");
  const std::string key = series ? "series" : "parallel";
  const json& arr = p.raw(key);
  if (!arr.is_array() || arr.empty()) p.bad(key, "expected a non-empty array");
  std::vector<SpNetwork> kids;
  for (std::size_t i = 0; i < arr.size(); ++i)
    kids.push_back(parse_network(arr[i], p.at(key) + "[" + std::to_string(i) + "]"));
  return series ? SpNetwork::series(std::move(kids)) : SpNetwork::parallel(std::move(kids));
}

std::string network_text(const SpNetwork& n) {
  char buf[32];
  switch (n.kind) {
    case SpNetwork::Kind::Switch:
      std::snprintf(buf, sizeof buf, "%.6g", n.width);
      return n.literal() + ":" + buf;
    case SpNetwork::Kind::Series:
    case SpNetwork::Kind::Parallel: {
      std::string s = "(";
      const char* sep = n.kind == SpNetwork::Kind::Series ? " * " : " + ";
      for (std::size_t i = 0; i < n.children.size(); ++i) s += (i ? sep : "") + network_text(n.children[i]);
      return s + ")";
    }
  }
  return "";
}

GateReference parse_reference(const Params& p) {
  GateReference r;
  if (!p.has("ref")) return r;
  auto q = p.obj("ref");
  q.only({"w_n", "w_p"});
  r.w_n = q.num("w_n", 1);
  r.w_p = q.num("w_p", 0);
  if (!(r.w_n > 0)) q.bad("w_n", "must be positive");
  return r;
}

CompoundGate parse_gate(const Params& g, const GateReference& ref, double mu) {
  g.only({"pulldown", "pdn", "pun", "pseudo_load"});
  if (!(mu > 0)) throw ParamError("params.mu", "must be positive");
  if (g.has("pulldown")) {
    if (g.has("pdn") || g.has("pun") || g.has("pseudo_load"))
      g.bad("pulldown", "cannot be combined with explicit networks");
    BoolExpr f;
    try {
      f = parse_expr(g.str("pulldown"));
    } catch (const vk::Error& e) {
      g.bad("pulldown", e.what());
    }
    try {
      return compound_gate(f, ref, mu);
    } catch (const vk::Error& e) {
      g.bad("pulldown", e.what());
    }
  }
  SpNetwork pdn = parse_network(g.raw("pdn"), g.at("pdn"));
  try {
    if (g.has("pseudo_load")) {
      if (g.has("pun")) g.bad("pun", "a pseudo-nmos gate has no pull-up network");
      return pseudo_nmos_gate(pdn, g.positive("pseudo_load"), ref, mu);
    }
    SpNetwork pun = parse_network(g.raw("pun"), g.at("pun"));
    return sized_gate(pdn, pun, ref, mu);
  } catch (const vk::Error& e) {
    g.bad("", e.what());
  }
}

json width_table(const SpNetwork& n) {
  json out = json::array();
  std::function<void(const SpNetwork&)> walk = [&](const SpNetwork& s) {
    if (s.kind == SpNetwork::Kind::Switch) {
      out.push_back({{"input", s.literal()}, {"width", plain(s.width)}});
      return;
    }
    for (const auto& c : s.children) walk(c);
  };
  walk(n);
  return out;
}

}  // namespace vk::cases
