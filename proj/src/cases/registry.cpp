#include "cases/registry.hpp"

#include <algorithm>

#include "vlsikit/error.hpp"

namespace vk::cases {

void Registry::add(Analysis a) {
  if (find(a.id)) throw std::logic_error("duplicate analysis id " + a.id);
  list_.push_back(std::move(a));
}

const Analysis* Registry::find(const std::string& id) const {
  for (const auto& a : list_)
    if (a.id == id) return &a;
  return nullptr;
}

const Registry& registry() {
  static const Registry r = [] {
    Registry x;
    register_device(x);
    register_gates(x);
    register_interconnect(x);
    register_effort(x);
    register_timing(x);
    register_power(x);
    register_memory(x);
    register_testability(x);
    return x;
  }();
  return r;
}

namespace {

std::string error_json(const std::string& kind, const std::string& message, const std::string& path = "") {
  json e{{"kind", kind}, {"message", message}};
  if (!path.empty()) e["path"] = path;
  return json{{"error", e}}.dump() + "\n";
}

struct Prepared {
  const Analysis* analysis;
  json params;
  Runner run;
};

void check_meta(const json& meta) {
  Params m(meta, "meta");
  m.only({"label", "criterion", "note", "tolerance", "expect"});
  if (m.has("label")) m.str("label");
  if (m.has("note")) m.str("note");
  if (m.has("criterion")) m.integer("criterion");
  if (m.has("tolerance")) m.num("tolerance");
  if (m.has("expect")) {
    for (const auto& e : m.objs("expect")) {
      e.only({"path", "value", "tol", "known_mismatch"});
      e.str("path");
      e.raw("value");
      if (e.has("known_mismatch")) e.str("known_mismatch");
      if (e.has("tol")) {
        auto t = e.obj("tol");
        t.only({"rel", "abs", "printed_decimals", "truncated_decimals"});
      }
    }
  }
}

// Parses the whole case; every failure here is malformed input.
Prepared prepare(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParamError("", std::string("invalid JSON: ") + e.what());
  }
  Params top(doc, "");
  top.only({"schema", "analysis", "params", "meta"});
  if (top.integer("schema") != 1) top.bad("schema", "unsupported schema version");
  const auto id = top.str("analysis");
  const Analysis* a = registry().find(id);
  if (!a) top.bad("analysis", "unknown analysis '" + id + "'");
  if (top.has("meta")) check_meta(doc["meta"]);
  json params = doc.contains("params") ? doc["params"] : json::object();
  Params p(params, "params");
  std::vector<std::string> names;
  for (const auto& d : a->params) {
    names.push_back(d.name);
    if (d.required && !p.has(d.name)) throw ParamError(p.at(d.name), "required field is missing");
  }
  p.only(names);
  Runner run;
  try {
    run = a->prepare(p);
  } catch (const vk::Error& e) {
    throw ParamError("params", e.what());
  }
  return {a, params, std::move(run)};
}

}  // namespace

Outcome run_case(const std::string& text, Format format) {
  Outcome out;
  Prepared prep;
  try {
    prep = prepare(text);
  } catch (const ParamError& e) {
    return {1, "", error_json("input", e.what(), e.path())};
  }
  try {
    Report r;
    prep.run(r);
    json doc = r.to_json(prep.analysis->id, prep.params);
    out.output = format == Format::Json ? render_json(doc) : render_table(doc);
  } catch (const vk::Error& e) {
    return {2, "", error_json(to_string(e.kind()), e.what())};
  } catch (const ParamError& e) {
    return {2, "", error_json("input", e.what(), e.path())};
  } catch (const std::exception& e) {
    return {2, "", error_json("internal", e.what())};
  }
  return out;
}

Outcome validate_case(const std::string& text) {
  try {
    auto prep = prepare(text);
    return {0, "OK " + prep.analysis->id + "\n", ""};
  } catch (const ParamError& e) {
    return {1, "", error_json("input", e.what(), e.path())};
  }
}

std::string list_analyses(Format format) {
  if (format == Format::Json) {
    json all = json::array();
    for (const auto& a : registry().all()) {
      json ps = json::array();
      for (const auto& d : a.params)
        ps.push_back({{"name", d.name}, {"type", d.type}, {"required", d.required}, {"doc", d.doc}});
      all.push_back({{"id", a.id}, {"module", a.module}, {"summary", a.summary}, {"params", ps}});
    }
    return json{{"analyses", all}, {"schema", 1}}.dump(2) + "\n";
  }
  std::string out;
  for (const auto& a : registry().all()) {
    out += a.id + "  [" + a.module + "]  " + a.summary + "\n";
    for (const auto& d : a.params)
      out += "    " + d.name + (d.required ? "" : "?") + " : " + d.type + (d.doc.empty() ? "" : "  " + d.doc) + "\n";
  }
  return out;
}

}  // namespace vk::cases
