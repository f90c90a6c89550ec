#pragma once

#include <string>

#include "cases/params.hpp"
#include "cases/registry.hpp"
#include "vlsikit/device.hpp"
#include "vlsikit/gates.hpp"

namespace vk::cases {

MosDevice parse_device(const Params& p);
extern const char* const kDeviceDoc;

Region parse_region(const Params& p, const std::string& key);

// Network: "A", "A'", "A:3", {"in": "A", "w": 3, "not": true},
// {"series": [...]}, {"parallel": [...]}.
SpNetwork parse_network(const json& j, const std::string& path);
std::string network_text(const SpNetwork& n);

GateReference parse_reference(const Params& p);

// Gate object: {"pulldown": expr} | {"pdn": net, "pun": net} | {"pdn": net, "pseudo_load": w}.
CompoundGate parse_gate(const Params& g, const GateReference& ref, double mu);
extern const char* const kGateDoc;

json width_table(const SpNetwork& n);

}  // namespace vk::cases
