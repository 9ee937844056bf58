#include "ringnc/network_io.hpp"

#include "json.hpp"
#include "ringnc/error.hpp"

namespace ringnc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json load(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

const json& field(const json& obj, const char* key, json::value_t type) {
  if (!obj.is_object()) throw ParseError("expected an object holding \"" + std::string(key) + "\"", 0);
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"", 0);
  if (it->type() != type) throw ParseError(std::string("field \"") + key + "\" has the wrong type", 0);
  return *it;
}

std::string text(const json& obj, const char* key) {
  return field(obj, key, json::value_t::string).get<std::string>();
}

}  // namespace

Network parse_network(std::string_view s) {
  const json j = load(s);
  Network n;
  for (const auto& v : field(j, "nodes", json::value_t::array)) {
    if (!v.is_string()) throw ParseError("node names must be strings", 0);
    n.nodes.push_back(v.get<std::string>());
  }
  for (const auto& e : field(j, "edges", json::value_t::array)) {
    n.edges.push_back({text(e, "id"), text(e, "tail"), text(e, "head")});
  }
  for (const auto& m : field(j, "messages", json::value_t::array)) {
    n.messages.push_back({text(m, "id"), text(m, "source")});
  }
  for (const auto& r : field(j, "receivers", json::value_t::array)) {
    Receiver rec{text(r, "node"), {}};
    for (const auto& d : field(r, "demands", json::value_t::array)) {
      if (!d.is_string()) throw ParseError("demands must be strings", 0);
      rec.demands.push_back(d.get<std::string>());
    }
    n.receivers.push_back(std::move(rec));
  }
  return n;
}

std::string network_to_json(const Network& n) {
  ordered_json j;
  j["nodes"] = n.nodes;
  j["edges"] = ordered_json::array();
  for (const auto& e : n.edges) j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  j["messages"] = ordered_json::array();
  for (const auto& m : n.messages) j["messages"].push_back({{"id", m.id}, {"source", m.source}});
  j["receivers"] = ordered_json::array();
  for (const auto& r : n.receivers) j["receivers"].push_back({{"node", r.node}, {"demands", r.demands}});
  return j.dump(2);
}

ScalarLinearCode parse_code(std::string_view s) {
  const json j = load(s);
  ScalarLinearCode c{parse_ring(text(j, "ring")), {}, {}};
  const Ring ring(c.ring);
  auto elements = [&](const json& list) {
    if (!list.is_array()) throw ParseError("coefficients must be a list", 0);
    std::vector<Ring::Code> out;
    for (const auto& v : list) {
      if (v.is_string()) {
        out.push_back(ring.parse(v.get<std::string>()));
      } else if (v.is_number_unsigned()) {
        out.push_back(ring.parse(std::to_string(v.get<std::uint64_t>())));
      } else {
        throw ParseError("coefficients must be element strings", 0);
      }
    }
    return out;
  };
  for (const auto& [id, list] : field(j, "edges", json::value_t::object).items()) {
    c.edges[id] = elements(list);
  }
  for (const auto& [key, list] : field(j, "decoders", json::value_t::object).items()) {
    const auto colon = key.find(':');
    if (colon == std::string::npos) throw ParseError("decoder key \"" + key + "\" is not node:message", 0);
    c.decoders[{key.substr(0, colon), key.substr(colon + 1)}] = elements(list);
  }
  return c;
}

std::string code_to_json(const ScalarLinearCode& c) {
  const Ring ring(c.ring);
  auto elements = [&](const std::vector<Ring::Code>& v) {
    ordered_json out = ordered_json::array();
    for (auto x : v) out.push_back(ring.format(x));
    return out;
  };
  ordered_json j;
  j["ring"] = to_string(c.ring);
  j["edges"] = ordered_json::object();
  for (const auto& [id, v] : c.edges) j["edges"][id] = elements(v);
  j["decoders"] = ordered_json::object();
  for (const auto& [key, v] : c.decoders) j["decoders"][key.first + ":" + key.second] = elements(v);
  return j.dump(2);
}

}  // namespace ringnc
