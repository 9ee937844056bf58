#pragma once

#include <string>
#include <string_view>

#include "ringnc/network.hpp"

namespace ringnc {

/// JSON with the fields "nodes", "edges" {id, tail, head}, "messages"
/// {id, source} and "receivers" {node, demands}.  Throws ParseError on
/// malformed text or missing fields.
Network parse_network(std::string_view json);
std::string network_to_json(const Network& n);

/// {"ring": expression, "edges": {id: [element]}, "decoders": {"node:message": [element]}}.
/// Elements use Ring::format: integers for Z(n) and GF(p), little-endian
/// polynomials in x such as `1+x^2` for GF(p^k) and D(p), tuples for products.
ScalarLinearCode parse_code(std::string_view json);
std::string code_to_json(const ScalarLinearCode& c);

}  // namespace ringnc
