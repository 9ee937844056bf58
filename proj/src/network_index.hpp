#pragma once

#include <map>
#include <string>
#include <vector>

#include "ringnc/network.hpp"

namespace ringnc::detail {

struct InputRef {
  bool message;       // else an edge
  std::size_t index;  // into messages or Network::edges
};

/// Integer-indexed view of a valid network.
struct NetworkIndex {
  std::map<std::string, std::size_t> message_pos;
  std::map<std::string, std::size_t> edge_pos;
  std::vector<std::size_t> topo;                      // edges, topological, ties by id
  std::vector<std::vector<InputRef>> edge_inputs;     // inputs of each edge's tail
  std::vector<std::vector<InputRef>> receiver_inputs;
  std::vector<std::vector<std::size_t>> demands;      // message indices per receiver
};

/// Throws DomainError listing the defects when the network is invalid.
NetworkIndex index_network(const Network& n);

/// Transfer vectors of all edges in Network::edges order.
std::vector<TransferVector> edge_transfers(const Network& n, const NetworkIndex& ix,
                                           const Ring& ring, const ScalarLinearCode& c);

/// Transfer vector of one input: an edge's vector or a message's unit vector.
TransferVector input_vector(const InputRef& in, const std::vector<TransferVector>& edges,
                            std::size_t message_count, const Ring& ring);

}  // namespace ringnc::detail
