#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringnc/dominance.hpp"
#include "ringnc/hom.hpp"
#include "ringnc/ring.hpp"

namespace ringnc {

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Message {
  std::string id;
  std::string source;
  friend bool operator==(const Message&, const Message&) = default;
};

struct Receiver {
  std::string node;
  std::vector<std::string> demands;
  friend bool operator==(const Receiver&, const Receiver&) = default;
};

/// A finite directed acyclic multigraph with messages and demands.
struct Network {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  std::vector<Message> messages;
  std::vector<Receiver> receivers;
  friend bool operator==(const Network&, const Network&) = default;
};

/// One defect per violated invariant, e.g. `unknown demand: receiver t demands z`.
std::vector<std::string> validate(const Network& n);

/// An input of a node: one of its own messages or an incoming edge.
struct Input {
  enum class Kind { Message, Edge } kind;
  std::string id;
  friend bool operator==(const Input&, const Input&) = default;
};

/// Messages originating at the node sorted by id, then incoming edges sorted by id.
std::vector<Input> inputs(const Network& n, const std::string& node);

/// Coefficients of a symbol with respect to the messages, in network message order.
using TransferVector = std::vector<Ring::Code>;

/// Edge and decoder coefficients over `ring`, stored as element codes.
struct ScalarLinearCode {
  RingSpec ring;
  /// One coefficient per input of the edge's tail.
  std::map<std::string, std::vector<Ring::Code>> edges;
  /// (receiver node, message) -> one coefficient per receiver input.
  std::map<std::pair<std::string, std::string>, std::vector<Ring::Code>> decoders;
};

/// Transfer vector of every edge.  Throws DomainError on an invalid network
/// or a coefficient list of the wrong length.
std::map<std::string, TransferVector> transfer(const Network& n, const ScalarLinearCode& c);

/// Coefficients d with sum d_i rows_i equal to the unit vector of message
/// `target` (an index into the rows).  Fields use elimination with free
/// variables set to zero; other rings search all size^|rows| tuples in
/// canonical order and return the first hit, and throw LimitError when that
/// exceeds 2^24.
std::optional<std::vector<Ring::Code>> decode_search(const std::vector<TransferVector>& rows,
                                                     std::size_t target, const Ring& ring);

/// Every receiver recovers every demand through its decoder.  A missing
/// decoder is a failure.  Throws DomainError on arity mismatches.
bool verify(const Network& n, const ScalarLinearCode& c);

/// Like verify, but names the first failure.
std::optional<std::string> verify_report(const Network& n, const ScalarLinearCode& c);

/// Source `s` with messages x and y, relay nodes v01..vNN fed by edges
/// l01..lNN, and one receiver rIJ_JJ per pair {i, j} fed by copies
/// `l0i>rIJ` of the two symbols.  2 <= n <= 12.
Network choose_two(unsigned n);

/// The Two-Six network, realized as choose_two(4).
Network two_six();

/// Derives decoders for the given edge coefficients with decode_search;
/// infeasible demands get no decoder.
ScalarLinearCode complete_decoders(const Network& n, ScalarLinearCode c);

/// choose_two(n) over a field with at least n - 1 elements: the symbols are
/// y and x + a y for the first n - 1 field elements a.
ScalarLinearCode choose_two_field_solution(unsigned n, const RingSpec& field);

struct SolveOptions {
  std::uint64_t budget = std::uint64_t{1} << 26;
  unsigned jobs = 1;
};

/// Exhaustive search for a scalar linear solution.
///
/// Coefficients of edges whose tail has one input are fixed to 1 and edges
/// that reach no receiver are fixed to 0; neither restriction loses
/// solutions.  The remaining e coefficients are searched in canonical order
/// (edges in topological order), abandoning a prefix as soon as a receiver
/// whose inputs are all fixed cannot decode.  Throws LimitError if
/// size^e exceeds the budget.  The result does not depend on `jobs`.
std::optional<ScalarLinearCode> solve_brute(const Network& n, const RingSpec& ring,
                                            const SolveOptions& options = {});

/// Number of searched coefficients e for solve_brute.
std::size_t free_coefficient_count(const Network& n);

/// Componentwise product of verified solutions, over the product ring.
ScalarLinearCode product_code(const Network& n,
                              const std::vector<ScalarLinearCode>& solutions);

/// Maps every coefficient through a surjective hom whose source is the code's ring.
ScalarLinearCode map_code(const Network& n, const ScalarLinearCode& c, const RingHom& h);

/// Re-encodes a solution over S through the inclusion S -> R
/// (GF(p^m) -> GF(p^k), GF(p) -> D(p), or S == R).
ScalarLinearCode lift_subring(const Network& n, const ScalarLinearCode& c, const RingSpec& r);

/// Carries a solution over the verdict's left ring along every chain of a
/// Dominates certificate and reassembles a solution over the right ring.
ScalarLinearCode transport(const Network& n, const ScalarLinearCode& c,
                           const DominanceVerdict& verdict);

}  // namespace ringnc
