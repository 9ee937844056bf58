#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringnc/arith.hpp"
#include "ringnc/hom.hpp"
#include "ringnc/partition.hpp"
#include "ringnc/ring.hpp"

namespace ringnc {

/// A product of finite fields grouped by prime: prime p with partition A
/// stands for GF(p^a1) x GF(p^a2) x ...
struct PartitionRing {
  std::map<std::uint64_t, Partition> assignment;

  friend bool operator==(const PartitionRing&, const PartitionRing&) = default;
};

/// Groups (prime, exponent) field factors by prime.  Throws DomainError on an
/// empty list, a non-prime or a zero exponent.
PartitionRing to_partition_ring(const std::vector<std::pair<std::uint64_t, unsigned>>& fields);

/// The PartitionRing of a product of finite fields, or nullopt when some
/// factor is not a field.
std::optional<PartitionRing> as_partition_ring(const RingSpec& r);

/// Prime factorization of the ring size.
Factorization size_factors(const PartitionRing& r);

/// The canonical product-of-fields spec (fields above 2^20 are symbolic).
RingSpec to_ring_spec(const PartitionRing& r);

/// `GF(2^5)xGF(2^2)xGF(3)`.
std::string to_string(const PartitionRing& r);

/// `GF(p^3)xGF(p^2)`: a single-prime partition ring with the prime left symbolic.
std::string render_symbolic(const Partition& a, const std::string& prime_label = "p");

enum class Relation { Dominates, NotDominates, Unknown };

std::string to_string(Relation r);

/// One structure map in a certificate chain.
struct Step {
  HomKind kind;
  RingSpec from;
  RingSpec to;
  std::size_t index = 0;  // Projection factor, 0-based
};

using Chain = std::vector<Step>;

enum class Criterion {
  /// Some factor GF(p^k) of the target has no p-factor GF(p^m), m | k, on the
  /// left (both sides reduced to products of fields).
  FieldProduct,
  /// char(target) must divide char(left); `required` does not.
  Characteristic,
};

struct Violation {
  Criterion criterion;
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::vector<unsigned> candidates;  // FieldProduct: left p-exponents
  std::uint64_t required = 0;        // Characteristic: p^e dividing char(target)
  std::uint64_t left_characteristic = 0;
};

/// Outcome of a dominance query S ⪯ R.
///
/// Dominates carries one chain per atomic factor of R (or a single chain that
/// ends at R itself); a network solution over S is carried along each chain
/// and the results are combined componentwise.  NotDominates carries the
/// violated criterion; Unknown names the open obligation.
struct DominanceVerdict {
  Relation relation;
  RingSpec lhs;
  RingSpec rhs;
  std::vector<Chain> certificate;
  std::optional<Violation> violation;
  std::string obligation;
};

/// `YES`, `NO (prime 2 exponent 5 has no divisor in {3,2})`, `UNKNOWN (...)`.
std::string describe(const DominanceVerdict& v);
std::string describe(const Step& s);

/// Atomic factors of a canonical ring: fields and D(p) stay; Z(n) splits into
/// GF(p) and Z(p^e) by the Chinese remainder theorem.
std::vector<RingSpec> atomize(const RingSpec& r);

/// Exact decision for products of finite fields: S ⪯ R iff every factor
/// GF(p^k) of R has a factor GF(p^m) of S with m | k.  Never Unknown.
DominanceVerdict field_product_dominates(const PartitionRing& s, const PartitionRing& r);

/// divides(B_p, A_p) for every prime, B from S and A from R.  Throws
/// DomainError unless both have the same size and prime support.
bool partition_dominance_bridge(const PartitionRing& s, const PartitionRing& r);

/// Z(n) ⪯ Z(m) iff m | n.
DominanceVerdict zmod_dominates(std::uint64_t n, std::uint64_t m);

/// Rule engine over the whole catalog.  Both sides are canonicalized first.
DominanceVerdict catalog_dominates(const RingSpec& s, const RingSpec& r);

/// Independent re-check of a verdict: chain links, hom shapes, exhaustive hom
/// laws where the rings are small, and recomputed violations.  Returns the
/// first problem found.  Unknown verdicts always pass.
std::optional<std::string> check_certificate(const DominanceVerdict& v);

/// Products of finite fields whose partitions are all maximal.
bool is_maximal_ring(const RingSpec& r);

/// Every combination of maximal partitions, one per prime, lexicographic with
/// the first prime most significant.  Exponents must be at most 40.
std::vector<PartitionRing> maximal_rings(const Factorization& size);

/// A field GF(p^m) with R ⪯ GF(p^m): the residue field of the p-factor of R
/// with the largest residue exponent (first such factor on ties).
RingSpec smallest_field_refuge(const RingSpec& r, std::uint64_t p);

/// [GF(p) for p | n]; n must be square-free.
std::vector<RingSpec> square_free_fields(std::uint64_t n);

/// A partition ring of the same size, with every partition maximal, that the
/// rule engine certifies as dominating R.
PartitionRing maximal_dominator(const RingSpec& r);

}  // namespace ringnc
