#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringnc/ring.hpp"

namespace ringnc {

enum class HomKind {
  Identity,
  /// Z(n) -> Z(m) or GF(m), m | n: r -> r mod m.
  ModReduction,
  /// D(p) -> GF(p): a + b x -> a.
  DualAugmentation,
  /// Product -> factor `index` (0-based).
  Projection,
  /// GF(p^m) -> GF(p^k) with m | k, or GF(p) -> D(p).
  SubringInclusion,
  /// Z(p1^e1) x ... x Z(pt^et) -> Z(p1^e1 ... pt^et), distinct primes.
  CrtIsomorphism,
};

std::string to_string(HomKind kind);

/// Checks the shape of a homomorphism without doing any arithmetic, so it also
/// applies to symbolic fields.  Returns a description of the defect, if any.
std::optional<std::string> structural_defect(HomKind kind, const RingSpec& source,
                                             const RingSpec& target, std::size_t index = 0);

/// A concrete structure map between two instantiated catalog rings.
class RingHom {
 public:
  static RingHom identity(const RingSpec& r);
  static RingHom mod_reduction(const RingSpec& source, const RingSpec& target);
  static RingHom dual_augmentation(std::uint64_t p);
  static RingHom projection(const RingSpec& product, std::size_t index);
  /// The embedding sends x to the first root of the source modulus among
  /// b, b^2, ..., where b = g^((p^k-1)/(p^m-1)) and g is the smallest
  /// primitive element of the target.
  static RingHom subring_inclusion(const RingSpec& source, const RingSpec& target);
  static RingHom crt_isomorphism(const RingSpec& source);
  /// Dispatches on kind; `index` is used by Projection only.
  static RingHom make(HomKind kind, const RingSpec& source, const RingSpec& target,
                      std::size_t index = 0);

  HomKind kind() const noexcept { return kind_; }
  const Ring& source() const noexcept { return source_; }
  const Ring& target() const noexcept { return target_; }
  std::size_t index() const noexcept { return index_; }

  bool surjective_kind() const noexcept;

  Ring::Code apply(Ring::Code a) const;

 private:
  RingHom(HomKind kind, Ring source, Ring target, std::size_t index);

  HomKind kind_;
  Ring source_;
  Ring target_;
  std::size_t index_;
  std::vector<Ring::Code> table_;   // SubringInclusion
  std::vector<std::uint64_t> moduli_;  // CrtIsomorphism
};

/// Throws DomainError if `a` is not owned by the source ring.
RingElement apply_hom(const RingHom& h, const RingElement& a);

/// Exhaustively checks h(0)=0, h(1)=1, additivity, multiplicativity and
/// surjectivity or injectivity per kind.  Returns the first violation.
/// Throws LimitError when the source has more than 512 elements.
std::optional<std::string> check_hom_laws(const RingHom& h);

}  // namespace ringnc
