#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ringnc {

/// Largest ring (or field) size for which elements are enumerated and
/// irreducible moduli are searched.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

/// Polynomial over GF(p), coefficients stored constant term first.
using Poly = std::vector<std::uint64_t>;

struct PrimeField {
  std::uint64_t p;
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

/// GF(p^k), k >= 2, realized as GF(p)[x]/<modulus>.
///
/// `modulus` is monic of degree k.  It is left empty for fields larger than
/// kEnumerationLimit: such fields take part in symbolic reasoning only and
/// cannot be instantiated as a Ring.
struct GaloisField {
  std::uint64_t p;
  unsigned k;
  Poly modulus;
  friend bool operator==(const GaloisField&, const GaloisField&) = default;
};

struct IntegersMod {
  std::uint64_t n;
  friend bool operator==(const IntegersMod&, const IntegersMod&) = default;
};

/// GF(p)[x]/<x^2>; the element (a, b) is a + b x.
struct DualNumbers {
  std::uint64_t p;
  friend bool operator==(const DualNumbers&, const DualNumbers&) = default;
};

class RingSpec;

struct Product {
  std::vector<RingSpec> factors;
  friend bool operator==(const Product& a, const Product& b);
};

/// Symbolic description of a ring in the closed catalog: prime fields,
/// GF(p^k), Z_n, dual numbers, and finite direct products of these.
class RingSpec {
 public:
  using Variant = std::variant<PrimeField, GaloisField, IntegersMod, DualNumbers, Product>;

  static RingSpec prime_field(std::uint64_t p);
  /// GF(p^k) with the lexicographically smallest irreducible modulus
  /// (a PrimeField when k == 1).
  static RingSpec galois_field(std::uint64_t p, unsigned k);
  /// GF(p^k) with an explicit modulus; validated monic, degree k, irreducible.
  static RingSpec galois_field(std::uint64_t p, unsigned k, Poly modulus);
  static RingSpec integers_mod(std::uint64_t n);
  static RingSpec dual_numbers(std::uint64_t p);
  static RingSpec product(std::vector<RingSpec> factors);

  const Variant& variant() const noexcept { return v_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(v_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.v_ == b.v_; }

 private:
  explicit RingSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Number of elements; throws LimitError if it does not fit in 64 bits.
std::uint64_t size(const RingSpec& r);
/// Smallest c >= 1 with c * 1 = 0.
std::uint64_t characteristic(const RingSpec& r);
/// True for PrimeField, GaloisField, and Z_p with p prime.
bool is_field(const RingSpec& r);
/// If r is a field of size p^k, returns (p, k).
std::optional<std::pair<std::uint64_t, unsigned>> field_order(const RingSpec& r);

/// Flattens nested products, rewrites Z_p (p prime) as GF(p), sorts field
/// factors by (prime, descending exponent) ahead of non-field factors (which
/// keep their input order), and unwraps single-factor products.  Idempotent.
RingSpec canonicalize(const RingSpec& r);

/// Ring-expression rendering: `GF(p)`, `GF(p^k)`, `Z(n)`, `D(p)`, joined with `x`.
std::string to_string(const RingSpec& r);

/// Parses a ring expression.  Whitespace-insensitive; `GF(q)` accepts a prime
/// power q or `p^k`.  Throws ParseError with the byte offset on failure.
RingSpec parse_ring(std::string_view text);

/// Lexicographically smallest monic irreducible polynomial of degree k over
/// GF(p), comparing coefficient vectors constant term first.
/// Throws LimitError when p^k exceeds kEnumerationLimit.
Poly find_irreducible(std::uint64_t p, unsigned k);

/// Rabin irreducibility test over GF(p).  `f` must be monic.
bool is_irreducible(std::uint64_t p, const Poly& f);

namespace detail {
class RingImpl;
}

/// Arithmetic context for a RingSpec.
///
/// Elements are encoded as integer codes in [0, size): the code is the
/// position of the element in lexicographic payload order, so iterating
/// codes 0, 1, ... visits elements in canonical order.  The context is
/// immutable and cheap to copy.
class Ring {
 public:
  using Code = std::uint64_t;

  explicit Ring(const RingSpec& spec);

  const RingSpec& spec() const noexcept;
  std::uint64_t size() const noexcept;
  std::uint64_t characteristic() const noexcept;
  bool is_field() const noexcept;

  Code zero() const noexcept { return 0; }
  Code one() const noexcept;

  Code add(Code a, Code b) const;
  Code mul(Code a, Code b) const;
  Code neg(Code a) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  std::optional<Code> inverse(Code a) const;

  /// Component rings of a Product (empty otherwise).
  std::span<const Ring> factors() const noexcept;
  /// Splits a Product code into per-factor codes.
  std::vector<Code> split(Code a) const;
  /// Inverse of split.
  Code join(std::span<const Code> parts) const;

  /// Element text: integers for Z_n and GF(p); little-endian polynomials such
  /// as `1+2x+x^2` for GF(p^k) and D(p); `(a,b,...)` for products.
  std::string format(Code a) const;
  Code parse(std::string_view text) const;

  /// Same object, or structurally equal specs.
  bool same_as(const Ring& other) const noexcept;

 private:
  std::shared_ptr<const detail::RingImpl> impl_;
};

/// An element together with its owning ring.
class RingElement {
 public:
  RingElement(Ring ring, Ring::Code code);

  const Ring& ring() const noexcept { return ring_; }
  Ring::Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  std::string to_string() const { return ring_.format(code_); }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  Ring ring_;
  Ring::Code code_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);
std::optional<RingElement> inverse(const RingElement& a);

/// All elements in canonical order.  Throws LimitError above kEnumerationLimit.
std::vector<RingElement> elements(const Ring& r);

}  // namespace ringnc
