#include "ringnc/hom.hpp"

#include <numeric>

#include "ring_impl.hpp"
#include "ringnc/arith.hpp"
#include "ringnc/error.hpp"

namespace ringnc {

std::string to_string(HomKind kind) {
  switch (kind) {
    case HomKind::Identity: return "Identity";
    case HomKind::ModReduction: return "ModReduction";
    case HomKind::DualAugmentation: return "DualAugmentation";
    case HomKind::Projection: return "Projection";
    case HomKind::SubringInclusion: return "SubringInclusion";
    case HomKind::CrtIsomorphism: return "CrtIsomorphism";
  }
  return "?";
}

namespace {

// Z(n) or GF(p) as a residue ring: returns n.
std::optional<std::uint64_t> residue_modulus(const RingSpec& r) {
  if (r.is<IntegersMod>()) return r.as<IntegersMod>().n;
  if (r.is<PrimeField>()) return r.as<PrimeField>().p;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> structural_defect(HomKind kind, const RingSpec& source,
                                             const RingSpec& target, std::size_t index) {
  const std::string arrow = to_string(source) + " -> " + to_string(target);
  switch (kind) {
    case HomKind::Identity:
      if (source == target) return std::nullopt;
      return "identity between different rings " + arrow;
    case HomKind::ModReduction: {
      auto n = residue_modulus(source);
      auto m = residue_modulus(target);
      if (!n || !m) return "mod reduction needs residue rings: " + arrow;
      if (*n % *m != 0) return "mod reduction needs m | n: " + arrow;
      return std::nullopt;
    }
    case HomKind::DualAugmentation: {
      auto fo = field_order(target);
      if (!source.is<DualNumbers>() || !fo || fo->second != 1 ||
          fo->first != source.as<DualNumbers>().p) {
        return "dual augmentation must map D(p) onto GF(p): " + arrow;
      }
      return std::nullopt;
    }
    case HomKind::Projection: {
      if (!source.is<Product>()) return "projection from a non-product: " + arrow;
      const auto& factors = source.as<Product>().factors;
      if (index >= factors.size()) return "projection index out of range: " + arrow;
      if (!(factors[index] == target)) return "projection target is not the factor: " + arrow;
      return std::nullopt;
    }
    case HomKind::SubringInclusion: {
      auto fs = field_order(source);
      if (!fs) return "subring inclusion needs a field source: " + arrow;
      if (target.is<DualNumbers>()) {
        if (fs->second == 1 && fs->first == target.as<DualNumbers>().p) return std::nullopt;
        return "only GF(p) embeds in D(p): " + arrow;
      }
      auto ft = field_order(target);
      if (!ft || ft->first != fs->first || ft->second % fs->second != 0) {
        return "subfield inclusion needs GF(p^m) -> GF(p^k) with m | k: " + arrow;
      }
      return std::nullopt;
    }
    case HomKind::CrtIsomorphism: {
      if (!source.is<Product>()) return "CRT isomorphism needs a product source: " + arrow;
      std::uint64_t total = 1;
      for (const auto& f : source.as<Product>().factors) {
        auto n = residue_modulus(f);
        if (!n) return "CRT isomorphism needs residue-ring factors: " + arrow;
        if (std::gcd(total, *n) != 1) return "CRT factors are not coprime: " + arrow;
        auto next = checked_mul(total, *n);
        if (!next) return "CRT modulus overflows: " + arrow;
        total = *next;
      }
      auto m = residue_modulus(target);
      if (!m || *m != total) return "CRT target must be Z(product of moduli): " + arrow;
      return std::nullopt;
    }
  }
  return "unknown hom kind";
}

RingHom::RingHom(HomKind kind, Ring source, Ring target, std::size_t index)
    : kind_(kind), source_(std::move(source)), target_(std::move(target)), index_(index) {
  if (auto defect = structural_defect(kind_, source_.spec(), target_.spec(), index_)) {
    throw DomainError(*defect);
  }
}

RingHom RingHom::identity(const RingSpec& r) {
  Ring ring(r);
  return RingHom(HomKind::Identity, ring, ring, 0);
}

RingHom RingHom::mod_reduction(const RingSpec& source, const RingSpec& target) {
  return RingHom(HomKind::ModReduction, Ring(source), Ring(target), 0);
}

RingHom RingHom::dual_augmentation(std::uint64_t p) {
  return RingHom(HomKind::DualAugmentation, Ring(RingSpec::dual_numbers(p)),
                 Ring(RingSpec::prime_field(p)), 0);
}

RingHom RingHom::projection(const RingSpec& product, std::size_t index) {
  if (!product.is<Product>() || index >= product.as<Product>().factors.size()) {
    throw DomainError("projection: index out of range for " + to_string(product));
  }
  return RingHom(HomKind::Projection, Ring(product), Ring(product.as<Product>().factors[index]),
                 index);
}

namespace {

Ring::Code power(const Ring& r, Ring::Code a, std::uint64_t e) {
  Ring::Code out = r.one();
  while (e > 0) {
    if (e & 1) out = r.mul(out, a);
    a = r.mul(a, a);
    e >>= 1;
  }
  return out;
}

Ring::Code smallest_primitive(const Ring& f) {
  const std::uint64_t order = f.size() - 1;
  const auto primes = factorize(order);
  for (Ring::Code g = 1; g < f.size(); ++g) {
    bool primitive = true;
    for (const auto& [r, e] : primes) {
      if (power(f, g, order / r) == f.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw Error("no primitive element found");  // unreachable for a field
}

// a^-1 mod m for gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1, t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return static_cast<std::uint64_t>(((s0 % m) + m) % m);
}

// Code of the constant a in GF(p^k) (constant term is the leading digit).
Ring::Code constant(const Ring& f, std::uint64_t a) {
  return a * (f.one());  // one() == p^(k-1)
}

}  // namespace

RingHom RingHom::subring_inclusion(const RingSpec& source, const RingSpec& target) {
  RingHom h(HomKind::SubringInclusion, Ring(source), Ring(target), 0);
  const Ring& s = h.source_;
  const Ring& t = h.target_;
  auto [p, m] = *field_order(source);
  h.table_.resize(s.size());
  if (target.is<DualNumbers>()) {
    for (Ring::Code a = 0; a < p; ++a) h.table_[a] = a * p;
    return h;
  }
  if (m == 1) {
    for (Ring::Code a = 0; a < p; ++a) h.table_[a] = constant(t, a);
    return h;
  }
  const Poly& f = source.as<GaloisField>().modulus;
  const Ring::Code g = smallest_primitive(t);
  const std::uint64_t qm = s.size();
  const Ring::Code b = power(t, g, (t.size() - 1) / (qm - 1));
  std::optional<Ring::Code> root;
  Ring::Code cand = b;
  for (std::uint64_t i = 1; i < qm && !root; ++i, cand = t.mul(cand, b)) {
    Ring::Code value = 0, xp = t.one();
    for (auto c : f) {
      value = t.add(value, t.mul(constant(t, c), xp));
      xp = t.mul(xp, cand);
    }
    if (value == 0) root = cand;
  }
  if (!root) throw Error("subfield embedding: modulus has no root in target");
  // powers of the root, then evaluate each source element as a polynomial
  std::vector<Ring::Code> pw(m);
  pw[0] = t.one();
  for (unsigned i = 1; i < m; ++i) pw[i] = t.mul(pw[i - 1], *root);
  for (Ring::Code a = 0; a < s.size(); ++a) {
    Ring::Code rest = a, image = 0;
    for (unsigned i = m; i-- > 0;) {
      image = t.add(image, t.mul(constant(t, rest % p), pw[i]));
      rest /= p;
    }
    h.table_[a] = image;
  }
  return h;
}

RingHom RingHom::crt_isomorphism(const RingSpec& source) {
  if (!source.is<Product>()) throw DomainError("CRT isomorphism needs a product source");
  std::uint64_t total = 1;
  std::vector<std::uint64_t> moduli;
  for (const auto& f : source.as<Product>().factors) {
    auto n = residue_modulus(f);
    if (!n) throw DomainError("CRT isomorphism needs residue-ring factors");
    moduli.push_back(*n);
    total *= *n;  // overflow is rejected by structural_defect below
  }
  RingHom h(HomKind::CrtIsomorphism, Ring(source), Ring(RingSpec::integers_mod(total)), 0);
  h.moduli_ = std::move(moduli);
  return h;
}

RingHom RingHom::make(HomKind kind, const RingSpec& source, const RingSpec& target,
                      std::size_t index) {
  switch (kind) {
    case HomKind::Identity:
      if (!(source == target)) throw DomainError("identity between different rings");
      return identity(source);
    case HomKind::ModReduction: return mod_reduction(source, target);
    case HomKind::DualAugmentation: {
      if (!source.is<DualNumbers>()) throw DomainError("dual augmentation needs D(p)");
      RingHom h(kind, Ring(source), Ring(target), 0);
      return h;
    }
    case HomKind::Projection: {
      RingHom h = projection(source, index);
      if (!(h.target().spec() == target)) throw DomainError("projection target mismatch");
      return h;
    }
    case HomKind::SubringInclusion: return subring_inclusion(source, target);
    case HomKind::CrtIsomorphism: {
      RingHom h = crt_isomorphism(source);
      if (!(h.target().spec() == target)) {
        // Z(p) targets are spelled GF(p) after canonicalization; keep the caller's spec
        if (!residue_modulus(target) || *residue_modulus(target) != h.target().size()) {
          throw DomainError("CRT target mismatch");
        }
        h.target_ = Ring(target);
      }
      return h;
    }
  }
  throw DomainError("unknown hom kind");
}

bool RingHom::surjective_kind() const noexcept {
  return kind_ != HomKind::SubringInclusion;
}

Ring::Code RingHom::apply(Ring::Code a) const {
  if (a >= source_.size()) throw DomainError("apply: code out of range");
  switch (kind_) {
    case HomKind::Identity: return a;
    case HomKind::ModReduction: return a % target_.size();
    case HomKind::DualAugmentation: return a / target_.size();
    case HomKind::Projection: return source_.split(a)[index_];
    case HomKind::SubringInclusion: return table_[a];
    case HomKind::CrtIsomorphism: {
      // incremental CRT: x = x + n * ((r - x) * n^-1 mod m)
      auto parts = source_.split(a);
      unsigned __int128 x = 0, n = 1;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::uint64_t m = moduli_[i];
        std::uint64_t xm = static_cast<std::uint64_t>(x % m);
        std::uint64_t diff = (parts[i] + m - xm) % m;
        std::uint64_t ninv = inverse_mod(static_cast<std::uint64_t>(n % m), m);
        std::uint64_t t = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(diff) * ninv % m);
        x += n * t;
        n *= m;
      }
      return static_cast<Ring::Code>(x);
    }
  }
  return 0;
}

RingElement apply_hom(const RingHom& h, const RingElement& a) {
  if (!a.ring().same_as(h.source())) {
    throw DomainError("apply_hom: element of " + to_string(a.ring().spec()) +
                      " but hom source is " + to_string(h.source().spec()));
  }
  return RingElement(h.target(), h.apply(a.code()));
}

std::optional<std::string> check_hom_laws(const RingHom& h) {
  const Ring& s = h.source();
  const Ring& t = h.target();
  if (s.size() > detail::kTableLimit) throw LimitError("check_hom_laws: source exceeds 512");
  const std::string name = to_string(h.kind()) + " " + to_string(s.spec()) + " -> " +
                           to_string(t.spec());
  if (h.apply(s.zero()) != t.zero()) return name + ": h(0) != 0";
  if (h.apply(s.one()) != t.one()) return name + ": h(1) != 1";
  std::vector<Ring::Code> img(s.size());
  for (Ring::Code a = 0; a < s.size(); ++a) img[a] = h.apply(a);
  for (Ring::Code a = 0; a < s.size(); ++a) {
    for (Ring::Code b = 0; b < s.size(); ++b) {
      if (img[s.add(a, b)] != t.add(img[a], img[b])) {
        return name + ": not additive at (" + s.format(a) + ", " + s.format(b) + ")";
      }
      if (img[s.mul(a, b)] != t.mul(img[a], img[b])) {
        return name + ": not multiplicative at (" + s.format(a) + ", " + s.format(b) + ")";
      }
    }
  }
  std::vector<bool> hit(t.size(), false);
  std::uint64_t distinct = 0;
  for (auto c : img) {
    if (!hit[c]) ++distinct;
    hit[c] = true;
  }
  if (h.surjective_kind() && distinct != t.size()) return name + ": not surjective";
  if (!h.surjective_kind() && distinct != s.size()) return name + ": not injective";
  return std::nullopt;
}

}  // namespace ringnc
