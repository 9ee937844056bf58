#include <cctype>
#include <numeric>

#include "ring_impl.hpp"
#include "ringnc/arith.hpp"
#include "ringnc/error.hpp"
#include "ringnc/ring.hpp"

namespace ringnc {
namespace detail {

void RingImpl::build_tables() {
  if (size_ > kTableLimit) return;
  std::vector<std::uint32_t> add(size_ * size_), mul(size_ * size_);
  for (Code a = 0; a < size_; ++a) {
    for (Code b = 0; b < size_; ++b) {
      add[a * size_ + b] = static_cast<std::uint32_t>(add_raw(a, b));
      mul[a * size_ + b] = static_cast<std::uint32_t>(mul_raw(a, b));
    }
  }
  add_table_ = std::move(add);
  mul_table_ = std::move(mul);
}

namespace {

std::size_t skip_ws(std::string_view t, std::size_t pos) {
  while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
  return pos;
}

// Parses a (possibly signed) decimal integer and reduces it mod n.
std::uint64_t parse_residue(std::string_view text, std::uint64_t n) {
  std::size_t pos = skip_ws(text, 0);
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    pos = skip_ws(text, pos + 1);
  }
  std::size_t start = pos;
  std::uint64_t v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * 10 +
                                    static_cast<unsigned>(text[pos] - '0')) %
                                   n);
    ++pos;
  }
  if (pos == start) throw ParseError("expected integer", start);
  pos = skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return negative ? (n - v) % n : v;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

// Z_n and GF(p): the code is the residue.
class ModImpl final : public RingImpl {
 public:
  ModImpl(RingSpec spec, std::uint64_t n, bool field)
      : RingImpl(std::move(spec), n, n, field), n_(n) {}

  Code one() const override { return 1; }
  Code add_raw(Code a, Code b) const override {
    return a >= n_ - b ? a - (n_ - b) : a + b;
  }
  Code mul_raw(Code a, Code b) const override { return mulmod(a, b, n_); }
  Code neg(Code a) const override { return a == 0 ? 0 : n_ - a; }
  std::optional<Code> inverse(Code a) const override {
    // extended Euclid on signed 128-bit values
    __int128 r0 = n_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      __int128 t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    if (r0 != 1) return std::nullopt;
    __int128 m = static_cast<__int128>(n_);
    return static_cast<Code>(((s0 % m) + m) % m);
  }
  std::string format(Code a) const override { return std::to_string(a); }
  Code parse(std::string_view text) const override { return parse_residue(text, n_); }

 private:
  std::uint64_t n_;
};

// GF(p^k): code = sum c_i p^(k-1-i), so c_0 (the constant term) is the most
// significant digit and code order is lexicographic on (c_0, ..., c_{k-1}).
class GaloisImpl final : public RingImpl {
 public:
  GaloisImpl(RingSpec spec, const GaloisField& f, std::uint64_t q)
      : RingImpl(std::move(spec), q, f.p, true), p_(f.p), k_(f.k), modulus_(f.modulus) {
    place_.resize(k_);
    std::uint64_t w = 1;
    for (unsigned i = k_; i-- > 0;) {
      place_[i] = w;
      w *= p_;
    }
  }

  Code one() const override { return place_[0]; }

  Code add_raw(Code a, Code b) const override {
    Code r = 0;
    for (unsigned i = k_; i-- > 0;) {
      std::uint64_t s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * place_[i];
      a /= p_;
      b /= p_;
    }
    return r;
  }

  Code mul_raw(Code a, Code b) const override {
    auto x = decode(a);
    auto y = decode(b);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    return encode(reduce(std::move(prod)));
  }

  Code neg(Code a) const override {
    auto c = decode(a);
    for (auto& v : c) v = v == 0 ? 0 : p_ - v;
    return encode(c);
  }

  std::optional<Code> inverse(Code a) const override {
    if (a == 0) return std::nullopt;
    // a^(q-2)
    std::uint64_t e = size() - 2;
    Code r = one(), base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  std::string format(Code a) const override { return format_polynomial(decode(a)); }

  Code parse(std::string_view text) const override {
    return encode(reduce(parse_polynomial(text, p_)));
  }

 private:
  std::vector<std::uint64_t> decode(Code a) const {
    std::vector<std::uint64_t> c(k_);
    for (unsigned i = k_; i-- > 0;) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  Code encode(const std::vector<std::uint64_t>& c) const {
    Code r = 0;
    for (unsigned i = 0; i < k_; ++i) r += c[i] * place_[i];
    return r;
  }

  // Reduces a polynomial of any degree modulo the (monic) field modulus.
  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> a) const {
    for (std::size_t d = a.size(); d-- > k_;) {
      std::uint64_t lead = a[d];
      if (lead == 0) continue;
      for (unsigned i = 0; i <= k_; ++i) {
        a[d - k_ + i] = (a[d - k_ + i] + (p_ - lead) * modulus_[i]) % p_;
      }
    }
    a.resize(k_, 0);
    return a;
  }

  std::uint64_t p_;
  unsigned k_;
  Poly modulus_;
  std::vector<std::uint64_t> place_;
};

// D(p): code = a * p + b for a + b x.
class DualImpl final : public RingImpl {
 public:
  DualImpl(RingSpec spec, std::uint64_t p) : RingImpl(std::move(spec), p * p, p, false), p_(p) {}

  Code one() const override { return p_; }
  Code add_raw(Code x, Code y) const override {
    return pack((hi(x) + hi(y)) % p_, (lo(x) + lo(y)) % p_);
  }
  Code mul_raw(Code x, Code y) const override {
    return pack(mulmod(hi(x), hi(y), p_),
                (mulmod(hi(x), lo(y), p_) + mulmod(lo(x), hi(y), p_)) % p_);
  }
  Code neg(Code x) const override { return pack((p_ - hi(x)) % p_, (p_ - lo(x)) % p_); }
  std::optional<Code> inverse(Code x) const override {
    if (hi(x) == 0) return std::nullopt;
    std::uint64_t ai = powmod(hi(x), p_ - 2, p_);
    // (a + b x)^-1 = a^-1 - b a^-2 x
    std::uint64_t b = mulmod(lo(x), mulmod(ai, ai, p_), p_);
    return pack(ai, (p_ - b) % p_);
  }
  std::string format(Code x) const override { return format_polynomial({hi(x), lo(x)}); }
  Code parse(std::string_view text) const override {
    auto c = parse_polynomial(text, p_);
    c.resize(std::max<std::size_t>(c.size(), 2), 0);
    return pack(c[0], c[1]);  // x^2 = 0
  }

 private:
  std::uint64_t hi(Code x) const { return x / p_; }
  std::uint64_t lo(Code x) const { return x % p_; }
  Code pack(std::uint64_t a, std::uint64_t b) const { return a * p_ + b; }

  std::uint64_t p_;
};

// Mixed radix with the first factor most significant.
class ProductImpl final : public RingImpl {
 public:
  ProductImpl(RingSpec spec, std::vector<Ring> factors, std::uint64_t size,
              std::uint64_t characteristic)
      : RingImpl(std::move(spec), size, characteristic, false), factors_(std::move(factors)) {
    place_.resize(factors_.size());
    std::uint64_t w = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      place_[i] = w;
      w *= factors_[i].size();
    }
    std::vector<Code> ones;
    for (const auto& f : factors_) ones.push_back(f.one());
    one_ = join(ones);
  }

  const std::vector<Ring>& factors() const override { return factors_; }

  std::vector<Code> split(Code a) const {
    std::vector<Code> parts(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      parts[i] = a / place_[i];
      a %= place_[i];
    }
    return parts;
  }
  Code join(std::span<const Code> parts) const {
    Code r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) r += parts[i] * place_[i];
    return r;
  }

  Code one() const override { return one_; }
  Code add_raw(Code a, Code b) const override {
    return zip(a, b, [](const Ring& r, Code x, Code y) { return r.add(x, y); });
  }
  Code mul_raw(Code a, Code b) const override {
    return zip(a, b, [](const Ring& r, Code x, Code y) { return r.mul(x, y); });
  }
  Code neg(Code a) const override {
    auto parts = split(a);
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = factors_[i].neg(parts[i]);
    return join(parts);
  }
  std::optional<Code> inverse(Code a) const override {
    auto parts = split(a);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto inv = factors_[i].inverse(parts[i]);
      if (!inv) return std::nullopt;
      parts[i] = *inv;
    }
    return join(parts);
  }
  std::string format(Code a) const override {
    auto parts = split(a);
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += ',';
      out += factors_[i].format(parts[i]);
    }
    return out + ")";
  }
  Code parse(std::string_view text) const override {
    std::size_t pos = skip_ws(text, 0);
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    std::vector<Code> parts;
    std::size_t depth = 0, start = pos + 1, i = pos + 1;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '(') {
        ++depth;
      } else if ((c == ',' || c == ')') && depth == 0) {
        if (parts.size() >= factors_.size()) throw ParseError("too many components", start);
        try {
          parts.push_back(factors_[parts.size()].parse(text.substr(start, i - start)));
        } catch (const ParseError& e) {
          throw ParseError("bad component", start + e.offset());
        }
        start = i + 1;
        if (c == ')') break;
      } else if (c == ')') {
        --depth;
      }
    }
    if (i >= text.size()) throw ParseError("expected ')'", text.size());
    if (parts.size() != factors_.size()) throw ParseError("wrong number of components", i);
    if (skip_ws(text, i + 1) != text.size()) throw ParseError("unexpected character", i + 1);
    return join(parts);
  }

 private:
  template <class F>
  Code zip(Code a, Code b, F&& f) const {
    Code r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      r += f(factors_[i], a / place_[i], b / place_[i]) * place_[i];
      a %= place_[i];
      b %= place_[i];
    }
    return r;
  }

  std::vector<Ring> factors_;
  std::vector<std::uint64_t> place_;
  Code one_ = 0;
};

std::shared_ptr<RingImpl> make_impl(const RingSpec& spec) {
  struct Visitor {
    const RingSpec& spec;
    std::shared_ptr<RingImpl> operator()(const PrimeField& f) const {
      return std::make_shared<ModImpl>(spec, f.p, true);
    }
    std::shared_ptr<RingImpl> operator()(const IntegersMod& z) const {
      return std::make_shared<ModImpl>(spec, z.n, is_prime(z.n));
    }
    std::shared_ptr<RingImpl> operator()(const GaloisField& f) const {
      if (f.modulus.empty()) {
        throw LimitError("GF(" + std::to_string(f.p) + "^" + std::to_string(f.k) +
                         ") exceeds the 2^20 arithmetic guard");
      }
      return std::make_shared<GaloisImpl>(spec, f, size(spec));
    }
    std::shared_ptr<RingImpl> operator()(const DualNumbers& d) const {
      if (d.p > (std::uint64_t{1} << 31)) throw LimitError("D(p): p too large");
      return std::make_shared<DualImpl>(spec, d.p);
    }
    std::shared_ptr<RingImpl> operator()(const Product& prod) const {
      std::vector<Ring> factors;
      for (const auto& f : prod.factors) factors.emplace_back(f);
      return std::make_shared<ProductImpl>(spec, std::move(factors), size(spec),
                                           characteristic(spec));
    }
  };
  auto impl = std::visit(Visitor{spec}, spec.variant());
  impl->build_tables();
  return impl;
}

}  // namespace

std::vector<std::uint64_t> parse_polynomial(std::string_view text, std::uint64_t p) {
  std::vector<std::uint64_t> coeffs;
  std::size_t pos = skip_ws(text, 0);
  bool first = true;
  while (true) {
    pos = skip_ws(text, pos);
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      pos = skip_ws(text, pos + 1);
    } else if (!first) {
      break;
    }
    first = false;
    std::size_t term_start = pos;
    std::uint64_t coeff = 1;
    bool has_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = (coeff * 10 + static_cast<unsigned>(text[pos] - '0')) % p;
        ++pos;
      }
      has_coeff = true;
      pos = skip_ws(text, pos);
      if (pos < text.size() && text[pos] == '*') pos = skip_ws(text, pos + 1);
    }
    std::size_t degree = 0;
    if (pos < text.size() && text[pos] == 'x') {
      degree = 1;
      pos = skip_ws(text, pos + 1);
      if (pos < text.size() && text[pos] == '^') {
        pos = skip_ws(text, pos + 1);
        std::size_t start = pos;
        std::size_t d = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          d = d * 10 + static_cast<unsigned>(text[pos] - '0');
          if (d > 4096) throw ParseError("exponent too large", start);
          ++pos;
        }
        if (pos == start) throw ParseError("expected exponent", start);
        degree = d;
      }
    } else if (!has_coeff) {
      throw ParseError("expected term", term_start);
    }
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    std::uint64_t c = negative ? (p - coeff) % p : coeff;
    coeffs[degree] = (coeffs[degree] + c) % p;
  }
  pos = skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return coeffs;
}

std::string format_polynomial(const std::vector<std::uint64_t>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(coeffs[i]);
      continue;
    }
    if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

Ring::Ring(const RingSpec& spec) : impl_(detail::make_impl(spec)) {}

const RingSpec& Ring::spec() const noexcept { return impl_->spec(); }
std::uint64_t Ring::size() const noexcept { return impl_->size(); }
std::uint64_t Ring::characteristic() const noexcept { return impl_->characteristic(); }
bool Ring::is_field() const noexcept { return impl_->is_field(); }
Ring::Code Ring::one() const noexcept { return impl_->one(); }
Ring::Code Ring::add(Code a, Code b) const { return impl_->add(a, b); }
Ring::Code Ring::mul(Code a, Code b) const { return impl_->mul(a, b); }
Ring::Code Ring::neg(Code a) const { return impl_->neg(a); }
std::optional<Ring::Code> Ring::inverse(Code a) const { return impl_->inverse(a); }
std::span<const Ring> Ring::factors() const noexcept { return impl_->factors(); }

std::vector<Ring::Code> Ring::split(Code a) const {
  if (auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get())) return p->split(a);
  return {a};
}

Ring::Code Ring::join(std::span<const Code> parts) const {
  if (auto* p = dynamic_cast<const detail::ProductImpl*>(impl_.get())) return p->join(parts);
  if (parts.size() != 1) throw DomainError("join: wrong number of components");
  return parts.front();
}

std::string Ring::format(Code a) const { return impl_->format(a); }
Ring::Code Ring::parse(std::string_view text) const { return impl_->parse(text); }

bool Ring::same_as(const Ring& other) const noexcept {
  return impl_ == other.impl_ || impl_->spec() == other.impl_->spec();
}

RingElement::RingElement(Ring ring, Ring::Code code) : ring_(std::move(ring)), code_(code) {
  if (code_ >= ring_.size()) throw DomainError("element code out of range");
}

namespace {

void require_same(const RingElement& a, const RingElement& b) {
  if (!a.ring().same_as(b.ring())) {
    throw DomainError("ring mismatch: " + to_string(a.ring().spec()) + " vs " +
                      to_string(b.ring().spec()));
  }
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.add(a.code_, b.code_)};
}
RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.mul(a.code_, b.code_)};
}
RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring_, a.ring_.sub(a.code_, b.code_)};
}
RingElement operator-(const RingElement& a) { return {a.ring_, a.ring_.neg(a.code_)}; }
bool operator==(const RingElement& a, const RingElement& b) {
  return a.code_ == b.code_ && a.ring_.same_as(b.ring_);
}

RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
RingElement neg(const RingElement& a) { return -a; }

std::optional<RingElement> inverse(const RingElement& a) {
  auto inv = a.ring().inverse(a.code());
  if (!inv) return std::nullopt;
  return RingElement(a.ring(), *inv);
}

std::vector<RingElement> elements(const Ring& r) {
  if (r.size() > kEnumerationLimit) throw LimitError("elements: ring exceeds 2^20 elements");
  std::vector<RingElement> out;
  out.reserve(r.size());
  for (Ring::Code c = 0; c < r.size(); ++c) out.emplace_back(r, c);
  return out;
}

}  // namespace ringnc
