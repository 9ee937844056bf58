#include <algorithm>
#include <cctype>

#include "ringnc/arith.hpp"
#include "ringnc/error.hpp"
#include "ringnc/ring.hpp"

namespace ringnc {

bool operator==(const Product& a, const Product& b) { return a.factors == b.factors; }

namespace {

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw DomainError(std::string(what) + ": " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

RingSpec RingSpec::prime_field(std::uint64_t p) {
  require_prime(p, "GF(p)");
  return RingSpec(PrimeField{p});
}

RingSpec RingSpec::galois_field(std::uint64_t p, unsigned k) {
  require_prime(p, "GF(p^k)");
  if (k == 0) throw DomainError("GF(p^k): exponent must be positive");
  if (k == 1) return prime_field(p);
  auto q = checked_pow(p, k);
  if (q && *q <= kEnumerationLimit) return RingSpec(GaloisField{p, k, find_irreducible(p, k)});
  return RingSpec(GaloisField{p, k, {}});
}

RingSpec RingSpec::galois_field(std::uint64_t p, unsigned k, Poly modulus) {
  require_prime(p, "GF(p^k)");
  if (k < 2) throw DomainError("GF(p^k) with explicit modulus needs k >= 2");
  if (modulus.size() != k + 1 || modulus.back() != 1) {
    throw DomainError("GF(p^k): modulus must be monic of degree k");
  }
  for (auto c : modulus) {
    if (c >= p) throw DomainError("GF(p^k): modulus coefficients must be reduced mod p");
  }
  auto q = checked_pow(p, k);
  if (!q || *q > kEnumerationLimit) throw LimitError("GF(p^k): field exceeds 2^20 elements");
  if (!is_irreducible(p, modulus)) throw DomainError("GF(p^k): modulus is not irreducible");
  return RingSpec(GaloisField{p, k, std::move(modulus)});
}

RingSpec RingSpec::integers_mod(std::uint64_t n) {
  if (n < 2) throw DomainError("Z(n): n must be at least 2");
  return RingSpec(IntegersMod{n});
}

RingSpec RingSpec::dual_numbers(std::uint64_t p) {
  require_prime(p, "D(p)");
  return RingSpec(DualNumbers{p});
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  if (factors.empty()) throw DomainError("product of zero rings");
  return RingSpec(Product{std::move(factors)});
}

std::uint64_t size(const RingSpec& r) {
  struct Visitor {
    std::uint64_t operator()(const PrimeField& f) const { return f.p; }
    std::uint64_t operator()(const GaloisField& f) const {
      auto q = checked_pow(f.p, f.k);
      if (!q) throw LimitError("ring size exceeds 64 bits");
      return *q;
    }
    std::uint64_t operator()(const IntegersMod& z) const { return z.n; }
    std::uint64_t operator()(const DualNumbers& d) const {
      auto q = checked_mul(d.p, d.p);
      if (!q) throw LimitError("ring size exceeds 64 bits");
      return *q;
    }
    std::uint64_t operator()(const Product& prod) const {
      std::uint64_t s = 1;
      for (const auto& f : prod.factors) {
        auto next = checked_mul(s, size(f));
        if (!next) throw LimitError("ring size exceeds 64 bits");
        s = *next;
      }
      return s;
    }
  };
  return std::visit(Visitor{}, r.variant());
}

std::uint64_t characteristic(const RingSpec& r) {
  struct Visitor {
    std::uint64_t operator()(const PrimeField& f) const { return f.p; }
    std::uint64_t operator()(const GaloisField& f) const { return f.p; }
    std::uint64_t operator()(const IntegersMod& z) const { return z.n; }
    std::uint64_t operator()(const DualNumbers& d) const { return d.p; }
    std::uint64_t operator()(const Product& prod) const {
      std::uint64_t c = 1;
      for (const auto& f : prod.factors) c = lcm(c, characteristic(f));
      return c;
    }
  };
  return std::visit(Visitor{}, r.variant());
}

std::optional<std::pair<std::uint64_t, unsigned>> field_order(const RingSpec& r) {
  if (r.is<PrimeField>()) return std::pair{r.as<PrimeField>().p, 1u};
  if (r.is<GaloisField>()) return std::pair{r.as<GaloisField>().p, r.as<GaloisField>().k};
  if (r.is<IntegersMod>() && is_prime(r.as<IntegersMod>().n)) {
    return std::pair{r.as<IntegersMod>().n, 1u};
  }
  return std::nullopt;
}

bool is_field(const RingSpec& r) { return field_order(r).has_value(); }

namespace {

void flatten_into(const RingSpec& r, std::vector<RingSpec>& out) {
  if (r.is<Product>()) {
    for (const auto& f : r.as<Product>().factors) flatten_into(f, out);
  } else if (r.is<IntegersMod>() && is_prime(r.as<IntegersMod>().n)) {
    out.push_back(RingSpec::prime_field(r.as<IntegersMod>().n));
  } else {
    out.push_back(r);
  }
}

}  // namespace

RingSpec canonicalize(const RingSpec& r) {
  std::vector<RingSpec> flat;
  flatten_into(r, flat);
  std::vector<RingSpec> fields;
  std::vector<RingSpec> others;
  for (auto& f : flat) (is_field(f) ? fields : others).push_back(std::move(f));
  std::stable_sort(fields.begin(), fields.end(), [](const RingSpec& a, const RingSpec& b) {
    auto [pa, ka] = *field_order(a);
    auto [pb, kb] = *field_order(b);
    if (pa != pb) return pa < pb;
    return ka > kb;
  });
  fields.insert(fields.end(), std::make_move_iterator(others.begin()),
                std::make_move_iterator(others.end()));
  if (fields.size() == 1) return fields.front();
  return RingSpec::product(std::move(fields));
}

std::string to_string(const RingSpec& r) {
  struct Visitor {
    std::string operator()(const PrimeField& f) const { return "GF(" + std::to_string(f.p) + ")"; }
    std::string operator()(const GaloisField& f) const {
      return "GF(" + std::to_string(f.p) + "^" + std::to_string(f.k) + ")";
    }
    std::string operator()(const IntegersMod& z) const { return "Z(" + std::to_string(z.n) + ")"; }
    std::string operator()(const DualNumbers& d) const { return "D(" + std::to_string(d.p) + ")"; }
    std::string operator()(const Product& prod) const {
      std::string out;
      for (const auto& f : prod.factors) {
        if (!out.empty()) out += 'x';
        out += to_string(f);
      }
      return out;
    }
  };
  return std::visit(Visitor{}, r.variant());
}

namespace {

class RingParser {
 public:
  explicit RingParser(std::string_view text) : text_(text) {}

  RingSpec parse() {
    std::vector<RingSpec> terms;
    terms.push_back(term());
    while (peek() == 'x' || peek() == 'X') {
      ++pos_;
      terms.push_back(term());
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    if (terms.size() == 1) return std::move(terms.front());
    return RingSpec::product(std::move(terms));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) throw ParseError("integer overflow", start);
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return v;
  }

  RingSpec term() {
    skip_ws();
    std::size_t start = pos_;
    auto rest = text_.substr(pos_);
    try {
      if (rest.starts_with("GF")) {
        pos_ += 2;
        expect('(');
        std::size_t arg = (skip_ws(), pos_);
        std::uint64_t base = number();
        unsigned k = 1;
        if (peek() == '^') {
          ++pos_;
          std::uint64_t e = number();
          if (e == 0 || e > 64) throw ParseError("exponent out of range", arg);
          k = static_cast<unsigned>(e);
          if (!is_prime(base)) throw ParseError("GF base is not prime", arg);
        } else {
          auto pk = prime_power(base);
          if (!pk) throw ParseError("GF order is not a prime power", arg);
          base = pk->first;
          k = pk->second;
        }
        expect(')');
        return RingSpec::galois_field(base, k);
      }
      if (rest.starts_with("Z")) {
        ++pos_;
        expect('(');
        std::size_t arg = (skip_ws(), pos_);
        std::uint64_t n = number();
        if (n < 2) throw ParseError("Z(n) needs n >= 2", arg);
        expect(')');
        return RingSpec::integers_mod(n);
      }
      if (rest.starts_with("D")) {
        ++pos_;
        expect('(');
        std::size_t arg = (skip_ws(), pos_);
        std::uint64_t p = number();
        if (!is_prime(p)) throw ParseError("D(p) needs a prime", arg);
        expect(')');
        return RingSpec::dual_numbers(p);
      }
    } catch (const DomainError& e) {
      throw ParseError(e.what(), start);
    }
    throw ParseError("expected GF(..), Z(..) or D(..)", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring(std::string_view text) { return RingParser(text).parse(); }

}  // namespace ringnc
