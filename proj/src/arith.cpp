#include "ringnc/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "ringnc/error.hpp"

namespace ringnc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  Factorization out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    auto next = checked_mul(r, p);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      auto next = checked_mul(v, 10);
      if (!next || *next > UINT64_MAX - static_cast<unsigned>(text[pos] - '0')) {
        throw ParseError("integer overflow", start);
      }
      v = *next + static_cast<unsigned>(text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError("expected integer", start);
    return v;
  }
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }
};

}  // namespace

Factorization parse_factored_size(std::string_view text) {
  Cursor cur{text};
  bool has_power = text.find('^') != std::string_view::npos ||
                   text.find('*') != std::string_view::npos;
  if (!has_power) {
    std::uint64_t n = cur.number();
    if (!cur.at_end()) throw ParseError("unexpected character", cur.pos);
    if (n < 2) throw DomainError("size must be at least 2");
    if (n > (1u << 20)) throw LimitError("plain integer sizes are limited to 2^20");
    return factorize(n);
  }
  std::map<std::uint64_t, unsigned> merged;
  do {
    std::size_t at = (cur.skip_ws(), cur.pos);
    std::uint64_t p = cur.number();
    if (!is_prime(p)) throw ParseError("base " + std::to_string(p) + " is not prime", at);
    unsigned e = 1;
    if (cur.eat('^')) {
      std::size_t eat = cur.pos;
      std::uint64_t v = cur.number();
      if (v == 0 || v > 1000) throw ParseError("exponent out of range", eat);
      e = static_cast<unsigned>(v);
    }
    merged[p] += e;
  } while (cur.eat('*'));
  if (!cur.at_end()) throw ParseError("unexpected character", cur.pos);
  return {merged.begin(), merged.end()};
}

std::string format_factorization(const Factorization& f) {
  std::string out;
  for (const auto& [p, e] : f) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace ringnc
