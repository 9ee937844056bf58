#include <algorithm>

#include "ringnc/arith.hpp"
#include "ringnc/error.hpp"
#include "ringnc/ring.hpp"

namespace ringnc {

namespace {

// Dense polynomials over GF(p) with p < 2^32, constant term first.

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  // m monic
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime, a != 0
  std::uint64_t r = 1, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t li = inv_mod(b.back(), p);
    Poly monic_b = b;
    for (auto& c : monic_b) c = c * li % p;
    Poly r = poly_mod(std::move(a), monic_b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^j) mod f, computed by repeated p-th powering.
Poly frobenius_power(unsigned j, const Poly& f, std::uint64_t p) {
  Poly h = poly_mod(Poly{0, 1}, f, p);
  for (unsigned i = 0; i < j; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

Poly minus_x(Poly h, std::uint64_t p) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] + p - 1) % p;
  trim(h);
  return h;
}

}  // namespace

bool is_irreducible(std::uint64_t p, const Poly& f) {
  if (f.size() < 2 || f.back() != 1) throw DomainError("is_irreducible: polynomial must be monic");
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  // x^(p^k) == x (mod f)
  if (!minus_x(frobenius_power(k, f, p), p).empty()) return false;
  for (const auto& [r, e] : factorize(k)) {
    Poly g = poly_gcd(f, minus_x(frobenius_power(k / static_cast<unsigned>(r), f, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly find_irreducible(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw DomainError("find_irreducible: p must be prime");
  if (k == 0) throw DomainError("find_irreducible: degree must be positive");
  auto q = checked_pow(p, k);
  if (!q || *q > kEnumerationLimit) {
    throw LimitError("find_irreducible: p^k exceeds the 2^20 guard");
  }
  // Walk monic candidates with the constant term as the most significant digit.
  Poly f(k + 1, 0);
  f[k] = 1;
  for (std::uint64_t idx = 0; idx < *q; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = k; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    if (k > 1 && f[0] == 0) continue;  // divisible by x
    if (is_irreducible(p, f)) return f;
  }
  throw Error("find_irreducible: no irreducible polynomial found");  // unreachable
}

}  // namespace ringnc
