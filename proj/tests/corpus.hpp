#pragma once

// Shared test corpora and brute-force oracles.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ringnc/arith.hpp"
#include "ringnc/hom.hpp"
#include "ringnc/ring.hpp"

namespace ringnc::testing {

/// Catalog rings with at most `limit` elements: every field, every Z(n)
/// (n <= 64), every D(p), and a handful of products.
inline std::vector<RingSpec> ring_corpus(std::uint64_t limit = 512) {
  std::vector<RingSpec> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (auto pk = prime_power(q)) out.push_back(RingSpec::galois_field(pk->first, pk->second));
  }
  for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(64, limit); ++n) {
    if (!is_prime(n)) out.push_back(RingSpec::integers_mod(n));
  }
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (is_prime(p)) out.push_back(RingSpec::dual_numbers(p));
  }
  const std::vector<std::string> products = {
      "GF(2)xGF(2)", "GF(2)xGF(3)", "GF(4)xGF(3)", "GF(8)xGF(4)", "Z(4)xGF(3)",
      "D(2)xGF(2)",  "D(3)xZ(4)",   "GF(2)xGF(2)xGF(2)", "Z(6)xZ(10)", "GF(9)xD(2)xGF(5)",
      "GF(16)xGF(4)xGF(2)", "GF(32)xGF(8)"};
  for (const auto& text : products) {
    auto spec = parse_ring(text);
    if (size(spec) <= limit) out.push_back(spec);
  }
  return out;
}

/// Homomorphisms between corpus rings whose source has at most `limit` elements.
inline std::vector<RingHom> hom_corpus(std::uint64_t limit = 512) {
  std::vector<RingHom> out;
  for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(64, limit); ++n) {
    for (std::uint64_t m = 2; m <= n; ++m) {
      if (n % m == 0) {
        out.push_back(RingHom::mod_reduction(RingSpec::integers_mod(n), RingSpec::integers_mod(m)));
        if (is_prime(m)) {
          out.push_back(RingHom::mod_reduction(RingSpec::integers_mod(n), RingSpec::prime_field(m)));
        }
      }
    }
  }
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (!is_prime(p)) continue;
    out.push_back(RingHom::dual_augmentation(p));
    out.push_back(RingHom::subring_inclusion(RingSpec::prime_field(p), RingSpec::dual_numbers(p)));
  }
  for (std::uint64_t qs = 2; qs <= limit; ++qs) {
    auto s = prime_power(qs);
    if (!s) continue;
    for (unsigned k = s->second;; k += s->second) {
      auto qt = checked_pow(s->first, k);
      if (!qt || *qt > limit) break;
      out.push_back(RingHom::subring_inclusion(RingSpec::galois_field(s->first, s->second),
                                               RingSpec::galois_field(s->first, k)));
    }
  }
  for (const auto& r : ring_corpus(limit)) {
    if (!r.is<Product>()) continue;
    for (std::size_t j = 0; j < r.as<Product>().factors.size(); ++j) {
      out.push_back(RingHom::projection(r, j));
    }
  }
  for (const auto& text : {"Z(4)xGF(3)", "GF(2)xGF(3)", "Z(8)xZ(9)", "Z(4)xGF(3)xGF(5)",
                           "Z(16)xZ(27)", "GF(7)xZ(8)"}) {
    auto spec = parse_ring(text);
    if (size(spec) <= limit) out.push_back(RingHom::crt_isomorphism(spec));
  }
  for (const auto& r : ring_corpus(std::min<std::uint64_t>(limit, 64))) {
    out.push_back(RingHom::identity(r));
  }
  return out;
}

/// Exhaustive commutative-ring axioms on local copies of the operation tables.
inline std::optional<std::string> ring_axiom_violation(const Ring& r) {
  const std::uint64_t n = r.size();
  std::vector<std::uint32_t> A(n * n), M(n * n), N(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    N[a] = static_cast<std::uint32_t>(r.neg(a));
    for (std::uint64_t b = 0; b < n; ++b) {
      A[a * n + b] = static_cast<std::uint32_t>(r.add(a, b));
      M[a * n + b] = static_cast<std::uint32_t>(r.mul(a, b));
    }
  }
  const std::string name = to_string(r.spec());
  const std::uint64_t one = r.one();
  for (std::uint64_t a = 0; a < n; ++a) {
    if (A[a * n] != a) return name + ": a + 0 != a";
    if (A[a * n + N[a]] != 0) return name + ": a + (-a) != 0";
    if (M[one * n + a] != a) return name + ": 1 a != a";
    if (M[a] != 0) return name + ": 0 a != 0";
    for (std::uint64_t b = 0; b < n; ++b) {
      if (A[a * n + b] != A[b * n + a]) return name + ": addition not commutative";
      if (M[a * n + b] != M[b * n + a]) return name + ": multiplication not commutative";
      const std::uint32_t ab_sum = A[a * n + b];
      const std::uint32_t ab_prod = M[a * n + b];
      const std::uint32_t* arow_a = &A[a * n];
      const std::uint32_t* mrow_a = &M[a * n];
      const std::uint32_t* arow_b = &A[b * n];
      const std::uint32_t* mrow_b = &M[b * n];
      const std::uint32_t* arow_ab = &A[ab_sum * n];
      const std::uint32_t* mrow_ab = &M[ab_prod * n];
      for (std::uint64_t c = 0; c < n; ++c) {
        if (arow_ab[c] != arow_a[arow_b[c]]) return name + ": addition not associative";
        if (mrow_ab[c] != mrow_a[mrow_b[c]]) return name + ": multiplication not associative";
        if (mrow_a[arow_b[c]] != A[ab_prod * n + mrow_a[c]]) return name + ": not distributive";
      }
    }
  }
  return std::nullopt;
}

}  // namespace ringnc::testing
