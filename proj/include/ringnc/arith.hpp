#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ringnc {

/// Prime factorization as (prime, exponent) pairs with strictly increasing primes.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n);

/// Trial-division factorization; n >= 1 (1 factors as the empty list).
Factorization factorize(std::uint64_t n);

/// Returns p^k, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned k);

/// Returns a*b, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// If n = p^k for a prime p and k >= 1, returns (p, k).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

/// Parses `2^7*3^5*5^2` or a plain integer; primes may repeat and are merged.
/// Plain integers are factored and must not exceed 2^20.
Factorization parse_factored_size(std::string_view text);

/// Renders as `2^7*3^5*5^2` (exponent 1 written bare).
std::string format_factorization(const Factorization& f);

}  // namespace ringnc
