#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dpdf {

/// Largest field order accepted unless a caller passes its own bound.
inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

struct PrimePowerSpec {
  std::uint32_t p = 0;  // characteristic
  std::uint32_t n = 0;  // extension degree
  std::uint64_t q = 0;  // p^n

  friend bool operator==(const PrimePowerSpec&, const PrimePowerSpec&) = default;
};

bool is_prime(std::uint64_t value);

/// Validates (p, n) and returns the spec. Throws NotPrime, DegreeZero or BoundExceeded.
PrimePowerSpec make_prime_power(std::uint64_t p, std::uint32_t n,
                                std::uint64_t bound = kDefaultFieldBound);

/// Factors q as p^n, or nullopt when q is not a prime power.
std::optional<PrimePowerSpec> as_prime_power(std::uint64_t q);

std::vector<std::uint64_t> prime_factors(std::uint64_t value);  // distinct, ascending
std::vector<std::uint64_t> divisors(std::uint64_t value);       // ascending

/// All prime powers in [2, limit], ascending.
std::vector<PrimePowerSpec> prime_powers_up_to(std::uint64_t limit);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exponent);
std::int64_t ipow_signed(std::int64_t base, std::uint32_t exponent);

/// Modular exponentiation with 128-bit intermediates.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

}  // namespace dpdf
