#include "dpdf/prime_power.hpp"

#include <string>

#include "dpdf/error.hpp"

namespace dpdf {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimePowerSpec make_prime_power(std::uint64_t p, std::uint32_t n, std::uint64_t bound) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorCode::DegreeZero, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > bound) {
      fail(ErrorCode::BoundExceeded,
           std::to_string(p) + "^" + std::to_string(n) + " exceeds the field bound " +
               std::to_string(bound));
    }
  }
  return PrimePowerSpec{static_cast<std::uint32_t>(p), n, q};
}

std::optional<PrimePowerSpec> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  const std::uint64_t p = factors.front();
  std::uint32_t n = 0;
  for (std::uint64_t rest = q; rest > 1; rest /= p) ++n;
  return PrimePowerSpec{static_cast<std::uint32_t>(p), n, q};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      out.push_back(d);
      while (value % d == 0) value /= d;
    }
  }
  if (value > 1) out.push_back(value);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t value) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      low.push_back(d);
      if (d != value / d) high.push_back(value / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<PrimePowerSpec> prime_powers_up_to(std::uint64_t limit) {
  std::vector<PrimePowerSpec> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (auto spec = as_prime_power(q)) out.push_back(*spec);
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

std::int64_t ipow_signed(std::int64_t base, std::uint32_t exponent) {
  std::int64_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exponent >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace dpdf
