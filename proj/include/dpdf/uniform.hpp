#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dpdf/cyclotomy.hpp"
#include "dpdf/prime_power.hpp"

namespace dpdf {

/// Uniform cyclotomy of order e over GF(q'), q' = q^(2 beta) with e | q + 1.
struct UniformParams {
  std::uint64_t q_prime = 0;
  std::uint64_t q = 0;  // smallest power of p with q = -1 mod e
  std::uint32_t beta = 0;
  std::uint32_t e = 0;
  std::int64_t eta = 0;  // ((-q)^beta - 1) / e
  std::int64_t diagonal_zero = 0;  // (0,0)
  std::int64_t axis = 0;           // (i,0) = (0,i) = (i,i), i != 0
  std::int64_t generic = 0;        // every other (i,j)

  std::int64_t value(std::uint32_t i, std::uint32_t j) const noexcept;
};

/// nullopt when -1 is not a power of p modulo e. Throws BadDivisor unless
/// e >= 3 divides q' - 1.
std::optional<UniformParams> uniformity(const PrimePowerSpec& q_prime, std::uint32_t e);

/// Entry-by-entry comparison of the uniform table against direct counts.
bool uniform_table_matches(const UniformParams& params, const CyclotomicContext& cc);

}  // namespace dpdf
