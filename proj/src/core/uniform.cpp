#include "dpdf/uniform.hpp"

#include <string>

#include "dpdf/error.hpp"

namespace dpdf {

std::int64_t UniformParams::value(std::uint32_t i, std::uint32_t j) const noexcept {
  if (i == 0 && j == 0) return diagonal_zero;
  if (i == 0 || j == 0 || i == j) return axis;
  return generic;
}

std::optional<UniformParams> uniformity(const PrimePowerSpec& q_prime, std::uint32_t e) {
  if (e < 3 || (q_prime.q - 1) % e != 0) {
    fail(ErrorCode::BadDivisor, "e = " + std::to_string(e) + " must be at least 3 and divide q'-1");
  }
  // The order of p modulo e divides n, so the search is bounded by n.
  std::uint32_t s = 0;
  std::uint64_t power = 1;
  for (std::uint32_t k = 1; k <= q_prime.n; ++k) {
    power = power * q_prime.p % e;
    if (power == e - 1) {
      s = k;
      break;
    }
  }
  if (s == 0 || q_prime.n % (2 * s) != 0) return std::nullopt;

  UniformParams out;
  out.q_prime = q_prime.q;
  out.q = ipow(q_prime.p, s);
  out.beta = q_prime.n / (2 * s);
  out.e = e;
  const std::int64_t numer = ipow_signed(-static_cast<std::int64_t>(out.q), out.beta) - 1;
  if (numer % static_cast<std::int64_t>(e) != 0) {
    fail(ErrorCode::Internal, "eta is not integral");
  }
  const std::int64_t eta = numer / static_cast<std::int64_t>(e);
  out.eta = eta;
  out.diagonal_zero = eta * eta - (static_cast<std::int64_t>(e) - 3) * eta - 1;
  out.axis = eta * eta + eta;
  out.generic = eta * eta;
  return out;
}

bool uniform_table_matches(const UniformParams& params, const CyclotomicContext& cc) {
  if (cc.e() != params.e || cc.q() != params.q_prime) return false;
  const auto matrix = cc.cyclotomic_matrix();
  for (std::uint32_t i = 0; i < cc.e(); ++i)
    for (std::uint32_t j = 0; j < cc.e(); ++j)
      if (static_cast<std::int64_t>(matrix[std::size_t{i} * cc.e() + j]) != params.value(i, j))
        return false;
  return true;
}

}  // namespace dpdf
