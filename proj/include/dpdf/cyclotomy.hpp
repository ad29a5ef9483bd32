#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dpdf/field.hpp"

namespace dpdf {

/// A field together with a divisor e of q-1. Classes are C_i = alpha^i <alpha^e>.
class CyclotomicContext {
 public:
  /// Throws BadDivisor unless e >= 2 and e | q-1. f = 1 (singleton classes) is allowed.
  CyclotomicContext(FieldPtr field, std::uint32_t e);

  const FieldContext& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t f() const noexcept { return f_; }
  std::uint32_t q() const noexcept { return field_->q(); }

  /// (q-1)/epsilon for a divisor epsilon of e; BadEpsilon otherwise.
  std::uint32_t rho(std::uint32_t epsilon) const;
  bool divides_e(std::uint32_t epsilon) const noexcept {
    return epsilon >= 1 && e_ % epsilon == 0;
  }

  /// dlog(x) mod e; LogOfZero for x = 0.
  std::uint32_t class_index(Element x) const { return field_->dlog(x) % e_; }
  /// dlog(x) mod epsilon, for any epsilon dividing q-1.
  std::uint32_t coarse_index(Element x, std::uint32_t epsilon) const {
    return field_->dlog(x) % epsilon;
  }

  /// {alpha^(i + k e) : 0 <= k < f}, listed by increasing k. IndexOutOfRange unless i < e.
  std::vector<Element> cyclotomic_class(std::uint32_t i) const;
  /// alpha^i C_0^epsilon for epsilon | q-1, listed by increasing exponent.
  std::vector<Element> coarse_class(std::uint32_t epsilon, std::uint32_t i) const;

  /// #{z in C_i : z + 1 in C_j}. IndexOutOfRange unless i, j < e.
  std::uint64_t cyclotomic_number(std::uint32_t i, std::uint32_t j) const;
  /// All (i,j) in one pass over the field; row-major, entry [i * e + j].
  std::vector<std::uint64_t> cyclotomic_matrix() const;

 private:
  FieldPtr field_;
  std::uint32_t e_;
  std::uint32_t f_;
};

enum class TransversalKind { Internal, External, Diagonal };

struct TransversalInfo {
  TransversalKind kind = TransversalKind::Internal;
  std::uint32_t r = 0;
  std::uint32_t j = 0;        // external only
  std::uint32_t epsilon = 0;  // diagonal only; e for the other kinds
  Element multiplier;         // alpha^(re) - 1, or alpha^(re + j) - 1
  std::uint32_t class_index = 0;
  std::vector<Element> elements;  // multiplier times C_0^e (or C_0^epsilon)
};

/// T_r = (alpha^(re) - 1) C_0^e for 1 <= r <= f-1. IndexOutOfRange otherwise.
TransversalInfo transversal(const CyclotomicContext& cc, std::uint32_t r);
/// T_(r,j) = (alpha^(re + j) - 1) C_0^e for 1 <= j <= e-1, 1 <= r <= f.
TransversalInfo external_transversal(const CyclotomicContext& cc, std::uint32_t r,
                                     std::uint32_t j);
/// D_r = (alpha^(re) - 1) C_0^epsilon for epsilon | e, 1 <= r <= f-1. BadEpsilon, IndexOutOfRange.
TransversalInfo diagonal(const CyclotomicContext& cc, std::uint32_t epsilon, std::uint32_t r);

struct PhiProfile {
  std::uint32_t epsilon = 0;
  std::vector<std::uint64_t> phi;
  std::vector<std::uint64_t> psi;
  std::optional<std::uint32_t> central_class;  // epsilon-class of -2, f even only
  /// Phi_i = {alpha^(re) : 1 <= r <= f-1, alpha^(re) - 1 in C_i^epsilon}.
  std::vector<std::vector<Element>> members;
};

/// Counts phi directly and cross-checks against the cyclotomic-number sums.
/// Throws BadEpsilon unless epsilon >= 2 divides e.
PhiProfile phi_profile(const CyclotomicContext& cc, std::uint32_t epsilon);

}  // namespace dpdf
