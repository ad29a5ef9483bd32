#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dpdf/group.hpp"
#include "dpdf/prime_power.hpp"

namespace dpdf {

/// GF(p^n) with a canonical modulus and primitive element.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree n (coefficients compared from the constant term upwards), and the
/// primitive element is the smallest encoding of multiplicative order q-1.
/// An element is encoded as sum c_i p^i over its coefficient vector.
///
/// Contexts are immutable once built and are shared by pointer.
class FieldContext {
  struct Token {};

 public:
  /// Throws NotPrime, DegreeZero or BoundExceeded.
  static std::shared_ptr<const FieldContext> make(std::uint64_t p, std::uint32_t n,
                                                  std::uint64_t bound = kDefaultFieldBound);
  /// Convenience for a prime-power order; throws NotPrime when q is not one.
  static std::shared_ptr<const FieldContext> of_order(std::uint64_t q,
                                                      std::uint64_t bound = kDefaultFieldBound);

  /// Same field and modulus, tables rebuilt around another primitive element.
  std::shared_ptr<const FieldContext> with_primitive(Element alpha) const;

  FieldContext(Token, PrimePowerSpec spec, std::vector<std::uint32_t> modulus, Element alpha,
               std::vector<std::uint32_t> exp_table);

  const PrimePowerSpec& spec() const noexcept { return spec_; }
  std::uint32_t q() const noexcept { return static_cast<std::uint32_t>(spec_.q); }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t degree() const noexcept { return spec_.n; }

  /// Monic modulus, constant term first, length n + 1.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  Element primitive() const noexcept { return alpha_; }
  static constexpr Element zero() noexcept { return Element{0}; }
  static constexpr Element one() noexcept { return Element{1}; }

  const AbelianGroup& additive() const noexcept { return *additive_; }
  const std::shared_ptr<const AbelianGroup>& additive_ptr() const noexcept { return additive_; }

  std::span<const std::uint32_t> exp_table() const noexcept { return exp_; }
  /// Indexed by encoding; entry 0 holds kNoLog.
  std::span<const std::uint32_t> log_table() const noexcept { return log_; }
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Element add(Element x, Element y) const noexcept { return additive_->add(x, y); }
  Element sub(Element x, Element y) const noexcept { return additive_->sub(x, y); }
  Element neg(Element x) const noexcept { return additive_->neg(x); }
  Element mul(Element x, Element y) const noexcept;
  Element inv(Element x) const;                       // DivisionByZero
  Element div(Element x, Element y) const;            // DivisionByZero
  Element pow(Element x, std::int64_t exponent) const;  // DivisionByZero for 0^negative

  /// alpha^k, any k >= 0.
  Element exp(std::uint64_t k) const noexcept { return Element{exp_[k % (q() - 1)]}; }
  /// Exponent in [0, q-2]; LogOfZero for x = 0.
  std::uint32_t dlog(Element x) const;

  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t value) const noexcept;

  bool contains(Element x) const noexcept { return x.code < q(); }

 private:
  PrimePowerSpec spec_;
  std::vector<std::uint32_t> modulus_;
  Element alpha_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::shared_ptr<const AbelianGroup> additive_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

enum class FieldOp { Add, Sub, Neg, Mul, Inv, Pow };

/// Dispatching form of the field operations. For Pow the second operand is the
/// exponent; for Neg and Inv it is ignored.
Element field_arith(const FieldContext& field, FieldOp op, Element x, std::int64_t y);

/// Irreducibility over GF(p) of a monic polynomial given constant term first.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace dpdf
