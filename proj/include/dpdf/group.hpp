#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace dpdf {

/// Canonical integer encoding of a group or field element.
struct Element {
  std::uint32_t code = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t c) : code(c) {}

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Z_{n_1} x ... x Z_{n_k} with mixed-radix packing; component 0 is the least
/// significant digit. The additive group of GF(p^n) is the case n_i = p.
class AbelianGroup {
 public:
  /// Throws EmptyOrders, BadOrder (an order below 2), or BoundExceeded.
  explicit AbelianGroup(std::vector<std::uint32_t> orders);

  std::uint32_t size() const noexcept { return size_; }
  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
  bool contains(Element x) const noexcept { return x.code < size_; }

  Element add(Element x, Element y) const noexcept;
  Element sub(Element x, Element y) const noexcept;
  Element neg(Element x) const noexcept;

  Element encode(std::span<const std::uint32_t> components) const;
  std::vector<std::uint32_t> decode(Element x) const;

 private:
  enum class Layout { Cyclic, Binary, Mixed };

  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t size_ = 1;
  Layout layout_ = Layout::Mixed;
};

std::shared_ptr<const AbelianGroup> make_group(std::vector<std::uint32_t> orders);

}  // namespace dpdf
