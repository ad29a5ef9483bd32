#include "dpdf/group.hpp"

#include <algorithm>
#include <string>

#include "dpdf/error.hpp"
#include "dpdf/prime_power.hpp"

namespace dpdf {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) fail(ErrorCode::EmptyOrders, "group needs at least one component");
  std::uint64_t size = 1;
  for (auto n : orders_) {
    if (n < 2) fail(ErrorCode::BadOrder, "component order " + std::to_string(n) + " is below 2");
    strides_.push_back(static_cast<std::uint32_t>(size));
    size *= n;
    if (size > kDefaultFieldBound) {
      fail(ErrorCode::BoundExceeded, "group order exceeds " + std::to_string(kDefaultFieldBound));
    }
  }
  size_ = static_cast<std::uint32_t>(size);
  if (orders_.size() == 1) {
    layout_ = Layout::Cyclic;
  } else if (std::all_of(orders_.begin(), orders_.end(), [](auto n) { return n == 2; })) {
    layout_ = Layout::Binary;
  }
}

Element AbelianGroup::add(Element x, Element y) const noexcept {
  switch (layout_) {
    case Layout::Cyclic: {
      const std::uint32_t s = x.code + y.code;
      return Element{s >= size_ ? s - size_ : s};
    }
    case Layout::Binary:
      return Element{x.code ^ y.code};
    case Layout::Mixed:
      break;
  }
  std::uint32_t a = x.code, b = y.code, out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t n = orders_[i];
    std::uint32_t d = a % n + b % n;
    if (d >= n) d -= n;
    out += d * strides_[i];
    a /= n;
    b /= n;
  }
  return Element{out};
}

Element AbelianGroup::neg(Element x) const noexcept {
  switch (layout_) {
    case Layout::Cyclic:
      return Element{x.code == 0 ? 0 : size_ - x.code};
    case Layout::Binary:
      return x;
    case Layout::Mixed:
      break;
  }
  std::uint32_t a = x.code, out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t n = orders_[i];
    const std::uint32_t d = a % n;
    out += (d == 0 ? 0 : n - d) * strides_[i];
    a /= n;
  }
  return Element{out};
}

Element AbelianGroup::sub(Element x, Element y) const noexcept {
  switch (layout_) {
    case Layout::Cyclic:
      return Element{x.code >= y.code ? x.code - y.code : x.code + size_ - y.code};
    case Layout::Binary:
      return Element{x.code ^ y.code};
    case Layout::Mixed:
      break;
  }
  std::uint32_t a = x.code, b = y.code, out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t n = orders_[i];
    const std::uint32_t da = a % n, db = b % n;
    out += (da >= db ? da - db : da + n - db) * strides_[i];
    a /= n;
    b /= n;
  }
  return Element{out};
}

Element AbelianGroup::encode(std::span<const std::uint32_t> components) const {
  if (components.size() != orders_.size()) {
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(orders_.size()) +
                                         " components, got " + std::to_string(components.size()));
  }
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (components[i] >= orders_[i]) {
      fail(ErrorCode::InvalidArgument, "component " + std::to_string(i) + " out of range");
    }
    out += components[i] * strides_[i];
  }
  return Element{out};
}

std::vector<std::uint32_t> AbelianGroup::decode(Element x) const {
  if (!contains(x)) fail(ErrorCode::InvalidArgument, "element code out of range");
  std::vector<std::uint32_t> out(orders_.size());
  std::uint32_t a = x.code;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out[i] = a % orders_[i];
    a /= orders_[i];
  }
  return out;
}

std::shared_ptr<const AbelianGroup> make_group(std::vector<std::uint32_t> orders) {
  return std::make_shared<const AbelianGroup>(std::move(orders));
}

}  // namespace dpdf
