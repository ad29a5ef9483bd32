#include "dpdf/cyclotomy.hpp"

#include <string>

#include "dpdf/error.hpp"

namespace dpdf {
namespace {

std::vector<Element> scaled(const FieldContext& field, Element multiplier,
                            const std::vector<Element>& set) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (auto x : set) out.push_back(field.mul(multiplier, x));
  return out;
}

void require_range(std::uint32_t value, std::uint32_t lo, std::uint32_t hi, const char* what) {
  if (value < lo || value > hi) {
    fail(ErrorCode::IndexOutOfRange, std::string(what) + " = " + std::to_string(value) +
                                         " outside [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "]");
  }
}

}  // namespace

CyclotomicContext::CyclotomicContext(FieldPtr field, std::uint32_t e)
    : field_(std::move(field)), e_(e), f_(0) {
  if (!field_) fail(ErrorCode::InvalidArgument, "null field");
  const std::uint32_t order = field_->q() - 1;
  if (e < 2 || order % e != 0) {
    fail(ErrorCode::BadDivisor, "e = " + std::to_string(e) + " is not an admissible divisor of " +
                                    std::to_string(order));
  }
  f_ = order / e;
}

std::uint32_t CyclotomicContext::rho(std::uint32_t epsilon) const {
  if (!divides_e(epsilon)) fail(ErrorCode::BadEpsilon, "epsilon does not divide e");
  return (q() - 1) / epsilon;
}

std::vector<Element> CyclotomicContext::cyclotomic_class(std::uint32_t i) const {
  require_range(i, 0, e_ - 1, "class index");
  std::vector<Element> out;
  out.reserve(f_);
  for (std::uint32_t k = 0; k < f_; ++k) out.push_back(field_->exp(i + std::uint64_t{k} * e_));
  return out;
}

std::vector<Element> CyclotomicContext::coarse_class(std::uint32_t epsilon, std::uint32_t i) const {
  if (epsilon == 0 || (q() - 1) % epsilon != 0) {
    fail(ErrorCode::BadEpsilon, "epsilon does not divide q-1");
  }
  require_range(i, 0, epsilon - 1, "class index");
  const std::uint32_t size = (q() - 1) / epsilon;
  std::vector<Element> out;
  out.reserve(size);
  for (std::uint32_t k = 0; k < size; ++k) out.push_back(field_->exp(i + std::uint64_t{k} * epsilon));
  return out;
}

std::uint64_t CyclotomicContext::cyclotomic_number(std::uint32_t i, std::uint32_t j) const {
  require_range(i, 0, e_ - 1, "i");
  require_range(j, 0, e_ - 1, "j");
  std::uint64_t count = 0;
  for (auto z : cyclotomic_class(i)) {
    const Element z1 = field_->add(z, FieldContext::one());
    if (z1.code != 0 && class_index(z1) == j) ++count;
  }
  return count;
}

std::vector<std::uint64_t> CyclotomicContext::cyclotomic_matrix() const {
  std::vector<std::uint64_t> out(std::size_t{e_} * e_, 0);
  const auto exp = field_->exp_table();
  for (std::uint32_t k = 0; k < exp.size(); ++k) {
    const Element z1 = field_->add(Element{exp[k]}, FieldContext::one());
    if (z1.code != 0) ++out[std::size_t{k % e_} * e_ + class_index(z1)];
  }
  return out;
}

TransversalInfo transversal(const CyclotomicContext& cc, std::uint32_t r) {
  require_range(r, 1, cc.f() - 1, "r");
  const auto& field = cc.field();
  TransversalInfo info;
  info.kind = TransversalKind::Internal;
  info.r = r;
  info.epsilon = cc.e();
  info.multiplier = field.sub(field.exp(std::uint64_t{r} * cc.e()), FieldContext::one());
  info.class_index = cc.class_index(info.multiplier);
  info.elements = scaled(field, info.multiplier, cc.cyclotomic_class(0));
  return info;
}

TransversalInfo external_transversal(const CyclotomicContext& cc, std::uint32_t r,
                                     std::uint32_t j) {
  require_range(j, 1, cc.e() - 1, "j");
  require_range(r, 1, cc.f(), "r");
  const auto& field = cc.field();
  TransversalInfo info;
  info.kind = TransversalKind::External;
  info.r = r;
  info.j = j;
  info.epsilon = cc.e();
  info.multiplier = field.sub(field.exp(std::uint64_t{r} * cc.e() + j), FieldContext::one());
  info.class_index = cc.class_index(info.multiplier);
  info.elements = scaled(field, info.multiplier, cc.cyclotomic_class(0));
  return info;
}

TransversalInfo diagonal(const CyclotomicContext& cc, std::uint32_t epsilon, std::uint32_t r) {
  if (!cc.divides_e(epsilon)) fail(ErrorCode::BadEpsilon, "epsilon does not divide e");
  require_range(r, 1, cc.f() - 1, "r");
  const auto& field = cc.field();
  TransversalInfo info;
  info.kind = TransversalKind::Diagonal;
  info.r = r;
  info.epsilon = epsilon;
  info.multiplier = field.sub(field.exp(std::uint64_t{r} * cc.e()), FieldContext::one());
  info.class_index = cc.coarse_index(info.multiplier, epsilon);
  info.elements = scaled(field, info.multiplier, cc.coarse_class(epsilon, 0));
  return info;
}

PhiProfile phi_profile(const CyclotomicContext& cc, std::uint32_t epsilon) {
  if (epsilon < 2 || !cc.divides_e(epsilon)) {
    fail(ErrorCode::BadEpsilon, "epsilon must be at least 2 and divide e");
  }
  const auto& field = cc.field();
  const std::uint32_t f = cc.f();
  PhiProfile out;
  out.epsilon = epsilon;
  out.phi.assign(epsilon, 0);
  out.psi.assign(epsilon, 0);
  out.members.assign(epsilon, {});
  const std::uint32_t half = (f + 1) / 2;  // ceil(f/2)
  for (std::uint32_t r = 1; r < f; ++r) {
    const Element z = field.exp(std::uint64_t{r} * cc.e());
    const std::uint32_t i = cc.coarse_index(field.sub(z, FieldContext::one()), epsilon);
    ++out.phi[i];
    out.members[i].push_back(z);
    if (r < half) ++out.psi[i];
  }
  if (f % 2 == 0) out.central_class = cc.coarse_index(field.neg(field.from_int(2)), epsilon);

  const auto matrix = cc.cyclotomic_matrix();
  for (std::uint32_t j = 0; j < epsilon; ++j) {
    std::uint64_t sum = 0;
    for (std::uint32_t i = 0; i < cc.e() / epsilon; ++i) sum += matrix[std::size_t{epsilon * i + j} * cc.e()];
    if (sum != out.phi[j]) {
      fail(ErrorCode::Internal, "phi direct count disagrees with cyclotomic numbers at j = " +
                                    std::to_string(j));
    }
  }
  return out;
}

}  // namespace dpdf
