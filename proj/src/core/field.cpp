#include "dpdf/field.hpp"

#include <numeric>
#include <string>

#include "dpdf/error.hpp"

namespace dpdf {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

// Remainder of a by a nonzero b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), mod, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), mod, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly decode_poly(std::uint32_t code, std::uint32_t p, std::uint32_t n) {
  Poly out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = code % p;
    code /= p;
  }
  trim(out);
  return out;
}

std::uint32_t encode_poly(const Poly& a, std::uint32_t p) {
  std::uint32_t out = 0;
  for (std::size_t i = a.size(); i-- > 0;) out = out * p + a[i];
  return out;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t n) {
  if (n == 1) return Poly{0, 1};
  const std::uint64_t count = ipow(p, n);
  for (std::uint64_t t = 0; t < count; ++t) {
    // t enumerates (c_0, ..., c_{n-1}) with c_0 as the most significant digit,
    // so increasing t is lexicographic order from the constant term up.
    Poly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t rest = t;
    for (std::uint32_t i = n; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorCode::Internal, "no irreducible polynomial found");
}

std::vector<std::uint32_t> build_exp_table(const PrimePowerSpec& spec, const Poly& mod,
                                           std::uint32_t alpha) {
  const std::uint32_t q = static_cast<std::uint32_t>(spec.q);
  std::vector<std::uint32_t> exp(q - 1);
  if (spec.n == 1) {
    std::uint64_t cur = 1;
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      exp[k] = static_cast<std::uint32_t>(cur);
      cur = cur * alpha % q;
    }
    return exp;
  }
  const Poly a = decode_poly(alpha, spec.p, spec.n);
  Poly cur{1};
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    exp[k] = encode_poly(cur, spec.p);
    cur = poly_mulmod(cur, a, mod, spec.p);
  }
  return exp;
}

std::uint32_t smallest_primitive(const PrimePowerSpec& spec, const Poly& mod) {
  const std::uint64_t order = spec.q - 1;
  const auto primes = prime_factors(order);
  for (std::uint32_t code = 1; code < spec.q; ++code) {
    const Poly a = decode_poly(code, spec.p, spec.n);
    bool primitive = true;
    for (auto l : primes) {
      const Poly r = poly_powmod(a, order / l, mod, spec.p);
      if (r.size() == 1 && r[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return code;
  }
  fail(ErrorCode::Internal, "no primitive element found");
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Rabin-style: no factor of degree d <= n/2, via gcd(x^{p^d} - x, f).
  Poly h{0, 1};
  for (std::size_t d = 1; d <= n / 2; ++d) {
    h = poly_powmod(h, p, f, p);
    Poly g = h;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (g.empty()) return false;
    const Poly c = poly_gcd(f, g, p);
    if (c.size() > 1) return false;
  }
  return true;
}

FieldContext::FieldContext(Token, PrimePowerSpec spec, std::vector<std::uint32_t> modulus,
                           Element alpha, std::vector<std::uint32_t> exp_table)
    : spec_(spec),
      modulus_(std::move(modulus)),
      alpha_(alpha),
      exp_(std::move(exp_table)),
      log_(spec.q, kNoLog),
      additive_(make_group(std::vector<std::uint32_t>(spec.n, spec.p))) {
  for (std::uint32_t k = 0; k < exp_.size(); ++k) log_[exp_[k]] = k;
}

std::shared_ptr<const FieldContext> FieldContext::make(std::uint64_t p, std::uint32_t n,
                                                       std::uint64_t bound) {
  const PrimePowerSpec spec = make_prime_power(p, n, bound);
  Poly mod = smallest_irreducible(spec.p, spec.n);
  const std::uint32_t alpha = smallest_primitive(spec, mod);
  auto exp = build_exp_table(spec, mod, alpha);
  return std::make_shared<const FieldContext>(Token{}, spec, std::move(mod), Element{alpha},
                                              std::move(exp));
}

std::shared_ptr<const FieldContext> FieldContext::of_order(std::uint64_t q, std::uint64_t bound) {
  const auto spec = as_prime_power(q);
  if (!spec) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return make(spec->p, spec->n, bound);
}

std::shared_ptr<const FieldContext> FieldContext::with_primitive(Element alpha) const {
  if (!contains(alpha) || alpha.code == 0 || std::gcd(dlog(alpha), q() - 1) != 1) {
    fail(ErrorCode::InvalidArgument, "element " + std::to_string(alpha.code) + " is not primitive");
  }
  std::vector<std::uint32_t> exp(q() - 1);
  Element cur = one();
  for (auto& slot : exp) {
    slot = cur.code;
    cur = mul(cur, alpha);
  }
  return std::make_shared<const FieldContext>(Token{}, spec_, modulus_, alpha, std::move(exp));
}

Element FieldContext::mul(Element x, Element y) const noexcept {
  if (x.code == 0 || y.code == 0) return zero();
  std::uint32_t s = log_[x.code] + log_[y.code];
  const std::uint32_t order = q() - 1;
  if (s >= order) s -= order;
  return Element{exp_[s]};
}

Element FieldContext::inv(Element x) const {
  if (x.code == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[x.code];
  return Element{exp_[l == 0 ? 0 : q() - 1 - l]};
}

Element FieldContext::div(Element x, Element y) const { return mul(x, inv(y)); }

Element FieldContext::pow(Element x, std::int64_t exponent) const {
  if (x.code == 0) {
    if (exponent < 0) fail(ErrorCode::DivisionByZero, "zero to a negative power");
    return exponent == 0 ? one() : zero();
  }
  const std::int64_t order = q() - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[x.code]) * (exponent % order)) % order;
  if (k < 0) k += order;
  return Element{exp_[static_cast<std::size_t>(k)]};
}

std::uint32_t FieldContext::dlog(Element x) const {
  if (x.code == 0) fail(ErrorCode::LogOfZero, "discrete log of zero");
  if (!contains(x)) fail(ErrorCode::InvalidArgument, "element code out of range");
  return log_[x.code];
}

Element FieldContext::from_int(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p());
  if (r < 0) r += p();
  return Element{static_cast<std::uint32_t>(r)};
}

Element field_arith(const FieldContext& field, FieldOp op, Element x, std::int64_t y) {
  if (!field.contains(x)) fail(ErrorCode::InvalidArgument, "element code out of range");
  const auto other = [&] {
    if (y < 0 || y >= static_cast<std::int64_t>(field.q())) {
      fail(ErrorCode::InvalidArgument, "element code out of range");
    }
    return Element{static_cast<std::uint32_t>(y)};
  };
  switch (op) {
    case FieldOp::Add: return field.add(x, other());
    case FieldOp::Sub: return field.sub(x, other());
    case FieldOp::Neg: return field.neg(x);
    case FieldOp::Mul: return field.mul(x, other());
    case FieldOp::Inv: return field.inv(x);
    case FieldOp::Pow: return field.pow(x, y);
  }
  fail(ErrorCode::InvalidArgument, "unknown field operation");
}

}  // namespace dpdf
