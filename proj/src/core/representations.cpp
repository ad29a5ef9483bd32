#include "dpdf/representations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dpdf/error.hpp"

namespace dpdf {
namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return std::nullopt;
  return r;
}

[[noreturn]] void no_rep(std::uint64_t q, const char* what) {
  fail(ErrorCode::NoRepresentation, std::string("no normalised ") + what + " for q = " +
                                        std::to_string(q));
}

struct Pair {
  std::int64_t first;
  std::int64_t second;  // nonnegative
};

// Solutions of total = first^2 + weight * second^2 with first = 1 mod m0 and p not dividing first.
Pair search(std::int64_t total, std::int64_t weight, std::int64_t m0, std::int64_t p,
            std::uint64_t q, const char* what) {
  const auto bound = static_cast<std::int64_t>(std::ceil(std::sqrt(4.0 * static_cast<double>(q))));
  std::optional<Pair> found;
  for (std::int64_t u = -bound; u <= bound; ++u) {
    if (mod(u, m0) != 1 || u % p == 0) continue;
    const std::int64_t rest = total - u * u;
    if (rest < 0 || rest % weight != 0) continue;
    const auto v = exact_sqrt(rest / weight);
    if (!v) continue;
    if (found && found->first != u) no_rep(q, what);
    found = Pair{u, *v};
  }
  if (!found) no_rep(q, what);
  return *found;
}

// first = +-p^(n/2) with first = 1 mod m0, second = 0.
Pair degenerate(const PrimePowerSpec& spec, std::int64_t m0, const char* what) {
  if (spec.n % 2 != 0) no_rep(spec.q, what);
  const auto root = static_cast<std::int64_t>(ipow(spec.p, spec.n / 2));
  for (std::int64_t u : {root, -root})
    if (mod(u, m0) == 1) return Pair{u, 0};
  no_rep(spec.q, what);
}

std::vector<std::int64_t> signs(std::int64_t magnitude) {
  if (magnitude == 0) return {0};
  return {magnitude, -magnitude};
}

std::optional<std::vector<std::int64_t>> divide_all(const std::vector<std::int64_t>& num,
                                                    std::int64_t den) {
  std::vector<std::int64_t> out;
  out.reserve(num.size());
  for (auto v : num) {
    if (v % den != 0) return std::nullopt;
    out.push_back(v / den);
  }
  return out;
}

}  // namespace

QuadForm form_for(std::uint32_t e) {
  switch (e) {
    case 3: return QuadForm::E3;
    case 4: return QuadForm::E4;
    case 6: return QuadForm::E6;
    case 8: return QuadForm::E8;
    default: fail(ErrorCode::UnsupportedE, "no closed form for e = " + std::to_string(e));
  }
}

QuadraticRepresentations quadratic_representations(const PrimePowerSpec& spec, QuadForm form) {
  QuadraticRepresentations out;
  out.form = form;
  out.q = spec.q;
  const auto q = static_cast<std::int64_t>(spec.q);
  const std::int64_t p = spec.p;
  switch (form) {
    case QuadForm::E3: {
      if (q % 3 != 1) no_rep(spec.q, "4q = c^2 + 27d^2");
      if (p % 3 == 2) {
        const auto r = degenerate(spec, 3, "4q = c^2 + 27d^2");
        out.c = 2 * r.first;
        if (mod(out.c, 3) != 1) out.c = -out.c;
      } else {
        const auto r = search(4 * q, 27, 3, p, spec.q, "4q = c^2 + 27d^2");
        out.c = r.first;
        out.d = r.second;
      }
      break;
    }
    case QuadForm::E4: {
      if (q % 4 != 1) no_rep(spec.q, "q = s^2 + t^2");
      if (p % 4 == 3) {
        out.s = ipow_signed(-p, spec.n / 2);
      } else {
        const auto r = search(q, 1, 4, p, spec.q, "q = s^2 + t^2");
        out.s = r.first;
        out.t = r.second;
      }
      break;
    }
    case QuadForm::E6: {
      if (q % 6 != 1) no_rep(spec.q, "q = s^2 + 3t^2");
      const auto r = p % 6 == 5 ? degenerate(spec, 3, "q = s^2 + 3t^2")
                                : search(q, 3, 3, p, spec.q, "q = s^2 + 3t^2");
      out.s = r.first;
      out.t = r.second;
      break;
    }
    case QuadForm::E8: {
      if (q % 8 != 1) no_rep(spec.q, "q = x^2 + 4y^2");
      const auto rx = p % 4 == 1 ? search(q, 4, 4, p, spec.q, "q = x^2 + 4y^2")
                                 : degenerate(spec, 4, "q = x^2 + 4y^2");
      const auto ra = (p % 8 == 1 || p % 8 == 3) ? search(q, 2, 4, p, spec.q, "q = a^2 + 2b^2")
                                                 : degenerate(spec, 4, "q = a^2 + 2b^2");
      out.x = rx.first;
      out.y = rx.second;
      out.a = ra.first;
      out.b = ra.second;
      break;
    }
  }
  return out;
}

ClosedFormCyclo closed_form_cyclo_numbers(const CyclotomicContext& cc) {
  const std::uint32_t e = cc.e();
  const QuadForm form = form_for(e);
  const auto& field = cc.field();
  const std::uint32_t f = cc.f();
  if (e == 6 && f % 2 == 1) fail(ErrorCode::UnsupportedE, "no closed form for e = 6 with f odd");

  const auto base = quadratic_representations(field.spec(), form);
  const auto q = static_cast<std::int64_t>(field.q());

  struct Candidate {
    QuadraticRepresentations reps;
    std::vector<std::int64_t> column;
  };
  std::vector<Candidate> all;
  const auto push = [&](QuadraticRepresentations r, const std::vector<std::int64_t>& num,
                        std::int64_t den) {
    if (auto col = divide_all(num, den)) all.push_back({r, std::move(*col)});
  };

  switch (form) {
    case QuadForm::E3:
      for (auto d : signs(base.d)) {
        auto r = base;
        r.d = d;
        const std::int64_t c = r.c;
        push(r, {2 * (q - 8 + c), 2 * q - 4 - c - 9 * d, 2 * q - 4 - c + 9 * d}, 18);
      }
      break;
    case QuadForm::E4:
      for (auto t : signs(base.t)) {
        auto r = base;
        r.t = t;
        const std::int64_t s = r.s;
        if (f % 2 == 0) {
          push(r, {q - 11 - 6 * s, q - 3 + 2 * s + 4 * t, q - 3 + 2 * s, q - 3 + 2 * s - 4 * t}, 16);
        } else {
          push(r, {q - 7 + 2 * s, q - 3 - 2 * s, q - 7 + 2 * s, q - 3 - 2 * s}, 16);
        }
      }
      break;
    case QuadForm::E6: {
      const std::uint32_t two = field.dlog(field.from_int(2)) % 6;
      for (auto t : signs(base.t)) {
        auto r = base;
        r.t = t;
        const std::int64_t s = r.s;
        const std::int64_t u = q - 5 + 4 * s;
        if (two % 3 == 0) {
          push(r, {q - 17 - 20 * s, u + 18 * t, u + 6 * t, u, u - 6 * t, u - 18 * t}, 36);
        } else if (two % 3 == 1) {
          push(r, {q - 17 - 8 * s + 6 * t, u + 12 * t, u - 6 * t, u - 6 * t, q - 5 - 8 * s, u - 6 * t},
               36);
        } else {
          push(r, {q - 17 - 8 * s - 6 * t, u + 6 * t, q - 5 - 8 * s, u + 6 * t, u + 6 * t, u - 12 * t},
               36);
        }
      }
      break;
    }
    case QuadForm::E8: {
      const bool quartic = field.dlog(field.from_int(2)) % 4 == 0;
      for (auto y : signs(base.y)) {
        for (auto b : signs(base.b)) {
          auto r = base;
          r.y = y;
          r.b = b;
          const std::int64_t x = r.x;
          const std::int64_t a = r.a;
          const std::int64_t g = q - 7 + 2 * x + 4 * a;
          std::vector<std::int64_t> v;
          if (quartic && f % 2 == 0) {
            v = {q - 23 - 18 * x - 24 * a, g + 16 * y + 16 * b, q - 7 + 6 * x + 16 * y,
                 g - 16 * y + 16 * b,      q - 7 - 2 * x + 8 * a, g + 16 * y - 16 * b,
                 q - 7 + 6 * x - 16 * y,   g - 16 * y - 16 * b};
          } else if (quartic) {
            const std::int64_t A = q - 15 - 2 * x, N = q - 7 - 2 * x - 8 * a;
            v = {A, g, N, g, A, g, N, g};
          } else if (f % 2 == 0) {
            v = {q - 23 + 6 * x, g, q - 7 - 2 * x - 8 * a - 16 * y, g,
                 q - 7 - 10 * x, g, q - 7 - 2 * x - 8 * a + 16 * y, g};
          } else {
            const std::int64_t A = q - 15 - 10 * x - 8 * a, I = g + 16 * y, N = q - 7 + 6 * x,
                               J = g - 16 * y;
            v = {A, I, N, J, A, I, N, J};
          }
          push(r, v, 64);
        }
      }
      break;
    }
  }
  if (all.empty()) {
    fail(ErrorCode::VerificationMismatch,
         "closed form is not integral for q = " + std::to_string(q) + ", e = " + std::to_string(e));
  }

  // Drop duplicate columns that arise from zero-valued sign variables.
  std::vector<Candidate> unique;
  for (auto& c : all) {
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](const Candidate& u) { return u.column == c.column; });
    if (!seen) unique.push_back(std::move(c));
  }

  std::vector<std::size_t> alive;
  const auto direct10 = static_cast<std::int64_t>(cc.cyclotomic_number(1, 0));
  for (std::size_t i = 0; i < unique.size(); ++i)
    if (unique[i].column[1] == direct10) alive.push_back(i);
  if (alive.empty()) alive.push_back(0);
  while (alive.size() > 1) {
    std::uint32_t idx = 0;
    const auto& first = unique[alive[0]].column;
    for (; idx < e; ++idx) {
      const bool differs = std::any_of(alive.begin(), alive.end(), [&](std::size_t a) {
        return unique[a].column[idx] != first[idx];
      });
      if (differs) break;
    }
    const auto direct = static_cast<std::int64_t>(cc.cyclotomic_number(idx, 0));
    std::vector<std::size_t> next;
    for (auto a : alive)
      if (unique[a].column[idx] == direct) next.push_back(a);
    if (next.empty()) next.push_back(alive[0]);
    alive = std::move(next);
  }

  ClosedFormCyclo out;
  out.e = e;
  for (auto& c : unique) out.candidates.push_back(c.column);
  out.resolved = alive[0];
  out.reps = unique[alive[0]].reps;
  out.reps.d_resolved = form == QuadForm::E3;
  out.reps.t_resolved = form == QuadForm::E4 || form == QuadForm::E6;
  out.reps.y_resolved = out.reps.b_resolved = form == QuadForm::E8;

  if (form == QuadForm::E3) {
    const auto& col = out.column();
    const std::int64_t A = col[0], B = col[1], C = col[2];
    const std::int64_t D = (q + 1 + out.reps.c) / 9;
    out.matrix = {A, B, C, B, C, D, C, D, B};
  }
  return out;
}

}  // namespace dpdf
