#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dpdf/cyclotomy.hpp"
#include "dpdf/diffsets.hpp"
#include "dpdf/error.hpp"
#include "dpdf/representations.hpp"
#include "dpdf/uniform.hpp"
#include "oracles.hpp"

using namespace dpdf;

namespace {

std::set<std::uint32_t> as_set(const std::vector<Element>& v) {
  std::set<std::uint32_t> out;
  for (auto x : v) out.insert(x.code);
  return out;
}

std::set<std::uint32_t> negated(const FieldContext& f, const std::vector<Element>& v) {
  std::set<std::uint32_t> out;
  for (auto x : v) out.insert(f.neg(x).code);
  return out;
}

std::vector<std::uint32_t> divisors_of(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

TEST(Context, ClassesOfThirteen) {
  const CyclotomicContext cc(FieldContext::make(13, 1), 4);
  EXPECT_EQ(cc.f(), 3u);
  EXPECT_EQ(as_set(cc.cyclotomic_class(0)), (std::set<std::uint32_t>{1, 3, 9}));
  EXPECT_EQ(as_set(cc.cyclotomic_class(2)), (std::set<std::uint32_t>{4, 10, 12}));
  EXPECT_EQ(cc.rho(2), 6u);
  EXPECT_EQ(cc.class_index(Element{5}), 1u);
}

TEST(Context, SingletonClassesAndBadDivisor) {
  const CyclotomicContext cc(FieldContext::make(11, 1), 10);
  for (std::uint32_t i = 0; i < 10; ++i) EXPECT_EQ(cc.cyclotomic_class(i).size(), 1u);
  try {
    CyclotomicContext bad(FieldContext::make(13, 1), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadDivisor);
  }
}

TEST(Context, SubfieldClassOfFortyNine) {
  const CyclotomicContext cc(FieldContext::make(7, 2), 8);
  EXPECT_EQ(as_set(cc.cyclotomic_class(0)), (std::set<std::uint32_t>{1, 2, 3, 4, 5, 6}));
}

TEST(Numbers, DirectExamples) {
  const auto f13 = FieldContext::make(13, 1);
  EXPECT_EQ(CyclotomicContext(f13, 3).cyclotomic_number(0, 0), 0u);
  const CyclotomicContext c4(f13, 4);
  EXPECT_EQ(c4.cyclotomic_number(1, 0), 1u);
  EXPECT_EQ(c4.cyclotomic_number(2, 0), 0u);
}

TEST(Numbers, MatrixMatchesOracleAndRowSums) {
  for (auto q : {7u, 13u, 16u, 25u, 27u, 31u, 49u, 64u, 81u}) {
    const auto field = FieldContext::of_order(q);
    for (auto e : divisors_of(q - 1)) {
      if (e < 2) continue;
      const CyclotomicContext cc(field, e);
      const auto m = cc.cyclotomic_matrix();
      std::uint64_t column0 = 0;
      for (std::uint32_t i = 0; i < e; ++i) {
        for (std::uint32_t j = 0; j < e; ++j) {
          ASSERT_EQ(static_cast<std::int64_t>(m[i * e + j]), oracle::cyclo(*field, e, i, j));
          if (e <= 8) EXPECT_EQ(m[i * e + j], cc.cyclotomic_number(i, j));
        }
        column0 += m[i * e];
      }
      EXPECT_EQ(column0, cc.f() - 1) << q << " " << e;
    }
  }
}

TEST(Transversal, ThirteenExamples) {
  const auto f = FieldContext::make(13, 1);
  const CyclotomicContext cc(f, 4);
  const auto t1 = transversal(cc, 1);
  EXPECT_EQ(t1.multiplier, Element{2});
  EXPECT_EQ(t1.class_index, 1u);
  EXPECT_EQ(as_set(t1.elements), (std::set<std::uint32_t>{2, 5, 6}));
  EXPECT_EQ(as_set(t1.elements), as_set(cc.cyclotomic_class(1)));
  const auto t2 = transversal(cc, 2);
  EXPECT_EQ(as_set(t2.elements), negated(*f, t1.elements));
  try {
    transversal(cc, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(Transversal, Diagonals) {
  const auto f = FieldContext::make(13, 1);
  const auto d = diagonal(CyclotomicContext(f, 4), 2, 1);
  EXPECT_EQ(d.class_index, 1u);
  EXPECT_EQ(as_set(d.elements), (std::set<std::uint32_t>{2, 5, 6, 7, 8, 11}));
  const CyclotomicContext c6(f, 6);
  const auto d6 = diagonal(c6, 2, 1);
  EXPECT_EQ(d6.class_index, 1u);
  EXPECT_EQ(as_set(d6.elements), as_set(c6.coarse_class(2, 0 + 1)));
  try {
    diagonal(c6, 4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadEpsilon);
  }
}

TEST(Transversal, StructuralLawsUpTo200) {
  for (std::uint64_t q = 3; q <= 200; ++q) {
    if (!as_prime_power(q)) continue;
    const auto field = FieldContext::of_order(q);
    for (auto e : divisors_of(static_cast<std::uint32_t>(q - 1))) {
      if (e < 2 || (q - 1) / e < 2) continue;
      const CyclotomicContext cc(field, e);
      const std::uint32_t f = cc.f();
      for (std::uint32_t r = 1; r < f; ++r) {
        const auto t = transversal(cc, r);
        EXPECT_EQ(as_set(t.elements), as_set(cc.cyclotomic_class(t.class_index)));
        EXPECT_EQ(as_set(transversal(cc, f - r).elements), negated(*field, t.elements));
      }
      for (auto eps : divisors_of(e)) {
        if (eps < 2) continue;
        for (std::uint32_t r = 1; r < f; ++r) {
          const auto d = diagonal(cc, eps, r);
          EXPECT_EQ(as_set(d.elements), as_set(cc.coarse_class(eps, d.class_index)));
          EXPECT_EQ(as_set(diagonal(cc, eps, f - r).elements), negated(*field, d.elements));
        }
        if (f % 2 == 0) {
          std::vector<Element> minus_two;
          for (auto x : cc.coarse_class(eps, 0))
            minus_two.push_back(field->mul(field->neg(field->from_int(2)), x));
          EXPECT_EQ(as_set(diagonal(cc, eps, f / 2).elements), as_set(minus_two));
        }
      }
    }
  }
}

TEST(Transversal, ExternalDecomposition) {
  for (auto q : {13u, 25u, 29u, 37u}) {
    const auto field = FieldContext::of_order(q);
    for (auto e : divisors_of(q - 1)) {
      if (e < 2 || (q - 1) / e < 2) continue;
      const CyclotomicContext cc(field, e);
      const auto m = cc.cyclotomic_matrix();
      for (std::uint32_t j = 1; j < e; ++j) {
        const auto delta = delta_external(field->additive(), cc.cyclotomic_class(j), cc.cyclotomic_class(0));
        FrequencyVector sum(q);
        std::vector<std::uint64_t> per_class(e, 0);
        for (std::uint32_t r = 1; r <= cc.f(); ++r) {
          const auto t = external_transversal(cc, r, j);
          EXPECT_EQ(as_set(t.elements), as_set(cc.cyclotomic_class(t.class_index)));
          for (auto x : t.elements) ++sum.counts[x.code];
          ++per_class[t.class_index];
        }
        EXPECT_EQ(sum, delta);
        // T_(r,j) lies in class i for exactly (i,j) values of r.
        for (std::uint32_t i = 0; i < e; ++i)
          EXPECT_EQ(per_class[i], m[i * e + j]) << q << " " << e << " " << j;
      }
    }
  }
}

TEST(Phi, KnownValues) {
  const CyclotomicContext c37(FieldContext::make(37, 1), 4);
  const auto p37 = phi_profile(c37, 2);
  EXPECT_EQ(p37.phi, (std::vector<std::uint64_t>{4, 4}));
  EXPECT_EQ(as_set(p37.members[0]), (std::set<std::uint32_t>{10, 12, 26, 34}));
  EXPECT_EQ(as_set(p37.members[1]), (std::set<std::uint32_t>{7, 9, 16, 33}));
  EXPECT_EQ(phi_profile(CyclotomicContext(FieldContext::make(17, 1), 4), 2).phi,
            (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(phi_profile(CyclotomicContext(FieldContext::make(7, 2), 8), 4).phi,
            (std::vector<std::uint64_t>{5, 0, 0, 0}));
}

TEST(Phi, SumsPairingAndMinusOne) {
  for (std::uint64_t q = 3; q <= 200; ++q) {
    if (!as_prime_power(q)) continue;
    const auto field = FieldContext::of_order(q);
    for (auto e : divisors_of(static_cast<std::uint32_t>(q - 1))) {
      if (e < 2 || (q - 1) / e < 2) continue;
      const CyclotomicContext cc(field, e);
      const std::uint32_t f = cc.f();
      for (auto eps : divisors_of(e)) {
        if (eps < 2) continue;
        const auto prof = phi_profile(cc, eps);
        std::uint64_t total = 0;
        for (auto v : prof.phi) total += v;
        EXPECT_EQ(total, f - 1);
        // Class of -1 by the q mod 2 eps split.
        const std::uint32_t minus_one = cc.coarse_index(field->neg(FieldContext::one()), eps);
        const std::uint32_t shift = (q % 2 == 0 || (q - 1) % (2 * eps) == 0) ? 0 : eps / 2;
        EXPECT_EQ(minus_one, shift);
        // r and f - r pair up across the shift, with r = f/2 on its own.
        for (std::uint32_t i = 0; i < eps; ++i) {
          std::uint64_t expect = prof.psi[i] + prof.psi[(i + eps - shift) % eps];
          if (prof.central_class && *prof.central_class == i) ++expect;
          EXPECT_EQ(prof.phi[i], expect) << q << " " << e << " " << eps << " " << i;
        }
      }
    }
  }
}

TEST(Representations, KnownValues) {
  const auto r25 = quadratic_representations(make_prime_power(5, 2), QuadForm::E3);
  EXPECT_EQ(r25.c, 10);
  EXPECT_EQ(r25.d, 0);
  const auto r41 = quadratic_representations(make_prime_power(41, 1), QuadForm::E8);
  EXPECT_EQ(r41.x, 5);
  EXPECT_EQ(r41.y, 2);
  EXPECT_EQ(r41.a, -3);
  EXPECT_EQ(r41.b, 4);
  EXPECT_FALSE(r41.y_resolved);
  const auto r13 = quadratic_representations(make_prime_power(13, 1), QuadForm::E4);
  EXPECT_EQ(r13.s, -3);
  EXPECT_EQ(r13.t, 2);
  try {
    quadratic_representations(make_prime_power(11, 1), QuadForm::E4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRepresentation);
  }
}

TEST(Representations, IdentitiesAndCongruences) {
  const auto md = [](std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; };
  for (std::uint64_t q = 3; q <= 500; ++q) {
    const auto spec = as_prime_power(q);
    if (!spec) continue;
    const auto Q = static_cast<std::int64_t>(q);
    if (q % 3 == 1) {
      const auto r = quadratic_representations(*spec, QuadForm::E3);
      EXPECT_EQ(r.c * r.c + 27 * r.d * r.d, 4 * Q);
      EXPECT_EQ(md(r.c, 3), 1);
    }
    if (q % 4 == 1) {
      const auto r = quadratic_representations(*spec, QuadForm::E4);
      EXPECT_EQ(r.s * r.s + r.t * r.t, Q);
      EXPECT_EQ(md(r.s, 4), 1);
    }
    if (q % 6 == 1) {
      const auto r = quadratic_representations(*spec, QuadForm::E6);
      EXPECT_EQ(r.s * r.s + 3 * r.t * r.t, Q);
      EXPECT_EQ(md(r.s, 3), 1);
    }
    if (q % 8 == 1) {
      const auto r = quadratic_representations(*spec, QuadForm::E8);
      EXPECT_EQ(r.x * r.x + 4 * r.y * r.y, Q);
      EXPECT_EQ(r.a * r.a + 2 * r.b * r.b, Q);
      EXPECT_EQ(md(r.x, 4), 1);
      EXPECT_EQ(md(r.a, 4), 1);
    }
  }
}

TEST(ClosedForm, SmallExamples) {
  const auto f13 = FieldContext::make(13, 1);
  const auto e3 = closed_form_cyclo_numbers(CyclotomicContext(f13, 3));
  EXPECT_EQ(e3.reps.c, -5);
  EXPECT_EQ(e3.column()[0], 0);
  ASSERT_EQ(e3.matrix.size(), 9u);
  const CyclotomicContext c3(f13, 3);
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j)
      EXPECT_EQ(e3.matrix[i * 3 + j], static_cast<std::int64_t>(c3.cyclotomic_number(i, j)));
  const auto e4 = closed_form_cyclo_numbers(CyclotomicContext(f13, 4));
  EXPECT_EQ(e4.column(), (std::vector<std::int64_t>{0, 1, 0, 1}));
  const auto e6 = closed_form_cyclo_numbers(CyclotomicContext(FieldContext::make(5, 2), 6));
  EXPECT_EQ(e6.reps.s, -5);
  EXPECT_EQ(e6.reps.t, 0);
  EXPECT_EQ(e6.column()[0] + e6.column()[2] + e6.column()[4], 3);
}

TEST(ClosedForm, Unsupported) {
  const auto expect = [](const CyclotomicContext& cc) {
    try {
      closed_form_cyclo_numbers(cc);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedE);
    }
  };
  expect(CyclotomicContext(FieldContext::make(31, 1), 5));
  expect(CyclotomicContext(FieldContext::make(19, 1), 6));  // f = 3
}

TEST(ClosedForm, AgreesWithDirectCountsUpTo200) {
  for (std::uint64_t q = 3; q <= 200; ++q) {
    if (!as_prime_power(q)) continue;
    const auto field = FieldContext::of_order(q);
    for (std::uint32_t e : {3u, 4u, 6u, 8u}) {
      if ((q - 1) % e != 0) continue;
      const CyclotomicContext cc(field, e);
      if (e == 6 && cc.f() % 2 == 1) continue;
      const auto cf = closed_form_cyclo_numbers(cc);
      for (std::uint32_t i = 0; i < e; ++i)
        EXPECT_EQ(cf.column()[i], oracle::cyclo(*field, e, i, 0)) << q << " " << e << " " << i;
    }
  }
}

TEST(Uniform, KnownValues) {
  const auto spec = make_prime_power(3, 6);
  const auto u4 = uniformity(spec, 4);
  ASSERT_TRUE(u4.has_value());
  EXPECT_EQ(u4->q, 3u);
  EXPECT_EQ(u4->beta, 3u);
  EXPECT_EQ(u4->eta, -7);
  // 69 is sometimes quoted here; it breaks k(k-1) = lambda k + mu (q-1-k),
  // while 55 satisfies it: 182 * 181 = 55 * 182 + 42 * 546.
  EXPECT_EQ(u4->diagonal_zero, 55);
  EXPECT_EQ(182 * 181, 55 * 182 + 42 * 546);
  EXPECT_EQ(u4->axis, 42);
  const auto u14 = uniformity(spec, 14);
  ASSERT_TRUE(u14.has_value());
  EXPECT_EQ(u14->q, 27u);
  EXPECT_EQ(u14->beta, 1u);
  EXPECT_EQ(u14->eta, -2);
  const auto field = FieldContext::make(3, 6);
  EXPECT_EQ(classify_set(field->additive(), CyclotomicContext(field, 4).cyclotomic_class(1)).to_string(),
            "(729,182,55,42)-PDS");
  EXPECT_EQ(classify_set(field->additive(), CyclotomicContext(field, 14).cyclotomic_class(0)).to_string(),
            "(729,52,25,2)-PDS");
  EXPECT_FALSE(uniformity(make_prime_power(13, 1), 4).has_value());
  EXPECT_THROW(uniformity(make_prime_power(13, 1), 5), Error);
}

TEST(Uniform, TablesMatchDirectCounts) {
  for (auto q : {16u, 49u, 64u, 81u, 121u}) {
    const auto field = FieldContext::of_order(q);
    for (auto e : divisors_of(q - 1)) {
      if (e < 3) continue;
      const auto u = uniformity(field->spec(), e);
      if (!u) continue;
      EXPECT_TRUE(uniform_table_matches(*u, CyclotomicContext(field, e))) << q << " " << e;
    }
  }
}
