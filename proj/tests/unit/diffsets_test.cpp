#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "dpdf/cyclotomy.hpp"
#include "dpdf/diffsets.hpp"
#include "dpdf/error.hpp"
#include "dpdf/field.hpp"
#include "oracles.hpp"

using namespace dpdf;

namespace {

std::vector<Element> els(std::initializer_list<std::uint32_t> codes) {
  std::vector<Element> out;
  for (auto c : codes) out.emplace_back(c);
  return out;
}

std::vector<std::uint32_t> codes(const std::vector<Element>& v) {
  std::vector<std::uint32_t> out;
  for (auto x : v) out.push_back(x.code);
  return out;
}

std::shared_ptr<const AbelianGroup> z3z3() { return make_group({3, 3}); }

Element pt(const AbelianGroup& g, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t c[] = {a, b};
  return g.encode(c);
}

SetFamily punctured_subgroups() {
  auto g = z3z3();
  return SetFamily(g, {{pt(*g, 1, 1), pt(*g, 2, 2)},
                       {pt(*g, 0, 1), pt(*g, 0, 2)},
                       {pt(*g, 1, 2), pt(*g, 2, 1)},
                       {pt(*g, 1, 0), pt(*g, 2, 0)}});
}

SetFamily example_13() {
  const auto f = FieldContext::make(13, 1);
  return SetFamily(f->additive_ptr(), {els({1, 3, 9}), els({4, 10, 12})});
}

}  // namespace

TEST(Delta, InternalThirteen) {
  const auto f = FieldContext::make(13, 1);
  const auto d = delta_internal(f->additive(), els({1, 3, 9}));
  for (std::uint32_t g = 0; g < 13; ++g) {
    const bool hit = std::set<std::uint32_t>{2, 5, 6, 7, 8, 11}.count(g) > 0;
    EXPECT_EQ(d.counts[g], hit ? 1u : 0u) << g;
  }
  EXPECT_EQ(d.total(), 6u);
}

TEST(Delta, SingletonIsEmpty) {
  const auto f = FieldContext::make(13, 1);
  EXPECT_EQ(delta_internal(f->additive(), els({7})).total(), 0u);
}

TEST(Delta, FiveElementPds) {
  const auto f = FieldContext::make(5, 1);
  const auto d = delta_internal(f->additive(), els({1, 4}));
  EXPECT_EQ(d.counts[2], 1u);
  EXPECT_EQ(d.counts[3], 1u);
  EXPECT_EQ(d.total(), 2u);
  EXPECT_EQ(classify_set(f->additive(), els({1, 4})).to_string(), "(5,2,0,1)-PDS");
}

TEST(Delta, ExternalExampleFamily) {
  const auto fam = example_13();
  auto both = delta_external(fam.group(), fam[0], fam[1]);
  both += delta_external(fam.group(), fam[1], fam[0]);
  const std::set<std::uint32_t> s{1, 3, 4, 9, 10, 12};
  for (std::uint32_t g = 1; g < 13; ++g) EXPECT_EQ(both.counts[g], s.count(g) ? 2u : 1u) << g;
  EXPECT_EQ(both, ext_family(fam));
}

TEST(Delta, ExternalSingletonsAndZ3Z3) {
  const auto f = FieldContext::make(13, 1);
  const auto d = delta_external(f->additive(), els({5}), els({2}));
  EXPECT_EQ(d.counts[3], 1u);
  EXPECT_EQ(d.total(), 1u);
  const auto g = z3z3();
  const std::vector<Element> a1{pt(*g, 1, 1), pt(*g, 2, 2)}, a2{pt(*g, 0, 1), pt(*g, 0, 2)};
  const auto x = delta_external(*g, a1, a2);
  EXPECT_EQ(x.total(), 4u);
  EXPECT_EQ(x.counts[0], 0u);
}

TEST(Delta, ExternalRejectsOverlap) {
  const auto f = FieldContext::make(13, 1);
  try {
    delta_external(f->additive(), els({1, 2}), els({2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDisjoint);
  }
}

TEST(Delta, MatchesOracleOnRandomSets) {
  std::mt19937 rng(7);
  for (const auto& orders : {std::vector<std::uint32_t>{31}, std::vector<std::uint32_t>{2, 2, 2, 2, 2},
                             std::vector<std::uint32_t>{3, 5, 2}}) {
    const AbelianGroup g(orders);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint32_t> a, b;
      for (std::uint32_t x = 0; x < g.size(); ++x) {
        const auto r = rng() % 3;
        if (r == 0) a.push_back(x);
        if (r == 1) b.push_back(x);
      }
      std::vector<Element> ea, eb;
      for (auto x : a) ea.emplace_back(x);
      for (auto x : b) eb.emplace_back(x);
      const auto in = delta_internal(g, ea);
      const auto ex = delta_external(g, ea, eb);
      const auto oi = oracle::differences(g, a, a, true);
      const auto oe = oracle::differences(g, a, b, false);
      for (std::uint32_t x = 0; x < g.size(); ++x) {
        EXPECT_EQ(static_cast<std::int64_t>(in.counts[x]), oi.count(x) ? oi.at(x) : 0);
        EXPECT_EQ(static_cast<std::int64_t>(ex.counts[x]), oe.count(x) ? oe.at(x) : 0);
      }
      EXPECT_EQ(in.total(), a.size() * (a.size() - (a.empty() ? 0 : 1)));
      EXPECT_EQ(ex.total(), a.size() * b.size());
    }
  }
}

TEST(Family, IntExtTotalsAndSingleSet) {
  const auto fam = example_13();
  const auto in = int_family(fam);
  EXPECT_EQ(in.total(), 12u);
  for (std::uint32_t g : {2u, 5u, 6u, 7u, 8u, 11u}) EXPECT_EQ(in.counts[g], 2u);
  EXPECT_EQ(ext_family(fam).total(), 18u);
  const SetFamily one(fam.group_ptr(), {els({1, 3, 9})});
  EXPECT_EQ(ext_family(one).total(), 0u);
}

TEST(Family, FullClassFamily) {
  const auto f = FieldContext::make(13, 1);
  const CyclotomicContext cc(f, 4);
  std::vector<std::vector<Element>> sets;
  for (std::uint32_t i = 0; i < 4; ++i) sets.push_back(cc.cyclotomic_class(i));
  const SetFamily fam(f->additive_ptr(), sets);
  const auto in = int_family(fam);
  const auto ex = ext_family(fam);
  for (std::uint32_t g = 1; g < 13; ++g) {
    EXPECT_EQ(in.counts[g], 2u);
    EXPECT_EQ(ex.counts[g], 9u);
  }
  EXPECT_EQ(classify_family(fam, DiffMode::Internal).to_string(), "(13,4,3,2)-DDF");
  EXPECT_EQ(classify_family(fam, DiffMode::External).to_string(), "(13,4,3,9)-EDF");
}

TEST(Classify, SquaresAndSubfieldClass) {
  const auto f13 = FieldContext::make(13, 1);
  const auto sq = classify_set(f13->additive(), els({1, 3, 4, 9, 10, 12}));
  EXPECT_EQ(sq.to_string(), "(13,6,2,3)-PDS");
  EXPECT_TRUE(sq.proper);
  const auto f7 = FieldContext::make(7, 1);
  const auto ds = classify_set(f7->additive(), els({1, 2, 4}));
  EXPECT_EQ(ds.to_string(), "(7,3,1)-DS");
  EXPECT_TRUE(ds.holds(FamilyKind::PDS));
  EXPECT_FALSE(ds.proper);
  const auto f25 = FieldContext::make(5, 2);
  const CyclotomicContext cc(f25, 6);
  EXPECT_EQ(classify_set(f25->additive(), cc.cyclotomic_class(0)).to_string(), "(25,4,3,0)-PDS");
}

TEST(Classify, ExampleFamily) {
  const auto fam = example_13();
  const auto in = classify_family(fam, DiffMode::Internal);
  const auto ex = classify_family(fam, DiffMode::External);
  EXPECT_EQ(in.to_string(), "(13,2,3,0,2)-DPDF");
  EXPECT_EQ(ex.to_string(), "(13,2,3,2,1)-EPDF");
  EXPECT_TRUE(in.proper);
  EXPECT_TRUE(ex.proper);
  EXPECT_FALSE(ex.pedf);
}

TEST(Classify, PuncturedSubgroups) {
  const auto fam = punctured_subgroups();
  const auto in = classify_family(fam, DiffMode::Internal);
  const auto ex = classify_family(fam, DiffMode::External);
  EXPECT_EQ(in.to_string(), "(9,4,2,1)-DDF");
  EXPECT_EQ(ex.to_string(), "(9,4,2,6)-EDF");
  EXPECT_TRUE(in.holds(FamilyKind::DPDF));
  EXPECT_TRUE(ex.holds(FamilyKind::EPDF));
  EXPECT_FALSE(ex.sedf);
  EXPECT_FALSE(sedf_lambda(fam).has_value());
  EXPECT_TRUE(ex.pedf);
}

TEST(Classify, AnySubfamilyOfPuncturedSubgroupsIsBoth) {
  const auto full = punctured_subgroups();
  for (unsigned mask = 1; mask < 15; ++mask) {
    std::vector<std::vector<Element>> sets;
    for (unsigned i = 0; i < 4; ++i)
      if (mask >> i & 1) sets.push_back(full[i]);
    const SetFamily fam(full.group_ptr(), sets);
    EXPECT_TRUE(classify_family(fam, DiffMode::Internal).holds(FamilyKind::DPDF)) << mask;
    EXPECT_TRUE(classify_family(fam, DiffMode::External).holds(FamilyKind::EPDF)) << mask;
  }
}

TEST(Classify, SingletonAndEmptyFamilies) {
  const auto f = FieldContext::make(13, 1);
  const SetFamily single(f->additive_ptr(), {els({5})});
  const auto c = classify_family(single, DiffMode::Internal);
  EXPECT_EQ(c.kind, FamilyKind::DDF);
  EXPECT_EQ(c.lambda, 0);
  EXPECT_TRUE(c.holds(FamilyKind::DS));
  const SetFamily none(f->additive_ptr(), {});
  EXPECT_EQ(classify_family(none, DiffMode::Internal).to_string(), "(13,0,0,0)-DDF");
}

TEST(Classify, SingleSetDelegatesToSetClassifier) {
  const auto f = FieldContext::make(13, 1);
  const SetFamily sq(f->additive_ptr(), {els({1, 3, 4, 9, 10, 12})});
  const auto c = classify_family(sq, DiffMode::Internal);
  EXPECT_EQ(c.to_string(), "(13,1,6,2,3)-DPDF");
  EXPECT_TRUE(c.holds(FamilyKind::PDS));
}

TEST(Classify, Preconditions) {
  const auto f = FieldContext::make(13, 1);
  const auto expect_code = [](auto&& fn, ErrorCode code) {
    try {
      fn();
      ADD_FAILURE() << "no throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  const SetFamily zero(f->additive_ptr(), {els({0, 1}), els({2, 3})});
  expect_code([&] { classify_family(zero, DiffMode::Internal); }, ErrorCode::ZeroInSet);
  const SetFamily uneven(f->additive_ptr(), {els({1}), els({2, 3})});
  expect_code([&] { classify_family(uneven, DiffMode::External); }, ErrorCode::UnequalSizes);
  const SetFamily overlap(f->additive_ptr(), {els({1, 2}), els({2, 3})});
  expect_code([&] { classify_family(overlap, DiffMode::Internal); }, ErrorCode::NotDisjoint);
  expect_code([&] { int_family(overlap); }, ErrorCode::NotDisjoint);
  expect_code([&] { classify_relative(example_13(), els({0, 2}), DiffMode::Internal); },
              ErrorCode::ZeroInT);
}

TEST(Relative, ReducesToFamilyAndDdfTests) {
  const auto fam = example_13();
  const auto s = fam.support();
  for (auto mode : {DiffMode::Internal, DiffMode::External})
    EXPECT_EQ(classify_relative(fam, s, mode), classify_family(fam, mode));
  std::vector<Element> all;
  for (std::uint32_t g = 1; g < 13; ++g) all.emplace_back(g);
  const auto pun = punctured_subgroups();
  std::vector<Element> all9;
  for (std::uint32_t g = 1; g < 9; ++g) all9.emplace_back(g);
  EXPECT_EQ(classify_relative(pun, all9, DiffMode::Internal).to_string(), "(9,4,2,1)-DDF");
  EXPECT_EQ(classify_relative(fam, all, DiffMode::Internal).kind, FamilyKind::None);
}

TEST(Relative, ComplementOfExampleSupport) {
  const auto fam = example_13();
  const auto in = classify_relative(fam, els({2, 5, 6, 7, 8, 11}), DiffMode::Internal);
  EXPECT_EQ(in.kind, FamilyKind::DPDF);
  EXPECT_EQ(in.lambda, 2);
  EXPECT_EQ(in.mu, 0);
}

namespace {

// Every set partition of the listed elements, as block labels.
void for_each_partition(std::size_t n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> label(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
    if (i == n) {
      fn(label);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

}  // namespace

TEST(Pedf, PartitionsOfPuncturedGroupMatchDpdfCharacterisation) {
  for (const auto& orders : {std::vector<std::uint32_t>{7}, std::vector<std::uint32_t>{2, 2, 2},
                             std::vector<std::uint32_t>{3, 3}}) {
    const auto g = make_group(orders);
    const std::size_t n = g->size();
    int positives = 0;
    for_each_partition(n - 1, [&](const std::vector<int>& label) {
      const int blocks = *std::max_element(label.begin(), label.end()) + 1;
      std::vector<std::vector<Element>> sets(blocks);
      for (std::size_t i = 0; i < label.size(); ++i) sets[label[i]].emplace_back(i + 1);
      const SetFamily fam(g, sets);
      const auto pedf = pedf_parameters(fam);
      std::map<std::size_t, std::vector<std::vector<Element>>> by_size;
      for (const auto& s : sets) by_size[s.size()].push_back(s);
      bool all_dpdf = true;
      for (const auto& [k, group_sets] : by_size) {
        const auto c = classify_family(SetFamily(g, group_sets), DiffMode::Internal);
        if (!c.holds(FamilyKind::DPDF)) {
          all_dpdf = false;
          continue;
        }
        // The DPDF must have mu = lambda + 1 whenever both values are defined.
        const std::size_t covered = group_sets.size() * k;
        if (covered < n - 1 && c.mu != c.lambda + 1) all_dpdf = false;
        if (pedf) {
          const auto it = std::find_if(pedf->begin(), pedf->end(),
                                       [&](const PedfClass& p) { return p.size == k; });
          ASSERT_NE(it, pedf->end());
          const std::int64_t ck = static_cast<std::int64_t>(covered);
          if (covered < n - 1) EXPECT_EQ(c.lambda, ck - it->lambda - 1);
        }
      }
      EXPECT_EQ(pedf.has_value(), all_dpdf);
      if (pedf) ++positives;
    });
    EXPECT_GT(positives, 1) << n;
  }
}
