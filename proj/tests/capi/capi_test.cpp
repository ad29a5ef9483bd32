#include <gtest/gtest.h>

#include <memory>
#include <string>
#include <vector>

#include "dpdf/dpdf.h"

namespace {

struct FieldDeleter {
  void operator()(dpdf_field* f) const { dpdf_field_free(f); }
};
struct FamilyDeleter {
  void operator()(dpdf_family* f) const { dpdf_family_free(f); }
};
struct ReportDeleter {
  void operator()(dpdf_report* r) const { dpdf_report_free(r); }
};
using Field = std::unique_ptr<dpdf_field, FieldDeleter>;
using Family = std::unique_ptr<dpdf_family, FamilyDeleter>;
using Report = std::unique_ptr<dpdf_report, ReportDeleter>;

Field field(uint64_t q) {
  dpdf_field* f = nullptr;
  EXPECT_EQ(dpdf_field_of_order(q, &f), DPDF_OK) << dpdf_last_error();
  return Field(f);
}

std::string format(const dpdf_classification& c) {
  char buf[64];
  const size_t need = dpdf_classification_format(&c, buf, sizeof buf);
  EXPECT_LT(need, sizeof buf);
  return buf;
}

Family example_family(const dpdf_field* f) {
  const uint32_t elements[] = {1, 3, 9, 4, 10, 12};
  const size_t sizes[] = {3, 3};
  dpdf_family* fam = nullptr;
  EXPECT_EQ(dpdf_family_in_field(f, elements, sizes, 2, &fam), DPDF_OK) << dpdf_last_error();
  return Family(fam);
}

}  // namespace

TEST(CApi, FieldHandles) {
  const auto f = field(49);
  EXPECT_EQ(dpdf_field_order(f.get()), 49u);
  EXPECT_EQ(dpdf_field_characteristic(f.get()), 7u);
  EXPECT_EQ(dpdf_field_degree(f.get()), 2u);
  const uint32_t alpha = dpdf_field_primitive(f.get());
  uint32_t pow = 0;
  ASSERT_EQ(dpdf_field_arith(f.get(), DPDF_OP_POW, alpha, 48, &pow), DPDF_OK);
  EXPECT_EQ(pow, 1u);
  uint32_t log = 0;
  ASSERT_EQ(dpdf_field_dlog(f.get(), alpha, &log), DPDF_OK);
  EXPECT_EQ(log, 1u);
  uint32_t sum = 0;
  ASSERT_EQ(dpdf_field_arith(f.get(), DPDF_OP_ADD, 3, 4, &sum), DPDF_OK);
  EXPECT_EQ(sum, 0u);
  EXPECT_EQ(dpdf_field_order(nullptr), 0u);
}

TEST(CApi, ErrorStatuses) {
  dpdf_field* f = nullptr;
  EXPECT_EQ(dpdf_field_of_order(12, &f), DPDF_E_NOT_PRIME);
  EXPECT_EQ(f, nullptr);
  EXPECT_STRNE(dpdf_last_error(), "");
  EXPECT_STREQ(dpdf_status_name(DPDF_E_NOT_PRIME), "NotPrime");
  EXPECT_STREQ(dpdf_status_name(DPDF_OK), "Ok");
  EXPECT_EQ(dpdf_field_new(4, 1, &f), DPDF_E_NOT_PRIME);
  EXPECT_EQ(dpdf_field_new(5, 0, &f), DPDF_E_DEGREE_ZERO);
  EXPECT_EQ(dpdf_field_of_order(13, nullptr), DPDF_E_INVALID_ARGUMENT);

  const auto g = field(13);
  uint32_t out = 0;
  EXPECT_EQ(dpdf_field_arith(g.get(), DPDF_OP_INV, 0, 0, &out), DPDF_E_DIVISION_BY_ZERO);
  EXPECT_EQ(dpdf_field_dlog(g.get(), 0, &out), DPDF_E_LOG_OF_ZERO);
  EXPECT_EQ(dpdf_field_dlog(g.get(), 13, &out), DPDF_E_INVALID_ARGUMENT);
  // Success clears the message.
  EXPECT_EQ(dpdf_field_dlog(g.get(), 1, &out), DPDF_OK);
  EXPECT_STREQ(dpdf_last_error(), "");
}

TEST(CApi, ExampleFamily) {
  const auto f = field(13);
  const auto fam = example_family(f.get());
  dpdf_classification in{}, ex{};
  ASSERT_EQ(dpdf_classify(fam.get(), DPDF_INTERNAL, &in), DPDF_OK);
  ASSERT_EQ(dpdf_classify(fam.get(), DPDF_EXTERNAL, &ex), DPDF_OK);
  EXPECT_EQ(in.kind, DPDF_KIND_DPDF);
  EXPECT_EQ(in.lambda, 0);
  EXPECT_EQ(in.mu, 2);
  EXPECT_TRUE(in.proper);
  EXPECT_EQ(format(in), "(13,2,3,0,2)-DPDF");
  EXPECT_EQ(format(ex), "(13,2,3,2,1)-EPDF");
  EXPECT_TRUE(ex.labels & (1u << DPDF_KIND_EPDF));
  EXPECT_STREQ(dpdf_kind_name(in.kind), "DPDF");

  dpdf_classification one{};
  EXPECT_EQ(dpdf_classify_set(fam.get(), 2, &one), DPDF_E_INDEX_OUT_OF_RANGE);
  ASSERT_EQ(dpdf_classify_set(fam.get(), 0, &one), DPDF_OK);
  EXPECT_EQ(one.kind, DPDF_KIND_NONE);

  dpdf_report* r = nullptr;
  ASSERT_EQ(dpdf_report_classify(fam.get(), &r), DPDF_OK);
  const Report rep(r);
  EXPECT_NE(std::string(dpdf_report_text(rep.get())).find("set 1: C_2^4"), std::string::npos);
}

TEST(CApi, FormatTruncates) {
  dpdf_classification c{};
  c.kind = DPDF_KIND_DS;
  c.n = 7;
  c.k = 3;
  c.lambda = 1;
  char small[4];
  const size_t need = dpdf_classification_format(&c, small, sizeof small);
  EXPECT_EQ(need, std::string("(7,3,1)-DS").size());
  EXPECT_STREQ(small, "(7,");
}

TEST(CApi, GroupFamilies) {
  const uint32_t orders[] = {3, 3};
  std::vector<uint32_t> elements;
  const uint32_t lines[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  for (const auto& l : lines)
    for (uint32_t t = 1; t < 3; ++t) {
      const uint32_t comps[] = {l[0] * t % 3, l[1] * t % 3};
      uint32_t code = 0;
      ASSERT_EQ(dpdf_group_encode(orders, 2, comps, &code), DPDF_OK);
      elements.push_back(code);
    }
  const size_t sizes[] = {2, 2, 2, 2};
  dpdf_family* raw = nullptr;
  ASSERT_EQ(dpdf_family_in_group(orders, 2, elements.data(), sizes, 4, &raw), DPDF_OK);
  const Family fam(raw);
  dpdf_classification in{}, ex{};
  ASSERT_EQ(dpdf_classify(fam.get(), DPDF_INTERNAL, &in), DPDF_OK);
  ASSERT_EQ(dpdf_classify(fam.get(), DPDF_EXTERNAL, &ex), DPDF_OK);
  EXPECT_EQ(format(in), "(9,4,2,1)-DDF");
  EXPECT_EQ(format(ex), "(9,4,2,6)-EDF");

  const uint32_t overlap[] = {1, 2, 2, 3};
  const size_t two[] = {2, 2};
  dpdf_family* bad = nullptr;
  ASSERT_EQ(dpdf_family_in_group(orders, 2, overlap, two, 2, &bad), DPDF_OK);
  const Family bad_fam(bad);
  EXPECT_EQ(dpdf_classify(bad_fam.get(), DPDF_INTERNAL, &in), DPDF_E_NOT_DISJOINT);
}

TEST(CApi, CyclotomyAndPartition) {
  const auto f = field(13);
  uint64_t v = 99;
  ASSERT_EQ(dpdf_cyclotomic_number(f.get(), 4, 1, 0, &v), DPDF_OK);
  EXPECT_EQ(v, 1u);
  EXPECT_EQ(dpdf_cyclotomic_number(f.get(), 5, 0, 0, &v), DPDF_E_BAD_DIVISOR);

  const auto f49 = field(49);
  dpdf_classification in{}, ex{};
  int verified = 0;
  ASSERT_EQ(dpdf_partition(f49.get(), 16, 4, &in, &ex, &verified), DPDF_OK);
  EXPECT_EQ(format(in), "(49,4,3,2,0)-DPDF");
  EXPECT_EQ(format(ex), "(49,4,3,3,2)-EPDF");
  EXPECT_EQ(verified, 1);
  ASSERT_EQ(dpdf_partition(f49.get(), 12, 4, &in, &ex, &verified), DPDF_OK);
  EXPECT_EQ(in.kind, DPDF_KIND_NONE);
  EXPECT_EQ(dpdf_partition(f49.get(), 12, 5, &in, &ex, &verified), DPDF_E_BAD_EPSILON);
  EXPECT_EQ(dpdf_partition(f.get(), 12, 4, &in, &ex, &verified), DPDF_E_NOT_APPLICABLE);
}

TEST(CApi, Construct) {
  dpdf_construct_args a{};
  a.theorem = DPDF_THEOREM_UNIFORM_UNIONS;
  a.q = 49;
  a.e = 8;
  const uint32_t idx[] = {0, 2, 5, 6, 4, 7};
  const size_t sizes[] = {2, 2, 2};
  a.index_sets = idx;
  a.set_sizes = sizes;
  a.set_count = 3;
  dpdf_report* r = nullptr;
  ASSERT_EQ(dpdf_construct(&a, &r), DPDF_OK) << dpdf_last_error();
  Report rep(r);
  EXPECT_EQ(dpdf_report_failures(rep.get()), 0u);
  EXPECT_NE(std::string(dpdf_report_text(rep.get())).find("(49,3,12,16,24)-EPDF"),
            std::string::npos);

  dpdf_construct_args s{};
  s.theorem = DPDF_THEOREM_SQUARES;
  s.q = 41;
  s.e = 8;
  ASSERT_EQ(dpdf_construct(&s, &r), DPDF_OK) << dpdf_last_error();
  rep.reset(r);
  const std::string text = dpdf_report_text(rep.get());
  EXPECT_NE(text.find("(41,4,5,2)-DDF"), std::string::npos);
  EXPECT_NE(text.find("partition prediction agrees"), std::string::npos);
  EXPECT_EQ(dpdf_report_failures(rep.get()), 0u);

  const auto f = field(13);
  const auto fam = example_family(f.get());
  dpdf_construct_args pc{};
  pc.theorem = DPDF_THEOREM_PDS_COLLECTION;
  pc.family = fam.get();
  EXPECT_EQ(dpdf_construct(&pc, &r), DPDF_E_NOT_PDS);

  const uint32_t orders[] = {3, 3};
  const uint32_t lines[] = {1, 2, 3, 6, 4, 8, 7, 5};
  const size_t two[] = {2, 2, 2, 2};
  dpdf_family* raw = nullptr;
  ASSERT_EQ(dpdf_family_in_group(orders, 2, lines, two, 4, &raw), DPDF_OK);
  const Family subgroups(raw);
  pc.family = subgroups.get();
  ASSERT_EQ(dpdf_construct(&pc, &r), DPDF_OK) << dpdf_last_error();
  rep.reset(r);
  EXPECT_EQ(dpdf_report_failures(rep.get()), 0u);
  EXPECT_NE(std::string(dpdf_report_text(rep.get())).find("(9,4,2,6)-EDF"), std::string::npos);

  dpdf_construct_args bad{};
  bad.theorem = DPDF_THEOREM_UNIFORM;
  bad.q = 13;
  bad.e = 4;
  bad.u = 2;
  EXPECT_EQ(dpdf_construct(&bad, &r), DPDF_E_NOT_UNIFORM);
  EXPECT_EQ(dpdf_construct(nullptr, &r), DPDF_E_INVALID_ARGUMENT);
}

TEST(CApi, Catalog) {
  dpdf_catalog_args a{};
  a.q_max = 121;
  dpdf_report* r = nullptr;
  ASSERT_EQ(dpdf_catalog(&a, &r), DPDF_OK) << dpdf_last_error();
  Report rep(r);
  EXPECT_EQ(dpdf_report_items(rep.get()), 336u);
  const std::string csv = dpdf_report_text(rep.get());
  EXPECT_EQ(csv.rfind("q,p,n,e,epsilon,f,kind,m,k,lambda,mu,proper,theorem,verified\n", 0), 0u);

  const uint32_t eps[] = {4};
  a.epsilons = eps;
  a.epsilon_count = 1;
  a.format = DPDF_FORMAT_JSON;
  ASSERT_EQ(dpdf_catalog(&a, &r), DPDF_OK);
  rep.reset(r);
  EXPECT_EQ(std::string(dpdf_report_text(rep.get())).front(), '[');

  const uint32_t five[] = {5};
  a.epsilons = five;
  EXPECT_EQ(dpdf_catalog(&a, &r), DPDF_E_UNSUPPORTED_E);
  a.epsilon_count = 0;
  a.q_max = 20000;
  EXPECT_EQ(dpdf_catalog(&a, &r), DPDF_E_BOUND_EXCEEDED);
}

TEST(CApi, SuiteAndReports) {
  dpdf_report* r = nullptr;
  ASSERT_EQ(dpdf_verify_suite(&r), DPDF_OK);
  Report rep(r);
  EXPECT_GT(dpdf_report_items(rep.get()), 0u);
  EXPECT_EQ(dpdf_report_failures(rep.get()), 0u);

  ASSERT_EQ(dpdf_report_field_info(2, 4, &r), DPDF_OK);
  rep.reset(r);
  EXPECT_NE(std::string(dpdf_report_text(rep.get())).find("GF(16)"), std::string::npos);
  ASSERT_EQ(dpdf_report_cyclo(13, 4, 1, &r), DPDF_OK);
  rep.reset(r);
  EXPECT_NE(std::string(dpdf_report_text(rep.get())).find("matches"), std::string::npos);
  EXPECT_STREQ(dpdf_report_text(nullptr), "");
}
