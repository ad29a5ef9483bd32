#include <sstream>
#include <tuple>

#include "dpdf/catalog.hpp"
#include "dpdf/error.hpp"

namespace dpdf {
namespace {

std::string expect(const std::string& what, const std::string& actual, const std::string& wanted) {
  if (actual == wanted) return {};
  return what + ": got " + actual + ", expected " + wanted;
}

std::string first_failure(std::initializer_list<std::string> parts) {
  for (const auto& p : parts)
    if (!p.empty()) return p;
  return {};
}

std::string partition_check(std::uint64_t q, std::uint32_t e, std::uint32_t eps,
                            const std::string& internal, const std::string& external) {
  const auto out = partition_prediction(FieldContext::of_order(q), e, eps);
  const std::string tag = "q=" + std::to_string(q) + " e=" + std::to_string(e);
  return first_failure({
      expect(tag + " internal", out.prediction.internal.to_string(), internal),
      expect(tag + " external", out.prediction.external.to_string(), external),
      out.construction.verified || out.prediction.kind == PartitionCase::NotApplicable
          ? std::string{}
          : tag + ": oracle disagrees",
  });
}

std::string squares_check(const PartitionPrediction& p, const std::string& internal,
                          const std::string& external) {
  return first_failure({expect("internal", p.internal.to_string(), internal),
                        expect("external", p.external.to_string(), external)});
}

std::string verified(const ConstructionResult& r) {
  if (r.verified) return {};
  for (const auto& p : r.predictions)
    if (!p.matches) {
      return std::string(to_string(p.role)) + ": predicted " + p.expected.to_string() +
             ", observed " + (p.observed ? p.observed->to_string() : "nothing");
    }
  return "unverified";
}

bool contains(const std::vector<CatalogRow>& rows, std::uint32_t q, std::uint32_t e,
              std::uint32_t eps, const std::string& cls) {
  for (const auto& r : rows) {
    if (r.q != q || r.e != e || r.epsilon != eps) continue;
    FamilyClassification c;
    c.kind = r.kind;
    c.n = r.q;
    c.m = r.m;
    c.k = r.k;
    c.lambda = r.lambda;
    c.mu = r.mu;
    if (c.to_string() == cls) return true;
  }
  return false;
}

}  // namespace

std::vector<SuiteCheck> default_suite() {
  std::vector<SuiteCheck> s;

  s.push_back({"two-set family over GF(13)", [] {
                 const auto field = FieldContext::make(13, 1);
                 const SetFamily fam(field->additive_ptr(),
                                     {{Element{1}, Element{3}, Element{9}},
                                      {Element{4}, Element{10}, Element{12}}});
                 return first_failure(
                     {expect("internal", classify_family(fam, DiffMode::Internal).to_string(),
                             "(13,2,3,0,2)-DPDF"),
                      expect("external", classify_family(fam, DiffMode::External).to_string(),
                             "(13,2,3,2,1)-EPDF")});
               }});

  s.push_back({"GF(25) sixth-power classes, u = 2..5", [] {
                 const auto field = FieldContext::make(5, 2);
                 const CyclotomicContext cc(field, 6);
                 const char* wanted[][2] = {{"(25,2,4,3,0)-DPDF", "(25,2,4,0,2)-EPDF"},
                                            {"(25,3,4,3,0)-DPDF", "(25,3,4,2,6)-EPDF"},
                                            {"(25,4,4,3,0)-DPDF", "(25,4,4,6,12)-EPDF"},
                                            {"(25,5,4,3,0)-DPDF", "(25,5,4,12,20)-EPDF"}};
                 for (std::uint32_t i = 0; i < 6; ++i) {
                   auto r = expect("class", classify_set(field->additive(), cc.cyclotomic_class(i)).to_string(),
                                   "(25,4,3,0)-PDS");
                   if (!r.empty()) return r;
                 }
                 for (std::uint32_t u = 2; u <= 5; ++u) {
                   std::vector<std::vector<Element>> sets;
                   for (std::uint32_t i = 0; i < u; ++i) sets.push_back(cc.cyclotomic_class(i));
                   const SetFamily fam(field->additive_ptr(), sets);
                   auto r = first_failure(
                       {expect("internal", classify_family(fam, DiffMode::Internal).to_string(),
                               wanted[u - 2][0]),
                        expect("external", classify_family(fam, DiffMode::External).to_string(),
                               wanted[u - 2][1])});
                   if (!r.empty()) return r;
                 }
                 return std::string{};
               }});

  s.push_back({"GF(49) partitions with epsilon = 4", [] {
                 return first_failure({
                     partition_check(49, 8, 4, "(49,2,6,5,0)-DPDF", "(49,2,6,0,2)-EPDF"),
                     partition_check(49, 16, 4, "(49,4,3,2,0)-DPDF", "(49,4,3,3,2)-EPDF"),
                     partition_check(49, 24, 4, "(49,6,2,1,0)-DPDF", "(49,6,2,4,2)-EPDF"),
                     partition_check(49, 12, 4, "none", "none"),
                 });
               }});

  s.push_back({"partition examples over GF(17), GF(64), GF(25), GF(37)", [] {
                 return first_failure({
                     partition_check(17, 4, 2, "(17,2,4,1,2)-DPDF", "(17,2,4,2)-EDF"),
                     partition_check(64, 9, 3, "(64,3,7,6,0)-DPDF", "(64,3,7,2,6)-EPDF"),
                     partition_check(25, 12, 3, "(25,4,2,1,0)-DPDF", "(25,4,2,2)-EDF"),
                     partition_check(37, 4, 2, "(37,2,9,4)-DDF", "(37,2,9,4,5)-EPDF"),
                 });
               }});

  s.push_back({"squares closed forms", [] {
                 return first_failure({
                     squares_check(squares_closed_form(make_prime_power(13, 1), 4),
                                   "(13,2,3,0,2)-DPDF", "(13,2,3,2,1)-EPDF"),
                     squares_check(squares_closed_form(make_prime_power(13, 1), 6),
                                   "(13,3,2,0,1)-DPDF", "(13,3,2,2)-EDF"),
                     squares_check(squares_closed_form(make_prime_power(41, 1), 8),
                                   "(41,4,5,2)-DDF", "(41,4,5,7,8)-EPDF"),
                     squares_check(squares_closed_form_half(make_prime_power(5, 2)),
                                   "(25,6,2,1,0)-DPDF", "(25,6,2,4,6)-EPDF"),
                     partition_check(41, 8, 2, "(41,4,5,2)-DDF", "(41,4,5,7,8)-EPDF"),
                 });
               }});

  s.push_back({"quadratic representations", [] {
                 const auto r3 = quadratic_representations(make_prime_power(5, 2), QuadForm::E3);
                 const auto r8 = quadratic_representations(make_prime_power(41, 1), QuadForm::E8);
                 const auto r4 = quadratic_representations(make_prime_power(13, 1), QuadForm::E4);
                 std::ostringstream os;
                 os << r3.c << ' ' << r3.d << ' ' << r8.x << ' ' << r8.y << ' ' << r8.a << ' '
                    << r8.b << ' ' << r4.s << ' ' << r4.t;
                 return expect("c d x |y| a |b| s |t|", os.str(), "10 0 5 2 -3 4 -3 2");
               }});

  s.push_back({"uniform cyclotomy over GF(729) and GF(16)", [] {
                 const auto f729 = FieldContext::make(3, 6);
                 const auto four = uniform_classes(f729, 4, {0, 1});
                 const auto fourteen = uniform_classes(f729, 14, {0, 1});
                 const auto f16 = FieldContext::make(2, 4);
                 return first_failure({
                     verified(four),
                     expect("e=4 internal", four.find(PredictionRole::Internal)->expected.to_string(),
                            "(729,2,182,97,84)-DPDF"),
                     expect("e=4 external", four.find(PredictionRole::External)->expected.to_string(),
                            "(729,2,182,84,98)-EPDF"),
                     verified(fourteen),
                     expect("e=14 class", fourteen.find(PredictionRole::Member)->expected.to_string(),
                            "(729,52,25,2)-PDS"),
                     expect("16/5 union",
                            uniform_classes(f16, 5, {0, 1}).find(PredictionRole::Union)->observed->to_string(),
                            "(16,6,2)-DS"),
                     expect("16/3 union",
                            uniform_classes(f16, 3, {0, 1}).find(PredictionRole::Union)->observed->to_string(),
                            "(16,10,6)-DS"),
                 });
               }});

  s.push_back({"uniform unions over GF(49)", [] {
                 const auto r = uniform_unions(FieldContext::make(7, 2), 8, {{0, 2}, {5, 6}, {4, 7}});
                 return first_failure({
                     verified(r),
                     expect("member", r.find(PredictionRole::Member)->observed->to_string(),
                            "(49,12,5,2)-PDS"),
                     expect("internal", r.find(PredictionRole::Internal)->observed->to_string(),
                            "(49,3,12,9,6)-DPDF"),
                     expect("external", r.find(PredictionRole::External)->observed->to_string(),
                            "(49,3,12,16,24)-EPDF"),
                 });
               }});

  s.push_back({"subfield cosets in GF(49)", [] {
                 const auto field = FieldContext::make(7, 2);
                 const auto three = subfield_family(field, 1, 3);
                 const auto seven = subfield_family(field, 1, 7);
                 return first_failure({
                     verified(three), verified(seven),
                     expect("u=3", three.find(PredictionRole::Internal)->expected.to_string(),
                            "(49,3,6,5,0)-DPDF"),
                     expect("u=7", seven.find(PredictionRole::External)->expected.to_string(),
                            "(49,7,6,30,42)-EPDF"),
                 });
               }});

  s.push_back({"C_0^e criteria", [] {
                 return first_failure({
                     verified(c0e_construction(FieldContext::make(5, 2), 3)),
                     expect("25/3", c0e_pds_criterion(make_prime_power(5, 2), 3).classification.to_string(),
                            "(25,8,3,2)-PDS"),
                     expect("49/4", c0e_pds_criterion(make_prime_power(7, 2), 4).classification.to_string(),
                            "(49,12,5,2)-PDS"),
                     expect("13/4", c0e_pds_criterion(make_prime_power(13, 1), 4).classification.to_string(),
                            "none"),
                 });
               }});

  s.push_back({"structural checks up to 200", [] {
                 for (const auto& spec : prime_powers_up_to(200)) {
                   if (spec.q < 3) continue;
                   const auto field = FieldContext::make(spec.p, spec.n);
                   for (auto e : divisors(spec.q - 1)) {
                     if (e < 2) continue;
                     for (const auto& c : structural_checks(field, static_cast<std::uint32_t>(e)).checks)
                       if (!c.passed) return "q=" + std::to_string(spec.q) + " " + c.name + ": " + c.detail;
                   }
                 }
                 return std::string{};
               }});

  s.push_back({"closed-form cyclotomic numbers up to 500", [] {
                 for (const auto& spec : prime_powers_up_to(500)) {
                   FieldPtr field;
                   for (std::uint32_t e : {3u, 4u, 6u, 8u}) {
                     if ((spec.q - 1) % e != 0) continue;
                     if (e == 6 && ((spec.q - 1) / 6) % 2 == 1) continue;
                     if (!field) field = FieldContext::make(spec.p, spec.n);
                     const CyclotomicContext cc(field, e);
                     const auto cf = closed_form_cyclo_numbers(cc);
                     for (std::uint32_t i = 0; i < e; ++i)
                       if (cf.column()[i] != static_cast<std::int64_t>(cc.cyclotomic_number(i, 0)))
                         return "q=" + std::to_string(spec.q) + " e=" + std::to_string(e) +
                                " index " + std::to_string(i);
                   }
                 }
                 return std::string{};
               }});

  s.push_back({"uniform tables", [] {
                 for (std::uint64_t q : {16, 49, 64, 81, 121, 169, 625, 729}) {
                   const auto field = FieldContext::of_order(q);
                   for (auto e : divisors(q - 1)) {
                     if (e < 3) continue;
                     const auto params = uniformity(field->spec(), static_cast<std::uint32_t>(e));
                     if (!params) continue;
                     if (!uniform_table_matches(*params, CyclotomicContext(field, static_cast<std::uint32_t>(e))))
                       return "q=" + std::to_string(q) + " e=" + std::to_string(e);
                   }
                 }
                 return std::string{};
               }});

  s.push_back({"catalog rows up to 121", [] {
                 const auto rows = run_catalog({});
                 const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, const char*>> cited = {
                     {13, 6, 2, "(13,3,2,0,1)-DPDF"}, {13, 6, 2, "(13,3,2,2)-EDF"},
                     {49, 16, 4, "(49,4,3,2,0)-DPDF"}, {49, 16, 4, "(49,4,3,3,2)-EPDF"},
                     {25, 12, 3, "(25,4,2,1,0)-DPDF"}, {25, 12, 3, "(25,4,2,2)-EDF"},
                     {37, 4, 2, "(37,2,9,4)-DDF"},     {37, 4, 2, "(37,2,9,4,5)-EPDF"},
                     {17, 4, 2, "(17,2,4,2)-EDF"},     {17, 4, 2, "(17,2,4,1,2)-DPDF"},
                     {41, 8, 2, "(41,4,5,2)-DDF"},     {41, 8, 2, "(41,4,5,7,8)-EPDF"},
                     {64, 9, 3, "(64,3,7,6,0)-DPDF"},  {64, 9, 3, "(64,3,7,2,6)-EPDF"},
                 };
                 for (const auto& [q, e, eps, cls] : cited)
                   if (!contains(rows, q, e, eps, cls)) return std::string("missing row ") + cls;
                 for (const auto& r : rows)
                   if (!r.verified || !reverify_row(r)) return "row q=" + std::to_string(r.q) + " unverified";
                 return std::string{};
               }});

  return s;
}

}  // namespace dpdf
