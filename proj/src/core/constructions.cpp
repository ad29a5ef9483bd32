#include "dpdf/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dpdf/error.hpp"

namespace dpdf {
namespace {

using i64 = std::int64_t;

i64 exact(i64 num, i64 den, const char* what) {
  if (den == 0 || num % den != 0) {
    fail(ErrorCode::Internal, std::string("non-integral parameter in ") + what);
  }
  return num / den;
}

FamilyKind uniform_of(FamilyKind partial) {
  switch (partial) {
    case FamilyKind::PDS: return FamilyKind::DS;
    case FamilyKind::DPDF: return FamilyKind::DDF;
    case FamilyKind::EPDF: return FamilyKind::EDF;
    default: return partial;
  }
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<Element> class_union(const CyclotomicContext& cc,
                                 const std::vector<std::uint32_t>& indices) {
  std::vector<Element> out;
  for (auto i : indices) {
    auto c = cc.cyclotomic_class(i);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

void finish(ConstructionResult& r, const BuildOptions& opts) { verify(r, opts.verify_limit); }

Prediction make_prediction(PredictionRole role, FamilyClassification expected,
                           std::size_t member = 0) {
  Prediction p;
  p.role = role;
  p.member = member;
  p.expected = std::move(expected);
  return p;
}

const UniformParams require_uniform(const FieldContext& field, std::uint32_t e) {
  auto params = uniformity(field.spec(), e);
  if (!params) {
    fail(ErrorCode::NotUniform, "cyclotomy of order " + std::to_string(e) + " over GF(" +
                                    std::to_string(field.q()) + ") is not uniform");
  }
  return *params;
}

void check_indices(const std::vector<std::uint32_t>& indices, std::uint32_t e) {
  std::set<std::uint32_t> seen;
  for (auto i : indices) {
    if (i >= e) fail(ErrorCode::BadIndexSet, "class index " + std::to_string(i) + " >= e");
    if (!seen.insert(i).second) {
      fail(ErrorCode::BadIndexSet, "repeated class index " + std::to_string(i));
    }
  }
}

// C_0^epsilon as a DS, proper PDS or neither, from cyclotomic numbers of order epsilon.
FamilyClassification coarse_set_from_numbers(FieldPtr field, std::uint32_t epsilon) {
  const CyclotomicContext coarse(field, epsilon);
  const auto matrix = coarse.cyclotomic_matrix();
  const i64 lambda = static_cast<i64>(matrix[0]);
  const i64 mu = static_cast<i64>(matrix[epsilon]);
  const std::uint32_t k = (field->q() - 1) / epsilon;
  for (std::uint32_t i = 1; i < epsilon; ++i) {
    if (static_cast<i64>(matrix[std::size_t{i} * epsilon]) != mu) {
      FamilyClassification none;
      none.n = field->q();
      none.m = 1;
      none.k = k;
      return none;
    }
  }
  return predicted(FamilyKind::PDS, field->q(), 1, k, lambda, mu);
}

PartitionCase case_of(const FamilyClassification& internal, const FamilyClassification& external) {
  const bool ddf = internal.kind == FamilyKind::DDF;
  const bool edf = external.kind == FamilyKind::EDF;
  if (internal.kind == FamilyKind::None) return PartitionCase::NotADpdf;
  if (ddf && edf) return PartitionCase::DdfEdf;
  if (ddf) return PartitionCase::DdfEpdf;
  if (edf) return PartitionCase::EdfDpdf;
  return PartitionCase::ProperBoth;
}

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::PdsCollection: return "pds-collection";
    case TheoremId::UniformClasses: return "uniform";
    case TheoremId::UniformUnions: return "uniform-unions";
    case TheoremId::PartitionDs: return "partition-ds";
    case TheoremId::PartitionPds: return "partition-pds";
    case TheoremId::SquaresClosedForm: return "squares";
    case TheoremId::Subfield: return "subfield";
    case TheoremId::C0ePds: return "c0e-pds";
  }
  return "unknown";
}

std::string_view to_string(PredictionRole role) noexcept {
  switch (role) {
    case PredictionRole::Internal: return "internal";
    case PredictionRole::External: return "external";
    case PredictionRole::Member: return "member";
    case PredictionRole::Union: return "union";
  }
  return "unknown";
}

std::string_view to_string(PartitionCase c) noexcept {
  switch (c) {
    case PartitionCase::DdfEdf: return "DDF+EDF";
    case PartitionCase::DdfEpdf: return "DDF+EPDF";
    case PartitionCase::EdfDpdf: return "EDF+DPDF";
    case PartitionCase::ProperBoth: return "proper-both";
    case PartitionCase::NotADpdf: return "not-a-DPDF";
    case PartitionCase::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

const Prediction* ConstructionResult::find(PredictionRole role) const noexcept {
  for (const auto& p : predictions)
    if (p.role == role) return &p;
  return nullptr;
}

bool same_parameters(const FamilyClassification& a, const FamilyClassification& b) noexcept {
  return a.kind == b.kind && a.n == b.n && a.m == b.m && a.k == b.k && a.lambda == b.lambda &&
         a.mu == b.mu && a.proper == b.proper;
}

FamilyClassification predicted(FamilyKind partial, std::uint32_t n, std::uint32_t m,
                               std::uint32_t k, i64 lambda, i64 mu, bool covers_nonzero) {
  FamilyClassification c;
  c.n = n;
  c.m = m;
  c.k = k;
  if (partial == FamilyKind::None) return c;
  const FamilyKind uniform = uniform_of(partial);
  c.lambda = lambda;
  if (covers_nonzero || lambda == mu) {
    c.kind = uniform;
    c.mu = lambda;
    c.labels = label_bit(uniform) | label_bit(partial);
  } else {
    c.kind = partial;
    c.mu = mu;
    c.proper = true;
    c.labels = label_bit(partial);
  }
  return c;
}

bool verify(ConstructionResult& result, std::uint64_t verify_limit) {
  const auto& g = result.family.group();
  if (g.size() > verify_limit) {
    result.verified = false;
    result.notes.push_back("verification skipped: group order " + std::to_string(g.size()) +
                           " exceeds " + std::to_string(verify_limit));
    return false;
  }
  bool all = true;
  for (auto& p : result.predictions) {
    switch (p.role) {
      case PredictionRole::Internal:
        p.observed = classify_family(result.family, DiffMode::Internal);
        break;
      case PredictionRole::External:
        p.observed = classify_family(result.family, DiffMode::External);
        break;
      case PredictionRole::Member:
        p.observed = classify_set(g, result.family[p.member]);
        break;
      case PredictionRole::Union: {
        const auto s = result.family.support();
        p.observed = classify_set(g, s);
        break;
      }
    }
    p.matches = same_parameters(p.expected, *p.observed);
    all = all && p.matches;
  }
  result.verified = all;
  return all;
}

ConstructionResult from_pds_collection(std::shared_ptr<const AbelianGroup> group,
                                       std::vector<std::vector<Element>> sets,
                                       const BuildOptions& opts) {
  SetFamily family(std::move(group), std::move(sets));
  const auto& g = family.group();
  if (family.size() == 0) fail(ErrorCode::InvalidArgument, "empty collection");
  if (!family.pairwise_disjoint()) fail(ErrorCode::NotDisjoint, "sets are not pairwise disjoint");

  std::optional<FamilyClassification> common;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) fail(ErrorCode::NotPDS, "set " + std::to_string(i) + " is empty");
    if (family[i].front() == Element{0}) fail(ErrorCode::ZeroInSet, "0 lies in a set");
    const auto c = classify_set(g, family[i]);
    if (c.kind == FamilyKind::None) {
      fail(ErrorCode::NotPDS, "set " + std::to_string(i) + " is not a PDS");
    }
    if (common && (c.k != common->k || c.lambda != common->lambda || c.mu != common->mu)) {
      fail(ErrorCode::ParameterMismatch, "set " + std::to_string(i) + " is a " + c.to_string() +
                                             ", set 0 a " + common->to_string());
    }
    if (!common) common = c;
  }

  const auto n = g.size();
  const auto m = static_cast<std::uint32_t>(family.size());
  const i64 lambda = common->lambda;
  const i64 mu = common->mu;
  const auto support = family.support();
  const bool covers = support.size() + 1 == n;
  const i64 int_lambda = lambda + (m - 1) * mu;
  const i64 int_mu = m * mu;

  ConstructionResult r{family, TheoremId::PdsCollection, {}, {}, false};
  for (std::size_t i = 0; i < m; ++i) r.predictions.push_back(make_prediction(PredictionRole::Member, *common, i));
  r.predictions.push_back(make_prediction(
      PredictionRole::Internal,
      predicted(FamilyKind::DPDF, n, m, common->k, int_lambda, int_mu, covers)));

  // The union S: from a complement when one qualifies, otherwise directly.
  const auto k_s = static_cast<i64>(support.size());
  std::vector<std::uint8_t> in_s(n, 0);
  for (auto x : support) in_s[x.code] = 1;
  std::vector<Element> complement;  // G \ S
  for (std::uint32_t x = 0; x < n; ++x)
    if (!in_s[x]) complement.push_back(Element{x});
  std::optional<std::pair<i64, i64>> union_params;
  const auto comp = classify_set(g, complement);
  if (comp.kind != FamilyKind::None) {
    // G \ S is a (n, n-|S|, l', m')-PDS, so S has lambda = m' - n + 2|S|, mu = l' - n + 2|S|.
    const i64 shift = 2 * k_s - static_cast<i64>(n);
    union_params = std::pair{comp.mu + shift, comp.lambda + shift};
    r.notes.push_back(comp.kind == FamilyKind::DS ? "complement G\\S is a difference set"
                                                  : "complement G\\S is a proper PDS");
  } else {
    std::vector<Element> punctured(complement.begin() + 1, complement.end());
    if (!punctured.empty() && classify_set(g, punctured).proper) {
      r.notes.push_back("complement G*\\S is a proper PDS");
    }
    const auto direct = classify_set(g, support);
    if (direct.kind != FamilyKind::None) {
      union_params = std::pair{direct.lambda, direct.mu};
      r.notes.push_back("union classified directly");
    }
  }
  if (union_params) {
    const auto [sigma, chi] = *union_params;
    r.predictions.push_back(make_prediction(
        PredictionRole::Union,
        predicted(FamilyKind::PDS, n, 1, static_cast<std::uint32_t>(k_s), sigma, chi, covers)));
    const i64 chi_eff = covers ? sigma : chi;
    r.predictions.push_back(make_prediction(
        PredictionRole::External, predicted(FamilyKind::EPDF, n, m, common->k, sigma - int_lambda,
                                            chi_eff - int_mu, covers)));
  } else {
    r.notes.push_back("union is not a PDS; no external prediction");
  }
  finish(r, opts);
  return r;
}

ConstructionResult uniform_classes(FieldPtr field, std::uint32_t e,
                                   const std::vector<std::uint32_t>& indices,
                                   const BuildOptions& opts) {
  const auto params = require_uniform(*field, e);
  const auto u = static_cast<i64>(indices.size());
  if (u < 2 || u > static_cast<i64>(e) - 1) {
    fail(ErrorCode::BadIndexSet, "index set size must lie in [2, e-1]");
  }
  check_indices(indices, e);

  const CyclotomicContext cc(field, e);
  std::vector<std::vector<Element>> sets;
  for (auto i : indices) sets.push_back(cc.cyclotomic_class(i));
  const i64 eta = params.eta;
  const i64 ee = e;
  const auto n = field->q();
  const auto f = cc.f();
  const auto m = static_cast<std::uint32_t>(u);

  ConstructionResult r{SetFamily(field->additive_ptr(), std::move(sets)),
                       TheoremId::UniformClasses, {}, {}, false};
  const auto member =
      predicted(FamilyKind::PDS, n, 1, f, eta * eta - (ee - 3) * eta - 1, eta * eta + eta);
  for (std::size_t i = 0; i < indices.size(); ++i)
    r.predictions.push_back(make_prediction(PredictionRole::Member, member, i));
  r.predictions.push_back(make_prediction(
      PredictionRole::Internal, predicted(FamilyKind::DPDF, n, m, f,
                                          u * eta * eta + (u + 2 - ee) * eta - 1,
                                          u * (eta * eta + eta))));
  r.predictions.push_back(make_prediction(
      PredictionRole::External, predicted(FamilyKind::EPDF, n, m, f,
                                          u * (u - 1) * eta * eta + 2 * (u - 1) * eta,
                                          u * (u - 1) * eta * eta)));
  r.predictions.push_back(make_prediction(
      PredictionRole::Union,
      predicted(FamilyKind::PDS, n, 1, m * f, u * u * eta * eta + (3 * u - ee) * eta - 1,
                u * u * eta * eta + u * eta)));
  r.notes.push_back("eta = " + std::to_string(eta) + ", classes {" + join(indices) + "}");
  if (eta * (2 * u - ee) == 1) r.notes.push_back("union degenerates to a difference set");
  finish(r, opts);
  return r;
}

ConstructionResult uniform_unions(FieldPtr field, std::uint32_t e,
                                  const std::vector<std::vector<std::uint32_t>>& index_sets,
                                  const BuildOptions& opts) {
  const auto params = require_uniform(*field, e);
  if (index_sets.empty()) fail(ErrorCode::BadIndexSet, "no index sets");
  const auto u = static_cast<i64>(index_sets.front().size());
  if (u == 0) fail(ErrorCode::BadIndexSet, "empty index set");
  std::set<std::uint32_t> seen;
  for (const auto& s : index_sets) {
    if (static_cast<i64>(s.size()) != u) fail(ErrorCode::BadIndexSet, "index sets differ in size");
    check_indices(s, e);
    for (auto i : s)
      if (!seen.insert(i).second) {
        fail(ErrorCode::OverlappingIndexSets, "class index " + std::to_string(i) + " is shared");
      }
  }

  const CyclotomicContext cc(field, e);
  std::vector<std::vector<Element>> sets;
  for (const auto& s : index_sets) sets.push_back(class_union(cc, s));
  const i64 eta = params.eta;
  const i64 ee = e;
  const auto w = static_cast<i64>(index_sets.size());
  const auto n = field->q();
  const auto k = static_cast<std::uint32_t>(u * cc.f());
  const auto m = static_cast<std::uint32_t>(w);
  const bool covers = w * u == ee;

  const i64 pds_lambda = u * u * eta * eta + (3 * u - ee) * eta - 1;
  const i64 pds_mu = u * u * eta * eta + u * eta;

  ConstructionResult r{SetFamily(field->additive_ptr(), std::move(sets)),
                       TheoremId::UniformUnions, {}, {}, false};
  const auto member = predicted(FamilyKind::PDS, n, 1, k, pds_lambda, pds_mu, u == ee);
  for (std::size_t i = 0; i < index_sets.size(); ++i)
    r.predictions.push_back(make_prediction(PredictionRole::Member, member, i));
  r.predictions.push_back(make_prediction(
      PredictionRole::Internal,
      predicted(FamilyKind::DPDF, n, m, k, pds_lambda + (w - 1) * pds_mu, w * pds_mu, covers)));
  if (w >= 2) {
    const i64 wu = w * u;
    r.predictions.push_back(make_prediction(
        PredictionRole::External,
        predicted(FamilyKind::EPDF, n, m, k, w * (w - 1) * u * u * eta * eta + 2 * (w - 1) * u * eta,
                  w * (w - 1) * u * u * eta * eta, covers)));
    r.predictions.push_back(make_prediction(
        PredictionRole::Union,
        predicted(FamilyKind::PDS, n, 1, static_cast<std::uint32_t>(wu * cc.f()),
                  wu * wu * eta * eta + (3 * wu - ee) * eta - 1, wu * wu * eta * eta + wu * eta,
                  covers)));
  }
  r.notes.push_back("eta = " + std::to_string(eta));
  if (!covers && eta * (2 * u - ee) == 1) {
    r.notes.push_back("each D_a is a difference set, so the family is a DDF");
  }
  if (!covers && w >= 2) r.notes.push_back("the union is proper, so the family is not an EDF");
  finish(r, opts);
  return r;
}

PartitionOutcome partition_prediction(FieldPtr field, std::uint32_t e, std::uint32_t epsilon,
                                      const BuildOptions& opts) {
  if (epsilon < 2 || epsilon >= e || e % epsilon != 0) {
    fail(ErrorCode::BadEpsilon, "epsilon = " + std::to_string(epsilon) +
                                    " must be a proper divisor of e = " + std::to_string(e) +
                                    " with epsilon >= 2");
  }
  const CyclotomicContext cc(field, e);
  const auto n = field->q();
  const auto f = cc.f();
  const auto m = e / epsilon;

  PartitionPrediction pred;
  pred.q = n;
  pred.e = e;
  pred.epsilon = epsilon;
  pred.f = f;
  pred.c0_epsilon = coarse_set_from_numbers(field, epsilon);

  std::vector<std::vector<Element>> sets;
  for (std::uint32_t j = 0; j < m; ++j) sets.push_back(cc.cyclotomic_class(j * epsilon));
  const bool is_ds = pred.c0_epsilon.kind == FamilyKind::DS;
  ConstructionResult r{SetFamily(field->additive_ptr(), std::move(sets)),
                       is_ds ? TheoremId::PartitionDs : TheoremId::PartitionPds, {}, {}, false};

  const auto none = predicted(FamilyKind::None, n, m, f, 0, 0);
  pred.internal = none;
  pred.external = none;
  if (!is_ds && !pred.c0_epsilon.proper) {
    pred.kind = PartitionCase::NotApplicable;
    r.notes.push_back("C_0^" + std::to_string(epsilon) + " is neither a DS nor a proper PDS");
    r.verified = false;
    return {pred, r};
  }

  pred.phi = phi_profile(cc, epsilon);
  const auto& phi = pred.phi->phi;
  pred.kappa = static_cast<i64>(phi[1]) - static_cast<i64>(phi[0]);
  bool equal_tail = true;
  for (std::uint32_t i = 2; i < epsilon; ++i) equal_tail = equal_tail && phi[i] == phi[1];

  const i64 ee = e, eps = epsilon, ff = f;
  const i64 lambda = pred.c0_epsilon.lambda;
  const i64 mu = pred.c0_epsilon.mu;
  if (!equal_tail) {
    pred.kind = PartitionCase::NotADpdf;
    r.notes.push_back("phi_i differ for i >= 1");
  } else if (is_ds) {
    pred.internal = predicted(FamilyKind::DPDF, n, m, f, exact(ff - 1, eps, "DDF"), 0, true);
    pred.external = predicted(FamilyKind::EPDF, n, m, f,
                              exact((ee - eps) * ff, eps * eps, "EDF"), 0, true);
  } else {
    const i64 phi0 = static_cast<i64>(phi[0]);
    if (pred.kappa == 0) {
      const i64 ddf = exact(ff - 1, eps, "DDF");
      pred.internal = predicted(FamilyKind::DPDF, n, m, f, ddf, ddf);
      pred.external = predicted(FamilyKind::EPDF, n, m, f, lambda - ddf, mu - ddf);
    } else if (pred.kappa == mu - lambda) {
      const i64 edf = exact((ee - eps) * ff, eps * eps, "EDF");
      pred.external = predicted(FamilyKind::EPDF, n, m, f, edf, edf);
      pred.internal = predicted(FamilyKind::DPDF, n, m, f, lambda - edf, mu - edf);
    } else {
      pred.internal = predicted(FamilyKind::DPDF, n, m, f, phi0, phi0 + pred.kappa);
      pred.external = predicted(FamilyKind::EPDF, n, m, f, lambda - phi0, mu - phi0 - pred.kappa);
    }
  }
  if (pred.kind != PartitionCase::NotADpdf) pred.kind = case_of(pred.internal, pred.external);

  r.predictions.push_back(make_prediction(PredictionRole::Internal, pred.internal));
  r.predictions.push_back(make_prediction(PredictionRole::External, pred.external));
  r.predictions.push_back(make_prediction(PredictionRole::Union, pred.c0_epsilon));
  r.notes.push_back("kappa = " + std::to_string(pred.kappa));
  finish(r, opts);
  return {pred, r};
}

PartitionPrediction squares_closed_form(const PrimePowerSpec& spec, std::uint32_t e) {
  if (e != 4 && e != 6 && e != 8) {
    fail(ErrorCode::UnsupportedE, "squares closed form needs e in {4,6,8}");
  }
  if (spec.p == 2 || (spec.q - 1) % e != 0) {
    fail(ErrorCode::BadDivisor, "e = " + std::to_string(e) + " must divide q-1 for odd q");
  }
  const i64 q = static_cast<i64>(spec.q);
  const auto f = static_cast<std::uint32_t>((spec.q - 1) / e);
  const auto m = e / 2;
  const auto n = static_cast<std::uint32_t>(spec.q);

  PartitionPrediction out;
  out.q = n;
  out.e = e;
  out.epsilon = 2;
  out.f = f;
  if (q % 4 == 3) {
    out.c0_epsilon = predicted(FamilyKind::PDS, n, 1, (n - 1) / 2, (q - 3) / 4, (q - 3) / 4);
  } else {
    out.c0_epsilon = predicted(FamilyKind::PDS, n, 1, (n - 1) / 2, (q - 5) / 4, (q - 1) / 4);
  }

  auto set = [&](i64 il, i64 im, i64 el, i64 em, i64 den) {
    out.internal = predicted(FamilyKind::DPDF, n, m, f, exact(il, den, "DPDF"), exact(im, den, "DPDF"));
    out.external = predicted(FamilyKind::EPDF, n, m, f, exact(el, den, "EPDF"), exact(em, den, "EPDF"));
  };

  if (e == 4) {
    const auto s = quadratic_representations(spec, QuadForm::E4).s;
    if (f % 2 == 0) {
      set(q - 7 - 2 * s, q - 3 + 2 * s, q - 3 + 2 * s, q + 1 - 2 * s, 8);
    } else {
      set(q - 7 + 2 * s, q - 3 - 2 * s, q - 3 - 2 * s, q + 1 + 2 * s, 8);
    }
  } else if (e == 6) {
    if (f % 2 == 1) {
      out.internal = predicted(FamilyKind::DPDF, n, m, f, (f - 1) / 2, 0, true);
      out.external = predicted(FamilyKind::EPDF, n, m, f, f, 0, true);
    } else {
      const auto s = quadratic_representations(spec, QuadForm::E6).s;
      out.internal = predicted(FamilyKind::DPDF, n, m, f, exact(q - 9 - 4 * s, 12, "DPDF"),
                               exact(q - 5 + 4 * s, 12, "DPDF"));
      out.external = predicted(FamilyKind::EPDF, n, m, f, exact(q - 3 + 2 * s, 6, "EPDF"),
                               exact(q + 1 - 2 * s, 6, "EPDF"));
    }
  } else {
    const auto reps = quadratic_representations(spec, QuadForm::E8);
    const i64 g = 2 * reps.x + 4 * reps.a;
    set(q - 11 - g, q - 7 + g, 3 * q - 9 + g, 3 * q + 3 - g, 16);
  }
  out.kind = case_of(out.internal, out.external);
  return out;
}

PartitionPrediction squares_closed_form_half(const PrimePowerSpec& spec) {
  if (spec.p == 2 || spec.q % 4 != 1) {
    fail(ErrorCode::NotApplicable, "the f = 2 branch needs q = 1 mod 4");
  }
  const i64 q = static_cast<i64>(spec.q);
  const auto n = static_cast<std::uint32_t>(spec.q);
  const auto m = static_cast<std::uint32_t>((q - 1) / 4);
  PartitionPrediction out;
  out.q = n;
  out.e = static_cast<std::uint32_t>((q - 1) / 2);
  out.epsilon = 2;
  out.f = 2;
  out.c0_epsilon = predicted(FamilyKind::PDS, n, 1, (n - 1) / 2, (q - 5) / 4, (q - 1) / 4);
  if (q % 8 == 1) {
    out.internal = predicted(FamilyKind::DPDF, n, m, 2, 1, 0);
    out.external = predicted(FamilyKind::EPDF, n, m, 2, (q - 9) / 4, (q - 1) / 4);
  } else {
    out.internal = predicted(FamilyKind::DPDF, n, m, 2, 0, 1);
    out.external = predicted(FamilyKind::EPDF, n, m, 2, (q - 5) / 4, (q - 5) / 4);
  }
  out.kind = case_of(out.internal, out.external);
  return out;
}

ConstructionResult subfield_family(FieldPtr field, std::uint32_t r, std::uint32_t u,
                                   std::optional<std::vector<std::uint32_t>> indices,
                                   const BuildOptions& opts) {
  const auto beta = field->degree();
  if (r == 0 || r >= beta || beta % r != 0) {
    fail(ErrorCode::NotASubfieldIndex,
         "r = " + std::to_string(r) + " is not a proper divisor of " + std::to_string(beta));
  }
  const i64 pr = static_cast<i64>(ipow(field->p(), r));
  const i64 q = field->q();
  const auto e = static_cast<std::uint32_t>((q - 1) / (pr - 1));
  if (u < 2 || u > e - 1) fail(ErrorCode::BadIndexSet, "u must lie in [2, e-1]");
  std::vector<std::uint32_t> idx;
  if (indices) {
    idx = *indices;
    if (idx.size() != u) fail(ErrorCode::BadIndexSet, "index set size differs from u");
    check_indices(idx, e);
  } else {
    for (std::uint32_t i = 0; i < u; ++i) idx.push_back(i);
  }

  const CyclotomicContext cc(field, e);
  std::vector<std::vector<Element>> sets;
  for (auto i : idx) sets.push_back(cc.cyclotomic_class(i));
  const auto n = field->q();
  const auto k = static_cast<std::uint32_t>(pr - 1);
  ConstructionResult res{SetFamily(field->additive_ptr(), std::move(sets)), TheoremId::Subfield,
                         {}, {}, false};
  const auto member = predicted(FamilyKind::PDS, n, 1, k, pr - 2, 0);
  for (std::size_t i = 0; i < idx.size(); ++i)
    res.predictions.push_back(make_prediction(PredictionRole::Member, member, i));
  res.predictions.push_back(
      make_prediction(PredictionRole::Internal, predicted(FamilyKind::DPDF, n, u, k, pr - 2, 0)));
  if (u == e - 1) {
    res.predictions.push_back(make_prediction(
        PredictionRole::External, predicted(FamilyKind::EPDF, n, u, k, q - 3 * pr + 2, q - pr)));
  }
  res.notes.push_back("cosets {" + join(idx) + "} of GF(" + std::to_string(pr) + ")*");
  finish(res, opts);
  return res;
}

C0eCriterion c0e_pds_criterion(const PrimePowerSpec& spec, std::uint32_t e) {
  if (e != 2 && e != 3 && e != 4 && e != 6 && e != 8) {
    fail(ErrorCode::UnsupportedE, "criterion covers e in {2,3,4,6,8}");
  }
  if (e < 2 || (spec.q - 1) % e != 0) {
    fail(ErrorCode::BadDivisor, "e = " + std::to_string(e) + " does not divide q-1");
  }
  C0eCriterion out;
  out.q = static_cast<std::uint32_t>(spec.q);
  out.e = e;
  const i64 q = static_cast<i64>(spec.q);
  const auto n = out.q;
  const auto k = static_cast<std::uint32_t>((q - 1) / e);
  out.classification = predicted(FamilyKind::None, n, 1, k, 0, 0);
  auto pds = [&](i64 lambda, i64 mu) {
    out.classification = predicted(FamilyKind::PDS, n, 1, k, lambda, mu);
  };

  if (k == 1) {
    pds(0, 0);
    out.reason = "f = 1: C_0^e is the singleton {1}";
    return out;
  }
  switch (e) {
    case 2:
      if (q % 4 == 3) {
        pds((q - 3) / 4, (q - 3) / 4);
        out.reason = "q = 3 mod 4: the squares form a difference set";
      } else {
        pds((q - 5) / 4, (q - 1) / 4);
        out.reason = "q = 1 mod 4: the squares form a Paley PDS";
      }
      break;
    case 3: {
      const auto reps = quadratic_representations(spec, QuadForm::E3);
      out.reps = reps;
      if (reps.d == 0) {
        pds(exact(q - 8 + reps.c, 9, "e=3 PDS"), exact(2 * q - 4 - reps.c, 18, "e=3 PDS"));
        out.reason = "d = 0";
      } else {
        out.reason = "d = " + std::to_string(reps.d) + " is nonzero";
      }
      break;
    }
    case 4: {
      const auto reps = quadratic_representations(spec, QuadForm::E4);
      out.reps = reps;
      if (reps.t == 0) {
        pds(exact(q - 11 - 6 * reps.s, 16, "e=4 PDS"), exact(q - 3 + 2 * reps.s, 16, "e=4 PDS"));
        out.reason = "t = 0";
      } else if (reps.s == 1 && reps.t % 4 == 2) {
        pds(exact(q - 5, 16, "e=4 DS"), exact(q - 5, 16, "e=4 DS"));
        out.reason = "q = 1 + 4t^2 with t odd";
      } else {
        out.reason = "t = " + std::to_string(reps.t) + " is nonzero";
      }
      break;
    }
    case 6: {
      const auto reps = quadratic_representations(spec, QuadForm::E6);
      out.reps = reps;
      if (reps.t == 0) {
        pds(exact(q - 17 - 20 * reps.s, 36, "e=6 PDS"), exact(q - 5 + 4 * reps.s, 36, "e=6 PDS"));
        out.reason = "t = 0";
      } else {
        out.reason = "t = " + std::to_string(reps.t) + " is nonzero";
      }
      break;
    }
    case 8: {
      const auto reps = quadratic_representations(spec, QuadForm::E8);
      out.reps = reps;
      if (reps.x == reps.a && reps.y == 0 && reps.b == 0) {
        pds(exact(q - 23 - 42 * reps.x, 64, "e=8 PDS"), exact(q - 7 + 6 * reps.x, 64, "e=8 PDS"));
        out.reason = "x = a and y = b = 0";
      } else if (reps.x == -3 && reps.y % 8 == 4 && reps.a == 1 && reps.b % 4 == 2) {
        pds(exact(q - 9, 64, "e=8 DS"), exact(q - 9, 64, "e=8 DS"));
        out.reason = "q = 9 + 64y^2 = 1 + 8b^2 with y, b odd";
      } else {
        out.reason = "x = " + std::to_string(reps.x) + ", y = " + std::to_string(reps.y) +
                     ", a = " + std::to_string(reps.a) + ", b = " + std::to_string(reps.b);
      }
      break;
    }
    default: break;
  }
  return out;
}

ConstructionResult c0e_construction(FieldPtr field, std::uint32_t e, const BuildOptions& opts) {
  const auto crit = c0e_pds_criterion(field->spec(), e);
  const CyclotomicContext cc(field, e);
  ConstructionResult r{SetFamily(field->additive_ptr(), {cc.cyclotomic_class(0)}),
                       TheoremId::C0ePds, {}, {crit.reason}, false};
  r.predictions.push_back(make_prediction(PredictionRole::Member, crit.classification, 0));
  finish(r, opts);
  return r;
}

bool StructuralReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

StructuralReport structural_checks(FieldPtr field, std::uint32_t e) {
  const CyclotomicContext cc(field, e);
  const auto q = field->q();
  const auto f = cc.f();
  StructuralReport rep;
  rep.q = q;
  rep.e = e;
  auto add = [&](std::string name, bool passed, std::string detail) {
    rep.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const auto c0 = cc.cyclotomic_class(0);
  const auto cls = classify_set(field->additive(), c0);
  if (cls.proper) {
    if (e > f) {
      std::vector<std::uint8_t> in(q, 0);
      in[0] = 1;
      for (auto x : c0) in[x.code] = 1;
      bool closed = true;
      for (auto x : c0)
        for (auto y : c0) closed = closed && in[field->add(x, y).code];
      add("e > f: C_0^e with 0 is a subfield", closed, cls.to_string());
      add("e > f: q is not prime", field->degree() > 1, cls.to_string());
    } else if (e < f) {
      std::vector<std::uint8_t> in(q, 0);
      in[0] = 1;
      for (auto x : c0) in[x.code] = 1;
      bool closed = true;
      for (auto x : c0)
        for (auto y : c0) closed = closed && in[field->add(x, y).code];
      add("e < f: C_0^e with 0 is not a subfield", !closed, cls.to_string());
      add("e < f: mu >= 1", cls.mu >= 1, cls.to_string());
    } else {
      add("e = f only for f = 2", f == 2, cls.to_string());
    }
  }

  for (std::uint32_t eps = f + 1; eps < e; ++eps) {
    if (e % eps != 0) continue;
    const auto coarse = classify_set(field->additive(), cc.coarse_class(eps, 0));
    if (coarse.kind == FamilyKind::None) continue;
    std::vector<std::vector<Element>> sets;
    for (std::uint32_t j = 0; j < e / eps; ++j) sets.push_back(cc.cyclotomic_class(j * eps));
    const SetFamily fam(field->additive_ptr(), std::move(sets));
    const auto internal = classify_family(fam, DiffMode::Internal);
    if (!internal.holds(FamilyKind::DPDF)) continue;
    const std::string tag = "epsilon = " + std::to_string(eps) + " > f: ";
    add(tag + "DPDF(f-1, 0)", internal.lambda == static_cast<i64>(f) - 1 && internal.mu == 0,
        internal.to_string());
    const auto external = classify_family(fam, DiffMode::External);
    add(tag + "EPDF(lambda-f+1, mu)",
        external.lambda == coarse.lambda - static_cast<i64>(f) + 1 && external.mu == coarse.mu,
        external.to_string());
  }
  return rep;
}

}  // namespace dpdf
