#include "dpdf/catalog.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "dpdf/error.hpp"
#include "json.hpp"

namespace dpdf {
namespace {

CatalogRow make_row(const PrimePowerSpec& spec, const PartitionPrediction& pred,
                    const FamilyClassification& cls, TheoremId theorem, bool verified) {
  CatalogRow row;
  row.q = static_cast<std::uint32_t>(spec.q);
  row.p = static_cast<std::uint32_t>(spec.p);
  row.n = spec.n;
  row.e = pred.e;
  row.epsilon = pred.epsilon;
  row.f = pred.f;
  row.kind = cls.kind;
  row.m = cls.m;
  row.k = cls.k;
  row.lambda = cls.lambda;
  row.mu = cls.mu;
  row.proper = cls.proper;
  row.theorem = theorem;
  row.verified = verified;
  return row;
}

bool row_matches(const CatalogRow& row, const FamilyClassification& c) {
  return c.kind == row.kind && c.m == row.m && c.k == row.k && c.lambda == row.lambda &&
         c.mu == row.mu && c.proper == row.proper && c.n == row.q;
}

bool is_supported_epsilon(std::uint32_t eps) {
  return eps == 2 || eps == 3 || eps == 4 || eps == 6 || eps == 8;
}

}  // namespace

std::vector<CatalogRow> run_catalog(const CatalogOptions& opts) {
  if (opts.q_max > kCatalogBound) {
    fail(ErrorCode::BoundExceeded, "q_max " + std::to_string(opts.q_max) + " exceeds " +
                                       std::to_string(kCatalogBound));
  }
  const std::set<std::uint32_t> epsilons(opts.epsilons.begin(), opts.epsilons.end());
  for (auto eps : epsilons)
    if (!is_supported_epsilon(eps)) {
      fail(ErrorCode::UnsupportedE, "epsilon " + std::to_string(eps) + " outside {2,3,4,6,8}");
    }

  std::vector<CatalogRow> rows;
  for (const auto& spec : prime_powers_up_to(opts.q_max)) {
    if (spec.q < 3) continue;
    FieldPtr field;
    const auto order = static_cast<std::uint32_t>(spec.q - 1);
    for (auto eps : epsilons) {
      if (order % eps != 0) continue;
      const auto crit = c0e_pds_criterion(spec, eps);
      const auto kind = crit.classification.kind;
      if (kind != FamilyKind::DS && !crit.classification.proper) continue;
      if (!field) field = FieldContext::make(spec.p, spec.n);
      for (std::uint32_t e = 2 * eps; e <= order; e += eps) {
        if (order % e != 0) continue;
        const auto out = partition_prediction(field, e, eps);
        const auto& pred = out.prediction;
        if (!same_parameters(pred.c0_epsilon, crit.classification)) {
          fail(ErrorCode::VerificationMismatch,
               "C_0^" + std::to_string(eps) + " over GF(" + std::to_string(spec.q) + "): " +
                   crit.classification.to_string() + " vs " + pred.c0_epsilon.to_string());
        }
        if (!out.construction.verified) {
          fail(ErrorCode::VerificationMismatch,
               "row q=" + std::to_string(spec.q) + " e=" + std::to_string(e) +
                   " epsilon=" + std::to_string(eps) + " failed the oracle");
        }
        const auto theorem = out.construction.theorem;
        if (pred.kind == PartitionCase::NotADpdf) {
          if (opts.include_negative) rows.push_back(make_row(spec, pred, pred.internal, theorem, true));
          continue;
        }
        rows.push_back(make_row(spec, pred, pred.internal, theorem, true));
        rows.push_back(make_row(spec, pred, pred.external, theorem, true));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CatalogRow& a, const CatalogRow& b) {
    return std::tie(a.q, a.epsilon, a.e) < std::tie(b.q, b.epsilon, b.e);
  });
  if (opts.reverify) {
    for (const auto& row : rows)
      if (!reverify_row(row)) {
        fail(ErrorCode::VerificationMismatch, "row q=" + std::to_string(row.q) + " e=" +
                                                  std::to_string(row.e) + " did not reverify");
      }
  }
  return rows;
}

bool reverify_row(const CatalogRow& row) {
  const auto field = FieldContext::make(row.p, row.n);
  const CyclotomicContext cc(field, row.e);
  std::vector<std::vector<Element>> sets;
  for (std::uint32_t j = 0; j < row.e / row.epsilon; ++j)
    sets.push_back(cc.cyclotomic_class(j * row.epsilon));
  const SetFamily fam(field->additive_ptr(), std::move(sets));
  switch (row.kind) {
    case FamilyKind::DDF:
    case FamilyKind::DPDF: return row_matches(row, classify_family(fam, DiffMode::Internal));
    case FamilyKind::EDF:
    case FamilyKind::EPDF: return row_matches(row, classify_family(fam, DiffMode::External));
    case FamilyKind::None:
      return row_matches(row, classify_family(fam, DiffMode::Internal)) &&
             row_matches(row, classify_family(fam, DiffMode::External));
    default: return false;
  }
}

void write_csv(std::ostream& os, std::span<const CatalogRow> rows) {
  os << kCatalogCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.q << ',' << r.p << ',' << r.n << ',' << r.e << ',' << r.epsilon << ',' << r.f << ','
       << to_string(r.kind) << ',' << r.m << ',' << r.k << ',' << r.lambda << ',' << r.mu << ','
       << (r.proper ? "true" : "false") << ',' << to_string(r.theorem) << ','
       << (r.verified ? "true" : "false") << '\n';
  }
}

void write_json(std::ostream& os, std::span<const CatalogRow> rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["p"] = r.p;
    j["n"] = r.n;
    j["e"] = r.e;
    j["epsilon"] = r.epsilon;
    j["f"] = r.f;
    j["kind"] = std::string(to_string(r.kind));
    j["m"] = r.m;
    j["k"] = r.k;
    j["lambda"] = r.lambda;
    j["mu"] = r.mu;
    j["proper"] = r.proper;
    j["theorem"] = std::string(to_string(r.theorem));
    j["verified"] = r.verified;
    out.push_back(std::move(j));
  }
  os << out.dump(2) << '\n';
}

std::size_t SuiteReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.passed; }));
}

SuiteReport run_checks(std::span<const SuiteCheck> checks) {
  SuiteReport report;
  for (const auto& c : checks) {
    SuiteOutcome o;
    o.name = c.name;
    try {
      o.detail = c.run();
      o.passed = o.detail.empty();
    } catch (const std::exception& ex) {
      o.detail = std::string("exception: ") + ex.what();
    }
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

SuiteReport verify_suite(std::span<const SuiteCheck> extra) {
  auto checks = default_suite();
  checks.insert(checks.end(), extra.begin(), extra.end());
  return run_checks(checks);
}

}  // namespace dpdf
