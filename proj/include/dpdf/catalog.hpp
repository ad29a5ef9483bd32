#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dpdf/constructions.hpp"

namespace dpdf {

inline constexpr std::uint64_t kCatalogBound = 10000;

struct CatalogRow {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t e = 0;
  std::uint32_t epsilon = 0;
  std::uint32_t f = 0;
  FamilyKind kind = FamilyKind::None;
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  bool proper = false;
  TheoremId theorem = TheoremId::PartitionPds;
  bool verified = false;

  friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

struct CatalogOptions {
  std::uint64_t q_max = 121;
  std::vector<std::uint32_t> epsilons{2, 3, 4, 6, 8};
  bool include_negative = false;
  bool reverify = false;
};

/// Rows sorted by (q, epsilon, e), an internal row before its external row.
/// Throws BoundExceeded (q_max above kCatalogBound), VerificationMismatch.
std::vector<CatalogRow> run_catalog(const CatalogOptions& opts);

/// Rebuilds the family of a row and classifies it directly.
bool reverify_row(const CatalogRow& row);

inline constexpr const char* kCatalogCsvHeader =
    "q,p,n,e,epsilon,f,kind,m,k,lambda,mu,proper,theorem,verified";

void write_csv(std::ostream& os, std::span<const CatalogRow> rows);
void write_json(std::ostream& os, std::span<const CatalogRow> rows);

struct SuiteCheck {
  std::string name;
  /// Empty on success, otherwise a mismatch description.
  std::function<std::string()> run;
};

struct SuiteOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteOutcome> outcomes;
  std::size_t failures() const noexcept;
};

/// Published examples and module invariants at their stated bounds.
std::vector<SuiteCheck> default_suite();
/// Runs the default suite followed by `extra`. Exceptions count as failures.
SuiteReport verify_suite(std::span<const SuiteCheck> extra = {});
SuiteReport run_checks(std::span<const SuiteCheck> checks);

}  // namespace dpdf
