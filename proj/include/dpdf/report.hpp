#pragma once

#include <string>

#include "dpdf/catalog.hpp"

namespace dpdf {

std::string field_info_report(const FieldContext& field);

/// Internal and external classifications; with a field, each set's coarsest
/// decomposition into cyclotomic classes.
std::string classify_report(const SetFamily& family, const FieldContext* field = nullptr);

std::string cyclo_report(const CyclotomicContext& cc, bool closed_form);

std::string construction_report(const ConstructionResult& result);
std::string partition_report(const PartitionOutcome& outcome);
std::string squares_report(const PartitionPrediction& prediction);
std::string suite_report(const SuiteReport& report);

/// e, indices with alpha^e D = D for the smallest such e, i.e. D as a union of
/// classes C_i^e. e = q-1 means the stabiliser is trivial.
struct Decomposition {
  std::uint32_t e = 0;
  std::vector<std::uint32_t> indices;
};
Decomposition cyclotomic_decomposition(const FieldContext& field, std::span<const Element> set);

}  // namespace dpdf
