#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpdf/cyclotomy.hpp"
#include "dpdf/diffsets.hpp"
#include "dpdf/representations.hpp"
#include "dpdf/uniform.hpp"

namespace dpdf {

enum class TheoremId {
  PdsCollection,
  UniformClasses,
  UniformUnions,
  PartitionDs,
  PartitionPds,
  SquaresClosedForm,
  Subfield,
  C0ePds,
};

std::string_view to_string(TheoremId id) noexcept;

enum class PredictionRole { Internal, External, Member, Union };

std::string_view to_string(PredictionRole role) noexcept;

struct Prediction {
  PredictionRole role = PredictionRole::Internal;
  std::size_t member = 0;  // set index for Member predictions
  FamilyClassification expected;
  std::optional<FamilyClassification> observed;
  bool matches = false;
};

struct ConstructionResult {
  SetFamily family;
  TheoremId theorem = TheoremId::PdsCollection;
  std::vector<Prediction> predictions;
  std::vector<std::string> notes;
  bool verified = false;

  const Prediction* find(PredictionRole role) const noexcept;
};

struct BuildOptions {
  /// Families over groups larger than this are returned unverified.
  std::uint64_t verify_limit = 10000;
};

/// Parameter-wise equality: kind, n, m, k, lambda, mu and proper.
bool same_parameters(const FamilyClassification& a, const FamilyClassification& b) noexcept;

/// A classification assembled from theorem parameters. Equal frequencies, or an
/// S that covers G*, normalise to the uniform kind (DS, DDF or EDF).
FamilyClassification predicted(FamilyKind partial, std::uint32_t n, std::uint32_t m,
                               std::uint32_t k, std::int64_t lambda, std::int64_t mu,
                               bool covers_nonzero = false);

/// Runs the oracle for every prediction, records observations and sets verified.
/// Returns verified; a group above the limit leaves verified false with a note.
bool verify(ConstructionResult& result, std::uint64_t verify_limit = 10000);

/// Disjoint sets sharing one (n,k,lambda,mu)-PDS parameter set.
/// Throws NotPDS, ParameterMismatch, NotDisjoint, ZeroInSet.
ConstructionResult from_pds_collection(std::shared_ptr<const AbelianGroup> group,
                                       std::vector<std::vector<Element>> sets,
                                       const BuildOptions& opts = {});

/// {C_i : i in I} under uniform cyclotomy. Throws NotUniform, BadIndexSet.
ConstructionResult uniform_classes(FieldPtr field, std::uint32_t e,
                                   const std::vector<std::uint32_t>& indices,
                                   const BuildOptions& opts = {});

/// {D_1..D_w}, D_a the union of C_i for i in I_a. Throws NotUniform, BadIndexSet,
/// OverlappingIndexSets.
ConstructionResult uniform_unions(FieldPtr field, std::uint32_t e,
                                  const std::vector<std::vector<std::uint32_t>>& index_sets,
                                  const BuildOptions& opts = {});

enum class PartitionCase { DdfEdf, DdfEpdf, EdfDpdf, ProperBoth, NotADpdf, NotApplicable };

std::string_view to_string(PartitionCase c) noexcept;

struct PartitionPrediction {
  std::uint32_t q = 0;
  std::uint32_t e = 0;
  std::uint32_t epsilon = 0;
  std::uint32_t f = 0;
  FamilyClassification c0_epsilon;  // C_0^epsilon from cyclotomic numbers of order epsilon
  std::optional<PhiProfile> phi;
  std::int64_t kappa = 0;
  PartitionCase kind = PartitionCase::NotApplicable;
  FamilyClassification internal;
  FamilyClassification external;
};

struct PartitionOutcome {
  PartitionPrediction prediction;
  ConstructionResult construction;  // {C_0^e, C_eps^e, ..., C_(e-eps)^e}
};

/// Throws BadEpsilon unless 2 <= epsilon < e and epsilon | e. A C_0^epsilon that
/// is neither a DS nor a proper PDS yields the NotApplicable case.
PartitionOutcome partition_prediction(FieldPtr field, std::uint32_t e, std::uint32_t epsilon,
                                      const BuildOptions& opts = {});

/// Partition of the squares evaluated from quadratic representations alone, for
/// e in {4,6,8}. Throws UnsupportedE, NoRepresentation, BadDivisor.
PartitionPrediction squares_closed_form(const PrimePowerSpec& spec, std::uint32_t e);
/// The f = 2 branch (e = (q-1)/2, q = 1 mod 4). Throws NotApplicable otherwise.
PartitionPrediction squares_closed_form_half(const PrimePowerSpec& spec);

/// u cosets of the punctured subfield GF(p^r) inside GF(p^beta).
/// Default indices are 0..u-1. Throws NotASubfieldIndex, BadIndexSet.
ConstructionResult subfield_family(FieldPtr field, std::uint32_t r, std::uint32_t u,
                                   std::optional<std::vector<std::uint32_t>> indices = std::nullopt,
                                   const BuildOptions& opts = {});

struct C0eCriterion {
  std::uint32_t q = 0;
  std::uint32_t e = 0;
  FamilyClassification classification;  // kind None when C_0^e is not a PDS
  std::string reason;
  std::optional<QuadraticRepresentations> reps;
};

/// Decides DS / PDS / neither for C_0^e from the representation conditions.
/// Throws UnsupportedE (e outside {2,3,4,6,8}), BadDivisor.
C0eCriterion c0e_pds_criterion(const PrimePowerSpec& spec, std::uint32_t e);
/// The criterion packaged as a one-set construction and checked by the oracle.
ConstructionResult c0e_construction(FieldPtr field, std::uint32_t e, const BuildOptions& opts = {});

struct StructuralCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct StructuralReport {
  std::uint32_t q = 0;
  std::uint32_t e = 0;
  std::vector<StructuralCheck> checks;
  bool ok() const noexcept;
};

/// The e > f / e = f / e < f consequences for C_0^e and the epsilon > f form of
/// partition DPDFs, checked by the oracle. Reports and never throws for a valid e.
StructuralReport structural_checks(FieldPtr field, std::uint32_t e);

}  // namespace dpdf
