#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpdf/group.hpp"

namespace dpdf {

/// Multiplicity of every group element in a difference multiset, indexed by
/// element code. Entry 0 stays zero for difference multisets of disjoint sets.
struct FrequencyVector {
  std::vector<std::uint64_t> counts;

  explicit FrequencyVector(std::uint32_t group_size = 0) : counts(group_size, 0) {}

  std::uint64_t operator[](Element g) const { return counts[g.code]; }
  std::uint64_t total() const noexcept;
  FrequencyVector& operator+=(const FrequencyVector& other);
  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
};

/// Ordered sets over a shared group. Each set is stored sorted without repeats.
class SetFamily {
 public:
  /// Throws InvalidArgument when an element lies outside the group.
  SetFamily(std::shared_ptr<const AbelianGroup> group, std::vector<std::vector<Element>> sets);

  const AbelianGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const AbelianGroup>& group_ptr() const noexcept { return group_; }
  const std::vector<std::vector<Element>>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::vector<Element>& operator[](std::size_t i) const { return sets_[i]; }

  /// Union of all sets, sorted.
  std::vector<Element> support() const;
  bool pairwise_disjoint() const;

 private:
  std::shared_ptr<const AbelianGroup> group_;
  std::vector<std::vector<Element>> sets_;
};

enum class FamilyKind : std::uint8_t { None, DS, PDS, DDF, EDF, DPDF, EPDF, SEDF, PEDF };

std::string_view to_string(FamilyKind kind) noexcept;

enum class DiffMode { Internal, External };

/// Outcome of a classifier. `kind` is the most specific label; `labels` holds a
/// bit for every label that applies (a DS also carries PDS, a DDF also DPDF).
struct FamilyClassification {
  FamilyKind kind = FamilyKind::None;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t k = 0;  // 0 when set sizes differ (relative classification only)
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  bool proper = false;
  std::uint32_t labels = 0;
  bool sedf = false;
  bool pedf = false;

  bool holds(FamilyKind other) const noexcept {
    return (labels >> static_cast<unsigned>(other)) & 1u;
  }
  /// Parameter-tuple form such as "(13,2,3,0,2)-DPDF"; "none" for None.
  std::string to_string() const;

  friend bool operator==(const FamilyClassification&, const FamilyClassification&) = default;
};

constexpr std::uint32_t label_bit(FamilyKind kind) noexcept {
  return 1u << static_cast<unsigned>(kind);
}

FrequencyVector delta_internal(const AbelianGroup& group, std::span<const Element> d);
/// Throws NotDisjoint.
FrequencyVector delta_external(const AbelianGroup& group, std::span<const Element> d1,
                               std::span<const Element> d2);

/// Throw NotDisjoint.
FrequencyVector int_family(const SetFamily& fam);
FrequencyVector ext_family(const SetFamily& fam);

/// DS, PDS or None for a single nonempty set (0 may belong to it).
FamilyClassification classify_set(const AbelianGroup& group, std::span<const Element> d);

/// Throws NotDisjoint, ZeroInSet, UnequalSizes.
FamilyClassification classify_family(const SetFamily& fam, DiffMode mode);

/// Two-frequency test against T and G* \ T. Set sizes may differ.
/// Throws ZeroInT, NotDisjoint, ZeroInSet.
FamilyClassification classify_relative(const SetFamily& fam, std::span<const Element> t,
                                       DiffMode mode);

/// Per-set lambdas when, for every i, the union over j != i of Delta(D_i, D_j)
/// is constant on G* (a generalised SEDF); nullopt otherwise.
std::optional<std::vector<std::int64_t>> gsedf_lambdas(const SetFamily& fam);
/// Common lambda of an SEDF (equal sizes, equal per-set lambdas).
std::optional<std::int64_t> sedf_lambda(const SetFamily& fam);

struct PedfClass {
  std::uint32_t size = 0;   // k_h
  std::uint32_t count = 0;  // c_h
  std::int64_t lambda = 0;  // lambda_h
  friend bool operator==(const PedfClass&, const PedfClass&) = default;
};

/// Size classes (ascending k_h) of a PEDF, or nullopt when some class fails.
std::optional<std::vector<PedfClass>> pedf_parameters(const SetFamily& fam);

}  // namespace dpdf
