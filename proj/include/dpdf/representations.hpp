#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dpdf/cyclotomy.hpp"
#include "dpdf/prime_power.hpp"

namespace dpdf {

enum class QuadForm { E3, E4, E6, E8 };

/// Quadratic-form data for q, normalised by the usual congruences:
///   E3: 4q = c^2 + 27 d^2, c = 1 mod 3
///   E4: q = s^2 + t^2, s = 1 mod 4
///   E6: q = s^2 + 3 t^2, s = 1 mod 3
///   E8: q = x^2 + 4 y^2, x = 1 mod 4, and q = a^2 + 2 b^2, a = 1 mod 4
/// The second variable of each pair is stored as its absolute value until a
/// sign is fixed, which the matching *_resolved flag records.
struct QuadraticRepresentations {
  QuadForm form = QuadForm::E3;
  std::uint64_t q = 0;
  std::int64_t c = 0, d = 0;
  std::int64_t s = 0, t = 0;
  std::int64_t x = 0, y = 0, a = 0, b = 0;
  bool d_resolved = false;
  bool t_resolved = false;
  bool y_resolved = false;
  bool b_resolved = false;
};

/// Exhaustive search over |first variable| <= ceil(sqrt(4q)). Throws NoRepresentation
/// when the congruence precondition fails or the normalised solution is not unique.
QuadraticRepresentations quadratic_representations(const PrimePowerSpec& spec, QuadForm form);

QuadForm form_for(std::uint32_t e);  // UnsupportedE for e outside {3,4,6,8}

struct ClosedFormCyclo {
  std::uint32_t e = 0;
  QuadraticRepresentations reps;  // signs set by the resolved candidate
  /// Every sign choice, each a column (0,0), (1,0), ..., (e-1,0).
  std::vector<std::vector<std::int64_t>> candidates;
  std::size_t resolved = 0;  // index into candidates
  /// Full (i,j) matrix for e = 3, row-major; empty otherwise.
  std::vector<std::int64_t> matrix;

  const std::vector<std::int64_t>& column() const { return candidates[resolved]; }
};

/// Closed forms for (i,0)_e. Signs are fixed by agreement with the
/// direct count of (1,0)_e; remaining ties go to the first candidate that
/// agrees at the lowest index where the candidates differ.
/// Throws UnsupportedE (e outside {3,4,6,8}, or e = 6 with f odd), NoRepresentation.
ClosedFormCyclo closed_form_cyclo_numbers(const CyclotomicContext& cc);

}  // namespace dpdf
