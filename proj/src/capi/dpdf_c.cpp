#include "dpdf/dpdf.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "dpdf/catalog.hpp"
#include "dpdf/error.hpp"
#include "dpdf/report.hpp"

struct dpdf_field {
  dpdf::FieldPtr ptr;
};

struct dpdf_family {
  dpdf::SetFamily family;
  dpdf::FieldPtr field;  // null for plain groups
};

struct dpdf_report {
  std::string text;
  std::size_t items = 0;
  std::size_t failures = 0;
};

namespace {

thread_local std::string last_error;

static_assert(static_cast<int>(dpdf::ErrorCode::NotPrime) + 1 == DPDF_E_NOT_PRIME);
static_assert(static_cast<int>(dpdf::ErrorCode::VerificationMismatch) + 1 ==
              DPDF_E_VERIFICATION_MISMATCH);
static_assert(static_cast<int>(dpdf::ErrorCode::Internal) + 1 == DPDF_E_INTERNAL);
static_assert(static_cast<int>(dpdf::FamilyKind::PEDF) == DPDF_KIND_PEDF);

template <typename F>
dpdf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return DPDF_OK;
  } catch (const dpdf::Error& e) {
    last_error = e.what();
    return static_cast<dpdf_status>(static_cast<int>(e.code()) + 1);
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DPDF_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DPDF_E_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) dpdf::fail(dpdf::ErrorCode::InvalidArgument, what);
}

dpdf_classification to_c(const dpdf::FamilyClassification& c) {
  dpdf_classification out{};
  out.kind = static_cast<dpdf_kind>(c.kind);
  out.n = c.n;
  out.m = c.m;
  out.k = c.k;
  out.lambda = c.lambda;
  out.mu = c.mu;
  out.proper = c.proper;
  out.labels = c.labels;
  out.sedf = c.sedf;
  out.pedf = c.pedf;
  return out;
}

dpdf::FamilyClassification from_c(const dpdf_classification& c) {
  dpdf::FamilyClassification out;
  out.kind = static_cast<dpdf::FamilyKind>(c.kind);
  out.n = c.n;
  out.m = c.m;
  out.k = c.k;
  out.lambda = c.lambda;
  out.mu = c.mu;
  out.proper = c.proper != 0;
  out.labels = c.labels;
  out.sedf = c.sedf != 0;
  out.pedf = c.pedf != 0;
  return out;
}

std::vector<std::vector<dpdf::Element>> unpack_sets(const uint32_t* elements,
                                                    const size_t* sizes, size_t count) {
  require(count == 0 || sizes, "set sizes missing");
  std::vector<std::vector<dpdf::Element>> sets(count);
  std::size_t at = 0;
  for (size_t i = 0; i < count; ++i) {
    require(sizes[i] == 0 || elements, "elements missing");
    for (size_t j = 0; j < sizes[i]; ++j) sets[i].push_back(dpdf::Element{elements[at++]});
  }
  return sets;
}

std::vector<std::vector<uint32_t>> unpack_indices(const uint32_t* values, const size_t* sizes,
                                                  size_t count) {
  require(count == 0 || sizes, "index set sizes missing");
  std::vector<std::vector<uint32_t>> out(count);
  std::size_t at = 0;
  for (size_t i = 0; i < count; ++i) {
    require(sizes[i] == 0 || values, "index values missing");
    for (size_t j = 0; j < sizes[i]; ++j) out[i].push_back(values[at++]);
  }
  return out;
}

std::size_t mismatches(const dpdf::ConstructionResult& r) {
  std::size_t n = 0;
  for (const auto& p : r.predictions)
    if (p.observed && !p.matches) ++n;
  return n;
}

dpdf_report* finish_construction(const dpdf::ConstructionResult& r, std::string text) {
  auto rep = std::make_unique<dpdf_report>();
  rep->text = std::move(text);
  rep->items = r.predictions.size();
  rep->failures = mismatches(r);
  return rep.release();
}

dpdf_report* construct(const dpdf_construct_args& a) {
  using namespace dpdf;
  const auto sets = unpack_indices(a.index_sets, a.set_sizes, a.set_count);
  switch (a.theorem) {
    case DPDF_THEOREM_PDS_COLLECTION: {
      require(a.family != nullptr, "pds-collection needs a family");
      const auto r = from_pds_collection(a.family->family.group_ptr(), a.family->family.sets());
      return finish_construction(r, construction_report(r));
    }
    case DPDF_THEOREM_UNIFORM: {
      const auto field = FieldContext::of_order(a.q);
      std::vector<uint32_t> idx;
      if (!sets.empty()) {
        require(sets.size() == 1, "uniform takes a single index set");
        idx = sets[0];
      } else {
        for (uint32_t i = 0; i < a.u; ++i) idx.push_back(i);
      }
      const auto r = uniform_classes(field, a.e, idx);
      return finish_construction(r, construction_report(r));
    }
    case DPDF_THEOREM_UNIFORM_UNIONS: {
      const auto r = uniform_unions(FieldContext::of_order(a.q), a.e, sets);
      return finish_construction(r, construction_report(r));
    }
    case DPDF_THEOREM_PARTITION: {
      const auto out = partition_prediction(FieldContext::of_order(a.q), a.e, a.epsilon);
      return finish_construction(out.construction, partition_report(out));
    }
    case DPDF_THEOREM_SQUARES: {
      const auto spec = as_prime_power(a.q);
      if (!spec) fail(ErrorCode::NotPrime, std::to_string(a.q) + " is not a prime power");
      const bool half = a.e != 4 && a.e != 6 && a.e != 8 && 2ull * a.e + 1 == a.q;
      const auto closed = half ? squares_closed_form_half(*spec) : squares_closed_form(*spec, a.e);
      const auto direct = partition_prediction(FieldContext::of_order(a.q), closed.e, 2);
      const bool agree = same_parameters(closed.internal, direct.prediction.internal) &&
                         same_parameters(closed.external, direct.prediction.external);
      std::string text = squares_report(closed);
      text += std::string("partition prediction ") + (agree ? "agrees" : "DISAGREES") + "\n";
      text += construction_report(direct.construction);
      auto rep = finish_construction(direct.construction, std::move(text));
      if (!agree) ++rep->failures;
      return rep;
    }
    case DPDF_THEOREM_SUBFIELD: {
      std::optional<std::vector<uint32_t>> idx;
      if (!sets.empty()) {
        require(sets.size() == 1, "subfield takes a single index set");
        idx = sets[0];
      }
      const auto r = subfield_family(FieldContext::of_order(a.q), a.r, a.u, idx);
      return finish_construction(r, construction_report(r));
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown theorem");
}

}  // namespace

extern "C" {

const char* dpdf_last_error(void) { return last_error.c_str(); }

const char* dpdf_status_name(dpdf_status status) {
  if (status == DPDF_OK) return "Ok";
  if (status < DPDF_OK || status > DPDF_E_INTERNAL) return "Unknown";
  return dpdf::to_string(static_cast<dpdf::ErrorCode>(static_cast<int>(status) - 1)).data();
}

const char* dpdf_kind_name(dpdf_kind kind) {
  if (kind < DPDF_KIND_NONE || kind > DPDF_KIND_PEDF) return "unknown";
  return dpdf::to_string(static_cast<dpdf::FamilyKind>(kind)).data();
}

dpdf_status dpdf_field_new(uint64_t p, uint32_t n, dpdf_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new dpdf_field{dpdf::FieldContext::make(p, n)};
  });
}

dpdf_status dpdf_field_of_order(uint64_t q, dpdf_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new dpdf_field{dpdf::FieldContext::of_order(q)};
  });
}

void dpdf_field_free(dpdf_field* field) { delete field; }

uint32_t dpdf_field_order(const dpdf_field* field) { return field ? field->ptr->q() : 0; }
uint32_t dpdf_field_characteristic(const dpdf_field* field) { return field ? field->ptr->p() : 0; }
uint32_t dpdf_field_degree(const dpdf_field* field) { return field ? field->ptr->degree() : 0; }
uint32_t dpdf_field_primitive(const dpdf_field* field) {
  return field ? field->ptr->primitive().code : 0;
}

dpdf_status dpdf_field_arith(const dpdf_field* field, dpdf_field_op op, uint32_t x, int64_t y,
                             uint32_t* out) {
  return guarded([&] {
    require(field && out, "null argument");
    require(op >= DPDF_OP_ADD && op <= DPDF_OP_POW, "unknown field operation");
    *out = dpdf::field_arith(*field->ptr, static_cast<dpdf::FieldOp>(op), dpdf::Element{x}, y).code;
  });
}

dpdf_status dpdf_field_dlog(const dpdf_field* field, uint32_t x, uint32_t* out) {
  return guarded([&] {
    require(field && out, "null argument");
    require(field->ptr->contains(dpdf::Element{x}), "element outside the field");
    *out = field->ptr->dlog(dpdf::Element{x});
  });
}

dpdf_status dpdf_group_encode(const uint32_t* orders, size_t order_count,
                              const uint32_t* components, uint32_t* out) {
  return guarded([&] {
    require(out && (order_count == 0 || (orders && components)), "null argument");
    dpdf::AbelianGroup g(std::vector<uint32_t>(orders, orders + order_count));
    *out = g.encode(std::span<const uint32_t>(components, order_count)).code;
  });
}

dpdf_status dpdf_family_in_group(const uint32_t* orders, size_t order_count,
                                 const uint32_t* elements, const size_t* set_sizes,
                                 size_t set_count, dpdf_family** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(order_count == 0 || orders, "orders missing");
    auto g = dpdf::make_group(std::vector<uint32_t>(orders, orders + order_count));
    *out = new dpdf_family{dpdf::SetFamily(g, unpack_sets(elements, set_sizes, set_count)), nullptr};
  });
}

dpdf_status dpdf_family_in_field(const dpdf_field* field, const uint32_t* elements,
                                 const size_t* set_sizes, size_t set_count, dpdf_family** out) {
  return guarded([&] {
    require(field && out, "null argument");
    *out = new dpdf_family{
        dpdf::SetFamily(field->ptr->additive_ptr(), unpack_sets(elements, set_sizes, set_count)),
        field->ptr};
  });
}

void dpdf_family_free(dpdf_family* family) { delete family; }

dpdf_status dpdf_classify(const dpdf_family* family, dpdf_mode mode, dpdf_classification* out) {
  return guarded([&] {
    require(family && out, "null argument");
    *out = to_c(dpdf::classify_family(
        family->family, mode == DPDF_EXTERNAL ? dpdf::DiffMode::External : dpdf::DiffMode::Internal));
  });
}

dpdf_status dpdf_classify_set(const dpdf_family* family, size_t index, dpdf_classification* out) {
  return guarded([&] {
    require(family && out, "null argument");
    if (index >= family->family.size()) {
      dpdf::fail(dpdf::ErrorCode::IndexOutOfRange, "set index out of range");
    }
    *out = to_c(dpdf::classify_set(family->family.group(), family->family[index]));
  });
}

size_t dpdf_classification_format(const dpdf_classification* c, char* buffer, size_t capacity) {
  if (!c) return 0;
  const auto s = from_c(*c).to_string();
  if (buffer && capacity > 0) {
    const size_t n = std::min(capacity - 1, s.size());
    std::memcpy(buffer, s.data(), n);
    buffer[n] = '\0';
  }
  return s.size();
}

dpdf_status dpdf_cyclotomic_number(const dpdf_field* field, uint32_t e, uint32_t i, uint32_t j,
                                   uint64_t* out) {
  return guarded([&] {
    require(field && out, "null argument");
    *out = dpdf::CyclotomicContext(field->ptr, e).cyclotomic_number(i, j);
  });
}

dpdf_status dpdf_partition(const dpdf_field* field, uint32_t e, uint32_t epsilon,
                           dpdf_classification* internal, dpdf_classification* external,
                           int* verified) {
  return guarded([&] {
    require(field && internal && external, "null argument");
    const auto out = dpdf::partition_prediction(field->ptr, e, epsilon);
    if (out.prediction.kind == dpdf::PartitionCase::NotApplicable) {
      dpdf::fail(dpdf::ErrorCode::NotApplicable, "C_0^epsilon is neither a DS nor a proper PDS");
    }
    *internal = to_c(out.prediction.internal);
    *external = to_c(out.prediction.external);
    if (verified) *verified = out.construction.verified;
  });
}

dpdf_status dpdf_report_field_info(uint64_t p, uint32_t n, dpdf_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto field = dpdf::FieldContext::make(p, n);
    *out = new dpdf_report{dpdf::field_info_report(*field), 1, 0};
  });
}

dpdf_status dpdf_report_classify(const dpdf_family* family, dpdf_report** out) {
  return guarded([&] {
    require(family && out, "null argument");
    *out = new dpdf_report{dpdf::classify_report(family->family, family->field.get()),
                           family->family.size(), 0};
  });
}

dpdf_status dpdf_report_cyclo(uint64_t q, uint32_t e, int closed_form, dpdf_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const dpdf::CyclotomicContext cc(dpdf::FieldContext::of_order(q), e);
    *out = new dpdf_report{dpdf::cyclo_report(cc, closed_form != 0), e, 0};
  });
}

dpdf_status dpdf_construct(const dpdf_construct_args* args, dpdf_report** out) {
  return guarded([&] {
    require(args && out, "null argument");
    *out = construct(*args);
  });
}

dpdf_status dpdf_catalog(const dpdf_catalog_args* args, dpdf_report** out) {
  return guarded([&] {
    require(args && out, "null argument");
    dpdf::CatalogOptions opts;
    opts.q_max = args->q_max;
    if (args->epsilon_count > 0) {
      require(args->epsilons != nullptr, "epsilons missing");
      opts.epsilons.assign(args->epsilons, args->epsilons + args->epsilon_count);
    }
    opts.include_negative = args->include_negative != 0;
    opts.reverify = args->reverify != 0;
    const auto rows = dpdf::run_catalog(opts);
    std::ostringstream os;
    if (args->format == DPDF_FORMAT_JSON) {
      dpdf::write_json(os, rows);
    } else {
      dpdf::write_csv(os, rows);
    }
    *out = new dpdf_report{os.str(), rows.size(), 0};
  });
}

dpdf_status dpdf_verify_suite(dpdf_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto report = dpdf::verify_suite();
    *out = new dpdf_report{dpdf::suite_report(report), report.outcomes.size(), report.failures()};
  });
}

const char* dpdf_report_text(const dpdf_report* report) {
  return report ? report->text.c_str() : "";
}

size_t dpdf_report_items(const dpdf_report* report) { return report ? report->items : 0; }

size_t dpdf_report_failures(const dpdf_report* report) { return report ? report->failures : 0; }

void dpdf_report_free(dpdf_report* report) { delete report; }

}  // extern "C"
