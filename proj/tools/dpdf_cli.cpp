#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpdf/dpdf.h"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReportHandle {
  dpdf_report* ptr = nullptr;
  ~ReportHandle() { dpdf_report_free(ptr); }
};

struct FamilyHandle {
  dpdf_family* ptr = nullptr;
  ~FamilyHandle() { dpdf_family_free(ptr); }
};

int status_exit(dpdf_status s) {
  if (s == DPDF_OK) return 0;
  std::cerr << "error (" << dpdf_status_name(s) << "): " << dpdf_last_error() << '\n';
  return s == DPDF_E_VERIFICATION_MISMATCH ? kExitMismatch : kExitInvalid;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::uint32_t to_uint(const std::string& token) {
  const auto t = trim(token);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("not a nonnegative integer: '" + token + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(t));
}

std::vector<std::uint32_t> parse_orders(const std::string& spec) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, 'x')) out.push_back(to_uint(part));
  return out;
}

// "1,3,9; 4,10,12" or, for groups, tuples such as "(1,0),(2,0); (0,1),(0,2)".
std::vector<std::vector<std::uint32_t>> parse_sets(const std::string& text,
                                                   const std::vector<std::uint32_t>& orders) {
  std::vector<std::vector<std::uint32_t>> sets;
  std::stringstream ss(text);
  std::string chunk;
  while (std::getline(ss, chunk, ';')) {
    std::vector<std::uint32_t> set;
    std::size_t i = 0;
    const std::string c = trim(chunk);
    while (i < c.size()) {
      if (c[i] == ' ' || c[i] == ',') {
        ++i;
        continue;
      }
      if (c[i] == '(') {
        const auto close = c.find(')', i);
        if (close == std::string::npos) throw InputError("unbalanced parenthesis in '" + c + "'");
        std::vector<std::uint32_t> comps;
        std::stringstream inner(c.substr(i + 1, close - i - 1));
        std::string tok;
        while (std::getline(inner, tok, ',')) comps.push_back(to_uint(tok));
        if (orders.empty() || comps.size() != orders.size()) {
          throw InputError("tuple arity does not match the group");
        }
        std::uint32_t code = 0;
        const auto s = dpdf_group_encode(orders.data(), orders.size(), comps.data(), &code);
        if (s != DPDF_OK) throw InputError(dpdf_last_error());
        set.push_back(code);
        i = close + 1;
      } else {
        auto end = c.find(',', i);
        if (end == std::string::npos) end = c.size();
        set.push_back(to_uint(c.substr(i, end - i)));
        i = end;
      }
    }
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw InputError("no sets given");
  return sets;
}

struct Flat {
  std::vector<std::uint32_t> values;
  std::vector<std::size_t> sizes;
};

Flat flatten(const std::vector<std::vector<std::uint32_t>>& sets) {
  Flat f;
  for (const auto& s : sets) {
    f.values.insert(f.values.end(), s.begin(), s.end());
    f.sizes.push_back(s.size());
  }
  return f;
}

struct FamilyInput {
  std::uint64_t field = 0;
  std::string group;
  std::string sets;
};

// Builds a family from --field or --group plus --sets.
dpdf_status make_family(const FamilyInput& in, FamilyHandle& out) {
  if ((in.field == 0) == in.group.empty()) throw InputError("give exactly one of --field, --group");
  const auto orders = in.group.empty() ? std::vector<std::uint32_t>{} : parse_orders(in.group);
  const auto flat = flatten(parse_sets(in.sets, orders));
  if (in.field != 0) {
    dpdf_field* field = nullptr;
    const auto s = dpdf_field_of_order(in.field, &field);
    if (s != DPDF_OK) return s;
    const auto r = dpdf_family_in_field(field, flat.values.data(), flat.sizes.data(),
                                        flat.sizes.size(), &out.ptr);
    dpdf_field_free(field);
    return r;
  }
  return dpdf_family_in_group(orders.data(), orders.size(), flat.values.data(), flat.sizes.data(),
                              flat.sizes.size(), &out.ptr);
}

int emit(dpdf_status s, const ReportHandle& report, const std::string& output = {}) {
  if (s != DPDF_OK) return status_exit(s);
  const char* text = dpdf_report_text(report.ptr);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!(file << text)) {
      std::cerr << "error (IOFailure): cannot write " << output << '\n';
      return kExitInvalid;
    }
  }
  return dpdf_report_failures(report.ptr) == 0 ? 0 : kExitMismatch;
}

dpdf_theorem theorem_of(const std::string& name) {
  if (name == "pds-collection") return DPDF_THEOREM_PDS_COLLECTION;
  if (name == "uniform") return DPDF_THEOREM_UNIFORM;
  if (name == "uniform-unions") return DPDF_THEOREM_UNIFORM_UNIONS;
  if (name == "partition") return DPDF_THEOREM_PARTITION;
  if (name == "squares") return DPDF_THEOREM_SQUARES;
  if (name == "subfield") return DPDF_THEOREM_SUBFIELD;
  throw InputError("unknown theorem '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference families from cyclotomic classes"};
  app.require_subcommand(1);

  std::uint64_t p = 0;
  std::uint32_t n = 1;
  auto* field_info = app.add_subcommand("field-info", "Modulus, primitive element and orders");
  field_info->add_option("--p", p, "Characteristic")->required();
  field_info->add_option("--n", n, "Extension degree");

  FamilyInput family_in;
  auto* classify = app.add_subcommand("classify", "Classify a family of sets");
  classify->add_option("--field", family_in.field, "Work in the additive group of GF(Q)");
  classify->add_option("--group", family_in.group, "Orders such as 3x3");
  classify->add_option("--sets", family_in.sets, "Sets separated by ';'")->required();

  std::uint64_t q = 0;
  std::uint32_t e = 0;
  bool closed_form = false;
  auto* cyclo = app.add_subcommand("cyclo", "Cyclotomic numbers of order E");
  cyclo->add_option("--q", q, "Field order")->required();
  cyclo->add_option("--e", e, "Order e dividing q-1")->required();
  cyclo->add_flag("--closed-form", closed_form, "Compare with the closed forms for e in {3,4,6,8}");

  std::string theorem;
  std::uint32_t epsilon = 0, r = 0, u = 0;
  std::string indices;
  FamilyInput construct_in;
  auto* construct = app.add_subcommand("construct", "Build a family and check its predicted parameters");
  construct->add_option("--theorem", theorem, "pds-collection|uniform|uniform-unions|partition|squares|subfield")
      ->required();
  construct->add_option("--q", q, "Field order");
  construct->add_option("--e", e, "Cyclotomic order");
  construct->add_option("--epsilon", epsilon, "Coarse order (partition)");
  construct->add_option("--r", r, "Subfield degree (subfield)");
  construct->add_option("--u", u, "Number of classes or cosets");
  construct->add_option("--indices", indices, "Class index sets separated by ';'");
  construct->add_option("--field", construct_in.field, "Field for --sets (pds-collection)");
  construct->add_option("--group", construct_in.group, "Group for --sets (pds-collection)");
  construct->add_option("--sets", construct_in.sets, "Sets (pds-collection)");

  std::uint64_t qmax = 121;
  std::string eps_list = "2,3,4,6,8";
  std::string format = "csv";
  std::string output;
  bool include_negative = false, reverify = false;
  auto* catalog = app.add_subcommand("catalog", "Regenerate the partition table");
  catalog->add_option("--qmax", qmax, "Largest field order");
  catalog->add_option("--epsilon", eps_list, "Comma-separated coarse orders");
  catalog->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  catalog->add_option("--output", output, "Write to a file instead of stdout");
  catalog->add_flag("--include-negative", include_negative, "Emit kind=none rows");
  catalog->add_flag("--reverify", reverify, "Re-check every row against the oracle");

  app.add_subcommand("verify-suite", "Run the regression suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitInvalid;
  }

  try {
    ReportHandle report;
    if (field_info->parsed()) return emit(dpdf_report_field_info(p, n, &report.ptr), report);

    if (classify->parsed()) {
      FamilyHandle fam;
      const auto s = make_family(family_in, fam);
      if (s != DPDF_OK) return status_exit(s);
      return emit(dpdf_report_classify(fam.ptr, &report.ptr), report);
    }

    if (cyclo->parsed()) return emit(dpdf_report_cyclo(q, e, closed_form, &report.ptr), report);

    if (construct->parsed()) {
      dpdf_construct_args args{};
      args.theorem = theorem_of(theorem);
      args.q = q;
      args.e = e;
      args.epsilon = epsilon;
      args.r = r;
      args.u = u;
      Flat flat;
      if (!indices.empty()) flat = flatten(parse_sets(indices, {}));
      args.index_sets = flat.values.data();
      args.set_sizes = flat.sizes.data();
      args.set_count = flat.sizes.size();
      FamilyHandle fam;
      if (args.theorem == DPDF_THEOREM_PDS_COLLECTION) {
        const auto s = make_family(construct_in, fam);
        if (s != DPDF_OK) return status_exit(s);
        args.family = fam.ptr;
      }
      return emit(dpdf_construct(&args, &report.ptr), report);
    }

    if (catalog->parsed()) {
      std::vector<std::uint32_t> eps;
      std::stringstream ss(eps_list);
      std::string tok;
      while (std::getline(ss, tok, ',')) eps.push_back(to_uint(tok));
      dpdf_catalog_args args{};
      args.q_max = qmax;
      args.epsilons = eps.data();
      args.epsilon_count = eps.size();
      args.format = format == "json" ? DPDF_FORMAT_JSON : DPDF_FORMAT_CSV;
      args.include_negative = include_negative;
      args.reverify = reverify;
      return emit(dpdf_catalog(&args, &report.ptr), report, output);
    }

    return emit(dpdf_verify_suite(&report.ptr), report);
  } catch (const InputError& ex) {
    std::cerr << "error (ParseError): " << ex.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& ex) {
    std::cerr << "error (ParseError): " << ex.what() << '\n';
    return kExitInvalid;
  }
}
