#include "dpdf/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "dpdf/error.hpp"

namespace dpdf {
namespace {

std::string poly(const FieldContext& field, Element x) {
  if (field.degree() == 1) return std::to_string(x.code);
  std::vector<std::string> terms;
  std::uint32_t v = x.code;
  for (std::uint32_t i = 0; i < field.degree(); ++i, v /= field.p()) {
    const std::uint32_t c = v % field.p();
    if (c == 0) continue;
    std::string t = i == 0 ? std::to_string(c) : (c == 1 ? "" : std::to_string(c));
    if (i == 1) t += "x";
    if (i > 1) t += "x^" + std::to_string(i);
    terms.push_back(t);
  }
  if (terms.empty()) return "0";
  std::reverse(terms.begin(), terms.end());
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out;
}

std::string modulus_string(const FieldContext& field) {
  const auto mod = field.modulus();
  std::vector<std::string> terms;
  for (std::size_t i = mod.size(); i-- > 0;) {
    const auto c = mod[i];
    if (c == 0) continue;
    std::string t = (c == 1 && i > 0) ? "" : std::to_string(c);
    if (i == 1) t += "x";
    if (i > 1) t += "x^" + std::to_string(i);
    terms.push_back(t);
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out;
}

std::string factorisation(std::uint64_t v) {
  std::ostringstream os;
  bool first = true;
  for (auto p : prime_factors(v)) {
    std::uint32_t k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    os << (first ? "" : " * ") << p;
    if (k > 1) os << '^' << k;
    first = false;
  }
  return first ? "1" : os.str();
}

std::string group_name(const AbelianGroup& g) {
  std::string out;
  for (std::size_t i = 0; i < g.orders().size(); ++i)
    out += (i ? " x " : "") + ("Z_" + std::to_string(g.orders()[i]));
  return out;
}

void flags(std::ostream& os, const FamilyClassification& c) {
  if (c.sedf) os << " [SEDF]";
  if (c.pedf && c.kind != FamilyKind::EDF) os << " [PEDF]";
}

}  // namespace

Decomposition cyclotomic_decomposition(const FieldContext& field, std::span<const Element> set) {
  const std::uint32_t order = field.q() - 1;
  std::vector<std::uint8_t> in(field.q(), 0);
  for (auto x : set) in[x.code] = 1;
  Decomposition out;
  for (auto d64 : divisors(order)) {
    const auto e = static_cast<std::uint32_t>(d64);
    const Element step = field.exp(e);
    bool stable = true;
    for (auto x : set) {
      if (x.code == 0 || !in[field.mul(x, step).code]) {
        stable = false;
        break;
      }
    }
    if (!stable) continue;
    out.e = e;
    std::vector<std::uint8_t> seen(e, 0);
    for (auto x : set) seen[field.dlog(x) % e] = 1;
    for (std::uint32_t i = 0; i < e; ++i)
      if (seen[i]) out.indices.push_back(i);
    return out;
  }
  return out;
}

std::string field_info_report(const FieldContext& field) {
  std::ostringstream os;
  os << "GF(" << field.q() << ") = GF(" << field.p() << '^' << field.degree() << ")\n";
  os << "modulus: " << modulus_string(field) << '\n';
  os << "primitive element: " << poly(field, field.primitive()) << " (code "
     << field.primitive().code << ")\n";
  os << "additive group: " << group_name(field.additive()) << '\n';
  os << "q - 1 = " << field.q() - 1 << " = " << factorisation(field.q() - 1) << '\n';
  os << "cyclotomic orders:";
  for (auto e : divisors(field.q() - 1))
    if (e >= 2) os << ' ' << e << "(f=" << (field.q() - 1) / e << ')';
  os << '\n';
  return os.str();
}

std::string classify_report(const SetFamily& family, const FieldContext* field) {
  std::ostringstream os;
  os << "group: " << group_name(family.group()) << " (order " << family.group().size() << ")\n";
  os << "sets: " << family.size() << " of size";
  for (std::size_t i = 0; i < family.size(); ++i) os << (i ? "," : " ") << family[i].size();
  os << '\n';
  const auto internal = classify_family(family, DiffMode::Internal);
  const auto external = classify_family(family, DiffMode::External);
  os << "internal: " << internal.to_string() << '\n';
  os << "external: " << external.to_string();
  flags(os, external);
  os << '\n';
  if (family.size() == 1) {
    os << "set: " << classify_set(family.group(), family[0]).to_string() << '\n';
  }
  if (field) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto d = cyclotomic_decomposition(*field, family[i]);
      os << "set " << i << ": ";
      if (d.e == 0) {
        os << "contains 0, no cyclotomic decomposition\n";
        continue;
      }
      if (d.e == field->q() - 1 && d.e > 1) os << "(trivial stabiliser) ";
      for (std::size_t j = 0; j < d.indices.size(); ++j)
        os << (j ? " u " : "") << "C_" << d.indices[j] << '^' << d.e;
      os << '\n';
    }
  }
  return os.str();
}

std::string cyclo_report(const CyclotomicContext& cc, bool closed_form) {
  std::ostringstream os;
  const auto e = cc.e();
  os << "cyclotomic numbers (i,j) of order " << e << " over GF(" << cc.q() << "), f = " << cc.f()
     << '\n';
  const auto m = cc.cyclotomic_matrix();
  std::size_t width = 1;
  for (auto v : m) width = std::max(width, std::to_string(v).size());
  os << std::setw(static_cast<int>(width) + 4) << "j:";
  for (std::uint32_t j = 0; j < e; ++j) os << ' ' << std::setw(static_cast<int>(width)) << j;
  os << '\n';
  for (std::uint32_t i = 0; i < e; ++i) {
    os << "i=" << std::setw(static_cast<int>(width)) << i << " |";
    for (std::uint32_t j = 0; j < e; ++j)
      os << ' ' << std::setw(static_cast<int>(width)) << m[std::size_t{i} * e + j];
    os << '\n';
  }
  if (closed_form) {
    const auto cf = closed_form_cyclo_numbers(cc);
    const auto& r = cf.reps;
    os << "representation:";
    switch (r.form) {
      case QuadForm::E3: os << " 4q = c^2 + 27d^2, c = " << r.c << ", d = " << r.d; break;
      case QuadForm::E4: os << " q = s^2 + t^2, s = " << r.s << ", t = " << r.t; break;
      case QuadForm::E6: os << " q = s^2 + 3t^2, s = " << r.s << ", t = " << r.t; break;
      case QuadForm::E8:
        os << " q = x^2 + 4y^2 = a^2 + 2b^2, x = " << r.x << ", y = " << r.y << ", a = " << r.a
           << ", b = " << r.b;
        break;
    }
    os << '\n';
    for (std::size_t c = 0; c < cf.candidates.size(); ++c) {
      os << (c == cf.resolved ? "resolved " : "candidate") << " (i,0):";
      for (auto v : cf.candidates[c]) os << ' ' << v;
      os << '\n';
    }
    bool agree = true;
    for (std::uint32_t i = 0; i < e; ++i)
      agree = agree && cf.column()[i] == static_cast<std::int64_t>(m[std::size_t{i} * e]);
    os << "closed form " << (agree ? "matches" : "DIFFERS FROM") << " direct counts\n";
  }
  return os.str();
}

std::string construction_report(const ConstructionResult& result) {
  std::ostringstream os;
  os << "theorem: " << to_string(result.theorem) << '\n';
  os << "family: " << result.family.size() << " sets over " << group_name(result.family.group())
     << '\n';
  for (const auto& p : result.predictions) {
    os << std::left << std::setw(9) << to_string(p.role);
    if (p.role == PredictionRole::Member) os << '[' << p.member << "] ";
    os << "predicted " << p.expected.to_string();
    if (p.observed) {
      os << ", observed " << p.observed->to_string() << (p.matches ? " ok" : " MISMATCH");
    }
    os << '\n';
  }
  for (const auto& n : result.notes) os << "note: " << n << '\n';
  os << "verified: " << (result.verified ? "yes" : "no") << '\n';
  return os.str();
}

std::string partition_report(const PartitionOutcome& outcome) {
  const auto& p = outcome.prediction;
  std::ostringstream os;
  os << "q = " << p.q << ", e = " << p.e << ", epsilon = " << p.epsilon << ", f = " << p.f << '\n';
  os << "C_0^" << p.epsilon << ": " << p.c0_epsilon.to_string() << '\n';
  if (p.phi) {
    os << "phi:";
    for (auto v : p.phi->phi) os << ' ' << v;
    os << "\npsi:";
    for (auto v : p.phi->psi) os << ' ' << v;
    os << "\nkappa = " << p.kappa << '\n';
  }
  os << "case: " << to_string(p.kind) << '\n';
  os << "internal: " << p.internal.to_string() << '\n';
  os << "external: " << p.external.to_string() << '\n';
  os << construction_report(outcome.construction);
  return os.str();
}

std::string squares_report(const PartitionPrediction& p) {
  std::ostringstream os;
  os << "squares of GF(" << p.q << "), e = " << p.e << ", f = " << p.f << '\n';
  os << "C_0^2: " << p.c0_epsilon.to_string() << '\n';
  os << "case: " << to_string(p.kind) << '\n';
  os << "internal: " << p.internal.to_string() << '\n';
  os << "external: " << p.external.to_string() << '\n';
  return os.str();
}

std::string suite_report(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& o : report.outcomes) {
    os << (o.passed ? "PASS " : "FAIL ") << o.name;
    if (!o.passed) os << ": " << o.detail;
    os << '\n';
  }
  os << report.outcomes.size() << " checks, " << report.failures() << " failures\n";
  return os.str();
}

}  // namespace dpdf
