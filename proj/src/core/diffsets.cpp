#include "dpdf/diffsets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dpdf/error.hpp"

namespace dpdf {
namespace {

std::vector<std::uint8_t> membership(std::uint32_t size, std::span<const Element> set) {
  std::vector<std::uint8_t> mask(size, 0);
  for (auto x : set) mask[x.code] = 1;
  return mask;
}

void require_disjoint(const SetFamily& fam) {
  if (!fam.pairwise_disjoint()) fail(ErrorCode::NotDisjoint, "sets are not pairwise disjoint");
}

void require_zero_free(const SetFamily& fam) {
  for (const auto& s : fam.sets())
    if (!s.empty() && s.front() == Element{0}) fail(ErrorCode::ZeroInSet, "0 lies in a set");
}

// Frequencies restricted to the nonzero elements inside and outside a mask.
struct Split {
  bool constant = true;
  std::optional<std::uint64_t> inside;
  std::optional<std::uint64_t> outside;
};

Split split_counts(const FrequencyVector& freq, const std::vector<std::uint8_t>& mask) {
  Split out;
  for (std::uint32_t g = 1; g < freq.counts.size(); ++g) {
    auto& slot = mask[g] ? out.inside : out.outside;
    if (!slot) {
      slot = freq.counts[g];
    } else if (*slot != freq.counts[g]) {
      out.constant = false;
      return out;
    }
  }
  return out;
}

FamilyClassification from_split(const Split& s, FamilyKind uniform, FamilyKind partial,
                                std::uint32_t n, std::uint32_t m, std::uint32_t k) {
  FamilyClassification c;
  c.n = n;
  c.m = m;
  c.k = k;
  if (!s.constant) return c;
  const std::uint64_t lam = s.inside.value_or(s.outside.value_or(0));
  const std::uint64_t mu = s.outside.value_or(lam);
  c.lambda = static_cast<std::int64_t>(lam);
  c.mu = static_cast<std::int64_t>(mu);
  if (lam == mu) {
    c.kind = uniform;
    c.labels = label_bit(uniform) | label_bit(partial);
  } else {
    c.kind = partial;
    c.proper = true;
    c.labels = label_bit(partial);
  }
  return c;
}

std::uint32_t common_size(const SetFamily& fam) {
  if (fam.size() == 0) return 0;
  const auto k = static_cast<std::uint32_t>(fam[0].size());
  for (const auto& s : fam.sets())
    if (s.size() != k) return 0;
  return k;
}

// Sum over j != i of Delta(D_i, D_j) for every i.
std::vector<FrequencyVector> per_set_external(const SetFamily& fam) {
  const auto& g = fam.group();
  std::vector<FrequencyVector> out(fam.size(), FrequencyVector(g.size()));
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (i != j)
        for (auto x : fam[i])
          for (auto y : fam[j]) ++out[i].counts[g.sub(x, y).code];
  return out;
}

std::optional<std::uint64_t> constant_on_nonzero(const FrequencyVector& f) {
  if (f.counts.size() < 2) return 0;
  const auto v = f.counts[1];
  for (std::size_t g = 2; g < f.counts.size(); ++g)
    if (f.counts[g] != v) return std::nullopt;
  return v;
}

}  // namespace

std::uint64_t FrequencyVector::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

FrequencyVector& FrequencyVector::operator+=(const FrequencyVector& other) {
  if (other.counts.size() != counts.size()) fail(ErrorCode::InvalidArgument, "size mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

SetFamily::SetFamily(std::shared_ptr<const AbelianGroup> group,
                     std::vector<std::vector<Element>> sets)
    : group_(std::move(group)), sets_(std::move(sets)) {
  if (!group_) fail(ErrorCode::InvalidArgument, "family without a group");
  for (auto& s : sets_) {
    for (auto x : s)
      if (!group_->contains(x)) fail(ErrorCode::InvalidArgument, "element outside the group");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

std::vector<Element> SetFamily::support() const {
  std::vector<Element> out;
  for (const auto& s : sets_) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SetFamily::pairwise_disjoint() const {
  std::size_t total = 0;
  for (const auto& s : sets_) total += s.size();
  return support().size() == total;
}

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::None: return "none";
    case FamilyKind::DS: return "DS";
    case FamilyKind::PDS: return "PDS";
    case FamilyKind::DDF: return "DDF";
    case FamilyKind::EDF: return "EDF";
    case FamilyKind::DPDF: return "DPDF";
    case FamilyKind::EPDF: return "EPDF";
    case FamilyKind::SEDF: return "SEDF";
    case FamilyKind::PEDF: return "PEDF";
  }
  return "none";
}

std::string FamilyClassification::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::None: return "none";
    case FamilyKind::DS: os << '(' << n << ',' << k << ',' << lambda << ')'; break;
    case FamilyKind::PDS: os << '(' << n << ',' << k << ',' << lambda << ',' << mu << ')'; break;
    case FamilyKind::DDF:
    case FamilyKind::EDF:
    case FamilyKind::SEDF:
    case FamilyKind::PEDF: os << '(' << n << ',' << m << ',' << k << ',' << lambda << ')'; break;
    case FamilyKind::DPDF:
    case FamilyKind::EPDF:
      os << '(' << n << ',' << m << ',' << k << ',' << lambda << ',' << mu << ')';
      break;
  }
  os << '-' << dpdf::to_string(kind);
  return os.str();
}

FrequencyVector delta_internal(const AbelianGroup& group, std::span<const Element> d) {
  FrequencyVector out(group.size());
  for (auto x : d)
    for (auto y : d)
      if (x != y) ++out.counts[group.sub(x, y).code];
  return out;
}

FrequencyVector delta_external(const AbelianGroup& group, std::span<const Element> d1,
                               std::span<const Element> d2) {
  const auto mask = membership(group.size(), d1);
  for (auto y : d2)
    if (mask[y.code]) fail(ErrorCode::NotDisjoint, "sets intersect");
  FrequencyVector out(group.size());
  for (auto x : d1)
    for (auto y : d2) ++out.counts[group.sub(x, y).code];
  return out;
}

FrequencyVector int_family(const SetFamily& fam) {
  require_disjoint(fam);
  FrequencyVector out(fam.group().size());
  for (const auto& s : fam.sets()) out += delta_internal(fam.group(), s);
  return out;
}

FrequencyVector ext_family(const SetFamily& fam) {
  require_disjoint(fam);
  const auto& g = fam.group();
  FrequencyVector out(g.size());
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (i != j)
        for (auto x : fam[i])
          for (auto y : fam[j]) ++out.counts[g.sub(x, y).code];
  return out;
}

FamilyClassification classify_set(const AbelianGroup& group, std::span<const Element> d) {
  std::vector<Element> set(d.begin(), d.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  const auto split = split_counts(delta_internal(group, set), membership(group.size(), set));
  return from_split(split, FamilyKind::DS, FamilyKind::PDS, group.size(), 1,
                    static_cast<std::uint32_t>(set.size()));
}

FamilyClassification classify_family(const SetFamily& fam, DiffMode mode) {
  require_disjoint(fam);
  require_zero_free(fam);
  const std::uint32_t k = common_size(fam);
  if (fam.size() > 0 && k == 0 && !fam[0].empty()) {
    fail(ErrorCode::UnequalSizes, "sets differ in size");
  }
  const auto& g = fam.group();
  const auto m = static_cast<std::uint32_t>(fam.size());
  const auto mask = membership(g.size(), fam.support());

  if (mode == DiffMode::Internal) {
    auto c = from_split(split_counts(int_family(fam), mask), FamilyKind::DDF, FamilyKind::DPDF,
                        g.size(), m, k);
    if (m == 1) {
      const auto single = classify_set(g, fam[0]);
      c.labels |= single.labels;
    }
    return c;
  }

  auto c = from_split(split_counts(ext_family(fam), mask), FamilyKind::EDF, FamilyKind::EPDF,
                      g.size(), m, k);
  if (c.kind == FamilyKind::EDF) {
    c.pedf = true;
    c.labels |= label_bit(FamilyKind::PEDF);
  }
  if (sedf_lambda(fam)) {
    c.sedf = true;
    c.labels |= label_bit(FamilyKind::SEDF);
  }
  return c;
}

FamilyClassification classify_relative(const SetFamily& fam, std::span<const Element> t,
                                       DiffMode mode) {
  for (auto x : t) {
    if (x == Element{0}) fail(ErrorCode::ZeroInT, "0 lies in T");
    if (!fam.group().contains(x)) fail(ErrorCode::InvalidArgument, "T leaves the group");
  }
  require_disjoint(fam);
  require_zero_free(fam);
  const auto& g = fam.group();
  const auto freq = mode == DiffMode::Internal ? int_family(fam) : ext_family(fam);
  const auto uniform = mode == DiffMode::Internal ? FamilyKind::DDF : FamilyKind::EDF;
  const auto partial = mode == DiffMode::Internal ? FamilyKind::DPDF : FamilyKind::EPDF;
  return from_split(split_counts(freq, membership(g.size(), t)), uniform, partial, g.size(),
                    static_cast<std::uint32_t>(fam.size()), common_size(fam));
}

std::optional<std::vector<std::int64_t>> gsedf_lambdas(const SetFamily& fam) {
  require_disjoint(fam);
  std::vector<std::int64_t> out;
  for (const auto& f : per_set_external(fam)) {
    const auto v = constant_on_nonzero(f);
    if (!v || f.counts[0] != 0) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(*v));
  }
  return out;
}

std::optional<std::int64_t> sedf_lambda(const SetFamily& fam) {
  if (fam.size() < 2 || common_size(fam) == 0) return std::nullopt;
  const auto lambdas = gsedf_lambdas(fam);
  if (!lambdas) return std::nullopt;
  for (auto v : *lambdas)
    if (v != lambdas->front()) return std::nullopt;
  return lambdas->front();
}

std::optional<std::vector<PedfClass>> pedf_parameters(const SetFamily& fam) {
  require_disjoint(fam);
  const auto per_set = per_set_external(fam);
  std::map<std::uint32_t, std::pair<std::uint32_t, FrequencyVector>> classes;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto k = static_cast<std::uint32_t>(fam[i].size());
    auto [it, inserted] = classes.try_emplace(k, 0, FrequencyVector(fam.group().size()));
    ++it->second.first;
    it->second.second += per_set[i];
  }
  std::vector<PedfClass> out;
  for (const auto& [k, entry] : classes) {
    const auto v = constant_on_nonzero(entry.second);
    if (!v) return std::nullopt;
    out.push_back({k, entry.first, static_cast<std::int64_t>(*v)});
  }
  return out;
}

}  // namespace dpdf
