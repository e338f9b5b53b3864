#include "fubini/trudi.hpp"

#include <numeric>
#include <stdexcept>

#include "fubini/kernel.hpp"

namespace fubini {

int PartitionMultiplicity::weight() const {
  int w = 0;
  for (size_t i = 0; i < t.size(); ++i) w += static_cast<int>(i + 1) * t[i];
  return w;
}

int PartitionMultiplicity::part_count() const {
  return std::accumulate(t.begin(), t.end(), 0);
}

namespace {

// Depth-first over the part set in ascending order, choosing multiplicities
// from 0 upward; emission order is therefore lexicographic on the full
// multiplicity vector.
void enumerate(int remaining, size_t idx, std::span<const int> parts, std::vector<int>& t, int n,
               std::vector<PartitionMultiplicity>& out) {
  if (remaining == 0) {
    // Slots at idx and beyond are zero here (each level resets its slot).
    std::vector<int> full(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < parts.size(); ++i) full[static_cast<size_t>(parts[i] - 1)] = t[i];
    out.push_back(PartitionMultiplicity{std::move(full)});
    return;
  }
  if (idx == parts.size()) return;
  const int p = parts[idx];
  for (int count = 0; count * p <= remaining; ++count) {
    t[idx] = count;
    enumerate(remaining - count * p, idx + 1, parts, t, n, out);
  }
  t[idx] = 0;
}

}  // namespace

std::vector<PartitionMultiplicity> partitions_fixed_weight(int n, std::span<const int> parts) {
  if (n < 0) throw std::invalid_argument("partitions_fixed_weight: n must be >= 0");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || parts[i] > n)
      throw std::invalid_argument("partitions_fixed_weight: parts must lie in 1..n");
    if (i > 0 && parts[i] <= parts[i - 1])
      throw std::invalid_argument("partitions_fixed_weight: parts must be strictly increasing");
  }
  std::vector<PartitionMultiplicity> out;
  std::vector<int> t(parts.size(), 0);
  enumerate(n, 0, parts, t, n, out);
  return out;
}

std::vector<PartitionMultiplicity> partitions_fixed_weight(int n) {
  std::vector<int> parts(static_cast<size_t>(n));
  std::iota(parts.begin(), parts.end(), 1);
  return partitions_fixed_weight(n, parts);
}

ExactInt multinomial(const PartitionMultiplicity& p) {
  ExactInt num = factorial(p.part_count());
  for (int ti : p.t) {
    if (ti < 0) throw std::invalid_argument("multinomial: negative multiplicity");
    if (ti > 1) num = div_exact(num, factorial(ti));
  }
  return num;
}

ExactRational trudi_det(const ExactRational& a0, std::span<const ExactRational> a) {
  const int m = static_cast<int>(a.size());
  ExactRational acc = 0;
  for (const auto& part : partitions_fixed_weight(m)) {
    const int cnt = part.part_count();
    ExactRational term(multinomial(part));
    term *= ExactRational::pow(-a0, static_cast<unsigned long>(m - cnt));
    for (int i = 1; i <= m; ++i) {
      const int ti = part.t[static_cast<size_t>(i - 1)];
      if (ti > 0) term *= ExactRational::pow(a[static_cast<size_t>(i - 1)], static_cast<unsigned long>(ti));
    }
    acc += term;
  }
  return acc;
}

std::vector<TrudiTerm> trudi_terms(const RProfile& profile, int n) {
  if (n < 0) throw std::invalid_argument("trudi_terms: n must be >= 0");
  auto parts = profile.support_upto(n);
  std::vector<TrudiTerm> terms;
  for (auto& part : partitions_fixed_weight(n, parts)) {
    const int cnt = part.part_count();
    ExactRational value(multinomial(part));
    if ((n - cnt) % 2 != 0) value = -value;  // (-a_0)^{n - sum t} with a_0 = 1
    for (int i : parts) {
      const int ti = part.t[static_cast<size_t>(i - 1)];
      if (ti > 0) value *= ExactRational::pow(profile.r(i), static_cast<unsigned long>(ti));
    }
    terms.push_back(TrudiTerm{std::move(part), std::move(value)});
  }
  return terms;
}

ExactRational number_via_trudi(const FamilyId& family, int n) {
  if (n < 0) throw std::invalid_argument("number_via_trudi: n must be >= 0");
  if (family.tag == FamilyTag::gen_fubini)
    throw std::invalid_argument("gen_fubini has no partition-sum expansion; use the egf or convolution methods");
  int size = n;
  if (family.tag == FamilyTag::euler) {
    if (n % 2 != 0) return 0;
    size = n / 2;
  }
  ExactRational alpha = 0;
  for (const auto& term : trudi_terms(profile_for(family), size)) alpha += term.value;
  return apply_prefactor(family, n, alpha);
}

ExactInt partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: n must be >= 0");
  std::vector<ExactInt> p(static_cast<size_t>(n) + 1, ExactInt(0));
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int w = part; w <= n; ++w) p[static_cast<size_t>(w)] += p[static_cast<size_t>(w - part)];
  return p[static_cast<size_t>(n)];
}

}  // namespace fubini
