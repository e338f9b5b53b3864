#pragma once

#include <span>
#include <vector>

#include "fubini/exact.hpp"
#include "fubini/family.hpp"
#include "fubini/hessenberg.hpp"

namespace fubini {

/// A partition of n encoded by part multiplicities: t[i-1] copies of part i,
/// with sum i * t[i-1] = n.
struct PartitionMultiplicity {
  std::vector<int> t;

  int weight() const;      // sum of i * t_i
  int part_count() const;  // sum of t_i

  friend bool operator==(const PartitionMultiplicity& a, const PartitionMultiplicity& b) {
    return a.t == b.t;
  }
};

/// Every multiplicity vector (t_1..t_n) with sum i*t_i = n, each exactly
/// once, in lexicographically increasing order. n = 0 yields the single
/// all-zero vector.
std::vector<PartitionMultiplicity> partitions_fixed_weight(int n);

/// Same, with parts restricted to the given ascending set. Vectors still
/// have n slots (zeros outside the part set).
std::vector<PartitionMultiplicity> partitions_fixed_weight(int n, std::span<const int> parts);

/// (sum t_i)! / prod t_i!
ExactInt multinomial(const PartitionMultiplicity& p);

/// Trudi's expansion of the m x m Toeplitz-Hessenberg determinant with
/// first column a_1..a_m and a_0 on the superdiagonal:
/// sum over partitions of m of multinomial(t) (-a_0)^(m - sum t) prod a_i^t_i.
ExactRational trudi_det(const ExactRational& a0, std::span<const ExactRational> a);

/// One partition's contribution to the expansion of alpha_n for a profile.
struct TrudiTerm {
  PartitionMultiplicity partition;
  ExactRational value;
};

/// The per-partition summands of alpha_n for the profile (a_0 = 1, parts
/// drawn from the profile's support), in enumeration order.
std::vector<TrudiTerm> trudi_terms(const RProfile& profile, int n);

/// The family's number at index n by the partition-sum expansion.
ExactRational number_via_trudi(const FamilyId& family, int n);

/// Classical partition counting by dynamic programming; the independent
/// oracle for the enumerator.
ExactInt partition_count(int n);

}  // namespace fubini
