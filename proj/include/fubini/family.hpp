#pragma once

#include <optional>
#include <string>

namespace fubini {

enum class FamilyTag {
  fubini,
  fubini_restricted,
  fubini_associated,
  bernoulli,
  cauchy,
  euler,
  mod_cauchy_restricted,
  mod_cauchy_associated,
  mod_bernoulli_restricted,
  mod_bernoulli_associated,
  gen_fubini,
};

/// A sequence family together with its parameter (block-size bound m, or
/// power k for gen_fubini). Construction validates the parameter ranges:
/// m >= 1 for the restricted/associated Fubini families, m >= 2 for the four
/// modified families, k >= 1 for gen_fubini.
struct FamilyId {
  FamilyTag tag = FamilyTag::fubini;
  int m = 0;
  int k = 0;

  static FamilyId fubini() { return {FamilyTag::fubini, 0, 0}; }
  static FamilyId fubini_restricted(int m);
  static FamilyId fubini_associated(int m);
  static FamilyId bernoulli() { return {FamilyTag::bernoulli, 0, 0}; }
  static FamilyId cauchy() { return {FamilyTag::cauchy, 0, 0}; }
  static FamilyId euler() { return {FamilyTag::euler, 0, 0}; }
  static FamilyId mod_cauchy_restricted(int m);
  static FamilyId mod_cauchy_associated(int m);
  static FamilyId mod_bernoulli_restricted(int m);
  static FamilyId mod_bernoulli_associated(int m);
  static FamilyId gen_fubini(int k);

  /// Builds from a CLI tag such as "fubini_restricted" plus optional m/k.
  /// Throws std::invalid_argument for unknown tags, missing or out-of-range
  /// parameters.
  static FamilyId parse(const std::string& name, std::optional<int> m, std::optional<int> k);

  bool has_m() const;
  bool has_k() const { return tag == FamilyTag::gen_fubini; }

  /// Families whose values are integers (the three Fubini families and the
  /// Euler numbers); the rest are rationals.
  bool integer_valued() const;

  /// The CLI tag, without parameters.
  std::string name() const;
  /// Human-readable label including parameters, e.g. "fubini_restricted(m=3)".
  std::string display() const;

  friend bool operator==(const FamilyId& a, const FamilyId& b) {
    return a.tag == b.tag && a.m == b.m && a.k == b.k;
  }
};

}  // namespace fubini
