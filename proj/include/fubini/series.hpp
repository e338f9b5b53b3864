#pragma once

#include <vector>

#include "fubini/exact.hpp"
#include "fubini/family.hpp"

namespace fubini {

/// A formal power series over ExactRational truncated at a fixed order:
/// coefficients c_0..c_N of sum c_i t^i. Arithmetic never reads past N.
class TruncatedEGF {
 public:
  /// Zero series of the given order (N+1 coefficients).
  explicit TruncatedEGF(int order);
  explicit TruncatedEGF(std::vector<ExactRational> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const ExactRational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  ExactRational& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<ExactRational>& coeffs() const { return c_; }

  friend bool operator==(const TruncatedEGF& a, const TruncatedEGF& b) { return a.c_ == b.c_; }

 private:
  std::vector<ExactRational> c_;
};

/// Coefficient-wise sum; throws std::invalid_argument on order mismatch.
TruncatedEGF ps_add(const TruncatedEGF& a, const TruncatedEGF& b);
TruncatedEGF ps_sub(const TruncatedEGF& a, const TruncatedEGF& b);

/// Cauchy product truncated at the common order; throws on order mismatch.
TruncatedEGF ps_mul(const TruncatedEGF& a, const TruncatedEGF& b);

/// Multiplicative inverse up to the truncation order, by forward
/// substitution. Throws std::domain_error if the constant term is zero.
TruncatedEGF ps_reciprocal(const TruncatedEGF& a);

/// Taylor coefficients of e^t.
TruncatedEGF exp_series(int order);
/// Taylor coefficients of ln(1+t) (constant term 0).
TruncatedEGF log1p_series(int order);
/// Taylor coefficients of cosh t.
TruncatedEGF cosh_series(int order);
/// The alternating truncation t - t^2/2 + ... + (-1)^{m-1} t^m/m, embedded at
/// the given order.
TruncatedEGF poly_F_m(int m, int order);
/// The exponential truncation 1 + t + t^2/2! + ... + t^m/m!, embedded at the
/// given order.
TruncatedEGF poly_E_m(int m, int order);

/// The family's exponential generating function truncated at the given
/// order. Families defined as t/(series with zero constant term) are built
/// by dividing the denominator by t symbolically, then taking the
/// reciprocal. Throws std::invalid_argument for invalid (family, m/k).
TruncatedEGF family_egf(const FamilyId& family, int order);

/// The n-th number of the family read off its EGF: n! [t^n], except that
/// gen_fubini reports the raw coefficient [t^n]. Integer-valued families
/// assert integrality (throws std::logic_error on violation).
ExactRational number_from_egf(const FamilyId& family, int n);

}  // namespace fubini
