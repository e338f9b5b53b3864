#pragma once

#include <span>
#include <vector>

#include "fubini/exact.hpp"
#include "fubini/family.hpp"

namespace fubini {

/// A family's determinant ingredient: the diagonal-generating sequence
/// j -> R(j) with its zero pattern, plus the prefactor turning the
/// determinant value alpha_n into the named number. gen_fubini has no
/// R-profile (its determinant characterization goes through characteristic
/// polynomials); profile_for throws for it.
struct RProfile {
  FamilyId family;

  /// R(j) for j >= 1; exact 0 outside the support band.
  ExactRational r(int j) const;
  bool in_support(int j) const;
  /// The j in 1..n with R(j) != 0, ascending. Drives the Trudi part-sets.
  std::vector<int> support_upto(int n) const;
};

RProfile profile_for(const FamilyId& family);

/// Maps a determinant value alpha to the family's number at index n
/// (n! alpha, (-1)^n n! alpha, or the Euler variant where n is the even
/// sequence index and the matrix size is n/2).
ExactRational apply_prefactor(const FamilyId& family, int n, const ExactRational& alpha);

/// Dense square matrix of exact rationals.
class ExactMatrix {
 public:
  explicit ExactMatrix(int n);
  static ExactMatrix identity(int n);

  int size() const { return n_; }
  const ExactRational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  ExactRational& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<ExactRational> a_;
};

/// The n x n lower Hessenberg matrix with constant diagonals: entry (i,j) is
/// r[i-j] for i >= j (i.e. R(i-j+1)), 1 on the superdiagonal, 0 above.
/// r spans R(1..n), one-based via r[j-1].
ExactMatrix toeplitz_hessenberg(std::span<const ExactRational> r, int n);
ExactMatrix toeplitz_hessenberg(const RProfile& profile, int n);

/// alpha_0..alpha_n from R(1..n) by the first-row expansion recurrence
/// alpha_i = sum_{j=1}^{i} (-1)^{j-1} R(j) alpha_{i-j}, alpha_0 = 1.
/// Each alpha_i equals the i x i Toeplitz-Hessenberg determinant, in O(n^2)
/// rational operations.
std::vector<ExactRational> hessenberg_alphas(std::span<const ExactRational> r, int n);
std::vector<ExactRational> hessenberg_alphas(const RProfile& profile, int n);

/// The n x n determinant value alpha_n by the expansion recurrence.
ExactRational det_via_recurrence(const RProfile& profile, int n);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared matrix, pivoting on the first nonzero entry. The
/// empty matrix has determinant 1; a singular matrix yields 0.
ExactRational det_fraction_free(const ExactMatrix& m);

/// The family's number at index n via its determinant representation:
/// prefactor(n) * alpha. For gen_fubini(k) this is the |x^(k-1)| coefficient
/// of the characteristic polynomial of the Fubini matrix of size n+k-1.
ExactRational number_from_determinant(const FamilyId& family, int n);

/// Determinant of m with rows and columns `deleted` removed (1-based,
/// strictly increasing). Throws std::invalid_argument on out-of-range or
/// duplicate indices.
ExactRational principal_minor(const ExactMatrix& m, std::span<const int> deleted);

/// Sum of all principal minors of the given order of the profile's n x n
/// matrix, via the block-product structure of Toeplitz-Hessenberg minors
/// (deleting l indices splits the matrix into l+1 diagonal blocks, so the
/// sum is the (l+1)-fold convolution of the alpha sequence at weight
/// `order`).
ExactRational principal_minor_sum(const RProfile& profile, int n, int order);

/// Same sum by brute-force enumeration of all index subsets; the oracle.
ExactRational principal_minor_sum_bruteforce(const ExactMatrix& m, int order);

/// Coefficients of det(M - xI), ascending by degree (index d holds the
/// x^d coefficient; leading coefficient is (-1)^n). Exact
/// Faddeev-LeVerrier.
std::vector<ExactRational> char_poly(const ExactMatrix& m);

/// Same polynomial for a profile matrix, by the expansion recurrence lifted
/// to polynomial coefficients; O(n^3) and the production path for larger n.
std::vector<ExactRational> char_poly_from_profile(const RProfile& profile, int n);

/// Recovers R(1..n) from alpha_0..alpha_n (alpha_0 must be 1): solves the
/// expansion recurrence forward and independently evaluates the
/// alpha-Hessenberg determinants, checking that both routes agree.
std::vector<ExactRational> inversion_R_from_alpha(std::span<const ExactRational> alphas);

/// Inverse of the unit lower triangular Toeplitz matrix whose first column
/// is `column` (column[0] must be 1). The result is again unit lower
/// triangular Toeplitz, with first column the series reciprocal of the
/// input.
ExactMatrix unit_lower_toeplitz_inverse(std::span<const ExactRational> column);

}  // namespace fubini
