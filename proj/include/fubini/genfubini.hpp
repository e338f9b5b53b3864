#pragma once

#include <vector>

#include "fubini/exact.hpp"

namespace fubini {

// Coefficients of powers of the Fubini generating function 1/(2-e^t), and
// their identities with principal-minor sums and characteristic-polynomial
// coefficients of the Fubini Toeplitz-Hessenberg matrix.

/// [t^j] (1/(2-e^t))^k, via repeated truncated products.
ExactRational gen_fubini_coeff(int k, int j);

/// The same coefficient as the k-fold convolution of the base sequence
/// F_i/i!; an independent route.
ExactRational gen_fubini_via_convolution(int k, int j);

struct CharPolyCheckRow {
  int l = 0;
  ExactRational charpoly_coeff;      // x^l coefficient of det(T_n - xI)
  ExactRational egf_power_coeff;     // [t^(n-l)] (1/(2-e^t))^(l+1)
  bool match = false;                // |charpoly_coeff| == egf_power_coeff
};

/// For each l in 0..n-1, compares |x^l coefficient of the characteristic
/// polynomial of the n x n Fubini matrix| against the EGF-power
/// coefficient. Returns the full table; mismatches are flagged, not thrown.
std::vector<CharPolyCheckRow> charpoly_genfubini_check(int n);

struct MinorSumCheckRow {
  int n = 0;
  int l = 0;
  ExactRational brute_force;         // sum of principal minors of order n-l
  ExactRational charpoly_coeff_abs;  // |x^l coefficient|
  ExactRational composition_sum;     // (l+1)-fold convolution at weight n-l
  bool match = false;
};

/// Three-way check of the order-(n-l) principal-minor sum of the n x n
/// Fubini matrix: brute-force enumeration vs characteristic polynomial vs
/// the composition (convolution) formula.
MinorSumCheckRow minor_sum_genfubini_check(int n, int l);

}  // namespace fubini
