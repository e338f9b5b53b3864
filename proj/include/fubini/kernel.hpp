#pragma once

#include <vector>

#include "fubini/exact.hpp"

namespace fubini {

// Foundational exact combinatorics: factorials, binomials, Stirling numbers
// of the second kind (full / block size <= m / block size >= m), and the
// Fubini-type ordered-set-partition counts computed by their defining sums
// and recurrences. All functions are pure; recurrences memoize in local
// tables scoped to the call.

ExactInt factorial(int n);

/// C(n, k); 0 when k < 0 or k > n. Requires n >= 0.
ExactInt binomial(int n, long k);

/// Stirling number of the second kind S(n, k).
ExactInt stirling2(int n, int k);
/// Row S(n, 0..n).
std::vector<ExactInt> stirling2_row(int n);

/// Partitions of an n-set into k blocks, every block of size <= m.
ExactInt stirling2_restricted(int n, int k, int m);
std::vector<ExactInt> stirling2_restricted_row(int n, int m);

/// Partitions of an n-set into k blocks, every block of size >= m.
ExactInt stirling2_associated(int n, int k, int m);
std::vector<ExactInt> stirling2_associated_row(int n, int m);

/// Fubini numbers by the defining sum over Stirling numbers.
ExactInt fubini_def(int n);

/// Fubini numbers by the binomial recurrence F_n = sum_j C(n,j) F_{n-j}.
ExactInt fubini_rec(int n);
std::vector<ExactInt> fubini_rec_upto(int n);

/// Fubini numbers by the double binomial sum over j^n (with 0^0 = 1).
ExactInt fubini_binomial_sum(int n);

/// Fubini numbers by the exact dyadic series (1/2) sum m^n/2^m, truncated at
/// an M with a rigorous tail bound below 1/2, then rounded to the nearest
/// integer.
ExactInt fubini_dyadic_series(int n);

/// Restricted Fubini numbers (blocks of size <= m) by recurrence / by the
/// Stirling-sum definition.
ExactInt restricted_fubini_rec(int n, int m);
ExactInt restricted_fubini_def(int n, int m);
std::vector<ExactInt> restricted_fubini_rec_upto(int n, int m);

/// Associated Fubini numbers (blocks of size >= m) by recurrence / by the
/// Stirling-sum definition.
ExactInt associated_fubini_rec(int n, int m);
ExactInt associated_fubini_def(int n, int m);
std::vector<ExactInt> associated_fubini_rec_upto(int n, int m);

/// Classical Bernoulli numbers via sum_{m=0}^{n} C(n+1,m) B_m = 0.
ExactRational bernoulli_rec(int n);
std::vector<ExactRational> bernoulli_rec_upto(int n);

/// Classical Cauchy numbers via c_n/n! = sum_j (-1)^{j+1}/(j+1) c_{n-j}/(n-j)!.
ExactRational cauchy_rec(int n);
std::vector<ExactRational> cauchy_rec_upto(int n);

/// Classical Euler numbers via sum_{m=0}^{n} C(2n,2m) E_{2m} = 0; odd-index
/// values are 0.
ExactRational euler_rec(int n);

}  // namespace fubini
