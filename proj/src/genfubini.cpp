#include "fubini/genfubini.hpp"

#include <stdexcept>

#include "fubini/hessenberg.hpp"
#include "fubini/kernel.hpp"
#include "fubini/series.hpp"

namespace fubini {

ExactRational gen_fubini_coeff(int k, int j) {
  if (k < 1) throw std::invalid_argument("gen_fubini_coeff: k must be >= 1");
  if (j < 0) throw std::invalid_argument("gen_fubini_coeff: j must be >= 0");
  return family_egf(FamilyId::gen_fubini(k), j)[j];
}

ExactRational gen_fubini_via_convolution(int k, int j) {
  if (k < 1) throw std::invalid_argument("gen_fubini_via_convolution: k must be >= 1");
  if (j < 0) throw std::invalid_argument("gen_fubini_via_convolution: j must be >= 0");
  auto f = fubini_rec_upto(j);
  std::vector<ExactRational> base(static_cast<size_t>(j) + 1);
  for (int i = 0; i <= j; ++i) base[static_cast<size_t>(i)] = ExactRational(f[static_cast<size_t>(i)], factorial(i));
  std::vector<ExactRational> conv = base;
  for (int rep = 1; rep < k; ++rep) {
    std::vector<ExactRational> next(static_cast<size_t>(j) + 1, ExactRational(0));
    for (int a = 0; a <= j; ++a)
      for (int b = 0; a + b <= j; ++b)
        next[static_cast<size_t>(a + b)] += conv[static_cast<size_t>(a)] * base[static_cast<size_t>(b)];
    conv = std::move(next);
  }
  return conv[static_cast<size_t>(j)];
}

std::vector<CharPolyCheckRow> charpoly_genfubini_check(int n) {
  if (n < 1) throw std::invalid_argument("charpoly_genfubini_check: n must be >= 1");
  auto matrix = toeplitz_hessenberg(profile_for(FamilyId::fubini()), n);
  auto p = char_poly(matrix);
  std::vector<CharPolyCheckRow> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int l = 0; l < n; ++l) {
    CharPolyCheckRow row;
    row.l = l;
    row.charpoly_coeff = p[static_cast<size_t>(l)];
    row.egf_power_coeff = gen_fubini_coeff(l + 1, n - l);
    row.match = row.charpoly_coeff.abs() == row.egf_power_coeff;
    rows.push_back(std::move(row));
  }
  return rows;
}

MinorSumCheckRow minor_sum_genfubini_check(int n, int l) {
  if (n < 1) throw std::invalid_argument("minor_sum_genfubini_check: n must be >= 1");
  if (l < 0 || l >= n) throw std::invalid_argument("minor_sum_genfubini_check: l must be in 0..n-1");
  auto profile = profile_for(FamilyId::fubini());
  MinorSumCheckRow row;
  row.n = n;
  row.l = l;
  row.brute_force = principal_minor_sum_bruteforce(toeplitz_hessenberg(profile, n), n - l);
  row.charpoly_coeff_abs = char_poly(toeplitz_hessenberg(profile, n))[static_cast<size_t>(l)].abs();
  row.composition_sum = gen_fubini_via_convolution(l + 1, n - l);
  row.match = row.brute_force == row.charpoly_coeff_abs && row.brute_force == row.composition_sum;
  return row;
}

}  // namespace fubini
