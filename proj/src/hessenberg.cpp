#include "fubini/hessenberg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "fubini/kernel.hpp"

namespace fubini {

ExactRational RProfile::r(int j) const {
  if (j < 1) throw std::invalid_argument("RProfile::r: j must be >= 1");
  if (!in_support(j)) return 0;
  switch (family.tag) {
    case FamilyTag::fubini:
    case FamilyTag::fubini_restricted:
    case FamilyTag::fubini_associated:
      return ExactRational(ExactInt((j % 2 != 0) ? 1 : -1), factorial(j));
    case FamilyTag::bernoulli:
    case FamilyTag::mod_bernoulli_restricted:
    case FamilyTag::mod_bernoulli_associated:
      return ExactRational(ExactInt(1), factorial(j + 1));
    case FamilyTag::cauchy:
    case FamilyTag::mod_cauchy_restricted:
    case FamilyTag::mod_cauchy_associated:
      return ExactRational(1, j + 1);
    case FamilyTag::euler:
      return ExactRational(ExactInt(1), factorial(2 * j));
    case FamilyTag::gen_fubini:
      break;
  }
  throw std::logic_error("RProfile::r: no profile for " + family.display());
}

bool RProfile::in_support(int j) const {
  switch (family.tag) {
    case FamilyTag::fubini_restricted:
      return j <= family.m;
    case FamilyTag::fubini_associated:
      return j >= family.m;
    case FamilyTag::mod_cauchy_restricted:
    case FamilyTag::mod_bernoulli_restricted:
      return j <= family.m - 1;
    case FamilyTag::mod_cauchy_associated:
    case FamilyTag::mod_bernoulli_associated:
      return j >= family.m - 1;
    default:
      return true;
  }
}

std::vector<int> RProfile::support_upto(int n) const {
  std::vector<int> parts;
  for (int j = 1; j <= n; ++j)
    if (in_support(j)) parts.push_back(j);
  return parts;
}

RProfile profile_for(const FamilyId& family) {
  if (family.tag == FamilyTag::gen_fubini)
    throw std::invalid_argument("gen_fubini has no R-profile; its determinant route is the characteristic polynomial");
  return RProfile{family};
}

ExactRational apply_prefactor(const FamilyId& family, int n, const ExactRational& alpha) {
  switch (family.tag) {
    case FamilyTag::bernoulli:
    case FamilyTag::mod_bernoulli_restricted:
    case FamilyTag::mod_bernoulli_associated: {
      ExactRational v = alpha * ExactRational(factorial(n));
      return (n % 2 != 0) ? -v : v;
    }
    case FamilyTag::euler: {
      // n is the (even) sequence index; the matrix size was n/2.
      ExactRational v = alpha * ExactRational(factorial(n));
      return (n / 2 % 2 != 0) ? -v : v;
    }
    default:
      return alpha * ExactRational(factorial(n));
  }
}

ExactMatrix::ExactMatrix(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("ExactMatrix: size must be >= 0");
  a_.assign(static_cast<size_t>(n) * n, ExactRational(0));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix toeplitz_hessenberg(std::span<const ExactRational> r, int n) {
  if (static_cast<int>(r.size()) < n)
    throw std::invalid_argument("toeplitz_hessenberg: need R(1..n)");
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) m.at(i, j) = r[static_cast<size_t>(i - j)];
    if (i + 1 < n) m.at(i, i + 1) = 1;
  }
  return m;
}

ExactMatrix toeplitz_hessenberg(const RProfile& profile, int n) {
  std::vector<ExactRational> r(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) r[static_cast<size_t>(j - 1)] = profile.r(j);
  return toeplitz_hessenberg(r, n);
}

std::vector<ExactRational> hessenberg_alphas(std::span<const ExactRational> r, int n) {
  if (static_cast<int>(r.size()) < n)
    throw std::invalid_argument("hessenberg_alphas: need R(1..n)");
  std::vector<ExactRational> alpha(static_cast<size_t>(n) + 1);
  alpha[0] = 1;
  for (int i = 1; i <= n; ++i) {
    ExactRational acc = 0;
    for (int j = 1; j <= i; ++j) {
      const ExactRational& rj = r[static_cast<size_t>(j - 1)];
      if (rj.is_zero()) continue;
      ExactRational term = rj * alpha[static_cast<size_t>(i - j)];
      if (j % 2 == 0) acc -= term; else acc += term;
    }
    alpha[static_cast<size_t>(i)] = std::move(acc);
  }
  return alpha;
}

std::vector<ExactRational> hessenberg_alphas(const RProfile& profile, int n) {
  std::vector<ExactRational> r(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) r[static_cast<size_t>(j - 1)] = profile.r(j);
  return hessenberg_alphas(r, n);
}

ExactRational det_via_recurrence(const RProfile& profile, int n) {
  if (n < 0) throw std::invalid_argument("det_via_recurrence: n must be >= 0");
  return hessenberg_alphas(profile, n).back();
}

ExactRational det_fraction_free(const ExactMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  // Clear denominators row by row; det(M) = det(A) / prod(row scales).
  std::vector<std::vector<ExactInt>> a(static_cast<size_t>(n), std::vector<ExactInt>(static_cast<size_t>(n)));
  ExactInt scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().raw().get_mpz_t());
    ExactInt li{l};
    for (int j = 0; j < n; ++j)
      a[i][j] = div_exact(m.at(i, j).numerator() * li, m.at(i, j).denominator());
    scale *= li;
  }
  // Bareiss one-step elimination with exact divisions.
  int sign = 1;
  ExactInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero()) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = div_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  ExactInt det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  if (sign < 0) det = -det;
  return ExactRational(det, scale);
}

ExactRational number_from_determinant(const FamilyId& family, int n) {
  if (n < 0) throw std::invalid_argument("number_from_determinant: n must be >= 0");
  if (family.tag == FamilyTag::gen_fubini) {
    auto p = char_poly_from_profile(profile_for(FamilyId::fubini()), n + family.k - 1);
    return p[static_cast<size_t>(family.k - 1)].abs();
  }
  if (family.tag == FamilyTag::euler) {
    if (n % 2 != 0) return 0;  // odd-index Euler numbers vanish
    ExactRational alpha = det_via_recurrence(profile_for(family), n / 2);
    return apply_prefactor(family, n, alpha);
  }
  ExactRational alpha = det_via_recurrence(profile_for(family), n);
  return apply_prefactor(family, n, alpha);
}

ExactRational principal_minor(const ExactMatrix& m, std::span<const int> deleted) {
  const int n = m.size();
  for (size_t i = 0; i < deleted.size(); ++i) {
    if (deleted[i] < 1 || deleted[i] > n)
      throw std::invalid_argument("principal_minor: index out of range");
    if (i > 0 && deleted[i] <= deleted[i - 1])
      throw std::invalid_argument("principal_minor: indices must be strictly increasing");
  }
  std::vector<int> keep;
  keep.reserve(static_cast<size_t>(n) - deleted.size());
  size_t d = 0;
  for (int i = 1; i <= n; ++i) {
    if (d < deleted.size() && deleted[d] == i) { ++d; continue; }
    keep.push_back(i - 1);
  }
  ExactMatrix sub(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(keep[i], keep[j]);
  return det_fraction_free(sub);
}

ExactRational principal_minor_sum(const RProfile& profile, int n, int order) {
  if (order < 1 || order > n)
    throw std::invalid_argument("principal_minor_sum: order must be in 1..n");
  const int l = n - order;  // deletions => l+1 diagonal blocks
  auto alpha = hessenberg_alphas(profile, order);
  // (l+1)-fold convolution of alpha_0..alpha_order, coefficient at `order`.
  std::vector<ExactRational> conv(alpha.begin(), alpha.end());
  for (int rep = 0; rep < l; ++rep) {
    std::vector<ExactRational> next(static_cast<size_t>(order) + 1, ExactRational(0));
    for (int i = 0; i <= order; ++i) {
      if (conv[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= order; ++j)
        next[static_cast<size_t>(i + j)] += conv[static_cast<size_t>(i)] * alpha[static_cast<size_t>(j)];
    }
    conv = std::move(next);
  }
  return conv[static_cast<size_t>(order)];
}

namespace {

void minor_sum_rec(const ExactMatrix& m, int l, int next, std::vector<int>& chosen, ExactRational& acc) {
  if (static_cast<int>(chosen.size()) == l) {
    acc += principal_minor(m, chosen);
    return;
  }
  for (int i = next; i <= m.size(); ++i) {
    chosen.push_back(i);
    minor_sum_rec(m, l, i + 1, chosen, acc);
    chosen.pop_back();
  }
}

}  // namespace

ExactRational principal_minor_sum_bruteforce(const ExactMatrix& m, int order) {
  if (order < 1 || order > m.size())
    throw std::invalid_argument("principal_minor_sum_bruteforce: order must be in 1..n");
  ExactRational acc = 0;
  std::vector<int> chosen;
  minor_sum_rec(m, m.size() - order, 1, chosen, acc);
  return acc;
}

std::vector<ExactRational> char_poly(const ExactMatrix& m) {
  const int n = m.size();
  // Faddeev-LeVerrier for det(xI - M) = x^n + c_{n-1} x^{n-1} + ... + c_0:
  // N_0 = I, then repeatedly P = M N_{k-1}, c_{n-k} = -tr(P)/k,
  // N_k = P + c_{n-k} I. det(M - xI) differs by the factor (-1)^n.
  std::vector<ExactRational> c(static_cast<size_t>(n) + 1, ExactRational(0));
  c[static_cast<size_t>(n)] = 1;
  ExactMatrix nk = ExactMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    ExactMatrix mk(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ExactRational acc = 0;
        for (int t = 0; t < n; ++t) {
          if (m.at(i, t).is_zero() || nk.at(t, j).is_zero()) continue;
          acc += m.at(i, t) * nk.at(t, j);
        }
        mk.at(i, j) = std::move(acc);
      }
    ExactRational trace = 0;
    for (int i = 0; i < n; ++i) trace += mk.at(i, i);
    ExactRational ck = -(trace / ExactRational(k));
    c[static_cast<size_t>(n - k)] = ck;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    nk = std::move(mk);
  }
  if (n % 2 != 0)
    for (auto& v : c) v = -v;
  return c;
}

std::vector<ExactRational> char_poly_from_profile(const RProfile& profile, int n) {
  if (n < 0) throw std::invalid_argument("char_poly_from_profile: n must be >= 0");
  // det(T_n - xI): the shifted matrix is Toeplitz-Hessenberg with diagonal
  // entry R(1) - x, so the expansion recurrence runs over polynomials in x.
  std::vector<ExactRational> r(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) r[static_cast<size_t>(j - 1)] = profile.r(j);
  std::vector<std::vector<ExactRational>> alpha(static_cast<size_t>(n) + 1);
  alpha[0] = {ExactRational(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<ExactRational> p(static_cast<size_t>(i) + 1, ExactRational(0));
    for (int j = 1; j <= i; ++j) {
      const auto& prev = alpha[static_cast<size_t>(i - j)];
      const ExactRational& rj = r[static_cast<size_t>(j - 1)];
      const bool neg = (j % 2 == 0);
      if (!rj.is_zero()) {
        for (size_t d = 0; d < prev.size(); ++d) {
          ExactRational t = rj * prev[d];
          if (neg) p[d] -= t; else p[d] += t;
        }
      }
      if (j == 1) {
        for (size_t d = 0; d < prev.size(); ++d) p[d + 1] -= prev[d];
      }
    }
    alpha[static_cast<size_t>(i)] = std::move(p);
  }
  return alpha[static_cast<size_t>(n)];
}

std::vector<ExactRational> inversion_R_from_alpha(std::span<const ExactRational> alphas) {
  if (alphas.empty() || alphas[0] != ExactRational(1))
    throw std::invalid_argument("inversion_R_from_alpha: alpha_0 must be 1");
  const int n = static_cast<int>(alphas.size()) - 1;
  // Route 1: solve the expansion recurrence forward for R.
  std::vector<ExactRational> r(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    ExactRational acc = alphas[static_cast<size_t>(i)];
    for (int j = 1; j < i; ++j) {
      ExactRational term = r[static_cast<size_t>(j - 1)] * alphas[static_cast<size_t>(i - j)];
      if (j % 2 == 0) acc += term; else acc -= term;
    }
    r[static_cast<size_t>(i - 1)] = (i % 2 == 0) ? -acc : acc;
  }
  // Route 2: R(i) is itself the i x i Hessenberg determinant built from the
  // alphas; evaluate by the same recurrence with alpha as the profile.
  auto dets = hessenberg_alphas(alphas.subspan(1), n);
  for (int i = 1; i <= n; ++i)
    if (dets[static_cast<size_t>(i)] != r[static_cast<size_t>(i - 1)])
      throw std::logic_error("inversion_R_from_alpha: recurrence and determinant routes disagree");
  return r;
}

ExactMatrix unit_lower_toeplitz_inverse(std::span<const ExactRational> column) {
  if (column.empty() || column[0] != ExactRational(1))
    throw std::invalid_argument("unit_lower_toeplitz_inverse: column[0] must be 1");
  const size_t n = column.size();
  // Series reciprocal of the column symbol.
  std::vector<ExactRational> b(n);
  b[0] = 1;
  for (size_t i = 1; i < n; ++i) {
    ExactRational acc = 0;
    for (size_t j = 1; j <= i; ++j) acc += column[j] * b[i - j];
    b[i] = -acc;
  }
  ExactMatrix inv(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) inv.at(static_cast<int>(i), static_cast<int>(j)) = b[i - j];
  return inv;
}

}  // namespace fubini
