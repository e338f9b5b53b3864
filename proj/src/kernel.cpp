#include "fubini/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace fubini {

namespace {

void require_nonneg(int n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
}

void require_m_pos(int m, const char* who) {
  if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}

// Pascal triangle rows 0..n.
std::vector<std::vector<ExactInt>> pascal_upto(int n) {
  std::vector<std::vector<ExactInt>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].resize(i + 1);
    c[i][0] = 1;
    c[i][i] = 1;
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

}  // namespace

ExactInt factorial(int n) {
  require_nonneg(n, "factorial");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return ExactInt(r);
}

ExactInt binomial(int n, long k) {
  require_nonneg(n, "binomial");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return ExactInt(r);
}

std::vector<ExactInt> stirling2_row(int n) {
  require_nonneg(n, "stirling2");
  // S(i,k) = k S(i-1,k) + S(i-1,k-1), S(0,0) = 1
  std::vector<ExactInt> row(1, ExactInt(1));
  for (int i = 1; i <= n; ++i) {
    std::vector<ExactInt> next(i + 1);
    next[0] = 0;
    for (int k = 1; k <= i; ++k) {
      ExactInt v = (k < static_cast<int>(row.size())) ? ExactInt(k) * row[k] : ExactInt(0);
      next[k] = v + row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

ExactInt stirling2(int n, int k) {
  require_nonneg(n, "stirling2");
  if (k < 0) throw std::invalid_argument("stirling2: k must be >= 0");
  if (k > n) return 0;
  return stirling2_row(n)[k];
}

std::vector<ExactInt> stirling2_restricted_row(int n, int m) {
  require_nonneg(n, "stirling2_restricted");
  require_m_pos(m, "stirling2_restricted");
  // Block of the largest element has size j <= m:
  // S(i,k) = sum_{j=1}^{min(m,i)} C(i-1, j-1) S(i-j, k-1)
  auto c = pascal_upto(std::max(n - 1, 0));
  std::vector<std::vector<ExactInt>> s(n + 1, std::vector<ExactInt>(n + 1, ExactInt(0)));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) {
      ExactInt acc = 0;
      for (int j = 1; j <= std::min(m, i); ++j) acc += c[i - 1][j - 1] * s[i - j][k - 1];
      s[i][k] = acc;
    }
  return s[n];
}

ExactInt stirling2_restricted(int n, int k, int m) {
  require_nonneg(n, "stirling2_restricted");
  if (k < 0) throw std::invalid_argument("stirling2_restricted: k must be >= 0");
  if (k > n) return 0;
  return stirling2_restricted_row(n, m)[k];
}

std::vector<ExactInt> stirling2_associated_row(int n, int m) {
  require_nonneg(n, "stirling2_associated");
  require_m_pos(m, "stirling2_associated");
  // Block of the largest element has size j >= m:
  // S(i,k) = sum_{j=m}^{i} C(i-1, j-1) S(i-j, k-1)
  auto c = pascal_upto(std::max(n - 1, 0));
  std::vector<std::vector<ExactInt>> s(n + 1, std::vector<ExactInt>(n + 1, ExactInt(0)));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) {
      ExactInt acc = 0;
      for (int j = m; j <= i; ++j) acc += c[i - 1][j - 1] * s[i - j][k - 1];
      s[i][k] = acc;
    }
  return s[n];
}

ExactInt stirling2_associated(int n, int k, int m) {
  require_nonneg(n, "stirling2_associated");
  if (k < 0) throw std::invalid_argument("stirling2_associated: k must be >= 0");
  if (k > n) return 0;
  return stirling2_associated_row(n, m)[k];
}

ExactInt fubini_def(int n) {
  require_nonneg(n, "fubini_def");
  auto row = stirling2_row(n);
  ExactInt acc = 0;
  ExactInt kfac = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfac *= ExactInt(k);
    acc += kfac * row[k];
  }
  return acc;
}

std::vector<ExactInt> fubini_rec_upto(int n) {
  require_nonneg(n, "fubini_rec");
  auto c = pascal_upto(n);
  std::vector<ExactInt> f(n + 1);
  f[0] = 1;
  for (int i = 1; i <= n; ++i) {
    ExactInt acc = 0;
    for (int j = 1; j <= i; ++j) acc += c[i][j] * f[i - j];
    f[i] = acc;
  }
  return f;
}

ExactInt fubini_rec(int n) { return fubini_rec_upto(n).back(); }

ExactInt fubini_binomial_sum(int n) {
  require_nonneg(n, "fubini_binomial_sum");
  auto c = pascal_upto(n);
  // j^n with 0^0 = 1
  std::vector<ExactInt> jpow(n + 1);
  for (int j = 0; j <= n; ++j)
    jpow[j] = (j == 0 && n == 0) ? ExactInt(1) : ExactInt::pow(ExactInt(j), static_cast<unsigned long>(n));
  ExactInt acc = 0;
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= k; ++j) {
      ExactInt term = c[k][j] * jpow[j];
      if ((k - j) % 2 != 0) acc -= term; else acc += term;
    }
  return acc;
}

ExactInt fubini_dyadic_series(int n) {
  require_nonneg(n, "fubini_dyadic_series");
  auto nu = static_cast<unsigned long>(n);
  // Term t_M = M^n / 2^M. For M >= 2(n+2) the term ratio t_{M+1}/t_M is at
  // most e^{1/2}/2 < 5/6, so the tail past M is below 5 t_M; stop once
  // 5 t_M < 1/2, i.e. 10 M^n < 2^M.
  int M = std::max(2 * (n + 2), 16);
  while (ExactInt(10) * ExactInt::pow(ExactInt(M), nu) >= ExactInt::two_pow(M)) M *= 2;
  // Boundary check of the geometric-decay premise: t_{M+1} <= (5/6) t_M.
  if (!(ExactInt(3) * ExactInt::pow(ExactInt(M + 1), nu) <= ExactInt(5) * ExactInt::pow(ExactInt(M), nu)))
    throw std::logic_error("fubini_dyadic_series: tail ratio bound failed");
  // (1/2) sum_{m=0}^{M} m^n/2^m = S / 2^{M+1} with S = sum m^n 2^{M-m}.
  ExactInt s = 0;
  for (int m = 0; m <= M; ++m) {
    ExactInt p = (m == 0 && n == 0) ? ExactInt(1) : ExactInt::pow(ExactInt(m), nu);
    s += p * ExactInt::two_pow(static_cast<unsigned long>(M - m));
  }
  ExactRational value(s, ExactInt::two_pow(static_cast<unsigned long>(M + 1)));
  // Round to nearest and verify the distance is < 1/2.
  mpz_class num = 2 * value.numerator().raw() + value.denominator().raw();
  mpz_class den = 2 * value.denominator().raw();
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  ExactInt rounded{q};
  ExactRational dist = (value - ExactRational(rounded)).abs();
  if (!(dist < ExactRational(1, 2)))
    throw std::logic_error("fubini_dyadic_series: partial sum not within 1/2 of an integer");
  return rounded;
}

std::vector<ExactInt> restricted_fubini_rec_upto(int n, int m) {
  require_nonneg(n, "restricted_fubini_rec");
  require_m_pos(m, "restricted_fubini_rec");
  auto c = pascal_upto(n);
  std::vector<ExactInt> f(n + 1);
  f[0] = 1;
  for (int i = 1; i <= n; ++i) {
    ExactInt acc = 0;
    for (int j = 1; j <= std::min(m, i); ++j) acc += c[i][j] * f[i - j];
    f[i] = acc;
  }
  return f;
}

ExactInt restricted_fubini_rec(int n, int m) { return restricted_fubini_rec_upto(n, m).back(); }

ExactInt restricted_fubini_def(int n, int m) {
  auto row = stirling2_restricted_row(n, m);
  ExactInt acc = 0;
  ExactInt kfac = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfac *= ExactInt(k);
    acc += kfac * row[k];
  }
  return acc;
}

std::vector<ExactInt> associated_fubini_rec_upto(int n, int m) {
  require_nonneg(n, "associated_fubini_rec");
  require_m_pos(m, "associated_fubini_rec");
  auto c = pascal_upto(n);
  std::vector<ExactInt> f(n + 1);
  f[0] = 1;
  for (int i = 1; i <= n; ++i) {
    ExactInt acc = 0;
    for (int j = m; j <= i; ++j) acc += c[i][j] * f[i - j];
    f[i] = acc;
  }
  return f;
}

ExactInt associated_fubini_rec(int n, int m) { return associated_fubini_rec_upto(n, m).back(); }

ExactInt associated_fubini_def(int n, int m) {
  auto row = stirling2_associated_row(n, m);
  ExactInt acc = 0;
  ExactInt kfac = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfac *= ExactInt(k);
    acc += kfac * row[k];
  }
  return acc;
}

std::vector<ExactRational> bernoulli_rec_upto(int n) {
  require_nonneg(n, "bernoulli_rec");
  auto c = pascal_upto(n + 1);
  std::vector<ExactRational> b(n + 1);
  b[0] = 1;
  for (int i = 1; i <= n; ++i) {
    ExactRational acc = 0;
    for (int j = 0; j < i; ++j) acc += ExactRational(c[i + 1][j]) * b[j];
    b[i] = -acc / ExactRational(i + 1);
  }
  return b;
}

ExactRational bernoulli_rec(int n) { return bernoulli_rec_upto(n).back(); }

std::vector<ExactRational> cauchy_rec_upto(int n) {
  require_nonneg(n, "cauchy_rec");
  // b_i = c_i/i!
  std::vector<ExactRational> b(n + 1);
  b[0] = 1;
  for (int i = 1; i <= n; ++i) {
    ExactRational acc = 0;
    for (int j = 1; j <= i; ++j) {
      ExactRational term = b[i - j] / ExactRational(j + 1);
      if (j % 2 == 0) acc -= term; else acc += term;
    }
    b[i] = acc;
  }
  std::vector<ExactRational> c(n + 1);
  ExactInt fac = 1;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fac *= ExactInt(i);
    c[i] = b[i] * ExactRational(fac);
  }
  return c;
}

ExactRational cauchy_rec(int n) { return cauchy_rec_upto(n).back(); }

ExactRational euler_rec(int n) {
  require_nonneg(n, "euler_rec");
  if (n % 2 != 0) return 0;
  int s = n / 2;
  auto c = pascal_upto(n);
  std::vector<ExactRational> e(s + 1);
  e[0] = 1;
  for (int i = 1; i <= s; ++i) {
    ExactRational acc = 0;
    for (int j = 0; j < i; ++j) acc += ExactRational(c[2 * i][2 * j]) * e[j];
    e[i] = -acc;
  }
  return e[s];
}

}  // namespace fubini
