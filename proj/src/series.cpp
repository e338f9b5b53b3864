#include "fubini/series.hpp"

#include <stdexcept>

#include "fubini/kernel.hpp"

namespace fubini {

TruncatedEGF::TruncatedEGF(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedEGF: order must be >= 0");
  c_.assign(static_cast<size_t>(order) + 1, ExactRational(0));
}

TruncatedEGF::TruncatedEGF(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("TruncatedEGF: needs at least the constant term");
}

namespace {

void require_same_order(const TruncatedEGF& a, const TruncatedEGF& b, const char* who) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(who) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
}

}  // namespace

TruncatedEGF ps_add(const TruncatedEGF& a, const TruncatedEGF& b) {
  require_same_order(a, b, "ps_add");
  TruncatedEGF r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

TruncatedEGF ps_sub(const TruncatedEGF& a, const TruncatedEGF& b) {
  require_same_order(a, b, "ps_sub");
  TruncatedEGF r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

TruncatedEGF ps_mul(const TruncatedEGF& a, const TruncatedEGF& b) {
  require_same_order(a, b, "ps_mul");
  const int n = a.order();
  TruncatedEGF r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncatedEGF ps_reciprocal(const TruncatedEGF& a) {
  if (a[0].is_zero()) throw std::domain_error("ps_reciprocal: zero constant term");
  const int n = a.order();
  TruncatedEGF b(n);
  ExactRational inv0 = a[0].inverse();
  b[0] = inv0;
  for (int i = 1; i <= n; ++i) {
    ExactRational acc = 0;
    for (int j = 1; j <= i; ++j) acc += a[j] * b[i - j];
    b[i] = -(inv0 * acc);
  }
  return b;
}

TruncatedEGF exp_series(int order) {
  TruncatedEGF r(order);
  ExactInt fac = 1;
  for (int i = 0; i <= order; ++i) {
    if (i > 0) fac *= ExactInt(i);
    r[i] = ExactRational(ExactInt(1), fac);
  }
  return r;
}

TruncatedEGF log1p_series(int order) {
  TruncatedEGF r(order);
  for (int i = 1; i <= order; ++i) {
    r[i] = ExactRational((i % 2 != 0) ? 1 : -1, i);
  }
  return r;
}

TruncatedEGF cosh_series(int order) {
  TruncatedEGF r(order);
  for (int i = 0; i <= order; i += 2) r[i] = ExactRational(ExactInt(1), factorial(i));
  return r;
}

TruncatedEGF poly_F_m(int m, int order) {
  if (m < 1) throw std::invalid_argument("poly_F_m: m must be >= 1");
  TruncatedEGF r(order);
  for (int i = 1; i <= std::min(m, order); ++i) r[i] = ExactRational((i % 2 != 0) ? 1 : -1, i);
  return r;
}

TruncatedEGF poly_E_m(int m, int order) {
  if (m < 1) throw std::invalid_argument("poly_E_m: m must be >= 1");
  TruncatedEGF r(order);
  for (int i = 0; i <= std::min(m, order); ++i) r[i] = ExactRational(ExactInt(1), factorial(i));
  return r;
}

TruncatedEGF family_egf(const FamilyId& family, int order) {
  if (order < 0) throw std::invalid_argument("family_egf: order must be >= 0");
  const int n = order;
  switch (family.tag) {
    case FamilyTag::fubini: {
      // 1/(2 - e^t) = 1/(1 - t - t^2/2! - ...)
      TruncatedEGF d(n);
      d[0] = 1;
      for (int i = 1; i <= n; ++i) d[i] = ExactRational(ExactInt(-1), factorial(i));
      return ps_reciprocal(d);
    }
    case FamilyTag::fubini_restricted: {
      // 1/(1 - t - t^2/2! - ... - t^m/m!)
      TruncatedEGF d(n);
      d[0] = 1;
      for (int i = 1; i <= std::min(family.m, n); ++i) d[i] = ExactRational(ExactInt(-1), factorial(i));
      return ps_reciprocal(d);
    }
    case FamilyTag::fubini_associated: {
      // 1/(1 - t^m/m! - t^{m+1}/(m+1)! - ...)
      TruncatedEGF d(n);
      d[0] = 1;
      for (int i = family.m; i <= n; ++i) d[i] = ExactRational(ExactInt(-1), factorial(i));
      return ps_reciprocal(d);
    }
    case FamilyTag::bernoulli: {
      // t/(e^t - 1); denominator over t is sum t^j/(j+1)!
      TruncatedEGF d(n);
      for (int j = 0; j <= n; ++j) d[j] = ExactRational(ExactInt(1), factorial(j + 1));
      return ps_reciprocal(d);
    }
    case FamilyTag::cauchy: {
      // t/ln(1+t); denominator over t is sum (-1)^j t^j/(j+1)
      TruncatedEGF d(n);
      for (int j = 0; j <= n; ++j) d[j] = ExactRational((j % 2 == 0) ? 1 : -1, j + 1);
      return ps_reciprocal(d);
    }
    case FamilyTag::euler:
      return ps_reciprocal(cosh_series(n));
    case FamilyTag::mod_cauchy_restricted: {
      // t/F_m(t); denominator over t is sum_{j<=m-1} (-1)^j t^j/(j+1)
      TruncatedEGF d(n);
      for (int j = 0; j <= std::min(family.m - 1, n); ++j) d[j] = ExactRational((j % 2 == 0) ? 1 : -1, j + 1);
      return ps_reciprocal(d);
    }
    case FamilyTag::mod_cauchy_associated: {
      // t/(ln(1+t) - F_{m-1}(t) + t); over t: 1 + sum_{j>=m-1} (-1)^j t^j/(j+1)
      TruncatedEGF d(n);
      d[0] = 1;
      for (int j = family.m - 1; j <= n; ++j) d[j] += ExactRational((j % 2 == 0) ? 1 : -1, j + 1);
      return ps_reciprocal(d);
    }
    case FamilyTag::mod_bernoulli_restricted: {
      // t/(E_m(t) - 1); over t: sum_{j<=m-1} t^j/(j+1)!
      TruncatedEGF d(n);
      for (int j = 0; j <= std::min(family.m - 1, n); ++j) d[j] = ExactRational(ExactInt(1), factorial(j + 1));
      return ps_reciprocal(d);
    }
    case FamilyTag::mod_bernoulli_associated: {
      // t/(e^t - E_{m-1}(t) + t); over t: 1 + sum_{j>=m-1} t^j/(j+1)!
      TruncatedEGF d(n);
      d[0] = 1;
      for (int j = family.m - 1; j <= n; ++j) d[j] += ExactRational(ExactInt(1), factorial(j + 1));
      return ps_reciprocal(d);
    }
    case FamilyTag::gen_fubini: {
      TruncatedEGF base = family_egf(FamilyId::fubini(), n);
      TruncatedEGF acc = base;
      for (int i = 1; i < family.k; ++i) acc = ps_mul(acc, base);
      return acc;
    }
  }
  throw std::invalid_argument("family_egf: unknown family");
}

ExactRational number_from_egf(const FamilyId& family, int n) {
  if (n < 0) throw std::invalid_argument("number_from_egf: n must be >= 0");
  ExactRational coeff = family_egf(family, n)[n];
  if (family.tag == FamilyTag::gen_fubini) return coeff;
  ExactRational value = coeff * ExactRational(factorial(n));
  if (family.integer_valued() && !value.is_integer())
    throw std::logic_error("number_from_egf: expected an integer for " + family.display() +
                           " at n=" + std::to_string(n) + ", got " + value.str());
  return value;
}

}  // namespace fubini
