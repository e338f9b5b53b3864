#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace fubini {

/// Arbitrary-precision signed integer. Exact at any magnitude.
class ExactInt {
 public:
  ExactInt() : v_(0) {}
  ExactInt(long v) : v_(v) {}
  ExactInt(int v) : v_(v) {}
  explicit ExactInt(const std::string& decimal) : v_(decimal) {}
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  const mpz_class& raw() const { return v_; }

  ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }

  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

  friend ExactInt operator+(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ + b.v_)); }
  friend ExactInt operator-(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ - b.v_)); }
  friend ExactInt operator*(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ * b.v_)); }

  /// Quotient of an exact division; throws if b does not divide a.
  friend ExactInt div_exact(const ExactInt& a, const ExactInt& b) {
    if (b.v_ == 0) throw std::domain_error("div_exact: division by zero");
    if (!mpz_divisible_p(a.v_.get_mpz_t(), b.v_.get_mpz_t()))
      throw std::domain_error("div_exact: not divisible");
    ExactInt q;
    mpz_divexact(q.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return q;
  }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactInt& a, const ExactInt& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactInt& a, const ExactInt& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactInt& a, const ExactInt& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactInt& a, const ExactInt& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactInt& a, const ExactInt& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()); }
  int sign() const { return mpz_sgn(v_.get_mpz_t()); }

  ExactInt abs() const { return ExactInt(mpz_class(::abs(v_))); }

  static ExactInt pow(const ExactInt& base, unsigned long e) {
    ExactInt r;
    mpz_pow_ui(r.v_.get_mpz_t(), base.v_.get_mpz_t(), e);
    return r;
  }

  /// 2^e
  static ExactInt two_pow(unsigned long e) { return pow(ExactInt(2), e); }

  /// Value as long; throws if out of range.
  long to_long() const {
    if (!v_.fits_slong_p()) throw std::domain_error("ExactInt: value does not fit in long");
    return v_.get_si();
  }

  std::string str() const { return v_.get_str(); }

 private:
  mpz_class v_;
};

/// Arbitrary-precision rational, always reduced with positive denominator.
/// Canonical zero is 0/1.
class ExactRational {
 public:
  ExactRational() : v_(0) {}
  ExactRational(long v) : v_(v) {}
  ExactRational(int v) : v_(v) {}
  ExactRational(const ExactInt& v) : v_(v.raw()) {}
  ExactRational(long num, long den) : v_(num, den) { canonicalize(); }
  ExactRational(const ExactInt& num, const ExactInt& den) : v_(num.raw(), den.raw()) { canonicalize(); }
  /// Parses "p" or "p/q".
  explicit ExactRational(const std::string& s) : v_(s) { canonicalize(); }

  ExactInt numerator() const { return ExactInt(mpz_class(v_.get_num())); }
  ExactInt denominator() const { return ExactInt(mpz_class(v_.get_den())); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  /// Value as ExactInt; throws if not an integer.
  ExactInt to_int() const {
    if (!is_integer()) throw std::domain_error("ExactRational: " + str() + " is not an integer");
    return numerator();
  }

  ExactRational operator-() const {
    ExactRational r;
    r.v_ = -v_;
    return r;
  }

  ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.v_ == 0) throw std::domain_error("ExactRational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { a += b; return a; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { a -= b; return a; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { a *= b; return a; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { a /= b; return a; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.v_ >= b.v_; }

  ExactRational abs() const {
    ExactRational r;
    mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  static ExactRational pow(const ExactRational& base, unsigned long e) {
    ExactRational r(1);
    mpz_pow_ui(r.v_.get_num_mpz_t(), base.v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.v_.get_den_mpz_t(), base.v_.get_den().get_mpz_t(), e);
    return r;  // base reduced => base^e reduced
  }

  /// Reciprocal; throws on zero.
  ExactRational inverse() const {
    if (v_ == 0) throw std::domain_error("ExactRational: inverse of zero");
    ExactRational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  /// "p/q", with "/q" omitted when q = 1.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  void canonicalize() {
    if (v_.get_den() == 0) throw std::domain_error("ExactRational: zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

}  // namespace fubini
