#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace corecalc {

/** Exact rational scalar. Canonical at all times: denominator > 0, gcd(num, den) = 1. */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT: implicit by design, scalar type
  Rational(long n) : v_(mpz_class(n)) {}    // NOLINT
  Rational(long long n) : v_(mpz_class(std::to_string(n))) {}  // NOLINT
  Rational(long n, long d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /** Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input or q = 0. */
  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /** "p" when integral, else "p/q". */
  std::string str() const;

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ + b.v_;
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ - b.v_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.v_ = a.v_ * b.v_;
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
  friend Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
  friend Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/** Rational extended with +inf / -inf, for suprema and function values. */
class ExtRational {
 public:
  enum class Kind : std::uint8_t { Finite, PlusInf, MinusInf };

  ExtRational() : kind_(Kind::Finite) {}
  ExtRational(Rational v) : kind_(Kind::Finite), v_(std::move(v)) {}  // NOLINT
  static ExtRational plus_inf() { return ExtRational(Kind::PlusInf); }
  static ExtRational minus_inf() { return ExtRational(Kind::MinusInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
  bool is_minus_inf() const { return kind_ == Kind::MinusInf; }

  /** Finite value; caller must check is_finite() first. */
  const Rational& value() const;

  /** "p/q", "inf", or "-inf". */
  std::string str() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.v_ == b.v_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }

 private:
  explicit ExtRational(Kind k) : kind_(k) {}
  Kind kind_;
  Rational v_;
};

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

/** Exact dot product; dimensions must agree. */
Rational dot(const Vec& a, const Vec& b);

Vec zero_vec(Index n);
Vec unit_vec(Index n, Index i);

std::string vec_str(const Vec& v);

}  // namespace corecalc

namespace Eigen {

template <>
struct NumTraits<corecalc::Rational> : GenericNumTraits<corecalc::Rational> {
  using Real = corecalc::Rational;
  using NonInteger = corecalc::Rational;
  using Literal = corecalc::Rational;
  using Nested = corecalc::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };

  static inline Real epsilon() { return corecalc::Rational(0); }
  static inline Real dummy_precision() { return corecalc::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
