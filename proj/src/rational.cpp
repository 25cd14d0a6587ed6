#include "corecalc/rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace corecalc {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(mpz_class(n), mpz_class(d));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  Rational r = a;
  r /= b;
  return r;
}

Rational Rational::parse(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto check_int = [&](std::string_view t) {
    if (t.empty()) throw bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw bad();
  };
  if (slash == std::string_view::npos) {
    check_int(s);
    Rational r;
    r.v_ = mpq_class(mpz_class(std::string(s)));
    return r;
  }
  const std::string_view ns = s.substr(0, slash);
  const std::string_view ds = s.substr(slash + 1);
  check_int(ns);
  check_int(ds);
  const mpz_class den{std::string(ds)};
  if (den == 0) throw bad();
  Rational r;
  r.v_ = mpq_class(mpz_class(std::string(ns)), den);
  r.v_.canonicalize();
  return r;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

const Rational& ExtRational::value() const {
  if (!is_finite()) throw std::logic_error("value() on infinite ExtRational");
  return v_;
}

std::string ExtRational::str() const {
  switch (kind_) {
    case Kind::PlusInf:
      return "inf";
    case Kind::MinusInf:
      return "-inf";
    default:
      return v_.str();
  }
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s(0);
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec zero_vec(Index n) { return Vec::Constant(n, Rational(0)); }

Vec unit_vec(Index n, Index i) {
  Vec v = zero_vec(n);
  v[i] = Rational(1);
  return v;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  s += ")";
  return s;
}

}  // namespace corecalc
