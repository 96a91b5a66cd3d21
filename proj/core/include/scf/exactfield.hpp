#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scf {

using Rational = mpq_class;

// canonical n/d; mpq_class(n, d) alone does not reduce
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt2).
class BaseScalar {
 public:
  BaseScalar() = default;
  BaseScalar(long v) : c_{Rational(v), 0, 0, 0} {}
  BaseScalar(const Rational& v) : c_{v, 0, 0, 0} {}
  BaseScalar(Rational a, Rational b, Rational c, Rational d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static BaseScalar i() { return {0, 1, 0, 0}; }
  static BaseScalar sqrt2() { return {0, 0, 1, 0}; }

  const Rational& operator[](int k) const { return c_[k]; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  BaseScalar operator-() const;
  BaseScalar& operator+=(const BaseScalar& o);
  BaseScalar& operator-=(const BaseScalar& o);
  BaseScalar& operator*=(const BaseScalar& o);
  BaseScalar inverse() const;

  friend BaseScalar operator+(BaseScalar a, const BaseScalar& b) { return a += b; }
  friend BaseScalar operator-(BaseScalar a, const BaseScalar& b) { return a -= b; }
  friend BaseScalar operator*(BaseScalar a, const BaseScalar& b) { return a *= b; }
  friend BaseScalar operator/(const BaseScalar& a, const BaseScalar& b) { return a * b.inverse(); }
  friend bool operator==(const BaseScalar& a, const BaseScalar& b) { return a.c_ == b.c_; }

  // total order on components, used only for canonical sorting
  int compare(const BaseScalar& o) const;

  std::string str() const;

 private:
  std::array<Rational, 4> c_{};
};

enum class Param : std::uint8_t { Delta = 0, Alpha = 1, LambdaSym = 2 };
inline constexpr int kNumParams = 3;
const char* param_name(Param p);

struct Monomial {
  std::array<std::uint16_t, kNumParams> e{};

  int degree() const { return e[0] + e[1] + e[2]; }
  bool is_one() const { return degree() == 0; }
  // graded lexicographic, Delta > alpha > Lambda
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int k = 0; k < kNumParams; ++k) r.e[k] = static_cast<std::uint16_t>(a.e[k] + b.e[k]);
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int k = 0; k < kNumParams; ++k)
      if (e[k] > o.e[k]) return false;
    return true;
  }
};

using Bindings = std::map<Param, Rational>;

// Polynomial in the parameters with coefficients in Q(i, sqrt2).
// Terms are kept sorted by decreasing monomial, no zero coefficients.
class ParamPoly {
 public:
  using Term = std::pair<Monomial, BaseScalar>;

  ParamPoly() = default;
  ParamPoly(const BaseScalar& c);
  ParamPoly(long c) : ParamPoly(BaseScalar(c)) {}
  static ParamPoly var(Param p, int power = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  BaseScalar constant_value() const;
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const BaseScalar& leading_coefficient() const { return terms_.front().second; }
  int degree_in(Param p) const;
  int total_degree() const;
  bool uses(Param p) const { return degree_in(p) > 0; }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly scaled(const BaseScalar& c) const;
  ParamPoly times_monomial(const Monomial& m, const BaseScalar& c) const;
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  // exact division; nullopt when b does not divide a
  static std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);
  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
  ParamPoly monic() const;

  BaseScalar eval(const Bindings& b) const;
  // substitute the bound parameters, keep the others symbolic
  ParamPoly substitute(const Bindings& b) const;

  // coefficients in powers of p (index = power)
  std::vector<ParamPoly> coefficients_in(Param p) const;
  static ParamPoly from_coefficients(Param p, const std::vector<ParamPoly>& cs);

  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Rational function num/den in the parameters, kept in lowest terms
// with monic denominator. Parameter-free values skip the polynomial layer.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c_(v) {}
  Scalar(const Rational& v) : c_(v) {}
  Scalar(const BaseScalar& v) : c_(v) {}
  Scalar(const ParamPoly& p);
  static Scalar fraction(const ParamPoly& num, const ParamPoly& den);
  static Scalar param(Param p) { return Scalar(ParamPoly::var(p)); }
  static Scalar i() { return Scalar(BaseScalar::i()); }
  static Scalar sqrt2() { return Scalar(BaseScalar::sqrt2()); }
  static Scalar rational(long n, long d) { return Scalar(make_rational(n, d)); }

  bool is_zero() const { return !sym_ && c_.is_zero(); }
  bool is_one() const { return !sym_ && c_.is_one(); }
  bool is_constant() const { return !sym_; }
  bool is_rational() const { return !sym_ && c_.is_rational(); }
  const BaseScalar& constant() const;
  Rational rational_value() const;
  std::optional<long> as_integer() const;
  ParamPoly numerator() const;
  ParamPoly denominator() const;
  bool uses(Param p) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  Scalar inverse() const;
  Scalar pow(int n) const;

  Scalar eval(const Bindings& b) const;

  std::string str() const;

 private:
  struct Fraction {
    ParamPoly num, den;
  };
  static Scalar make(ParamPoly num, ParamPoly den);
  BaseScalar c_{};
  std::shared_ptr<const Fraction> sym_;
};

// Parses expressions like "(Delta^2 - 1)/(Delta + 2)", "1/2*SQRT2 - 3*I".
// Identifiers: Delta, alpha, Lambda, I, SQRT2.
Scalar parse_scalar(std::string_view text);
// same, with extra identifiers bound to values (checked before the built-in names)
using ScalarVars = std::map<std::string, Scalar, std::less<>>;
Scalar parse_scalar(std::string_view text, const ScalarVars& vars);

// Distinct rational roots of a univariate polynomial in p with rational coefficients.
std::vector<Rational> rational_roots(const ParamPoly& poly, Param p);

// Primitive integer form of a rational polynomial in one variable, positive leading coefficient.
ParamPoly primitive_part(const ParamPoly& poly);

std::string rational_str(const Rational& q);

}  // namespace scf
