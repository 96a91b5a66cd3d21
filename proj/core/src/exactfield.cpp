#include "scf/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <sstream>

namespace scf {

// ---------------------------------------------------------------- BaseScalar

bool BaseScalar::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool BaseScalar::is_one() const { return c_[0] == 1 && is_rational(); }

bool BaseScalar::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

BaseScalar BaseScalar::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

BaseScalar& BaseScalar::operator+=(const BaseScalar& o) {
  for (int k = 0; k < 4; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
  return *this;
}

BaseScalar& BaseScalar::operator-=(const BaseScalar& o) {
  for (int k = 0; k < 4; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
  return *this;
}

BaseScalar& BaseScalar::operator*=(const BaseScalar& o) {
  if (o.is_rational()) {
    for (auto& x : c_)
      if (sgn(x) != 0) x *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    Rational a = c_[0];
    for (int k = 0; k < 4; ++k) c_[k] = a * o.c_[k];
    return *this;
  }
  // basis 1, i, s, is with i^2 = -1, s^2 = 2
  const Rational &a = c_[0], &b = c_[1], &c = c_[2], &d = c_[3];
  const Rational &e = o.c_[0], &f = o.c_[1], &g = o.c_[2], &h = o.c_[3];
  Rational r0 = a * e - b * f + 2 * c * g - 2 * d * h;
  Rational r1 = a * f + b * e + 2 * c * h + 2 * d * g;
  Rational r2 = a * g + c * e - b * h - d * f;
  Rational r3 = a * h + d * e + b * g + c * f;
  c_ = {r0, r1, r2, r3};
  return *this;
}

BaseScalar BaseScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) return BaseScalar(Rational(1) / c_[0]);
  // x = A + B s with A, B in Q(i); x (A - B s) = A^2 - 2 B^2 = C in Q(i)
  BaseScalar conj_s{c_[0], c_[1], -c_[2], -c_[3]};
  BaseScalar prod = *this * conj_s;  // only components 0, 1 survive
  Rational re = prod.c_[0], im = prod.c_[1];
  Rational norm = re * re + im * im;
  BaseScalar conj_c{re / norm, -im / norm, 0, 0};
  return conj_s * conj_c;
}

int BaseScalar::compare(const BaseScalar& o) const {
  for (int k = 0; k < 4; ++k) {
    int c = cmp(c_[k], o.c_[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string BaseScalar::str() const {
  static const char* unit[4] = {"", "I", "SQRT2", "I*SQRT2"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (sgn(c_[k]) == 0) continue;
    Rational v = c_[k];
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    std::string body;
    if (k == 0)
      body = rational_str(v);
    else if (v == 1)
      body = unit[k];
    else
      body = rational_str(v) + "*" + unit[k];
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += neg ? " - " + body : " + " + body;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- ParamPoly

const char* param_name(Param p) {
  switch (p) {
    case Param::Delta: return "Delta";
    case Param::Alpha: return "alpha";
    case Param::LambdaSym: return "Lambda";
  }
  return "?";
}

ParamPoly::ParamPoly(const BaseScalar& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

ParamPoly ParamPoly::var(Param p, int power) {
  ParamPoly r;
  Monomial m;
  m.e[static_cast<int>(p)] = static_cast<std::uint16_t>(power);
  r.terms_.emplace_back(m, BaseScalar(1));
  return r;
}

BaseScalar ParamPoly::constant_value() const {
  if (terms_.empty()) return BaseScalar();
  if (!terms_.back().first.is_one()) return BaseScalar();
  return terms_.back().second;
}

int ParamPoly::degree_in(Param p) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.e[static_cast<int>(p)]);
  return d;
}

int ParamPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

void ParamPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return b.first < a.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second.is_zero(); }), out.end());
  terms_ = std::move(out);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& t : o.terms_) terms_.emplace_back(t.first, -t.second);
  normalize();
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.emplace_back(x.first * y.first, x.second * y.second);
  r.normalize();
  return r;
}

ParamPoly ParamPoly::scaled(const BaseScalar& c) const {
  if (c.is_zero()) return {};
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

ParamPoly ParamPoly::times_monomial(const Monomial& m, const BaseScalar& c) const {
  if (c.is_zero()) return {};
  ParamPoly r = *this;
  for (auto& t : r.terms_) {
    t.first = t.first * m;
    t.second *= c;
  }
  return r;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].first == b.terms_[k].first) || !(a.terms_[k].second == b.terms_[k].second)) return false;
  return true;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  ParamPoly q, r = a;
  const Monomial& lb = b.leading_monomial();
  BaseScalar inv_lc = b.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    Monomial m;
    for (int k = 0; k < kNumParams; ++k) m.e[k] = static_cast<std::uint16_t>(lr.e[k] - lb.e[k]);
    BaseScalar c = r.leading_coefficient() * inv_lc;
    q.terms_.emplace_back(m, c);
    r -= b.times_monomial(m, c);
  }
  q.normalize();
  return q;
}

std::vector<ParamPoly> ParamPoly::coefficients_in(Param p) const {
  int idx = static_cast<int>(p);
  std::vector<ParamPoly> cs(degree_in(p) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.first;
    int k = m.e[idx];
    m.e[idx] = 0;
    cs[k].terms_.emplace_back(m, t.second);
  }
  for (auto& c : cs) c.normalize();
  return cs;
}

ParamPoly ParamPoly::from_coefficients(Param p, const std::vector<ParamPoly>& cs) {
  ParamPoly r;
  Monomial m;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    m.e[static_cast<int>(p)] = static_cast<std::uint16_t>(k);
    for (const auto& t : cs[k].terms_) r.terms_.emplace_back(t.first * m, t.second);
  }
  r.normalize();
  return r;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return {};
  return scaled(leading_coefficient().inverse());
}

namespace {

ParamPoly content_in(const ParamPoly& a, Param p) {
  ParamPoly g;
  for (const auto& c : a.coefficients_in(p)) {
    if (c.is_zero()) continue;
    g = ParamPoly::gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

ParamPoly exact(const ParamPoly& a, const ParamPoly& b) {
  auto q = ParamPoly::divide_exact(a, b);
  if (!q) throw ArithmeticError("internal: inexact polynomial division");
  return *q;
}

// lc(B)^(m-n+1) A mod B, both viewed as polynomials in p
ParamPoly pseudo_remainder(const ParamPoly& A, const ParamPoly& B, Param p) {
  auto a = A.coefficients_in(p);
  auto b = B.coefficients_in(p);
  int n = static_cast<int>(b.size()) - 1;
  const ParamPoly& lb = b[n];
  for (int k = static_cast<int>(a.size()) - 1; k >= n; --k) {
    ParamPoly top = a[k];
    for (auto& c : a) c = c * lb;
    if (!top.is_zero())
      for (int j = 0; j <= n; ++j) a[k - n + j] -= top * b[j];
  }
  a.resize(n);
  return ParamPoly::from_coefficients(p, a);
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  if (a == b) return a.monic();
  for (int k = 0; k < kNumParams; ++k) {
    Param p = static_cast<Param>(k);
    bool ua = a.uses(p), ub = b.uses(p);
    if (!ua && !ub) continue;
    if (ua && !ub) return gcd(content_in(a, p), b);
    if (ub && !ua) return gcd(a, content_in(b, p));
    ParamPoly ca = content_in(a, p), cb = content_in(b, p);
    ParamPoly A = exact(a, ca), B = exact(b, cb);
    ParamPoly c = gcd(ca, cb);
    if (A.degree_in(p) < B.degree_in(p)) std::swap(A, B);
    ParamPoly g(1);
    while (true) {
      ParamPoly R = pseudo_remainder(A, B, p);
      if (R.is_zero()) {
        g = B;
        break;
      }
      if (R.degree_in(p) == 0) break;
      A = std::move(B);
      B = exact(R, content_in(R, p));
    }
    if (g.degree_in(p) > 0) g = exact(g, content_in(g, p));
    return (c * g).monic();
  }
  return ParamPoly(1);
}

BaseScalar ParamPoly::eval(const Bindings& b) const {
  BaseScalar r;
  for (const auto& t : terms_) {
    BaseScalar v = t.second;
    for (int k = 0; k < kNumParams; ++k) {
      if (t.first.e[k] == 0) continue;
      auto it = b.find(static_cast<Param>(k));
      if (it == b.end()) throw ArithmeticError(std::string("unbound parameter ") + param_name(static_cast<Param>(k)));
      Rational pw = 1;
      for (int j = 0; j < t.first.e[k]; ++j) pw *= it->second;
      v *= BaseScalar(pw);
    }
    r += v;
  }
  return r;
}

ParamPoly ParamPoly::substitute(const Bindings& b) const {
  ParamPoly r;
  for (const auto& t : terms_) {
    Monomial m = t.first;
    BaseScalar v = t.second;
    for (int k = 0; k < kNumParams; ++k) {
      auto it = b.find(static_cast<Param>(k));
      if (it == b.end() || m.e[k] == 0) continue;
      Rational pw = 1;
      for (int j = 0; j < m.e[k]; ++j) pw *= it->second;
      v *= BaseScalar(pw);
      m.e[k] = 0;
    }
    r.terms_.emplace_back(m, v);
  }
  r.normalize();
  return r;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int k = 0; k < kNumParams; ++k) {
      if (m.e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += param_name(static_cast<Param>(k));
      if (m.e[k] > 1) mono += "^" + std::to_string(m.e[k]);
    }
    bool neg = false;
    std::string body;
    if (c.is_rational()) {
      Rational v = c[0];
      neg = sgn(v) < 0;
      if (neg) v = -v;
      if (mono.empty())
        body = rational_str(v);
      else if (v == 1)
        body = mono;
      else
        body = rational_str(v) + "*" + mono;
    } else {
      body = "(" + c.str() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += neg ? " - " + body : " + " + body;
  }
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const ParamPoly& p) {
  if (p.is_constant())
    c_ = p.constant_value();
  else
    sym_ = std::make_shared<const Fraction>(Fraction{p, ParamPoly(1)});
}

Scalar Scalar::make(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw ArithmeticError("division by zero");
  if (num.is_zero()) return Scalar();
  if (den.is_constant()) {
    num = num.scaled(den.constant_value().inverse());
    return Scalar(num);
  }
  if (!num.is_constant()) {
    ParamPoly g = ParamPoly::gcd(num, den);
    if (!g.is_constant()) {
      num = exact(num, g);
      den = exact(den, g);
    }
  }
  BaseScalar lc = den.leading_coefficient().inverse();
  num = num.scaled(lc);
  den = den.scaled(lc);
  if (den.is_constant()) return Scalar(num);
  Scalar r;
  r.sym_ = std::make_shared<const Fraction>(Fraction{std::move(num), std::move(den)});
  return r;
}

Scalar Scalar::fraction(const ParamPoly& num, const ParamPoly& den) { return make(num, den); }

const BaseScalar& Scalar::constant() const {
  if (sym_) throw ArithmeticError("scalar depends on parameters: " + str());
  return c_;
}

Rational Scalar::rational_value() const {
  const BaseScalar& c = constant();
  if (!c.is_rational()) throw ArithmeticError("scalar is not rational: " + str());
  return c[0];
}

std::optional<long> Scalar::as_integer() const {
  if (!is_rational()) return std::nullopt;
  const Rational& q = c_[0];
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

ParamPoly Scalar::numerator() const { return sym_ ? sym_->num : ParamPoly(c_); }
ParamPoly Scalar::denominator() const { return sym_ ? sym_->den : ParamPoly(1); }

bool Scalar::uses(Param p) const { return sym_ && (sym_->num.uses(p) || sym_->den.uses(p)); }

Scalar Scalar::operator-() const {
  if (!sym_) return Scalar(-c_);
  Scalar r;
  r.sym_ = std::make_shared<const Fraction>(Fraction{-sym_->num, sym_->den});
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!sym_ && !o.sym_) {
    c_ += o.c_;
    return *this;
  }
  ParamPoly an = numerator(), ad = denominator(), bn = o.numerator(), bd = o.denominator();
  if (ad == bd)
    *this = make(an + bn, ad);
  else
    *this = make(an * bd + bn * ad, ad * bd);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!sym_ && !o.sym_) {
    c_ *= o.c_;
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (!o.sym_) {
    auto f = std::make_shared<const Fraction>(Fraction{sym_->num.scaled(o.c_), sym_->den});
    sym_ = f;
    return *this;
  }
  if (!sym_) {
    BaseScalar c = c_;
    sym_ = std::make_shared<const Fraction>(Fraction{o.sym_->num.scaled(c), o.sym_->den});
    c_ = BaseScalar();
    return *this;
  }
  *this = make(sym_->num * o.sym_->num, sym_->den * o.sym_->den);
  return *this;
}

Scalar Scalar::inverse() const {
  if (!sym_) return Scalar(c_.inverse());
  return make(sym_->den, sym_->num);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (!sym_ && !o.sym_) {
    c_ = c_ / o.c_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.sym_ && !b.sym_) return a.c_ == b.c_;
  if (!a.sym_ || !b.sym_) return false;
  return a.sym_->num == b.sym_->num && a.sym_->den == b.sym_->den;
}

Scalar Scalar::eval(const Bindings& b) const {
  if (!sym_) return *this;
  return make(sym_->num.substitute(b), sym_->den.substitute(b));
}

std::string Scalar::str() const {
  if (!sym_) return c_.str();
  if (sym_->den.is_constant()) return sym_->num.str();
  return "(" + sym_->num.str() + ")/(" + sym_->den.str() + ")";
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s, const ScalarVars* vars = nullptr) : s_(s), vars_(vars) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("cannot parse scalar \"" + std::string(s_) + "\": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (eat('*'))
        v *= unary();
      else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else
        return v;
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return base.pow(neg ? -n : n);
    }
    return base;
  }
  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (vars_) {
        auto it = vars_->find(id);
        if (it != vars_->end()) return it->second;
      }
      if (id == "I") return Scalar::i();
      if (id == "SQRT2") return Scalar::sqrt2();
      if (id == "Delta" || id == "D") return Scalar::param(Param::Delta);
      if (id == "alpha") return Scalar::param(Param::Alpha);
      if (id == "Lambda" || id == "L") return Scalar::param(Param::LambdaSym);
      fail("unknown identifier " + id);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ScalarVars* vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }
Scalar parse_scalar(std::string_view text, const ScalarVars& vars) { return Parser(text, &vars).parse(); }

// ---------------------------------------------------------------- roots

ParamPoly primitive_part(const ParamPoly& poly) {
  if (poly.is_zero()) return poly;
  mpz_class den = 1, g = 0;
  for (const auto& t : poly.terms()) {
    if (!t.second.is_rational()) throw ArithmeticError("primitive_part needs rational coefficients");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second[0].get_den_mpz_t());
  }
  for (const auto& t : poly.terms()) {
    mpz_class n = t.second[0].get_num() * (den / t.second[0].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den, g);
  scale.canonicalize();
  if (sgn(poly.leading_coefficient()[0]) < 0) scale = -scale;
  return poly.scaled(BaseScalar(scale));
}

namespace {

using Cx = std::complex<long double>;

std::vector<Cx> numeric_roots(const std::vector<Rational>& coef) {
  int n = static_cast<int>(coef.size()) - 1;
  std::vector<Cx> a(n + 1);
  for (int k = 0; k <= n; ++k) a[k] = static_cast<long double>(coef[k].get_d()) / static_cast<long double>(coef[n].get_d());
  std::vector<Cx> z(n);
  Cx seed(0.4L, 0.9L);
  for (int k = 0; k < n; ++k) z[k] = std::pow(seed, k + 1) * 1.5L;
  auto eval = [&](Cx x) {
    Cx v = a[n];
    for (int k = n - 1; k >= 0; --k) v = v * x + a[k];
    return v;
  };
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (int k = 0; k < n; ++k) {
      Cx den = 1;
      for (int j = 0; j < n; ++j)
        if (j != k) den *= (z[k] - z[j]);
      if (std::abs(den) == 0) den = 1e-30L;
      Cx step = eval(z[k]) / den;
      z[k] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-30L) break;
  }
  return z;
}

bool is_root(const std::vector<Rational>& coef, const Rational& x) {
  Rational v = 0;
  for (int k = static_cast<int>(coef.size()) - 1; k >= 0; --k) v = v * x + coef[k];
  return sgn(v) == 0;
}

// divide by (x - r) exactly
std::vector<Rational> deflate(const std::vector<Rational>& coef, const Rational& r) {
  int n = static_cast<int>(coef.size()) - 1;
  std::vector<Rational> q(n);
  Rational carry = 0;
  for (int k = n; k >= 1; --k) {
    carry = coef[k] + carry * r;
    q[k - 1] = carry;
  }
  return q;
}

std::optional<Rational> rationalize(long double x, const std::vector<Rational>& coef) {
  // continued fraction convergents
  long double v = x;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int step = 0; step < 40; ++step) {
    long double fl = std::floor(v);
    if (std::fabs(fl) > 1e18L) break;
    mpz_class a = static_cast<long>(fl);
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational cand(h1, k1);
    cand.canonicalize();
    if (is_root(coef, cand)) return cand;
    long double frac = v - fl;
    if (frac < 1e-15L) break;
    v = 1.0L / frac;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rational> rational_roots(const ParamPoly& poly, Param p) {
  if (poly.is_zero()) throw ArithmeticError("rational_roots of zero polynomial");
  for (int k = 0; k < kNumParams; ++k)
    if (static_cast<Param>(k) != p && poly.uses(static_cast<Param>(k)))
      throw ArithmeticError("rational_roots needs a univariate polynomial");
  // rational roots are common roots of the four component polynomials
  ParamPoly rat;
  for (int comp = 0; comp < 4; ++comp) {
    ParamPoly part;
    std::vector<ParamPoly> cs = poly.coefficients_in(p);
    for (auto& c : cs) c = ParamPoly(BaseScalar(c.constant_value()[comp]));
    part = ParamPoly::from_coefficients(p, cs);
    rat = ParamPoly::gcd(rat, part);
  }
  if (rat.is_zero() || rat.is_constant()) return {};
  // square-free part
  auto cs = rat.coefficients_in(p);
  std::vector<ParamPoly> dcs;
  for (std::size_t k = 1; k < cs.size(); ++k) dcs.push_back(cs[k].scaled(BaseScalar(static_cast<long>(k))));
  ParamPoly deriv = ParamPoly::from_coefficients(p, dcs);
  ParamPoly g = ParamPoly::gcd(rat, deriv);
  ParamPoly sf = *ParamPoly::divide_exact(rat, g);
  std::vector<Rational> coef;
  for (const auto& c : sf.coefficients_in(p)) coef.push_back(c.constant_value()[0]);

  std::vector<Rational> roots;
  // cheap exact probes first: zero and small fractions
  while (coef.size() > 1 && sgn(coef[0]) == 0) {
    roots.push_back(0);
    coef.erase(coef.begin());
  }
  bool found = true;
  while (coef.size() > 1 && found) {
    found = false;
    if (coef.size() == 2) {
      roots.push_back(-coef[0] / coef[1]);
      coef = {coef[1]};
      break;
    }
    for (const Cx& z : numeric_roots(coef)) {
      if (std::fabs(z.imag()) > 1e-6L * (1 + std::fabs(z.real()))) continue;
      if (auto r = rationalize(z.real(), coef)) {
        roots.push_back(*r);
        coef = deflate(coef, *r);
        found = true;
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace scf
