#include "scf/grassmann.hpp"

#include <stdexcept>

namespace scf {

int wedge_sign(std::uint8_t a, std::uint8_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int j = 0; j < 8; ++j)
    if (b & (1u << j)) swaps += __builtin_popcount(a >> (j + 1));
  return (swaps & 1) ? -1 : 1;
}

GElement GElement::monomial(int n, int tpow, std::uint8_t mask, const Scalar& c, GBasis basis) {
  GElement r(n, basis);
  r.add({tpow, mask}, c);
  return r;
}

GElement GElement::term(int n, const Scalar& c, int tpow, std::initializer_list<int> xis, GBasis basis) {
  GElement r(n, basis);
  Scalar coef = c;
  std::uint8_t mask = 0;
  for (int x : xis) {
    if (x < 1 || x > n) throw std::invalid_argument("odd generator index out of range");
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (x - 1));
    int s = wedge_sign(mask, bit);
    if (s == 0) return r;
    if (s < 0) coef = -coef;
    mask |= bit;
  }
  r.add({tpow, mask}, coef);
  return r;
}

void GElement::add(const GMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GElement::check_compatible(const GElement& o) const {
  if (o.terms_.empty() || terms_.empty()) return;
  if (n_ != o.n_ || basis_ != o.basis_) throw std::invalid_argument("incompatible Grassmann elements");
}

GElement GElement::operator-() const {
  GElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

GElement& GElement::operator+=(const GElement& o) {
  check_compatible(o);
  if (terms_.empty()) {
    n_ = o.n_;
    basis_ = o.basis_;
  }
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GElement& GElement::operator-=(const GElement& o) { return *this += -o; }

GElement operator*(const Scalar& c, const GElement& f) {
  GElement r(f.n_, f.basis_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : f.terms_) r.terms_.emplace(m, c * x);
  return r;
}

GElement operator*(const GElement& f, const GElement& g) {
  f.check_compatible(g);
  GElement r(f.n_ ? f.n_ : g.n_, f.n_ ? f.basis_ : g.basis_);
  for (const auto& [a, x] : f.terms_)
    for (const auto& [b, y] : g.terms_) {
      int s = wedge_sign(a.mask, b.mask);
      if (s == 0) continue;
      Scalar c = x * y;
      r.add({a.tpow + b.tpow, static_cast<std::uint8_t>(a.mask | b.mask)}, s > 0 ? c : -c);
    }
  return r;
}

bool operator==(const GElement& a, const GElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

GElement GElement::shift_t(int k) const {
  GElement r(n_, basis_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(GMonomial{m.tpow + k, m.mask}, c);
  return r;
}

GElement GElement::d_t() const {
  GElement r(n_, basis_);
  for (const auto& [m, c] : terms_)
    if (m.tpow != 0) r.add({m.tpow - 1, m.mask}, Scalar(static_cast<long>(m.tpow)) * c);
  return r;
}

GElement GElement::d_xi(int bit) const {
  GElement r(n_, basis_);
  std::uint8_t b = static_cast<std::uint8_t>(1u << bit);
  for (const auto& [m, c] : terms_) {
    if (!(m.mask & b)) continue;
    int below = __builtin_popcount(m.mask & (b - 1));
    r.add({m.tpow, static_cast<std::uint8_t>(m.mask & ~b)}, (below & 1) ? -c : c);
  }
  return r;
}

GElement GElement::euler() const {
  GElement r(n_, basis_);
  for (const auto& [m, c] : terms_) r.add(m, Scalar(static_cast<long>(m.odd_count())) * c);
  return r;
}

std::optional<int> GElement::degree2() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    if (d && *d != m.degree2()) return std::nullopt;
    d = m.degree2();
  }
  return d ? d : std::optional<int>(0);
}

std::optional<int> GElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    if (p && *p != m.parity()) return std::nullopt;
    p = m.parity();
  }
  return p ? p : std::optional<int>(0);
}

namespace {

std::string label(GBasis basis, int bit) {
  if (basis == GBasis::Standard) return std::to_string(bit + 1);
  return std::to_string(bit / 2 + 1) + ((bit & 1) ? "-" : "+");
}

}  // namespace

std::string GElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    bool compound = cs.find(' ') != std::string::npos;
    out += compound ? "(" + cs + ")" : cs;
    out += " * t^" + std::to_string(m.tpow) + " xi[";
    bool first = true;
    for (int b = 0; b < n_; ++b)
      if (m.mask & (1u << b)) {
        if (!first) out += ",";
        out += label(basis_, b);
        first = false;
      }
    out += "]";
  }
  return out;
}

GElement contact_bracket(const GElement& f, const GElement& g) {
  if (f.is_zero() || g.is_zero()) return GElement(f.is_zero() ? g.n() : f.n(), f.is_zero() ? g.basis() : f.basis());
  if (f.n() != g.n() || f.basis() != g.basis()) throw std::invalid_argument("contact bracket of incompatible elements");
  auto pf = f.parity();
  if (!pf) throw std::invalid_argument("contact bracket needs a parity-homogeneous left argument");
  auto two_minus_e = [](const GElement& h) { return Scalar(2) * h - h.euler(); };
  GElement r = two_minus_e(f) * g.d_t() - f.d_t() * two_minus_e(g);
  GElement odd(f.n(), f.basis());
  int n = f.n();
  if (f.basis() == GBasis::Standard) {
    for (int b = 0; b < n; ++b) odd += f.d_xi(b) * g.d_xi(b);
  } else {
    for (int j = 0; j < n / 2; ++j) {
      odd += f.d_xi(2 * j) * g.d_xi(2 * j + 1);
      odd += f.d_xi(2 * j + 1) * g.d_xi(2 * j);
    }
  }
  if (*pf) odd = -odd;
  return r + odd;
}

namespace {

// image of each single odd generator under a linear change of basis
GElement substitute(const GElement& f, GBasis target, const std::vector<GElement>& images) {
  GElement r(f.n(), target);
  for (const auto& [m, c] : f.terms()) {
    GElement prod = GElement::monomial(f.n(), m.tpow, 0, c, target);
    for (int b = 0; b < f.n(); ++b)
      if (m.mask & (1u << b)) prod = prod * images[b];
    r += prod;
  }
  return r;
}

}  // namespace

GElement to_split(const GElement& f) {
  if (f.basis() == GBasis::Split) return f;
  int n = f.n();
  if (n % 2) throw std::invalid_argument("split basis needs an even number of odd generators");
  Scalar s = Scalar::sqrt2() / Scalar(2);  // 1/sqrt2
  std::vector<GElement> img(n);
  for (int j = 0; j < n / 2; ++j) {
    GElement plus = GElement::monomial(n, 0, static_cast<std::uint8_t>(1u << (2 * j)), 1, GBasis::Split);
    GElement minus = GElement::monomial(n, 0, static_cast<std::uint8_t>(1u << (2 * j + 1)), 1, GBasis::Split);
    img[j] = s * (plus + minus);
    img[j + n / 2] = (-Scalar::i() * s) * (plus - minus);
  }
  return substitute(f, GBasis::Split, img);
}

GElement to_standard(const GElement& f) {
  if (f.basis() == GBasis::Standard) return f;
  int n = f.n();
  Scalar s = Scalar::sqrt2() / Scalar(2);
  std::vector<GElement> img(n);
  for (int j = 0; j < n / 2; ++j) {
    GElement a = GElement::monomial(n, 0, static_cast<std::uint8_t>(1u << j), 1);
    GElement b = GElement::monomial(n, 0, static_cast<std::uint8_t>(1u << (j + n / 2)), 1);
    img[2 * j] = s * (a + Scalar::i() * b);
    img[2 * j + 1] = s * (a - Scalar::i() * b);
  }
  return substitute(f, GBasis::Standard, img);
}

GMonomial hodge_dual(const GMonomial& m, int* sign) {
  std::uint8_t comp = static_cast<std::uint8_t>(0xF & ~m.mask);
  if (sign) *sign = wedge_sign(m.mask, comp);
  return {m.tpow, comp};
}

GElement hodge_dual(const GElement& f) {
  if (f.n() != 4 || f.basis() != GBasis::Standard) throw std::invalid_argument("Hodge dual is defined for N=4 standard basis");
  GElement r(4);
  for (const auto& [m, c] : f.terms()) {
    int s = 0;
    GMonomial d = hodge_dual(m, &s);
    r.add(d, s > 0 ? c : -c);
  }
  return r;
}

GElement parse_gelement(std::string_view text, int n, GBasis basis) {
  GElement r(n, basis);
  std::string s(text);
  if (s == "0") return r;
  // split on top-level " + "
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (depth == 0 && s.compare(k, 3, " + ") == 0 && k + 3 < s.size()) {
      parts.push_back(s.substr(start, k - start));
      start = k + 3;
      k += 2;
    }
  }
  parts.push_back(s.substr(start));
  for (const auto& p : parts) {
    auto star = p.rfind(" * t^");
    auto xi = p.find(" xi[", star == std::string::npos ? 0 : star);
    if (star == std::string::npos || xi == std::string::npos || p.back() != ']')
      throw ParseError("cannot parse Grassmann term: " + p);
    Scalar c = parse_scalar(p.substr(0, star));
    int tpow = std::stoi(p.substr(star + 5, xi - star - 5));
    std::string labels = p.substr(xi + 4, p.size() - xi - 5);
    std::uint8_t mask = 0;
    bool vanishes = false;
    std::size_t pos = 0;
    while (pos < labels.size()) {
      std::size_t comma = labels.find(',', pos);
      std::string lab = labels.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      int bit;
      if (basis == GBasis::Standard) {
        bit = std::stoi(lab) - 1;
      } else {
        if (lab.size() < 2) throw ParseError("bad split label " + lab);
        bit = 2 * (std::stoi(lab.substr(0, lab.size() - 1)) - 1) + (lab.back() == '-' ? 1 : 0);
      }
      if (bit < 0 || bit >= n) throw ParseError("odd generator out of range: " + lab);
      std::uint8_t b = static_cast<std::uint8_t>(1u << bit);
      int sg = wedge_sign(mask, b);
      if (sg == 0) vanishes = true;
      if (sg < 0) c = -c;
      mask |= b;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!vanishes) r.add({tpow, mask}, c);
  }
  return r;
}

}  // namespace scf
