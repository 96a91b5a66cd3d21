#include "scf/algebra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <stdexcept>

#include "scf/linalg.hpp"

namespace scf {

namespace {

struct GenInfo {
  Gen gen;
  const char* name;
  int parity;
  int offset2;
};

constexpr std::array<GenInfo, 23> kGens{{
    {Gen::L, "L", 0, 2},          {Gen::J, "J", 0, 0},          {Gen::H, "H", 0, 0},
    {Gen::E, "E", 0, 0},          {Gen::F, "F", 0, 0},          {Gen::h, "h", 1, 1},
    {Gen::e, "e", 1, 1},          {Gen::f, "f", 1, 1},          {Gen::Psi, "Psi", 1, -1},
    {Gen::Gp, "Gp", 1, 1},        {Gen::Gm, "Gm", 1, 1},        {Gen::Gpp, "Gpp", 1, 1},
    {Gen::Gmp, "Gmp", 1, 1},      {Gen::Gpm, "Gpm", 1, 1},      {Gen::Gmm, "Gmm", 1, 1},
    {Gen::Lbar, "L_bar", 0, 2},   {Gen::Hbar, "H_bar", 0, 0},   {Gen::Ebar, "E_bar", 0, 0},
    {Gen::Fbar, "F_bar", 0, 0},   {Gen::Gpp_bar, "Gpp_bar", 1, 1}, {Gen::Gmp_bar, "Gmp_bar", 1, 1},
    {Gen::Gpm_bar, "Gpm_bar", 1, 1}, {Gen::Gmm_bar, "Gmm_bar", 1, 1},
}};

const GenInfo& info(Gen g) { return kGens[static_cast<int>(g)]; }

Rational half(int v2) { return make_rational(v2, 2); }

bool is_sl2_current(Gen g) { return g == Gen::H || g == Gen::E || g == Gen::F; }
bool is_n3_odd(Gen g) { return g == Gen::h || g == Gen::e || g == Gen::f; }
bool is_n4_odd(Gen g) { return g == Gen::Gpp || g == Gen::Gmp || g == Gen::Gpm || g == Gen::Gmm; }

// sl2 bracket [X, Y] for X, Y in {H, E, F}
std::vector<std::pair<int, Gen>> sl2_bracket(Gen x, Gen y) {
  if (x == Gen::H && y == Gen::E) return {{2, Gen::E}};
  if (x == Gen::H && y == Gen::F) return {{-2, Gen::F}};
  if (x == Gen::E && y == Gen::F) return {{1, Gen::H}};
  if (x == Gen::E && y == Gen::H) return {{-2, Gen::E}};
  if (x == Gen::F && y == Gen::H) return {{2, Gen::F}};
  if (x == Gen::F && y == Gen::E) return {{-1, Gen::H}};
  return {};
}

int sl2_form(Gen x, Gen y) {
  if (x == Gen::H && y == Gen::H) return 2;
  if ((x == Gen::E && y == Gen::F) || (x == Gen::F && y == Gen::E)) return 1;
  return 0;
}

Gen upper(Gen g) {
  switch (g) {
    case Gen::h: return Gen::H;
    case Gen::e: return Gen::E;
    case Gen::f: return Gen::F;
    default: return g;
  }
}

Gen lower(Gen g) {
  switch (g) {
    case Gen::H: return Gen::h;
    case Gen::E: return Gen::e;
    case Gen::F: return Gen::f;
    default: return g;
  }
}

}  // namespace

// ---------------------------------------------------------------- names

std::string algebra_name(AlgebraId id) {
  switch (id.kind) {
    case AlgebraKind::N2: return "n2";
    case AlgebraKind::N3: return "n3";
    case AlgebraKind::SmallN4: return id.beta == 1 ? "n4" : "n4-";
    case AlgebraKind::BigN4: return "bign4";
  }
  return "?";
}

AlgebraId parse_algebra(std::string_view text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "n2" || s == "ns2") return {AlgebraKind::N2, 1};
  if (s == "n3" || s == "ns3") return {AlgebraKind::N3, 1};
  if (s == "n4" || s == "ns4" || s == "smalln4" || s == "n4+") return {AlgebraKind::SmallN4, 1};
  if (s == "n4-" || s == "smalln4-") return {AlgebraKind::SmallN4, -1};
  if (s == "bign4" || s == "big-n4" || s == "n4big" || s == "k14") return {AlgebraKind::BigN4, 1};
  throw std::invalid_argument("unknown algebra: " + std::string(text));
}

const char* gen_name(Gen g) { return info(g).name; }

GenMode phi(const GenMode& g) {
  switch (g.gen) {
    case Gen::L: return {Gen::Lbar, g.mode2};
    case Gen::H: return {Gen::Hbar, g.mode2};
    case Gen::E: return {Gen::Ebar, g.mode2};
    case Gen::F: return {Gen::Fbar, g.mode2};
    case Gen::Gpp: return {Gen::Gpp_bar, g.mode2};
    case Gen::Gpm: return {Gen::Gmp_bar, g.mode2};
    case Gen::Gmp: return {Gen::Gpm_bar, g.mode2};
    case Gen::Gmm: return {Gen::Gmm_bar, g.mode2};
    default: throw std::invalid_argument(std::string("phi is not defined on ") + gen_name(g.gen));
  }
}

AlgElement phi(const AlgElement& x) {
  AlgElement r;
  for (const auto& [g, c] : x.terms()) r.add(phi(g), c);
  return r;
}

std::optional<Gen> parse_gen(std::string_view name) {
  for (const auto& gi : kGens)
    if (name == gi.name) return gi.gen;
  if (name == "Lbar") return Gen::Lbar;
  if (name == "Hbar") return Gen::Hbar;
  if (name == "Ebar") return Gen::Ebar;
  if (name == "Fbar") return Gen::Fbar;
  return std::nullopt;
}

int gen_parity(Gen g) { return info(g).parity; }
bool gen_half_integer(Gen g) { return info(g).parity == 1; }
bool gen_barred(Gen g) { return static_cast<int>(g) >= static_cast<int>(Gen::Lbar); }
int gen_offset2(Gen g) { return info(g).offset2; }

Gen bar_of(Gen g) {
  switch (g) {
    case Gen::L: return Gen::Lbar;
    case Gen::H: return Gen::Hbar;
    case Gen::E: return Gen::Ebar;
    case Gen::F: return Gen::Fbar;
    case Gen::Gpp: return Gen::Gpp_bar;
    case Gen::Gmp: return Gen::Gmp_bar;
    case Gen::Gpm: return Gen::Gpm_bar;
    case Gen::Gmm: return Gen::Gmm_bar;
    default: throw std::invalid_argument(std::string("no barred copy of ") + gen_name(g));
  }
}

Gen unbar_of(Gen g) {
  switch (g) {
    case Gen::Lbar: return Gen::L;
    case Gen::Hbar: return Gen::H;
    case Gen::Ebar: return Gen::E;
    case Gen::Fbar: return Gen::F;
    case Gen::Gpp_bar: return Gen::Gpp;
    case Gen::Gmp_bar: return Gen::Gmp;
    case Gen::Gpm_bar: return Gen::Gpm;
    case Gen::Gmm_bar: return Gen::Gmm;
    default: return g;
  }
}

std::string half_str(int v2) {
  if (v2 % 2 == 0) return std::to_string(v2 / 2);
  return std::to_string(v2) + "/2";
}

int parse_half(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return 2 * std::stoi(s);
    if (s.substr(slash + 1) != "2") throw std::invalid_argument("mode denominator must be 2");
    std::size_t used = 0;
    int num = std::stoi(s.substr(0, slash), &used);
    if (used != slash || num % 2 == 0) throw std::invalid_argument("half-integer mode expected");
    return num;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad mode: " + s);
  }
}

std::string GenMode::str() const { return std::string(gen_name(gen)) + ":" + half_str(mode2); }

GenMode parse_genmode(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("expected NAME:mode, got " + std::string(text));
  auto g = parse_gen(text.substr(0, colon));
  if (!g) throw std::invalid_argument("unknown generator " + std::string(text.substr(0, colon)));
  return {*g, parse_half(text.substr(colon + 1))};
}

// ---------------------------------------------------------------- AlgElement

Scalar AlgElement::coefficient(const GenMode& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar() : it->second;
}

void AlgElement::add(const GenMode& g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

AlgElement operator*(const Scalar& c, const AlgElement& x) {
  AlgElement r;
  if (c.is_zero()) return r;
  for (const auto& [g, v] : x.terms_) r.terms_.emplace(g, c * v);
  return r;
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [g, c] : a.terms_) {
    if (!(g == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string AlgElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms_) {
    std::string cs = c.str();
    bool neg = false;
    if (c.is_rational() && sgn(c.rational_value()) < 0) {
      neg = true;
      cs = (-c).str();
    } else if (cs.find(' ') != std::string::npos) {
      cs = "(" + cs + ")";
    }
    std::string body = cs == "1" ? g.str() : cs + "*" + g.str();
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += neg ? " - " + body : " + " + body;
  }
  return out;
}

// ---------------------------------------------------------------- Algebra

struct Algebra::Decomposer {
  std::vector<GenMode> basis;
  Echelon<detail::AugKey<GMonomial>> ech;
};

Algebra::Algebra(AlgebraId id) : id_(id) {
  switch (id.kind) {
    case AlgebraKind::N2: gens_ = {Gen::L, Gen::J, Gen::Gp, Gen::Gm}; break;
    case AlgebraKind::N3: gens_ = {Gen::L, Gen::H, Gen::E, Gen::F, Gen::h, Gen::e, Gen::f, Gen::Psi}; break;
    case AlgebraKind::SmallN4:
      if (id.beta != 1 && id.beta != -1) throw std::invalid_argument("beta must be +1 or -1");
      gens_ = {Gen::L, Gen::H, Gen::E, Gen::F, Gen::Gpp, Gen::Gmp, Gen::Gpm, Gen::Gmm};
      break;
    case AlgebraKind::BigN4:
      id_.beta = 1;
      gens_ = {Gen::L,    Gen::H,    Gen::E,    Gen::F,    Gen::Gpp,     Gen::Gmp,     Gen::Gpm,     Gen::Gmm,
               Gen::Lbar, Gen::Hbar, Gen::Ebar, Gen::Fbar, Gen::Gpp_bar, Gen::Gmp_bar, Gen::Gpm_bar, Gen::Gmm_bar};
      break;
  }
}

int Algebra::odd_variables() const {
  switch (id_.kind) {
    case AlgebraKind::N2: return 2;
    case AlgebraKind::N3: return 3;
    default: return 4;
  }
}

bool Algebra::has(Gen g) const { return std::find(gens_.begin(), gens_.end(), g) != gens_.end(); }

void Algebra::validate(const GenMode& g) const {
  if (!has(g.gen)) throw std::invalid_argument(std::string("generator ") + gen_name(g.gen) + " not in " + name());
  bool odd_mode = (g.mode2 % 2) != 0;
  if (odd_mode != gen_half_integer(g.gen))
    throw std::invalid_argument("mode " + half_str(g.mode2) + " has wrong integrality for " + gen_name(g.gen));
}

GenMode Algebra::canonical(const GenMode& g) const {
  validate(g);
  if (id_.kind != AlgebraKind::BigN4) return g;
  if (g.gen == Gen::Lbar && (g.mode2 == -2 || g.mode2 == 0)) return {Gen::L, g.mode2};
  if (gen_barred(g.gen) && gen_parity(g.gen) == 1 && g.mode2 == -1) return {unbar_of(g.gen), g.mode2};
  return g;
}

AlgElement Algebra::canonical(const AlgElement& x) const {
  AlgElement r;
  for (const auto& [g, c] : x.terms()) r.add(canonical(g), c);
  return r;
}

int Algebra::min_mode2(Gen g) const {
  if (g == Gen::L) return -2;
  if (g == Gen::Lbar) return 2;
  if (g == Gen::Psi) return 1;
  if (gen_parity(g) == 1) return gen_barred(g) ? 1 : -1;
  return 0;
}

bool Algebra::in_annihilation(const GenMode& g) const {
  GenMode c = canonical(g);
  return c.mode2 >= min_mode2(c.gen);
}

namespace {

GElement n4_odd(Gen label, int mode2, int beta) {
  // (1/sqrt2)(v t^k - beta k v^* t^(k-1)), k = r + 1/2, v a linear form in the xi
  int k = (mode2 + 1) / 2;
  Scalar s = Scalar::sqrt2() / Scalar(2);
  GElement v(4);
  switch (label) {
    case Gen::Gmp: v = GElement::term(4, 1, 0, {3}) + GElement::term(4, Scalar::i(), 0, {4}); break;
    case Gen::Gpp: v = GElement::term(4, 1, 0, {1}) + GElement::term(4, Scalar::i(), 0, {2}); break;
    case Gen::Gpm: v = GElement::term(4, 1, 0, {3}) + GElement::term(4, -Scalar::i(), 0, {4}); break;
    case Gen::Gmm: v = GElement::term(4, Scalar::i(), 0, {2}) + GElement::term(4, -1, 0, {1}); break;
    default: throw std::logic_error("not an odd N=4 generator");
  }
  GElement main = v.shift_t(k);
  GElement dual = hodge_dual(v).shift_t(k - 1);
  return s * main - (s * Scalar(static_cast<long>(beta * k))) * dual;
}

GElement n4_even(Gen label, int n, int beta) {
  Scalar b(static_cast<long>(beta));
  Scalar i = Scalar::i();
  Scalar h = Scalar::rational(1, 2);
  switch (label) {
    case Gen::L:
      return GElement::term(4, -h, n + 1, {}) +
             GElement::term(4, -h * b * Scalar(static_cast<long>(n) * (n + 1)), n - 1, {1, 2, 3, 4});
    case Gen::H: return GElement::term(4, i, n, {1, 2}) + GElement::term(4, -i * b, n, {3, 4});
    case Gen::E:
      return GElement::term(4, -h, n, {1, 3}) + GElement::term(4, -h * b, n, {2, 4}) +
             GElement::term(4, -i * h, n, {2, 3}) + GElement::term(4, i * h * b, n, {1, 4});
    case Gen::F:
      return GElement::term(4, h, n, {1, 3}) + GElement::term(4, h * b, n, {2, 4}) +
             GElement::term(4, -i * h, n, {2, 3}) + GElement::term(4, i * h * b, n, {1, 4});
    default: throw std::logic_error("not an even N=4 generator");
  }
}

}  // namespace

GElement Algebra::realize(const GenMode& gm) const {
  validate(gm);
  const Gen g = gm.gen;
  const int m2 = gm.mode2;
  Scalar i = Scalar::i();
  Scalar s = Scalar::sqrt2() / Scalar(2);
  switch (id_.kind) {
    case AlgebraKind::N2: {
      GElement xp = s * (GElement::term(2, 1, 0, {1}) + GElement::term(2, i, 0, {2}));
      GElement xm = s * (GElement::term(2, 1, 0, {1}) + GElement::term(2, -i, 0, {2}));
      switch (g) {
        case Gen::L: return GElement::term(2, Scalar::rational(-1, 2), m2 / 2 + 1, {});
        case Gen::J: return (xm * xp).shift_t(m2 / 2);
        case Gen::Gp: return xp.shift_t((m2 + 1) / 2);
        case Gen::Gm: return xm.shift_t((m2 + 1) / 2);
        default: break;
      }
      break;
    }
    case AlgebraKind::N3: {
      int n = m2 / 2, k = (m2 + 1) / 2;
      switch (g) {
        case Gen::L: return GElement::term(3, Scalar::rational(-1, 2), n + 1, {});
        case Gen::H: return GElement::term(3, Scalar(2) * i, n, {1, 2});
        case Gen::E: return GElement::term(3, -1, n, {1, 3}) + GElement::term(3, -i, n, {2, 3});
        case Gen::F: return GElement::term(3, 1, n, {1, 3}) + GElement::term(3, -i, n, {2, 3});
        case Gen::Psi: return GElement::term(3, -1, (m2 - 1) / 2, {1, 2, 3});
        case Gen::h: return GElement::term(3, Scalar(-2) * i, k, {3});
        case Gen::e: return GElement::term(3, i, k, {1}) + GElement::term(3, -1, k, {2});
        case Gen::f: return GElement::term(3, i, k, {1}) + GElement::term(3, 1, k, {2});
        default: break;
      }
      break;
    }
    case AlgebraKind::SmallN4:
    case AlgebraKind::BigN4: {
      int beta = id_.kind == AlgebraKind::SmallN4 ? id_.beta : (gen_barred(g) ? -1 : 1);
      Gen base = unbar_of(g);
      if (gen_parity(base) == 1) return n4_odd(base, m2, beta);
      return n4_even(base, m2 / 2, beta);
    }
  }
  throw std::logic_error("unhandled generator in realize");
}

GElement Algebra::realize(const AlgElement& x) const {
  GElement r(odd_variables());
  for (const auto& [g, c] : x.terms()) r += c * realize(g);
  return r;
}

std::vector<GenMode> Algebra::basis_of_degree(int degree2) const {
  std::vector<GenMode> out;
  bool half = (degree2 % 2) != 0;
  for (Gen g : gens_) {
    if (gen_half_integer(g) != half) continue;
    GenMode c = canonical({g, degree2});
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlgElement Algebra::express(const GElement& f) const {
  if (f.is_zero()) return {};
  auto d = f.degree2();
  if (!d) throw std::invalid_argument("express needs a homogeneous element");
  std::shared_ptr<const Decomposer> dec;
  {
    std::shared_lock lock(mu_);
    auto it = decomposers_.find(*d);
    if (it != decomposers_.end()) dec = it->second;
  }
  if (!dec) {
    auto fresh = std::make_shared<Decomposer>();
    fresh->basis = basis_of_degree(*d);
    using AK = detail::AugKey<GMonomial>;
    for (std::size_t j = 0; j < fresh->basis.size(); ++j) {
      SparseVec<AK> v;
      GElement img = realize(fresh->basis[j]);
      for (const auto& [m, c] : img.terms()) v.emplace(AK{false, m, 0}, c);
      v.emplace(AK{true, GMonomial{}, static_cast<int>(j)}, Scalar(1));
      if (!fresh->ech.insert(v)) throw std::logic_error("realizations are linearly dependent");
    }
    std::unique_lock lock(mu_);
    dec = decomposers_.try_emplace(*d, fresh).first->second;
  }
  using AK = detail::AugKey<GMonomial>;
  SparseVec<AK> t;
  for (const auto& [m, c] : f.terms()) t.emplace(AK{false, m, 0}, c);
  SparseVec<AK> r = dec->ech.reduce(t);
  AlgElement out;
  for (const auto& [k, c] : r) {
    if (!k.tag) throw std::domain_error("element is not in the span of " + name() + ": " + f.str());
    out.add(dec->basis[k.idx], -c);
  }
  return out;
}

const AlgElement& Algebra::bracket(const GenMode& a0, const GenMode& b0) const {
  GenMode a = canonical(a0), b = canonical(b0);
  auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  auto val = std::make_unique<AlgElement>(compute_bracket(a, b));
  std::unique_lock lock(mu_);
  auto [it, fresh] = cache_.try_emplace(key, std::move(val));
  return *it->second;
}

AlgElement Algebra::bracket(const AlgElement& a, const AlgElement& b) const {
  AlgElement r;
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) r += (c * d) * bracket(x, y);
  return r;
}

AlgElement Algebra::compute_bracket(const GenMode& a, const GenMode& b) const {
  if (id_.kind == AlgebraKind::BigN4) return express(contact_bracket(realize(a), realize(b)));
  return table_bracket(a, b);
}

namespace {

using Terms = std::vector<std::pair<Rational, GenMode>>;

AlgElement to_element(const Terms& t) {
  AlgElement r;
  for (const auto& [c, g] : t)
    if (sgn(c) != 0) r.add(g, Scalar(c));
  return r;
}

std::optional<Terms> n2_ordered(const GenMode& a, const GenMode& b) {
  Rational m = half(a.mode2), n = half(b.mode2);
  int s2 = a.mode2 + b.mode2;
  Gen x = a.gen, y = b.gen;
  if (x == Gen::L && y == Gen::L) return Terms{{m - n, {Gen::L, s2}}};
  if (x == Gen::L && (y == Gen::Gp || y == Gen::Gm)) return Terms{{m / 2 - n, {y, s2}}};
  if (x == Gen::L && y == Gen::J) return Terms{{-n, {Gen::J, s2}}};
  if (x == Gen::J && y == Gen::Gp) return Terms{{1, {Gen::Gp, s2}}};
  if (x == Gen::J && y == Gen::Gm) return Terms{{-1, {Gen::Gm, s2}}};
  if (x == Gen::Gp && y == Gen::Gm) return Terms{{2, {Gen::L, s2}}, {m - n, {Gen::J, s2}}};
  if (x == y && x != Gen::L) return Terms{};
  return std::nullopt;
}

std::optional<Terms> n3_ordered(const GenMode& a, const GenMode& b) {
  Rational m = half(a.mode2), n = half(b.mode2);
  int s2 = a.mode2 + b.mode2;
  Gen x = a.gen, y = b.gen;
  if (x == Gen::L && y == Gen::L) return Terms{{m - n, {Gen::L, s2}}};
  if (x == Gen::L && is_sl2_current(y)) return Terms{{-n, {y, s2}}};
  if (x == Gen::L && is_n3_odd(y)) return Terms{{m / 2 - n, {y, s2}}};
  if (x == Gen::L && y == Gen::Psi) return Terms{{-m / 2 - n, {Gen::Psi, s2}}};
  if (is_sl2_current(x) && is_sl2_current(y)) {
    Terms t;
    for (auto [c, g] : sl2_bracket(x, y)) t.push_back({c, {g, s2}});
    return t;
  }
  if (is_sl2_current(x) && y == Gen::Psi) return Terms{};
  if (is_sl2_current(x) && is_n3_odd(y)) {
    Terms t;
    for (auto [c, g] : sl2_bracket(x, upper(y))) t.push_back({c, {lower(g), s2}});
    int f = sl2_form(x, upper(y));
    if (f) t.push_back({2 * m * f, {Gen::Psi, s2}});
    return t;
  }
  if (is_n3_odd(x) && y == Gen::Psi) return Terms{{-1, {upper(x), s2}}};
  if (x == Gen::Psi && y == Gen::Psi) return Terms{};
  if (is_n3_odd(x) && is_n3_odd(y)) {
    Terms t;
    for (auto [c, g] : sl2_bracket(upper(x), upper(y))) t.push_back({-(m - n) * c, {g, s2}});
    int f = sl2_form(upper(x), upper(y));
    if (f) t.push_back({Rational(-4 * f), {Gen::L, s2}});
    return t;
  }
  return std::nullopt;
}

std::optional<Terms> n4_ordered(const GenMode& a, const GenMode& b, int beta) {
  Rational m = half(a.mode2), n = half(b.mode2);
  int s2 = a.mode2 + b.mode2;
  Gen x = a.gen, y = b.gen;
  if (x == Gen::L && y == Gen::L) return Terms{{m - n, {Gen::L, s2}}};
  if (x == Gen::L && is_sl2_current(y)) return Terms{{-n, {y, s2}}};
  if (x == Gen::L && is_n4_odd(y)) return Terms{{m / 2 - n, {y, s2}}};
  if (is_sl2_current(x) && is_sl2_current(y)) {
    Terms t;
    for (auto [c, g] : sl2_bracket(x, y)) t.push_back({c, {g, s2}});
    return t;
  }
  if (is_sl2_current(x) && is_n4_odd(y)) {
    // doublets (top, bottom): beta = 1: (Gpp, Gmp), (Gpm, Gmm); beta = -1: (Gpp, Gpm), (Gmp, Gmm)
    Gen top1 = Gen::Gpp, bot1 = beta == 1 ? Gen::Gmp : Gen::Gpm;
    Gen top2 = beta == 1 ? Gen::Gpm : Gen::Gmp, bot2 = Gen::Gmm;
    bool top = (y == top1 || y == top2);
    Gen partner = y == top1 ? bot1 : y == bot1 ? top1 : y == top2 ? bot2 : top2;
    if (x == Gen::H) return Terms{{top ? 1 : -1, {y, s2}}};
    if (x == Gen::F) return top ? Terms{{1, {partner, s2}}} : Terms{};
    if (x == Gen::E) return top ? Terms{} : Terms{{1, {partner, s2}}};
  }
  if (is_n4_odd(x) && is_n4_odd(y)) {
    Rational d = m - n, bt = beta;
    auto mk = [&](std::initializer_list<std::pair<Rational, Gen>> l) {
      Terms t;
      for (const auto& [c, g] : l) t.push_back({c, {g, s2}});
      return t;
    };
    if (x == Gen::Gpp && y == Gen::Gpm) return mk({{d * (1 + bt), Gen::E}});
    if (x == Gen::Gpp && y == Gen::Gmp) return mk({{d * (1 - bt), Gen::E}});
    if (x == Gen::Gpp && y == Gen::Gmm) return mk({{-d, Gen::H}, {-2, Gen::L}});
    if (x == Gen::Gpm && y == Gen::Gmp) return mk({{d * bt, Gen::H}, {2, Gen::L}});
    if (x == Gen::Gpm && y == Gen::Gmm) return mk({{-d * (1 - bt), Gen::F}});
    if (x == Gen::Gmp && y == Gen::Gmm) return mk({{-d * (1 + bt), Gen::F}});
    if (x == y) return Terms{};
  }
  return std::nullopt;
}

}  // namespace

AlgElement Algebra::table_bracket(const GenMode& a, const GenMode& b) const {
  validate(a);
  validate(b);
  auto ordered = [&](const GenMode& x, const GenMode& y) -> std::optional<Terms> {
    switch (id_.kind) {
      case AlgebraKind::N2: return n2_ordered(x, y);
      case AlgebraKind::N3: return n3_ordered(x, y);
      case AlgebraKind::SmallN4: return n4_ordered(x, y, id_.beta);
      case AlgebraKind::BigN4: throw std::logic_error("BigN4 has no closed-form table");
    }
    return std::nullopt;
  };
  if (auto t = ordered(a, b)) return to_element(*t);
  auto t = ordered(b, a);
  if (!t) throw std::logic_error("missing table entry for " + a.str() + ", " + b.str());
  // [a, b] = -(-1)^{p(a) p(b)} [b, a]
  int sign = (a.parity() && b.parity()) ? 1 : -1;
  AlgElement r = to_element(*t);
  return sign > 0 ? r : -r;
}

// ---------------------------------------------------------------- table checks

namespace {

std::vector<GenMode> modes_up_to(const Algebra& alg, int bound2) {
  std::vector<GenMode> out;
  for (Gen g : alg.generators())
    for (int m2 = -bound2; m2 <= bound2; ++m2) {
      if (((m2 % 2) != 0) != gen_half_integer(g)) continue;
      GenMode c = alg.canonical({g, m2});
      // outside the annihilation subalgebra the BigN4 basis does not close under brackets
      if (alg.id().kind == AlgebraKind::BigN4 && !alg.in_annihilation(c)) continue;
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

AlgElement map_gens(const AlgElement& x, bool to_bar, const Algebra& target) {
  AlgElement r;
  for (const auto& [g, c] : x.terms()) r.add(target.canonical({to_bar ? bar_of(g.gen) : g.gen, g.mode2}), c);
  return r;
}

// labels of the beta = -1 copy when written with unbarred names
std::optional<GenMode> as_barred_view(const GenMode& g) {
  if (gen_barred(g.gen)) return GenMode{unbar_of(g.gen), g.mode2};
  if (g.gen == Gen::L && (g.mode2 == -2 || g.mode2 == 0)) return g;
  if (gen_parity(g.gen) == 1 && g.mode2 == -1) return g;
  return std::nullopt;
}

}  // namespace

TableCheckReport check_tables(const Algebra& alg, int bound2) {
  TableCheckReport rep;
  auto modes = modes_up_to(alg, bound2);
  if (alg.id().kind != AlgebraKind::BigN4) {
    for (const auto& a : modes)
      for (const auto& b : modes) {
        ++rep.pairs_checked;
        GElement lhs = contact_bracket(alg.realize(a), alg.realize(b));
        GElement rhs = alg.realize(alg.table_bracket(a, b));
        if (!(lhs == rhs))
          rep.mismatches.push_back("[" + a.str() + ", " + b.str() + "]: table " + alg.table_bracket(a, b).str() +
                                   " realized " + lhs.str());
      }
    return rep;
  }
  Algebra plus({AlgebraKind::SmallN4, 1}), minus({AlgebraKind::SmallN4, -1});
  for (const auto& a : modes)
    for (const auto& b : modes) {
      ++rep.pairs_checked;
      const AlgElement& br = alg.bracket(a, b);
      std::string tag = "[" + a.str() + ", " + b.str() + "]";
      GElement lhs = contact_bracket(alg.realize(a), alg.realize(b));
      if (!(alg.realize(br) == lhs)) rep.mismatches.push_back(tag + ": re-expansion differs from realization");
      if (!gen_barred(a.gen) && !gen_barred(b.gen)) {
        AlgElement expect = alg.canonical(plus.table_bracket(a, b));
        if (!(expect == br)) rep.mismatches.push_back(tag + ": unbarred copy " + br.str() + " vs " + expect.str());
      }
      auto va = as_barred_view(a), vb = as_barred_view(b);
      if (va && vb) {
        AlgElement expect = map_gens(minus.table_bracket(*va, *vb), true, alg);
        if (!(expect == br)) rep.mismatches.push_back(tag + ": barred copy " + br.str() + " vs " + expect.str());
      }
      int sign = (a.parity() && b.parity()) ? 1 : -1;
      AlgElement swapped = alg.bracket(b, a);
      if (!(br == (sign > 0 ? swapped : -swapped))) rep.mismatches.push_back(tag + ": not skew-symmetric");
    }
  return rep;
}

}  // namespace scf
