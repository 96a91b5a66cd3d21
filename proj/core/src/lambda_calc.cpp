#include "scf/lambda_calc.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "scf/classify.hpp"

namespace scf {

// ------------------------------------------------------------------ LambdaPoly

LambdaPoly::LambdaPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(LKey{}, c);
}

LambdaPoly LambdaPoly::gen(int label) {
  LambdaPoly p;
  p.terms_.emplace(LKey{label, 0, 0, 0}, Scalar(1));
  return p;
}

LambdaPoly LambdaPoly::d() {
  LambdaPoly p;
  p.terms_.emplace(LKey{-1, 1, 0, 0}, Scalar(1));
  return p;
}

LambdaPoly LambdaPoly::lam() {
  LambdaPoly p;
  p.terms_.emplace(LKey{-1, 0, 1, 0}, Scalar(1));
  return p;
}

LambdaPoly LambdaPoly::mu() {
  LambdaPoly p;
  p.terms_.emplace(LKey{-1, 0, 0, 1}, Scalar(1));
  return p;
}

void LambdaPoly::add(const LKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  LambdaPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.label >= 0 && kb.label >= 0) throw std::logic_error("product of two generators");
      r.add(LKey{std::max(ka.label, kb.label), ka.dpow + kb.dpow, ka.lpow + kb.lpow, ka.mpow + kb.mpow}, ca * cb);
    }
  return r;
}

LambdaPoly LambdaPoly::pow(int n) const {
  LambdaPoly r(Scalar(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

LambdaPoly LambdaPoly::substitute(const LambdaPoly& d_img, const LambdaPoly& l_img, const LambdaPoly& m_img) const {
  LambdaPoly r;
  for (const auto& [k, c] : terms_) {
    LambdaPoly t(c);
    if (k.label >= 0) t = t * gen(k.label);
    r += t * d_img.pow(k.dpow) * l_img.pow(k.lpow) * m_img.pow(k.mpow);
  }
  return r;
}

LambdaPoly LambdaPoly::lambda_coefficient(int n) const {
  LambdaPoly r;
  for (const auto& [k, c] : terms_)
    if (k.lpow == n) r.add(LKey{k.label, k.dpow, 0, k.mpow}, c);
  return r;
}

LambdaPoly LambdaPoly::relabel(const std::vector<LambdaPoly>& images) const {
  LambdaPoly r;
  for (const auto& [k, c] : terms_) {
    LambdaPoly t(c);
    t = t * d().pow(k.dpow) * lam().pow(k.lpow) * mu().pow(k.mpow);
    if (k.label >= 0) t = t * images.at(k.label);
    r += t;
  }
  return r;
}

std::string LambdaPoly::str(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k.dpow) os << "*d" << (k.dpow > 1 ? "^" + std::to_string(k.dpow) : "");
    if (k.lpow) os << "*l" << (k.lpow > 1 ? "^" + std::to_string(k.lpow) : "");
    if (k.mpow) os << "*m" << (k.mpow > 1 ? "^" + std::to_string(k.mpow) : "");
    if (k.label >= 0) os << "*" << labels.at(k.label);
  }
  return os.str();
}

// ------------------------------------------------------------------ specs

namespace {

using LP = LambdaPoly;

LP D() { return LP::d(); }
LP Lm() { return LP::lam(); }
LP Mu() { return LP::mu(); }
LP C(const Scalar& s) { return LP(s); }
LP C(long n, long d = 1) { return LP(Scalar::rational(n, d)); }

int find_label(const std::vector<std::string>& labels, const std::string& name) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown label '" + name + "'");
}

int sign_of(int pa, int pb) { return (pa & pb) ? -1 : 1; }

}  // namespace

int ConformalAlgebraSpec::index(const std::string& label) const { return find_label(labels, label); }
int ConformalModuleSpec::index(const std::string& label) const { return find_label(labels, label); }

LambdaPoly skew(const LambdaPoly& ab, int pa, int pb) {
  LP r = ab.substitute(D(), -Lm() - D(), Mu());
  return sign_of(pa, pb) > 0 ? -r : r;
}

LambdaPoly ConformalAlgebraSpec::bracket(int a, int b) const {
  if (auto it = table.find({a, b}); it != table.end()) return it->second;
  if (auto it = table.find({b, a}); it != table.end()) return skew(it->second, parity[b], parity[a]);
  return {};
}

LambdaPoly ConformalModuleSpec::act(int a, int v) const {
  auto it = action.find({a, v});
  return it == action.end() ? LambdaPoly{} : it->second;
}

namespace {

template <class Table>
LP apply_generic(const Table& table, int a, bool use_mu, const LP& p) {
  const LP var = use_mu ? Mu() : Lm();
  LP r;
  for (const auto& [k, c] : p.terms()) {
    if (k.label < 0) throw std::logic_error("lambda action on a generator-free term");
    LP t = table(a, k.label);
    if (use_mu) t = t.substitute(D(), Mu(), Mu());
    r += C(c) * Lm().pow(k.lpow) * Mu().pow(k.mpow) * (var + D()).pow(k.dpow) * t;
  }
  return r;
}

}  // namespace

LambdaPoly apply_bracket(const ConformalAlgebraSpec& r, int a, bool use_mu, const LambdaPoly& p) {
  return apply_generic([&](int x, int y) { return r.bracket(x, y); }, a, use_mu, p);
}

LambdaPoly apply_action(const ConformalModuleSpec& m, int a, bool use_mu, const LambdaPoly& p) {
  return apply_generic([&](int x, int y) { return m.act(x, y); }, a, use_mu, p);
}

LambdaPoly lambda_bracket(const ConformalAlgebraSpec& r, const LambdaPoly& a, const LambdaPoly& b) {
  LP out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.label < 0 || kb.label < 0 || ka.lpow || ka.mpow || kb.lpow || kb.mpow)
        throw std::invalid_argument("lambda_bracket takes d-polynomials over generators");
      out += C(ca * cb) * (-Lm()).pow(ka.dpow) * (Lm() + D()).pow(kb.dpow) * r.bracket(ka.label, kb.label);
    }
  return out;
}

namespace {

// (x_lambda y)_{lambda+mu} z, with x_lambda y given and z a generator, via the table
template <class Table>
LP shifted(const LP& xy, const Table& table, int z) {
  LP r;
  for (const auto& [k, c] : xy.terms()) {
    LP t = table(k.label, z).substitute(D(), Lm() + Mu(), Mu());
    r += C(c) * Lm().pow(k.lpow) * (-(Lm() + Mu())).pow(k.dpow) * t;
  }
  return r;
}

}  // namespace

AxiomReport check_conformal_axioms(const ConformalAlgebraSpec& r) {
  AxiomReport rep;
  const int n = static_cast<int>(r.labels.size());
  auto table = [&](int x, int y) { return r.bracket(x, y); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const LP ab = r.bracket(a, b);
      // C1
      ++rep.checks;
      if (!(lambda_bracket(r, D() * LP::gen(a), LP::gen(b)) == -Lm() * ab) ||
          !(lambda_bracket(r, LP::gen(a), D() * LP::gen(b)) == (Lm() + D()) * ab))
        rep.failures.push_back("C1 " + r.labels[a] + "," + r.labels[b]);
      // C2
      ++rep.checks;
      if (!(skew(ab, r.parity[a], r.parity[b]) == r.bracket(b, a)))
        rep.failures.push_back("C2 " + r.labels[a] + "," + r.labels[b] + ": " + ab.str(r.labels) + " vs " +
                               r.bracket(b, a).str(r.labels));
      ++rep.checks;
      if (!(skew(skew(ab, r.parity[a], r.parity[b]), r.parity[b], r.parity[a]) == ab))
        rep.failures.push_back("C2 twice " + r.labels[a] + "," + r.labels[b]);
      // C3
      for (int c = 0; c < n; ++c) {
        ++rep.checks;
        LP lhs = apply_bracket(r, a, false, apply_bracket(r, b, true, LP::gen(c)));
        LP rhs = shifted(ab, table, c);
        LP other = apply_bracket(r, b, true, apply_bracket(r, a, false, LP::gen(c)));
        if (sign_of(r.parity[a], r.parity[b]) > 0) rhs += other;
        else rhs -= other;
        if (!(lhs == rhs))
          rep.failures.push_back("C3 " + r.labels[a] + "," + r.labels[b] + "," + r.labels[c] + ": " +
                                 (lhs - rhs).str(r.labels));
      }
    }
  return rep;
}

AxiomReport check_module_axioms(const ConformalAlgebraSpec& r, const ConformalModuleSpec& m) {
  AxiomReport rep;
  const int n = static_cast<int>(r.labels.size());
  const int nv = static_cast<int>(m.labels.size());
  auto table = [&](int x, int y) { return m.act(x, y); };
  for (int a = 0; a < n; ++a)
    for (int v = 0; v < nv; ++v) {
      // M2: (d a)_lambda v = -lambda a_lambda v, a_lambda (d v) = (lambda + d) a_lambda v
      ++rep.checks;
      LP dav;
      const LP da = D() * LP::gen(a);
      for (const auto& [k, c] : da.terms()) dav += C(c) * (-Lm()).pow(k.dpow) * m.act(k.label, v);
      if (!(dav == -Lm() * m.act(a, v)) ||
          !(apply_action(m, a, false, D() * LP::gen(v)) == (Lm() + D()) * m.act(a, v)))
        rep.failures.push_back("M2 " + r.labels[a] + "," + m.labels[v]);
      // M1
      for (int b = 0; b < n; ++b) {
        ++rep.checks;
        LP lhs = apply_action(m, a, false, apply_action(m, b, true, LP::gen(v)));
        LP other = apply_action(m, b, true, apply_action(m, a, false, LP::gen(v)));
        if (sign_of(r.parity[a], r.parity[b]) > 0) lhs -= other;
        else lhs += other;
        LP rhs = shifted(r.bracket(a, b), table, v);
        if (!(lhs == rhs))
          rep.failures.push_back("M1 " + r.labels[a] + "," + r.labels[b] + "," + m.labels[v] + ": " +
                                 (lhs - rhs).str(m.labels));
      }
    }
  return rep;
}

// ------------------------------------------------------------------ hand tables

ConformalAlgebraSpec virasoro_spec() {
  ConformalAlgebraSpec r{"virasoro", {"L"}, {0}, {}};
  r.table[{0, 0}] = (D() + C(2) * Lm()) * LP::gen(0);
  return r;
}

namespace {

void add_sl2_current(ConformalAlgebraSpec& r, int e, int h, int f) {
  auto g = LP::gen;
  r.table[{e, e}] = {};
  r.table[{h, h}] = {};
  r.table[{f, f}] = {};
  r.table[{e, h}] = C(-2) * g(e);
  r.table[{h, e}] = C(2) * g(e);
  r.table[{e, f}] = g(h);
  r.table[{f, e}] = -g(h);
  r.table[{h, f}] = C(-2) * g(f);
  r.table[{f, h}] = C(2) * g(f);
}

}  // namespace

ConformalAlgebraSpec current_sl2_spec() {
  ConformalAlgebraSpec r{"current-sl2", {"e", "h", "f"}, {0, 0, 0}, {}};
  add_sl2_current(r, 0, 1, 2);
  return r;
}

ConformalAlgebraSpec semidirect_sl2_spec() {
  ConformalAlgebraSpec r{"virasoro-semidirect-current-sl2", {"L", "e", "h", "f"}, {0, 0, 0, 0}, {}};
  r.table[{0, 0}] = (D() + C(2) * Lm()) * LP::gen(0);
  for (int a = 1; a <= 3; ++a) r.table[{0, a}] = (D() + Lm()) * LP::gen(a);
  add_sl2_current(r, 1, 2, 3);
  return r;
}

ConformalAlgebraSpec n2_spec() {
  ConformalAlgebraSpec r{"n2", {"L", "J", "Gp", "Gm"}, {0, 0, 1, 1}, {}};
  auto g = LP::gen;
  const int L = 0, J = 1, Gp = 2, Gm = 3;
  r.table[{L, L}] = (D() + C(2) * Lm()) * g(L);
  r.table[{L, J}] = (D() + Lm()) * g(J);
  r.table[{L, Gp}] = (D() + C(3, 2) * Lm()) * g(Gp);
  r.table[{L, Gm}] = (D() + C(3, 2) * Lm()) * g(Gm);
  r.table[{J, Gp}] = g(Gp);
  r.table[{J, Gm}] = -g(Gm);
  r.table[{Gp, Gm}] = (D() + C(2) * Lm()) * g(J) + C(2) * g(L);
  return r;
}

namespace {

LP alpha() { return C(Scalar::param(Param::Alpha)); }
LP delta() { return C(Scalar::param(Param::Delta)); }
LP lamsym() { return C(Scalar::param(Param::LambdaSym)); }

}  // namespace

ConformalModuleSpec virasoro_module_spec() {
  ConformalModuleSpec m{"virasoro-F(alpha,Delta)", {"v"}, {0}, {}};
  m.action[{0, 0}] = (alpha() + D() + delta() * Lm()) * LP::gen(0);
  return m;
}

ConformalModuleSpec n2_module_generic_spec() {
  ConformalModuleSpec m{"n2-generic", {"v", "vp", "vm", "vpm"}, {0, 1, 1, 0}, {}};
  auto g = LP::gen;
  const int L = 0, J = 1, Gp = 2, Gm = 3;
  const int v = 0, vp = 1, vm = 2, vpm = 3;
  const LP a = alpha(), dl = delta(), la = lamsym(), l = Lm(), d = D();
  m.action[{L, v}] = (d + a + dl * l) * g(v);
  m.action[{L, vp}] = (d + a + (dl + C(1, 2)) * l) * g(vp);
  m.action[{L, vm}] = (d + a + (dl + C(1, 2)) * l) * g(vm);
  m.action[{L, vpm}] = (d + a + (dl + C(1)) * l) * g(vpm) + (dl + C(1, 2) * la) * l.pow(2) * g(v);
  m.action[{J, v}] = la * g(v);
  m.action[{J, vp}] = (la + C(1)) * g(vp);
  m.action[{J, vm}] = (la - C(1)) * g(vm);
  m.action[{J, vpm}] = la * g(vpm) + (C(2) * dl + la) * l * g(v);
  m.action[{Gp, v}] = g(vp);
  m.action[{Gm, v}] = g(vm);
  m.action[{Gp, vm}] = g(vpm) + (C(2) * dl + la) * l * g(v);
  m.action[{Gp, vpm}] = -l * (C(2) * dl + la) * g(vp);
  m.action[{Gm, vp}] = (C(2) * d + C(2) * a + l * (C(2) * dl - la)) * g(v) - g(vpm);
  m.action[{Gm, vpm}] = (C(2) * d + C(2) * a + (C(2) * dl + C(2) - la) * l) * g(vm);
  return m;
}

ConformalModuleSpec n2_module_minus_spec() {
  ConformalModuleSpec m{"n2-2D+L=0", {"v", "vp"}, {0, 1}, {}};
  auto g = LP::gen;
  const int L = 0, J = 1, Gp = 2, Gm = 3;
  const LP a = alpha(), dl = delta(), l = Lm(), d = D();
  m.action[{L, 0}] = (d + a + dl * l) * g(0);
  m.action[{L, 1}] = (d + a + (dl + C(1, 2)) * l) * g(1);
  m.action[{J, 0}] = C(-2) * dl * g(0);
  m.action[{J, 1}] = (C(-2) * dl + C(1)) * g(1);
  m.action[{Gp, 0}] = g(1);
  m.action[{Gm, 1}] = (C(2) * d + C(2) * a + C(4) * dl * l) * g(0);
  return m;
}

ConformalModuleSpec n2_module_plus_spec() {
  ConformalModuleSpec m{"n2-2D-L=0", {"v", "vm"}, {0, 1}, {}};
  auto g = LP::gen;
  const int L = 0, J = 1, Gp = 2, Gm = 3;
  const LP a = alpha(), dl = delta(), l = Lm(), d = D();
  m.action[{L, 0}] = (d + a + dl * l) * g(0);
  m.action[{L, 1}] = (d + a + (dl + C(1, 2)) * l) * g(1);
  m.action[{J, 0}] = C(2) * dl * g(0);
  m.action[{J, 1}] = (C(2) * dl - C(1)) * g(1);
  m.action[{Gp, 1}] = (C(2) * d + C(2) * a + C(4) * dl * l) * g(0);
  m.action[{Gm, 0}] = g(1);
  return m;
}

// ------------------------------------------------------------------ generated tables

namespace {

// a_(n) as a mode of the realization
GenMode nth_mode(Gen g, int n) { return {g, 2 * n - gen_offset2(g)}; }
int weight2(Gen g) { return 2 + gen_offset2(g); }  // twice the conformal weight

Scalar falling(int k, int p) {
  long r = 1;
  for (int i = 0; i < p; ++i) r *= (k - i);
  return Scalar(r);
}

Scalar binom(int m, int j) {
  if (j < 0 || j > m) return Scalar(0);
  long r = 1;
  for (int i = 1; i <= j; ++i) r = r * (m - j + i) / i;
  return Scalar(r);
}

Scalar factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return Scalar(r);
}

}  // namespace

ConformalAlgebraSpec generated_algebra_spec(AlgebraId id) {
  if (id.kind == AlgebraKind::BigN4) throw std::invalid_argument("generated tables cover n2, n3 and n4");
  Algebra alg(id);
  ConformalAlgebraSpec r;
  r.name = algebra_name(id) + "-generated";
  const auto& gens = alg.generators();
  for (Gen g : gens) {
    r.labels.push_back(gen_name(g));
    r.parity.push_back(gen_parity(g));
  }
  constexpr int kRange = 4;  // m, n in 0..kRange
  using Key = std::tuple<int, int, GenMode>;
  for (std::size_t ia = 0; ia < gens.size(); ++ia)
    for (std::size_t ib = 0; ib < gens.size(); ++ib) {
      const Gen a = gens[ia], b = gens[ib];
      SparseVec<Key> target;
      for (int m = 0; m <= kRange; ++m)
        for (int n = 0; n <= kRange; ++n) {
          AlgElement br = alg.bracket(AlgElement(alg.canonical(nth_mode(a, m))), AlgElement(alg.canonical(nth_mode(b, n))));
          for (const auto& [gm, c] : br.terms()) target.emplace(Key{m, n, gm}, c);
        }
      // unknowns: coefficient of d^p c in a_(j) b, p fixed by conformal weight
      struct Unknown {
        int j, p, c;
      };
      std::vector<Unknown> unknowns;
      std::vector<SparseVec<Key>> cols;
      for (int j = 0; 2 * j < weight2(a) + weight2(b); ++j)
        for (std::size_t ic = 0; ic < gens.size(); ++ic) {
          const int p2 = weight2(a) + weight2(b) - 2 * j - 2 - weight2(gens[ic]);
          if (p2 < 0 || p2 % 2 != 0) continue;
          const int p = p2 / 2;
          SparseVec<Key> col;
          for (int m = 0; m <= kRange; ++m)
            for (int n = 0; n <= kRange; ++n) {
              const int k = m + n - j;
              Scalar coef = binom(m, j) * falling(k, p) * Scalar(p % 2 ? -1L : 1L);
              if (coef.is_zero()) continue;
              GenMode gm = alg.canonical(nth_mode(gens[ic], k - p));
              auto [it, fresh] = col.try_emplace(Key{m, n, gm}, coef);
              if (!fresh) it->second += coef;
            }
          unknowns.push_back({j, p, static_cast<int>(ic)});
          cols.push_back(std::move(col));
        }
      auto sol = solve_in_span(cols, target);
      if (!sol) throw std::runtime_error("no lambda-bracket reproduces the mode brackets of " + r.labels[ia] + "," + r.labels[ib]);
      LP entry;
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto& x = unknowns[u];
        if ((*sol)[u].is_zero()) continue;
        entry += C((*sol)[u] / factorial(x.j)) * Lm().pow(x.j) * D().pow(x.p) * LP::gen(x.c);
      }
      r.table[{static_cast<int>(ia), static_cast<int>(ib)}] = entry;
    }
  return r;
}

ConformalModuleSpec generated_module_spec(const VermaModule& m) {
  ConformalModuleSpec s;
  s.name = m.algebra().name() + "-verma-generated";
  std::map<PBWKey, int> index;
  for (int l = 0; l <= m.n_odd(); ++l)
    for (const auto& k : m.keys_at_level(l)) {
      if (k.dpow != 0) continue;
      index[k] = static_cast<int>(s.labels.size());
      s.labels.push_back(m.key_str(k));
      s.parity.push_back(k.parity());
    }
  const auto& gens = m.algebra().generators();
  for (std::size_t ia = 0; ia < gens.size(); ++ia)
    for (const auto& [k, iv] : index) {
      LP entry;
      for (int n = 0; nth_mode(gens[ia], n).mode2 <= k.level2(); ++n) {
        const GenMode mode = nth_mode(gens[ia], n);
        if (!m.algebra().in_annihilation(mode)) continue;
        VermaVector w = m.act(m.algebra().canonical(mode), m.basis_vector(k));
        for (const auto& [kk, c] : w) {
          PBWKey base = kk;
          base.dpow = 0;
          // d on the Verma module is L_{-1}; on the twisted module L_{-1} = d + alpha
          entry += C(c / factorial(n)) * Lm().pow(n) * (D() + alpha()).pow(kk.dpow) * LP::gen(index.at(base));
        }
      }
      if (!entry.is_zero()) s.action[{static_cast<int>(ia), iv}] = entry;
    }
  return s;
}

ConformalModuleSpec adjoint_module_spec(const ConformalAlgebraSpec& r) {
  ConformalModuleSpec m{r.name + "-adjoint", r.labels, r.parity, {}};
  const int n = static_cast<int>(r.labels.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      LP x = r.bracket(a, b);
      if (!x.is_zero()) m.action[{a, b}] = x;
    }
  return m;
}

// ------------------------------------------------------------------ cross checks

AdjointReport check_adjoint_identification(AlgebraId id) {
  AdjointReport rep;
  std::string vname, hname;
  switch (id.kind) {
    case AlgebraKind::N2: vname = "J", hname = "J", rep.delta = 1, rep.lambda = 0; break;
    case AlgebraKind::N3: vname = "Psi", hname = "H", rep.delta = Rational(1, 2), rep.lambda = 0; break;
    case AlgebraKind::SmallN4: vname = "E", hname = "H", rep.delta = 1, rep.lambda = 2; break;
    default: throw std::invalid_argument("adjoint identification is defined for n2, n3 and n4");
  }
  rep.algebra = algebra_name(id);
  rep.vector = vname;
  Algebra alg(id);
  const ConformalAlgebraSpec r = generated_algebra_spec(id);
  const ConformalModuleSpec ad = adjoint_module_spec(r);
  const int v = r.index(vname);
  const auto& gens = alg.generators();
  // the n-th product a_(n) x
  auto nth = [&](int a, int n, const LP& x) { return C(factorial(n)) * apply_action(ad, a, false, x).lambda_coefficient(n); };

  bool hw = true;
  for (std::size_t ia = 0; ia < gens.size(); ++ia)
    for (int n = 0; n <= 4; ++n)
      if (nth_mode(gens[ia], n).mode2 > 0 && !nth(static_cast<int>(ia), n, LP::gen(v)).is_zero()) hw = false;
  const LP gv = LP::gen(v);
  hw = hw && nth(r.index("L"), 1, gv) == C(Scalar(rep.delta)) * gv;
  hw = hw && nth(r.index("L"), 0, gv) == D() * gv;
  hw = hw && nth(r.index(hname), 0, gv) == C(Scalar(static_cast<long>(rep.lambda))) * gv;
  if (alg.has_sl2()) hw = hw && nth(r.index("E"), 0, gv).is_zero();
  rep.highest_weight = hw;

  // span of U(annihilation) v, d-degree at most kMaxD
  constexpr int kMaxD = 3;
  auto to_vec = [](const LP& p) {
    SparseVec<LKey> s;
    for (const auto& [k, c] : p.terms()) s.emplace(k, c);
    return s;
  };
  auto max_d = [](const LP& p) {
    int m = 0;
    for (const auto& [k, c] : p.terms()) m = std::max(m, k.dpow);
    return m;
  };
  Echelon<LKey> span;
  std::deque<LP> queue{gv};
  span.insert(to_vec(gv));
  while (!queue.empty()) {
    LP x = std::move(queue.front());
    queue.pop_front();
    std::vector<LP> next{D() * x};
    for (std::size_t ia = 0; ia < gens.size(); ++ia)
      for (int n = 0; n <= 3; ++n) next.push_back(nth(static_cast<int>(ia), n, x));
    for (auto& y : next) {
      if (y.is_zero() || max_d(y) > kMaxD) continue;
      if (span.insert(to_vec(y))) queue.push_back(std::move(y));
    }
  }
  rep.generates = true;
  for (std::size_t i = 0; i < r.labels.size(); ++i)
    if (!span.contains(to_vec(LP::gen(static_cast<int>(i))))) rep.generates = false;
  rep.adjoint_rank = static_cast<int>(r.labels.size());
  rep.irreducible_rank = classification_row(id, rep.delta, rep.lambda, std::nullopt).rank.rank;
  return rep;
}

AxiomReport compare_n2_algebra_tables() {
  AxiomReport rep;
  const auto hand = n2_spec();
  const auto gen = generated_algebra_spec({AlgebraKind::N2, 1});
  for (std::size_t a = 0; a < hand.labels.size(); ++a)
    for (std::size_t b = 0; b < hand.labels.size(); ++b) {
      ++rep.checks;
      const int ga = gen.index(hand.labels[a]), gb = gen.index(hand.labels[b]);
      LP x = hand.bracket(static_cast<int>(a), static_cast<int>(b));
      std::vector<LP> images;
      for (const auto& l : hand.labels) images.push_back(LP::gen(gen.index(l)));
      if (!(x.relabel(images) == gen.bracket(ga, gb)))
        rep.failures.push_back(hand.labels[a] + "_l " + hand.labels[b] + ": " + x.str(hand.labels) + " vs " +
                               gen.bracket(ga, gb).str(gen.labels));
    }
  return rep;
}

AxiomReport compare_n2_tables() {
  AxiomReport rep;
  const auto hand = n2_module_generic_spec();
  VermaModule m({AlgebraKind::N2, 1},
                HighestWeight{Scalar::param(Param::Delta), Scalar::param(Param::LambdaSym), std::nullopt});
  const auto gen = generated_module_spec(m);
  const auto alg = n2_spec();
  // v, G+ v, G- v, G+ G- v
  const std::vector<PBWKey> keys{PBWKey{0, 0, 0, 0}, PBWKey{0, 1, 0, 0}, PBWKey{0, 2, 0, 0}, PBWKey{0, 3, 0, 0}};
  std::vector<LP> images;
  std::vector<int> gidx;
  for (const auto& k : keys) {
    gidx.push_back(gen.index(m.key_str(k)));
    images.push_back(LP::gen(gidx.back()));
  }
  const Algebra& A = m.algebra();
  for (std::size_t a = 0; a < alg.labels.size(); ++a) {
    int ga = -1;
    for (std::size_t i = 0; i < A.generators().size(); ++i)
      if (alg.labels[a] == gen_name(A.generators()[i])) ga = static_cast<int>(i);
    for (std::size_t v = 0; v < keys.size(); ++v) {
      ++rep.checks;
      LP x = hand.act(static_cast<int>(a), static_cast<int>(v)).relabel(images);
      LP y = gen.act(ga, gidx[v]);
      if (!(x == y))
        rep.failures.push_back(alg.labels[a] + "_l " + hand.labels[v] + ": table " + x.str(gen.labels) +
                               " vs PBW " + y.str(gen.labels));
    }
  }
  return rep;
}

}  // namespace scf
