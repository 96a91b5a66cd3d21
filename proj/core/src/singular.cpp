#include "scf/singular.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace scf {

namespace {

struct RawTerm {
  const char* coef;  // in L (Lambda) and Lb (Lambda-bar)
  const char* word;
};
using RawVector = std::vector<RawTerm>;

const std::vector<RawVector>& n2_table() {
  static const std::vector<RawVector> t = {
      {{"1", ""}},
      {{"1", "Gp"}},
      {{"1", "Gm"}},
      {{"1", "Gp Gm"}},
  };
  return t;
}

const std::vector<RawVector>& n3_table() {
  static const std::vector<RawVector> t = {
      {{"1", ""}},
      {{"1", "e"}},
      {{"L", "h"}, {"2", "e F0"}},
      {{"(L-1)*L", "f"}, {"-(L-1)", "h F0"}, {"-1", "e F0 F0"}},
      {{"1", "e h"}},
      {{"L", "e f"}, {"-1", "e h F0"}},
      {{"(L-1)*L", "h f"}, {"4*(L-1)", "d F0"}, {"2*(L-1)", "e f F0"}, {"-1", "e h F0 F0"}},
      {{"1", "e h f"}, {"-2", "d h"}},
  };
  return t;
}

const std::vector<RawVector>& n4_table() {
  static const std::vector<RawVector> t = {
      {{"1", ""}},
      {{"1", "Gpp"}},
      {{"1", "Gpm"}},
      {{"L", "Gmp"}, {"-1", "Gpp F0"}},
      {{"-L", "Gmm"}, {"1", "Gpm F0"}},
      {{"1", "Gmp Gpp"}},
      {{"1", "Gpm Gmm"}},
      {{"1", "Gpp Gpm"}},
      {{"1", "Gmp Gpm"}, {"-1", "Gpp Gmm"}},
      {{"-L", "Gpp Gmm"}, {"1", "Gpp Gpm F0"}},
      {{"-(L-1)*L", "Gmp Gmm"}, {"L-1", "Gmp Gpm F0"}, {"L-1", "Gpp Gmm F0"}, {"-1", "Gpp Gpm F0 F0"}},
      {{"1", "Gmp Gpp Gpm"}},
      {{"1", "Gpp Gpm Gmm"}},
      {{"-L", "Gmp Gpp Gmm"}, {"1", "Gmp Gpp Gpm F0"}},
      {{"-L", "Gmp Gpm Gmm"}, {"1", "Gpp Gpm Gmm F0"}},
      {{"1", "Gmp Gpp Gpm Gmm"}},
  };
  return t;
}

const std::vector<RawVector>& bign4_table() {
  static const std::vector<RawVector> t = {
      {{"1", ""}},
      {{"1", "Gpp"}},
      {{"L", "Gmp"}, {"-1", "Gpp F0"}},
      {{"Lb", "Gpm"}, {"-1", "Gpp Fb0"}},
      {{"L*Lb", "Gmm"}, {"-Lb", "Gpm F0"}, {"-L", "Gmp Fb0"}, {"1", "Gpp F0 Fb0"}},
      {{"1", "Gpp Gpm"}},
      {{"L", "Gmp Gpm"}, {"L", "Gpp Gmm"}, {"-2", "Gpp Gpm F0"}},
      {{"-(L-1)*L", "Gmp Gmm"}, {"L-1", "Gmp Gpm F0"}, {"L-1", "Gpp Gmm F0"}, {"-1", "Gpp Gpm F0 F0"}},
      {{"1", "Gpp Gmp"}},
      {{"Lb", "Gpp Gmm"}, {"-Lb", "Gmp Gpm"}, {"-2", "Gpp Gmp Fb0"}},
      {{"-(Lb-1)*Lb", "Gpm Gmm"}, {"Lb-1", "Gpm Gmp Fb0"}, {"Lb-1", "Gpp Gmm Fb0"}, {"-1", "Gpp Gmp Fb0 Fb0"}},
      {{"1", "Gpp Gpm Gmp"}},
      // b13, b14: the last term carries F0 (F0-bar), otherwise the vector is not a weight vector
      {{"L", "Gpp Gmp Gmm"}, {"-1", "Gpp Gmp Gpm F0"}},
      {{"Lb", "Gpp Gpm Gmm"}, {"-1", "Gpp Gpm Gmp Fb0"}},
      // b15: coefficient -1 (not -Lb) on the last term, as for b5; the two agree at Lb = 1
      {{"L*Lb", "Gmp Gmm Gpm"}, {"-L", "Gmp Gmm Gpp Fb0"}, {"Lb", "Gpp Gpm Gmm F0"}, {"-1", "Gpp Gpm Gmp F0 Fb0"}},
      {{"1", "Gpp Gpm Gmp Gmm"}, {"-1", "d Gmp Gpm"}, {"-1", "d Gpp Gmm"}},
  };
  return t;
}

const std::vector<RawVector>& table_for(AlgebraId id) {
  switch (id.kind) {
    case AlgebraKind::N2: return n2_table();
    case AlgebraKind::N3: return n3_table();
    case AlgebraKind::SmallN4: return n4_table();
    case AlgebraKind::BigN4: return bign4_table();
  }
  throw std::logic_error("unknown algebra");
}

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

std::vector<GenMode> parse_word(AlgebraId id, std::string_view text) {
  Algebra alg(id);
  std::vector<GenMode> out;
  for (const auto& t : tokens(text)) {
    if (t == "d") {
      out.push_back(VermaModule::d_mode());
      continue;
    }
    if (t == "F0") {
      out.push_back({Gen::F, 0});
      continue;
    }
    if (t == "Fb0") {
      out.push_back({Gen::Fbar, 0});
      continue;
    }
    auto g = parse_gen(t);
    if (!g || !alg.has(*g) || gen_parity(*g) != 1) throw std::invalid_argument("bad word token '" + t + "' for " + alg.name());
    // beta = -1 swaps the roles of G+- and G-+ (the sl2 doublets are {G++,G+-}, {G-+,G--})
    if (id.kind == AlgebraKind::SmallN4 && id.beta == -1) {
      if (*g == Gen::Gpm)
        g = Gen::Gmp;
      else if (*g == Gen::Gmp)
        g = Gen::Gpm;
    }
    out.push_back({*g, -1});
  }
  return out;
}

std::vector<std::string> named_vector_names(AlgebraId id) {
  if (id.kind == AlgebraKind::N2) return {"v", "Gp_v", "Gm_v", "GpGm_v"};
  std::vector<std::string> out;
  const char* p = id.kind == AlgebraKind::BigN4 ? "b" : "a";
  for (std::size_t i = 1; i <= table_for(id).size(); ++i) out.push_back(p + std::to_string(i));
  return out;
}

int named_vector_index(AlgebraId id, std::string_view name) {
  auto names = named_vector_names(id);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i) + 1;
  throw std::invalid_argument("unknown vector name '" + std::string(name) + "' for " + algebra_name(id));
}

OperatorExpr u_operator(AlgebraId id, int i, const Scalar& lam, const Scalar& lam_bar) {
  const auto& t = table_for(id);
  if (i < 1 || i > static_cast<int>(t.size()))
    throw std::invalid_argument("u index " + std::to_string(i) + " out of range for " + algebra_name(id));
  ScalarVars vars{{"L", lam}, {"Lb", lam_bar}};
  OperatorExpr out;
  for (const auto& rt : t[i - 1]) {
    Scalar c = parse_scalar(rt.coef, vars);
    if (c.is_zero()) continue;
    out.push_back({c, parse_word(id, rt.word)});
  }
  return out;
}

VermaVector apply_operator(const VermaModule& m, const OperatorExpr& op, const VermaVector& target) {
  VermaVector out;
  for (const auto& t : op) axpy(out, t.coef, m.apply_word(t.word, target));
  return out;
}

VermaVector named_vector(const VermaModule& m, int i) {
  const auto& hw = m.weight();
  Scalar lb = hw.lambda_bar ? *hw.lambda_bar : Scalar(0);
  return apply_operator(m, u_operator(m.algebra().id(), i, hw.lambda, lb), m.highest());
}

VermaVector named_vector(const VermaModule& m, std::string_view name) {
  return named_vector(m, named_vector_index(m.algebra().id(), name));
}

VermaVector apply_u(const VermaModule& m, int i, const Scalar& lam_prime, const VermaVector& target,
                    const std::optional<Scalar>& lam_bar_prime) {
  return apply_operator(m, u_operator(m.algebra().id(), i, lam_prime, lam_bar_prime.value_or(lam_prime)), target);
}

std::vector<GenMode> singular_check_set(const VermaModule& m) { return m.positive_generators(2); }

std::vector<GenMode> reduced_check_set(const VermaModule& m) {
  switch (m.algebra().id().kind) {
    case AlgebraKind::N3: return {{Gen::f, 1}, {Gen::Psi, 1}};
    case AlgebraKind::SmallN4: {
      // the images of F_1, G-+_{1/2}, G--_{1/2} under the beta relabelling
      Gen gmp = m.algebra().id().beta == 1 ? Gen::Gmp : Gen::Gpm;
      return {{Gen::F, 2}, {gmp, 1}, {Gen::Gmm, 1}};
    }
    default: return singular_check_set(m);
  }
}

SingularCheck is_singular(const VermaModule& m, const VermaVector& v, bool reduced) {
  if (v.empty()) throw std::invalid_argument("is_singular: zero vector");
  SingularCheck r;
  if (!same_weight(m, v)) {
    r.reason = "not a weight vector";
    return r;
  }
  std::vector<GenMode> gens = m.raising_zero_modes();
  auto more = reduced ? reduced_check_set(m) : singular_check_set(m);
  gens.insert(gens.end(), more.begin(), more.end());
  for (const auto& g : gens) {
    r.checked.push_back(g);
    VermaVector img = m.act(g, v);
    if (!img.empty()) {
      r.reason = "not annihilated by " + g.str();
      r.witness = g;
      r.image = std::move(img);
      return r;
    }
  }
  r.singular = true;
  return r;
}

namespace {

using CondKey = std::pair<int, PBWKey>;

std::vector<SparseVec<CondKey>> condition_columns(const VermaModule& m, const std::vector<PBWKey>& keys,
                                                   const std::vector<GenMode>& gens) {
  std::vector<SparseVec<CondKey>> cols;
  for (const auto& k : keys) {
    SparseVec<CondKey> col;
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (const auto& [key, c] : m.act(gens[g], m.basis_vector(k))) col.emplace(CondKey{static_cast<int>(g), key}, c);
    cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<GenMode> all_conditions(const VermaModule& m) {
  std::vector<GenMode> gens = m.raising_zero_modes();
  auto pos = singular_check_set(m);
  gens.insert(gens.end(), pos.begin(), pos.end());
  return gens;
}

std::vector<VermaVector> kernel_basis(const VermaModule& m, const std::vector<PBWKey>& keys,
                                      const std::vector<GenMode>& gens) {
  auto ns = nullspace(condition_columns(m, keys, gens));
  Echelon<PBWKey> ech;
  for (const auto& n : ns) {
    VermaVector v;
    for (std::size_t j = 0; j < keys.size(); ++j)
      if (!n[j].is_zero()) v.emplace(keys[j], n[j]);
    ech.insert(v);
  }
  return ech.basis();
}

std::vector<VermaVector> solve_space(const VermaModule& m, const std::vector<PBWKey>& keys) {
  return kernel_basis(m, keys, all_conditions(m));
}

}  // namespace

std::vector<VermaVector> e0_invariants(const VermaModule& m, int level_cutoff2) {
  std::vector<VermaVector> out;
  const auto gens = m.raising_zero_modes();
  for (int level2 = 0; level2 <= level_cutoff2; ++level2)
    for (const auto& [w, keys] : m.weight_spaces(level2))
      for (auto& v : kernel_basis(m, keys, gens)) out.push_back(std::move(v));
  return out;
}

std::vector<VermaVector> singular_subspace(const VermaModule& m, const WeightKey& w) {
  auto spaces = m.weight_spaces(w.level2);
  auto it = spaces.find(w);
  if (it == spaces.end()) return {};
  return solve_space(m, it->second);
}

std::vector<SingularReport> find_singular(const VermaModule& m, int dpow_cutoff) {
  std::vector<SingularReport> out;
  const auto gens = all_conditions(m);
  for (int level2 = 1; level2 <= 2 * dpow_cutoff + m.n_odd(); ++level2) {
    for (const auto& [w, keys] : m.weight_spaces(level2)) {
      auto basis = solve_space(m, keys);
      if (basis.empty()) continue;
      out.push_back({w, m.l0_of(keys.front()), std::move(basis), gens});
    }
  }
  return out;
}

LocusReport singular_locus(AlgebraId id, const Scalar& lambda, const std::optional<Scalar>& lambda_bar, int dpow_cutoff) {
  auto alg = std::make_shared<const Algebra>(id);
  VermaModule sym(alg, {Scalar::param(Param::Delta), lambda, lambda_bar});
  if (sym.symbolic_lambda()) throw std::invalid_argument("singular_locus needs a concrete Lambda");
  const auto gens = all_conditions(sym);
  LocusReport rep;
  for (int level2 = 1; level2 <= 2 * dpow_cutoff + sym.n_odd(); ++level2) {
    for (const auto& [w, keys] : sym.weight_spaces(level2)) {
      auto cols = condition_columns(sym, keys, gens);
      std::vector<CondKey> rows;
      for (const auto& c : cols)
        for (const auto& [k, x] : c) rows.push_back(k);
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
      std::vector<std::vector<ParamPoly>> mat(rows.size(), std::vector<ParamPoly>(keys.size()));
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, x] : cols[j]) {
          if (!x.denominator().is_constant()) throw std::logic_error("non-polynomial action coefficient");
          auto i = std::lower_bound(rows.begin(), rows.end(), k) - rows.begin();
          mat[i][j] = x.numerator().scaled(x.denominator().constant_value().inverse());
        }
      BareissResult br = bareiss(mat);
      if (br.rank < static_cast<int>(keys.size())) {
        rep.entries.push_back({w, ParamPoly(), std::nullopt, solve_space(sym, keys)});
        continue;
      }
      ParamPoly det = primitive_part(br.last_pivot);
      for (const Rational& root : rational_roots(det, Param::Delta)) {
        VermaModule at(alg, {Scalar(root), lambda, lambda_bar});
        auto basis = solve_space(at, keys);
        if (basis.empty()) continue;
        ParamPoly cond = primitive_part(ParamPoly::var(Param::Delta) - ParamPoly(BaseScalar(root)));
        rep.entries.push_back({w, cond, root, std::move(basis)});
      }
      ParamPoly rest = det;
      for (const Rational& root : rational_roots(det, Param::Delta)) {
        ParamPoly lin = ParamPoly::var(Param::Delta) - ParamPoly(BaseScalar(root));
        while (auto q = ParamPoly::divide_exact(rest, lin)) rest = *q;
      }
      if (rest.degree_in(Param::Delta) > 0) {
        ParamPoly r = primitive_part(rest);
        if (std::find(rep.residual.begin(), rep.residual.end(), r) == rep.residual.end()) rep.residual.push_back(r);
      }
    }
  }
  return rep;
}

}  // namespace scf
