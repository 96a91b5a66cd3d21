#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scf/verma.hpp"

namespace scf {

// Monomial d^dpow lambda^lpow mu^mpow times a generator (label -1: no generator).
struct LKey {
  int label = -1;
  int dpow = 0;
  int lpow = 0;
  int mpow = 0;
  auto operator<=>(const LKey&) const = default;
};

class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(const Scalar& c);  // constant, no generator
  static LambdaPoly gen(int label);
  static LambdaPoly d();
  static LambdaPoly lam();
  static LambdaPoly mu();

  const std::map<LKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const LKey& k, const Scalar& c);

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  LambdaPoly operator-() const;
  // at most one factor may carry a generator
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.terms_ == b.terms_; }
  LambdaPoly pow(int n) const;

  // replaces d, lambda, mu by generator-free polynomials
  LambdaPoly substitute(const LambdaPoly& d_img, const LambdaPoly& l_img, const LambdaPoly& m_img) const;
  // coefficient of lambda^n (as a polynomial in d, mu)
  LambdaPoly lambda_coefficient(int n) const;
  // relabels generators through map (label -> new poly, generator-free images not allowed)
  LambdaPoly relabel(const std::vector<LambdaPoly>& images) const;

  std::string str(const std::vector<std::string>& labels) const;

 private:
  std::map<LKey, Scalar> terms_;
};

struct ConformalAlgebraSpec {
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> parity;
  // a_lambda b in d, lambda over labels; missing ordered pairs are filled by skew-symmetry
  std::map<std::pair<int, int>, LambdaPoly> table;

  int index(const std::string& label) const;  // throws std::invalid_argument
  LambdaPoly bracket(int a, int b) const;
};

struct ConformalModuleSpec {
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> parity;
  // (algebra generator, module generator) -> a_lambda v over module labels; missing pairs act by 0
  std::map<std::pair<int, int>, LambdaPoly> action;

  int index(const std::string& label) const;
  LambdaPoly act(int a, int v) const;
};

// C2 image of an entry a_lambda b: the corresponding b_lambda a
LambdaPoly skew(const LambdaPoly& ab, int pa, int pb);

// x_nu applied to P, where nu is lambda (use_mu false) or mu
LambdaPoly apply_bracket(const ConformalAlgebraSpec& r, int a, bool use_mu, const LambdaPoly& p);
LambdaPoly apply_action(const ConformalModuleSpec& m, int a, bool use_mu, const LambdaPoly& p);
// bracket of two elements of R given as polynomials in d over labels (no lambda, mu)
LambdaPoly lambda_bracket(const ConformalAlgebraSpec& r, const LambdaPoly& a, const LambdaPoly& b);

struct AxiomReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// C1 (sesquilinearity), C2 (skew-symmetry, and C2 twice = id), C3 (Jacobi) on all generator triples
AxiomReport check_conformal_axioms(const ConformalAlgebraSpec& r);
// M1 on all pairs of algebra generators and module generators, M2 on all pairs
AxiomReport check_module_axioms(const ConformalAlgebraSpec& r, const ConformalModuleSpec& m);

// Hand tables.
ConformalAlgebraSpec virasoro_spec();
ConformalAlgebraSpec current_sl2_spec();
ConformalAlgebraSpec semidirect_sl2_spec();
ConformalAlgebraSpec n2_spec();
// Virasoro module C[d]v with L_lambda v = (alpha + d + Delta lambda) v, alpha and Delta symbolic
ConformalModuleSpec virasoro_module_spec();
// The three N2 module tables: generic (2D+-L != 0), 2D+L=0, 2D-L=0; alpha, Delta, Lambda symbolic
ConformalModuleSpec n2_module_generic_spec();
ConformalModuleSpec n2_module_minus_spec();
ConformalModuleSpec n2_module_plus_spec();

// Tables generated from the mode brackets of the realization (N2, N3, SmallN4).
ConformalAlgebraSpec generated_algebra_spec(AlgebraId id);
// lambda-action of the algebra on the free generators theta_A F0^j v (dpow 0 PBW keys) of
// a Verma module, with d acting as L_{-1} - alpha for symbolic alpha.
ConformalModuleSpec generated_module_spec(const VermaModule& m);

// The adjoint module of r.
ConformalModuleSpec adjoint_module_spec(const ConformalAlgebraSpec& r);

struct AdjointReport {
  std::string algebra;
  std::string vector;  // the highest weight vector inside the adjoint module
  Rational delta;
  int lambda = 0;
  bool highest_weight = false;  // killed by positive modes and E0, weights (Delta, Lambda), d = L_(0)
  bool generates = false;       // generates the adjoint module
  int adjoint_rank = 0;
  int irreducible_rank = 0;     // rank of the irreducible quotient (classify)
  bool ok() const { return highest_weight && generates && adjoint_rank == irreducible_rank; }
};

// Adjoint identifications: N2 with (0,1,0), N3 with (0,1/2,0), SmallN4 with (0,1,2).
AdjointReport check_adjoint_identification(AlgebraId id);

// The N2 generic table matches the one generated from the PBW model (v, Gp v, Gm v, Gp Gm v).
AxiomReport compare_n2_tables();
// The hand N2 algebra table matches the one generated from the realization.
AxiomReport compare_n2_algebra_tables();

}  // namespace scf
